"""Numerical Grothendieck-group engine for the degree-5 del Pezzo surface
and the two threefold resolutions fibered over it.

Surface classes live in (rank, c1, 2*ch2) coordinates with the Euler
pairing computed by Riemann-Roch; td(S) = 1 - K/2 + [pt]. The projective
bundle over the surface keeps classes in the normal form A + B*[O(s)] with
the pushforward table for O(ks) frozen from the relative Euler sequence
and relative duality. The blowup of P^3 in five points stores line-bundle
classes and exceptional-divisor classes symbolically, with the standard
divisor-correction pairing rules.

Mutations act at the level of classes and normalize signs so that the
leading coordinate is positive; the two regression sequences reproducing
the 3-block collection and the quiver-shaped center pin this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


# -- Picard lattice of the quintic del Pezzo -------------------------------


@dataclass(frozen=True)
class PicClass:
    """a*h - sum b_i e_i in Pic(S), S the degree-5 del Pezzo surface."""

    a: int
    b: tuple[int, int, int, int]

    def __add__(self, other: "PicClass") -> "PicClass":
        return PicClass(self.a + other.a, tuple(x + y for x, y in zip(self.b, other.b)))

    def __sub__(self, other: "PicClass") -> "PicClass":
        return PicClass(self.a - other.a, tuple(x - y for x, y in zip(self.b, other.b)))

    def __neg__(self) -> "PicClass":
        return PicClass(-self.a, tuple(-x for x in self.b))

    def scale(self, k: int) -> "PicClass":
        return PicClass(k * self.a, tuple(k * x for x in self.b))

    def dot(self, other: "PicClass") -> int:
        """Intersection product: h^2 = 1, e_i^2 = -1, mixed zero."""
        return self.a * other.a - sum(x * y for x, y in zip(self.b, other.b))

    def __str__(self):
        parts = []
        if self.a:
            parts.append(f"{self.a}h" if self.a != 1 else "h")
        for i, x in enumerate(self.b):
            if x:
                parts.append(f"{'-' if x > 0 else '+'}{abs(x) if abs(x) != 1 else ''}e{i + 1}")
        return "".join(parts) if parts else "0"


PIC_ZERO = PicClass(0, (0, 0, 0, 0))
H = PicClass(1, (0, 0, 0, 0))
# the exceptional class e_i has b_i = -1 in the a*h - sum b_i e_i storage
E = [PicClass(0, tuple(-1 if j == i else 0 for j in range(4))) for i in range(4)]
E_SUM = PicClass(0, (-1, -1, -1, -1))
K_S = PicClass(-3, (-1, -1, -1, -1))  # -3h + e1 + e2 + e3 + e4


# -- numerical K-classes on the surface -------------------------------------


@dataclass(frozen=True)
class SurfaceKClass:
    """(rank, c1, 2*ch2); ch2 doubled to stay integral."""

    rank: int
    c1: PicClass
    ch2_2: int
    label: str = ""

    @classmethod
    def line_bundle(cls, d: PicClass, label: str = "") -> "SurfaceKClass":
        return cls(1, d, d.dot(d), label or f"O({d})")

    @classmethod
    def structure_sheaf(cls) -> "SurfaceKClass":
        return cls.line_bundle(PIC_ZERO, "O")

    def __add__(self, other: "SurfaceKClass") -> "SurfaceKClass":
        return SurfaceKClass(self.rank + other.rank, self.c1 + other.c1, self.ch2_2 + other.ch2_2)

    def __sub__(self, other: "SurfaceKClass") -> "SurfaceKClass":
        return SurfaceKClass(self.rank - other.rank, self.c1 - other.c1, self.ch2_2 - other.ch2_2)

    def __neg__(self) -> "SurfaceKClass":
        return SurfaceKClass(-self.rank, -self.c1, -self.ch2_2)

    def scale(self, k: int) -> "SurfaceKClass":
        return SurfaceKClass(k * self.rank, self.c1.scale(k), k * self.ch2_2)

    def tensor(self, other: "SurfaceKClass") -> "SurfaceKClass":
        rank = self.rank * other.rank
        c1 = other.c1.scale(self.rank) + self.c1.scale(other.rank)
        ch2_2 = self.rank * other.ch2_2 + other.rank * self.ch2_2 + 2 * self.c1.dot(other.c1)
        return SurfaceKClass(rank, c1, ch2_2)

    def dual(self) -> "SurfaceKClass":
        return SurfaceKClass(self.rank, -self.c1, self.ch2_2)

    def is_zero(self) -> bool:
        return self.rank == 0 and self.c1 == PIC_ZERO and self.ch2_2 == 0

    def coords(self) -> tuple[int, ...]:
        return (self.rank, self.c1.a, *self.c1.b, self.ch2_2)

    def sign_vector(self) -> tuple[int, ...]:
        return (self.rank, self.c1.dot(-K_S), *self.coords())


U2_DUAL = SurfaceKClass(2, -K_S, 1, "U2^")
U2 = SurfaceKClass(2, K_S, 1, "U2")
U3 = SurfaceKClass.structure_sheaf().scale(5) - U2_DUAL  # 0 -> U3 -> W ox O -> U2^ -> 0
Q3 = SurfaceKClass.structure_sheaf().scale(5) - U2
DET_U2 = SurfaceKClass.line_bundle(K_S, "det U2")
DET_U2_DUAL = SurfaceKClass.line_bundle(-K_S, "det U2^")


def chi_surface(e: SurfaceKClass, f: SurfaceKClass) -> int:
    """Euler pairing via Riemann-Roch with td(S) = 1 - K/2 + [pt]."""
    mixed = e.rank * f.ch2_2 + f.rank * e.ch2_2 - K_S.dot(f.c1.scale(e.rank) - e.c1.scale(f.rank))
    if mixed % 2:
        raise ArithmeticError("non-integral Euler pairing on the surface")
    return mixed // 2 - e.c1.dot(f.c1) + e.rank * f.rank


def serre_twist_surface(e: SurfaceKClass) -> SurfaceKClass:
    return e.tensor(SurfaceKClass.line_bundle(K_S))


# -- the projective bundle over the surface --------------------------------


@dataclass(frozen=True)
class BundleClass:
    """Class p^*A + p^*B . [O(s)] on the P1-bundle resolving the cubic."""

    a: SurfaceKClass
    b: SurfaceKClass
    label: str = ""

    @classmethod
    def pullback(cls, e: SurfaceKClass, label: str = "") -> "BundleClass":
        return cls(e, _SZERO, label)

    @classmethod
    def twist_s(cls, e: SurfaceKClass, label: str = "") -> "BundleClass":
        return cls(_SZERO, e, label)

    def __add__(self, other: "BundleClass") -> "BundleClass":
        return BundleClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "BundleClass") -> "BundleClass":
        return BundleClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "BundleClass":
        return BundleClass(-self.a, -self.b)

    def scale(self, k: int) -> "BundleClass":
        return BundleClass(self.a.scale(k), self.b.scale(k))

    def tensor_pullback(self, line: SurfaceKClass) -> "BundleClass":
        return BundleClass(self.a.tensor(line), self.b.tensor(line))

    def tensor_s(self, k: int = 1) -> "BundleClass":
        """Tensor with O(ks), reducing to the A + B s normal form."""
        cls = self
        for _ in range(abs(k)):
            if k > 0:
                # (A + Bs)s = As + B s^2; s^2 = U2^ s - det U2^
                cls = BundleClass(
                    -cls.b.tensor(DET_U2_DUAL), cls.a + cls.b.tensor(U2_DUAL)
                )
            else:
                # s^-1 = U2 - det U2 . s
                cls = BundleClass(
                    cls.a.tensor(U2) + cls.b, -cls.a.tensor(DET_U2)
                )
        return cls

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def coords(self) -> tuple[int, ...]:
        return self.a.coords() + self.b.coords()

    def sign_vector(self) -> tuple[int, ...]:
        total = self.a + self.b  # [O(s)] has rank one, so ranks and c1 data add
        return (total.rank, total.c1.dot(-K_S), total.ch2_2, *self.coords())


_SZERO = SurfaceKClass(0, PIC_ZERO, 0)


def pushforward_table(k: int) -> SurfaceKClass:
    """[Rp_* O(ks)] in K(S), from the relative Euler sequence and duality.

    k = 0 gives O, k = 1 gives U2^, k = -1 vanishes and k = -2 is
    -det U2 (the cohomology sits in degree 1); other values follow the
    two-step recursion from the defining relation of the bundle.
    """
    if k == 0:
        return SurfaceKClass.structure_sheaf()
    if k == 1:
        return U2_DUAL
    if k == -1:
        return _SZERO
    if k > 1:
        return U2_DUAL.tensor(pushforward_table(k - 1)) - DET_U2_DUAL.tensor(pushforward_table(k - 2))
    return U2.tensor(pushforward_table(k + 1)) - DET_U2.tensor(pushforward_table(k + 2))


def chi_bundle(e: BundleClass, f: BundleClass) -> int:
    """Euler pairing on the P1-bundle via pushforward to the surface."""
    return (
        chi_surface(e.a, f.a)
        + chi_surface(e.a, f.b.tensor(pushforward_table(1)))
        + chi_surface(e.b, f.b)
        + chi_surface(e.b, f.a.tensor(pushforward_table(-1)))
    )


def serre_twist_bundle(e: BundleClass) -> BundleClass:
    """Tensor with the canonical class O(-2s)."""
    return e.tensor_s(-2)


# -- the blowup of P^3 in five points ---------------------------------------


@dataclass(frozen=True)
class BlowupClass:
    """Ambient line-bundle combination plus exceptional-divisor classes.

    ``ambient`` maps (a, b1..b5) of O(aH - sum b_i E_i) to multiplicities;
    ``divisor`` maps (i, m) of the pushforward of O(m) on the i-th
    exceptional plane to multiplicities.
    """

    ambient: tuple[tuple[tuple[int, ...], int], ...]
    divisor: tuple[tuple[tuple[int, int], int], ...]
    label: str = ""

    @classmethod
    def line_bundle(cls, a: int, b=(0, 0, 0, 0, 0), label: str = "") -> "BlowupClass":
        return cls((((a, *b), 1),), (), label)

    @classmethod
    def exceptional(cls, i: int, m: int, label: str = "") -> "BlowupClass":
        return cls((), (((i, m), 1),), label)

    def _amb(self) -> dict:
        return dict(self.ambient)

    def _div(self) -> dict:
        return dict(self.divisor)

    @staticmethod
    def _from(amb: dict, div: dict, label: str = "") -> "BlowupClass":
        return BlowupClass(
            tuple(sorted((k, v) for k, v in amb.items() if v)),
            tuple(sorted((k, v) for k, v in div.items() if v)),
            label,
        )

    def __add__(self, other: "BlowupClass") -> "BlowupClass":
        amb, div = self._amb(), self._div()
        for k, v in other.ambient:
            amb[k] = amb.get(k, 0) + v
        for k, v in other.divisor:
            div[k] = div.get(k, 0) + v
        return self._from(amb, div)

    def __neg__(self) -> "BlowupClass":
        return self._from({k: -v for k, v in self.ambient}, {k: -v for k, v in self.divisor})

    def __sub__(self, other: "BlowupClass") -> "BlowupClass":
        return self + (-other)

    def scale(self, k: int) -> "BlowupClass":
        return self._from({a: k * v for a, v in self.ambient}, {d: k * v for d, v in self.divisor})

    def tensor_line(self, a: int, b=(0, 0, 0, 0, 0)) -> "BlowupClass":
        amb = {}
        for (a0, *b0), v in self.ambient:
            key = (a0 + a, *(x + y for x, y in zip(b0, b)))
            amb[key] = amb.get(key, 0) + v
        div = {}
        for (i, m), v in self.divisor:
            div[(i, m + b[i - 1])] = div.get((i, m + b[i - 1]), 0) + v
        return self._from(amb, div)

    def is_zero(self) -> bool:
        return not self.ambient and not self.divisor

    def coords(self):
        return (self.ambient, self.divisor)

    def sign_vector(self) -> tuple[int, ...]:
        rank = sum(v for _, v in self.ambient)
        excess = sum(v for _, v in self.divisor)
        flat = [rank, excess]
        for key, v in self.ambient:
            flat.extend(key)
            flat.append(v)
        for key, v in self.divisor:
            flat.extend(key)
            flat.append(v)
        return tuple(flat)


def _chi_p3_blowup_lines(d1, d2) -> int:
    """chi of O(D2 - D1) on the blowup; D = aH - sum b_i E_i."""
    a = d2[0] - d1[0]
    bs = [d2[i] - d1[i] for i in range(1, 6)]
    six_chi = (
        a**3 - sum(b**3 for b in bs)
        + 6 * a**2 - 3 * sum(b * b for b in bs)
        + 11 * a - 2 * sum(bs)
        + 6
    )
    if six_chi % 6:
        raise ArithmeticError("non-integral Euler characteristic on the blowup")
    return six_chi // 6


def _chi_p2(m: int) -> int:
    return (m + 1) * (m + 2) // 2


def chi_blowup(e: BlowupClass, f: BlowupClass) -> int:
    """Euler pairing on Bl_5 P^3 with divisor-supported corrections."""
    total = 0
    for d1, v1 in e.ambient:
        for d2, v2 in f.ambient:
            total += v1 * v2 * _chi_p3_blowup_lines(d1, d2)
        for (i, m), v2 in f.divisor:
            total += v1 * v2 * _chi_p2(m - d1[i])
    for (i, m), v1 in e.divisor:
        for d2, v2 in f.ambient:
            total += v1 * v2 * (-_chi_p2(m - 2 - d2[i]))
        for (j, m2), v2 in f.divisor:
            if i == j:
                total += v1 * v2 * (m2 - m + 1)
    return total


def serre_twist_blowup(e: BlowupClass) -> BlowupClass:
    """Tensor with the canonical class O(-4H + 2 sum E_i)."""
    return e.tensor_line(-4, (-2, -2, -2, -2, -2))


# -- uniform collection interface -------------------------------------------


@dataclass
class KObject:
    label: str
    ambient: str  # "S" | "X" | "Xp"
    value: object

    def coords(self):
        return self.value.coords()


def chi(e: KObject, f: KObject) -> int:
    if e.ambient != f.ambient:
        raise ValueError(f"mixed ambients: {e.ambient} vs {f.ambient}")
    if e.ambient == "S":
        return chi_surface(e.value, f.value)
    if e.ambient == "X":
        return chi_bundle(e.value, f.value)
    return chi_blowup(e.value, f.value)


def serre_twist(e: KObject) -> KObject:
    if e.ambient == "S":
        return KObject(f"{e.label}(K)", "S", serre_twist_surface(e.value))
    if e.ambient == "X":
        return KObject(f"{e.label}(-2s)", "X", serre_twist_bundle(e.value))
    return KObject(f"{e.label}(K)", "Xp", serre_twist_blowup(e.value))


def serre_pairing_sign(ambient: str) -> int:
    """(-1)^dim: chi(E,F) = sign * chi(F, E ox omega)."""
    return 1 if ambient == "S" else -1


@dataclass
class GramMatrix:
    labels: list[str]
    entries: list[list[int]]

    def is_unitriangular(self) -> bool:
        n = len(self.entries)
        for i in range(n):
            if self.entries[i][i] != 1:
                return False
            for j in range(i):
                if self.entries[i][j] != 0:
                    return False
        return True

    def block(self, start: int, size: int) -> list[list[int]]:
        return [row[start : start + size] for row in self.entries[start : start + size]]

    def diagonal_blocks_equal(self, size: int) -> bool:
        n = len(self.entries)
        if n % size:
            return False
        first = self.block(0, size)
        return all(self.block(k, size) == first for k in range(size, n, size))

    def __str__(self):
        width = max(len(str(v)) for row in self.entries for v in row)
        lines = []
        for label, row in zip(self.labels, self.entries):
            lines.append(f"{label:>14s}  " + " ".join(f"{v:>{width}d}" for v in row))
        return "\n".join(lines)


def gram(collection: list[KObject]) -> GramMatrix:
    return GramMatrix(
        [e.label for e in collection],
        [[chi(e, f) for f in collection] for e in collection],
    )


# -- mutations ---------------------------------------------------------------


def _normalize_sign(obj: KObject) -> KObject:
    for v in obj.value.sign_vector():
        if v != 0:
            if v < 0:
                return KObject(obj.label, obj.ambient, -obj.value)
            return obj
    return obj


def mutate(collection: list[KObject], index: int, direction: str) -> list[KObject]:
    """Single mutation at K-level; positions swap with the neighbor.

    Left: [F] becomes [F] - chi(E, F) [E] through the left neighbor E.
    Right: [F] becomes [F] - chi(F, E) [E] through the right neighbor E.
    The result is sign-normalized; orthogonal pairs simply swap.
    """
    out = list(collection)
    if direction == "left":
        if index <= 0 or index >= len(out):
            raise IndexError("left mutation needs a left neighbor")
        e, f = out[index - 1], out[index]
        coeff = chi(e, f)
        new = KObject(f"L({f.label})", f.ambient, f.value - e.value.scale(coeff))
        out[index - 1], out[index] = _normalize_sign(new), e
    elif direction == "right":
        if index < 0 or index >= len(out) - 1:
            raise IndexError("right mutation needs a right neighbor")
        f, e = out[index], out[index + 1]
        coeff = chi(f, e)
        new = KObject(f"R({f.label})", f.ambient, f.value - e.value.scale(coeff))
        out[index], out[index + 1] = e, _normalize_sign(new)
    else:
        raise ValueError("direction must be 'left' or 'right'")
    return out


def classes_equal(a: KObject, b: KObject) -> bool:
    return a.ambient == b.ambient and (a.value - b.value).is_zero()


# -- builtin collections ------------------------------------------------------


def _surface_obj(value: SurfaceKClass, label: str) -> KObject:
    return KObject(label, "S", value)


def _conic_classes() -> list[SurfaceKClass]:
    out = [SurfaceKClass.line_bundle(H - E[i]) for i in range(4)]
    out.append(SurfaceKClass.line_bundle(H.scale(2) - E_SUM))
    return out


def three_block() -> list[KObject]:
    objs = [_surface_obj(SurfaceKClass.structure_sheaf(), "O")]
    labels = [f"O(h-e{i + 1})" for i in range(4)] + ["O(2h-e)"]
    objs += [_surface_obj(c, lab) for c, lab in zip(_conic_classes(), labels)]
    objs.append(_surface_obj(U2_DUAL, "U2^"))
    return objs


def karpov_nogin() -> list[KObject]:
    objs = [
        _surface_obj(SurfaceKClass.structure_sheaf(), "O"),
        _surface_obj(U2_DUAL, "F"),
        _surface_obj(SurfaceKClass.line_bundle(H), "O(h)"),
    ]
    for i in range(4):
        d = H.scale(2) + E[i] - E_SUM
        objs.append(_surface_obj(SurfaceKClass.line_bundle(d), f"O(2h+e{i + 1}-e)"))
    return objs


def bundle_obj(a: SurfaceKClass, b: SurfaceKClass, label: str) -> KObject:
    return KObject(label, "X", BundleClass(a, b))


def orlov_x() -> list[KObject]:
    base = three_block()
    first = [KObject(o.label + "_X", "X", BundleClass.pullback(o.value)) for o in base]
    second = [KObject(o.label + "(s)", "X", BundleClass.twist_s(o.value)) for o in base]
    return first + second


def quiver_center() -> list[KObject]:
    labels = [f"O(h-e{i + 1})" for i in range(4)] + ["O(2h-e)"]
    objs = [KObject(lab, "X", BundleClass.pullback(c)) for c, lab in zip(_conic_classes(), labels)]
    objs.append(KObject("O(3h-e-s)", "X", BundleClass.pullback(U2_DUAL) - BundleClass.twist_s(SurfaceKClass.structure_sheaf())))
    objs.append(KObject("U2^_X", "X", BundleClass.pullback(U2_DUAL)))
    return objs


def quiver_center_twisted() -> list[KObject]:
    out = []
    for o in quiver_center():
        out.append(KObject(o.label + "(s)", "X", o.value.tensor_s(1)))
    return out


def blowup_14() -> list[KObject]:
    objs = [
        KObject("O", "Xp", BlowupClass.line_bundle(0)),
        KObject("O(H)", "Xp", BlowupClass.line_bundle(1)),
    ]
    for i in range(1, 6):
        objs.append(KObject(f"O_E{i}", "Xp", BlowupClass.exceptional(i, 0)))
    objs.append(KObject("O(2H-E)", "Xp", BlowupClass.line_bundle(2, (1, 1, 1, 1, 1))))
    objs.append(KObject("O(3H-E)", "Xp", BlowupClass.line_bundle(3, (1, 1, 1, 1, 1))))
    for i in range(1, 6):
        objs.append(KObject(f"O_E{i}(-E{i})", "Xp", BlowupClass.exceptional(i, 1)))
    return objs


def bundle_lefschetz() -> list[KObject]:
    """The projective-bundle Lefschetz shape in a torsion-friendly basis."""
    torsion = [
        SurfaceKClass(0, E[i], -1, f"O_e{i + 1}(-1)") for i in range(4)
    ]
    base = [_surface_obj(t, t.label) for t in torsion] + [
        _surface_obj(SurfaceKClass.structure_sheaf(), "O"),
        _surface_obj(SurfaceKClass.line_bundle(H), "O(h)"),
        _surface_obj(SurfaceKClass.line_bundle(H.scale(2)), "O(2h)"),
    ]
    first = [KObject(o.label + "_X", "X", BundleClass.pullback(o.value)) for o in base]
    second = [KObject(o.label + "(s)", "X", BundleClass.twist_s(o.value)) for o in base]
    return first + second


BUILTIN_COLLECTIONS = {
    "three_block": three_block,
    "karpov_nogin": karpov_nogin,
    "orlov_X": orlov_x,
    "quiver_center": quiver_center,
    "blowup_14": blowup_14,
    "bundle_lefschetz": bundle_lefschetz,
}


def builtin_collection(name: str) -> list[KObject]:
    if name not in BUILTIN_COLLECTIONS:
        raise KeyError(f"unknown collection {name!r}; known: {sorted(BUILTIN_COLLECTIONS)}")
    return BUILTIN_COLLECTIONS[name]()


# -- regression mutation sequences -------------------------------------------


def karpov_nogin_to_three_block() -> list[KObject]:
    """The mutation sequence turning the 2+5-block collection into 1+5+1."""
    coll = karpov_nogin()
    # move each of the last five objects to the front (two left mutations each)
    for j in range(5):
        index = j + 2
        for _ in range(2):
            coll = mutate(coll, index, "left")
            index -= 1
    # right-mutate the five through O, restoring O to the front
    for index in range(4, -1, -1):
        coll = mutate(coll, index, "right")
    # rotate O(2h-e) past the four conic classes inside the orthogonal block
    for index in range(1, 5):
        coll = mutate(coll, index, "right")
    return coll


def orlov_to_quiver_center() -> list[KObject]:
    """The two-step sequence: Serre-rotate O_X, then divide off the s-twists."""
    coll = orlov_x()
    for index in range(13):
        coll = mutate(coll, index, "right")
    coll = mutate(coll, 6, "left")
    coll = mutate(coll, 13, "left")
    return coll


def right_mutation_endpoint() -> KObject:
    """[O_X] right-mutated through the rest of the 14-object collection."""
    coll = orlov_x()
    for index in range(13):
        coll = mutate(coll, index, "right")
    return coll[13]


# -- consistency checks --------------------------------------------------------


def consistency_checks() -> dict[str, bool]:
    checks = {}
    checks["c1(U2) + c1(U2^) = 0"] = (U2.c1 + U2_DUAL.c1) == PIC_ZERO
    total = U3 + U2_DUAL
    checks["[U3] + [U2^] = O^5"] = total.rank == 5 and total.c1 == PIC_ZERO and total.ch2_2 == 0
    checks["c1(U3) = -c1(U2^)"] = U3.c1 == -U2_DUAL.c1
    checks["c1(U3) = c1(U2)"] = U3.c1 == U2.c1
    checks["rank K(S) = 7"] = len(three_block()) == 7
    checks["rank K(X) = 14"] = len(orlov_x()) == 14 and len(blowup_14()) == 14
    checks["rank K(Y) = 21"] = 3 * len(three_block()) == 21
    return checks
