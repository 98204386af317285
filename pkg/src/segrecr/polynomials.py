"""Sparse multivariate polynomials over exact scalars.

Terms are stored as a map from exponent tuples to nonzero coefficients.
Coefficients may be ints, ``Fraction`` or :class:`~segrecr.scalars.Fp`
elements; arithmetic never mixes prime-field moduli. Printed output uses
graded lexicographic order with x0 > x1 > ...
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Fp, ScalarDomainError, scalar_is_zero


def _zero_exp(n: int) -> tuple[int, ...]:
    return (0,) * n


class Polynomial:
    __slots__ = ("nvars", "terms", "_degree")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], object] = {}
        if terms:
            for exp, c in terms.items():
                if not scalar_is_zero(c):
                    if len(exp) != nvars:
                        raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
                    self.terms[tuple(exp)] = c
        self._degree = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {_zero_exp(nvars): c})

    @classmethod
    def variable(cls, nvars: int, i: int, c=1) -> "Polynomial":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): c})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._degree is None:
            self._degree = max((sum(e) for e in self.terms), default=-1)
        return self._degree

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exp) -> object:
        return self.terms.get(tuple(exp), 0)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset((e, _hashable(c)) for e, c in self.terms.items())))

    # -- arithmetic ----------------------------------------------------

    def _check_compat(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            other = Polynomial.constant(self.nvars, other)
        self._check_compat(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if scalar_is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        r = Polynomial(self.nvars)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = Polynomial(self.nvars)
        r.terms = {e: -c for e, c in self.terms.items()}
        r._degree = self._degree
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            if scalar_is_zero(other):
                return Polynomial.zero(self.nvars)
            r = Polynomial(self.nvars)
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        self._check_compat(other)
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if scalar_is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        r = Polynomial(self.nvars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- calculus and substitution --------------------------------------

    def partial(self, i: int) -> "Polynomial":
        out: dict[tuple[int, ...], object] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            nc = c * e[i]
            if not scalar_is_zero(nc):
                out[tuple(ne)] = out.get(tuple(ne), 0) + nc
        return Polynomial(self.nvars, out)

    def gradient(self) -> list["Polynomial"]:
        return [self.partial(i) for i in range(self.nvars)]

    def evaluate(self, point):
        """Exact value at a point (sequence of scalars)."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        _check_point_moduli(self.terms.values(), point)
        total = 0
        for e, c in self.terms.items():
            v = c
            for i, ei in enumerate(e):
                if ei:
                    v = v * point[i] ** ei
            total = total + v
        return total

    def substitute(self, values: list["Polynomial"]) -> "Polynomial":
        """Substitute a polynomial for every variable (all in the same ring)."""
        if len(values) != self.nvars:
            raise ValueError("one substitution polynomial per variable required")
        nv = values[0].nvars
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = values[i] ** e
            return powers[key]

        out = Polynomial.zero(nv)
        for e, c in self.terms.items():
            term = Polynomial.constant(nv, c)
            for i, ei in enumerate(e):
                if ei:
                    term = term * power(i, ei)
            out = out + term
        return out

    def substitute_linear(self, matrix) -> "Polynomial":
        """Compose with a linear change of variables x_i = sum_j M[i][j] v_j.

        ``matrix`` has one row per old variable and one column per new
        variable; the result is expanded and collected exactly.
        """
        rows = [list(r) for r in matrix]
        if len(rows) != self.nvars:
            raise ValueError(f"matrix has {len(rows)} rows, expected {self.nvars}")
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged substitution matrix")
        linear_forms = [
            Polynomial(ncols, {tuple(1 if j == k else 0 for k in range(ncols)): rows[i][j] for j in range(ncols) if not scalar_is_zero(rows[i][j])})
            for i in range(self.nvars)
        ]
        return self.substitute(linear_forms)

    def reduce_mod(self, p: int) -> "Polynomial":
        """Reduction of a rational polynomial mod p; denominators must be units."""
        out: dict[tuple[int, ...], Fp] = {}
        for e, c in self.terms.items():
            if isinstance(c, Fp):
                if c.p != p:
                    raise ScalarDomainError(f"polynomial already over F_{c.p}")
                v = c
            else:
                c = Fraction(c)
                if c.denominator % p == 0:
                    raise ScalarDomainError(f"denominator of {c} not invertible mod {p}")
                v = Fp(c.numerator, p) / Fp(c.denominator, p)
            if v.value:
                out[e] = v
        return Polynomial(self.nvars, out)

    # -- display ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in graded lexicographic order, x0 > x1 > ..., largest first."""
        return sorted(self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def to_string(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{ei}" if ei > 1 else names[i] for i, ei in enumerate(e) if ei
            )
            cs = str(c)
            if mono:
                piece = mono if cs == "1" else (f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
            else:
                piece = cs
            parts.append(piece)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.to_string()})"


def _hashable(c):
    return (c.value, c.p) if isinstance(c, Fp) else Fraction(c)


def _check_point_moduli(coeffs, point):
    p = None
    for v in list(coeffs) + list(point):
        if isinstance(v, Fp):
            if p is None:
                p = v.p
            elif v.p != p:
                raise ScalarDomainError(f"modulus mismatch: {p} vs {v.p}")


def polynomial_square_root(poly: Polynomial) -> Polynomial | None:
    """A polynomial q with q^2 equal to the input, or None.

    The input must be homogeneous of even degree. Extraction runs in the
    first variable whose pure-power coefficient is a nonzero square; if no
    pure power is present, deterministic integer shears from a fixed list
    are tried until one appears. The candidate is verified by squaring, so
    a non-None return is always exact.
    """
    if poly.is_zero():
        return Polynomial.zero(poly.nvars)
    if not poly.is_homogeneous() or poly.degree() % 2 != 0:
        raise ValueError("square root requires a homogeneous polynomial of even degree")
    root = _square_root_attempt(poly)
    if root is not None:
        return root
    for i, j, t in _shear_schedule(poly.nvars):
        sheared = _apply_shear(poly, i, j, t)
        root = _square_root_attempt(sheared)
        if root is not None:
            return _apply_shear(root, i, j, -t)
    return None


def to_primitive_integer(poly: Polynomial) -> Polynomial:
    """Scale a rational polynomial to primitive integer coefficients.

    The zero locus is unchanged, and the reduction mod any prime is then
    always defined; the leading graded-lex coefficient is made positive.
    """
    if poly.is_zero():
        return poly
    from .linalg import integer_primitive

    exps = [e for e, _ in poly.sorted_terms()]
    prim = integer_primitive([poly.terms[e] for e in exps])
    return Polynomial(poly.nvars, dict(zip(exps, prim)))


def square_root_up_to_scalar(poly: Polynomial):
    """(q, lam) with lam * q^2 equal to the input, or None.

    The proportionality scalar lam may be any nonzero field element. Over
    the rationals q is scaled to a primitive integer form. Monicizing by
    the graded-lex leading coefficient reduces the search to an exact
    square: if poly = lam * q^2 then the quotient of any coefficient of
    poly by the leading one is a quotient of two lam-times-squares.
    """
    if poly.is_zero():
        return Polynomial.zero(poly.nvars), 1
    lead = poly.sorted_terms()[0][1]
    monic = poly * _scalar_inv(lead)
    root = polynomial_square_root(monic)
    if root is None:
        return None
    if not any(isinstance(c, Fp) for c in root.terms.values()):
        from .linalg import integer_primitive

        exps = list(root.terms)
        prim = integer_primitive([root.terms[e] for e in exps])
        root = Polynomial(poly.nvars, dict(zip(exps, prim)))
    e0, c0 = root.sorted_terms()[0]
    square_lead = (root * root).coefficient(tuple(2 * v for v in e0))
    lam = lead * _scalar_inv(square_lead)
    if not (root * root * lam) == poly:
        return None
    return root, lam


def _shear_schedule(n: int):
    for t in (1, -1, 2, -2, 3):
        for i in range(n):
            for j in range(n):
                if i != j:
                    yield i, j, t


def _apply_shear(poly: Polynomial, i: int, j: int, t: int) -> Polynomial:
    # x_j -> x_j + t*x_i, an invertible integer substitution
    rows = [[1 if k == m else 0 for m in range(poly.nvars)] for k in range(poly.nvars)]
    rows[j][i] = t
    return poly.substitute_linear(rows)


def _square_root_attempt(poly: Polynomial) -> Polynomial | None:
    d2 = poly.degree()
    d = d2 // 2
    n = poly.nvars
    for k in range(n):
        lead_exp = tuple(d2 if i == k else 0 for i in range(n))
        lead = poly.terms.get(lead_exp)
        if lead is None:
            continue
        slead = _scalar_sqrt(lead)
        if slead is None:
            return None
        return _extract_root(poly, k, d, slead)
    return None


def _scalar_sqrt(c):
    if isinstance(c, Fp):
        return c.sqrt()
    from .scalars import rational_sqrt

    return rational_sqrt(Fraction(c))


def _extract_root(poly: Polynomial, k: int, d: int, slead) -> Polynomial | None:
    # view poly as a polynomial in x_k with coefficients in the other variables
    layers: dict[int, Polynomial] = {}
    for e, c in poly.terms.items():
        m = e[k]
        reduced = list(e)
        reduced[k] = 0
        layer = layers.setdefault(m, Polynomial.zero(poly.nvars))
        layer.terms[tuple(reduced)] = layer.terms.get(tuple(reduced), 0) + c
        layer._degree = None
    q_layers: dict[int, Polynomial] = {d: Polynomial.constant(poly.nvars, slead)}
    inv2lead = _scalar_inv(slead + slead)
    for m in range(d - 1, -1, -1):
        # coefficient of x_k^(m+d) in q^2 is 2*q_d*q_m + known lower products
        acc = layers.get(m + d, Polynomial.zero(poly.nvars))
        for a in range(m + 1, d):
            b = m + d - a
            if b <= a and b in q_layers and a in q_layers:
                prod = q_layers[a] * q_layers[b]
                acc = acc - (prod if b == a else prod * 2)
        q_layers[m] = acc * inv2lead
    q = Polynomial.zero(poly.nvars)
    for m, layer in q_layers.items():
        for e, c in layer.terms.items():
            ne = list(e)
            ne[k] = m
            q.terms[tuple(ne)] = c
    q = Polynomial(poly.nvars, q.terms)
    if (q * q) == poly:
        return q
    return None


def _scalar_inv(c):
    if isinstance(c, Fp):
        return c.inverse()
    return Fraction(1) / Fraction(c)
