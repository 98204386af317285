"""Path algebras with quadratic relations, and their homological shadows.

Paths compose left to right, so a length-2 path "xa" means arrow x followed
by arrow a; the Cartan matrix counts paths from row vertex to column
vertex. The Euler-form convention is the inverse of the Cartan matrix,
pinned by agreement with the adjacency formula on relation-free algebras.
Hochschild cohomology in degrees 0..2 comes from the standard three-term
complex attached to (vertices, arrows, minimal relations).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .linalg import ExactMatrix


@dataclass(frozen=True)
class Quiver:
    nvertices: int
    arrows: tuple[tuple[int, int, str], ...]

    def __post_init__(self):
        for s, t, _ in self.arrows:
            if not (0 <= s < self.nvertices and 0 <= t < self.nvertices):
                raise ValueError("arrow endpoint out of range")

    def arrow_index(self, label: str) -> int:
        for i, (_, _, lab) in enumerate(self.arrows):
            if lab == label:
                return i
        raise KeyError(f"no arrow labeled {label!r}")

    def is_acyclic(self) -> bool:
        indeg = [0] * self.nvertices
        for s, t, _ in self.arrows:
            indeg[t] += 1
        queue = [v for v in range(self.nvertices) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for s, t, _ in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        queue.append(t)
        return seen == self.nvertices

    def adjacency(self) -> list[list[int]]:
        adj = [[0] * self.nvertices for _ in range(self.nvertices)]
        for s, t, _ in self.arrows:
            adj[s][t] += 1
        return adj

    def paths_of_length(self, d: int) -> list[tuple[int, ...]]:
        """Composable arrow-index sequences of length d, lexicographic."""
        if d == 0:
            raise ValueError("length-0 paths are the vertex idempotents")
        paths = [(i,) for i in range(len(self.arrows))]
        for _ in range(d - 1):
            extended = []
            for path in paths:
                t = self.arrows[path[-1]][1]
                for i, (s, _, _) in enumerate(self.arrows):
                    if s == t:
                        extended.append(path + (i,))
            paths = extended
        return paths

    def path_source(self, path: tuple[int, ...]) -> int:
        return self.arrows[path[0]][0]

    def path_target(self, path: tuple[int, ...]) -> int:
        return self.arrows[path[-1]][1]


def subspace_quiver(n: int) -> Quiver:
    """n sources mapping to one sink; the sink is the last vertex."""
    return Quiver(n + 1, tuple((i, n, f"a{i}") for i in range(n)))


def quotient_quiver(n: int) -> Quiver:
    """One source mapping to n targets; the source is the last vertex."""
    return Quiver(n + 1, tuple((n, i, f"b{i}") for i in range(n)))


def blowup_quiver() -> Quiver:
    arrows = [(0, 1, lab) for lab in "wxyz"] + [(1, 2 + i, lab) for i, lab in enumerate("abcde")]
    return Quiver(7, tuple(arrows))


def blowup_relations() -> list[dict[tuple[str, str], Fraction]]:
    """Relations cutting five general points out of the 4x5 path grid."""
    rels: list[dict[tuple[str, str], Fraction]] = []
    kill = {
        "a": ("x", "y", "z"),
        "b": ("w", "y", "z"),
        "c": ("w", "x", "z"),
        "d": ("w", "x", "y"),
    }
    for second, firsts in kill.items():
        for first in firsts:
            rels.append({(first, second): Fraction(1)})
    for first, nxt in (("w", "x"), ("x", "y"), ("y", "z")):
        rels.append({(first, "e"): Fraction(1), (nxt, "e"): Fraction(-1)})
    return rels


class GradedQuiverAlgebra:
    """kQ/I for homogeneous quadratic I, stored degree by degree."""

    def __init__(self, quiver: Quiver, relations=None, name: str = ""):
        if not quiver.is_acyclic():
            raise ValueError("builtins are acyclic; cyclic quivers unsupported")
        self.quiver = quiver
        self.name = name
        self.relations = [self._normalize_relation(r) for r in (relations or [])]
        self._build()

    def _normalize_relation(self, rel) -> dict[tuple[int, ...], Fraction]:
        out: dict[tuple[int, ...], Fraction] = {}
        endpoints = None
        for path, coeff in rel.items():
            idx = tuple(
                self.quiver.arrow_index(a) if isinstance(a, str) else a for a in path
            )
            if len(idx) != 2:
                raise ValueError("relations must be homogeneous of path length 2")
            if self.quiver.arrows[idx[0]][1] != self.quiver.arrows[idx[1]][0]:
                raise ValueError(f"non-composable relation path {path}")
            ends = (self.quiver.path_source(idx), self.quiver.path_target(idx))
            if endpoints is None:
                endpoints = ends
            elif endpoints != ends:
                raise ValueError("relation mixes non-parallel paths")
            out[idx] = out.get(idx, Fraction(0)) + Fraction(coeff)
        return {k: v for k, v in out.items() if v != 0}

    def _build(self):
        q = self.quiver
        self.paths: dict[int, list[tuple[int, ...]]] = {}
        self.path_index: dict[int, dict[tuple[int, ...], int]] = {}
        self.ideal_rref: dict[int, tuple[ExactMatrix, list[int]]] = {}
        self.basis: dict[int, list[tuple[int, ...]]] = {}
        d = 1
        while True:
            paths = q.paths_of_length(d)
            if not paths:
                self.max_degree = d - 1
                break
            self.paths[d] = paths
            self.path_index[d] = {p: i for i, p in enumerate(paths)}
            if d >= 2 and self.relations:
                rows = self._ideal_generators(d)
                if rows:
                    reduced, pivots = ExactMatrix(rows).rref()
                    reduced = reduced.nonzero_rows()
                    self.ideal_rref[d] = (reduced, pivots)
                    self.basis[d] = [p for i, p in enumerate(paths) if i not in pivots]
                else:
                    self.basis[d] = list(paths)
            else:
                self.basis[d] = list(paths)
            d += 1
        self.dimensions = [q.nvertices] + [len(self.basis[k]) for k in range(1, self.max_degree + 1)]
        self.total_dimension = sum(self.dimensions)

    def _ideal_generators(self, d: int) -> list[list[Fraction]]:
        """Spanning vectors of the degree-d piece of the two-sided ideal."""
        q = self.quiver
        rows = []
        npaths = len(self.paths[d])
        for rel in self.relations:
            for prefix_len in range(d - 1):
                suffix_len = d - 2 - prefix_len
                prefixes = q.paths_of_length(prefix_len) if prefix_len else [()]
                suffixes = q.paths_of_length(suffix_len) if suffix_len else [()]
                for pre in prefixes:
                    for suf in suffixes:
                        vec = [Fraction(0)] * npaths
                        ok = False
                        for rpath, coeff in rel.items():
                            full = pre + rpath + suf
                            if not self._composable(full):
                                continue
                            vec[self.path_index[d][full]] += coeff
                            ok = True
                        if ok and any(vec):
                            rows.append(vec)
        return rows

    def _composable(self, path: tuple[int, ...]) -> bool:
        q = self.quiver
        return all(q.arrows[path[k]][1] == q.arrows[path[k + 1]][0] for k in range(len(path) - 1))

    def reduce_path(self, path: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        """Canonical form of a path modulo the ideal, on the monomial basis."""
        d = len(path)
        if d == 0 or d > self.max_degree:
            return {}
        if not self._composable(path):
            return {}
        vec = {path: Fraction(1)}
        if d not in self.ideal_rref:
            return vec
        reduced, pivots = self.ideal_rref[d]
        dense = [Fraction(0)] * len(self.paths[d])
        dense[self.path_index[d][path]] = Fraction(1)
        for row, pivot in zip(reduced.rows, pivots):
            f = dense[pivot]
            if f:
                dense = [a - f * b for a, b in zip(dense, row)]
        return {p: dense[self.path_index[d][p]] for p in self.basis[d] if dense[self.path_index[d][p]] != 0}

    # -- element algebra: dicts keyed by ("e", v) or arrow-index tuples ------

    def idempotent(self, v: int) -> dict:
        return {("e", v): Fraction(1)}

    def element_source(self, key) -> int:
        if key[0] == "e":
            return key[1]
        return self.quiver.path_source(key)

    def element_target(self, key) -> int:
        if key[0] == "e":
            return key[1]
        return self.quiver.path_target(key)

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for kx, cx in x.items():
            for ky, cy in y.items():
                prod = self._mult_basis(kx, ky)
                for k, c in prod.items():
                    out[k] = out.get(k, Fraction(0)) + cx * cy * c
        return {k: c for k, c in out.items() if c != 0}

    def _mult_basis(self, kx, ky) -> dict:
        if kx[0] == "e" and ky[0] == "e":
            return {kx: Fraction(1)} if kx == ky else {}
        if kx[0] == "e":
            return {ky: Fraction(1)} if kx[1] == self.quiver.path_source(ky) else {}
        if ky[0] == "e":
            return {kx: Fraction(1)} if ky[1] == self.quiver.path_target(kx) else {}
        if self.quiver.path_target(kx) != self.quiver.path_source(ky):
            return {}
        return self.reduce_path(kx + ky)

    def graded_piece_basis(self, i: int, j: int) -> list:
        """Basis keys of e_i A e_j: paths from i to j plus the idempotent."""
        keys = []
        if i == j:
            keys.append(("e", i))
        for d in range(1, self.max_degree + 1):
            for p in self.basis[d]:
                if self.quiver.path_source(p) == i and self.quiver.path_target(p) == j:
                    keys.append(p)
        return keys


def path_algebra(quiver: Quiver, name: str = "") -> GradedQuiverAlgebra:
    return GradedQuiverAlgebra(quiver, [], name)


def blowup_algebra() -> GradedQuiverAlgebra:
    return GradedQuiverAlgebra(blowup_quiver(), blowup_relations(), "blowup_A")


BUILTIN_ALGEBRAS = {
    "blowup_A": blowup_algebra,
    "subspace_6": lambda: path_algebra(subspace_quiver(6), "subspace_6"),
    "subspace_5": lambda: path_algebra(subspace_quiver(5), "subspace_5"),
    "quotient_5": lambda: path_algebra(quotient_quiver(5), "quotient_5"),
}


def builtin_algebra(name: str) -> GradedQuiverAlgebra:
    if name not in BUILTIN_ALGEBRAS:
        raise KeyError(f"unknown algebra {name!r}; known: {sorted(BUILTIN_ALGEBRAS)}")
    return BUILTIN_ALGEBRAS[name]()


# -- Cartan, Euler, Coxeter --------------------------------------------------


def cartan_matrix(alg: GradedQuiverAlgebra) -> list[list[int]]:
    """C[i][j] = dim of the space of paths i -> j modulo relations."""
    n = alg.quiver.nvertices
    return [[len(alg.graded_piece_basis(i, j)) for j in range(n)] for i in range(n)]


def euler_form(quiver: Quiver, d, e) -> int:
    """Hereditary Euler form <d, e> = sum d_v e_v - sum over arrows d_s e_t."""
    if not quiver.is_acyclic():
        raise ValueError("Euler form requires an acyclic quiver")
    if len(d) != quiver.nvertices or len(e) != quiver.nvertices:
        raise ValueError("dimension vector length mismatch")
    total = sum(dv * ev for dv, ev in zip(d, e))
    for s, t, _ in quiver.arrows:
        total -= d[s] * e[t]
    return total


def euler_matrix(alg: GradedQuiverAlgebra) -> list[list[Fraction]]:
    """Inverse of the Cartan matrix; equals I - Adj for hereditary algebras."""
    c = cartan_matrix(alg)
    return _matrix_inverse(c)


def euler_matrix_on_projectives(alg: GradedQuiverAlgebra) -> list[list[int]]:
    """Euler pairings of the projectives: exactly the Cartan matrix."""
    return cartan_matrix(alg)


def _matrix_inverse(m) -> list[list[Fraction]]:
    n = len(m)
    aug = ExactMatrix([[Fraction(m[i][j]) for j in range(n)] + [Fraction(1 if k == i else 0) for k in range(n)] for i in range(n)])
    reduced, pivots = aug.rref()
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in reduced.rows]


def coxeter_polynomial(alg: GradedQuiverAlgebra) -> list[int]:
    """Coefficients (leading first) of charpoly of -C^{-T} C, integer-cleared."""
    c = cartan_matrix(alg)
    cinv = _matrix_inverse(c)
    n = len(c)
    cinv_t = [[cinv[j][i] for j in range(n)] for i in range(n)]
    m = [[-sum(cinv_t[i][k] * c[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    coeffs = _charpoly(m)
    lcm = 1
    for v in coeffs:
        lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
    return [int(v * lcm) for v in coeffs]


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _charpoly(m) -> list[Fraction]:
    """Faddeev-LeVerrier; returns [1, -c1, c2, ...] with leading 1."""
    n = len(m)
    coeffs = [Fraction(1)]
    mk = [[Fraction(v) for v in row] for row in m]
    identity = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    ak = [row[:] for row in mk]
    for k in range(1, n + 1):
        ck = sum(ak[i][i] for i in range(n)) / k
        coeffs.append(-ck)
        if k < n:
            shifted = [[ak[i][j] - (ck if i == j else 0) for j in range(n)] for i in range(n)]
            ak = [[sum(mk[i][t] * shifted[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return coeffs


# -- Hochschild cohomology ---------------------------------------------------


class ResolutionError(RuntimeError):
    pass


def _relation_step3_obstruction(alg: GradedQuiverAlgebra) -> int:
    """dim(A_1 R intersect R A_1) inside degree-3 paths of the free algebra."""
    q = alg.quiver
    paths3 = q.paths_of_length(3)
    if not paths3 or not alg.relations:
        return 0
    index = {p: i for i, p in enumerate(paths3)}
    left_rows, right_rows = [], []
    for rel in alg.relations:
        for a in range(len(q.arrows)):
            lvec = [Fraction(0)] * len(paths3)
            rvec = [Fraction(0)] * len(paths3)
            lok = rok = False
            for rpath, coeff in rel.items():
                lfull, rfull = (a,) + rpath, rpath + (a,)
                if lfull in index:
                    lvec[index[lfull]] += coeff
                    lok = True
                if rfull in index:
                    rvec[index[rfull]] += coeff
                    rok = True
            if lok:
                left_rows.append(lvec)
            if rok:
                right_rows.append(rvec)
    if not left_rows or not right_rows:
        return 0
    dim_l = ExactMatrix(left_rows).rank()
    dim_r = ExactMatrix(right_rows).rank()
    dim_sum = ExactMatrix(left_rows + right_rows).rank()
    return dim_l + dim_r - dim_sum


def hochschild_dimensions(alg: GradedQuiverAlgebra) -> tuple[int, int, int]:
    """(hh0, hh1, hh2) from the vertices/arrows/relations complex.

    Valid when the minimal bimodule resolution stops at the relation step;
    a nonzero step-3 obstruction aborts.
    """
    if _relation_step3_obstruction(alg) != 0:
        raise ResolutionError("minimal resolution does not terminate at step 2")
    q = alg.quiver
    d0_basis = []  # (vertex, key)
    for v in range(q.nvertices):
        for key in alg.graded_piece_basis(v, v):
            d0_basis.append((v, key))
    d1_basis = []  # (arrow index, key)
    for a, (s, t, _) in enumerate(q.arrows):
        for key in alg.graded_piece_basis(s, t):
            d1_basis.append((a, key))
    d2_basis = []  # (relation index, key)
    for r, rel in enumerate(alg.relations):
        rpath = next(iter(rel))
        i, j = q.path_source(rpath), q.path_target(rpath)
        for key in alg.graded_piece_basis(i, j):
            d2_basis.append((r, key))
    d1_index = {bk: i for i, bk in enumerate(d1_basis)}
    d2_index = {bk: i for i, bk in enumerate(d2_basis)}

    def arrow_elt(a: int) -> dict:
        return {(a,): Fraction(1)}

    rows_d0 = []
    for v, key in d0_basis:
        row = [Fraction(0)] * len(d1_basis)
        z = {key: Fraction(1)}
        for a, (s, t, _) in enumerate(q.arrows):
            comp = {}
            if s == v:
                for k, c in alg.multiply(z, arrow_elt(a)).items():
                    comp[k] = comp.get(k, Fraction(0)) + c
            if t == v:
                for k, c in alg.multiply(arrow_elt(a), z).items():
                    comp[k] = comp.get(k, Fraction(0)) - c
            for k, c in comp.items():
                if c:
                    row[d1_index[(a, k)]] += c
        rows_d0.append(row)

    rows_d1 = []
    for a, key in d1_basis:
        row = [Fraction(0)] * len(d2_basis)
        f_elt = {key: Fraction(1)}
        for r, rel in enumerate(alg.relations):
            comp: dict = {}
            for (alpha, beta), coeff in rel.items():
                if alpha == a:
                    for k, c in alg.multiply(f_elt, arrow_elt(beta)).items():
                        comp[k] = comp.get(k, Fraction(0)) + coeff * c
                if beta == a:
                    for k, c in alg.multiply(arrow_elt(alpha), f_elt).items():
                        comp[k] = comp.get(k, Fraction(0)) + coeff * c
            for k, c in comp.items():
                if c:
                    row[d2_index[(r, k)]] += c
        rows_d1.append(row)

    rank_d0 = ExactMatrix(rows_d0).rank() if rows_d0 and d1_basis else 0
    rank_d1 = ExactMatrix(rows_d1).rank() if rows_d1 and d2_basis else 0
    hh0 = len(d0_basis) - rank_d0
    hh1 = (len(d1_basis) - rank_d1) - rank_d0
    hh2 = len(d2_basis) - rank_d1
    return hh0, hh1, hh2


# -- King semistability -------------------------------------------------------


CANONICAL_WEIGHT_6 = (1, 1, 1, 1, 1, 1, -3)


def king_semistable(maps, theta=CANONICAL_WEIGHT_6) -> bool:
    """Semistability of a (1,1,1,1,1,1;2) representation of the 6-subspace quiver.

    ``maps`` are six vectors in k^2 (the images of the source generators).
    True iff every proper nonzero subrepresentation T has theta . dim T <= 0;
    it suffices to test sink subspaces 0, the individual image lines, and
    the full plane, each with its maximal compatible source set.
    """
    vs = [tuple(Fraction(c) for c in v) for v in maps]
    if len(vs) != 6 or any(len(v) != 2 for v in vs):
        raise ValueError("expected six vectors in k^2")
    if sum(theta[i] for i in range(6)) + 2 * theta[6] != 0:
        raise ValueError("weight must be orthogonal to the dimension vector")
    zeros = [i for i, v in enumerate(vs) if v == (0, 0)]
    # sink subspace 0
    if zeros and sum(theta[i] for i in zeros) > 0:
        return False
    # sink subspace a line through some nonzero image
    for i, v in enumerate(vs):
        if v == (0, 0):
            continue
        compatible = [j for j, w in enumerate(vs) if _parallel(v, w)]
        if sum(theta[j] for j in compatible) + theta[6] > 0:
            return False
    # full sink plane with a proper source subset never violates a canonical
    # weight: theta . T = |S| - 6 <= 0; nothing to test
    return True


def _parallel(v, w) -> bool:
    return v[0] * w[1] - v[1] * w[0] == 0


# -- dimension-vector calculus ------------------------------------------------


def projective_dimension_vector(alg: GradedQuiverAlgebra, v: int) -> tuple[int, ...]:
    c = cartan_matrix(alg)
    return tuple(c[v][j] for j in range(alg.quiver.nvertices))


def injective_dimension_vector(alg: GradedQuiverAlgebra, v: int) -> tuple[int, ...]:
    c = cartan_matrix(alg)
    return tuple(c[j][v] for j in range(alg.quiver.nvertices))


def nakayama(alg: GradedQuiverAlgebra, v: int) -> tuple[int, ...]:
    """Image of the projective at v under the Nakayama functor: the injective."""
    return injective_dimension_vector(alg, v)


def reflect_at_sink(quiver: Quiver, d, t: int) -> tuple[int, ...]:
    if any(s == t for s, _, _ in quiver.arrows):
        raise ValueError(f"vertex {t} is not a sink")
    incoming = sum(d[s] for s, tt, _ in quiver.arrows if tt == t)
    out = list(d)
    out[t] = incoming - d[t]
    return tuple(out)


def one_point_extension_cartan(alg: GradedQuiverAlgebra, dim_vector) -> list[list[int]]:
    """Cartan matrix of the one-point extension by a module of this size."""
    c = cartan_matrix(alg)
    n = len(c)
    if len(dim_vector) != n:
        raise ValueError("dimension vector length mismatch")
    top = [1] + [int(v) for v in dim_vector]
    return [top] + [[0] + row for row in c]


def cartan_permutation_equivalent(c1, c2) -> bool:
    """Equality up to one simultaneous row/column permutation."""
    from itertools import permutations

    n = len(c1)
    if len(c2) != n:
        return False
    for perm in permutations(range(n)):
        if all(c1[i][j] == c2[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False


# -- hook lengths --------------------------------------------------------------


def hook_length_dimension(partition) -> int:
    """n! over the product of hook lengths, for a non-increasing partition."""
    parts = list(partition)
    if not parts or any(p <= 0 for p in parts):
        raise ValueError("partition entries must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition must be non-increasing")
    n = sum(parts)
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])]
    hooks = 1
    for r, p in enumerate(parts):
        for c in range(p):
            hooks *= (p - c) + (conj[c] - r) - 1
    dim, rem = divmod(factorial(n), hooks)
    if rem:
        raise ArithmeticError("hook length product does not divide n!")
    return dim
