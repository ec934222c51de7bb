"""Affine root-system data: Cartan matrices, marks, lattices, Weyl words.

Types are tagged "A2~1" (family letter, Kac subscript, twist).  Nodes are
numbered 0..n with 0 the affine node.  Lattice vectors are exact-rational
coordinate tuples in the bases {lambda_0, alpha_0, ..., alpha_n} (weight
side) and {lambda_0^v, alpha_0^v, ..., alpha_n^v} (coweight side).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction


_TAG_RE = re.compile(r"^([A-G])(\d+)~(\d)$")


@dataclass(frozen=True)
class AffineType:
    letter: str   # A..G
    subscript: int
    twist: int    # 1, 2 or 3

    @property
    def tag(self):
        return "%s%d~%d" % (self.letter, self.subscript, self.twist)

    @property
    def rank(self):
        """Number of non-affine nodes n (nodes are 0..n)."""
        L, N, r = self.letter, self.subscript, self.twist
        if r == 1:
            return N
        if (L, r) == ("A", 2):
            return (N + 1) // 2 if N % 2 else N // 2
        if (L, r) == ("D", 2):
            return N - 1
        if (L, r) == ("E", 2):
            return 4
        if (L, r) == ("D", 3):
            return 2
        raise ValueError("unknown affine type %s" % self.tag)

    def __str__(self):
        return self.tag


def parse_type(tag):
    m = _TAG_RE.match(tag.strip())
    if not m:
        raise ValueError("bad type tag %r (expected e.g. 'A2~1')" % tag)
    t = AffineType(m.group(1), int(m.group(2)), int(m.group(3)))
    cartan_data(t)  # validates family/rank
    return t


@dataclass(frozen=True)
class CartanData:
    type: AffineType
    matrix: tuple        # (n+1) x (n+1) integer rows
    a: tuple             # marks
    a_dual: tuple        # comarks
    d: tuple             # symmetrizers a_i^v / a_i, Fractions
    m: int               # denominator of the smallest d_i
    i_min: tuple         # nodes indexing the outer automorphism group

    @property
    def n(self):
        return len(self.a) - 1

    @property
    def nodes(self):
        return range(self.n + 1)

    def to_json(self):
        return json.dumps({
            "type": self.type.tag,
            "matrix": [list(r) for r in self.matrix],
            "a": list(self.a),
            "a_dual": list(self.a_dual),
            "d": [str(x) for x in self.d],
            "m": self.m,
            "i_min": list(self.i_min),
        }, sort_keys=True)


def _chain_matrix(n_nodes, edges):
    """Cartan matrix from a map (i, j) -> a_ij for i != j (default 0)."""
    mat = [[2 if i == j else 0 for j in range(n_nodes)]
           for i in range(n_nodes)]
    for (i, j), v in edges.items():
        mat[i][j] = v
    return tuple(tuple(r) for r in mat)


def _simple_edges(pairs):
    edges = {}
    for i, j in pairs:
        edges[(i, j)] = -1
        edges[(j, i)] = -1
    return edges


def _build(t, edges, a, a_dual, i_min):
    n1 = len(a)
    mat = _chain_matrix(n1, edges)
    d = tuple(Fraction(a_dual[i], a[i]) for i in range(n1))
    m = 1
    for x in d:
        m = m * x.denominator // __import__("math").gcd(m, x.denominator)
    return CartanData(t, mat, tuple(a), tuple(a_dual), d, m, tuple(i_min))


def cartan_data(t: AffineType) -> CartanData:
    L, N, r = t.letter, t.subscript, t.twist
    key = (L, r)
    if key == ("A", 1):
        if N == 1:
            return _build(t, {(0, 1): -2, (1, 0): -2}, [1, 1], [1, 1], [0, 1])
        if N < 1:
            raise ValueError("A_n^(1) needs n >= 1")
        n = N
        edges = _simple_edges([(i, i + 1) for i in range(n)] + [(n, 0)])
        ones = [1] * (n + 1)
        return _build(t, edges, ones, ones, list(range(n + 1)))
    if key == ("B", 1):
        if N < 3:
            raise ValueError("B_n^(1) needs n >= 3")
        n = N
        edges = _simple_edges([(0, 2), (1, 2)] +
                              [(i, i + 1) for i in range(2, n - 1)])
        edges[(n - 1, n)] = -1
        edges[(n, n - 1)] = -2
        a = [1, 1] + [2] * (n - 1)
        ad = [1, 1] + [2] * (n - 2) + [1]
        return _build(t, edges, a, ad, [0, 1])
    if key == ("C", 1):
        if N < 2:
            raise ValueError("C_n^(1) needs n >= 2")
        n = N
        edges = _simple_edges([(i, i + 1) for i in range(1, n - 1)])
        edges.update({(0, 1): -1, (1, 0): -2, (n - 1, n): -2, (n, n - 1): -1})
        a = [1] + [2] * (n - 1) + [1]
        ad = [1] * (n + 1)
        return _build(t, edges, a, ad, [0, n])
    if key == ("D", 1):
        if N < 4:
            raise ValueError("D_n^(1) needs n >= 4")
        n = N
        edges = _simple_edges([(0, 2), (1, 2), (n - 1, n - 2), (n, n - 2)] +
                              [(i, i + 1) for i in range(2, n - 2)])
        a = [1, 1] + [2] * (n - 3) + [1, 1]
        return _build(t, edges, a, list(a), [0, 1, n - 1, n])
    if key == ("E", 1):
        if N == 6:
            edges = _simple_edges([(1, 2), (2, 3), (3, 4), (4, 5),
                                   (3, 6), (6, 0)])
            a = [1, 1, 2, 3, 2, 1, 2]
            return _build(t, edges, a, list(a), [0, 1, 5])
        if N == 7:
            edges = _simple_edges([(i, i + 1) for i in range(6)] + [(3, 7)])
            a = [1, 2, 3, 4, 3, 2, 1, 2]
            return _build(t, edges, a, list(a), [0, 6])
        if N == 8:
            edges = _simple_edges([(i, i + 1) for i in range(7)] + [(5, 8)])
            a = [1, 2, 3, 4, 5, 6, 4, 2, 3]
            return _build(t, edges, a, list(a), [0])
        raise ValueError("E_n^(1) needs n in {6,7,8}")
    if key == ("F", 1):
        if N != 4:
            raise ValueError("F_n^(1) needs n = 4")
        edges = _simple_edges([(0, 1), (1, 2), (3, 4)])
        edges.update({(2, 3): -1, (3, 2): -2})
        return _build(t, edges, [1, 2, 3, 4, 2], [1, 2, 3, 2, 1], [0])
    if key == ("G", 1):
        if N != 2:
            raise ValueError("G_n^(1) needs n = 2")
        edges = _simple_edges([(0, 1)])
        edges.update({(1, 2): -1, (2, 1): -3})
        return _build(t, edges, [1, 2, 3], [1, 2, 1], [0])
    if key == ("A", 2):
        if N == 2:
            return _build(t, {(0, 1): -4, (1, 0): -1}, [2, 1], [1, 2], [0])
        if N % 2 == 0:          # A_{2n}^(2), n >= 2
            n = N // 2
            if n < 2:
                raise ValueError("A_{2n}^(2) needs 2n >= 4")
            edges = _simple_edges([(i, i + 1) for i in range(1, n - 1)])
            edges.update({(0, 1): -2, (1, 0): -1,
                          (n - 1, n): -2, (n, n - 1): -1})
            a = [2] * n + [1]
            ad = [1] + [2] * n
            return _build(t, edges, a, ad, [0])
        # A_{2n-1}^(2), n >= 3
        n = (N + 1) // 2
        if n < 3:
            raise ValueError("A_{2n-1}^(2) needs 2n-1 >= 5")
        edges = _simple_edges([(0, 2), (1, 2)] +
                              [(i, i + 1) for i in range(2, n - 1)])
        edges.update({(n - 1, n): -2, (n, n - 1): -1})
        a = [1, 1] + [2] * (n - 2) + [1]
        ad = [1, 1] + [2] * (n - 1)
        return _build(t, edges, a, ad, [0])
    if key == ("D", 2):
        n = N - 1
        if n < 2:
            raise ValueError("D_{n+1}^(2) needs n >= 2")
        edges = _simple_edges([(i, i + 1) for i in range(1, n - 1)])
        edges.update({(0, 1): -2, (1, 0): -1, (n - 1, n): -1, (n, n - 1): -2})
        a = [1] * (n + 1)
        ad = [1] + [2] * (n - 1) + [1]
        return _build(t, edges, a, ad, [0])
    if key == ("E", 2):
        if N != 6:
            raise ValueError("E_n^(2) needs n = 6")
        edges = _simple_edges([(0, 1), (1, 2), (3, 4)])
        edges.update({(2, 3): -2, (3, 2): -1})
        return _build(t, edges, [1, 2, 3, 2, 1], [1, 2, 3, 4, 2], [0])
    if key == ("D", 3):
        if N != 4:
            raise ValueError("D_n^(3) needs n = 4")
        edges = _simple_edges([(0, 1)])
        edges.update({(1, 2): -3, (2, 1): -1})
        return _build(t, edges, [1, 2, 1], [1, 2, 3], [0])
    raise ValueError("unknown affine type %s" % t.tag)


ALL_TYPE_TAGS = [
    "A1~1", "A2~1", "A3~1", "A4~1", "B3~1", "B4~1", "C2~1", "C3~1",
    "D4~1", "D5~1", "E6~1", "E7~1", "E8~1", "F4~1", "G2~1",
    "A2~2", "A4~2", "A6~2", "A5~2", "A7~2", "D3~2", "D4~2", "E6~2", "D4~3",
]


# ---------------------------------------------------------------------------
# Lattice vectors
# ---------------------------------------------------------------------------

class _Vector:
    """Coordinates (c_lambda, c_0, ..., c_n) over Fractions."""

    __slots__ = ("data", "coords")

    def __init__(self, data, coords):
        self.data = data
        self.coords = tuple(Fraction(c) for c in coords)

    def _like(self, coords):
        return type(self)(self.data, coords)

    def _check(self, other):
        if type(other) is not type(self) or other.data.type != self.data.type:
            raise TypeError("vector type mismatch")

    def __add__(self, other):
        self._check(other)
        return self._like([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return self._like([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return self._like([-a for a in self.coords])

    def __rmul__(self, c):
        c = Fraction(c)
        return self._like([c * a for a in self.coords])

    __mul__ = __rmul__

    def __eq__(self, other):
        return (type(other) is type(self)
                and self.data.type == other.data.type
                and self.coords == other.coords)

    def __hash__(self):
        return hash((type(self).__name__, self.data.type, self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__,
                           ", ".join(str(c) for c in self.coords))


class RootVector(_Vector):
    """Element of the weight side, basis {lambda_0, alpha_0, ..., alpha_n}."""


class CoweightVector(_Vector):
    """Element of the coweight side, basis {lambda_0^v, alpha_0^v, ...}."""


def root_basis(data, i):
    """alpha_i as a RootVector."""
    c = [0] * (data.n + 2)
    c[i + 1] = 1
    return RootVector(data, c)


def weight_lambda0(data):
    c = [0] * (data.n + 2)
    c[0] = 1
    return RootVector(data, c)


def coroot_basis(data, i):
    """alpha_i^v as a CoweightVector."""
    c = [0] * (data.n + 2)
    c[i + 1] = 1
    return CoweightVector(data, c)


def coweight_lambda0(data):
    c = [0] * (data.n + 2)
    c[0] = 1
    return CoweightVector(data, c)


def zero_root(data):
    return RootVector(data, [0] * (data.n + 2))


def zero_coweight(data):
    return CoweightVector(data, [0] * (data.n + 2))


def delta(data):
    """The null root sum_i a_i alpha_i."""
    return RootVector(data, [0] + list(data.a))


def pairing(x: RootVector, y: CoweightVector) -> Fraction:
    """<x, y> with <alpha_j, alpha_i^v> = a_ij, <alpha_i, lambda_0^v> =
    delta_i0, <lambda_0, alpha_i^v> = delta_i0, <lambda_0, lambda_0^v> = 0."""
    if x.data.type != y.data.type:
        raise TypeError("type mismatch in pairing")
    data = x.data
    xl, xa = x.coords[0], x.coords[1:]
    yl, ya = y.coords[0], y.coords[1:]
    total = xl * ya[0] + xa[0] * yl
    for j in range(data.n + 1):
        for i in range(data.n + 1):
            if xa[j] and ya[i]:
                total += xa[j] * data.matrix[i][j] * ya[i]
    return total


def bilinear_form(x: RootVector, y: RootVector) -> Fraction:
    """(x, y): symmetric, (alpha_i, alpha_j) = d_i a_ij,
    (alpha_i, lambda_0) = d_0 delta_i0, (lambda_0, lambda_0) = 0."""
    if x.data.type != y.data.type:
        raise TypeError("type mismatch in bilinear form")
    data = x.data
    xl, xa = x.coords[0], x.coords[1:]
    yl, ya = y.coords[0], y.coords[1:]
    total = data.d[0] * (xl * ya[0] + xa[0] * yl)
    for i in range(data.n + 1):
        for j in range(data.n + 1):
            if xa[i] and ya[j]:
                total += xa[i] * data.d[i] * data.matrix[i][j] * ya[j]
    return total


def nu(y: CoweightVector) -> RootVector:
    """Linear isomorphism: alpha_i^v -> d_i^{-1} alpha_i,
    lambda_0^v -> d_0^{-1} lambda_0."""
    data = y.data
    out = [Fraction(0)] * (data.n + 2)
    out[0] = y.coords[0] / data.d[0]
    for i in range(data.n + 1):
        out[i + 1] = y.coords[i + 1] / data.d[i]
    return RootVector(data, out)


def nu_inverse(x: RootVector) -> CoweightVector:
    data = x.data
    out = [Fraction(0)] * (data.n + 2)
    out[0] = x.coords[0] * data.d[0]
    for i in range(data.n + 1):
        out[i + 1] = x.coords[i + 1] * data.d[i]
    return CoweightVector(data, out)


def weyl_reflect(i, v):
    """s_i acting on either kind of lattice vector."""
    data = v.data
    if isinstance(v, CoweightVector):
        c = pairing(root_basis(data, i), v)
        return v - c * coroot_basis(data, i)
    c = pairing(v, coroot_basis(data, i))
    return v - c * root_basis(data, i)


def _solve_fundamental_coweight(data, i):
    """lambda_i^v = (a_i/a_0) lambda_0^v + x with x in span(alpha^v),
    <alpha_j, x> = delta_ij - (a_i/a_0) delta_j0, alpha_0^v coordinate 0.
    The lambda_0^v coefficient is forced: pairing with the null root gives
    <delta, lambda_i^v> = a_i and <delta, lambda_0^v> = a_0."""
    n1 = data.n + 1
    c_lam = Fraction(data.a[i], data.a[0])
    # system: <alpha_j, sum_k c_k alpha_k^v> = sum_k a_kj c_k = rhs_j;
    # kernel spanned by the marks; fix c_0 = 0.
    rows = [[Fraction(data.matrix[k][j]) for k in range(n1)] for j in range(n1)]
    rhs = [Fraction(1 if j == i else 0) - c_lam * (j == 0)
           for j in range(n1)]
    # eliminate with c_0 = 0: drop variable 0, solve least... the reduced
    # (n x n) system on variables 1..n is nonsingular (finite Cartan matrix).
    sub = [[rows[j][k] for k in range(1, n1)] for j in range(1, n1)]
    subr = [rhs[j] for j in range(1, n1)]
    sol = _gauss_solve(sub, subr)
    coords = [c_lam] + [Fraction(0)] + sol
    vec = CoweightVector(data, coords)
    # row 0 must hold automatically (rank argument); assert exactness
    if pairing(root_basis(data, 0), vec) != (1 if i == 0 else 0):
        raise AssertionError("fundamental coweight solve inconsistent")
    return vec


def _gauss_solve(mat, rhs):
    n = len(mat)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def fundamental_coweight(data, i):
    """lambda_i^v with <alpha_j, lambda_i^v> = delta_ij (normalized)."""
    if i == 0:
        return coweight_lambda0(data)
    return _solve_fundamental_coweight(data, i)


def embed_coweight(data, i) -> CoweightVector:
    """omega_i^v = a_0 lambda_i^v - a_i lambda_0^v; omega_0^v = 0."""
    if i == 0:
        return zero_coweight(data)
    lam_i = fundamental_coweight(data, i)
    lam_0 = coweight_lambda0(data)
    return data.a[0] * lam_i - data.a[i] * lam_0


def highest_root(data):
    """(theta, theta^v) with theta = sum_{i>0} a_i alpha_i and
    theta^v = nu^{-1}(theta / a_0)."""
    coords = [0, 0] + list(data.a[1:])
    theta = RootVector(data, coords)
    theta_v = nu_inverse(Fraction(1, data.a[0]) * theta)
    return theta, theta_v


# ---------------------------------------------------------------------------
# Length functions and diagram automorphisms
# ---------------------------------------------------------------------------

def is_a2n_even_cycle(data):
    """True for A_n^(1) with n even and n >= 2 (odd cycle, no 2-coloring)."""
    t = data.type
    return (t.letter, t.twist) == ("A", 1) and t.subscript >= 2 \
        and t.subscript % 2 == 0


def length_function(data, negate=False):
    """Map o: I -> {+1, -1} with o(i) = -o(j) on edges, o(0) = +1; in the
    odd-cycle case o(i) = (-1)^i instead.  Returns (o, o_ratio) where
    o_ratio(i, j) gives o_{i,j}."""
    n1 = data.n + 1
    if is_a2n_even_cycle(data):
        o = {i: (-1) ** i for i in range(n1)}

        def o_ratio(i, j):
            return (-1) ** ((j - i) % n1)
    else:
        o = {0: 1}
        queue = [0]
        while queue:
            i = queue.pop()
            for j in range(n1):
                if j != i and data.matrix[i][j] < 0:
                    if j in o:
                        if o[j] != -o[i]:
                            raise AssertionError("diagram not 2-colorable")
                    else:
                        o[j] = -o[i]
                        queue.append(j)
        for j in range(n1):
            o.setdefault(j, 1)

        def o_ratio(i, j):
            return o[i] * o[j]
    if negate:
        o = {i: -s for i, s in o.items()}
    return o, o_ratio


@dataclass(frozen=True)
class DiagramAutomorphism:
    name: str
    perm: tuple

    def __call__(self, i):
        return self.perm[i]

    def compose(self, other):
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        return DiagramAutomorphism("(%s*%s)" % (self.name, other.name), perm)

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return DiagramAutomorphism(self.name + "^-1", tuple(inv))

    @property
    def is_identity(self):
        return all(self.perm[i] == i for i in range(len(self.perm)))


def outer_automorphism_group(data):
    """The group Omega as a list of DiagramAutomorphism, identity first,
    with representatives named pi<i> for i in I_min."""
    t = data.type
    n = data.n
    n1 = n + 1
    ident = DiagramAutomorphism("pi0", tuple(range(n1)))
    if t.twist != 1 or data.i_min == (0,):
        return [ident]
    L, N = t.letter, t.subscript
    gens = {}
    if L == "A":
        for i in range(1, n1):
            gens[i] = tuple((j + i) % n1 for j in range(n1))
    elif L == "B":
        perm = list(range(n1))
        perm[0], perm[1] = 1, 0
        gens[1] = tuple(perm)
    elif L == "C":
        gens[n] = tuple(n - j for j in range(n1))
    elif L == "D":
        def mid_flip():
            perm = list(range(n1))
            for j in range(2, n - 1):
                perm[j] = n - j
            return perm
        p1 = list(range(n1))
        p1[0], p1[1], p1[n - 1], p1[n] = 1, 0, n, n - 1
        gens[1] = tuple(p1)
        if n % 2 == 0:
            pm = mid_flip()
            pm[0], pm[n - 1], pm[1], pm[n] = n - 1, 0, n, 1
            gens[n - 1] = tuple(pm)
            pn = mid_flip()
            pn[0], pn[n], pn[1], pn[n - 1] = n, 0, n - 1, 1
            gens[n] = tuple(pn)
        else:
            pm = mid_flip()
            # order-4 rotation 0 -> n-1 -> 1 -> n -> 0
            pm[0], pm[n - 1], pm[1], pm[n] = n - 1, 1, n, 0
            gens[n - 1] = tuple(pm)
            pn = mid_flip()
            pn[0], pn[n], pn[1], pn[n - 1] = n, 1, n - 1, 0
            gens[n] = tuple(pn)
    elif L == "E" and N == 6:
        gens[1] = (1, 5, 4, 3, 6, 0, 2)   # 0->1->5->0, 2->4->6->2, 3 fixed
        gens[5] = (5, 0, 6, 3, 2, 1, 4)   # inverse rotation
    elif L == "E" and N == 7:
        gens[6] = (6, 5, 4, 3, 2, 1, 0, 7)
    else:
        return [ident]
    out = [ident]
    for i in sorted(gens):
        out.append(DiagramAutomorphism("pi%d" % i, gens[i]))
    # close under composition (A_n rotations and D-type Kleinian/cyclic
    # groups are already closed; this is a safety net)
    perms = {g.perm for g in out}
    changed = True
    while changed:
        changed = False
        for g in list(out):
            for h in list(out):
                c = g.compose(h)
                if c.perm not in perms:
                    perms.add(c.perm)
                    out.append(DiagramAutomorphism("pi?", c.perm))
                    changed = True
    return out


def outer_automorphism(data, i):
    """The representative pi_i (i in I_min)."""
    for g in outer_automorphism_group(data):
        if g.name == "pi%d" % i:
            return g
    if i == 0:
        return DiagramAutomorphism("pi0", tuple(range(data.n + 1)))
    raise ValueError("no outer automorphism pi%d for %s" % (i, data.type.tag))


# ---------------------------------------------------------------------------
# Finite Weyl group words by greedy descent
# ---------------------------------------------------------------------------

def _finite_reflect_gamma(data, gamma, i):
    """s_i acting on a finite weight given by gamma_j = <x, alpha_j^v>,
    j = 1..n (index 0 of gamma is node 1)."""
    gi = gamma[i - 1]
    return [gamma[j - 1] - gi * data.matrix[j][i]
            for j in range(1, data.n + 1)]


def _descend_to_antidominant(data, gamma, allowed=None):
    """Greedy descent; returns the list of applied nodes, first-applied
    first.  The resulting Weyl element (rightmost factor first-applied) is
    the minimal one making gamma antidominant on the allowed subsystem."""
    nodes = allowed if allowed is not None else list(range(1, data.n + 1))
    word = []
    progress = True
    while progress:
        progress = False
        for i in nodes:
            if gamma[i - 1] > 0:
                gamma = _finite_reflect_gamma(data, gamma, i)
                word.append(i)
                progress = True
                break
    return word, gamma


def weyl_words(data):
    """Reduced words for w_0, w_{0i}, v_i = w_0 w_{0i}, and s_theta in the
    finite Weyl group on nodes 1..n.  A word [j_1,...,j_l] denotes the
    product s_{j_1} s_{j_2} ... s_{j_l} (leftmost applied last to vectors
    when composing right-to-left; here words are plain products)."""
    n = data.n
    # w_0: send the regular dominant weight (1,...,1) to antidominant
    applied, _ = _descend_to_antidominant(data, [Fraction(1)] * n)
    w0 = list(reversed(applied))
    out = {"w0": w0, "w0i": {}, "v": {}}
    for i in range(1, n + 1):
        allowed = [j for j in range(1, n + 1) if j != i]
        applied_i, _ = _descend_to_antidominant(
            data, [Fraction(1 if j != i else 0) for j in range(1, n + 1)],
            allowed)
        out["w0i"][i] = list(reversed(applied_i))
        gamma = [Fraction(1 if j == i else 0) for j in range(1, n + 1)]
        applied_v, _ = _descend_to_antidominant(data, gamma)
        out["v"][i] = list(reversed(applied_v))
        if len(out["v"][i]) + len(out["w0i"][i]) != len(w0):
            raise AssertionError("length identity l(v_i)+l(w_0i)=l(w_0) "
                                 "failed at node %d" % i)
    # s_theta: lower theta to a simple root
    theta, _ = highest_root(data)
    coords = list(theta.coords[2:])  # alpha_1..alpha_n coefficients
    lowering = []
    while True:
        simple = [j for j in range(1, n + 1)
                  if coords[j - 1] == 1 and
                  all(coords[k - 1] == 0 for k in range(1, n + 1) if k != j)]
        if simple:
            p = simple[0]
            break
        for j in range(1, n + 1):
            pair = sum(coords[k - 1] * data.matrix[j][k]
                       for k in range(1, n + 1))
            if pair > 0:
                new = coords[:]
                new[j - 1] -= pair
                if all(c >= 0 for c in new) and new != coords:
                    coords = new
                    lowering.append(j)
                    break
        else:
            raise AssertionError("could not lower theta to a simple root")
    out["s_theta"] = lowering + [p] + list(reversed(lowering))
    return out


def apply_word_coweight(data, word, v):
    """Apply the Weyl word (product s_{j_1}..s_{j_l}) to a lattice vector:
    rightmost reflection acts first."""
    for j in reversed(word):
        v = weyl_reflect(j, v)
    return v
