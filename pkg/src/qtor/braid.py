"""Words in the extended double affine braid group and their action on the
toroidal algebra.

Letters are T(i)^{+-1} for i in I, the vertical node lift T0v^{+-1}, the
diagram automorphisms pi_i, the horizontal twists rho_i, lattice letters
X[c_1,...,c_n] / Y[c_1,...,c_n] (coordinates in the fundamental-coweight
basis), the single-node loop twists chi_i, and (odd-cycle variant only) the
sign twists z_i.  Words have no normal form; equality is certified through
the extended affine Weyl shadow (a necessary condition) and through
agreement of the induced toroidal morphisms on generators.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import (CartanData, coroot_basis, highest_root,
                     is_a2n_even_cycle, nu, outer_automorphism, pairing,
                     root_basis, weyl_words)
from . import morphisms

_KINDS = ("T", "T0v", "pi", "rho", "X", "Y", "chi", "z")


class BraidLetter:
    """One generator-or-inverse of the extended double affine braid group."""

    __slots__ = ("kind", "node", "power", "coords")

    def __init__(self, kind, node=None, power=1, coords=None):
        if kind not in _KINDS:
            raise ValueError("unknown braid letter kind %r" % kind)
        self.kind = kind
        self.node = node
        self.power = power
        self.coords = tuple(coords) if coords is not None else None

    def inverse(self):
        if self.kind in ("X", "Y"):
            return BraidLetter(self.kind, coords=[-c for c in self.coords])
        if self.kind == "z":
            return self
        return BraidLetter(self.kind, self.node, -self.power)

    def _key(self):
        return (self.kind, self.node, self.power, self.coords)

    def __eq__(self, other):
        return isinstance(other, BraidLetter) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        mark = "'" if self.power < 0 else ""
        if self.kind == "T":
            return "T%d%s" % (self.node, mark)
        if self.kind == "T0v":
            return "T0v" + mark
        if self.kind in ("pi", "rho", "chi"):
            return "%s%d%s" % (self.kind, self.node, mark)
        if self.kind == "z":
            return "z%d" % self.node
        return "%s[%s]" % (self.kind, ",".join(str(c) for c in self.coords))

    __repr__ = __str__


def T(i, power=1):
    return BraidLetter("T", i, power)


def T0v(power=1):
    return BraidLetter("T0v", power=power)


def Omega(i, power=1):
    """The diagram automorphism pi_i (i in I_min)."""
    return BraidLetter("pi", i, power)


def Rho(i, power=1):
    return BraidLetter("rho", i, power)


def X(coords):
    return BraidLetter("X", coords=coords)


def Y(coords):
    return BraidLetter("Y", coords=coords)


def Chi(i, power=1):
    return BraidLetter("chi", i, power)


def Zeta(i):
    return BraidLetter("z", i)


def _unit(n, i, sign=1):
    return tuple(sign if j == i - 1 else 0 for j in range(n))


def _free_reduce(letters, variant):
    out = []
    for letter in letters:
        if letter.kind in ("X", "Y") and letter.coords is not None \
                and not any(letter.coords):
            continue
        if out:
            prev = out[-1]
            if letter.kind in ("X", "Y") and prev.kind == letter.kind:
                merged = tuple(a + b for a, b in
                               zip(prev.coords, letter.coords))
                out.pop()
                if any(merged):
                    out.append(BraidLetter(letter.kind, coords=merged))
                continue
            if letter.kind == "z" and prev == letter:
                out.pop()
                continue
            if letter.kind in ("T", "T0v", "rho") \
                    and prev.kind == letter.kind \
                    and prev.node == letter.node \
                    and prev.power == -letter.power:
                out.pop()
                continue
            # pi letters keep their winding in the odd-cycle variant, where
            # pi_1 has twice the order of its underlying permutation
            if letter.kind == "pi" and not variant \
                    and prev.kind == "pi" and prev.node == letter.node \
                    and prev.power == -letter.power:
                out.pop()
                continue
        out.append(letter)
    return tuple(out)


class BraidWord:
    """A free-reduced word over the braid alphabet, bound to an affine type.

    ``variant`` marks the modified group used for odd-cycle toroidal types;
    z letters are only legal there and plain/variant words do not mix.
    """

    def __init__(self, data: CartanData, letters=(), variant=False):
        self.data = data
        self.variant = bool(variant)
        letters = tuple(letters)
        if not self.variant and any(l.kind == "z" for l in letters):
            raise TypeError("z letters require a variant word")
        for l in letters:
            if l.kind in ("X", "Y") and len(l.coords) != data.n:
                raise ValueError("lattice letter %s needs %d coordinates"
                                 % (l, data.n))
        self.letters = _free_reduce(letters, self.variant)

    def __mul__(self, other):
        if isinstance(other, BraidLetter):
            other = BraidWord(self.data, [other], self.variant)
        if self.data.type != other.data.type or self.variant != other.variant:
            raise TypeError("cannot multiply words of different kinds")
        return BraidWord(self.data, self.letters + other.letters,
                         self.variant)

    def inverse(self):
        return BraidWord(self.data,
                         [l.inverse() for l in reversed(self.letters)],
                         self.variant)

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        out = BraidWord(self.data, (), self.variant)
        for _ in range(abs(e)):
            out = out * base
        return out

    def __eq__(self, other):
        return (isinstance(other, BraidWord)
                and self.data.type == other.data.type
                and self.variant == other.variant
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.data.type, self.variant, self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(l) for l in self.letters) or "1"

    __repr__ = __str__


def word(data, letters, variant=None):
    if variant is None:
        variant = is_a2n_even_cycle(data)
    return BraidWord(data, letters, variant)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def parse_word(data, text, variant=None):
    """Parse whitespace-separated letters: "T3", "T3'" (inverse), "T0v",
    "pi1", "rho2", "chi0", "z0", "X[0,1]", "Y[2,-1]"."""
    letters = []
    for tok in text.split():
        power = 1
        if tok.endswith("'"):
            power, tok = -1, tok[:-1]
        if tok.startswith(("X[", "Y[")) and tok.endswith("]"):
            coords = [int(c) * power for c in tok[2:-1].split(",")]
            letters.append(BraidLetter(tok[0], coords=coords))
            continue
        if tok == "T0v":
            letters.append(T0v(power))
            continue
        for kind in ("pi", "rho", "chi", "z", "T"):
            if tok.startswith(kind) and tok[len(kind):].isdigit():
                i = int(tok[len(kind):])
                if kind == "z" and power != 1:
                    raise ValueError("z letters are involutions; no inverse "
                                     "marker")
                letters.append(BraidLetter("z" if kind == "z" else kind,
                                           i, power))
                break
        else:
            raise ValueError("cannot parse braid letter %r" % tok)
    return word(data, letters, variant)


def print_word(w: BraidWord) -> str:
    return str(w)


# ---------------------------------------------------------------------------
# Presentation conversions
# ---------------------------------------------------------------------------

def _v_word(data, i):
    return weyl_words(data)["v"][i]


def _theta_coweight_coords(data):
    """theta^v in fundamental-coweight coordinates."""
    _, theta_v = highest_root(data)
    a0 = data.a[0]
    return tuple(Fraction(pairing(root_basis(data, k), theta_v), a0)
                 for k in range(1, data.n + 1))


def _s_theta_inverse_letters(data):
    return [T(j, -1) for j in reversed(weyl_words(data)["s_theta"])]


def bernstein_to_coxeter(w: BraidWord) -> BraidWord:
    """Eliminate lattice letters: Y over the pi_i T_{v_i^{-1}}^{-1} words,
    X over the rho_i T_{v_i} words, with X_{theta^v} T_{s_theta}^{-1}
    collapsed to the T0v letter first."""
    data = w.data
    words = weyl_words(data)
    theta_c = _theta_coweight_coords(data)
    s_theta_inv = tuple(_s_theta_inverse_letters(data))
    letters = list(w.letters)

    # peephole: X_{theta^v} followed by the lift of s_theta^{-1} is T_0^v
    out = []
    pos = 0
    while pos < len(letters):
        l = letters[pos]
        m = len(s_theta_inv)
        if l.kind == "X" and tuple(map(Fraction, l.coords)) == theta_c \
                and tuple(letters[pos + 1:pos + 1 + m]) == s_theta_inv:
            out.append(T0v())
            pos += 1 + m
            continue
        out.append(l)
        pos += 1

    expanded = []
    for l in out:
        if l.kind not in ("X", "Y"):
            expanded.append(l)
            continue
        for i in range(1, data.n + 1):
            c = l.coords[i - 1]
            if c == int(c):
                c = int(c)
            else:
                raise ValueError("lattice letter %s is outside the "
                                 "fundamental-coweight lattice" % l)
            if c == 0:
                continue
            if i not in data.i_min:
                raise ValueError("no conversion word at non-minuscule "
                                 "node %d" % i)
            v_word = words["v"][i]
            if l.kind == "Y":
                # Y_{beta_i} = pi_i T_{v_i^{-1}}^{-1}
                unit = [Omega(i)] + [T(j, -1) for j in v_word]
            else:
                # X_{omega_i^v} = rho_i T_{v_i}
                unit = [Rho(i)] + [T(j) for j in v_word]
            if c < 0:
                unit = [x.inverse() for x in reversed(unit)]
            expanded.extend(unit * abs(c))
    return BraidWord(data, expanded, w.variant)


def _expand_primitive(w: BraidWord):
    """Rewrite over {T(i), X, pi, z} using the Bernstein/Table-1 words for
    T0v, rho and Y letters."""
    data = w.data
    words = weyl_words(data)
    out = []
    for l in w.letters:
        if l.kind == "T0v":
            unit = [X(_theta_coweight_coords(data))] \
                + _s_theta_inverse_letters(data)
        elif l.kind == "rho":
            v_word = words["v"][l.node]
            unit = [X(_unit(data.n, l.node))] \
                + [T(j, -1) for j in reversed(v_word)]
        elif l.kind == "Y":
            # Y_mu = prod_i (pi_i T_{v_i^{-1}}^{-1})^{c_i}
            unit = []
            for i in range(1, data.n + 1):
                c = l.coords[i - 1]
                if c and i not in data.i_min:
                    raise ValueError("no conversion word at non-minuscule "
                                     "node %d" % i)
                base = [Omega(i)] + [T(j, -1) for j in words["v"][i]]
                if c < 0:
                    base = [x.inverse() for x in reversed(base)]
                unit.extend(base * abs(int(c)))
        else:
            out.append(l)
            continue
        if l.kind != "Y" and l.power < 0:
            unit = [x.inverse() for x in reversed(unit)]
        out.extend(unit)
    return out


# ---------------------------------------------------------------------------
# The involutions
# ---------------------------------------------------------------------------

def _untwisted_only(w):
    if w.data.type.twist != 1:
        raise ValueError("the duality involutions need an untwisted type")


def dual_node(data, i):
    """i* with w_0(omega_i^v) = -omega_{i*}^v."""
    vec = [Fraction(k == i - 1) for k in range(data.n)]
    for j in weyl_words(data)["w0"]:
        vec = list(_mat_vec(_reflection_matrix(data, j), vec))
    for k in range(data.n):
        if vec[k] == -1 and all(vec[m] == 0 for m in range(data.n)
                                if m != k):
            return k + 1
    raise AssertionError("w_0 does not negate a fundamental coweight")


def t_involution(w: BraidWord) -> BraidWord:
    """The duality anti-involution: reverses words, inverts T_1..T_n,
    exchanges the X and Y lattices, pi_i with rho_{i*}, and T_0 with
    (T_0^v)^{-1}."""
    _untwisted_only(w)
    data = w.data
    out = []
    for l in reversed(w.letters):
        if l.kind == "T" and l.node == 0:
            out.append(T0v(-l.power))
        elif l.kind == "T0v":
            out.append(T(0, -l.power))
        elif l.kind == "T":
            out.append(T(l.node, -l.power))
        elif l.kind == "X":
            out.append(Y([-c for c in l.coords]))
        elif l.kind == "Y":
            out.append(X([-c for c in l.coords]))
        elif l.kind == "pi":
            out.append(Rho(dual_node(data, l.node), l.power))
        elif l.kind == "rho":
            out.append(Omega(dual_node(data, l.node), l.power))
        elif l.kind in ("z", "chi"):
            out.append(l)
        else:
            raise ValueError("no duality image for letter %s" % l)
    return BraidWord(data, out, w.variant)


def gamma_v(w: BraidWord) -> BraidWord:
    """Inverts T_0..T_n and every X letter, fixing the pi_i."""
    _untwisted_only(w)
    out = []
    for l in _expand_primitive(w):
        if l.kind == "T":
            out.append(T(l.node, -l.power))
        elif l.kind == "X":
            out.append(X([-c for c in l.coords]))
        elif l.kind in ("pi", "z", "chi"):
            out.append(l)
        else:
            raise ValueError("no vertical image for letter %s" % l)
    return BraidWord(w.data, out, w.variant)


def gamma_h(w: BraidWord) -> BraidWord:
    """The horizontal counterpart t . gamma_v . t."""
    return t_involution(gamma_v(t_involution(w)))


# ---------------------------------------------------------------------------
# Extended affine Weyl shadow
# ---------------------------------------------------------------------------

def _eye(n):
    return [[Fraction(k == j) for j in range(n)] for k in range(n)]


def _mat_vec(mat, vec):
    return tuple(sum(row[j] * vec[j] for j in range(len(vec)))
                 for row in mat)


def _mat_mul(m1, m2):
    cols = [_mat_vec(m1, col) for col in zip(*m2)]
    return [list(r) for r in zip(*cols)]


def _mat_inv(mat):
    n = len(mat)
    aug = [list(row) + [Fraction(k == j) for j in range(n)]
           for k, row in enumerate(mat)]
    for col in range(n):
        p = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[p] = aug[p], aug[col]
        piv = aug[col][col]
        aug[col] = [x / piv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class WeylShadow:
    """Two translation sectors over a common Weyl part: a classical one
    (``matrix``/``ty``, fundamental-coweight coordinates, carrying the Y
    lattice) and an affine one (``loop_matrix``/``tchi``, coordinates over
    all nodes, carrying X letters and loop twists).  The central extension
    is projected away, so equal shadows are a necessary condition for word
    equality, not a sufficient one."""

    def __init__(self, matrix, ty, loop_matrix, tchi):
        self.matrix = tuple(tuple(row) for row in matrix)
        self.ty = tuple(ty)
        self.loop_matrix = tuple(tuple(row) for row in loop_matrix)
        self.tchi = tuple(tchi)

    @staticmethod
    def identity(n):
        return WeylShadow(_eye(n), [Fraction(0)] * n,
                          _eye(n + 1), [Fraction(0)] * (n + 1))

    def __mul__(self, other):
        return WeylShadow(
            _mat_mul(self.matrix, other.matrix),
            tuple(a + b for a, b in
                  zip(self.ty, _mat_vec(self.matrix, other.ty))),
            _mat_mul(self.loop_matrix, other.loop_matrix),
            tuple(a + b for a, b in
                  zip(self.tchi, _mat_vec(self.loop_matrix, other.tchi))))

    def inverse(self):
        inv = _mat_inv(self.matrix)
        linv = _mat_inv(self.loop_matrix)
        return WeylShadow(inv, [-x for x in _mat_vec(inv, self.ty)],
                          linv, [-x for x in _mat_vec(linv, self.tchi)])

    def _key(self):
        return (self.matrix, self.ty, self.loop_matrix, self.tchi)

    def __eq__(self, other):
        return isinstance(other, WeylShadow) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "WeylShadow(matrix=%r, ty=%r, loop=%r, tchi=%r)" % self._key()


def _reflection_matrix(data, i):
    """s_i (i >= 1) on fundamental-coweight coordinates: omega_j^v maps to
    omega_j^v - delta_ij alpha_i^v."""
    n = data.n
    a0 = data.a[0]
    alpha_iv = [Fraction(pairing(root_basis(data, k), coroot_basis(data, i)),
                         a0) for k in range(1, n + 1)]
    mat = _eye(n)
    for k in range(n):
        mat[k][i - 1] -= alpha_iv[k]
    return mat


def _loop_reflection_matrix(data, i):
    """s_i (any node) on loop-twist coordinates: e_i maps to
    e_i - sum_j a_ij e_j, fixing the other basis vectors."""
    n1 = data.n + 1
    mat = _eye(n1)
    for k in range(n1):
        mat[k][i] -= data.matrix[i][k]
    return mat


def _chi_coords(data, classical):
    """The loop-twist vector of a classical translation: omega_i^v twists
    node i once and node 0 by -a_i."""
    n1 = data.n + 1
    out = [Fraction(0)] * n1
    for i in range(1, n1):
        c = Fraction(classical[i - 1])
        out[i] += c
        out[0] -= c * data.a[i]
    return tuple(out)


def _letter_shadow(data, letter):
    n = data.n
    ident = WeylShadow.identity(n)
    if letter.kind == "z":
        return ident
    if letter.kind == "T" and letter.node != 0:
        return WeylShadow(_reflection_matrix(data, letter.node),
                          [Fraction(0)] * n,
                          _loop_reflection_matrix(data, letter.node),
                          [Fraction(0)] * (n + 1))
    if letter.kind == "T":
        # T_0 = T_{s_theta}^{-1} Y_{-theta^v}; on loop twists it reflects
        # at node 0
        theta_c = _theta_coweight_coords(data)
        mat = _eye(n)
        for j in weyl_words(data)["s_theta"]:
            mat = _mat_mul(mat, _reflection_matrix(data, j))
        ty = _mat_vec(mat, [-c for c in theta_c])
        return WeylShadow(mat, ty, _loop_reflection_matrix(data, 0),
                          [Fraction(0)] * (n + 1))
    if letter.kind == "chi":
        tchi = [Fraction(0)] * (n + 1)
        tchi[letter.node] = Fraction(letter.power)
        return WeylShadow(_eye(n), [Fraction(0)] * n, _eye(n + 1), tchi)
    if letter.kind == "X":
        return WeylShadow(_eye(n), [Fraction(0)] * n, _eye(n + 1),
                          _chi_coords(data, letter.coords))
    if letter.kind == "pi":
        # classical part from pi_i = Y_{beta_i} T_{v_i^{-1}}; the loop
        # twists are permuted along the diagram
        perm = outer_automorphism(data, letter.node)
        mat = _eye(n)
        for j in reversed(weyl_words(data)["v"][letter.node]):
            mat = _mat_mul(mat, _reflection_matrix(data, j))
        lmat = [[Fraction(perm(j) == k) for j in range(n + 1)]
                for k in range(n + 1)]
        s = WeylShadow(mat, _unit(n, letter.node), lmat,
                       [Fraction(0)] * (n + 1))
        return s.inverse() if letter.power < 0 else s
    if letter.kind == "Y":
        # classical translation; the loop-twist conjugation follows from
        # the pi_i T_{v_i^{-1}}^{-1} expansion
        out = ident
        for i in range(1, n + 1):
            c = int(letter.coords[i - 1])
            if not c:
                continue
            if i not in data.i_min:
                raise ValueError("no shadow expansion at non-minuscule "
                                 "node %d" % i)
            lmat = _eye(n + 1)
            for j in weyl_words(data)["v"][i]:
                lmat = _mat_mul(lmat, _loop_reflection_matrix(data, j))
            perm = outer_automorphism(data, i)
            pmat = [[Fraction(perm(j) == k) for j in range(n + 1)]
                    for k in range(n + 1)]
            unit = WeylShadow(_eye(n), _unit(n, i),
                              _mat_mul(pmat, lmat),
                              [Fraction(0)] * (n + 1))
            if c < 0:
                unit = unit.inverse()
            for _ in range(abs(c)):
                out = out * unit
        return out
    if letter.kind == "rho":
        v_word = weyl_words(data)["v"][letter.node]
        s = _letter_shadow(data, X(_unit(n, letter.node)))
        for j in reversed(v_word):
            s = s * _letter_shadow(data, T(j)).inverse()
        return s.inverse() if letter.power < 0 else s
    if letter.kind == "T0v":
        s = _letter_shadow(data, X(_theta_coweight_coords(data)))
        for j in reversed(weyl_words(data)["s_theta"]):
            s = s * _letter_shadow(data, T(j)).inverse()
        return s.inverse() if letter.power < 0 else s
    raise ValueError("no shadow for letter %s" % letter)


def weyl_shadow(w: BraidWord) -> WeylShadow:
    """The image in the (doubly) extended affine Weyl group: T_i -> s_i,
    X -> loop-twist translation, Y -> classical translation, pi_i -> its
    Weyl image; z letters vanish."""
    out = WeylShadow.identity(w.data.n)
    for letter in w.letters:
        out = out * _letter_shadow(w.data, letter)
    return out


# ---------------------------------------------------------------------------
# The action on the toroidal algebra
# ---------------------------------------------------------------------------

def letter_morphism(data, letter):
    if letter.kind == "T":
        make = (morphisms.toroidal_T if letter.power > 0
                else morphisms.toroidal_T_inv)
        return make(data, letter.node)
    if letter.kind == "pi":
        pi = outer_automorphism(data, letter.node)
        return morphisms.S_diagram(data, pi, inverse=letter.power < 0)
    if letter.kind == "rho":
        return morphisms.rho_coweight(data, letter.node,
                                      inverse=letter.power < 0)
    if letter.kind == "chi":
        return morphisms.X_shift(data, letter.node,
                                 inverse=letter.power < 0)
    if letter.kind == "z":
        return morphisms.zeta(data, letter.node)
    if letter.kind == "X":
        parts = []
        for i in range(1, data.n + 1):
            c = int(letter.coords[i - 1])
            parts.extend([morphisms.Z_coweight(data, i, inverse=c < 0)]
                         * abs(c))
        if not parts:
            return morphisms.identity_morphism()
        return morphisms.compose(*parts)
    if letter.kind == "Y":
        parts = []
        for i in range(1, data.n + 1):
            c = int(letter.coords[i - 1])
            parts.extend([morphisms.Y_coweight(data, i, inverse=c < 0)]
                         * abs(c))
        if not parts:
            return morphisms.identity_morphism()
        return morphisms.compose(*parts)
    if letter.kind == "T0v":
        unit = [X(_theta_coweight_coords_int(data))] \
            + _s_theta_inverse_letters(data)
        if letter.power < 0:
            unit = [x.inverse() for x in reversed(unit)]
        return morphisms.compose(*[letter_morphism(data, l) for l in unit])
    raise ValueError("no morphism for letter %s" % letter)


def _theta_coweight_coords_int(data):
    coords = _theta_coweight_coords(data)
    if any(c.denominator != 1 for c in coords):
        raise ValueError("theta^v is not in the fundamental-coweight "
                         "lattice for %s" % data.type.tag)
    return tuple(int(c) for c in coords)


def word_morphism(w: BraidWord):
    """The composed toroidal morphism, leftmost letter outermost."""
    if not w.letters:
        return morphisms.identity_morphism()
    return morphisms.compose(*[letter_morphism(w.data, l)
                               for l in w.letters])


def act(w: BraidWord, expr):
    return word_morphism(w).apply(expr)


# ---------------------------------------------------------------------------
# Defining relations as word pairs
# ---------------------------------------------------------------------------

def relation_suite_braid(data: CartanData):
    """The defining relations of the extended double affine braid group
    (with the odd-cycle variant's z-twisted forms) as (id, lhs, rhs) word
    pairs whose toroidal actions must agree on every finite-presentation
    generator."""
    variant = is_a2n_even_cycle(data)
    n1 = data.n + 1
    W = lambda letters: BraidWord(data, letters, variant)
    pairs = []

    # Coxeter braid relations among the affine T_i
    for i in range(n1):
        for j in range(i + 1, n1):
            prod = data.matrix[i][j] * data.matrix[j][i]
            m = {0: 2, 1: 3, 2: 4, 3: 6}[prod]
            lhs = [T(i) if s % 2 == 0 else T(j) for s in range(m)]
            rhs = [T(j) if s % 2 == 0 else T(i) for s in range(m)]
            pairs.append(("braid.%d.%d" % (i, j), W(lhs), W(rhs)))

    # pi T_i pi^{-1} = T_{pi(i)}
    for p in [k for k in data.i_min if k != 0]:
        perm = outer_automorphism(data, p)
        for i in range(n1):
            pairs.append(("conj.pi%d.T%d" % (p, i),
                          W([Omega(p), T(i), Omega(p, -1)]),
                          W([T(perm(i))])))

    # the loop-twist lattice is abelian
    for i in range(n1):
        for j in range(i + 1, n1):
            pairs.append(("chi.comm.%d.%d" % (i, j),
                          W([Chi(i), Chi(j)]), W([Chi(j), Chi(i)])))

    # T_i chi_j = chi_j T_i for i != j
    for i in range(n1):
        for j in range(n1):
            if i != j:
                pairs.append(("chi.fix.%d.%d" % (i, j),
                              W([T(i), Chi(j)]), W([Chi(j), T(i)])))

    # T_i^{-1} chi_i T_i^{-1} = chi_i prod_j chi_j^{-a_ij}
    for i in range(n1):
        rhs = [Chi(i)]
        for j in range(n1):
            a = data.matrix[i][j]
            rhs.extend([Chi(j, -1 if a > 0 else 1)] * abs(a))
        if variant and i == 0:
            # odd-cycle twist at the far end of the wrap-around edge
            rhs = [Zeta(n1 - 1)] + rhs
        elif variant and i == n1 - 1:
            rhs = [Zeta(0)] + rhs
        pairs.append(("chi.cross.%d" % i,
                      W([T(i, -1), Chi(i), T(i, -1)]), W(rhs)))

    # pi_1 conjugates the loop twists around the cycle, with a z_0 twist on
    # the wrap-around letter in the odd-cycle variant
    for p in [k for k in data.i_min if k != 0][:1]:
        perm = outer_automorphism(data, p)
        for j in range(n1):
            rhs = [Chi(perm(j))]
            if variant and perm(j) == 0:
                rhs = [Zeta(0), Chi(0)]
            pairs.append(("chi.rot.pi%d.%d" % (p, j),
                          W([Omega(p), Chi(j), Omega(p, -1)]), W(rhs)))
        if variant:
            order = 2 * n1
            pairs.append(("pi%d.order" % p, W([Omega(p)] * order), W([])))
    return pairs
