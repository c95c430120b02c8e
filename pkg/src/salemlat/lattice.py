"""Integer lattices with symmetric bilinear forms.

Signatures come from exact symmetric reduction over the rationals,
sublattice questions (saturation, primitivity, complements, indices,
discriminant groups) from Smith normal form, and short vectors of a
definite form from Fincke-Pohst enumeration with exact rational LDL^T
bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import floor, lcm

from . import linalg
from .linalg import IntMatrix, IntVector
from .rational import floor_sqrt


class IndefiniteLatticeError(ValueError):
    pass


class DegenerateLatticeError(ValueError):
    pass


class RadicalRankError(ValueError):
    pass


class UnsupportedSignatureError(ValueError):
    pass


@dataclass(frozen=True)
class GramLattice:
    """Free Z-module of finite rank with an integer symmetric bilinear form."""

    gram: IntMatrix

    def __post_init__(self) -> None:
        g = self.gram
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"gram matrix not symmetric at ({i}, {j})")

    @staticmethod
    def from_rows(rows) -> "GramLattice":
        return GramLattice(linalg.freeze(rows))

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def pairing(self, x, y) -> int:
        return sum(xi * sum(g * yj for g, yj in zip(row, y))
                   for xi, row in zip(x, self.gram))

    def norm(self, x) -> int:
        return self.pairing(x, x)

    def determinant(self) -> int:
        return linalg.det_bareiss(self.gram)

    def __repr__(self) -> str:
        return f"GramLattice(rank={self.rank})"


def hyperbolic_plane() -> GramLattice:
    return GramLattice.from_rows([[0, 1], [1, 0]])


# Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to node 4
_E8_EDGES = ((1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8))


def e8_minus_one() -> GramLattice:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for a, b in _E8_EDGES:
        g[a - 1][b - 1] = 1
        g[b - 1][a - 1] = 1
    return GramLattice.from_rows(g)


def diagonal_lattice(entries) -> GramLattice:
    n = len(entries)
    return GramLattice.from_rows(
        [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def direct_sum(*lattices: GramLattice) -> GramLattice:
    total = sum(l.rank for l in lattices)
    g = [[0] * total for _ in range(total)]
    offset = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                g[offset + i][offset + j] = lat.gram[i][j]
        offset += lat.rank
    return GramLattice.from_rows(g)


class SignatureTriple(tuple):
    """(n_plus, n_zero, n_minus)."""

    def __new__(cls, n_plus: int, n_zero: int, n_minus: int):
        return super().__new__(cls, (n_plus, n_zero, n_minus))

    @property
    def n_plus(self) -> int:
        return self[0]

    @property
    def n_zero(self) -> int:
        return self[1]

    @property
    def n_minus(self) -> int:
        return self[2]


class LatticeClass(Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    OTHER = "other"


def signature_with_basis(lattice: GramLattice):
    """Exact diagonalization by congruence.

    Returns (SignatureTriple, diag, basis) where basis is a list of
    rational rows b_i with b_i G b_i^T = diag[i] and b_i G b_j^T = 0. The
    rows witness the sign counts exactly.
    """
    n = lattice.rank
    a = [[Fraction(x) for x in row] for row in lattice.gram]
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def sym_add(dst: int, src: int, f: Fraction):
        # basis[dst] += f * basis[src], updating the form congruently
        for j in range(n):
            a[dst][j] += f * a[src][j]
        for i in range(n):
            a[i][dst] += f * a[i][src]
        for j in range(n):
            basis[dst][j] += f * basis[src][j]

    def swap(i: int, j: int):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        basis[i], basis[j] = basis[j], basis[i]

    for k in range(n):
        # full pivoting on the diagonal of the trailing block
        piv = None
        best = None
        for i in range(k, n):
            v = abs(a[i][i])
            if v != 0 and (best is None or v > best):
                best = v
                piv = i
        if piv is None:
            off = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                break  # trailing block is zero
            sym_add(off[0], off[1], Fraction(1))
            piv = off[0]
        if piv != k:
            swap(k, piv)
        for i in range(k + 1, n):
            if a[i][k] != 0:
                sym_add(i, k, -a[i][k] / a[k][k])
    diag = [a[i][i] for i in range(n)]
    plus = sum(1 for d in diag if d > 0)
    minus = sum(1 for d in diag if d < 0)
    zero = n - plus - minus
    return SignatureTriple(plus, zero, minus), diag, basis


def signature(lattice: GramLattice) -> SignatureTriple:
    sig, _, _ = signature_with_basis(lattice)
    return sig


def definiteness_witness(lattice: GramLattice, wanted_sign: int) -> IntVector | None:
    """An integer vector whose norm has the wanted sign (+1, 0 or -1), if any."""
    _, diag, basis = signature_with_basis(lattice)
    for d, row in zip(diag, basis):
        if (d > 0) - (d < 0) == wanted_sign:
            denom = lcm(*[x.denominator for x in row])
            vec = tuple(int(x * denom) for x in row)
            if wanted_sign == 0 and lattice.norm(vec) != 0:
                continue
            return vec
    return None


def classify(lattice: GramLattice) -> LatticeClass:
    sig = signature(lattice)
    r = lattice.rank
    if sig == (1, 0, r - 1):
        return LatticeClass.HYPERBOLIC
    if sig == (0, 1, r - 1):
        return LatticeClass.PARABOLIC
    if sig == (0, 0, r):
        return LatticeClass.ELLIPTIC
    return LatticeClass.OTHER


@dataclass(frozen=True)
class SublatticeEmbedding:
    """Sublattice given by basis rows in the coordinates of an ambient lattice."""

    ambient: GramLattice
    basis: IntMatrix

    def __post_init__(self) -> None:
        if self.basis and linalg.rational_rank(self.basis) != len(self.basis):
            raise ValueError("basis rows must be linearly independent over Q")
        for row in self.basis:
            if len(row) != self.ambient.rank:
                raise ValueError("basis row length must match the ambient rank")

    @staticmethod
    def from_rows(ambient: GramLattice, rows) -> "SublatticeEmbedding":
        return SublatticeEmbedding(ambient, linalg.freeze(rows))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def induced_gram(self) -> GramLattice:
        g = self.ambient.gram
        bg = linalg.mat_mul(self.basis, g)
        return GramLattice(linalg.mat_mul(bg, linalg.transpose(self.basis)))

    def spans_same(self, other: "SublatticeEmbedding") -> bool:
        return (linalg.hermite_normal_form(self.basis)
                == linalg.hermite_normal_form(other.basis))


def smith_normal_form(m: IntMatrix):
    """(U, D, V) with U m V = D diagonal, non-negative, divisibility chain."""
    return linalg.smith_normal_form(m)


def saturation(emb: SublatticeEmbedding) -> SublatticeEmbedding:
    """Minimal primitive sublattice containing the embedding.

    With U B V = D, the rows of V^{-1} are a Z-basis of the ambient whose
    first r members span the rational row space of B; being part of a
    basis they span a primitive sublattice.
    """
    if not emb.basis:
        return emb
    _, _, v = linalg.smith_normal_form(emb.basis)
    v_inv = linalg.unimodular_inverse(v)
    rows = v_inv[: len(emb.basis)]
    return SublatticeEmbedding(emb.ambient, linalg.hermite_normal_form(rows))


def is_primitive(emb: SublatticeEmbedding) -> bool:
    if not emb.basis:
        return True
    diag = linalg.snf_diagonal(emb.basis)
    return all(d == 1 for d in diag)


def orthogonal_complement(emb: SublatticeEmbedding) -> SublatticeEmbedding:
    """All ambient vectors pairing to zero with the embedding; primitive."""
    pairing_rows = linalg.mat_mul(emb.basis, emb.ambient.gram)
    kernel = linalg.integer_kernel(pairing_rows)
    return SublatticeEmbedding(emb.ambient, linalg.hermite_normal_form(kernel))


def index_of_sum(a: SublatticeEmbedding, b: SublatticeEmbedding) -> int | None:
    """Index of a + b in the ambient lattice; None when not of full rank."""
    if a.ambient != b.ambient:
        raise ValueError("embeddings must share an ambient lattice")
    stacked = linalg.row_stack(a.basis, b.basis)
    diag = linalg.snf_diagonal(stacked)
    nonzero = [d for d in diag if d != 0]
    if len(nonzero) < a.ambient.rank:
        return None
    idx = 1
    for d in nonzero:
        idx *= d
    return idx


@dataclass(frozen=True)
class DiscriminantGroup:
    invariant_factors: tuple[int, ...]
    order: int


def discriminant_group(lattice: GramLattice) -> DiscriminantGroup:
    """Invariant factors of coker(gram), the dual quotient L*/L."""
    det = lattice.determinant()
    if det == 0:
        raise DegenerateLatticeError("discriminant group needs a nondegenerate form")
    diag = linalg.snf_diagonal(lattice.gram)
    factors = tuple(d for d in diag if d > 1)
    order = 1
    for d in diag:
        order *= d
    return DiscriminantGroup(factors, order)


def radical(lattice: GramLattice) -> SublatticeEmbedding:
    """Primitive kernel of the form, as a sublattice of the lattice itself."""
    kernel = linalg.integer_kernel(lattice.gram)
    return SublatticeEmbedding(lattice, linalg.hermite_normal_form(kernel))


def _radical_split(lattice: GramLattice):
    """Completion (v, u_1, ..., u_{r-1}) of the rank-1 radical to a Z-basis."""
    rad = radical(lattice)
    if rad.rank != 1:
        raise RadicalRankError(f"radical has rank {rad.rank}, expected 1")
    v = rad.basis[0]
    _, _, vm = linalg.smith_normal_form((v,))
    v_inv = linalg.unimodular_inverse(vm)
    first = v_inv[0]
    if first != v and tuple(-x for x in first) != v:
        raise AssertionError("basis completion lost the radical generator")
    rows = [v] + [tuple(r) for r in v_inv[1:]]
    return v, tuple(rows)


def quotient_by_radical(lattice: GramLattice) -> GramLattice:
    """Induced form on L / radical for a parabolic (rank-1 radical) lattice."""
    _, rows = _radical_split(lattice)
    section = rows[1:]
    emb = SublatticeEmbedding(lattice, linalg.freeze(section))
    return emb.induced_gram()


def _ldl(gram: IntMatrix):
    """G = R^T D R with R unit upper triangular, for positive definite G."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    r = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        d[k] = a[k][k]
        if d[k] <= 0:
            raise IndefiniteLatticeError("form is not positive definite")
        for j in range(k + 1, n):
            r[k][j] = a[k][j] / d[k]
        for i in range(k + 1, n):
            for j in range(i, n):
                a[i][j] -= a[k][i] * a[k][j] / d[k]
                a[j][i] = a[i][j]
    return d, r


def vectors_of_norm(lattice: GramLattice, target: int) -> list[IntVector]:
    """All v with v G v^T = target in a definite lattice, one per sign pair.

    Fincke-Pohst enumeration on the (negated if necessary) positive
    definite form, with exact rational bounds at every level. Returned
    representatives have positive first nonzero coordinate and are sorted
    lexicographically.

    Reference: Fincke, Pohst, Improved methods for calculating vectors of
    short length in a lattice (Math. Comp. 44, 1985).
    """
    sig = signature(lattice)
    n = lattice.rank
    if sig.n_zero or (sig.n_plus and sig.n_minus):
        raise IndefiniteLatticeError(
            "short-vector enumeration needs a definite lattice")
    if target == 0 or n == 0:
        return []
    if sig.n_minus:  # negative definite: negate form and target
        if target > 0:
            return []
        gram = linalg.mat_neg(lattice.gram)
        c = -target
    else:
        if target < 0:
            return []
        gram = lattice.gram
        c = target
    d, r = _ldl(gram)
    results: list[IntVector] = []
    x = [0] * n

    def descend(i: int, remaining: Fraction):
        if i < 0:
            if remaining == 0:
                vec = tuple(x)
                for coord in vec:
                    if coord != 0:
                        if coord > 0:
                            results.append(vec)
                        return
            return
        s = sum(r[i][j] * x[j] for j in range(i + 1, n))
        # d_i (x_i + s)^2 <= remaining
        limit = remaining / d[i]
        root = floor_sqrt(limit)
        xi = floor(-s - root)
        guard = floor(-s + root) + 1
        while xi <= guard and (xi + s) * (xi + s) > limit:
            xi += 1
        while xi <= guard and (xi + s) * (xi + s) <= limit:
            x[i] = xi
            descend(i - 1, remaining - d[i] * (xi + s) * (xi + s))
            xi += 1
        x[i] = 0

    descend(n - 1, Fraction(c))
    results.sort()
    return results


def represents(lattice: GramLattice, target: int):
    """(bool, witness) for definite or parabolic lattices.

    A parabolic form is constant on cosets of its radical, so the question
    reduces to the definite quotient; a witness is lifted back through the
    chosen splitting.
    """
    cls = classify(lattice)
    sig = signature(lattice)
    if cls == LatticeClass.ELLIPTIC or sig == (lattice.rank, 0, 0):
        vecs = vectors_of_norm(lattice, target)
        return (True, vecs[0]) if vecs else (False, None)
    if cls == LatticeClass.PARABOLIC:
        _, rows = _radical_split(lattice)
        section = rows[1:]
        quotient = SublatticeEmbedding(lattice, linalg.freeze(section)).induced_gram()
        if target == 0:
            return True, rows[0]
        vecs = vectors_of_norm(quotient, target)
        if not vecs:
            return False, None
        y = vecs[0]
        witness = tuple(sum(y[k] * section[k][j] for k in range(len(section)))
                        for j in range(lattice.rank))
        return True, witness
    raise UnsupportedSignatureError(
        f"represents() supports definite or parabolic lattices, not {cls.value}")
