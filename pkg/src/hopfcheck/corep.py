"""Irreducible corepresentations, characters, fusion rules and conjugates.

A corepresentation here is a square matrix u with entries in the algebra
satisfying Delta(u_ij) = sum_k u_ik (x) u_kj and eps(u_ij) = delta_ij, with
S(u_ij) giving a two-sided matrix inverse.  The complete list of irreducible
ones is recovered from the block decomposition of the dual algebra; every
identity is verified exactly before anything is returned, so the numeric
heuristics inside the splitting step can never leak a wrong answer.
"""

from __future__ import annotations

from math import isqrt

from .errors import SplittingFailed, TheoremViolation
from .hopf import HopfStarAlgebra
from .linalg import Matrix, Subspace, solve_linear, tensor_vec, zero_vec
from .splitting import dual_product, find_primitive_idempotent, split_center


class Corepresentation:
    """A matrix corepresentation with exactly verified structure."""

    __slots__ = ("algebra", "entries", "dim")

    def __init__(self, algebra: HopfStarAlgebra, entries):
        assert entries and all(len(row) == len(entries) for row in entries)
        self.algebra = algebra
        self.entries = [[list(v) for v in row] for row in entries]
        self.dim = len(entries)

    def character(self):
        chi = zero_vec(self.algebra.field, self.algebra.dim)
        for i in range(self.dim):
            for j, c in enumerate(self.entries[i][i]):
                chi[j] = chi[j] + c
        return chi

    def block(self) -> Subspace:
        vecs = [v for row in self.entries for v in row]
        return Subspace.from_vectors(self.algebra.field, self.algebra.dim, vecs)

    def star_block(self) -> Subspace:
        vecs = [self.algebra.star_vec(v) for row in self.entries for v in row]
        return Subspace.from_vectors(self.algebra.field, self.algebra.dim, vecs)

    def verify(self):
        """Exact check of the comultiplication, counit and antipode laws."""
        H = self.algebra
        d = self.dim
        for i in range(d):
            for j in range(d):
                lhs = H.comult_vec(self.entries[i][j])
                rhs = zero_vec(H.field, H.dim * H.dim)
                for k in range(d):
                    t = tensor_vec(self.entries[i][k], self.entries[k][j])
                    rhs = [a + b for a, b in zip(rhs, t)]
                if lhs != rhs:
                    return "comultiplication law fails at entry (%d, %d)" % (i, j)
                eps = H.counit_of(self.entries[i][j])
                want = H.field.one if i == j else H.field.zero
                if eps != want:
                    return "counit law fails at entry (%d, %d)" % (i, j)
        for i in range(d):
            for j in range(d):
                acc = zero_vec(H.field, H.dim)
                acc2 = zero_vec(H.field, H.dim)
                for k in range(d):
                    p = H.product(H.antipode_vec(self.entries[i][k]), self.entries[k][j])
                    p2 = H.product(self.entries[i][k], H.antipode_vec(self.entries[k][j]))
                    acc = [a + b for a, b in zip(acc, p)]
                    acc2 = [a + b for a, b in zip(acc2, p2)]
                want = H.unit_vec() if i == j else zero_vec(H.field, H.dim)
                if acc != want or acc2 != want:
                    return "antipode is not a matrix inverse at entry (%d, %d)" % (i, j)
        return None


class PeterWeylData:
    """The full list of irreducible corepresentations of one algebra."""

    __slots__ = ("algebra", "coreps", "triv_index", "_blocks")

    def __init__(self, algebra, coreps, triv_index):
        self.algebra = algebra
        self.coreps = list(coreps)
        self.triv_index = triv_index
        self._blocks = None

    def blocks(self):
        if self._blocks is None:
            self._blocks = [c.block() for c in self.coreps]
        return self._blocks

    @property
    def dims(self):
        return [c.dim for c in self.coreps]

    def __len__(self):
        return len(self.coreps)

    def summary(self):
        return {"dims": self.dims, "trivial": self.triv_index}


def _canonical_order(coreps):
    keyed = sorted(coreps, key=lambda c: (c.dim, c.block().sort_key()))
    return keyed


def _trivial_index(H, coreps):
    one = H.unit_vec()
    for idx, c in enumerate(coreps):
        if c.dim == 1 and c.entries[0][0] == one:
            return idx
    raise TheoremViolation("no trivial corepresentation found")


def _verify_complete(H, coreps):
    total = 0
    ech_vecs = []
    for c in coreps:
        err = c.verify()
        if err is not None:
            raise TheoremViolation("corepresentation verification failed: " + err)
        total += c.dim * c.dim
        ech_vecs.extend(v for row in c.entries for v in row)
    if total != H.dim:
        raise TheoremViolation(
            "matrix entries count %d does not match the dimension %d" % (total, H.dim)
        )
    span = Subspace.from_vectors(H.field, H.dim, ech_vecs)
    if span.dim != H.dim:
        raise TheoremViolation("matrix entries do not span the whole algebra")


def _extract_block(H, p, gauge):
    """One irreducible corepresentation from a minimal central idempotent."""
    field = H.field
    d = H.dim

    # the matrix block p * dual, as a subspace of the dual
    imgs = []
    for t in range(d):
        f = zero_vec(field, d)
        f[t] = field.one
        imgs.append(dual_product(H, p, f))
    block_D = Subspace.from_vectors(field, d, imgs)
    dlam = isqrt(block_D.dim)
    if dlam * dlam != block_D.dim:
        raise SplittingFailed(field.n, "a dual block is not of square dimension")

    # the coefficient space inside the algebra: image of (id (x) p) Delta
    P = Matrix.zeros(field, d, d)
    for i in range(d):
        for j, k, c in H._comult_nz[i]:
            pk = p[k]
            if pk:
                P.rows[j][i] = P.rows[j][i] + c * pk
    C_block = P.image()
    assert C_block.dim == block_D.dim, "coefficient space does not match the dual block"

    if dlam == 1:
        v = C_block.basis()[0]
        eps = H.counit_of(v)
        assert eps, "a one-dimensional block with vanishing counit"
        g = [eps.inverse() * c for c in v]
        return Corepresentation(H, [[g]])

    q = find_primitive_idempotent(H, block_D.basis(), p, gauge)
    Q = Matrix.zeros(field, d, d)
    for i in range(d):
        for j, k, c in H._comult_nz[i]:
            qk = q[k]
            if qk:
                Q.rows[j][i] = Q.rows[j][i] + c * qk
    rows = [Q.apply(b) for b in C_block.basis()]
    V = Subspace.from_vectors(field, d, rows)
    if V.dim != dlam:
        raise SplittingFailed(field.n, "primitive idempotent produced a wrong column dimension")

    R = Matrix.from_rows(field, [list(r) for r in V.basis()], ncols=d)
    Cmat = solve_linear(R, Matrix.identity(field, dlam))
    assert Cmat is not None, "dual functionals for the column space do not exist"

    entries = [[None] * dlam for _ in range(dlam)]
    for i, r in enumerate(V.basis()):
        w = H.comult_vec(list(r))
        for l in range(dlam):
            col = zero_vec(field, d)
            for a in range(d):
                acc = field.zero
                for b in range(d):
                    wa = w[a * d + b]
                    if wa:
                        cb = Cmat.rows[b][l]
                        if cb:
                            acc = acc + wa * cb
                col[a] = acc
            entries[i][l] = col
    corep = Corepresentation(H, entries)
    err = corep.verify()
    if err is not None:
        raise SplittingFailed(field.n, "extracted matrix fails verification: " + err)
    if corep.block() != C_block:
        raise SplittingFailed(field.n, "matrix entries do not span their block")
    return corep


def peter_weyl(H: HopfStarAlgebra, force_recompute: bool = False, gauge: int = 0) -> PeterWeylData:
    """Complete the algebra's irreducible corepresentation list, exactly.

    Attached data coming from a constructor is verified rather than
    recomputed; pass force_recompute=True to run the splitting anyway.
    """
    if not force_recompute and gauge == 0:
        cached = getattr(H, "_pw_cache", None)
        if cached is not None:
            return cached
        if H.attached_pw is not None:
            coreps = _canonical_order(
                [Corepresentation(H, c.entries) for c in H.attached_pw]
            )
            _verify_complete(H, coreps)
            data = PeterWeylData(H, coreps, _trivial_index(H, coreps))
            H._pw_cache = data
            return data
    idems = split_center(H, gauge)
    coreps = _canonical_order([_extract_block(H, p, gauge) for p in idems])
    _verify_complete(H, coreps)
    data = PeterWeylData(H, coreps, _trivial_index(H, coreps))
    if gauge == 0:
        H._pw_cache = data
    return data


def fusion(P: PeterWeylData):
    """Fusion multiplicities N[l][m][n] from characters and the Haar state."""
    H = P.algebra
    chars = [c.character() for c in P.coreps]
    star_chars = [H.star_vec(c) for c in chars]
    r = len(P.coreps)
    N = [[[0] * r for _ in range(r)] for _ in range(r)]
    for l in range(r):
        for m in range(r):
            prod = H.product(chars[l], chars[m])
            for n in range(r):
                val = H.haar_of(H.product(prod, star_chars[n]))
                if not val.is_rational():
                    raise TheoremViolation("fusion multiplicity is not rational")
                q = val.as_fraction()
                if q.denominator != 1 or q < 0:
                    raise TheoremViolation(
                        "fusion multiplicity %s is not a nonnegative integer" % q
                    )
                N[l][m][n] = int(q)
            counted = sum(N[l][m][n] * P.coreps[n].dim for n in range(r))
            if counted != P.coreps[l].dim * P.coreps[m].dim:
                raise TheoremViolation("fusion multiplicities do not count dimensions")
    return N


def conjugate(P: PeterWeylData, index: int, N=None) -> int:
    """Index of the conjugate corepresentation, cross-checked two ways."""
    if N is None:
        N = fusion(P)
    r = len(P.coreps)
    t = P.triv_index
    hits = [n for n in range(r) if N[index][n][t] == 1]
    if len(hits) != 1:
        raise TheoremViolation("conjugate of %d is not unique among %r" % (index, hits))
    conj = hits[0]
    if P.coreps[conj].dim != P.coreps[index].dim:
        raise TheoremViolation("conjugate corepresentation has a different dimension")
    star_block = P.coreps[index].star_block()
    if star_block != P.blocks()[conj]:
        raise TheoremViolation("conjugate block does not match the star image")
    return conj
