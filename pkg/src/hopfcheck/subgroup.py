"""Quantum subgroups as Hopf *-ideals with quotients and normality tests.

A quantum subgroup of a finite quantum group is presented by a *-ideal I
that is also a coideal and antipode-stable; the quotient carries an induced
Hopf *-structure on the echelon-canonical complement of I.  Normality can be
decided four independent ways (restriction multiplicities, left and right
adjoint stability of the ideal, equality of the two coset algebras); the
four answers are provably equal and a disagreement is raised loudly rather
than suppressed.
"""

from __future__ import annotations

from .corep import peter_weyl
from .errors import NotHopfIdeal, SchemaError, TheoremViolation
from .hopf import HopfStarAlgebra, LinearEndo, check_axioms, convolve, linear_quotient
from .linalg import Matrix, Subspace, basis_vec, zero_vec


def _apply_pair(M, N, v):
    """Apply M (x) N to a flat tensor vector without forming the Kronecker product."""
    n1, n2 = M.ncols, N.ncols
    m1, m2 = M.nrows, N.nrows
    out = zero_vec(M.field, m1 * m2)
    for idx, val in enumerate(v):
        if not val:
            continue
        i, j = divmod(idx, n2)
        for a in range(m1):
            c1 = M.rows[a][i]
            if not c1:
                continue
            for b in range(m2):
                c2 = N.rows[b][j]
                if c2:
                    out[a * m2 + b] = out[a * m2 + b] + val * c1 * c2
    return out


class QuantumSubgroup:
    """A quotient presentation G -> N with its ideal, projection and Haar state."""

    __slots__ = ("parent", "ideal", "quotient", "proj", "reps", "meta")

    def __init__(self, parent, ideal, quotient, proj, reps):
        self.parent = parent
        self.ideal = ideal
        self.quotient = quotient
        self.proj = proj
        self.reps = reps  # ambient indices of the canonical complement
        self.meta = {}

    def pi(self, vec):
        return self.proj.apply(vec)

    @property
    def haar_N(self):
        return self.quotient.haar

    def haar_pi(self, vec):
        """The composite functional h_N(pi(a)) on the parent."""
        return self.quotient.haar_of(self.proj.apply(vec))

    def section(self) -> Matrix:
        """The coordinate section N -> G picking canonical representatives."""
        G = self.parent
        cols = [basis_vec(G.field, G.dim, r) for r in self.reps]
        return Matrix.from_rows(
            G.field,
            [[cols[j][i] for j in range(len(self.reps))] for i in range(G.dim)],
            ncols=len(self.reps),
        )

    def __repr__(self):
        return "QuantumSubgroup(dim %d -> %d)" % (self.parent.dim, self.quotient.dim)


def check_hopf_ideal(G: HopfStarAlgebra, I: Subspace):
    """Verify the Hopf *-ideal conditions; returns (ok, witness).

    The witness names the first violated condition together with an offending
    vector (in ambient coordinates, or flat tensor coordinates for the
    comultiplication condition).
    """
    d = G.dim
    basis = I.basis()
    ech = I.echelon()
    for b in basis:
        for i in range(d):
            e = basis_vec(G.field, d, i)
            left = G.product(e, b)
            if not ech.contains(left):
                return False, {"condition": "two_sided_ideal", "witness": left}
            right = G.product(b, e)
            if not ech.contains(right):
                return False, {"condition": "two_sided_ideal", "witness": right}
    for b in basis:
        st = G.star_vec(b)
        if not ech.contains(st):
            return False, {"condition": "star_closed", "witness": st}
    proj, _reps = linear_quotient(I)
    for b in basis:
        w = _apply_pair(proj, proj, G.comult_vec(b))
        if any(w):
            return False, {"condition": "comultiplication", "witness": w}
    for b in basis:
        if G.counit_of(b):
            return False, {"condition": "counit", "witness": b}
    for b in basis:
        sb = G.antipode_vec(b)
        if not ech.contains(sb):
            return False, {"condition": "antipode", "witness": sb}
    return True, None


def make_subgroup(G: HopfStarAlgebra, I) -> QuantumSubgroup:
    """Quotient G by a Hopf *-ideal, on the echelon-canonical complement."""
    if not isinstance(I, Subspace):
        I = Subspace.from_vectors(G.field, G.dim, [list(v) for v in I])
    if I.field.n != G.field.n:
        raise SchemaError(
            "ideal lives in the order-%d field but the algebra uses order %d"
            % (I.field.n, G.field.n)
        )
    ok, witness = check_hopf_ideal(G, I)
    if not ok:
        raise NotHopfIdeal("the %s condition fails" % witness["condition"])
    d = G.dim
    field = G.field
    proj, reps = linear_quotient(I)
    dn = len(reps)

    def rep_vec(i):
        return basis_vec(field, d, reps[i])

    mult = [
        [proj.apply(G.product(rep_vec(i), rep_vec(j))) for j in range(dn)]
        for i in range(dn)
    ]
    unit = proj.apply(G.unit_vec())
    comult = []
    for i in range(dn):
        w = _apply_pair(proj, proj, G.comult_vec(rep_vec(i)))
        comult.append([[w[a * dn + b] for b in range(dn)] for a in range(dn)])
    counit = [G.counit_of(rep_vec(i)) for i in range(dn)]
    anti_cols = [proj.apply(G.antipode_vec(rep_vec(i))) for i in range(dn)]
    star_cols = [proj.apply(G.star_vec(rep_vec(i))) for i in range(dn)]
    antipode = [[anti_cols[i][j] for i in range(dn)] for j in range(dn)]
    star = [[star_cols[i][j] for i in range(dn)] for j in range(dn)]
    labels = [G.labels[r] for r in reps]
    quotient = HopfStarAlgebra(field, mult, unit, comult, counit, antipode, star, labels=labels)
    report = check_axioms(quotient)
    if not report.ok:
        raise NotHopfIdeal(
            "quotient fails the axioms: " + ", ".join(c.name for c in report.failures())
        )
    return QuantumSubgroup(G, I, quotient, proj, reps)


def trivial_subgroup(G: HopfStarAlgebra) -> QuantumSubgroup:
    """The quotient by the augmentation ideal ker(eps); N = C."""
    ker = Matrix.from_rows(G.field, [list(G.counit)], ncols=G.dim).kernel()
    return make_subgroup(G, ker)


def full_subgroup(G: HopfStarAlgebra) -> QuantumSubgroup:
    """The quotient by the zero ideal; N = G and pi = id."""
    return make_subgroup(G, Subspace.zero(G.field, G.dim))


def conditional_expectation(Q: QuantumSubgroup, side: str = "right") -> LinearEndo:
    """The projection of norm one onto a coset algebra.

    side "right" gives (id (x) h_N pi) Delta whose image is the right coset
    algebra A_GN; side "left" gives (h_N pi (x) id) Delta with image A_NG.
    """
    G = Q.parent
    d = G.dim
    field = G.field
    hpi = [Q.haar_pi(basis_vec(field, d, k)) for k in range(d)]
    E = Matrix.zeros(field, d, d)
    for i in range(d):
        for j, k, c in G._comult_nz[i]:
            if side == "right":
                w = hpi[k]
                if w:
                    E.rows[j][i] = E.rows[j][i] + c * w
            else:
                w = hpi[j]
                if w:
                    E.rows[k][i] = E.rows[k][i] + c * w
    return LinearEndo(G, E)


def coset_algebras(Q: QuantumSubgroup):
    """The two coset algebras (A_GN, A_NG), each computed two ways.

    A_GN is the kernel of a |-> (id (x) pi) Delta(a) - a (x) 1_N and must
    equal the image of the right conditional expectation; likewise on the
    left.  The agreement of the two computations is asserted.
    """
    cached = Q.meta.get("cosets")
    if cached is not None:
        return cached
    G = Q.parent
    d = G.dim
    field = G.field
    dn = Q.quotient.dim
    unit_N = Q.quotient.unit_vec()

    cols_r, cols_l = [], []
    for i in range(d):
        w = _apply_pair(Matrix.identity(field, d), Q.proj, G.comult_vec(basis_vec(field, d, i)))
        for b in range(dn):
            u = unit_N[b]
            if u:
                w[i * dn + b] = w[i * dn + b] - u
        cols_r.append(w)
        v = _apply_pair(Q.proj, Matrix.identity(field, d), G.comult_vec(basis_vec(field, d, i)))
        for b in range(dn):
            u = unit_N[b]
            if u:
                v[b * d + i] = v[b * d + i] - u
        cols_l.append(v)
    A_GN = Matrix.from_rows(
        field, [[cols_r[i][t] for i in range(d)] for t in range(d * dn)], ncols=d
    ).kernel()
    A_NG = Matrix.from_rows(
        field, [[cols_l[i][t] for i in range(d)] for t in range(dn * d)], ncols=d
    ).kernel()

    img_r = conditional_expectation(Q, "right").image()
    img_l = conditional_expectation(Q, "left").image()
    assert A_GN == img_r, "invariance kernel and expectation image disagree (right)"
    assert A_NG == img_l, "invariance kernel and expectation image disagree (left)"
    Q.meta["cosets"] = (A_GN, A_NG)
    return A_GN, A_NG


def adjoint_coaction(G: HopfStarAlgebra, a, side: str = "left"):
    """ad_l(a) = sum a_(2) (x) a_(1) S(a_(3)), or ad_r(a) = sum a_(2) (x) S(a_(1)) a_(3)."""
    d = G.dim
    field = G.field
    out = zero_vec(field, d * d)
    s_cols = [G.antipode.column(z) for z in range(d)]
    da = G.comult_vec(a)
    for idx, c in enumerate(da):
        if not c:
            continue
        x, rest = divmod(idx, d)
        ex = basis_vec(field, d, x)
        for y, z, c2 in G._comult_nz[rest]:
            coef = c * c2
            if side == "left":
                prod = G.product(ex, s_cols[z])
            else:
                prod = G.product(s_cols[x], basis_vec(field, d, z))
            for t, p in enumerate(prod):
                if p:
                    out[y * d + t] = out[y * d + t] + coef * p
    return out


def is_left_a_normal(Q: QuantumSubgroup) -> bool:
    """True iff ad_l(I) lies in I (x) A, tested exactly on the ideal basis."""
    return _a_normal(Q, "left")


def is_right_a_normal(Q: QuantumSubgroup) -> bool:
    return _a_normal(Q, "right")


def _a_normal(Q, side):
    G = Q.parent
    ident = Matrix.identity(G.field, G.dim)
    for b in Q.ideal.basis():
        ad = adjoint_coaction(G, b, side)
        if any(_apply_pair(Q.proj, ident, ad)):
            return False
    return True


def is_normal_rep(Q: QuantumSubgroup, P=None):
    """Restriction criterion: (ok, matrices) with M_lambda = h_N(pi(u^lambda))."""
    if P is None:
        P = peter_weyl(Q.parent)
    field = Q.parent.field
    mats = []
    ok = True
    for c in P.coreps:
        rows = [[Q.haar_pi(c.entries[i][j]) for j in range(c.dim)] for i in range(c.dim)]
        M = Matrix.from_rows(field, rows, ncols=c.dim)
        mats.append(M)
        if not (M.is_zero() or M == Matrix.identity(field, c.dim)):
            ok = False
    return ok, mats


def is_normal_coset(Q: QuantumSubgroup) -> bool:
    A_GN, A_NG = coset_algebras(Q)
    return A_GN == A_NG


class NormalityReport:
    """All four normality criteria, their agreement flag, and S(N)."""

    __slots__ = (
        "rep_criterion",
        "rep_matrices",
        "left_a_normal",
        "right_a_normal",
        "coset_equality",
        "trivial_set",
        "agree",
    )

    def __init__(self, rep_criterion, rep_matrices, left_a, right_a, coset_eq, trivial_set):
        self.rep_criterion = rep_criterion
        self.rep_matrices = rep_matrices
        self.left_a_normal = left_a
        self.right_a_normal = right_a
        self.coset_equality = coset_eq
        self.trivial_set = tuple(sorted(trivial_set))
        self.agree = len({rep_criterion, left_a, right_a, coset_eq}) == 1

    @property
    def normal(self):
        return self.rep_criterion

    def as_dict(self):
        return {
            "rep_criterion": self.rep_criterion,
            "left_a_normal": self.left_a_normal,
            "right_a_normal": self.right_a_normal,
            "coset_equality": self.coset_equality,
            "normal": self.normal,
            "agree": self.agree,
            "trivial_set": list(self.trivial_set),
            "matrices": [[[repr(x) for x in row] for row in M.rows] for M in self.rep_matrices],
        }

    def __repr__(self):
        return "NormalityReport(rep=%s, left=%s, right=%s, coset=%s)" % (
            self.rep_criterion,
            self.left_a_normal,
            self.right_a_normal,
            self.coset_equality,
        )


def normality_report(Q: QuantumSubgroup, P=None) -> NormalityReport:
    """Run all four normality criteria and assert that they agree."""
    if P is None:
        P = peter_weyl(Q.parent)
    rep_ok, mats = is_normal_rep(Q, P)
    field = Q.parent.field
    trivial = {
        idx for idx, M in enumerate(mats) if M == Matrix.identity(field, M.nrows)
    }
    left = is_left_a_normal(Q)
    right = is_right_a_normal(Q)
    coset = is_normal_coset(Q)
    report = NormalityReport(rep_ok, mats, left, right, coset, trivial)
    if not report.agree:
        raise TheoremViolation(
            "normality criteria disagree: %r (trivial set %r)" % (report, report.trivial_set)
        )
    if report.normal:
        A_GN, _ = coset_algebras(Q)
        total = Subspace.zero(field, Q.parent.dim)
        for idx in report.trivial_set:
            total = total.sum_with(P.blocks()[idx])
        if total != A_GN:
            raise TheoremViolation(
                "coset algebra is not the block sum over the trivial set"
            )
    return report


def _product_span(G, lefts, rights):
    vecs = [G.product(x, y) for x in lefts for y in rights]
    return Subspace.from_vectors(G.field, G.dim, vecs)


def augmentation_part(G, B: Subspace) -> Subspace:
    """B intersected with ker(eps)."""
    ker = Matrix.from_rows(G.field, [list(G.counit)], ncols=G.dim).kernel()
    return B.intersect(ker)


def reconstruction_check(Q: QuantumSubgroup) -> bool:
    """ker(pi) equals all three product spans built from the coset algebra.

    The spans are A+ . A, A . A+ and A . A+ . A where A+ is the augmentation
    part of the coset algebra A_GN; equality with the ideal reconstructs N
    from the pair (G, A_GN).
    """
    G = Q.parent
    A_GN, _ = coset_algebras(Q)
    aplus = augmentation_part(G, A_GN)
    full = [basis_vec(G.field, G.dim, i) for i in range(G.dim)]
    pa = aplus.basis()
    s1 = _product_span(G, pa, full)
    s2 = _product_span(G, full, pa)
    mids = [G.product(x, y) for x in full for y in pa]
    s3 = Subspace.from_vectors(
        G.field, G.dim, [G.product(m, z) for m in mids for z in full]
    )
    return s1 == Q.ideal and s2 == Q.ideal and s3 == Q.ideal


def comodule_splitting(Q: QuantumSubgroup) -> Matrix:
    """An exactly verified comodule section s of pi: pi s = id and
    (id (x) pi) Delta_G s = (s (x) id) Delta_N."""
    G, N = Q.parent, Q.quotient
    d, dn = G.dim, N.dim
    field = G.field
    unknowns = d * dn  # x[k * dn + a] = s[k][a]
    rows, rhs = [], []
    for b in range(dn):
        for a in range(dn):
            row = zero_vec(field, unknowns)
            for k in range(d):
                c = Q.proj.rows[b][k]
                if c:
                    row[k * dn + a] = row[k * dn + a] + c
            rows.append(row)
            rhs.append(field.one if a == b else field.zero)
    # T1[(i, j)][k]: the (i, j) component of (id (x) pi) Delta(e_k)
    T1 = [[field.zero] * d for _ in range(d * dn)]
    for k in range(d):
        for p, q, c in G._comult_nz[k]:
            for j in range(dn):
                pj = Q.proj.rows[j][q]
                if pj:
                    T1[p * dn + j][k] = T1[p * dn + j][k] + c * pj
    for a in range(dn):
        for i in range(d):
            for j in range(dn):
                row = zero_vec(field, unknowns)
                for k in range(d):
                    t = T1[i * dn + j][k]
                    if t:
                        row[k * dn + a] = row[k * dn + a] + t
                for b, jj, c in N._comult_nz[a]:
                    if jj == j:
                        row[i * dn + b] = row[i * dn + b] - c
                rows.append(row)
                rhs.append(field.zero)
    sol = _solve_rows(field, rows, rhs, unknowns)
    assert sol is not None, "comodule splitting system is infeasible"
    s = Matrix.from_rows(
        field, [[sol[k * dn + a] for a in range(dn)] for k in range(d)], ncols=dn
    )
    assert Q.proj * s == Matrix.identity(field, dn)
    return s


def _solve_rows(field, rows, rhs, unknowns):
    from .linalg import solve_linear

    A = Matrix.from_rows(field, rows, ncols=unknowns)
    return solve_linear(A, rhs)


def phi_map(Q: QuantumSubgroup, s: Matrix | None = None) -> LinearEndo:
    """The convolution inverse construction phi = (s pi) * S.

    Three identities are asserted exactly: the image of phi lies in the coset
    algebra, eps phi = eps, and id - s pi = [(eps 1 - id) phi] * id.
    """
    G = Q.parent
    field = G.field
    if s is None:
        s = comodule_splitting(Q)
    SP = s * Q.proj
    phi = convolve(G, SP, G.antipode)
    A_GN, _ = coset_algebras(Q)
    assert A_GN.contains_all(phi.columns()), "phi image leaves the coset algebra"
    eps = G.counit
    for i in range(G.dim):
        acc = field.zero
        for t in range(G.dim):
            p = phi.rows[t][i]
            if p:
                acc = acc + eps[t] * p
        assert acc == eps[i], "eps phi differs from eps"
    E1 = LinearEndo.counit_unit(G).matrix
    lhs = Matrix.identity(field, G.dim) - SP
    rhs = convolve(G, (E1 - Matrix.identity(field, G.dim)) * phi, Matrix.identity(field, G.dim))
    assert lhs == rhs, "the convolution identity for id - s pi fails"
    return LinearEndo(G, phi)


def exact_sequence_check(Q: QuantumSubgroup) -> bool:
    """C -> A_GN -> G -> N -> C is exact, checked at finite dimension.

    (a) A_GN is a Hopf *-subalgebra; (b) ker pi = A . A+ where A+ is the
    augmentation part of A_GN; (c) dim G = dim A_GN * dim N.
    """
    G = Q.parent
    field = G.field
    A_GN, _ = coset_algebras(Q)
    basis = A_GN.basis()
    ech = A_GN.echelon()
    if not ech.contains(G.unit_vec()):
        return False
    for x in basis:
        for y in basis:
            if not ech.contains(G.product(x, y)):
                return False
        if not ech.contains(G.antipode_vec(x)) or not ech.contains(G.star_vec(x)):
            return False
    rho, _ = linear_quotient(A_GN)
    ident = Matrix.identity(field, G.dim)
    for x in basis:
        w = G.comult_vec(x)
        if any(_apply_pair(rho, ident, w)) or any(_apply_pair(ident, rho, w)):
            return False
    aplus = augmentation_part(G, A_GN)
    if _product_span(G, [basis_vec(field, G.dim, i) for i in range(G.dim)], aplus.basis()) != Q.ideal:
        return False
    return G.dim == A_GN.dim * Q.quotient.dim
