"""Finite-dimensional Hopf *-algebras given by exact structure constants.

Conventions (all column-style):
  mult[i][j][k]    coefficient of e_k in e_i * e_j
  unit[i]          1 = sum_i unit[i] e_i
  comult[i][j][k]  coefficient of e_j (x) e_k in Delta(e_i)
  counit[i]        eps(e_i)
  antipode[j][i]   coefficient of e_j in S(e_i)
  star[j][i]       (e_i)* = sum_j star[j][i] e_j, extended antilinearly

The Kac conditions (S^2 = id, tracial positive Haar) are part of the axiom
report, so everything downstream may assume them once the report is clean.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .cyclotomic import CycField
from .errors import NotCosemisimple, SchemaError
from .linalg import Matrix, Subspace, basis_vec, tensor_vec, zero_vec


class HopfStarAlgebra:
    """A finite quantum group presented by structure constants."""

    def __init__(self, field, mult, unit, comult, counit, antipode, star, labels=None):
        if not isinstance(field, CycField):
            field = CycField(field)
        self.field = field
        d = len(unit)
        self.dim = d
        sc = field.scalar
        try:
            self.mult = [[[sc(mult[i][j][k]) for k in range(d)] for j in range(d)] for i in range(d)]
            self.unit = [sc(unit[i]) for i in range(d)]
            self.comult = [[[sc(comult[i][j][k]) for k in range(d)] for j in range(d)] for i in range(d)]
            self.counit = [sc(counit[i]) for i in range(d)]
            self.antipode = Matrix(field, [[antipode[i][j] for j in range(d)] for i in range(d)])
            self.star = Matrix(field, [[star[i][j] for j in range(d)] for i in range(d)])
        except (IndexError, TypeError) as exc:
            raise SchemaError("structure tensor shape mismatch: %s" % exc) from exc
        if labels is None:
            labels = ["e%d" % i for i in range(d)]
        if len(labels) != d:
            raise SchemaError("expected %d basis labels, got %d" % (d, len(labels)))
        self.labels = list(labels)
        self._mult_nz = [
            [tuple((k, c) for k, c in enumerate(self.mult[i][j]) if c) for j in range(d)]
            for i in range(d)
        ]
        self._comult_nz = [
            tuple(
                (j, k, self.comult[i][j][k])
                for j in range(d)
                for k in range(d)
                if self.comult[i][j][k]
            )
            for i in range(d)
        ]
        self._haar = None
        self.attached_pw = None  # optional corepresentation data from a constructor
        self.meta = {}

    # -- basic maps ---------------------------------------------------------

    def unit_vec(self):
        return list(self.unit)

    def product(self, x, y):
        out = zero_vec(self.field, self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            nz_i = self._mult_nz[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, m in nz_i[j]:
                    out[k] = out[k] + c * m
        return out

    def product_many(self, vectors):
        acc = self.unit_vec()
        for v in vectors:
            acc = self.product(acc, v)
        return acc

    def comult_vec(self, x):
        d = self.dim
        out = zero_vec(self.field, d * d)
        for i, xi in enumerate(x):
            if xi:
                for j, k, c in self._comult_nz[i]:
                    out[j * d + k] = out[j * d + k] + xi * c
        return out

    def counit_of(self, x):
        acc = self.field.zero
        for c, e in zip(x, self.counit):
            if c and e:
                acc = acc + c * e
        return acc

    def antipode_vec(self, x):
        return self.antipode.apply(x)

    def star_vec(self, x):
        return self.star.apply([c.conjugate() for c in x])

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i):
                if self.product(basis_vec(self.field, self.dim, i), basis_vec(self.field, self.dim, j)) != self.product(
                    basis_vec(self.field, self.dim, j), basis_vec(self.field, self.dim, i)
                ):
                    return False
        return True

    def is_cocommutative(self):
        d = self.dim
        for i in range(d):
            for j, k, c in self._comult_nz[i]:
                if self.comult[i][k][j] != c:
                    return False
        return True

    # -- Haar ---------------------------------------------------------------

    @property
    def haar(self):
        """The unique normalized bi-invariant functional, as a covector."""
        if self._haar is None:
            self._haar = compute_haar(self)
        return self._haar

    def haar_of(self, x):
        acc = self.field.zero
        for c, h in zip(x, self.haar):
            if c and h:
                acc = acc + c * h
        return acc

    def basis_product(self, i, j):
        return list(self.mult[i][j])

    def __repr__(self):
        return "HopfStarAlgebra(dim %d over Q(zeta_%d))" % (self.dim, self.field.n)


class LinearEndo:
    """A linear endomorphism of an algebra, stored as a matrix on coordinates."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra, matrix):
        if matrix.nrows != algebra.dim or matrix.ncols != algebra.dim:
            raise SchemaError("endomorphism matrix must be %d x %d" % (algebra.dim, algebra.dim))
        self.algebra = algebra
        self.matrix = matrix

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, Matrix.identity(algebra.field, algebra.dim))

    @classmethod
    def counit_unit(cls, algebra):
        """The convolution unit a -> eps(a) 1."""
        rows = [
            [u * e if (u and e) else algebra.field.zero for e in algebra.counit]
            for u in algebra.unit
        ]
        return cls(algebra, Matrix.from_rows(algebra.field, rows, ncols=algebra.dim))

    @classmethod
    def antipode(cls, algebra):
        return cls(algebra, algebra.antipode)

    def apply(self, vec):
        return self.matrix.apply(vec)

    def compose(self, other):
        return LinearEndo(self.algebra, self.matrix * other.matrix)

    def convolve(self, other):
        return convolve(self.algebra, self, other)

    def image(self):
        return self.matrix.image()

    def is_idempotent(self):
        return self.matrix * self.matrix == self.matrix

    def __eq__(self, other):
        if not isinstance(other, LinearEndo):
            return NotImplemented
        return self.algebra is other.algebra and self.matrix == other.matrix

    def __repr__(self):
        return "LinearEndo(dim %d)" % self.algebra.dim


def convolve(H, f, g):
    """Convolution product f * g = m (f (x) g) Delta of two endomorphisms."""
    F = f.matrix if isinstance(f, LinearEndo) else f
    G = g.matrix if isinstance(g, LinearEndo) else g
    d = H.dim
    cols = []
    fcols = F.columns()
    gcols = G.columns()
    for i in range(d):
        acc = zero_vec(H.field, d)
        for j, k, c in H._comult_nz[i]:
            prod = H.product(fcols[j], gcols[k])
            for t, p in enumerate(prod):
                if p:
                    acc[t] = acc[t] + c * p
        cols.append(acc)
    mat = Matrix.from_rows(H.field, [[cols[j][i] for j in range(d)] for i in range(d)], ncols=d)
    if isinstance(f, LinearEndo) or isinstance(g, LinearEndo):
        return LinearEndo(H, mat)
    return mat


def compute_haar(H):
    """Solve both invariance equations jointly; normalize h(1) = 1.

    Raises NotCosemisimple when the bi-invariant functional does not exist
    or cannot be normalized.
    """
    d = H.dim
    field = H.field
    rows = []
    for i in range(d):
        right = [[field.zero] * d for _ in range(d)]  # (id (x) h) Delta(e_i) = h(e_i) 1
        left = [[field.zero] * d for _ in range(d)]  # (h (x) id) Delta(e_i) = h(e_i) 1
        for j, k, c in H._comult_nz[i]:
            right[j][k] = right[j][k] + c
            left[k][j] = left[k][j] + c
        for sys in (right, left):
            for comp in range(d):
                row = list(sys[comp])
                row[i] = row[i] - H.unit[comp]
                rows.append(row)
    sol = Matrix.from_rows(field, rows, ncols=d).kernel()
    if sol.dim == 0:
        raise NotCosemisimple("no bi-invariant functional exists")
    if sol.dim > 1:
        raise NotCosemisimple(
            "bi-invariance system has a %d-dimensional solution space" % sol.dim
        )
    h = list(sol.rows[0])
    h_one = field.zero
    for u, hv in zip(H.unit, h):
        if u and hv:
            h_one = h_one + u * hv
    if not h_one:
        raise NotCosemisimple("the bi-invariance system forces h(1) = 0")
    inv = h_one.inverse()
    return [hv * inv for hv in h]


@dataclass
class AxiomCheck:
    name: str
    ok: bool
    witness: object = None

    def as_dict(self):
        return {"name": self.name, "ok": self.ok, "witness": _json_witness(self.witness)}


def _json_witness(w):
    if w is None or isinstance(w, (str, int)):
        return w
    if isinstance(w, (tuple, list)):
        return [_json_witness(x) for x in w]
    return repr(w)


@dataclass
class AxiomReport:
    checks: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def as_dict(self):
        return {"ok": self.ok, "checks": [c.as_dict() for c in self.checks]}

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def check_axioms(H):
    """Run every Hopf *-algebra axiom plus the Kac conditions.

    Each check reports a witness (basis indices) on failure.  An algebra is
    only fit for downstream use when all checks pass.
    """
    d = H.dim
    field = H.field
    checks = []
    ebasis = [basis_vec(field, d, i) for i in range(d)]
    one = H.unit_vec()

    def run(name, witness_iter):
        w = next(witness_iter, None)
        checks.append(AxiomCheck(name, w is None, w))

    def unit_fails():
        for i in range(d):
            if H.product(one, ebasis[i]) != ebasis[i] or H.product(ebasis[i], one) != ebasis[i]:
                yield (i,)

    run("unit", unit_fails())

    def assoc_fails():
        prods = [[H.mult[i][j] for j in range(d)] for i in range(d)]
        for i in range(d):
            for j in range(d):
                pij = prods[i][j]
                for k in range(d):
                    lhs = H.product(pij, ebasis[k])
                    rhs = H.product(ebasis[i], prods[j][k])
                    if lhs != rhs:
                        yield (i, j, k)

    run("associativity", assoc_fails())

    def counit_fails():
        for i in range(d):
            lhs = zero_vec(field, d)
            rhs = zero_vec(field, d)
            for j, k, c in H._comult_nz[i]:
                if H.counit[k]:
                    lhs[j] = lhs[j] + c * H.counit[k]
                if H.counit[j]:
                    rhs[k] = rhs[k] + c * H.counit[j]
            if lhs != ebasis[i] or rhs != ebasis[i]:
                yield (i,)

    run("counit", counit_fails())

    def coassoc_fails():
        for i in range(d):
            lhs = {}
            rhs = {}
            for j, k, c in H._comult_nz[i]:
                for a, b, c2 in H._comult_nz[j]:
                    key = (a, b, k)
                    lhs[key] = lhs.get(key, field.zero) + c * c2
                for a, b, c2 in H._comult_nz[k]:
                    key = (j, a, b)
                    rhs[key] = rhs.get(key, field.zero) + c * c2
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                yield (i,)

    run("coassociativity", coassoc_fails())

    def comult_unital_fails():
        if H.comult_vec(one) != tensor_vec(one, one):
            yield ()

    run("comult_unital", comult_unital_fails())

    def eps_one_fails():
        if H.counit_of(one) != field.one:
            yield ()

    run("counit_unital", eps_one_fails())

    def comult_mult_fails():
        for i in range(d):
            for j in range(d):
                lhs = {}
                for k, c in H._mult_nz[i][j]:
                    for a, b, c2 in H._comult_nz[k]:
                        key = (a, b)
                        lhs[key] = lhs.get(key, field.zero) + c * c2
                rhs = {}
                for a, b, c1 in H._comult_nz[i]:
                    for p, q, c2 in H._comult_nz[j]:
                        c12 = c1 * c2
                        for r, m1 in H._mult_nz[a][p]:
                            for s, m2 in H._mult_nz[b][q]:
                                key = (r, s)
                                rhs[key] = rhs.get(key, field.zero) + c12 * m1 * m2
                lhs = {k: v for k, v in lhs.items() if v}
                rhs = {k: v for k, v in rhs.items() if v}
                if lhs != rhs:
                    yield (i, j)

    run("comult_multiplicative", comult_mult_fails())

    def counit_mult_fails():
        for i in range(d):
            for j in range(d):
                lhs = field.zero
                for k, c in H._mult_nz[i][j]:
                    if H.counit[k]:
                        lhs = lhs + c * H.counit[k]
                if lhs != H.counit[i] * H.counit[j]:
                    yield (i, j)

    run("counit_multiplicative", counit_mult_fails())

    def antipode_fails(side):
        for i in range(d):
            acc = zero_vec(field, d)
            for j, k, c in H._comult_nz[i]:
                if side == "left":
                    prod = H.product(H.antipode.column(j), ebasis[k])
                else:
                    prod = H.product(ebasis[j], H.antipode.column(k))
                for t, p in enumerate(prod):
                    if p:
                        acc[t] = acc[t] + c * p
            target = [H.counit[i] * u for u in one]
            if acc != target:
                yield (i,)

    run("antipode_left", antipode_fails("left"))
    run("antipode_right", antipode_fails("right"))

    def star_involution_fails():
        if H.star * H.star.conjugate() != Matrix.identity(field, d):
            yield ()

    run("star_involution", star_involution_fails())

    def star_antimult_fails():
        scols = H.star.columns()
        for i in range(d):
            for j in range(d):
                lhs = H.star_vec(H.mult[i][j])
                rhs = H.product(scols[j], scols[i])
                if lhs != rhs:
                    yield (i, j)

    run("star_antimultiplicative", star_antimult_fails())

    def star_comult_fails():
        scols = H.star.columns()
        for i in range(d):
            lhs = H.comult_vec(scols[i])
            rhs = zero_vec(field, d * d)
            for j, k, c in H._comult_nz[i]:
                cc = c.conjugate()
                for a, sa in enumerate(scols[j]):
                    if sa:
                        coeff = cc * sa
                        for b, sb in enumerate(scols[k]):
                            if sb:
                                rhs[a * d + b] = rhs[a * d + b] + coeff * sb
            if lhs != rhs:
                yield (i,)

    run("star_comultiplicative", star_comult_fails())

    def star_counit_fails():
        scols = H.star.columns()
        for i in range(d):
            if H.counit_of(scols[i]) != H.counit[i].conjugate():
                yield (i,)

    run("star_counit", star_counit_fails())

    def antipode_star_fails():
        for i in range(d):
            v = H.star_vec(H.antipode_vec(H.star_vec(H.antipode_vec(ebasis[i]))))
            if v != ebasis[i]:
                yield (i,)

    run("antipode_star_involution", antipode_star_fails())

    def s_squared_fails():
        if H.antipode * H.antipode != Matrix.identity(field, d):
            yield ()

    run("antipode_involutive", s_squared_fails())

    haar = None
    try:
        haar = H.haar
        checks.append(AxiomCheck("haar_exists", True))
    except NotCosemisimple as exc:
        checks.append(AxiomCheck("haar_exists", False, str(exc)))

    if haar is not None:

        def tracial_fails():
            for i in range(d):
                for j in range(i + 1, d):
                    if H.haar_of(H.mult[i][j]) != H.haar_of(H.mult[j][i]):
                        yield (i, j)

        run("haar_tracial", tracial_fails())

        def haar_star_fails():
            scols = H.star.columns()
            for i in range(d):
                if H.haar_of(scols[i]) != haar[i].conjugate():
                    yield (i,)

        run("haar_star", haar_star_fails())

        def haar_positive_fails():
            scols = H.star.columns()
            gram = [
                [H.haar_of(H.product(scols[i], ebasis[j])) for j in range(d)]
                for i in range(d)
            ]
            for i in range(d):
                for j in range(d):
                    if gram[j][i] != gram[i][j].conjugate():
                        yield ("not_hermitian", i, j)
                        return
            g = [row[:] for row in gram]
            for k in range(d):
                piv = g[k][k]
                if not piv.is_real() or piv.sign() <= 0:
                    yield ("pivot", k)
                    return
                inv = piv.inverse()
                for i2 in range(k + 1, d):
                    if g[i2][k]:
                        f = g[i2][k] * inv
                        for j2 in range(k + 1, d):
                            if g[k][j2]:
                                g[i2][j2] = g[i2][j2] - f * g[k][j2]

        run("haar_positive", haar_positive_fails())

    return AxiomReport(checks)


def dual(H):
    """The dual Hopf *-algebra on the dual basis.

    Multiplication is the transpose of Delta, comultiplication the transpose
    of multiplication, S_D = S^T, and f*(x) = conj(f(S(x)*)).
    """
    d = H.dim
    field = H.field
    mult = [[[H.comult[i][j][k] for i in range(d)] for k in range(d)] for j in range(d)]
    unit = list(H.counit)
    comult = [[[H.mult[a][b][k] for b in range(d)] for a in range(d)] for k in range(d)]
    counit = list(H.unit)
    antipode = H.antipode.transpose()
    star = (H.star.conjugate() * H.antipode).transpose()
    labels = [lbl + "^" for lbl in H.labels]
    return HopfStarAlgebra(
        field,
        mult,
        unit,
        comult,
        counit,
        [list(r) for r in antipode.rows],
        [list(r) for r in star.rows],
        labels=labels,
    )


def sub_hopf_algebra(H, B):
    """Restrict the structure of H to a Hopf *-subalgebra given as a Subspace.

    Returns (algebra, inclusion) where inclusion maps sub-coordinates into
    ambient coordinates.  Raises SchemaError when B is not closed under the
    operations or does not contain the unit.
    """
    d = H.dim
    field = H.field
    if B.ambient != d:
        raise SchemaError("subspace ambient %d != algebra dim %d" % (B.ambient, d))
    ech = B.echelon()
    if not ech.contains(H.unit_vec()):
        raise SchemaError("subalgebra does not contain the unit")
    basis = B.basis()
    r = B.dim
    pivots = B.pivots

    def coords(vec):
        c = ech.coefficients(vec)
        if c is None:
            raise SchemaError("subspace is not closed under the Hopf *-operations")
        return c

    mult = [[coords(H.product(basis[i], basis[j])) for j in range(r)] for i in range(r)]
    unit = coords(H.unit_vec())
    comult = []
    tens = Subspace.from_vectors(
        field, d * d, [tensor_vec(basis[i], basis[j]) for i in range(r) for j in range(r)]
    )
    for i in range(r):
        w = H.comult_vec(basis[i])
        if not tens.contains(w):
            raise SchemaError("comultiplication does not stay inside B (x) B")
        rows = [[w[pivots[a] * d + pivots[b]] for b in range(r)] for a in range(r)]
        comult.append(rows)
    counit = [H.counit_of(basis[i]) for i in range(r)]
    anti = [coords(H.antipode_vec(basis[i])) for i in range(r)]
    star = [coords(H.star_vec(basis[i])) for i in range(r)]
    antipode = [[anti[i][j] for i in range(r)] for j in range(r)]
    starm = [[star[i][j] for i in range(r)] for j in range(r)]
    labels = ["b%d" % i for i in range(r)]
    sub = HopfStarAlgebra(field, mult, unit, comult, counit, antipode, starm, labels=labels)
    inclusion = Matrix.from_rows(field, [[basis[j][i] for j in range(r)] for i in range(d)], ncols=r)
    return sub, inclusion


def linear_quotient(B):
    """Linear projection along a subspace onto its canonical complement.

    Returns (proj, reps) where proj is the (ambient - dim) x ambient matrix of
    the quotient map in the complement coordinates and reps[i] is the ambient
    index represented by output coordinate i.
    """
    field = B.field
    amb = B.ambient
    reps = B.complement_indices()
    ech = B.echelon()
    cols = []
    for j in range(amb):
        red = ech.reduce(basis_vec(field, amb, j))
        cols.append([red[t] for t in reps])
    proj = Matrix.from_rows(
        field, [[cols[j][i] for j in range(amb)] for i in range(len(reps))], ncols=amb
    )
    return proj, reps
