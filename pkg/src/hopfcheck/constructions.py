"""Builders: finite groups, group algebras, function algebras, tensor and
crossed products, and the subgroups these constructions carry with them.

Field orders default to the exponent of the group involved (so roots of
unity needed by characters exist); tensor and crossed products lift both
inputs to the lcm of their field orders.  The HOPFCHECK_FIELD_ORDER
environment variable overrides the default where no explicit order is given.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

from .corep import Corepresentation
from .cyclotomic import CycField
from .errors import (
    InvarianceViolated,
    KNotInKernel,
    NotASubgroup,
    NotNormalInner,
    SchemaError,
    TheoremViolation,
)
from .hopf import HopfStarAlgebra
from .linalg import Matrix, Subspace, basis_vec, tensor_vec, zero_vec
from .subgroup import (
    QuantumSubgroup,
    coset_algebras,
    make_subgroup,
    normality_report,
)


class FiniteGroup:
    """A finite group given by an explicit multiplication table of indices."""

    __slots__ = ("order", "table", "labels", "identity", "inverses")

    def __init__(self, table, labels=None, validate=True):
        self.order = len(table)
        self.table = [list(row) for row in table]
        n = self.order
        assert n >= 1
        if labels is None:
            labels = ["g%d" % i for i in range(n)]
        assert len(labels) == n and len(set(labels)) == n
        self.labels = list(labels)
        if validate:
            for row in self.table:
                assert len(row) == n and all(0 <= x < n for x in row)
                assert sorted(row) == list(range(n)), "row is not a permutation"
            for j in range(n):
                col = [self.table[i][j] for i in range(n)]
                assert sorted(col) == list(range(n)), "column is not a permutation"
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                            raise SchemaError("multiplication table is not associative")
        idn = [e for e in range(n) if all(self.table[e][j] == j == self.table[j][e] for j in range(n))]
        assert len(idn) == 1, "table has no two-sided identity"
        self.identity = idn[0]
        self.inverses = [0] * n
        for a in range(n):
            inv = [b for b in range(n) if self.table[a][b] == self.identity]
            assert len(inv) == 1
            self.inverses[a] = inv[0]

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self):
        out = 1
        for a in range(self.order):
            out = lcm(out, self.element_order(a))
        return out

    def is_abelian(self):
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a)
        )

    def is_subgroup(self, subset):
        s = set(subset)
        if self.identity not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s) and all(
            self.inverses[a] in s for a in s
        )

    def is_normal_subgroup(self, subset):
        s = set(subset)
        if not self.is_subgroup(s):
            return False
        return all(
            self.table[self.table[g][a]][self.inverses[g]] in s
            for g in range(self.order)
            for a in s
        )

    def index_of(self, label):
        return self.labels.index(label)

    def subset_indices(self, subset):
        """Normalize a subset given by labels or indices to sorted indices."""
        out = []
        for x in subset:
            out.append(x if isinstance(x, int) else self.index_of(x))
        return sorted(set(out))

    @classmethod
    def cyclic(cls, n):
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        labels = ["e"] + ["g" if k == 1 else "g%d" % k for k in range(1, n)]
        return cls(table, labels[:n])

    @classmethod
    def dihedral(cls, n):
        """The dihedral group of order 2n: rotations r^k and reflections s r^k."""
        assert n >= 1
        size = 2 * n
        table = [[0] * size for _ in range(size)]
        for a in range(n):
            for b in range(n):
                table[a][b] = (a + b) % n
                table[a][n + b] = n + (b - a) % n
                table[n + a][b] = n + (a + b) % n
                table[n + a][n + b] = (b - a) % n
        labels = ["e"] + ["r" if k == 1 else "r%d" % k for k in range(1, n)]
        labels += ["s"] + ["sr" if k == 1 else "sr%d" % k for k in range(1, n)]
        return cls(table, labels)

    @classmethod
    def symmetric(cls, n):
        import itertools

        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [
            [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
        ]
        return cls(table, [_perm_label(p) for p in perms])

    @classmethod
    def direct_product(cls, G, H):
        n, m = G.order, H.order
        table = [
            [
                G.table[i1][j1] * m + H.table[i2][j2]
                for j1 in range(n)
                for j2 in range(m)
            ]
            for i1 in range(n)
            for i2 in range(m)
        ]
        labels = [
            "(%s,%s)" % (G.labels[i1], H.labels[i2])
            for i1 in range(n)
            for i2 in range(m)
        ]
        return cls(table, labels)

    def as_dict(self):
        return {"order": self.order, "table": self.table, "labels": self.labels}

    def __repr__(self):
        return "FiniteGroup(order %d)" % self.order


def _perm_label(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + "".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) or "e"


def quotient_group(G: FiniteGroup, K) -> tuple:
    """The group G/K for a normal subgroup K; returns (group, coset_index).

    coset_index[g] is the index in the quotient of the coset gK; coset
    representatives are the minimal element indices, listed in sorted order.
    """
    K = G.subset_indices(K)
    if not G.is_normal_subgroup(K):
        raise NotASubgroup("K is not a normal subgroup")
    coset_of = [-1] * G.order
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        members = sorted({G.table[g][k] for k in K})
        for m in members:
            coset_of[m] = len(reps)
        reps.append(members[0])
    table = [
        [coset_of[G.table[a][b]] for b in reps] for a in reps
    ]
    if len(reps) == G.order:
        labels = [G.labels[r] for r in reps]
    else:
        labels = ["[%s]" % G.labels[r] for r in reps]
    return FiniteGroup(table, labels), coset_of


def _resolve_field_order(default, field_order):
    if field_order is not None:
        return int(field_order)
    env = os.environ.get("HOPFCHECK_FIELD_ORDER")
    if env:
        return int(env)
    return default


def group_algebra(G: FiniteGroup, field_order=None) -> HopfStarAlgebra:
    """The group algebra of G: group-like basis, S(g) = g* = g^{-1}, h = delta_e."""
    n = G.order
    field = CycField(_resolve_field_order(G.exponent(), field_order))
    one, zero = field.one, field.zero
    mult = [
        [[one if k == G.table[i][j] else zero for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    unit = [one if i == G.identity else zero for i in range(n)]
    comult = [
        [[one if (j == i and k == i) else zero for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    counit = [one] * n
    antipode = [[one if j == G.inverses[i] else zero for i in range(n)] for j in range(n)]
    H = HopfStarAlgebra(field, mult, unit, comult, counit, antipode, antipode, labels=list(G.labels))
    H._haar = [one if i == G.identity else zero for i in range(n)]
    H.meta = {"kind": "group_algebra", "group": G}
    H.attached_pw = [
        Corepresentation(H, [[basis_vec(field, n, i)]]) for i in range(n)
    ]
    return H


def function_algebra(G: FiniteGroup, field_order=None) -> HopfStarAlgebra:
    """Functions on G: pointwise product, Delta from the group law, real basis."""
    n = G.order
    field = CycField(_resolve_field_order(G.exponent(), field_order))
    one, zero = field.one, field.zero
    mult = [
        [[one if (i == j and k == i) else zero for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    unit = [one] * n
    comult = [
        [[one if G.table[j][k] == i else zero for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    counit = [one if i == G.identity else zero for i in range(n)]
    antipode = [[one if j == G.inverses[i] else zero for i in range(n)] for j in range(n)]
    star = [[one if j == i else zero for i in range(n)] for j in range(n)]
    H = HopfStarAlgebra(field, mult, unit, comult, counit, antipode, star, labels=list(G.labels))
    H._haar = [field.from_rational(Fraction(1, n))] * n
    H.meta = {"kind": "function_algebra", "group": G}
    return H


def group_of_function_algebra(F: HopfStarAlgebra) -> FiniteGroup:
    """Recover the group underlying a function algebra from its tensors.

    Works on algebras loaded from files: the basis must multiply pointwise
    and the comultiplication must be a group law on the index set.
    """
    if F.meta.get("kind") == "function_algebra" and F.meta.get("group") is not None:
        return F.meta["group"]
    n = F.dim
    field = F.field
    one, zero = field.one, field.zero
    for i in range(n):
        for j in range(n):
            want = one if i == j else zero
            for k in range(n):
                if F.mult[i][j][k] != (want if k == i else zero):
                    raise SchemaError("not a function algebra: product is not pointwise")
    if F.unit != [one] * n:
        raise SchemaError("not a function algebra: unit is not the constant one")
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j, k, c in F._comult_nz[i]:
            if c != one or table[j][k] is not None:
                raise SchemaError("not a function algebra: comultiplication is not a group law")
            table[j][k] = i
    if any(x is None for row in table for x in row):
        raise SchemaError("not a function algebra: comultiplication is not a group law")
    G = FiniteGroup(table, list(F.labels))
    F.meta.update({"kind": "function_algebra", "group": G})
    return G


def subgroup_ideal(F: HopfStarAlgebra, subset) -> Subspace:
    """The ideal of functions vanishing on a subgroup of G, inside F(G)."""
    G = group_of_function_algebra(F)
    H = G.subset_indices(subset)
    if not G.is_subgroup(H):
        raise NotASubgroup("the subset %r is not a subgroup" % (H,))
    hs = set(H)
    vecs = [basis_vec(F.field, F.dim, g) for g in range(G.order) if g not in hs]
    return Subspace.from_vectors(F.field, F.dim, vecs)


def lift_algebra(H: HopfStarAlgebra, n: int) -> HopfStarAlgebra:
    """The same algebra with scalars lifted into the order-n cyclotomic field."""
    if n == H.field.n:
        return H
    field = CycField(n)
    lift = field.lift

    def lv(vec):
        return [lift(x) for x in vec]

    mult = [[lv(H.mult[i][j]) for j in range(H.dim)] for i in range(H.dim)]
    comult = [[lv(row) for row in H.comult[i]] for i in range(H.dim)]
    out = HopfStarAlgebra(
        field,
        mult,
        lv(H.unit),
        comult,
        lv(H.counit),
        [lv(r) for r in H.antipode.rows],
        [lv(r) for r in H.star.rows],
        labels=list(H.labels),
    )
    if H._haar is not None:
        out._haar = lv(H._haar)
    out.meta = dict(H.meta)
    src = H.attached_pw
    cached = getattr(H, "_pw_cache", None)
    if cached is not None:
        src = cached.coreps
    if src is not None:
        out.attached_pw = [
            Corepresentation(out, [[lv(v) for v in row] for row in c.entries]) for c in src
        ]
    return out


def tensor_product(H1: HopfStarAlgebra, H2: HopfStarAlgebra) -> HopfStarAlgebra:
    """Componentwise tensor product Hopf *-algebra on the d1*d2 basis."""
    n = lcm(H1.field.n, H2.field.n)
    A, B = lift_algebra(H1, n), lift_algebra(H2, n)
    field = A.field
    d1, d2 = A.dim, B.dim
    d = d1 * d2
    zero = field.zero

    mult = [[None] * d for _ in range(d)]
    for i1 in range(d1):
        for i2 in range(d2):
            for j1 in range(d1):
                for j2 in range(d2):
                    mult[i1 * d2 + i2][j1 * d2 + j2] = tensor_vec(
                        A.mult[i1][j1], B.mult[i2][j2]
                    )
    unit = tensor_vec(A.unit, B.unit)
    comult = []
    for i1 in range(d1):
        ca = A._comult_nz[i1]
        for i2 in range(d2):
            rows = [[zero] * d for _ in range(d)]
            for j1, k1, c1 in ca:
                for j2, k2, c2 in B._comult_nz[i2]:
                    rows[j1 * d2 + j2][k1 * d2 + k2] = c1 * c2
            comult.append(rows)
    counit = tensor_vec(A.counit, B.counit)
    antipode = A.antipode.kron(B.antipode)
    star = A.star.kron(B.star)
    labels = [
        "(%s,%s)" % (la, lb) for la in A.labels for lb in B.labels
    ]
    X = HopfStarAlgebra(
        field,
        mult,
        unit,
        comult,
        counit,
        [list(r) for r in antipode.rows],
        [list(r) for r in star.rows],
        labels=labels,
    )
    if A._haar is not None and B._haar is not None:
        X._haar = tensor_vec(A._haar, B._haar)
    X.meta = {"kind": "tensor_product", "factors": (A, B)}
    if A.attached_pw is not None and B.attached_pw is not None:
        pw = []
        for u in A.attached_pw:
            for v in B.attached_pw:
                entries = [
                    [
                        tensor_vec(u.entries[i1][j1], v.entries[i2][j2])
                        for j1 in range(u.dim)
                        for j2 in range(v.dim)
                    ]
                    for i1 in range(u.dim)
                    for i2 in range(v.dim)
                ]
                pw.append(Corepresentation(X, entries))
        X.attached_pw = pw
    return X


def tensor_subgroup(Q1: QuantumSubgroup, Q2: QuantumSubgroup) -> QuantumSubgroup:
    """The product subgroup N1 x N2 of G1 x G2, with its coset identity.

    The projection is pi1 (x) pi2; the coset algebra of the result must equal
    the tensor product of the two coset algebras, and this is asserted.
    """
    T = tensor_product(Q1.parent, Q2.parent)
    field = T.field
    p1 = Matrix.from_rows(
        field, [[field.lift(x) for x in row] for row in Q1.proj.rows], ncols=Q1.parent.dim
    ) if Q1.parent.field.n != field.n else Q1.proj
    p2 = Matrix.from_rows(
        field, [[field.lift(x) for x in row] for row in Q2.proj.rows], ncols=Q2.parent.dim
    ) if Q2.parent.field.n != field.n else Q2.proj
    big = p1.kron(p2)
    ideal = big.kernel()
    Q = make_subgroup(T, ideal)
    assert Q.quotient.dim == Q1.quotient.dim * Q2.quotient.dim

    A1, _ = coset_algebras(Q1)
    A2, _ = coset_algebras(Q2)
    tens = Subspace.from_vectors(
        field,
        T.dim,
        [
            tensor_vec([field.lift(x) for x in b1], [field.lift(y) for y in b2])
            for b1 in A1.basis()
            for b2 in A2.basis()
        ],
    )
    A_T, _ = coset_algebras(Q)
    if A_T != tens:
        raise TheoremViolation(
            "coset algebra of a product subgroup is not the tensor of cosets"
        )
    Q.meta["factors"] = (Q1, Q2)
    return Q


class GroupAction:
    """An action of a finite group on a Hopf *-algebra by Hopf *-automorphisms."""

    __slots__ = ("group", "target", "maps")

    def __init__(self, group: FiniteGroup, target: HopfStarAlgebra, maps, validate=True):
        assert len(maps) == group.order
        self.group = group
        self.target = target
        self.maps = [
            m if isinstance(m, Matrix) else Matrix(target.field, m) for m in maps
        ]
        for m in self.maps:
            if m.nrows != target.dim or m.ncols != target.dim:
                raise SchemaError("action matrices must be %d x %d" % (target.dim, target.dim))
        if validate:
            self._validate()

    def _validate(self):
        G, A = self.group, self.target
        d = A.dim
        field = A.field
        ident = Matrix.identity(field, d)
        if self.maps[G.identity] != ident:
            raise SchemaError("the identity of the group must act as the identity")
        for s in range(G.order):
            for t in range(G.order):
                if self.maps[s] * self.maps[t] != self.maps[G.table[s][t]]:
                    raise SchemaError("action is not a group homomorphism")
        for t, M in enumerate(self.maps):
            if M.apply(A.unit_vec()) != A.unit_vec():
                raise SchemaError("action map %d does not fix the unit" % t)
            if M * A.antipode != A.antipode * M:
                raise SchemaError("action map %d does not commute with the antipode" % t)
            cols = M.columns()
            for i in range(d):
                for j in range(d):
                    if M.apply(A.mult[i][j]) != A.product(cols[i], cols[j]):
                        raise SchemaError("action map %d is not multiplicative" % t)
            for i in range(d):
                lhs = A.comult_vec(cols[i])
                rhs = _pair_apply(M, M, A.comult_vec(basis_vec(field, d, i)))
                if lhs != rhs:
                    raise SchemaError("action map %d does not preserve the coproduct" % t)
                if A.counit_of(cols[i]) != A.counit[i]:
                    raise SchemaError("action map %d does not preserve the counit" % t)
                if A.star_vec(cols[i]) != M.apply(A.star_vec(basis_vec(field, d, i))):
                    raise SchemaError("action map %d does not commute with *" % t)

    @classmethod
    def trivial(cls, group, target):
        ident = Matrix.identity(target.field, target.dim)
        return cls(group, target, [ident] * group.order, validate=False)

    def kernel_indices(self):
        ident = Matrix.identity(self.target.field, self.target.dim)
        return [t for t in range(self.group.order) if self.maps[t] == ident]

    def __repr__(self):
        return "GroupAction(|G|=%d on dim %d)" % (self.group.order, self.target.dim)


def _pair_apply(M, N, v):
    n2 = N.ncols
    out = zero_vec(M.field, M.nrows * N.nrows)
    for idx, val in enumerate(v):
        if not val:
            continue
        i, j = divmod(idx, n2)
        for a in range(M.nrows):
            c1 = M.rows[a][i]
            if not c1:
                continue
            for b in range(N.nrows):
                c2 = N.rows[b][j]
                if c2:
                    out[a * N.nrows + b] = out[a * N.nrows + b] + val * c1 * c2
    return out


def inversion_action(F: HopfStarAlgebra) -> GroupAction:
    """The order-2 action of Z2 on F(G), G abelian, by delta_g -> delta_{g^{-1}}."""
    G = F.meta.get("group")
    if F.meta.get("kind") != "function_algebra" or G is None:
        raise SchemaError("inversion_action needs an algebra built by function_algebra")
    field = F.field
    n = F.dim
    perm = Matrix.from_rows(
        field,
        [
            [field.one if j == G.inverses[i] else field.zero for i in range(n)]
            for j in range(n)
        ],
        ncols=n,
    )
    Z2 = FiniteGroup.cyclic(2)
    return GroupAction(Z2, F, [Matrix.identity(field, n), perm])


def crossed_product(A: HopfStarAlgebra, action: GroupAction) -> HopfStarAlgebra:
    """The smash product A x| Gamma, with Gamma group-like in the coproduct."""
    if action.target is not A:
        raise SchemaError("the action must be defined on the algebra being crossed")
    G = action.group
    n = lcm(A.field.n, G.exponent())
    if n != A.field.n:
        A2 = lift_algebra(A, n)
        maps = [
            Matrix.from_rows(
                A2.field, [[A2.field.lift(x) for x in row] for row in m.rows], ncols=A.dim
            )
            for m in action.maps
        ]
        action = GroupAction(G, A2, maps, validate=False)
        A = A2
    field = A.field
    dA, o = A.dim, G.order
    d = dA * o
    zero = field.zero

    def mixed(vec, t):
        out = zero_vec(field, d)
        for k, c in enumerate(vec):
            if c:
                out[k * o + t] = c
        return out

    mult = [[None] * d for _ in range(d)]
    acols = [m.columns() for m in action.maps]
    for i in range(dA):
        for s in range(o):
            for j in range(dA):
                for t in range(o):
                    w = A.product(basis_vec(field, dA, i), acols[s][j])
                    mult[i * o + s][j * o + t] = mixed(w, G.table[s][t])
    unit = mixed(A.unit, G.identity)
    comult = []
    for i in range(dA):
        nz = A._comult_nz[i]
        for t in range(o):
            rows = [[zero] * d for _ in range(d)]
            for j, k, c in nz:
                rows[j * o + t][k * o + t] = c
            comult.append(rows)
    counit = [A.counit[i] for i in range(dA) for _t in range(o)]
    anti_cols = []
    star_cols = []
    s_of = A.antipode.columns()
    st_of = A.star.columns()
    for i in range(dA):
        for t in range(o):
            ti = G.inverses[t]
            anti_cols.append(mixed(action.maps[ti].apply(s_of[i]), ti))
            star_cols.append(mixed(action.maps[ti].apply(st_of[i]), ti))
    antipode = [[anti_cols[i][j] for i in range(d)] for j in range(d)]
    star = [[star_cols[i][j] for i in range(d)] for j in range(d)]
    labels = ["%s|%s" % (A.labels[i], G.labels[t]) for i in range(dA) for t in range(o)]
    X = HopfStarAlgebra(field, mult, unit, comult, counit, antipode, star, labels=labels)
    if A._haar is not None:
        X._haar = [
            A._haar[i] if t == G.identity else zero for i in range(dA) for t in range(o)
        ]
    X.meta = {"kind": "crossed_product", "inner": A, "group": G, "action": action}
    src = A.attached_pw
    cached = getattr(A, "_pw_cache", None)
    if cached is not None:
        src = cached.coreps
    if src is not None:
        pw = []
        for u in src:
            for t in range(o):
                entries = [
                    [mixed(u.entries[i][j], t) for j in range(u.dim)]
                    for i in range(u.dim)
                ]
                pw.append(Corepresentation(X, entries))
        X.attached_pw = pw
    return X


def crossed_canonical_subgroup(X: HopfStarAlgebra) -> QuantumSubgroup:
    """The copy of the acting group's dual inside a crossed product.

    pi(a gamma) = eps(a) gamma maps onto the group algebra of Gamma; the
    resulting subgroup is normal (all four criteria) and its coset algebra
    is the embedded copy of A, both of which are asserted.
    """
    info = _crossed_info(X)
    A, G = info["inner"], info["group"]
    field = X.field
    dA, o = A.dim, G.order
    P = Matrix.zeros(field, o, X.dim)
    for i in range(dA):
        e = A.counit[i]
        if e:
            for t in range(o):
                P.rows[t][i * o + t] = e
    Q = make_subgroup(X, P.kernel())
    report = normality_report(Q)
    if not report.normal:
        raise TheoremViolation("the canonical crossed-product subgroup is not normal")
    copy_a = Subspace.from_vectors(
        field,
        X.dim,
        [basis_vec(field, X.dim, i * o + G.identity) for i in range(dA)],
    )
    A_GN, _ = coset_algebras(Q)
    if A_GN != copy_a:
        raise TheoremViolation("coset algebra differs from the embedded copy of A")
    Q.meta["group"] = G
    Q.meta["pi_to_group"] = P
    return Q


def _crossed_info(X):
    if X.meta.get("kind") != "crossed_product":
        raise SchemaError("expected an algebra built by crossed_product")
    return X.meta


def crossed_general_subgroup(X: HopfStarAlgebra, I, K) -> QuantumSubgroup:
    """The subgroup (A/I) x| (Gamma/K) of A x| Gamma.

    I must be an action-invariant Hopf *-ideal with A/I normal in A, and K a
    normal subgroup of Gamma acting trivially.  The coset algebra is asserted
    to be the span of B x| K for B the coset algebra of the inner pair, and
    the trivial-set size must factor accordingly.
    """
    info = _crossed_info(X)
    A, G, action = info["inner"], info["group"], info["action"]
    field = X.field
    dA, o = A.dim, G.order

    K = G.subset_indices(K)
    if not G.is_normal_subgroup(K):
        raise NotASubgroup("K is not a normal subgroup of the acting group")
    kernel = set(action.kernel_indices())
    for t in K:
        if t not in kernel:
            raise KNotInKernel("group element %s acts nontrivially" % G.labels[t])

    vecs = I.basis() if isinstance(I, Subspace) else [list(v) for v in I]
    I = Subspace.from_vectors(
        field, dA, [[field.lift(x) for x in v] for v in vecs]
    )
    for t in range(o):
        if I.map_by(action.maps[t]) != I:
            raise InvarianceViolated(
                "the ideal is not invariant under %s" % G.labels[t]
            )
    Q_A = make_subgroup(A, I)
    inner_report = normality_report(Q_A)
    if not inner_report.normal:
        raise NotNormalInner("A/I is not a normal quantum subgroup of A")

    GQ, coset_of = quotient_group(G, K)
    rep_of = {}
    for t in range(o):
        rep_of.setdefault(coset_of[t], t)
    sec = Q_A.section()
    induced = [Q_A.proj * action.maps[rep_of[c]] * sec for c in range(GQ.order)]
    act_q = GroupAction(GQ, Q_A.quotient, induced)
    Y = crossed_product(Q_A.quotient, act_q)

    dq = Q_A.quotient.dim
    P = Matrix.zeros(field, Y.dim, X.dim)
    for i in range(dA):
        for t in range(o):
            c = coset_of[t]
            for b in range(dq):
                pv = Q_A.proj.rows[b][i]
                if pv:
                    P.rows[b * GQ.order + c][i * o + t] = pv
    Q = make_subgroup(X, P.kernel())
    assert Q.quotient.dim == Y.dim, "quotient dimension does not match (A/I) x| (Gamma/K)"

    report = normality_report(Q)
    if not report.normal:
        raise TheoremViolation("the general crossed-product subgroup is not normal")

    B, _ = coset_algebras(Q_A)
    emb = []
    for b in B.basis():
        for t in K:
            v = zero_vec(field, X.dim)
            for k, c in enumerate(b):
                if c:
                    v[k * o + t] = c
            emb.append(v)
    bk = Subspace.from_vectors(field, X.dim, emb)
    A_GN, _ = coset_algebras(Q)
    if A_GN != bk:
        raise TheoremViolation("coset algebra is not the span of B x| K")
    if len(report.trivial_set) != len(inner_report.trivial_set) * len(K):
        raise TheoremViolation("trivial set size does not factor as |S(N)| * |K|")
    Q.meta["inner"] = Q_A
    Q.meta["quotient_algebra"] = Y
    Q.meta["projection_to_quotient"] = P
    return Q
