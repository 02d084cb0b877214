"""Exact splitting of the dual algebra into matrix blocks.

The dual of a finite quantum group is split by computing its center with
exact linear algebra and refining it under multiplication operators into
common eigenlines.  Eigenvalues are LOCATED numerically in the standard
complex embedding, RECONSTRUCTED as exact field elements (a 2x2 rational
system when phi(n) <= 2, an integer-relation lattice otherwise), and then
VERIFIED exactly; the numeric step is a heuristic and never a source of
truth.  When verification cannot account for the whole space the field is
too small and SplittingFailed names the order to raise.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import SplittingFailed
from .linalg import Matrix, Subspace, solve_linear, zero_vec

_NUMERIC_TOL = 1e-7


def dual_product(H, f, g):
    """Product in the dual algebra: (f g)(e_i) = (f (x) g)(Delta e_i)."""
    out = zero_vec(H.field, H.dim)
    for i in range(H.dim):
        acc = H.field.zero
        for j, k, c in H._comult_nz[i]:
            fj = f[j]
            if fj:
                gk = g[k]
                if gk:
                    acc = acc + fj * gk * c
        out[i] = acc
    return out


def dual_unit(H):
    return list(H.counit)


def center_of_dual(H):
    """Canonical basis of the center of the dual algebra."""
    d = H.dim
    field = H.field
    rows = []
    for t in range(d):
        for i in range(d):
            row = zero_vec(field, d)
            for j, k, c in H._comult_nz[i]:
                if k == t:
                    row[j] = row[j] + c
                if j == t:
                    row[k] = row[k] - c
            rows.append(row)
    return Matrix.from_rows(field, rows, ncols=d).kernel()


def _embed_matrix_complex(M):
    import numpy as np

    return np.array([[c.embed() for c in row] for row in M.rows], dtype=complex)


def _numeric_eigenvalues(M, precision):
    if precision is None:
        import numpy as np

        vals = np.linalg.eigvals(_embed_matrix_complex(M))
        return [complex(v) for v in vals]
    from mpmath import mp

    old = mp.prec
    try:
        mp.prec = precision
        rows = []
        for row in M.rows:
            out = []
            for c in row:
                n = c.field.n
                acc = mp.mpc(0)
                for k, co in enumerate(c.coeffs):
                    if co:
                        ang = 2 * mp.pi * k / n
                        acc += (mp.mpf(co.numerator) / co.denominator) * mp.mpc(
                            mp.cos(ang), mp.sin(ang)
                        )
                out.append(acc)
            rows.append(out)
        vals = mp.eig(mp.matrix(rows), left=False, right=False)
        return [complex(v) for v in vals]
    finally:
        mp.prec = old


def _cluster(values, tol):
    reps = []
    for v in values:
        if all(abs(v - r) > tol for r in reps):
            reps.append(v)
    return reps


def _reconstruct_candidates(field, z, max_den):
    """Exact field elements plausibly equal to the complex number z."""
    phi = field.phi
    out = []
    if abs(z.imag) < _NUMERIC_TOL:
        out.append(field.from_rational(Fraction(z.real).limit_denominator(max_den)))
    if phi == 1:
        return out
    zeta = field.zeta().embed()
    if phi == 2:
        # z = c0 + c1 * zeta with real c0, c1: a square 2x2 real system
        if abs(zeta.imag) > 1e-12:
            c1 = z.imag / zeta.imag
            c0 = z.real - c1 * zeta.real
            out.append(
                field.scalar(
                    [
                        Fraction(c0).limit_denominator(max_den),
                        Fraction(c1).limit_denominator(max_den),
                    ]
                )
            )
        return out
    out.extend(_lll_candidates(field, z, max_den))
    return out


def _lll_candidates(field, z, max_den):
    """Integer-relation reconstruction for phi(n) > 2 via exact LLL."""
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix

    phi = field.phi
    scale = 10 ** 12
    basis_embeds = [field.zeta(k).embed() for k in range(phi)]
    rows = []
    for k in range(phi):
        row = [0] * (phi + 1)
        row[k] = max(1, scale // (100 * max_den))
        rows.append(row + [round(scale * basis_embeds[k].real), round(scale * basis_embeds[k].imag)])
    last = [0] * (phi + 1)
    last[phi] = max(1, scale // (100 * max_den))
    rows.append(last + [round(-scale * z.real), round(-scale * z.imag)])
    dm = DomainMatrix([[ZZ(x) for x in row] for row in rows], (phi + 1, phi + 3), ZZ)
    try:
        red = dm.lll()
    except Exception:
        return []
    weight = max(1, scale // (100 * max_den))
    cands = []
    for row in red.to_list():
        ints = [int(x) for x in row]
        q = ints[phi] // weight if ints[phi] % weight == 0 else None
        if not q:
            continue
        if any(a % weight for a in ints[:phi]):
            continue
        coeffs = [Fraction(a // weight, q) for a in ints[:phi]]
        cands.append(field.scalar(coeffs))
    return cands


def exact_eigen_split(M, gauge=0):
    """All eigenpairs of M over its own field, exactly verified.

    Returns a list of (eigenvalue, eigenspace) covering the whole space;
    raises SplittingFailed when the spectrum does not lie in the field.
    """
    field = M.field
    n = M.nrows
    for precision, max_den in ((None, 10 ** 6), (None, 10 ** 10), (240, 10 ** 12)):
        approx = _cluster(_numeric_eigenvalues(M, precision), _NUMERIC_TOL)
        found = []
        seen = set()
        total = 0
        for z in approx:
            for cand in _reconstruct_candidates(field, z, max_den):
                if cand.coeffs in seen:
                    continue
                seen.add(cand.coeffs)
                shifted = Matrix.from_rows(
                    field,
                    [
                        [
                            M.rows[i][j] - cand if i == j else M.rows[i][j]
                            for j in range(n)
                        ]
                        for i in range(n)
                    ],
                    ncols=n,
                )
                ker = shifted.kernel()
                if ker.dim:
                    found.append((cand, ker))
                    total += ker.dim
                    break
        if total == n:
            found.sort(key=lambda p: p[0].sort_key())
            return found
    raise SplittingFailed(field.n, "eigenvalues of a multiplication operator not found in the field")


def split_center(H, gauge=0):
    """Minimal central idempotents of the dual algebra, exactly verified."""
    field = H.field
    center = center_of_dual(H)
    c = center.dim
    zbasis = center.basis()
    ech = center.echelon()

    def coords(vec):
        co = ech.coefficients(vec)
        assert co is not None, "center is not closed under products"
        return co

    blocks = [Subspace.full(field, c)]
    for t in range(c):
        if all(b.dim == 1 for b in blocks):
            break
        cols = []
        for b in range(c):
            cols.append(coords(dual_product(H, zbasis[t], zbasis[b])))
        Mt = Matrix.from_rows(field, [[cols[b][a] for b in range(c)] for a in range(c)], ncols=c)
        refined = []
        for V in blocks:
            if V.dim == 1:
                refined.append(V)
                continue
            R = V.basis()
            imgs = [Mt.apply(r) for r in R]
            vech = V.echelon()
            sub_rows = []
            for img in imgs:
                co = vech.coefficients(img)
                assert co is not None, "refinement block is not invariant"
                sub_rows.append(co)
            Mv = Matrix.from_rows(
                field, [[sub_rows[b][a] for b in range(V.dim)] for a in range(V.dim)], ncols=V.dim
            )
            for _val, ker in exact_eigen_split(Mv, gauge):
                vecs = []
                for kv in ker.basis():
                    v = zero_vec(field, c)
                    for coef, row in zip(kv, R):
                        if coef:
                            for j, s in enumerate(row):
                                if s:
                                    v[j] = v[j] + coef * s
                    vecs.append(v)
                refined.append(Subspace.from_vectors(field, c, vecs))
        blocks = refined
    if any(b.dim != 1 for b in blocks):
        raise SplittingFailed(field.n, "center did not refine into lines")

    idems = []
    for b in blocks:
        vc = b.basis()[0]
        v = zero_vec(field, H.dim)
        for coef, row in zip(vc, zbasis):
            if coef:
                for j, s in enumerate(row):
                    if s:
                        v[j] = v[j] + coef * s
        vv = dual_product(H, v, v)
        idx = next(i for i, x in enumerate(v) if x)
        a = vv[idx] * v[idx].inverse()
        if not a:
            raise SplittingFailed(field.n, "nilpotent line in the center")
        inv = a.inverse()
        p = [inv * x for x in v]
        assert dual_product(H, p, p) == p, "central idempotent verification failed"
        idems.append(p)
    total = [field.zero] * H.dim
    for p in idems:
        total = [a + b for a, b in zip(total, p)]
    assert total == dual_unit(H), "central idempotents do not sum to the counit"
    return idems


# -- polynomial helpers over one field -------------------------------------


def _poly_trim(p):
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p


def _poly_deriv(field, p):
    out = [p[k] * k for k in range(1, len(p))]
    return out or [field.zero]


def _poly_mod(field, a, b):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    db = len(b) - 1
    if db == 0:
        return [field.zero]
    inv = b[-1].inverse()
    while any(a) and len(a) - 1 >= db:
        c = a[-1] * inv
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - c * b[j]
        a = _poly_trim(a)
    return a


def _poly_gcd_degree(field, a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while any(b):
        a, b = b, _poly_mod(field, a, b)
    return len(_poly_trim(a)) - 1


def _poly_eval_scalar(field, p, x):
    acc = field.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def exact_poly_roots(field, coeffs):
    """Verified roots in the field of an exactly known polynomial."""
    import numpy as np

    deg = len(_poly_trim(coeffs)) - 1
    roots = []
    seen = set()
    for max_den in (10 ** 6, 10 ** 12):
        numeric = np.roots([c.embed() for c in reversed(_poly_trim(coeffs))])
        for z in _cluster([complex(v) for v in numeric], _NUMERIC_TOL):
            for cand in _reconstruct_candidates(field, z, max_den):
                if cand.coeffs in seen:
                    continue
                seen.add(cand.coeffs)
                if not _poly_eval_scalar(field, coeffs, cand):
                    roots.append(cand)
        if len(roots) == deg:
            break
    roots.sort(key=lambda s: s.sort_key())
    return roots


class _Corner:
    """A unital corner subalgebra of the dual, in ambient dual coordinates."""

    def __init__(self, H, basis, unit):
        self.H = H
        self.basis = basis
        self.unit = unit
        self.space = Subspace.from_vectors(H.field, H.dim, basis)

    @property
    def dim(self):
        return self.space.dim

    def product(self, x, y):
        return dual_product(self.H, x, y)

    def min_poly(self, x):
        """Monic minimal polynomial of x inside the corner."""
        field = self.H.field
        powers = [list(self.unit)]
        cur = list(x)
        while True:
            stacked = Matrix.from_rows(field, [list(r) for r in powers], ncols=self.H.dim)
            sol = solve_linear(stacked.transpose(), cur)
            if sol is not None:
                return [-c for c in sol] + [field.one]
            powers.append(list(cur))
            cur = self.product(cur, x)


def find_primitive_idempotent(H, block_basis, block_unit, gauge=0):
    """A primitive idempotent of the matrix block p*D, exactly verified."""
    field = H.field
    corner_basis = block_basis
    unit = list(block_unit)
    guard = 0
    rng = random.Random(gauge * 7919 + 17)
    while True:
        guard += 1
        if guard > 64:
            raise SplittingFailed(field.n, "primitive idempotent search exhausted")
        space = Subspace.from_vectors(field, H.dim, corner_basis)
        dim = space.dim
        if dim == 1:
            return unit
        line = Subspace.from_vectors(field, H.dim, [unit])
        candidates = [list(b) for b in corner_basis]
        if gauge:
            rng.shuffle(candidates)
        for _extra in range(8):
            mix = zero_vec(field, H.dim)
            for b in corner_basis:
                coef = field.from_rational(Fraction(rng.randrange(-3, 4)))
                if coef:
                    for j, s in enumerate(b):
                        if s:
                            mix[j] = mix[j] + coef * s
            candidates.append(mix)
        corner = _Corner(H, corner_basis, unit)
        progressed = False
        for x in candidates:
            if not any(x) or line.contains(x):
                continue
            p = corner.min_poly(x)
            if len(p) - 1 < 2:
                continue
            dp = _poly_deriv(field, p)
            if _poly_gcd_degree(field, p, dp) != 0:
                continue  # not squarefree: skip this candidate
            roots = exact_poly_roots(field, p)
            if len(roots) != len(p) - 1:
                continue  # does not split over the field
            mu = roots[0]
            others = roots[1:]
            q = list(unit)
            for nu in others:
                diff = (mu - nu).inverse()
                shifted = [
                    (xc - nu * uc) * diff for xc, uc in zip(x, unit)
                ]
                q = corner.product(q, shifted)
            assert corner.product(q, q) == q, "spectral idempotent verification failed"
            if q == unit or not any(q):
                continue
            new_basis = []
            for b in corner_basis:
                new_basis.append(corner.product(corner.product(q, b), q))
            sub = Subspace.from_vectors(field, H.dim, new_basis)
            corner_basis = sub.basis()
            unit = q
            progressed = True
            break
        if not progressed:
            raise SplittingFailed(field.n, "no splitting element found in a matrix block")
