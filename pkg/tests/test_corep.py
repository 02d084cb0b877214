from fractions import Fraction

from hopfcheck.catalog import CATALOG_NAMES
from hopfcheck.corep import conjugate, fusion, peter_weyl
from hopfcheck.linalg import Subspace, tensor_vec, zero_vec


def comult_apply(H, u):
    """Image of a vector under the comultiplication, flattened to length d*d."""
    d = H.dim
    out = zero_vec(H.field, d * d)
    for i in range(d):
        if u[i].is_zero():
            continue
        for j in range(d):
            for k in range(d):
                c = H.comult[i][j][k]
                if not c.is_zero():
                    out[j * d + k] = out[j * d + k] + u[i] * c
    return out


# --- block decompositions ----------------------------------------------------


def test_irrep_dimensions(algebras):
    assert peter_weyl(algebras["f_s3"]).dims == [1, 1, 2]
    assert peter_weyl(algebras["f_d4"]).dims == [1, 1, 1, 1, 2]
    assert peter_weyl(algebras["c_s3"]).dims == [1] * 6
    assert peter_weyl(algebras["f_z6"]).dims == [1] * 6
    assert peter_weyl(algebras["f_z3_rtimes_z2"]).dims == [1] * 6


def test_dimension_sum_rule(algebras):
    for name in CATALOG_NAMES:
        H = algebras[name]
        P = peter_weyl(H)
        assert sum(d * d for d in P.dims) == H.dim
        assert sum(b.dim for b in P.blocks()) == H.dim


def test_blocks_are_independent(algebras):
    H = algebras["f_s3"]
    P = peter_weyl(H)
    total = Subspace.zero(H.field, H.dim)
    for b in P.blocks():
        assert total.intersect(b).dim == 0
        total = total.sum_with(b)
    assert total.dim == H.dim


def test_trivial_corep_is_the_unit(algebras):
    for name in ("f_s3", "c_s3", "f_d4"):
        H = algebras[name]
        P = peter_weyl(H)
        triv = P.coreps[P.triv_index]
        assert triv.dim == 1
        assert triv.entries[0][0] == H.unit_vec()


def test_every_corep_verifies(algebras):
    for name in CATALOG_NAMES:
        P = peter_weyl(algebras[name])
        for c in P.coreps:
            assert c.verify() is None


def test_corep_counit_and_comult_identities(algebras):
    H = algebras["f_s3"]
    P = peter_weyl(H)
    c = P.coreps[2]
    assert c.dim == 2
    for i in range(2):
        for j in range(2):
            eps = H.counit_of(c.entries[i][j])
            assert eps.is_one() if i == j else eps.is_zero()
            lhs = comult_apply(H, c.entries[i][j])
            rhs = zero_vec(H.field, H.dim * H.dim)
            for k in range(2):
                t = tensor_vec(c.entries[i][k], c.entries[k][j])
                rhs = [a + b for a, b in zip(rhs, t)]
            assert lhs == rhs


def test_group_algebra_coreps_are_group_likes(algebras):
    H = algebras["c_s3"]
    P = peter_weyl(H)
    seen = set()
    for c in P.coreps:
        u = c.entries[0][0]
        assert comult_apply(H, u) == tensor_vec(u, u)
        nonzero = [i for i, x in enumerate(u) if not x.is_zero()]
        assert len(nonzero) == 1 and u[nonzero[0]].is_one()
        seen.add(nonzero[0])
    assert seen == set(range(6))


# --- Haar orthogonality --------------------------------------------------------


def test_haar_vanishes_off_trivial_block(algebras):
    for name in ("f_s3", "f_d4", "c_s3"):
        H = algebras[name]
        P = peter_weyl(H)
        for idx, c in enumerate(P.coreps):
            for i in range(c.dim):
                for j in range(c.dim):
                    val = H.haar_of(c.entries[i][j])
                    if idx == P.triv_index:
                        assert val.is_one()
                    else:
                        assert val.is_zero()


def test_entry_orthogonality_gram(algebras):
    # h(u_ij u_rs^*) = delta_ir delta_js / dim for the two dimensional block
    H = algebras["f_s3"]
    c = peter_weyl(H).coreps[2]
    half = H.field.from_rational(Fraction(1, 2))
    pairs = [(i, j) for i in range(2) for j in range(2)]
    gram = [
        [
            H.haar_of(H.product(c.entries[i][j], H.star_vec(c.entries[r][s])))
            for (r, s) in pairs
        ]
        for (i, j) in pairs
    ]
    for a in range(4):
        for b in range(4):
            assert gram[a][b] == (half if a == b else H.field.zero)


def test_character_orthonormality(algebras):
    for name in ("f_s3", "f_d4"):
        H = algebras[name]
        P = peter_weyl(H)
        chars = [c.character() for c in P.coreps]
        for a, xa in enumerate(chars):
            for b, xb in enumerate(chars):
                val = H.haar_of(H.product(xa, H.star_vec(xb)))
                assert val.is_one() if a == b else val.is_zero()


def test_standard_character_values(algebras):
    H = algebras["f_s3"]
    c = peter_weyl(H).coreps[2]
    by_label = dict(zip(H.labels, c.character()))
    assert by_label["e"].as_fraction() == 2
    for t in ("(12)", "(13)", "(23)"):
        assert by_label[t].is_zero()
    for r in ("(123)", "(132)"):
        assert by_label[r].as_fraction() == -1


# --- fusion rules ---------------------------------------------------------------


def test_fusion_table_of_s3(algebras):
    P = peter_weyl(algebras["f_s3"])
    N = fusion(P)
    assert N == [
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 0, 1], [0, 0, 1], [1, 1, 1]],
    ]
    assert P.triv_index == 1
    assert [conjugate(P, i, N) for i in range(3)] == [0, 1, 2]


def test_fusion_with_trivial_is_identity(algebras):
    for name in ("f_s3", "f_d4", "c_s3"):
        P = peter_weyl(algebras[name])
        N = fusion(P)
        t = P.triv_index
        r = len(P.coreps)
        for m in range(r):
            assert N[t][m] == [1 if n == m else 0 for n in range(r)]
            assert N[m][t] == [1 if n == m else 0 for n in range(r)]


def test_fusion_respects_dimensions(algebras):
    for name in ("f_s3", "f_d4", "f_z3_rtimes_z2"):
        P = peter_weyl(algebras[name])
        N = fusion(P)
        dims = P.dims
        r = len(dims)
        for l in range(r):
            for m in range(r):
                assert sum(N[l][m][n] * dims[n] for n in range(r)) == dims[l] * dims[m]


def test_fusion_of_group_algebra_is_group_law(algebras):
    H = algebras["c_s3"]
    P = peter_weyl(H)
    N = fusion(P)
    # identify each corep with its supporting group element
    elem = [next(i for i, x in enumerate(c.entries[0][0]) if not x.is_zero()) for c in P.coreps]
    from hopfcheck.catalog import build_group

    G = build_group("s3")
    for l in range(6):
        for m in range(6):
            prod = G.mul(elem[l], elem[m])
            assert N[l][m] == [1 if elem[n] == prod else 0 for n in range(6)]


def test_conjugates_pair_inverse_group_likes(algebras):
    H = algebras["c_s3"]
    P = peter_weyl(H)
    N = fusion(P)
    elem = [next(i for i, x in enumerate(c.entries[0][0]) if not x.is_zero()) for c in P.coreps]
    from hopfcheck.catalog import build_group

    G = build_group("s3")
    for i in range(6):
        assert elem[conjugate(P, i, N)] == G.inv(elem[i])


# --- caching and gauge ------------------------------------------------------------


def test_peter_weyl_is_cached(algebras):
    H = algebras["f_d4"]
    assert peter_weyl(H) is peter_weyl(H)


def test_forced_recompute_agrees(algebras):
    H = algebras["f_s3"]
    P0 = peter_weyl(H)
    for gauge in (1, 3):
        P1 = peter_weyl(H, force_recompute=True, gauge=gauge)
        assert P1 is not P0
        assert P1.dims == P0.dims
        assert P1.blocks() == P0.blocks()
    # the cache still holds the original
    assert peter_weyl(H) is P0
