"""Acceptance suite: each test prints one pass line when its criterion holds.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All checks are exact; there are no tolerances anywhere.
"""

import random
from fractions import Fraction

from superweyl import (
    BaseRingElement,
    GammaMatrix,
    Signature,
    SuperElement,
    check_relations,
    check_triangle,
    consistency_check,
    derive_datum,
    enumerate_support,
    eval_word,
    gamma_rank_kernel,
    identity_gamma,
    injectivity_report,
    involution,
    is_in_support,
    load_calibration,
    oracle_membership,
    preset,
    tau_apply,
    validate_gamma,
    verify_witness,
    word_element,
    zeta_matrix,
)
from helpers import (
    inj_example_matrices,
    random_degree_vector,
    random_element,
    random_homogeneous,
    random_signature,
    random_valid_gamma,
    random_word,
)

EX_A = GammaMatrix(Signature("minus", (1,)), ((1, -1),))
EX_B = GammaMatrix(Signature("minus", (1, 1)), ((1, 0), (1, -1)))
EX_C = GammaMatrix(Signature("minus", (0, 1, 1)), ((1, 3, 0), (1, 0, -1), (1, -1, 1)))

LIE_COMBOS_3 = (
    [("gl", p, q) for p in range(4) for q in range(4) if 2 <= p + q <= 3]
    + [("osp_even", p, q) for p in range(4) for q in range(1, 4) if p + q <= 3]
    + [("osp_odd", p, q) for p in range(4) for q in range(4) if 1 <= p + q <= 3]
)
LIE_COMBOS_4 = (
    [("gl", p, q) for p in range(5) for q in range(5) if 2 <= p + q <= 4]
    + [("osp_even", p, q) for p in range(5) for q in range(1, 5) if p + q <= 4]
    + [("osp_odd", p, q) for p in range(5) for q in range(5) if 1 <= p + q <= 4]
)


def _corpus():
    """Validated matrices used by the cross-cutting criteria."""
    rng = random.Random(1234)
    matrices = [EX_A, EX_B, EX_C]
    for sign in ("minus", "plus"):
        for parity in ((0,), (1,), (0, 1), (1, 1), (0, 1, 1)):
            matrices.append(identity_gamma(Signature(sign, parity)))
    for family, p, q in LIE_COMBOS_3:
        matrices.append(zeta_matrix(family, p, q))
    matrices.extend(inj_example_matrices().values())
    matrices.extend(random_valid_gamma(rng) for _ in range(5))
    assert all(validate_gamma(gm).valid for gm in matrices)
    return matrices


def test_c01_band_support():
    pts = {g for g, _ in enumerate_support(EX_A, [(-5, 5), (-5, 5)])}
    expected = {
        (a, b) for a in range(-5, 6) for b in range(-5, 6) if abs(a - b) <= 1
    }
    assert pts == expected
    print("ACCEPTANCE 01 PASS: band support |g1 - g2| <= 1 on [-5,5]^2, exact")


def test_c02_nine_point_support():
    pts = {g for g, _ in enumerate_support(EX_B, [(-4, 4), (-4, 4)])}
    expected = {
        (0, 0), (0, 1), (0, -1), (1, 0), (-1, 0), (1, 1), (-1, -1), (1, 2), (-1, -2),
    }
    assert pts == expected
    print("ACCEPTANCE 02 PASS: nine-point support on [-4,4]^2, exact")


def test_c03_membership_worked_example():
    witness = is_in_support(EX_C, (1, 2, 1))
    assert witness is not None and verify_witness(EX_C, (1, 2, 1), witness)
    assert is_in_support(EX_C, (2, 1, 0)) is None
    print("ACCEPTANCE 03 PASS: (1,2,1) member with valid witness, (2,1,0) not")


def test_c04_no_clifford_rows_full_support():
    rng = random.Random(40)
    for _ in range(5):
        n = rng.randint(1, 3)
        gm = random_valid_gamma(rng, sign="minus", parity=(0,) * n)
        box = [(-3, 3)] * gm.m
        pts = {g for g, _ in enumerate_support(gm, box)}
        assert len(pts) == 7 ** gm.m
    print("ACCEPTANCE 04 PASS: empty Clifford row set gives full boxes, 5 matrices")


def test_c05_pattern_search_matches_image_oracle():
    rng = random.Random(50)
    disagreements = 0
    for _ in range(200):
        gm = random_valid_gamma(rng)
        g = random_degree_vector(rng, gm.m, max_total=6)
        member = is_in_support(gm, g) is not None
        if member != oracle_membership(gm, g):
            disagreements += 1
    assert disagreements == 0
    print("ACCEPTANCE 05 PASS: 200 random membership queries agree with the image oracle")


def test_c06_identity_matrix_datum():
    for p, q in ((1, 0), (0, 1), (2, 1), (1, 2)):
        for sign in ("minus", "plus"):
            sig = Signature(sign, (0,) * p + (1,) * q)
            datum = derive_datum(identity_gamma(sig))
            n = sig.n
            for i in range(n):
                assert datum.t[i] == BaseRingElement.u(sig, i)
                assert datum.sigma[i] == tuple(1 if j == i else 0 for j in range(n))
                for j in range(n):
                    assert datum.mu[i][j] == sig.lam(i, j)
    print("ACCEPTANCE 06 PASS: identity matrices recover (u_i, tau_i, lam) exactly")


def test_c07_consistency_identities():
    checked = 0
    for p in range(5):
        for q in range(5):
            if not 1 <= p + q <= 4:
                continue
            for sign in ("minus", "plus"):
                sig = Signature(sign, (0,) * p + (1,) * q)
                assert consistency_check(derive_datum(identity_gamma(sig))).all_pass
                checked += 1
    for family, p, q in LIE_COMBOS_4:
        assert consistency_check(derive_datum(zeta_matrix(family, p, q))).all_pass
        checked += 1
    assert checked > 30
    print(f"ACCEPTANCE 07 PASS: pair and triple identities hold on {checked} data sets")


def test_c08_injectivity_examples():
    for name, gm in inj_example_matrices().items():
        rank, kernel = gamma_rank_kernel(gm)
        assert rank == gm.m and kernel == []
        report = injectivity_report(gm, [(-3, 3)] * gm.m)
        assert report.gamma_distinct_on_box
        assert report.p_gamma_zero_fiber
        assert report.passed
    print("ACCEPTANCE 08 PASS: example matrices have rank m and injective boxed support")


def test_c09_clifford_row_containment():
    violations = 0
    for gm in _corpus():
        if gm.sig.sign != "minus":
            continue
        box = [(-3, 3)] * gm.m if gm.m <= 2 else [(-2, 2)] * gm.m
        for g, _ in enumerate_support(gm, box):
            image = gm.apply(g)
            for r in range(gm.n):
                if gm.sig.is_clifford(r) and abs(image[r]) > 1:
                    violations += 1
    assert violations == 0
    print("ACCEPTANCE 09 PASS: Clifford rows of support images stay in {-1,0,1}")


def test_c10_algebra_property_suite():
    failures = 0
    rng = random.Random(100)
    for _ in range(500):
        sig = random_signature(rng)
        a = random_element(sig, rng, max_terms=2, budget=4)
        b = random_element(sig, rng, max_terms=2, budget=4)
        c = random_element(sig, rng, max_terms=2, budget=4)
        if (a * b) * c != a * (b * c):
            failures += 1
    for _ in range(200):
        sig = random_signature(rng)
        a = random_element(sig, rng)
        b = random_element(sig, rng)
        if involution(a * b) != involution(b) * involution(a):
            failures += 1
    for _ in range(100):
        sig = random_signature(rng)
        a = random_homogeneous(sig, rng)
        if (involution(a) * a).is_zero:
            failures += 1
    for _ in range(200):
        sig = random_signature(rng)
        word = random_word(sig, rng, max_len=8)
        left = SuperElement.one(sig)
        for letter in word:
            left = left * word_element(sig, [letter])
        right = SuperElement.one(sig)
        for letter in reversed(word):
            right = word_element(sig, [letter]) * right
        if left != right:
            failures += 1
    for _ in range(50):
        sig = random_signature(rng)
        cliffords = sig.clifford_indices
        if not cliffords:
            continue
        i = rng.choice(cliffords)
        r = BaseRingElement(
            sig,
            {
                tuple(rng.randint(0, 2) for _ in range(sig.n)): Fraction(
                    rng.randint(1, 3)
                )
            },
        )
        e = tuple(2 if j == i else 0 for j in range(sig.n))
        if tau_apply(e, r) != r:
            failures += 1
    assert failures == 0
    print("ACCEPTANCE 10 PASS: associativity/involution/star-product/confluence/tau^2 suite clean")


def test_c11_lie_relation_residuals():
    allowed_offsets = {
        Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1),
    }
    for family, p, q in LIE_COMBOS_3:
        pre = preset(family, p, q)
        fixture = load_calibration(pre)
        relations = check_relations(pre, fixture)
        assert relations.all_pass, (family, p, q, [r.label for r in relations.failures()])
        unit = check_relations(pre)
        for res in unit.results:
            if res.label.startswith("[h") and ",h" in res.label:
                assert res.passed
        triangle = check_triangle(pre, fixture)
        assert triangle.all_x_match
        assert triangle.offsets_match_expected
        assert set(triangle.h_offsets) <= allowed_offsets
    print(f"ACCEPTANCE 11 PASS: zero residuals and matching h offsets for {len(LIE_COMBOS_3)} presentations")


def test_c12_mu_commutation():
    for gm in _corpus():
        datum = derive_datum(gm)
        for i in range(gm.m):
            for j in range(gm.m):
                if i == j:
                    continue
                lhs = eval_word(gm, [("X", i), ("Y", j)]).image
                rhs = datum.mu[i][j] * eval_word(gm, [("Y", j), ("X", i)]).image
                assert lhs == rhs
    print("ACCEPTANCE 12 PASS: crossed generator products satisfy the mu signs on the corpus")
