import random

import numpy as np
import pytest

from skewqc import linalg
from skewqc.codes import (
    CodeSpec,
    CodeStructure,
    blocks_to_polys,
    build_code,
    build_degenerate_code,
    degenerate_tuple,
    interleave_permutation,
    polys_to_blocks,
    skew_shift,
)
from skewqc.errors import ConsistencyError
from skewqc.field import gf4, make_field
from skewqc.notation import parse_coeff_string
from skewqc.skewpoly import SkewPoly, gcld_many, x_pow_minus_one

F = gf4()
A, A2 = 2, 3


def rand_poly(rng, field, max_deg):
    return SkewPoly(field, [rng.randrange(field.q) for _ in range(max_deg + 1)])


# ---------------------------------------------------------------------------
# the twisted shift operator
# ---------------------------------------------------------------------------


def test_skew_shift_single_block():
    """One block of length s: rotate right by one, then apply theta."""
    vec = [1, A, 0, A2]
    assert skew_shift(F, 4, vec) == [F.theta(A2), F.theta(1), F.theta(A), 0]


def test_skew_shift_acts_blockwise():
    vec = [1, 0, A, A2, 1, 0]  # two blocks of length 3... s=3 is odd, use s=2
    vec = [1, A, 0, A2, A, 1]  # three blocks of length 2
    out = skew_shift(F, 2, vec)
    assert out == [
        F.theta(A), F.theta(1),
        F.theta(A2), F.theta(0),
        F.theta(1), F.theta(A),
    ]


def test_skew_shift_order_is_s_times_m_over_gcd():
    """Applying the shift s times multiplies by x^s = 1, but each pass adds
    theta^s; for even s the code-level operator has order exactly s."""
    rng = random.Random(12)
    for s in (2, 4, 6):
        vec = [rng.randrange(4) for _ in range(s)]
        out = vec
        for _ in range(s):
            out = skew_shift(F, s, out)
        assert out == vec  # theta^s = id for even s


def test_skew_shift_matches_multiplication_by_x():
    """The vector of u*g blocks shifted once equals the blocks of x*u*g."""
    rng = random.Random(3)
    s, l = 4, 2
    x = SkewPoly.x(F)
    modulus = x_pow_minus_one(F, s)

    def reduce(p):
        from skewqc.skewpoly import right_divmod

        return right_divmod(p, modulus)[1]

    for _ in range(50):
        tup = tuple(rand_poly(rng, F, s - 1) for _ in range(l))
        spec = CodeSpec(F, s, tup)
        u = rand_poly(rng, F, s - 1)
        vec = polys_to_blocks(spec, [reduce(u * f) for f in tup])
        shifted = skew_shift(F, s, vec)
        direct = polys_to_blocks(spec, [reduce(x * u * f) for f in tup])
        assert shifted == direct


# ---------------------------------------------------------------------------
# block/polynomial conversions
# ---------------------------------------------------------------------------


def test_block_poly_round_trip():
    rng = random.Random(21)
    spec = CodeSpec(F, 4, (SkewPoly.one(F), SkewPoly.one(F), SkewPoly.one(F)))
    for _ in range(50):
        vec = [rng.randrange(4) for _ in range(12)]
        polys = blocks_to_polys(spec, vec)
        assert polys_to_blocks(spec, polys) == vec
        assert all(p.is_zero or p.degree < 4 for p in polys)


def test_interleave_permutation_is_a_permutation():
    for s, l in [(2, 1), (4, 2), (6, 3)]:
        perm = interleave_permutation(s, l)
        assert sorted(perm) == list(range(s * l))


# ---------------------------------------------------------------------------
# code construction: dimension, invariance, membership
# ---------------------------------------------------------------------------


def test_code_dimension_equals_s_minus_deg_gcld():
    rng = random.Random(5050)
    for _ in range(60):
        s = rng.choice((4, 6, 8))
        l = rng.choice((1, 2, 3))
        tup = tuple(rand_poly(rng, F, s - 1) for _ in range(l))
        if all(f.is_zero for f in tup):
            continue
        code = build_code(F, s, tup)
        g = gcld_many(list(tup) + [x_pow_minus_one(F, s)])
        assert code.k == s - g.degree
        assert code.g == g
        assert code.genmatrix.shape == (code.k, s * l)


def test_parity_polynomial_relation():
    rng = random.Random(606)
    for _ in range(40):
        s = rng.choice((4, 6))
        tup = (rand_poly(rng, F, s - 1), rand_poly(rng, F, s - 1))
        if all(f.is_zero for f in tup):
            continue
        code = build_code(F, s, tup)
        modulus = x_pow_minus_one(F, s)
        assert code.h * code.g == modulus
        assert code.g * code.h == modulus  # cofactors of a central product commute
        assert code.h.degree == code.k


def test_codewords_closed_under_shift_and_scalars():
    rng = random.Random(77)
    code = build_code(F, 6, (parse_coeff_string(F, "11"), parse_coeff_string(F, "0a1")))
    for _ in range(100):
        msg = [rng.randrange(4) for _ in range(code.k)]
        word = list(code.encode(msg))
        assert code.is_codeword(word)
        assert code.is_codeword(skew_shift(F, 6, word))
        lam = rng.randrange(1, 4)
        assert code.is_codeword([F.mul[lam][c] for c in word])


def test_left_multiples_are_codewords():
    """Membership test for the defining property: u*(f_1,...,f_l) lies in
    the code for every u."""
    rng = random.Random(88)
    from skewqc.skewpoly import right_divmod

    s = 6
    modulus = x_pow_minus_one(F, s)
    tup = (parse_coeff_string(F, "1a1"), parse_coeff_string(F, "a^201"))
    code = build_code(F, s, tup)
    spec = code.spec
    for _ in range(100):
        u = rand_poly(rng, F, s - 1)
        vec = polys_to_blocks(
            spec, [right_divmod(u * f, modulus)[1] for f in spec.generators]
        )
        assert code.is_codeword(vec)
        assert code.poly_is_codeword(blocks_to_polys(spec, vec))


def test_every_generator_matrix_row_is_a_codeword():
    rng = random.Random(99)
    for _ in range(20):
        s = rng.choice((4, 8))
        tup = (rand_poly(rng, F, s - 1), rand_poly(rng, F, s - 1))
        if all(f.is_zero for f in tup):
            continue
        code = build_code(F, s, tup)
        for row in code.genmatrix:
            assert code.is_codeword(row)


def test_encode_rejects_bad_message_length():
    code = build_code(F, 4, (SkewPoly.one(F),))
    with pytest.raises(ValueError):
        code.encode([0] * (code.k + 1))


def test_codeword_from_poly_matches_encode_span():
    code = build_code(F, 4, (parse_coeff_string(F, "11"),))
    u = parse_coeff_string(F, "a01")
    word = code.codeword_from_poly(u)
    assert code.is_codeword(word)


# ---------------------------------------------------------------------------
# the (g, f*g, ...) construction with an explicit generator polynomial
# ---------------------------------------------------------------------------


def test_degenerate_tuple_shape():
    g = parse_coeff_string(F, "11")
    f = parse_coeff_string(F, "a1")
    tup = degenerate_tuple(g, [f], 4)
    assert tup[0] == g and tup[1] == f * g


def test_degenerate_build_dimension_always_s_minus_deg_g():
    """The first s - deg g shift images are always independent when g
    right-divides x^s - 1, whether or not their span is shift-closed."""
    rng = random.Random(1234)
    from skewqc.factorization import right_divisors

    for s in (4, 6):
        modulus = x_pow_minus_one(F, s)
        divisors = [g for g in right_divisors(modulus) if 0 < g.degree < s]
        for _ in range(30):
            g = divisors[rng.randrange(len(divisors))]
            f = rand_poly(rng, F, s - 1)
            code = build_degenerate_code(F, s, g, [f])
            assert code.k == s - g.degree
            assert code.h.degree == code.k
            assert linalg.rank(F, [list(r) for r in code.genmatrix]) == code.k


def test_module_closed_flag_detects_closure():
    rng = random.Random(4321)
    from skewqc.factorization import right_divisors

    s = 4
    modulus = x_pow_minus_one(F, s)
    divisors = [g for g in right_divisors(modulus) if 0 < g.degree < s]
    seen_closed = seen_open = False
    for g in divisors:
        for _ in range(20):
            f = rand_poly(rng, F, s - 1)
            code = build_degenerate_code(F, s, g, [f])
            rows = [list(code.genmatrix[i]) for i in range(code.k)]
            extra = rows[:]
            vec = rows[-1]
            for _ in range(s):
                vec = skew_shift(F, s, vec)
                extra.append(vec)
            closed = linalg.rank(F, extra) == code.k
            assert code.module_closed == closed
            seen_closed = seen_closed or closed
            seen_open = seen_open or not closed
    assert seen_closed and seen_open  # both behaviors occur at s = 4


def test_module_closed_iff_module_dimension_matches():
    """When the flag is set, the explicit-generator build agrees with the
    plain module build row space."""
    rng = random.Random(5678)
    from skewqc.factorization import right_divisors

    s = 6
    modulus = x_pow_minus_one(F, s)
    divisors = [g for g in right_divisors(modulus) if 0 < g.degree < s]
    for _ in range(40):
        g = divisors[rng.randrange(len(divisors))]
        f = rand_poly(rng, F, s - 1)
        pinned = build_degenerate_code(F, s, g, [f])
        module = build_code(F, s, (g, (f * g)))
        if pinned.module_closed:
            assert module.k == pinned.k
            assert np.array_equal(module.genmatrix, pinned.genmatrix)
        else:
            assert module.k > pinned.k


def test_explicit_generator_must_divide_modulus():
    g = parse_coeff_string(F, "a01")  # x^2 + a does not divide x^4 - 1
    f = parse_coeff_string(F, "1")
    with pytest.raises(ConsistencyError):
        build_degenerate_code(F, 4, g, [f])


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def test_spec_validation():
    with pytest.raises(ValueError):
        CodeSpec(F, 3, (SkewPoly.one(F),))  # m = 2 does not divide 3
    with pytest.raises(ValueError):
        CodeSpec(F, 4, ())
    F9 = make_field(3, 1, 2)
    with pytest.raises(ValueError):
        CodeSpec(F, 4, (SkewPoly.one(F9),))


def test_spec_reduces_generators_mod_modulus():
    f = parse_coeff_string(F, "1" + "0" * 5 + "1")  # x^6 + 1, degree 6 >= s
    spec = CodeSpec(F, 4, (f,))
    assert all(p.is_zero or p.degree < 4 for p in spec.generators)


def test_params_string():
    code = build_code(F, 4, (parse_coeff_string(F, "11"), parse_coeff_string(F, "a1")))
    assert code.params() == f"[{code.n},{code.k}]"
    assert code.params(5) == f"[{code.n},{code.k},5]"
