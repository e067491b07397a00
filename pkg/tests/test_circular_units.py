"""Unit words, the beta units, p-word conversion, and the log-rank check."""

import random

import pytest

from circunits import (
    CycInt,
    IndexOutOfRange,
    Level,
    LevelMismatch,
    NotAUnit,
    NotIntegral,
    PWord,
    UnitWord,
    beta,
    d_index_set,
    eval_p_word,
    eval_word,
    fold_d_index,
    independence_rank,
    p_word_is_unit,
    p_word_to_unit_word,
    parse_word,
    seq_d,
)


def random_word(lv: Level, rng: random.Random, real: bool = True) -> UnitWord:
    indices = d_index_set(lv)
    exps = {
        j: rng.randint(-4, 4)
        for j in rng.sample(indices, k=min(3, len(indices)))
    }
    alpha_exp = 0 if real else rng.randrange(lv.order)
    return UnitWord.make(lv, alpha_exp, exps)


def random_unit_p_word(lv: Level, rng: random.Random) -> PWord:
    count = 1 << (lv.n - 2)
    exps = [rng.randint(-3, 3) for _ in range(count - 1)]
    exps.append(-sum(exps))
    return PWord(lv, rng.randrange(lv.order), tuple(exps))


# ---------------------------------------------------------------------- #
# generator indexing


def test_d_index_set():
    assert d_index_set(Level(4)) == (1, 3, 5)
    assert d_index_set(Level(5)) == (1, 3, 5, 7, 9, 11, 13)
    assert len(d_index_set(Level(7))) == 31


def test_fold_d_index():
    lv = Level(5)
    assert fold_d_index(lv, 3) == 3
    assert fold_d_index(lv, 17) == 15  # 32 - 17
    assert fold_d_index(lv, 35) == 3
    assert fold_d_index(lv, -1) == 1
    with pytest.raises(IndexOutOfRange):
        fold_d_index(lv, 4)


def test_fold_is_exact_identity():
    # d_{2^n - j} equals d_j on the nose, not just mod 2
    for n in (4, 5):
        lv = Level(n)
        for j in range(1, lv.degree, 2):
            assert seq_d(lv, lv.order - j) == seq_d(lv, j)
            assert seq_d(lv, -j) == seq_d(lv, j)


# ---------------------------------------------------------------------- #
# word algebra


def test_word_validation():
    lv = Level(4)
    with pytest.raises(IndexOutOfRange):
        UnitWord.make(lv, 0, {2: 1})
    with pytest.raises(IndexOutOfRange):
        UnitWord.make(lv, 0, {7: 1})  # 7 = 2^(n-1) - 1 is outside the set
    with pytest.raises(ValueError):
        UnitWord(lv, -1, ())
    with pytest.raises(ValueError):
        UnitWord(lv, 0, ((3, 1), (1, 1)))
    with pytest.raises(ValueError):
        UnitWord(lv, 0, ((1, 0),))
    assert UnitWord.make(lv, 0, {1: 0}) == UnitWord.identity(lv)
    assert UnitWord.make(lv, -3).alpha_exp == lv.order - 3


@pytest.mark.parametrize("seed", range(5))
def test_word_evaluation_homomorphism(seed):
    rng = random.Random(seed)
    for n in (4, 5):
        lv = Level(n)
        w1 = random_word(lv, rng, real=False)
        w2 = random_word(lv, rng, real=False)
        assert eval_word(w1 * w2) == eval_word(w1) * eval_word(w2)
        assert eval_word(w1.inverse()) == eval_word(w1).invert_unit()
        assert eval_word(w1**3) == eval_word(w1) ** 3
        assert eval_word(w1 * w1.inverse()) == CycInt.one(lv)


def test_word_mul_level_mismatch():
    with pytest.raises(LevelMismatch):
        UnitWord.identity(Level(4)) * UnitWord.identity(Level(5))


def test_exponent_vector():
    lv = Level(4)
    w = UnitWord.make(lv, 0, {1: -2, 5: 7})
    assert w.exponent_vector() == (-2, 0, 7)


def test_word_render_and_parse():
    lv = Level(5)
    w = UnitWord.make(lv, 3, {1: -2, 7: 2, 9: 1})
    assert w.render() == "a^3 * d1^-2 * d7^2 * d9"
    assert parse_word(lv, w.render()) == w
    assert parse_word(lv, "1") == UnitWord.identity(lv)
    assert parse_word(lv, "") == UnitWord.identity(lv)
    assert parse_word(lv, "a") == UnitWord.make(lv, 1)
    assert parse_word(lv, "d1*d1^2") == UnitWord.make(lv, 0, {1: 3})
    assert parse_word(lv, " d3 ^ -1 * d13 ") == UnitWord.make(lv, 0, {3: -1, 13: 1})
    with pytest.raises(ValueError):
        parse_word(lv, "x^2")
    with pytest.raises(ValueError):
        parse_word(lv, "d")


def test_word_json_round_trip():
    lv = Level(5)
    w = UnitWord.make(lv, 7, {3: -1, 13: 4})
    assert UnitWord.from_json_dict(lv, w.to_json_dict()) == w
    assert UnitWord.from_json_dict(lv, {}) == UnitWord.identity(lv)


def test_identity_renders_as_one():
    assert UnitWord.identity(Level(4)).render() == "1"


# ---------------------------------------------------------------------- #
# norms of the building blocks


@pytest.mark.parametrize("n", [3, 4, 5])
def test_one_minus_alpha_power_norms(n):
    lv = Level(n)
    one = CycInt.one(lv)
    for j in range(1, lv.order, 2):
        assert (one - CycInt.monomial(lv, j)).norm() == 2


def test_d_generators_are_units():
    for n in (4, 5, 6):
        lv = Level(n)
        for j in d_index_set(lv):
            assert seq_d(lv, j).norm() in (1, -1)


# ---------------------------------------------------------------------- #
# the beta units


@pytest.mark.parametrize("n", [4, 5, 6])
def test_beta_facts(n):
    lv = Level(n)
    count = 1 << (n - 2)
    prod = CycInt.one(lv)
    for l in range(count):
        b = beta(lv, l)
        assert b.norm() == 1
        prod = prod * b
    assert prod == CycInt.one(lv)
    with pytest.raises(IndexOutOfRange):
        beta(lv, count)
    with pytest.raises(IndexOutOfRange):
        beta(lv, -1)


def test_beta_is_alpha_power_times_d():
    for n in (4, 5):
        lv = Level(n)
        for l in range(1 << (n - 2)):
            t = pow(3, l, lv.order)
            expected = CycInt.monomial(lv, t) * seq_d(lv, t)
            assert beta(lv, l) == expected


@pytest.mark.parametrize("n", [4, 5])
def test_cyclotomic_factor_telescopes(n):
    # 1 - alpha^{3^l} peels off one 1 - alpha and a product of betas
    lv = Level(n)
    one = CycInt.one(lv)
    base = one - CycInt.monomial(lv, 1)
    acc = one
    for l in range(1 << (n - 2)):
        t = pow(3, l, lv.order)
        assert one - CycInt.monomial(lv, t) == base * acc
        acc = acc * beta(lv, l)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9, 10])
def test_folded_three_powers_cover_odd_indices(n):
    lv = Level(n)
    count = 1 << (n - 2)
    folded = {fold_d_index(lv, pow(3, l, lv.order)) for l in range(count)}
    assert folded == set(range(1, lv.degree, 2))


# ---------------------------------------------------------------------- #
# p-words


def test_p_word_unit_criterion():
    lv = Level(4)
    assert p_word_is_unit(PWord(lv, 0, (1, -1, 0, 0)))
    assert not p_word_is_unit(PWord(lv, 0, (1, 0, 0, 0)))
    with pytest.raises(ValueError):
        PWord(lv, 0, (1, -1))


def test_p_word_nonneg_valuation():
    lv = Level(4)
    value = eval_p_word(PWord(lv, 0, (2, -1, 0, 0)))
    assert value.norm() == 2  # total valuation 1
    with pytest.raises(NotIntegral):
        eval_p_word(PWord(lv, 0, (-1, 0, 0, 0)))


def test_p_word_norm_is_two_to_the_sum():
    rng = random.Random(7)
    lv = Level(4)
    for _ in range(10):
        exps = tuple(rng.randint(0, 2) for _ in range(4))
        value = eval_p_word(PWord(lv, rng.randrange(16), exps))
        assert value.norm() in (1 << sum(exps), -(1 << sum(exps)))


def test_p_word_conversion_requires_unit():
    lv = Level(4)
    with pytest.raises(NotAUnit):
        p_word_to_unit_word(PWord(lv, 0, (1, 0, 0, 0)))


@pytest.mark.parametrize("seed", range(5))
def test_p_word_conversion_eval_equality(seed):
    rng = random.Random(seed)
    for n in (4, 5, 6):
        lv = Level(n)
        for _ in range(4):
            p = random_unit_p_word(lv, rng)
            w = p_word_to_unit_word(p)
            assert eval_word(w) == eval_p_word(p)


def test_p_word_conversion_trivial():
    lv = Level(5)
    p = PWord(lv, 5, (0,) * 8)
    assert p_word_to_unit_word(p) == UnitWord.make(lv, 5)


# ---------------------------------------------------------------------- #
# multiplicative independence


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 3), (5, 7), (6, 15)])
def test_independence_rank(n, expected):
    assert independence_rank(Level(n)) == expected
    assert expected == len(d_index_set(Level(n)))


def test_independence_rank_capped():
    with pytest.raises(ValueError):
        independence_rank(Level(9))
