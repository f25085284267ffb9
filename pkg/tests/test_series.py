import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagseries.engine import partition_series
from flagseries.partitions import partition_count
from flagseries.series import (
    LEFSCHETZ as L,
    LPoly,
    QSeries,
    RationalForm,
    RationalityError,
    clear_denominator,
    lpoly_eval_at_one,
    projective_space,
    ps_add,
    ps_inv,
    ps_mul,
    ps_pow,
)


def q(coeffs, trunc=None):
    return QSeries.from_dense("q", coeffs, trunc)


def test_add_cancellation():
    assert ps_add(q([1, 1]), q([1, -1])) == q([2, 0])


def test_add_identity():
    z = partition_series(10)
    assert ps_add(z, QSeries.zero(("q",), (10,))) == z


def test_add_variable_mismatch():
    a = QSeries.one(("q",), (4,))
    b = QSeries.one(("s",), (4,))
    with pytest.raises(ValueError):
        ps_add(a, b)


def test_mul_difference_of_squares():
    assert ps_mul(q([1, 1], 4), q([1, -1], 4)) == q([1, 0, -1], 4)


def test_mul_truncates_to_minimum():
    a = q([1, 1], 6)
    b = q([1, 1], 3)
    assert ps_mul(a, b).truncation == (3,)


def test_z_cubed_prefix():
    # hand convolution of the partition series cube
    z = partition_series(3)
    cube = ps_pow(z, 3)
    assert cube.dense() == [1, 3, 9, 22]


def test_inv_geometric():
    inv = ps_inv(q([1, -1], 6))
    assert inv.dense() == [1] * 7


def test_inv_euler_product_gives_partition_counts():
    n = 60
    euler = [0] * (n + 1)
    euler[0] = 1
    prod = QSeries.one(("q",), (n,))
    for j in range(1, n + 1):
        factor = [1] + [0] * (j - 1) + [-1]
        prod = ps_mul(prod, q(factor, n))
    z = ps_inv(prod)
    assert z.dense() == [partition_count(m) for m in range(n + 1)]


def test_inv_requires_unit():
    with pytest.raises(ValueError):
        ps_inv(q([2, 1], 4))


def test_pow_edge_cases():
    z = partition_series(6)
    assert ps_pow(z, 0) == QSeries.one(("q",), (6,))
    assert ps_pow(z, 1) == z
    sq = ps_pow(z, 2)
    assert sq[(2,)] == 5  # p(0)p(2) + p(1)p(1) + p(2)p(0)


small_series = st.builds(
    lambda pairs: QSeries(("q",), (8,), {(e,): c for e, c in pairs}),
    st.lists(
        st.tuples(st.integers(0, 8), st.integers(-9, 9)), max_size=6
    ),
)


@given(small_series, small_series, small_series)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c))
    assert ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c))
    assert ps_add(a, b) == ps_add(b, a)


unit_series = st.builds(
    lambda c0, pairs: QSeries(
        ("q",), (8,), {**{(e,): c for e, c in pairs}, (0,): c0}
    ),
    st.sampled_from([1, -1]),
    st.lists(st.tuples(st.integers(1, 8), st.integers(-9, 9)), max_size=6),
)


@given(unit_series)
@settings(max_examples=60, deadline=None)
def test_inv_involution_and_product(a):
    inv = ps_inv(a)
    assert ps_inv(inv) == a
    assert ps_mul(a, inv) == QSeries.one(("q",), (8,))


def test_multivariate_inverse():
    one = QSeries.one(("q", "s"), (6, 3))
    sz = QSeries(
        ("q", "s"),
        (6, 3),
        {(e, 1): c for e, c in enumerate(partition_series(6).dense())},
    )
    inv = ps_inv(one - sz)
    assert ps_mul(one - sz, inv) == one


def test_clear_denominator_simple():
    # 1 / (1 - q)
    series = q([1] * 30, 29)
    rf = clear_denominator(series, {1: 1}, 0, guard=10)
    assert list(rf.numerator) == [1]
    assert rf.denominator == {1: 1}


def test_clear_denominator_constant():
    series = q([1] + [0] * 20, 20)
    rf = clear_denominator(series, {}, 0, guard=10)
    assert list(rf.numerator) == [1]
    assert rf.denominator == {}


def test_clear_denominator_guard_failure():
    z = partition_series(40)
    with pytest.raises(RationalityError):
        clear_denominator(z, {1: 1}, 5, guard=10)


@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=6),
    st.dictionaries(st.integers(1, 4), st.integers(1, 2), max_size=3),
)
@settings(max_examples=40, deadline=None)
def test_clear_denominator_round_trip(num, den):
    rf = RationalForm(num, den)
    n = 40
    series = rf.expand(n)
    max_deg = max(5, len(num) - 1)
    back = clear_denominator(series, den, max_deg, guard=10)
    assert back.expand(n) == series


def test_rational_form_json_round_trip():
    rf = RationalForm([3, -1, -1], {1: 1, 2: 1, 3: 1})
    assert RationalForm.from_json_dict(rf.to_json_dict()) == rf


def test_qseries_json_round_trip():
    z = ps_pow(partition_series(8), 2)
    assert QSeries.from_json_dict(z.to_json_dict()) == z


def test_lpoly_eval_examples():
    assert lpoly_eval_at_one(LPoly((1, 2, 3, 2))) == 8
    assert lpoly_eval_at_one(projective_space(2)) == 3
    assert lpoly_eval_at_one(LPoly((1, 2, 2)) * (1 + L)) == 10


def test_lpoly_arithmetic():
    p = (1 + L) ** 2
    assert p == LPoly((1, 2, 1))
    assert (p - p).is_zero()
    assert p.degree == 2
    assert p.leading_coefficient == 1
    assert LPoly.from_json_list(p.to_json_list()) == p


def test_lpoly_rejects_floats():
    with pytest.raises(TypeError):
        LPoly((1.5,))


def test_qseries_validation():
    with pytest.raises(ValueError):
        QSeries(("w",), (4,), {})  # unknown variable name
    with pytest.raises(ValueError):
        QSeries(("q", "q"), (4, 4), {})  # duplicate names
    with pytest.raises(ValueError):
        QSeries(("q",), (-1,), {})
    with pytest.raises(ValueError):
        QSeries(("q",), (4,), {(1, 1): 1})  # arity mismatch
    with pytest.raises(TypeError):
        QSeries(("q",), (4,), {(1,): 0.5})


def test_qseries_drops_out_of_range_terms():
    s = QSeries.monomial(("q",), (4,), (9,))
    assert s.is_zero()


def test_qseries_immutable():
    s = QSeries.one(("q",), (4,))
    with pytest.raises(AttributeError):
        s.truncation = (2,)
