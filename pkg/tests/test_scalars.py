import pytest

from gradedalg.scalars import (
    MINUS_ONE,
    ONE,
    ZERO,
    CyclotomicScalar,
    ScalarError,
    euler_phi,
    format_scalar,
    get_max_order,
    integer,
    parse_scalar,
    rational,
    root_of_unity_order,
    scalar_to_json,
    set_max_order,
    zeta,
)


def test_canonical_minimal_order():
    # zeta_8^2 lives in Q(i), -1 in Q
    assert (zeta(8) * zeta(8)).order == 4
    assert (zeta(8) ** 4).order == 1
    assert zeta(8) ** 4 == MINUS_ONE
    assert zeta(6, 3) == MINUS_ONE
    # values created at different orders are bit-identical
    a = zeta(12, 3)
    b = zeta(4, 1)
    assert a == b and hash(a) == hash(b) and a.order == b.order == 4


def test_vanishing_root_sums():
    assert zeta(3) + zeta(3, 2) + ONE == ZERO
    assert sum((zeta(5, k) for k in range(5)), ZERO) == ZERO
    assert zeta(4) + zeta(4, 3) == ZERO


def test_rational_arithmetic():
    half = rational(1, 2)
    third = rational(1, 3)
    assert half + third == rational(5, 6)
    assert half * third == rational(1, 6)
    assert (half - half).is_zero()
    assert rational(2, 4) == half
    assert rational(-1, -2) == half
    assert half.as_fraction().numerator == 1
    with pytest.raises(ScalarError):
        rational(1, 0)


def test_inverse():
    assert zeta(8).inverse() == zeta(8, 7)
    a = ONE + zeta(3)
    assert a * a.inverse() == ONE
    b = rational(3, 7)
    assert b.inverse() == rational(7, 3)
    with pytest.raises(ScalarError):
        ZERO.inverse()


def test_powers_and_negation():
    assert zeta(5) ** 5 == ONE
    assert zeta(5) ** 0 == ONE
    assert zeta(5) ** -1 == zeta(5, 4)
    assert -(zeta(4)) == zeta(4, 3)


def test_mixed_order_arithmetic():
    # lcm unification: zeta_3 * zeta_4 = zeta_12^7
    assert zeta(3) * zeta(4) == zeta(12, 7)
    s = zeta(3) + zeta(4)
    assert s - zeta(4) == zeta(3)


def test_is_predicates():
    assert ZERO.is_zero() and not ZERO.is_one()
    assert ONE.is_one() and ONE.is_rational()
    assert not zeta(3).is_rational()
    with pytest.raises(ScalarError):
        zeta(3).as_fraction()


def test_root_of_unity_order():
    assert root_of_unity_order(ONE) == 1
    assert root_of_unity_order(MINUS_ONE) == 2
    assert root_of_unity_order(zeta(8, 2)) == 4
    assert root_of_unity_order(zeta(9)) == 9
    assert root_of_unity_order(rational(1, 2)) is None
    assert root_of_unity_order(ONE + zeta(4)) is None
    assert root_of_unity_order(ZERO) is None


def test_parse_scalar_literals():
    assert parse_scalar(5) == integer(5)
    assert parse_scalar("0") == ZERO
    assert parse_scalar("1") == ONE
    assert parse_scalar("-1") == MINUS_ONE
    assert parse_scalar("i") == zeta(4)
    assert parse_scalar("-i") == zeta(4, 3)
    assert parse_scalar("7") == integer(7)
    assert parse_scalar("-3/4") == rational(-3, 4)
    assert parse_scalar("z8^3") == zeta(8, 3)
    assert parse_scalar("z6") == zeta(6)
    assert parse_scalar({"N": 3, "num": [1, 1], "den": 2}) == (ONE + zeta(3)) * rational(1, 2)
    with pytest.raises(ScalarError):
        parse_scalar("3/0")
    with pytest.raises(ScalarError):
        parse_scalar("zfoo")
    with pytest.raises(ScalarError):
        parse_scalar("banana")
    with pytest.raises(ScalarError):
        parse_scalar(True)
    with pytest.raises(ScalarError):
        parse_scalar({"N": 3, "num": [1.5], "den": 1})
    with pytest.raises(ScalarError):
        parse_scalar(1.5)


def test_scalar_to_json_round_trip():
    samples = [
        ZERO, ONE, MINUS_ONE, integer(42), rational(-3, 4),
        zeta(4), zeta(8, 5), zeta(7, 3),
        (ONE + zeta(3)) * rational(1, 2),
        zeta(8) + zeta(8, 3) + integer(2),
    ]
    for a in samples:
        assert parse_scalar(scalar_to_json(a)) == a
    assert scalar_to_json(integer(42)) == 42
    assert scalar_to_json(rational(1, 2)) == "1/2"
    assert scalar_to_json(zeta(8, 5)) == "z8^5"
    assert isinstance(scalar_to_json(ONE + zeta(3)), dict)


def test_format_scalar():
    assert format_scalar(ZERO) == "0"
    assert format_scalar(integer(-7)) == "-7"
    assert format_scalar(rational(2, 3)) == "2/3"
    assert format_scalar(zeta(4)) == "z4^1"
    assert parse_scalar(format_scalar(zeta(20, 13))) == zeta(20, 13)


def test_order_cap():
    assert get_max_order() == 240
    with pytest.raises(ScalarError):
        zeta(241)
    # lcm blowup past the cap fails loudly
    with pytest.raises(ScalarError):
        zeta(16) * zeta(27) * zeta(25)
    set_max_order(7)
    try:
        with pytest.raises(ScalarError):
            zeta(8)
        assert zeta(7) ** 7 == ONE
    finally:
        set_max_order(240)
    with pytest.raises(ScalarError):
        set_max_order(0)


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 8, 12, 240)] == [1, 1, 2, 2, 4, 4, 64]


def test_int_coercion():
    assert zeta(3) * 1 == zeta(3)
    assert 2 + rational(1, 2) == rational(5, 2)
    assert 1 - ONE == ZERO
    assert (zeta(3) == "text") is False


def test_hash_consistency_across_construction():
    a = CyclotomicScalar(12, [0, 0, 0, 1], 1)  # zeta_12^3 = i
    assert a == zeta(4)
    assert hash(a) == hash(zeta(4))
    assert len({a, zeta(4), zeta(12, 3)}) == 1
