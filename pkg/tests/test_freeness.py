"""Generic-freeness catalog (types B/D) and closed-form criteria (C, A, E6)."""

import pytest

from edcalc import freeness, repdata
from edcalc.abelian import GroupElement
from edcalc.catalog import GroupSpec, SimpleFactor, build
from edcalc.errors import NotSpinFamily
from edcalc.freeness import check_a, check_bd, check_c, check_char, check_e6

S, H, V = repdata.SPIN_REP, repdata.HALF_SPIN, repdata.VECTOR


def _spinlike(n):
    return (n, S if n % 2 else H)


# every catalog instance of the non-free tensor products, by row
NOT_FREE = (
    [( _spinlike(n),) for n in (3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16)]   # row 1
    + [(_spinlike(3), _spinlike(t)) for t in (3, 5, 6, 7, 9, 11)]            # row 2
    + [(_spinlike(5), _spinlike(t)) for t in (5, 6, 7)]                      # row 3
    + [(_spinlike(6), _spinlike(t)) for t in (6, 7, 10)]                     # row 4
    + [(_spinlike(3), _spinlike(3), _spinlike(t)) for t in (3, 5, 6, 7)]     # row 5
    + [(_spinlike(3), _spinlike(6), _spinlike(t)) for t in (5, 6)]           # row 6
    + [(_spinlike(3),) * 4]                                                  # row 7
    + [((10, V),), ((16, V),)]                                               # row 8
    + [((10, V), (10, V))]                                                   # row 9
    + [((16, V), (3, S))]                                                    # row 10
)

# one freeness witness just outside each row's parameter range
FREE_NEAR_MISSES = [
    ((17, S),),                                   # row 1: n = 17
    (_spinlike(3), _spinlike(13)),                # row 2: tail 13
    (_spinlike(5), _spinlike(9)),                 # row 3: tail 9
    (_spinlike(6), _spinlike(11)),                # row 4: tail 11
    (_spinlike(3), _spinlike(3), _spinlike(9)),   # row 5: tail 9
    (_spinlike(3), _spinlike(6), _spinlike(7)),   # row 6: tail 7
    (_spinlike(3),) * 5,                          # row 7: five factors
    ((18, H),),                                   # row 8: half-spin instead
    ((10, V), (10, H)),                           # row 9: unequal tags
    ((8, V), (10, H)),                            # row 10: n <= dim(rest)+1
]


def test_table_rows_not_free():
    for inst in NOT_FREE:
        v = check_bd(list(inst))
        assert not v.free, inst
        assert v.reason.startswith("TableRow"), inst


def test_near_misses_free():
    for inst in FREE_NEAR_MISSES:
        v = check_bd(list(inst))
        assert v.free, inst


def test_check_bd_rejects_foreign_tags():
    with pytest.raises(NotSpinFamily):
        check_bd([(10, "minuscule")])


def test_check_c():
    assert not check_c([4]).free
    assert not check_c([4, 4]).free
    assert check_c([4, 4, 4]).free
    assert check_c([3, 3, 3]).free       # 6 <= 36
    assert check_c([16, 3, 3]).free      # 32 <= 36
    assert not check_c([19, 3, 3]).free  # 38 > 36


def test_check_a():
    assert not check_a(2, [1, 1]).free
    assert check_a(2, [1, 1, 1]).free is False  # {2,2,2} is q,q,2 with q=2
    assert check_a(2, [2, 2, 1]).free is False  # {4,4,2} exclusion
    assert check_a(2, [2, 2, 2]).free
    assert not check_a(2, [1, 1, 1, 1]).free    # {2,2,2,2}
    assert check_a(2, [1, 1, 1, 1, 1]).free
    assert not check_a(3, [1, 1, 1]).free       # {3,3,3}
    assert check_a(3, [1, 1, 1, 1]).free
    assert not check_a(2, [3, 1, 1]).free       # k1 >= sum of rest
    assert check_a(2, [2, 2, 1, 1]).free


def test_check_e6():
    assert not check_e6(1).free
    assert check_e6(2).free


def test_check_char_dispatch():
    g = build(GroupSpec((SimpleFactor("Spin", n=7),) * 3,
                        (GroupElement((1, 1, 0)), GroupElement((0, 1, 1)))))
    assert check_char(g, GroupElement((1, 1, 1))).free
    assert not check_char(g, GroupElement((1, 0, 0))).free  # single Spin(7), row 1
    e6 = build(GroupSpec((SimpleFactor("E6"),) * 2, (GroupElement((1, 2)),)))
    assert check_char(e6, GroupElement((1, 1))).free
    assert not check_char(e6, GroupElement((1, 0))).free
