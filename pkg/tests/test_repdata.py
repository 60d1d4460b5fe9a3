"""Representation dimensions and the gcd-invariant n(chi)."""

import pytest

from edcalc import repdata
from edcalc.abelian import GroupElement
from edcalc.catalog import GroupSpec, SimpleFactor, build
from edcalc.errors import UnsupportedComponent
from edcalc.repdata import NValue, n_component, rep_choice


def test_spin_components():
    odd = SimpleFactor("Spin", n=11)
    assert rep_choice(odd, (1,)).dim == 32
    assert n_component(odd, (1,)) == NValue(32)
    assert n_component(odd, (0,)) == NValue(1)

    two_mod4 = SimpleFactor("Spin", n=10)
    assert rep_choice(two_mod4, (1,)).dim == 16
    assert rep_choice(two_mod4, (3,)).dim == 16
    assert rep_choice(two_mod4, (2,)).dim == 10
    assert n_component(two_mod4, (1,)) == NValue(16)
    assert n_component(two_mod4, (2,)) == NValue(2)   # 2-adic part of 10

    four_div = SimpleFactor("Spin", n=16)
    assert rep_choice(four_div, (1, 0)).dim == 128
    assert rep_choice(four_div, (1, 1)).dim == 16
    assert n_component(four_div, (1, 1)) == NValue(16)  # 16 is a 2-power
    assert n_component(SimpleFactor("Spin", n=12), (1, 1)) == NValue(4)


def test_sp_certification():
    assert n_component(SimpleFactor("Sp", n=4), (1,)) == NValue(8, True)
    nv = n_component(SimpleFactor("Sp", n=3), (1,))
    assert nv.value == 6 and not nv.certified


def test_sl_components():
    f = SimpleFactor("SL", p=2, k=2)
    assert rep_choice(f, (1,)).dim == 4
    assert rep_choice(f, (3,)).dim == 4
    assert n_component(f, (1,)) == NValue(4)
    with pytest.raises(UnsupportedComponent):
        rep_choice(f, (2,))
    with pytest.raises(UnsupportedComponent):
        n_component(f, (2,))


def test_e6_component():
    assert rep_choice(SimpleFactor("E6"), (1,)).dim == 27
    assert n_component(SimpleFactor("E6"), (2,)) == NValue(27)


def test_n_char_is_product():
    g = build(GroupSpec((SimpleFactor("Spin", n=10), SimpleFactor("Spin", n=3))))
    chi = GroupElement((1, 1))
    assert repdata.n_char(g, chi) == NValue(32)
    assert repdata.dim_V(g, chi) == 32
    assert repdata.n_char(g, GroupElement((2, 0))) == NValue(2)
    assert repdata.dim_V(g, GroupElement((2, 0))) == 10


def test_n_socle_char_gcd_over_lifts():
    # vector and half-spin of Spin(10) restrict to distinct socle characters;
    # the interesting gcd shows up with a twisted diagonal quotient
    g = build(GroupSpec((SimpleFactor("Spin", n=10),) * 2,
                        (GroupElement((1, 3)),)))
    lifts = [GroupElement((1, 1)), GroupElement((3, 3))]
    assert repdata.n_socle_char(g, lifts) == NValue(256)
    # a socle character whose lifts are vector-type on one factor
    h = build(GroupSpec((SimpleFactor("Spin", n=10),) * 2,
                        (GroupElement((2, 2)),)))
    lifts2 = [GroupElement((2, 0)), GroupElement((0, 2))]
    assert repdata.n_socle_char(h, lifts2) == NValue(2)

    uncert = repdata.n_socle_char(
        build(GroupSpec((SimpleFactor("Sp", n=3),))), [GroupElement((1,))])
    assert not uncert.certified
