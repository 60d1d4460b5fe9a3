"""End-to-end pipeline: bounds, exactness, envelopes, extension transfer."""

import pytest

from edcalc import abelian, engine, spec_io
from edcalc.abelian import GroupElement
from edcalc.catalog import GroupSpec, SimpleFactor, build
from edcalc.engine import certify_exact, compute_ed, extend_ed
from edcalc.errors import ExtensionHypothesisFailed, NotReduced


def _report(text, **kw):
    return compute_ed(spec_io.parse(text), **kw)


EXACT_CASES = {
    "Spin(15)": (23, 22),
    "Spin(17)": (120, 119),
    "Spin(19)": (341, 340),
    "Spin(18)": (103, 102),
    "Spin(10) * Spin(3)^2 / [(2,1,0),(2,0,1)]": (13, 12),
    "Spin(10)^2 / [(1,3)]": (166, 165),
    "Spin(7)^3 / [(1,1,0),(0,1,1)]": (449, 448),
    "Sp(8)^3 / [(1,1,0),(0,1,1)]": (404, 403),
    "SL(2)^5 / [(1,1,0,0,0),(0,1,1,0,0),(0,0,1,1,0),(0,0,0,1,1)]": (17, 16),
    "E6^2 / [(1,2)]": (573, 572),
}


def test_exact_cases():
    for text, (ed, ed_red) in EXACT_CASES.items():
        r = _report(text)
        assert r.exact, (text, r.hypothesis_failures)
        assert (r.ed, r.ed_red) == (ed, ed_red), text
        assert r.lower == r.upper == r.ed
        assert r.ed_red_exact


def test_spin16_bounds_only():
    r = _report("Spin(16)")
    assert not r.exact
    assert r.lower == 24 and r.lower_raw == 24
    assert r.upper is None and r.ed is None
    assert any("open question" in c for c in r.caveats)
    assert any("B0" in f for f in r.hypothesis_failures)


def test_odd_spin_scaling():
    for n in range(15, 26, 2):
        r = _report(f"Spin({n})")
        expected = 2 ** ((n - 1) // 2) - n * (n - 1) // 2
        assert r.exact and r.ed == expected and r.ed_red == expected - 1, n


def test_two_mod_four_spin_scaling():
    for n in range(18, 27, 4):
        r = _report(f"Spin({n})")
        expected = 2 ** ((n - 2) // 2) - n * (n - 1) // 2
        assert r.exact and r.ed == expected and r.ed_red == expected - 1, n


def test_sp_non_power_rank_not_certified():
    r = _report("Sp(6)^3 / [(1,1,0),(0,1,1)]")
    assert not r.exact
    assert any("certified" in f for f in r.hypothesis_failures)


def test_not_reduced_rejected():
    with pytest.raises(NotReduced):
        _report("Spin(7)^2 / [(0,1)]")


def test_extension_transfer():
    h_spec = spec_io.parse("Spin(10)^2 / [(2,2)]")
    r = extend_ed(h_spec, GroupElement((1, 3)))
    assert r.exact
    assert r.ed == 168 and r.ed_red == 166
    assert r.n_extension == 2


def test_extension_collapse_commutes():
    h_spec = spec_io.parse("Spin(10)^2 / [(2,2)]")
    nu = GroupElement((1, 3))
    r_h = extend_ed(h_spec, nu)
    g_spec = GroupSpec(h_spec.factors, h_spec.mu_generators + (nu,))
    r_g = compute_ed(g_spec)
    assert r_h.ed - r_h.n_extension == r_g.ed


def test_extension_bad_nu():
    h_spec = spec_io.parse("Spin(10)^2 / [(2,2)]")
    with pytest.raises(ExtensionHypothesisFailed):
        extend_ed(h_spec, GroupElement((2, 2)))   # trivial in Z(H)
    with pytest.raises(ExtensionHypothesisFailed):
        extend_ed(h_spec, GroupElement((1, 0)))   # order 4 in Z(H)


def test_certify_exact_consistency():
    # whenever certify_exact says exact, the independent bounds agree
    for text in ("Spin(15)", "Spin(17)", "Spin(18)"):
        g = build(spec_io.parse(text))
        pipeline = compute_ed(g.spec)
        r = certify_exact(g, 2, pipeline.basis.chars, pipeline.b0)
        assert r.exact
        assert engine.lower_bound(g, 2) == r.ed
        assert engine.upper_bound(g, pipeline.basis.chars, pipeline.b0) == r.ed


def test_certify_exact_rejects_nonminimal():
    g = build(spec_io.parse("Spin(10)^2 / [(2,2)]"))
    # (1,1) and (1,3) span the socle dual but score 512 > minimal
    bad = (GroupElement((1, 1)), GroupElement((1, 3)))
    r = certify_exact(g, 2, bad, (0,))
    assert not r.exact
    assert any("not minimal" in f for f in r.hypothesis_failures)


def test_permutation_caveat():
    r = _report("Spin(3) * Spin(10)")
    assert r.permutation == (1, 0)
    assert any("reordered" in c for c in r.caveats)


def test_prime_override_trivial_socle():
    from edcalc.errors import TrivialSocle
    with pytest.raises(TrivialSocle):
        _report("Spin(15)", prime=3)
