"""Bound computations and the end-to-end pipeline.

Pipeline: build the group, take the p-socle of Z(G), find an index-minimal
basis of the socle dual, lift it to Z(G)* under the per-family component
rules, select a covering subset of generically free characters, and assemble
lower bound, upper bound and (when all premises hold) the certified exact
value, together with the same data for the strict reductive envelope.
"""

from dataclasses import dataclass
from math import gcd

from . import abelian, basis_search, catalog, freeness, repdata
from .abelian import GroupElement
from .basis_search import BasisCandidate, SocleContext, build_socle_context
from .catalog import GroupSpec, SemisimpleGroup
from .errors import (ExtensionHypothesisFailed, HypothesisFailed,
                     NoAdmissibleLift, UnsupportedComponent)


@dataclass(frozen=True)
class EdReport:
    """The result of a computation for one group."""

    group: str                      # canonical spec text
    prime: int
    dim_g: int
    rank_z: int
    permutation: tuple              # canonical factor index -> input index
    basis: BasisCandidate | None
    b0: tuple                       # indices into basis.chars
    verdicts: tuple                 # FreenessVerdict per basis char
    lower_raw: int | None
    upper: int | None
    exact: bool
    ed: int | None
    ed_red_upper: int | None
    ed_red_exact: bool
    ed_red: int | None
    hypothesis_failures: tuple = ()
    caveats: tuple = ()
    n_extension: int | None = None  # n_H(omega-check) for extension reports

    @property
    def lower(self) -> int | None:
        """Headline lower bound, clamped at 0 (ed is nonnegative)."""
        return None if self.lower_raw is None else max(0, self.lower_raw)


def upper_bound(g: SemisimpleGroup, basis, b0) -> int:
    """Sum of dim V over the basis minus dim G, under the freeness premises."""
    m = len(g.factors)
    covered = set()
    for idx in b0:
        chi = basis[idx]
        verdict = freeness.check_char(g, chi)
        if not verdict.free:
            raise HypothesisFailed(
                f"NotGenericallyFree({chi.coords}): {verdict.reason} {verdict.detail}")
        covered |= catalog.support(g, chi)
    if covered != set(range(m)):
        raise HypothesisFailed("SupportNotCovering: basis subset misses factors "
                               f"{sorted(set(range(m)) - covered)}")
    return sum(repdata.dim_V(g, chi) for chi in basis) - g.dim_g


def upper_bound_red(g: SemisimpleGroup, basis, b0) -> int:
    """Envelope bound: the affine bound minus rank Z(G)."""
    return upper_bound(g, basis, b0) - g.rank_z


def lower_bound(g: SemisimpleGroup, p: int) -> int:
    """Minimal basis score of the socle dual minus dim G (may be negative)."""
    ctx = build_socle_context(g, p)
    score, _ = basis_search.min_score_bases(ctx)
    return score - g.dim_g


def _find_b0(g: SemisimpleGroup, chars, verdicts):
    """Smallest subset of free characters whose supports cover all factors."""
    from itertools import combinations
    m = len(g.factors)
    free_idx = [i for i, v in enumerate(verdicts) if v.free]
    supports = {i: catalog.support(g, chars[i]) for i in free_idx}
    for size in range(1, len(free_idx) + 1):
        for combo in combinations(free_idx, size):
            if set().union(*(supports[i] for i in combo)) == set(range(m)):
                return combo
    return None


def _select_candidate(g: SemisimpleGroup, ctx: SocleContext):
    """Choose among index-minimal bases, preferring ones that admit a free,
    covering B0 under the strict (exactness) lift rules."""
    score, bases = basis_search.min_score_bases(ctx)
    fallback = None
    for strict_only in (True, False):
        for images in bases:
            try:
                chars, strict = basis_search.lift_basis(g, images, ctx=ctx)
            except NoAdmissibleLift:
                continue
            if strict_only and not strict:
                continue
            certified = all(ctx.n_table[c].certified for c in images)
            cand = BasisCandidate(chars, images, score, certified, strict)
            verdicts = tuple(freeness.check_char(g, chi) for chi in chars)
            b0 = _find_b0(g, chars, verdicts)
            if b0 is not None:
                return cand, verdicts, b0
            if fallback is None:
                fallback = (cand, verdicts, None)
    if fallback is None:
        raise NoAdmissibleLift("no admissible lift for any index-minimal basis")
    return fallback


def compute_ed(spec: GroupSpec, prime: int | None = None) -> EdReport:
    """End-to-end bounds and exactness certification for one group spec."""
    g = catalog.build(spec)
    catalog.validate_reduced(g)
    p = prime if prime is not None else g.prime
    caveats = [f"results assume char(k) != {p}"]
    failures = []

    ctx = build_socle_context(g, p)
    basis = verdicts = None
    b0 = ()
    lower_raw = upper = ed = None
    exact = False

    try:
        score, _ = basis_search.min_score_bases(ctx)
        lower_raw = score - g.dim_g
    except NoAdmissibleLift as e:
        failures.append(f"lower bound unavailable: {e}")
        score = None

    try:
        basis, verdicts, b0_found = _select_candidate(g, ctx)
    except NoAdmissibleLift as e:
        failures.append(str(e))
        b0_found = None

    if basis is not None:
        if b0_found is None:
            b0 = ()
            failures.append(
                "no generically free covering subset B0 exists for any "
                "index-minimal basis; upper bound unavailable by this method")
            caveats.append(
                "open question: every index-minimal candidate lies in the "
                "non-generically-free catalog, so exactness cannot be decided "
                "by this method and only bounds are reported")
        else:
            b0 = tuple(b0_found)
            upper = upper_bound(g, basis.chars, b0)

        if upper is not None and lower_raw is not None:
            premises = []
            if not basis.strict:
                premises.append("a lift violates the exactness component rules")
            if not basis.certified:
                premises.append("an n-value in the score is not a certified invariant")
            if not ctx.all_certified:
                premises.append("some socle character has an uncertified n-value")
            for chi, img in zip(basis.chars, basis.socle_images):
                if repdata.dim_V(g, chi) != ctx.n_table[img].value:
                    premises.append(
                        f"dim V{chi.coords} != n(socle image {img})")
            if premises:
                failures.extend("exactness premise failed: " + s for s in premises)
            else:
                exact = True
                ed = upper
                assert lower_raw == upper

    if lower_raw is not None and lower_raw < 0 and not exact:
        caveats.append("raw lower bound is negative (vacuous); clamped to 0 in display")
    if not ctx.all_certified:
        caveats.append("lower bound is not certified: some n-values are only "
                       "representation-dimension upper estimates")

    ed_red_upper = None if upper is None else upper - g.rank_z
    ed_red_exact = False
    ed_red = None
    if exact:
        # all supported families have p-group centers, so the envelope
        # equality applies whenever the exact value is certified
        if _center_is_p_group(g, p):
            ed_red_exact = True
            ed_red = ed - g.rank_z
        else:
            caveats.append(f"Z(G) is not a {p}-group: envelope value limited to "
                           "the upper bound")
        caveats.append(f"ed(G) equals the essential {p}-dimension in this case")
    if tuple(g.permutation) != tuple(range(len(g.factors))):
        caveats.append("factors reordered descending by parameter; permutation "
                       f"(canonical -> input) = {g.permutation}")

    return EdReport(
        group=_render(g.spec),
        prime=p,
        dim_g=g.dim_g,
        rank_z=g.rank_z,
        permutation=g.permutation,
        basis=basis,
        b0=b0,
        verdicts=verdicts if verdicts is not None else (),
        lower_raw=lower_raw,
        upper=upper,
        exact=exact,
        ed=ed,
        ed_red_upper=ed_red_upper,
        ed_red_exact=ed_red_exact,
        ed_red=ed_red,
        hypothesis_failures=tuple(failures),
        caveats=tuple(caveats),
    )


def _center_is_p_group(g: SemisimpleGroup, p: int) -> bool:
    order = g.char_group.order
    while order % p == 0:
        order //= p
    return order == 1


def _render(spec: GroupSpec) -> str:
    from . import spec_io
    return spec_io.render(spec)


def certify_exact(g: SemisimpleGroup, p: int, basis, b0) -> EdReport:
    """Check all exactness premises for externally supplied basis data.

    ``basis`` is a tuple of characters of Z(G)* (elements of the ambient dual
    coordinates), ``b0`` a tuple of indices into it.  Premises: the socle
    images form an F_p-basis of the socle dual achieving the minimal score;
    every n-value is certified; every lift matches its n-value exactly; the
    b0 characters are generically free and their supports cover all factors.
    Failed premises are reported with ``exact=False`` rather than raising,
    except for structurally invalid input (wrong length, not in Z(G)*).
    """
    catalog.validate_reduced(g)
    ctx = build_socle_context(g, p)
    basis = tuple(basis)
    _, restrict = abelian.socle_dual(g.char_group, p)
    images = tuple(restrict(chi).coords for chi in basis)

    failures = []
    if len(basis) != ctx.r:
        failures.append(f"basis has {len(basis)} characters, socle rank is {ctx.r}")
    elif basis_search._rank_mod_p(images, p) != ctx.r:
        failures.append("socle images are linearly dependent over F_p")

    score = None
    if not failures:
        score = sum(ctx.n_table[img].value for img in images
                    if ctx.n_table[img] is not None)
        if any(ctx.n_table[img] is None for img in images):
            failures.append("a socle character has no tabulated n-value")
        else:
            min_score, _ = basis_search.min_score_bases(ctx)
            if score != min_score:
                failures.append(
                    f"basis score {score} is not minimal (minimum {min_score})")
            if not all(ctx.n_table[img].certified for img in images):
                failures.append("an n-value in the score is not certified")
            for chi, img in zip(basis, images):
                if not basis_search.strict_lift_ok(g, chi):
                    failures.append(
                        f"lift {chi.coords} violates the exactness component rules")
                elif repdata.dim_V(g, chi) != ctx.n_table[img].value:
                    failures.append(
                        f"dim V{chi.coords} != n(socle image {img})")

    verdicts = tuple(freeness.check_char(g, chi) for chi in basis)
    upper = None
    try:
        upper = upper_bound(g, basis, b0)
    except HypothesisFailed as e:
        failures.append(str(e))

    exact = not failures and upper is not None
    lower_raw = None if score is None else score - g.dim_g
    ed = upper if exact else None
    cand = BasisCandidate(basis, images, score if score is not None else -1,
                          all(ctx.n_table[i] is not None and ctx.n_table[i].certified
                              for i in images),
                          all(basis_search.strict_lift_ok(g, c) for c in basis))
    caveats = [f"results assume char(k) != {p}"]
    ed_red = ed - g.rank_z if exact and _center_is_p_group(g, p) else None
    if exact:
        caveats.append(f"ed(G) equals the essential {p}-dimension in this case")
    return EdReport(
        group=_render(g.spec), prime=p, dim_g=g.dim_g, rank_z=g.rank_z,
        permutation=g.permutation, basis=cand, b0=tuple(b0),
        verdicts=verdicts, lower_raw=lower_raw, upper=upper, exact=exact,
        ed=ed, ed_red_upper=None if upper is None else upper - g.rank_z,
        ed_red_exact=ed_red is not None, ed_red=ed_red,
        hypothesis_failures=tuple(failures), caveats=tuple(caveats),
    )


def extend_ed(h_spec: GroupSpec, nu: GroupElement, prime: int | None = None) -> EdReport:
    """Essential dimension of H from H/nu via the central-extension transfer.

    ``nu`` is given in Z(H~) coordinates; its image in Z(H) must have order
    p.  Requires the quotient G = H/nu to certify exactly and Z(H) to split
    as Z(G) x <nu> with an index-minimal extended socle basis.
    """
    h = catalog.build(h_spec)
    catalog.validate_reduced(h)
    p = prime if prime is not None else h.prime

    nu = abelian.element(h.center_tilde, nu.coords)
    mu_span = h.spec.mu_generators
    if abelian.element_in_span(h.center_tilde, mu_span, nu):
        raise ExtensionHypothesisFailed("nu lies in mu: the extension is trivial")
    ord_nu = _order_mod_mu(h, nu)
    if ord_nu != p:
        raise ExtensionHypothesisFailed(
            f"image of nu in Z(H) has order {ord_nu}, expected {p}")

    g_spec = GroupSpec(h.spec.factors, h.spec.mu_generators + (nu,))
    g_report = compute_ed(g_spec, prime=p)
    if not g_report.exact:
        raise ExtensionHypothesisFailed(
            "quotient group H/nu did not certify an exact value; failures: "
            + "; ".join(g_report.hypothesis_failures))

    ctx_h = build_socle_context(h, p)
    h_elements = [el for _, el in abelian.subgroup_elements(h.char_group)]
    _, restrict_h = abelian.socle_dual(h.char_group, p)

    # Z(H) = Z(G) x nu structurally: some order-p character of Z(H) is
    # nontrivial on nu
    split_witness = [
        w for w in h_elements
        if abelian.element_order(h.center_tilde, w) == p
        and abelian.pairing_num(h.center_tilde, w, nu) != 0]
    if not split_witness:
        raise ExtensionHypothesisFailed("Z(H) does not split as Z(G) x <nu>")

    b_images = [restrict_h(chi).coords for chi in g_report.basis.chars]
    min_score_h, _ = basis_search.min_score_bases(ctx_h)
    b_score_h = sum(ctx_h.n_table[img].value for img in b_images)

    omega = None
    omega_img = None
    for w in sorted(h_elements, key=lambda e: e.coords):
        if abelian.pairing_num(h.center_tilde, w, nu) == 0:
            continue
        img = restrict_h(w).coords
        vecs = b_images + [img]
        if basis_search._rank_mod_p(vecs, p) != len(vecs):
            continue
        if ctx_h.n_table[img] is None or not ctx_h.n_table[img].certified:
            continue
        if b_score_h + ctx_h.n_table[img].value == min_score_h:
            omega = w
            omega_img = img
            break
    if omega is None:
        raise ExtensionHypothesisFailed(
            "no character omega extends the basis to an index-minimal basis "
            "of the p-socle dual of Z(H)")

    # n_H of the restriction of omega to nu: gcd over all characters of Z(H)
    # agreeing with omega on nu
    target = abelian.pairing_num(h.center_tilde, omega, nu)
    n_ext = 0
    certified = True
    for w in h_elements:
        if abelian.pairing_num(h.center_tilde, w, nu) != target:
            continue
        try:
            nv = repdata.n_char(h, w)
        except UnsupportedComponent:
            certified = False
            continue
        n_ext = gcd(n_ext, nv.value)
        certified = certified and nv.certified
    if n_ext == 0 or not certified:
        raise ExtensionHypothesisFailed(
            "n_H of the extension character could not be certified")

    ed_h = g_report.ed + n_ext
    caveats = [f"results assume char(k) != {p}",
               f"computed by central-extension transfer from {g_report.group}",
               f"ed(H) equals the essential {p}-dimension in this case"]

    return EdReport(
        group=_render(h.spec),
        prime=p,
        dim_g=h.dim_g,
        rank_z=h.rank_z,
        permutation=h.permutation,
        basis=g_report.basis,
        b0=g_report.b0,
        verdicts=g_report.verdicts,
        lower_raw=ed_h,
        upper=ed_h,
        exact=True,
        ed=ed_h,
        ed_red_upper=ed_h - h.rank_z,
        ed_red_exact=True,
        ed_red=ed_h - h.rank_z,
        caveats=tuple(caveats),
        n_extension=n_ext,
    )


def _order_mod_mu(h: SemisimpleGroup, nu: GroupElement) -> int:
    full = abelian.element_order(h.center_tilde, nu)
    divisors = sorted(d for d in range(1, full + 1) if full % d == 0)
    for d in divisors:
        if abelian.element_in_span(h.center_tilde, h.spec.mu_generators,
                                   abelian.scale(h.center_tilde, d, nu)):
            return d
    return full
