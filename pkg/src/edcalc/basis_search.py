"""Index-minimal bases of the p-socle dual and their lifts to Z(G)*.

The socle dual C* is elementary abelian of rank r, so minimal generating sets
are exactly the F_p-bases.  The optimizer enumerates candidate bases in
lexicographic order with branch-and-bound on the partial score (n-values are
>= 1, so partial sums are admissible); ``brute_force_min`` is the independent
unpruned oracle used by the test suite.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import catalog, repdata
from .abelian import socle_dual, subgroup_elements
from .errors import NoAdmissibleLift, TooLarge, UnsupportedComponent
from .repdata import NValue

BRUTE_FORCE_CAP = 3 ** 8


@dataclass(frozen=True)
class BasisCandidate:
    """An index-minimal socle basis together with chosen lifts in Z(G)*."""

    chars: tuple          # lifts, as ambient characters of Z(G~)*
    socle_images: tuple   # coordinate tuples in (Z/p)^r
    score: int            # sum of n(socle image) over the basis
    certified: bool       # every n-value used is an exact invariant
    strict: bool          # lifts satisfy the exactness component rules


@dataclass
class SocleContext:
    """Precomputed data for basis search over the p-socle dual of Z(G)."""

    g: object
    p: int
    r: int
    lifts: dict           # socle coord tuple -> list of ambient characters
    n_table: dict         # socle coord tuple -> NValue (or None if unknown)
    all_certified: bool = field(default=True)


def build_socle_context(g, p: int) -> SocleContext:
    structure, restrict = socle_dual(g.char_group, p)
    r = len(structure)
    lifts = {}
    for _, el in subgroup_elements(g.char_group):
        img = restrict(el).coords
        lifts.setdefault(img, []).append(el)
    n_table = {}
    all_certified = True
    for img, chars in lifts.items():
        if all(c == 0 for c in img):
            n_table[img] = NValue(1)
            continue
        try:
            n_table[img] = repdata.n_socle_char(g, chars)
            all_certified = all_certified and n_table[img].certified
        except UnsupportedComponent:
            n_table[img] = None
            all_certified = False
    return SocleContext(g, p, r, lifts, n_table, all_certified)


def _rank_mod_p(vectors, p: int) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _nonzero_socle_chars(ctx: SocleContext):
    from itertools import product as iproduct
    for combo in iproduct(*(range(ctx.p),) * ctx.r):
        if any(combo):
            yield combo


def min_score_bases(ctx: SocleContext, limit: int = 64):
    """All F_p-bases of the socle dual achieving the minimal total n-score.

    Bases are canonical sorted tuples of coordinate tuples, returned in
    lexicographic order (at most ``limit`` of them).  Characters with unknown
    n-value are excluded from candidacy; if they make a basis impossible,
    TrivialSocle/NoAdmissibleLift style failures surface at the engine level.
    """
    candidates = [c for c in _nonzero_socle_chars(ctx) if ctx.n_table[c] is not None]
    if not candidates or _rank_mod_p(candidates, ctx.p) < ctx.r:
        raise NoAdmissibleLift("socle characters with known n-values do not span C*")

    best = [None]
    found = []

    def extend(start, chosen, score):
        if best[0] is not None and score > best[0]:
            return
        if len(chosen) == ctx.r:
            if _rank_mod_p(chosen, ctx.p) == ctx.r:
                if best[0] is None or score < best[0]:
                    best[0] = score
                    found.clear()
                if score == best[0] and len(found) < limit:
                    found.append(tuple(chosen))
            return
        remaining = ctx.r - len(chosen) - 1
        for i in range(start, len(candidates)):
            c = candidates[i]
            s = score + ctx.n_table[c].value
            if best[0] is not None and s + remaining > best[0]:
                continue
            chosen.append(c)
            if _rank_mod_p(chosen, ctx.p) == len(chosen):
                extend(i + 1, chosen, s)
            chosen.pop()

    extend(0, [], 0)
    if best[0] is None:
        raise NoAdmissibleLift("no basis of the socle dual with known n-values")
    return best[0], found


def index_minimal_basis(g, p: int) -> BasisCandidate:
    """An index-minimal basis of the socle dual, with lexicographic tie-break.

    The returned candidate carries the lexicographically smallest minimal
    basis and default (smallest admissible) lifts; the engine may reselect
    among ties using freeness as a secondary criterion.
    """
    ctx = build_socle_context(g, p)
    score, bases = min_score_bases(ctx)
    images = bases[0]
    chars, strict = lift_basis(g, images, ctx=ctx)
    certified = all(ctx.n_table[c].certified for c in images)
    return BasisCandidate(chars, images, score, certified, strict)


def brute_force_min(g, p: int) -> int:
    """True minimum of the basis score by unpruned enumeration (tests only)."""
    ctx = build_socle_context(g, p)
    if p ** ctx.r > BRUTE_FORCE_CAP:
        raise TooLarge(f"socle dual of order {p ** ctx.r} exceeds the oracle cap")
    best = None
    chars = [c for c in _nonzero_socle_chars(ctx) if ctx.n_table[c] is not None]
    for combo in combinations(chars, ctx.r):
        if _rank_mod_p(combo, p) != ctx.r:
            continue
        s = sum(ctx.n_table[c].value for c in combo)
        if best is None or s < best:
            best = s
    if best is None:
        raise NoAdmissibleLift("no generating set with known n-values")
    return best


def strict_lift_ok(g, chi) -> bool:
    """Component restrictions under which dim V(chi_i) = n(chi_i) holds.

    B/D: no vector component on a Spin(2k) unless 2k is a power of two (this
    rules out both the component "2" of a Z/4 center and "(1,1)" of a
    Z/2 x Z/2 center when the parameter is not a 2-power).  Type A components
    must already be tabulated.  C and E6 are automatic.
    """
    if g.family_tag == "BD":
        for i, f in enumerate(g.factors):
            c = catalog.component(g, i, chi)
            if any(c) and repdata.rep_choice(f, c).tag == repdata.VECTOR:
                if f.n % 4 == 2:
                    return False          # component 2 never allowed
                if f.n & (f.n - 1):
                    return False          # (1,1) only on 2-power parameters
    elif g.family_tag == "A":
        try:
            repdata.n_char(g, chi)
        except UnsupportedComponent:
            return False
    elif g.family_tag == "C":
        return all(repdata.n_component(f, catalog.component(g, i, chi)).certified
                   for i, f in enumerate(g.factors))
    return True


def lift_basis(g, socle_images, ctx: SocleContext = None, strict: bool = True):
    """Lift socle basis characters to Z(G)* under the family rules.

    Every lift of a socle basis is a minimal-cardinality generating set of
    Z(G)* (Nakayama), so lifting is per-character.  Among admissible lifts,
    generically free ones are preferred, then the lexicographically smallest.
    Returns ``(chars, strict_used)``; if no strict lift exists the search is
    retried without the exactness restrictions, and if that fails too a
    NoAdmissibleLift is raised.
    """
    from . import freeness
    if ctx is None:
        ctx = build_socle_context(g, g.prime)

    def pick(img, strict_mode):
        pool = []
        for chi in ctx.lifts[img]:
            try:
                repdata.dim_V(g, chi)
            except UnsupportedComponent:
                continue
            if strict_mode and not strict_lift_ok(g, chi):
                continue
            pool.append(chi)
        if not pool:
            return None
        pool.sort(key=lambda c: c.coords)
        for chi in pool:
            if freeness.check_char(g, chi).free:
                return chi
        return pool[0]

    for strict_mode in ([True, False] if strict else [False]):
        chars = []
        ok = True
        for img in socle_images:
            chi = pick(img, strict_mode)
            if chi is None:
                ok = False
                break
            chars.append(chi)
        if ok:
            return tuple(chars), strict_mode
    raise NoAdmissibleLift(
        "no lift of the socle basis has tabulated representation data")
