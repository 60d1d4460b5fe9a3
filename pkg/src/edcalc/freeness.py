"""Generic-freeness predicates for the candidate tensor representations.

Types B/D are decided against the finite catalog of non-generically-free
tensor products (spin, half-spin and vector factors); types C, A and E6 use
closed-form criteria.  The affine and projective verdicts coincide for the
homogeneous families handled here, so a single verdict serves both.
"""

from dataclasses import dataclass
from math import prod

from . import catalog, repdata
from .catalog import E6, SL, SP, SPIN, SemisimpleGroup
from .errors import NotSLFamily, NotSpFamily, NotSpinFamily


@dataclass(frozen=True)
class FreenessVerdict:
    free: bool
    reason: str
    detail: str = ""


_SPINLIKE = (repdata.SPIN_REP, repdata.HALF_SPIN)


def _match_spinlike_rows(ns):
    """Match a multiset of Spin parameters, all with (half-)spin tags,
    against catalog rows 1-7.  Returns the row number or None."""
    ms = sorted(ns)
    if len(ms) == 1:
        n = ms[0]
        if 3 <= n <= 16 and n not in (4, 15):
            return 1
    if len(ms) == 2:
        for i in range(2):
            head, tail = ms[i], ms[1 - i]
            if head == 3 and tail in (3, 5, 6, 7, 9, 11):
                return 2
            if head == 5 and tail in (5, 6, 7):
                return 3
            if head == 6 and tail in (6, 7, 10):
                return 4
    if len(ms) == 3:
        if ms.count(3) >= 2:
            rest = list(ms)
            rest.remove(3)
            rest.remove(3)
            if rest[0] in (3, 5, 6, 7):
                return 5
        if 3 in ms and 6 in ms:
            rest = list(ms)
            rest.remove(3)
            rest.remove(6)
            if rest[0] in (5, 6):
                return 6
    if ms == [3, 3, 3, 3]:
        return 7
    return None


def check_bd(factors) -> FreenessVerdict:
    """Freeness of a tensor product of Spin representations.

    ``factors`` lists the supported factors only, as (n, tag) pairs with tag
    one of "spin", "half_spin", "vector".  Matching is up to permutation and
    half-spin sign.
    """
    for n, tag in factors:
        if tag not in (*_SPINLIKE, repdata.VECTOR):
            raise NotSpinFamily(f"unexpected rep tag {tag!r}")
    if not factors:
        return FreenessVerdict(False, "CriterionFailed", "empty support")

    dims = [2 ** ((n - 1) // 2) if tag == repdata.SPIN_REP
            else 2 ** ((n - 2) // 2) if tag == repdata.HALF_SPIN
            else n
            for n, tag in factors]

    if all(tag in _SPINLIKE for _, tag in factors):
        row = _match_spinlike_rows([n for n, _ in factors])
        if row is not None:
            return FreenessVerdict(False, f"TableRow({row})")

    vectors = [(i, n) for i, (n, tag) in enumerate(factors) if tag == repdata.VECTOR]
    if vectors:
        if len(factors) == 1:
            return FreenessVerdict(False, "TableRow(8)")
        if (len(factors) == 2 and len(vectors) == 2
                and vectors[0][1] == vectors[1][1]):
            return FreenessVerdict(False, "TableRow(9)")
        for i, n in vectors:
            rest = prod(d for j, d in enumerate(dims) if j != i)
            if n > rest + 1:
                return FreenessVerdict(False, "TableRow(10)",
                                       f"W({n}) against a {rest}-dimensional tail")
    return FreenessVerdict(True, "NotInTable")


def check_c(ranks) -> FreenessVerdict:
    """Type C criterion on the supported Sp ranks."""
    ranks = sorted(ranks, reverse=True)
    if len(ranks) < 3:
        return FreenessVerdict(False, "CriterionFailed",
                               f"support size {len(ranks)} < 3")
    head, tail = 2 * ranks[0], prod(2 * n for n in ranks[1:])
    if head > tail:
        return FreenessVerdict(False, "CriterionFailed",
                               f"2n_1 = {head} > {tail} = product of the rest")
    return FreenessVerdict(True, "TypeCCriterion")


def check_a(p: int, ks) -> FreenessVerdict:
    """Type A criterion on the supported SL(p^k) exponents."""
    ks = sorted(ks, reverse=True)
    if len(ks) < 3:
        return FreenessVerdict(False, "CriterionFailed",
                               f"support size {len(ks)} < 3")
    if ks[0] >= sum(ks[1:]):
        return FreenessVerdict(False, "CriterionFailed",
                               f"k_1 = {ks[0]} >= {sum(ks[1:])} = sum of the rest")
    qs = sorted(p ** k for k in ks)
    if qs == [2, 2, 2, 2] or qs == [3, 3, 3]:
        return FreenessVerdict(False, "CriterionFailed", f"excluded product {qs}")
    if len(qs) == 3 and p == 2 and qs == sorted([2, 2 ** ks[0], 2 ** ks[0]]):
        return FreenessVerdict(False, "CriterionFailed", f"excluded product {qs}")
    return FreenessVerdict(True, "TypeACriterion")


def check_e6(support_size: int) -> FreenessVerdict:
    if support_size >= 2:
        return FreenessVerdict(True, "E6Criterion")
    return FreenessVerdict(False, "CriterionFailed",
                           f"support size {support_size} < 2")


def check_char(g: SemisimpleGroup, chi) -> FreenessVerdict:
    """Dispatch the family criterion for one character of Z(G)*."""
    supp = sorted(catalog.support(g, chi))
    if g.family_tag == "BD":
        reps = repdata.rep_choices(g, chi)
        return check_bd([(g.factors[i].n, reps[i].tag) for i in supp])
    if g.family_tag == "C":
        return check_c([g.factors[i].n for i in supp])
    if g.family_tag == "A":
        return check_a(g.factors[0].p, [g.factors[i].k for i in supp])
    return check_e6(len(supp))
