"""Representation dimensions and gcd-invariants n(chi), componentwise.

For each simple factor and center-character component this module gives the
dimension of the selected representation V(chi_i) and the invariant
n(chi_i) = gcd of dimensions over all representations with that central
character.  The Sp value 2n is exact only when n is a power of two; otherwise
it is still a valid representation dimension but the returned value carries
``certified=False`` and the engine refuses to certify exactness with it.
"""

from dataclasses import dataclass
from math import gcd, prod

from . import catalog
from .abelian import GroupElement
from .catalog import E6, SL, SP, SPIN, SemisimpleGroup, SimpleFactor
from .errors import UnsupportedComponent

TRIVIAL = "trivial"
SPIN_REP = "spin"
HALF_SPIN = "half_spin"
VECTOR = "vector"
EXT_POWER = "ext_power"
MINUSCULE = "minuscule"


@dataclass(frozen=True)
class RepChoice:
    tag: str
    dim: int


@dataclass(frozen=True)
class NValue:
    value: int
    certified: bool = True

    def __mul__(self, other: "NValue") -> "NValue":
        return NValue(self.value * other.value, self.certified and other.certified)


def _is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _v2(n: int) -> int:
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k


def _spin_tag(f: SimpleFactor, c: tuple) -> str:
    if all(x == 0 for x in c):
        return TRIVIAL
    if f.n % 2 == 1:
        return SPIN_REP
    if f.n % 4 == 2:
        return VECTOR if c[0] == 2 else HALF_SPIN
    return VECTOR if c == (1, 1) else HALF_SPIN


def rep_choice(f: SimpleFactor, c: tuple) -> RepChoice:
    """The representation selected for one character component.

    ``c`` is the component's coordinate block (length 1, or 2 for the
    Z/2 x Z/2 centers of Spin(4k)).
    """
    if all(x == 0 for x in c):
        return RepChoice(TRIVIAL, 1)
    if f.kind == SPIN:
        tag = _spin_tag(f, c)
        if tag == VECTOR:
            return RepChoice(VECTOR, f.n)
        if f.n % 2 == 1:
            return RepChoice(SPIN_REP, 2 ** ((f.n - 1) // 2))
        return RepChoice(HALF_SPIN, 2 ** ((f.n - 2) // 2))
    if f.kind == SP:
        return RepChoice(VECTOR, 2 * f.n)
    if f.kind == SL:
        q = f.p ** f.k
        if c[0] not in (1, q - 1):
            raise UnsupportedComponent(
                f"SL({q}) component {c[0]} outside the tabulated set {{0, 1, {q - 1}}}")
        return RepChoice(EXT_POWER, q)
    return RepChoice(MINUSCULE, 27)


def rep_dimension(f: SimpleFactor, c: tuple) -> int:
    return rep_choice(f, c).dim


def n_component(f: SimpleFactor, c: tuple) -> NValue:
    """The invariant n(chi_i) for one factor component."""
    if all(x == 0 for x in c):
        return NValue(1)
    if f.kind == SPIN:
        if f.n % 2 == 1:
            return NValue(2 ** ((f.n - 1) // 2))
        if _spin_tag(f, c) == VECTOR:
            return NValue(2 ** _v2(f.n))
        return NValue(2 ** ((f.n - 2) // 2))
    if f.kind == SP:
        # the equality n(chi) = 2n is proved only for 2-power ranks;
        # otherwise 2n remains an upper bound (a representation dimension)
        return NValue(2 * f.n, certified=_is_pow2(f.n))
    if f.kind == SL:
        q = f.p ** f.k
        if c[0] not in (1, q - 1):
            raise UnsupportedComponent(
                f"SL({q}) component {c[0]} outside the tabulated set {{0, 1, {q - 1}}}")
        return NValue(q)
    return NValue(27)


def rep_choices(g: SemisimpleGroup, chi: GroupElement) -> tuple:
    return tuple(rep_choice(f, catalog.component(g, i, chi))
                 for i, f in enumerate(g.factors))


def n_char(g: SemisimpleGroup, chi: GroupElement) -> NValue:
    """Product of component n-values; carries the worst validity flag."""
    out = NValue(1)
    for i, f in enumerate(g.factors):
        out = out * n_component(f, catalog.component(g, i, chi))
    return out


def dim_V(g: SemisimpleGroup, chi: GroupElement) -> int:
    """Dimension of the selected tensor product representation."""
    return prod(r.dim for r in rep_choices(g, chi))


def n_socle_char(g: SemisimpleGroup, lifts) -> NValue:
    """n of a socle character: gcd of n over all its lifts in Z(G)*.

    Any representation whose socle character is fixed decomposes into
    irreducibles whose central characters lift it, so the gcd over lifts is
    the exact invariant.  Lifts whose n-value is not tabulated are skipped,
    which can only overestimate the gcd; the result is then uncertified.
    """
    value = 0
    certified = True
    for chi in lifts:
        try:
            nv = n_char(g, chi)
        except UnsupportedComponent:
            certified = False
            continue
        value = gcd(value, nv.value)
        certified = certified and nv.certified
    if value == 0:
        raise UnsupportedComponent("no lift of this socle character has a tabulated n-value")
    return NValue(value, certified)
