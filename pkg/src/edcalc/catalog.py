"""Dictionary of supported simple factors and semisimple group construction.

Coordinate convention for centers (fixed here once and for all):

* Spin(n), n odd: Z/2; character 1 is the spin representation.
* Spin(n), n = 2 mod 4: Z/4; characters 1 and 3 are the half-spin
  representations, character 2 is the vector representation.
* Spin(n), n = 0 mod 4: Z/2 x Z/2 (two coordinates); (1,0) and (0,1) are the
  half-spin representations, (1,1) is the vector representation.  Which
  half-spin is "+" is an arbitrary, unobservable labeling.
* Sp(2n): Z/2; character 1 is the 2n-dimensional vector representation.
* SL(q), q = p^k: Z/q; character c is the c-th exterior power of the vector
  representation, supported only for c in {0, 1, q-1}.
* E6: Z/3; characters 1 and 2 are the 27-dimensional minuscule
  representations.

Central-subgroup generators use additive integer coordinates against this
convention (a primitive 4th root i is written 1, and -i is written 3).
"""

from dataclasses import dataclass, field

from . import abelian
from .abelian import CyclicDecomposition, GroupElement, SubgroupPresentation
from .errors import (BadParameter, MalformedMuGenerator, NotReduced,
                     UnsupportedFamilyMix)

SPIN, SP, SL, E6 = "Spin", "Sp", "SL", "E6"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class SimpleFactor:
    """One simple simply connected factor.

    ``kind`` is one of "Spin", "Sp", "SL", "E6".  For Spin(n), ``n`` is n;
    for Sp(2n) it is the rank n; for SL(p^k) the prime ``p`` and exponent
    ``k`` are stored separately.
    """

    kind: str
    n: int = 0
    p: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind == SPIN:
            if self.n < 3 or self.n == 4:
                raise BadParameter(f"Spin({self.n}) not supported (need n >= 3, n != 4)")
        elif self.kind == SP:
            if self.n < 3:
                raise BadParameter(f"Sp({2 * self.n}) not supported (need rank >= 3)")
        elif self.kind == SL:
            if not _is_prime(self.p) or self.k < 1:
                raise BadParameter(f"SL parameter {self.p}^{self.k} is not a prime power")
        elif self.kind != E6:
            raise BadParameter(f"unknown factor kind {self.kind!r}")

    @property
    def center_orders(self) -> tuple:
        if self.kind == SPIN:
            if self.n % 2 == 1:
                return (2,)
            if self.n % 4 == 2:
                return (4,)
            return (2, 2)
        if self.kind == SP:
            return (2,)
        if self.kind == SL:
            return (self.p ** self.k,)
        return (3,)

    @property
    def dim(self) -> int:
        if self.kind == SPIN:
            return self.n * (self.n - 1) // 2
        if self.kind == SP:
            return self.n * (2 * self.n + 1)
        if self.kind == SL:
            q = self.p ** self.k
            return q * q - 1
        return 78

    @property
    def sort_param(self) -> int:
        # descending canonical order: Spin/Sp by n, SL by exponent k
        return self.k if self.kind == SL else self.n

    def __str__(self):
        if self.kind == SPIN:
            return f"Spin({self.n})"
        if self.kind == SP:
            return f"Sp({2 * self.n})"
        if self.kind == SL:
            return f"SL({self.p ** self.k})"
        return "E6"


@dataclass(frozen=True)
class GroupSpec:
    """User input: simple factors plus generators of the central subgroup."""

    factors: tuple
    mu_generators: tuple = ()


@dataclass(frozen=True)
class SemisimpleGroup:
    """Derived data for G = (prod of factors) / mu, in canonical factor order."""

    spec: GroupSpec                     # canonicalized (factors sorted)
    permutation: tuple                  # canonical index -> input index
    dim_g: int
    center_tilde: CyclicDecomposition
    blocks: tuple                       # per factor: (start, width) in coords
    char_group: SubgroupPresentation    # Z(G)* inside Z(G~)*
    rank_z: int
    family_tag: str                     # "BD" | "C" | "A" | "E6"
    prime: int = field(default=2)       # default socle prime for the family

    @property
    def factors(self):
        return self.spec.factors

    @property
    def mu_generators(self):
        return self.spec.mu_generators


def _family_tag(factors) -> str:
    kinds = {f.kind for f in factors}
    if kinds <= {SPIN}:
        return "BD"
    if kinds == {SP}:
        return "C"
    if kinds == {SL}:
        if len({f.p for f in factors}) > 1:
            raise UnsupportedFamilyMix("SL factors must share one prime")
        return "A"
    if kinds == {E6}:
        return "E6"
    raise UnsupportedFamilyMix(f"cannot mix factor kinds {sorted(kinds)}")


def build(spec: GroupSpec) -> SemisimpleGroup:
    """Validate a spec and compute all derived data.

    Factors are canonicalized into descending order of their parameter
    (stable), with the mu generators' coordinate blocks permuted to match.
    """
    factors = tuple(spec.factors)
    if not factors:
        raise BadParameter("at least one simple factor is required")
    tag = _family_tag(factors)

    order = sorted(range(len(factors)), key=lambda i: -factors[i].sort_param)
    factors = tuple(factors[i] for i in order)

    in_blocks = []
    pos = 0
    for f in spec.factors:
        w = len(f.center_orders)
        in_blocks.append((pos, w))
        pos += w
    total = pos

    blocks = []
    pos = 0
    for f in factors:
        w = len(f.center_orders)
        blocks.append((pos, w))
        pos += w

    center = CyclicDecomposition(sum((f.center_orders for f in factors), ()))

    mu = []
    for g in spec.mu_generators:
        if len(g.coords) != total:
            raise MalformedMuGenerator(
                f"mu generator has {len(g.coords)} coordinates, expected {total}")
        coords = []
        for i in order:
            s, w = in_blocks[i]
            coords.extend(g.coords[s:s + w])
        try:
            mu.append(abelian.element(center, coords))
        except abelian.MalformedElement as e:
            raise MalformedMuGenerator(str(e)) from e
    mu = tuple(mu)

    char_group = abelian.annihilator(center, mu)
    prime = {"BD": 2, "C": 2, "E6": 3}.get(tag, factors[0].p if tag == "A" else 2)

    return SemisimpleGroup(
        spec=GroupSpec(factors, mu),
        permutation=tuple(order),
        dim_g=sum(f.dim for f in factors),
        center_tilde=center,
        blocks=tuple(blocks),
        char_group=char_group,
        rank_z=abelian.rank(char_group),
        family_tag=tag,
        prime=prime,
    )


def is_reduced(g: SemisimpleGroup) -> bool:
    """True iff mu contains no full center factor Z(G~_i) x {1}."""
    for start, width in g.blocks:
        contained = True
        for j in range(width):
            coords = [0] * len(g.center_tilde)
            coords[start + j] = 1
            gen = abelian.element(g.center_tilde, coords)
            if not abelian.element_in_span(g.center_tilde, g.mu_generators, gen):
                contained = False
                break
        if contained:
            return False
    return True


def component(g: SemisimpleGroup, i: int, chi: GroupElement) -> tuple:
    """The i-th factor's coordinate block of a character."""
    start, width = g.blocks[i]
    return chi.coords[start:start + width]


def support(g: SemisimpleGroup, chi: GroupElement) -> frozenset:
    """Indices of factors on which the character is nonzero."""
    return frozenset(i for i in range(len(g.factors))
                     if any(c != 0 for c in component(g, i, chi)))


def validate_reduced(g: SemisimpleGroup) -> None:
    if not is_reduced(g):
        raise NotReduced(
            "the central subgroup contains a full center factor; split off the "
            "adjoint direct factor and compute the pieces separately")
