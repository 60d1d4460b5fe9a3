"""Exact arithmetic for finite abelian groups given by cyclic decompositions.

Everything here runs over Python's arbitrary-precision integers.  A matrix is
a plain list of equal-length lists of ints.  Group elements and characters are
coordinate tuples against an ambient :class:`CyclicDecomposition`; the dual
group of ``Z/d_1 x ... x Z/d_n`` is identified with the same decomposition via
the pairing ``<chi, g> = sum_i chi_i * g_i / d_i  (mod 1)``.
"""

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd, lcm, prod

from .errors import MalformedElement, TooLarge, TrivialSocle

IntMatrix = list  # list[list[int]], rectangular

#: Hard cap on brute-force enumeration (elements).
ENUMERATION_CAP = 1 << 20


@dataclass(frozen=True)
class CyclicDecomposition:
    """An ordered sequence of cyclic factor orders, each >= 2."""

    orders: tuple

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        if any(d < 2 for d in self.orders):
            raise MalformedElement(f"cyclic factor orders must be >= 2: {self.orders}")

    @property
    def order(self) -> int:
        return prod(self.orders)

    def __len__(self):
        return len(self.orders)


@dataclass(frozen=True)
class GroupElement:
    """Coordinates of an element, reduced against an ambient decomposition."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))


# Characters live in the dual group, which shares the ambient orders.
Character = GroupElement


def element(ambient: CyclicDecomposition, coords) -> GroupElement:
    """Reduce ``coords`` modulo the ambient orders."""
    coords = tuple(coords)
    if len(coords) != len(ambient):
        raise MalformedElement(
            f"expected {len(ambient)} coordinates, got {len(coords)}")
    return GroupElement(tuple(c % d for c, d in zip(coords, ambient.orders)))


def check_element(ambient: CyclicDecomposition, g: GroupElement) -> None:
    if len(g.coords) != len(ambient):
        raise MalformedElement(
            f"expected {len(ambient)} coordinates, got {len(g.coords)}")
    for c, d in zip(g.coords, ambient.orders):
        if not 0 <= c < d:
            raise MalformedElement(f"coordinate {c} out of range [0, {d})")


def add(ambient: CyclicDecomposition, a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(tuple((x + y) % d for x, y, d in
                              zip(a.coords, b.coords, ambient.orders)))


def scale(ambient: CyclicDecomposition, t: int, a: GroupElement) -> GroupElement:
    return GroupElement(tuple((t * x) % d for x, d in zip(a.coords, ambient.orders)))


def zero(ambient: CyclicDecomposition) -> GroupElement:
    return GroupElement((0,) * len(ambient))


def element_order(ambient: CyclicDecomposition, a: GroupElement) -> int:
    return lcm(*(d // gcd(c, d) for c, d in zip(a.coords, ambient.orders))) \
        if ambient.orders else 1


def pairing_num(ambient: CyclicDecomposition, chi: Character, g: GroupElement) -> int:
    """Numerator of <chi, g> over the common denominator lcm(orders).

    Zero iff the pairing vanishes mod 1.
    """
    big = lcm(*ambient.orders)
    return sum(c * x * (big // d)
               for c, x, d in zip(chi.coords, g.coords, ambient.orders)) % big


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _snf_with_inverses(a):
    """Return (d, u, v, uinv, vinv) with u*a*v = d in Smith normal form."""
    rows = len(a)
    cols = len(a[0])
    d = [list(map(int, row)) for row in a]
    u, uinv = _identity(rows), _identity(rows)
    v, vinv = _identity(cols), _identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for r in range(rows):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def swap_cols(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in range(rows):
            uinv[r][i] = -uinv[r][i]

    def negate_col(i):
        for r in range(rows):
            d[r][i] = -d[r][i]
        for r in range(cols):
            v[r][i] = -v[r][i]
        vinv[i] = [-x for x in vinv[i]]

    def add_row(i, j, c):
        # row_i += c * row_j
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        for r in range(rows):
            uinv[r][j] -= c * uinv[r][i]

    def add_col(i, j, c):
        # col_i += c * col_j
        for r in range(rows):
            d[r][i] += c * d[r][j]
        for r in range(cols):
            v[r][i] += c * v[r][j]
        vinv[j] = [x - c * y for x, y in zip(vinv[j], vinv[i])]

    def find_pivot(t):
        # smallest nonzero absolute value, first occurrence in row-major order
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        pos = find_pivot(t)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            if d[t][t] < 0:
                negate_row(t)
            piv = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    add_row(i, t, -(d[i][t] // piv))
                    if d[i][t] != 0:
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    add_col(j, t, -(d[t][j] // piv))
                    if d[t][j] != 0:
                        dirty = True
            if dirty:
                pos = find_pivot(t)
                continue
            # pivot divides everything below/right, or pull in a bad row
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % piv != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
            pos = find_pivot(t)
        t += 1

    return d, u, v, uinv, vinv


def smith_normal_form(a):
    """Smith normal form of a nonempty integer matrix.

    Returns (d, u, v) with ``u @ a @ v == d``, d diagonal with nonnegative
    entries satisfying d[i][i] | d[i+1][i+1], and u, v unimodular.
    """
    if not a or not a[0]:
        raise MalformedElement("smith_normal_form requires a nonempty matrix")
    d, u, v, _, _ = _snf_with_inverses(a)
    return d, u, v


def mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def determinant(a):
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(a)
    m = [list(map(int, row)) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _kernel_basis(m):
    """Basis (as column vectors) of the integer kernel of matrix m."""
    d, _, v, _, _ = _snf_with_inverses(m)
    rank = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i] != 0)
    cols = len(m[0])
    return [[v[r][j] for r in range(cols)] for j in range(rank, cols)]


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupPresentation:
    """A subgroup of a finite abelian group with its invariant-factor basis.

    ``basis[i]`` has order ``structure.orders[i]`` and together the basis
    elements generate the same subgroup as ``generators``.
    """

    ambient: CyclicDecomposition
    generators: tuple
    structure: tuple  # invariant factors d_1 | d_2 | ..., each >= 2
    basis: tuple

    @property
    def order(self) -> int:
        return prod(self.structure)


def subgroup_structure(ambient: CyclicDecomposition, generators) -> SubgroupPresentation:
    """Invariant factors and an aligned basis of the subgroup <generators>."""
    generators = tuple(generators)
    for g in generators:
        check_element(ambient, g)
    if not generators:
        return SubgroupPresentation(ambient, (), (), ())

    n = len(ambient)
    k = len(generators)
    # Relation lattice R = { x in Z^k : sum x_j g_j = 0 in the ambient group },
    # obtained by projecting ker [G | diag(orders)] onto the x-block.
    m = [[generators[j].coords[i] for j in range(k)] +
         [ambient.orders[i] if c == i else 0 for c in range(n)]
         for i in range(n)]
    ker = _kernel_basis(m)
    rel = [vec[:k] for vec in ker]
    if not rel:
        raise MalformedElement("relation lattice unexpectedly empty")
    rel_mat = [[vec[j] for vec in rel] for j in range(k)]  # k x len(rel)
    s, u2, _, u2inv, _ = _snf_with_inverses(rel_mat)

    structure = []
    basis = []
    for i in range(k):
        order = abs(s[i][i]) if i < len(s[0]) else 0
        if order == 0:
            raise MalformedElement("subgroup relation lattice not full rank")
        if order == 1:
            continue
        # basis element: sum_j (u2inv)_{j i} g_j
        b = zero(ambient)
        for j in range(k):
            b = add(ambient, b, scale(ambient, u2inv[j][i], generators[j]))
        structure.append(order)
        basis.append(b)
    return SubgroupPresentation(ambient, generators, tuple(structure), tuple(basis))


def annihilator(ambient: CyclicDecomposition, mu) -> SubgroupPresentation:
    """The subgroup { chi : <chi, g> = 0 for all g in mu } of the dual group."""
    mu = tuple(mu)
    for g in mu:
        check_element(ambient, g)
    n = len(ambient)
    if not mu:
        gens = [element(ambient, tuple(int(i == j) for j in range(n)))
                for i in range(n)]
        return subgroup_structure(ambient, gens)

    big = lcm(*ambient.orders)
    k = len(mu)
    # chi annihilates mu iff A chi = 0 mod big, A[j][i] = mu_j[i] * big / d_i
    m = [[mu[j].coords[i] * (big // ambient.orders[i]) for i in range(n)] +
         [big if c == j else 0 for c in range(k)]
         for j in range(k)]
    ker = _kernel_basis(m)
    gens = [element(ambient, vec[:n]) for vec in ker]
    # the diagonal lattice is contained in the kernel, so gens span the
    # annihilator; include unit multiples explicitly for robustness
    return subgroup_structure(ambient, gens)


def rank(s: SubgroupPresentation) -> int:
    """Minimal number of generators (invariant factors != 1)."""
    return len(s.structure)


def subgroup_elements(s: SubgroupPresentation):
    """All elements of the subgroup, keyed by basis coordinates.

    Returns a list of (coords_in_basis, GroupElement) pairs, in lexicographic
    order of the basis coordinates.
    """
    if s.order > ENUMERATION_CAP:
        raise TooLarge(f"subgroup of order {s.order} exceeds enumeration cap")
    out = []
    for combo in iproduct(*(range(d) for d in s.structure)):
        el = zero(s.ambient)
        for t, b in zip(combo, s.basis):
            el = add(s.ambient, el, scale(s.ambient, t, b))
        out.append((combo, el))
    return out


def socle_dual(s: SubgroupPresentation, p: int):
    """Dual of the p-socle of the group presented by ``s``.

    Returns ``(socle_structure, restrict)`` where ``socle_structure`` is
    ``(Z/p)^r`` with r the number of invariant factors divisible by p, and
    ``restrict`` maps an element of the subgroup (a character of the group
    whose dual ``s`` presents) to its restriction on the socle: coordinatewise
    reduction mod p of its basis coordinates, kept only on the p-divisible
    factors.
    """
    if s.order % p != 0:
        raise TrivialSocle(f"{p} does not divide the group order {s.order}")
    socle_idx = [i for i, d in enumerate(s.structure) if d % p == 0]
    structure = CyclicDecomposition((p,) * len(socle_idx))
    coords_of = {el.coords: combo for combo, el in subgroup_elements(s)}

    def restrict(chi: GroupElement) -> Character:
        combo = coords_of.get(chi.coords)
        if combo is None:
            raise MalformedElement("element does not lie in the subgroup")
        return Character(tuple(combo[i] % p for i in socle_idx))

    return structure, restrict


# ---------------------------------------------------------------------------
# Brute-force oracles (public test surface)
# ---------------------------------------------------------------------------

def span_closure(ambient: CyclicDecomposition, generators, cap: int = ENUMERATION_CAP):
    """Close ``generators`` under addition; returns a set of coordinate tuples."""
    seen = {zero(ambient).coords}
    frontier = [zero(ambient)]
    while frontier:
        nxt = []
        for el in frontier:
            for g in generators:
                s = add(ambient, el, g)
                if s.coords not in seen:
                    if len(seen) >= cap:
                        raise TooLarge(f"closure exceeds cap {cap}")
                    seen.add(s.coords)
                    nxt.append(s)
        frontier = nxt
    return seen


def element_in_span(ambient: CyclicDecomposition, generators, target: GroupElement) -> bool:
    """Exact membership test for <generators> via SNF solvability."""
    check_element(ambient, target)
    generators = tuple(generators)
    n = len(ambient)
    k = len(generators)
    cols = [[g.coords[i] for g in generators] +
            [ambient.orders[i] if c == i else 0 for c in range(n)]
            for i in range(n)]
    if k == 0:
        return all(c == 0 for c in target.coords)
    d, u, _, _, _ = _snf_with_inverses(cols)
    t = [sum(u[i][j] * target.coords[j] for j in range(n)) for i in range(n)]
    for i in range(n):
        dii = d[i][i] if i < len(d[0]) else 0
        if dii == 0:
            if t[i] != 0:
                return False
        elif t[i] % dii != 0:
            return False
    return True
