"""Builders for the monoid of partial isometries of the n-cycle.

Three independent construction routes are kept deliberately separate so
they can cross-check one another:

- ``build_by_restrictions``: restrict each of the 2n cycle symmetries to
  every subset of the vertices (the characterization route; fast, the
  default).
- ``build_by_closure``: generate from {g, h, e_n} by right multiplication
  (the rank-3 route).
- ``build_by_bruteforce``: filter every injective partial map through the
  distance test (the definition route; exponential, small n only).

The element count obeys a closed formula split by parity, implemented in
``cardinality_formula``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .cycle import CycleMetric
from .dihedral import DihedralElement, group_elements
from .partial_perm import PartialPerm, idempotent

__all__ = [
    "FiniteMonoid",
    "standard_generators",
    "monoid_closure",
    "build_by_restrictions",
    "build_by_closure",
    "build_by_bruteforce",
    "cardinality_formula",
    "b2_set",
    "units",
    "rank_search",
    "RankReport",
]

BRUTEFORCE_BOUND = 7  # candidate maps grow like n! * 2^n; keep the oracle honest
PAIR_SEARCH_BOUND = 5  # exhaustive 2-subset search is quadratic in |M|


def _check_n(n):
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"need an integer n >= 3, got {n!r}")


class FiniteMonoid:
    """A finite monoid of partial permutations, closed under composition.

    Elements are kept in canonical order (rank, then domain, then image
    row), so equal monoids list their elements identically no matter how
    they were built.
    """

    def __init__(self, n, elements, generators):
        self.n = n
        elems = sorted(elements, key=PartialPerm.sort_key)
        self.elements = tuple(elems)
        self.index = {a: i for i, a in enumerate(elems)}
        if len(self.index) != len(elems):
            raise ValueError("duplicate elements")
        for a in elems:
            if a.n != n:
                raise ValueError(f"element on {a.n} points in a monoid on {n}")
        try:
            self.identity = self.index[PartialPerm.identity(n)]
        except KeyError:
            raise ValueError("identity map missing") from None
        self.generators = dict(generators)
        for name, a in self.generators.items():
            if a not in self.index:
                raise ValueError(f"generator {name} is not an element")
        self._rows = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self.index

    def __getitem__(self, i):
        return self.elements[i]

    def index_of(self, a):
        return self.index[a]

    def mul(self, i, j):
        """Ordinal of elements[i] * elements[j]; KeyError if not closed."""
        return self.index[self.elements[i] * self.elements[j]]

    def element_rows(self):
        """Dense rows of all elements, cached; for bulk index arithmetic."""
        if self._rows is None:
            self._rows = tuple(a.row for a in self.elements)
        return self._rows

    def units(self):
        """The group of total elements, as a monoid on the same points."""
        total = [a for a in self.elements if a.is_total]
        gens = {k: v for k, v in standard_generators(self.n).items() if k != "e_n"}
        return FiniteMonoid(self.n, total, gens)


def standard_generators(n):
    """The rank-3 generating set: unit rotation, reflection, one idempotent."""
    return {
        "g": DihedralElement.rotation(n).to_partial_perm(),
        "h": DihedralElement.reflection(n).to_partial_perm(),
        "e_n": idempotent(n, n),
    }


def _compose_rows(a, b):
    return tuple(b[y - 1] if y else 0 for y in a)


def monoid_closure(n, gens, stop_size=None):
    """Smallest composition-closed set containing the identity and gens.

    Breadth-first over right products by the generators, in discovery
    order.  Stops early once stop_size elements are found, for searches
    that only need "does it reach the whole monoid".
    """
    gen_rows = list(dict.fromkeys(a.row for a in gens))
    ident = PartialPerm.identity(n).row
    order = [ident]
    seen = {ident}
    qi = 0
    while qi < len(order):
        r = order[qi]
        qi += 1
        for gr in gen_rows:
            pr = _compose_rows(r, gr)
            if pr not in seen:
                seen.add(pr)
                order.append(pr)
                if stop_size is not None and len(order) >= stop_size:
                    return [PartialPerm(n, row) for row in order]
    return [PartialPerm(n, row) for row in order]


@lru_cache(maxsize=None)
def build_by_restrictions(n):
    """Every restriction of every cycle symmetry; the reference builder."""
    _check_n(n)
    rows = {}
    for e in group_elements(n):
        total = e.to_partial_perm().row
        for mask in range(1 << n):
            row = tuple(
                total[i] if mask >> i & 1 else 0 for i in range(n)
            )
            rows[row] = None
    elements = [PartialPerm(n, row) for row in rows]
    return FiniteMonoid(n, elements, standard_generators(n))


@lru_cache(maxsize=None)
def build_by_closure(n):
    """Closure of {g, h, e_n} under composition."""
    _check_n(n)
    gens = standard_generators(n)
    elements = monoid_closure(n, gens.values())
    return FiniteMonoid(n, elements, gens)


@lru_cache(maxsize=None)
def build_by_bruteforce(n, bound=BRUTEFORCE_BOUND):
    """All injective partial maps that pass the distance test, by scan.

    Exists purely as an oracle for the other builders, so it refuses to
    run above `bound` rather than grind.
    """
    _check_n(n)
    if n > bound:
        raise ValueError(f"n={n} above configured bruteforce bound {bound}")
    half = [[0] * (n + 1) for _ in range(n + 1)]
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            k = abs(x - y)
            half[x][y] = min(k, n - k)
    points = range(1, n + 1)
    elements = [PartialPerm.empty(n)]
    for k in range(1, n + 1):
        for dom in combinations(points, k):
            for img in permutations(points, k):
                ok = True
                for s in range(k):
                    ds = half[dom[s]]
                    is_ = half[img[s]]
                    for t in range(s + 1, k):
                        if ds[dom[t]] != is_[img[t]]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    elements.append(PartialPerm.from_pairs(n, zip(dom, img)))
    return FiniteMonoid(n, elements, standard_generators(n))


def cardinality_formula(n):
    """Closed-form element count, split by the parity of n."""
    _check_n(n)
    if n % 2:
        return n * 2 ** (n + 1) - n * n - 2 * n + 1
    return n * 2 ** (n + 1) - 3 * n * n // 2 - 2 * n + 1


def b2_set(n):
    """The rank-2 maps between antipodal vertex pairs of an even cycle.

    For each ordered choice of source pair {i, i + n/2} and target pair
    {j, j + n/2} (1 <= i, j <= n/2) there is a straight and a crossed
    map, giving n^2 / 2 in all.  These are exactly the rank-2 elements
    with antipodal domain, the ones two distinct symmetries restrict to.
    """
    _check_n(n)
    if n % 2:
        raise ValueError(f"antipodal pairs need even n, got {n}")
    half = n // 2
    out = []
    for i in range(1, half + 1):
        for j in range(1, half + 1):
            out.append(PartialPerm.from_pairs(n, {i: j, i + half: j + half}))
            out.append(PartialPerm.from_pairs(n, {i: j + half, i + half: j}))
    return sorted(out, key=PartialPerm.sort_key)


def units(m):
    return m.units()


@dataclass(frozen=True)
class RankReport:
    n: int
    size: int
    triple_generates: bool
    singles_checked: int | None
    pairs_checked: int | None
    generating_singles: tuple
    generating_pairs: tuple

    @property
    def pair_search_ran(self):
        return self.pairs_checked is not None

    @property
    def minimum_is_three(self):
        return (
            self.triple_generates
            and self.pair_search_ran
            and not self.generating_singles
            and not self.generating_pairs
        )


def _closure_reaches(n, seed_rows, target_size):
    """Does the monoid closure of the seeds reach target_size elements?"""
    ident = tuple(range(1, n + 1))
    order = [ident]
    seen = {ident}
    qi = 0
    while qi < len(order):
        r = order[qi]
        qi += 1
        for gr in seed_rows:
            pr = tuple(gr[y - 1] if y else 0 for y in r)
            if pr not in seen:
                seen.add(pr)
                if len(seen) >= target_size:
                    return True
                order.append(pr)
    return False


def _scan_pair_stripe(args):
    """Worker: test all pairs (i, j), j > i, for i in the given stripe."""
    n, rows, size, start, step = args
    checked = 0
    found = []
    for i in range(start, size, step):
        ri = rows[i]
        for j in range(i + 1, size):
            checked += 1
            if _closure_reaches(n, (ri, rows[j]), size):
                found.append((i, j))
    return checked, found


def rank_search(m, exhaustive_pairs=False, jobs=1, pair_bound=PAIR_SEARCH_BOUND):
    """Confirm {g, h, e_n} generates m and (optionally) that no 1- or
    2-element subset does.

    The pair scan is quadratic in |m| and so is gated on n <= pair_bound;
    above that the report simply records that the scan did not run.
    """
    n = m.n
    size = len(m)
    triple = monoid_closure(n, m.generators.values())
    triple_ok = len(triple) == size and all(a in m for a in triple)

    if not exhaustive_pairs or n > pair_bound:
        return RankReport(n, size, triple_ok, None, None, (), ())

    rows = m.element_rows()
    singles = tuple(
        i for i in range(size) if _closure_reaches(n, (rows[i],), size)
    )
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        stripes = [(n, rows, size, s, jobs) for s in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_pair_stripe, stripes))
        checked = sum(c for c, _ in results)
        pairs = tuple(sorted(p for _, fs in results for p in fs))
    else:
        checked, found = _scan_pair_stripe((n, rows, size, 0, 1))
        pairs = tuple(found)
    return RankReport(n, size, triple_ok, size, checked, singles, pairs)
