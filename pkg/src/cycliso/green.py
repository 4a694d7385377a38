"""Green's relations on the cycle-isometry monoid.

Two routes, kept independent on purpose:

- ``green_LRH`` and ``green_J`` use the structure theory: L is "same
  image", R is "same domain", H is both, and J is decided by rank and
  by the shape of the domain alone (distance of the pair at rank 2; at
  rank >= 3, whether some symmetry of the *index positions* carries one
  sorted domain onto the other through a partial isometry).
- ``green_oracle`` uses only the definitions, computing principal ideals
  M a, a M and M a M from the full multiplication table.

The two must produce identical partitions; tests enforce that.
"""

from dataclasses import dataclass

from .dihedral import group_elements
from .partial_perm import PartialPerm

__all__ = ["GreenClasses", "green_LRH", "green_J", "green_oracle"]

ORACLE_SIZE_BOUND = 1024  # |M|^2 products; covers n <= 6


@dataclass(frozen=True)
class GreenClasses:
    """A partition of element ordinals, classes and members both sorted."""

    relation: str
    classes: tuple

    @property
    def class_count(self):
        return len(self.classes)

    def partition(self):
        return frozenset(frozenset(c) for c in self.classes)

    def class_sizes_histogram(self):
        hist = {}
        for c in self.classes:
            hist[len(c)] = hist.get(len(c), 0) + 1
        return dict(sorted(hist.items()))


def _group_by(keyed):
    """keyed: iterable of (key, ordinal) -> canonical GreenClasses body."""
    buckets = {}
    for key, i in keyed:
        buckets.setdefault(key, []).append(i)
    classes = sorted((tuple(sorted(v)) for v in buckets.values()))
    return tuple(classes)


def green_LRH(m, relation):
    """L, R or H classes via image / domain / both."""
    if relation not in ("L", "R", "H"):
        raise ValueError(f"relation must be L, R or H, got {relation!r}")
    keyed = []
    for i, a in enumerate(m.elements):
        if relation == "L":
            key = a.image()
        elif relation == "R":
            key = a.domain()
        else:
            key = (a.domain(), a.image())
        keyed.append((key, i))
    return GreenClasses(relation, _group_by(keyed))


def _domains_related(metric, dom_a, dom_b):
    """Does some symmetry of the k index positions carry dom_b onto dom_a
    through a partial isometry of the n-cycle?

    dom_a and dom_b are ascending tuples of equal length k >= 3.  For a
    symmetry s of the k-cycle of positions, the candidate map sends
    dom_b[p] to dom_a[s(p)]; relatedness means some candidate preserves
    the distance on the big cycle.
    """
    k = len(dom_a)
    for s in group_elements(k):
        pairs = {dom_b[p - 1]: dom_a[s.act(p) - 1] for p in range(1, k + 1)}
        if metric.is_partial_isometry(PartialPerm.from_pairs(metric.n, pairs)):
            return True
    return False


def green_J(m, metric):
    """J classes via rank and domain shape.

    Rank 0 and rank 1 each form a single class.  Two rank-2 elements are
    related iff their domain pairs lie at the same distance.  At rank
    k >= 3 relatedness of elements reduces to relatedness of their
    domains under ``_domains_related``.
    """
    classes = []
    by_rank = {}
    for i, a in enumerate(m.elements):
        by_rank.setdefault(a.rank, []).append(i)
    for rank in sorted(by_rank):
        members = by_rank[rank]
        if rank <= 1:
            classes.append(tuple(sorted(members)))
            continue
        if rank == 2:
            keyed = []
            for i in members:
                x, y = m.elements[i].domain()
                keyed.append((metric.distance(x, y), i))
            classes.extend(_group_by(keyed))
            continue
        domains = sorted({m.elements[i].domain() for i in members})
        reps = []  # one known domain per class found so far
        label = {}
        for dom in domains:
            for r, rep_dom in enumerate(reps):
                if _domains_related(metric, rep_dom, dom):
                    label[dom] = r
                    break
            else:
                label[dom] = len(reps)
                reps.append(dom)
        keyed = [(label[m.elements[i].domain()], i) for i in members]
        classes.extend(_group_by(keyed))
    return GreenClasses("J", tuple(sorted(classes)))


def green_oracle(m, relation, size_bound=ORACLE_SIZE_BOUND):
    """Green classes straight from the definitions, via principal ideals.

    Builds the full |M| x |M| product table, represents each left ideal
    M a as a bitmask, and reads off:

        a L b  iff  M a = M b        a R b  iff  a M = b M
        a H b  iff  both             a J b  iff  M a M = M b M

    with M a M accumulated as the union of M c over c in a M.  "D" gives
    the join of L and R, which for these finite monoids must equal J.
    """
    if relation not in ("L", "R", "H", "J", "D"):
        raise ValueError(f"relation must be one of L R H J D, got {relation!r}")
    size = len(m)
    if size > size_bound:
        raise ValueError(f"|M| = {size} above oracle size bound {size_bound}")
    rows = m.element_rows()
    index = {row: i for i, row in enumerate(rows)}
    prod = []
    for a in rows:
        line = []
        for b in rows:
            line.append(index[tuple(b[y - 1] if y else 0 for y in a)])
        prod.append(line)

    right_mask = [0] * size  # bits of a M, the row through a
    left_mask = [0] * size  # bits of M a, the column through a
    for i in range(size):
        line = prod[i]
        rm = 0
        for j in range(size):
            bit = 1 << line[j]
            rm |= bit
            left_mask[j] |= bit  # prod[i][j] lands in the left ideal M·j
        right_mask[i] = rm

    if relation == "L":
        keyed = [(left_mask[i], i) for i in range(size)]
    elif relation == "R":
        keyed = [(right_mask[i], i) for i in range(size)]
    elif relation == "H":
        keyed = [((left_mask[i], right_mask[i]), i) for i in range(size)]
    elif relation == "J":
        keyed = []
        for i in range(size):
            two_sided = 0
            seen = set()
            for c in prod[i]:
                if c not in seen:
                    seen.add(c)
                    two_sided |= left_mask[c]
            keyed.append((two_sided, i))
    else:  # D: join of L and R as partitions
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union_all(keyfn):
            buckets = {}
            for i in range(size):
                buckets.setdefault(keyfn(i), []).append(i)
            for members in buckets.values():
                r = find(members[0])
                for x in members[1:]:
                    parent[find(x)] = r

        union_all(lambda i: left_mask[i])
        union_all(lambda i: right_mask[i])
        keyed = [(find(i), i) for i in range(size)]

    return GreenClasses(relation, _group_by(keyed))
