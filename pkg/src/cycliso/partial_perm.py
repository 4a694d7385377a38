"""Partial permutations (injective partial maps) of {1, ..., n}.

Conventions used throughout this package:

- Points are written 1..n and act on the RIGHT: the image of x under a
  is ``a[x]``, and a product ``a * b`` means "apply a first, then b",
  so ``(a * b)[x] == b[a[x]]`` wherever that chain is defined.
- A map is stored densely as an n-slot row; slot i (0-based) holds the
  image of point i + 1, with 0 marking "undefined".

>>> a = PartialPerm.from_pairs(4, {1: 2})
>>> b = PartialPerm.from_pairs(4, {2: 3})
>>> (a * b).to_json()
{'n': 4, 'dom': [1], 'img': [3]}
"""

__all__ = [
    "PartialPerm",
    "compose",
    "inverse",
    "restrict",
    "idempotent",
]


class PartialPerm:
    """An injective partial self-map of {1, ..., n}, immutable once built.

    ``row`` is the dense form: a tuple of n values in {0, 1, ..., n}
    where row[i] == 0 means point i + 1 is outside the domain.
    """

    __slots__ = ("n", "row", "_hash")

    def __init__(self, n, row):
        row = tuple(row)
        if n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        if len(row) != n:
            raise ValueError(f"row has {len(row)} slots, expected {n}")
        seen = 0
        for y in row:
            if y == 0:
                continue
            if not 1 <= y <= n:
                raise ValueError(f"image {y!r} outside 1..{n}")
            bit = 1 << y
            if seen & bit:
                raise ValueError(f"not injective: image {y} repeated")
            seen |= bit
        self.n = n
        self.row = row
        self._hash = hash((n, row))

    # -- constructors ------------------------------------------------

    @classmethod
    def from_pairs(cls, n, pairs):
        """Build from a dict {x: y} or an iterable of (x, y) pairs."""
        mapping = dict(pairs) if not isinstance(pairs, dict) else pairs
        row = [0] * n
        for x, y in mapping.items():
            if not 1 <= x <= n:
                raise ValueError(f"domain point {x!r} outside 1..{n}")
            row[x - 1] = y
        return cls(n, row)

    @classmethod
    def identity(cls, n):
        return cls(n, range(1, n + 1))

    @classmethod
    def identity_on(cls, n, points):
        """The identity restricted to the given set of points."""
        keep = set(points)
        return cls(n, tuple(i if i in keep else 0 for i in range(1, n + 1)))

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * n)

    @classmethod
    def from_json(cls, obj):
        n, dom, img = obj["n"], obj["dom"], obj["img"]
        if len(dom) != len(img):
            raise ValueError("dom and img lengths differ")
        if list(dom) != sorted(set(dom)):
            raise ValueError("dom must be strictly ascending")
        return cls.from_pairs(n, zip(dom, img))

    # -- queries -----------------------------------------------------

    def __getitem__(self, x):
        y = self.row[x - 1]
        if y == 0:
            raise KeyError(f"{x} not in domain")
        return y

    def get(self, x):
        """Image of x, or None if x is outside the domain."""
        y = self.row[x - 1]
        return y if y else None

    def domain(self):
        return tuple(i for i in range(1, self.n + 1) if self.row[i - 1])

    def image(self):
        return tuple(sorted(y for y in self.row if y))

    @property
    def rank(self):
        return sum(1 for y in self.row if y)

    @property
    def is_total(self):
        return all(self.row)

    def __iter__(self):
        """Yield (x, x·self) pairs in ascending domain order."""
        for i, y in enumerate(self.row):
            if y:
                yield i + 1, y

    # -- algebra -----------------------------------------------------

    def compose(self, other):
        """Left-to-right product: apply self first, then other.

        >>> g = PartialPerm.from_pairs(3, {1: 2, 2: 3, 3: 1})
        >>> g.compose(g).to_json()
        {'n': 3, 'dom': [1, 2, 3], 'img': [3, 1, 2]}
        """
        if not isinstance(other, PartialPerm):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mismatched sizes {self.n} and {other.n}")
        orow = other.row
        return PartialPerm(
            self.n, tuple(orow[y - 1] if y else 0 for y in self.row)
        )

    __mul__ = compose

    def inverse(self):
        """The inverse partial map (domain and image swap roles)."""
        row = [0] * self.n
        for x, y in self:
            row[y - 1] = x
        return PartialPerm(self.n, row)

    def restrict(self, points):
        """Restriction to the given points; points outside Dom are dropped."""
        keep = set(points)
        return PartialPerm(
            self.n,
            tuple(y if (i + 1) in keep else 0 for i, y in enumerate(self.row)),
        )

    # -- plumbing ----------------------------------------------------

    def sort_key(self):
        """Canonical order: by rank, then domain, then images along it."""
        dom = self.domain()
        return (len(dom), dom, tuple(self.row[x - 1] for x in dom))

    def to_json(self):
        dom = self.domain()
        return {"n": self.n, "dom": list(dom), "img": [self.row[x - 1] for x in dom]}

    def __eq__(self, other):
        return (
            isinstance(other, PartialPerm)
            and self.n == other.n
            and self.row == other.row
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{x}:{y}" for x, y in self)
        return f"PartialPerm({self.n}, {{{body}}})"


def compose(a, b):
    """Left-to-right product of two partial permutations."""
    return a.compose(b)


def inverse(a):
    return a.inverse()


def restrict(a, points):
    return a.restrict(points)


def idempotent(n, i):
    """The identity of {1..n} with the single point i removed.

    These n maps, together with the identity, generate all the partial
    identities: the product of the maps for a set X is the identity off X.
    """
    if not 1 <= i <= n:
        raise ValueError(f"point {i!r} outside 1..{n}")
    return PartialPerm(n, tuple(0 if j == i else j for j in range(1, n + 1)))
