"""The 2n symmetries of the n-cycle, in rotation/reflection normal form.

Every symmetry is written uniquely as h^r g^k with r in {0, 1} and
0 <= k < n, where g is the unit rotation and h the reflection fixing
the "axis" through vertex positions that sends i to n - i + 1.  Acting
on the right (h first, then the rotation):

    i . g^k     = ((i - 1 + k) mod n) + 1
    i . h g^k   = ((k - i) mod n) + 1

The multiplication rule follows from h g = g^(n-1) h.
"""

from dataclasses import dataclass

from .partial_perm import PartialPerm

__all__ = ["DihedralElement", "group_elements", "extensions_of"]


@dataclass(frozen=True)
class DihedralElement:
    """h^ref g^rot acting on the n-cycle; ref in {0,1}, 0 <= rot < n."""

    n: int
    ref: int
    rot: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"dihedral symmetries need n >= 3, got {self.n}")
        if self.ref not in (0, 1):
            raise ValueError(f"ref must be 0 or 1, got {self.ref!r}")
        if not 0 <= self.rot < self.n:
            raise ValueError(f"rot {self.rot!r} outside 0..{self.n - 1}")

    @classmethod
    def identity(cls, n):
        return cls(n, 0, 0)

    @classmethod
    def rotation(cls, n, k=1):
        return cls(n, 0, k % n)

    @classmethod
    def reflection(cls, n, k=0):
        return cls(n, 1, k % n)

    def act(self, i):
        """Image of vertex i under this symmetry (right action)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex {i!r} outside 1..{self.n}")
        if self.ref:
            return (self.rot - i) % self.n + 1
        return (i - 1 + self.rot) % self.n + 1

    def multiply(self, other):
        """Product in acting order: self first, then other."""
        if not isinstance(other, DihedralElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mismatched sizes {self.n} and {other.n}")
        # x.(h^r1 g^k1)(h^r2 g^k2): the second reflection conjugates the
        # first rotation, giving h^(r1 xor r2) g^(k2 +- k1).
        if other.ref:
            k = (other.rot - self.rot) % self.n
        else:
            k = (self.rot + other.rot) % self.n
        return DihedralElement(self.n, self.ref ^ other.ref, k)

    __mul__ = multiply

    def inverse(self):
        if self.ref:
            return self
        return DihedralElement(self.n, 0, (-self.rot) % self.n)

    def to_partial_perm(self):
        """The symmetry as a total map in the partial-permutation algebra."""
        return PartialPerm(self.n, tuple(self.act(i) for i in range(1, self.n + 1)))

    def __str__(self):
        if self.rot == 0:
            return "h" if self.ref else "1"
        power = "g" if self.rot == 1 else f"g^{self.rot}"
        return f"h{power}" if self.ref else power


def group_elements(n):
    """All 2n symmetries: rotations g^0..g^(n-1), then reflections hg^0..hg^(n-1)."""
    return tuple(
        DihedralElement(n, r, k) for r in (0, 1) for k in range(n)
    )


def extensions_of(metric, a):
    """All symmetries of the cycle restricting to the partial isometry a.

    Empty iff a fails to be a partial isometry; the whole group for the
    empty map.  Otherwise at most one rotation and one reflection qualify,
    pinned down by where the least domain point goes: with i = min Dom
    and j = i.a, the only candidates are g^((j-i) mod n) and
    h g^((i+j-1) mod n).  Rotation candidate first in the result.
    """
    n = metric.n
    if a.n != n:
        raise ValueError(f"map on {a.n} points, metric on {n}")
    dom = a.domain()
    if not dom:
        return list(group_elements(n))
    i = dom[0]
    j = a[i]
    out = []
    for cand in (
        DihedralElement(n, 0, (j - i) % n),
        DihedralElement(n, 1, (i + j - 1) % n),
    ):
        if all(cand.act(x) == a[x] for x in dom):
            out.append(cand)
    return out
