"""Weight and root bookkeeping for sl(n+1).

Weights live in the fundamental-weight basis omega_1, ..., omega_n of a
fixed rank n. Positive roots are the intervals alpha_{ij} = alpha_i + ... +
alpha_j for 1 <= i <= j <= n, with highest root theta = alpha_{1n}.
"""

from __future__ import annotations

import itertools


class RankMismatchError(ValueError):
    """Raised when objects of incompatible ranks are combined."""


class Weight:
    """Integral sl(n+1) weight sum(coeffs[i-1] * omega_i)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        if n < 1:
            raise ValueError("rank must be a positive integer")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != n:
            raise RankMismatchError(
                "rank %d weight needs %d coefficients, got %d" % (n, n, len(coeffs))
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * n)

    @classmethod
    def fundamental(cls, n, i):
        """omega_i in rank n."""
        if not 1 <= i <= n:
            raise ValueError("fundamental weight index out of range")
        return cls(n, tuple(1 if k == i else 0 for k in range(1, n + 1)))

    def is_dominant(self):
        return all(c >= 0 for c in self.coeffs)

    def size(self):
        """Total number of boxes of the bounding partition: sum(i * m_i)."""
        return sum(i * c for i, c in enumerate(self.coeffs, start=1))

    def __add__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if self.n != other.n:
            raise RankMismatchError("cannot add weights of different ranks")
        return Weight(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if self.n != other.n:
            raise RankMismatchError("cannot subtract weights of different ranks")
        return Weight(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return Weight(self.n, tuple(scalar * c for c in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, Weight)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return "Weight(%d, %r)" % (self.n, self.coeffs)


class Root:
    """Positive root alpha_{ij} = alpha_i + ... + alpha_j, 1 <= i <= j."""

    __slots__ = ("i", "j")

    def __init__(self, i, j):
        if not 1 <= i <= j:
            raise ValueError("need 1 <= i <= j for a positive root")
        object.__setattr__(self, "i", int(i))
        object.__setattr__(self, "j", int(j))

    def __setattr__(self, name, value):
        raise AttributeError("Root is immutable")

    @classmethod
    def simple(cls, i):
        return cls(i, i)

    @classmethod
    def highest(cls, n):
        """theta = alpha_1 + ... + alpha_n."""
        return cls(1, n)

    def __eq__(self, other):
        return isinstance(other, Root) and (self.i, self.j) == (other.i, other.j)

    def __hash__(self):
        return hash((self.i, self.j))

    def __repr__(self):
        return "Root(%d, %d)" % (self.i, self.j)


def positive_roots(n):
    """All alpha_{ij} for 1 <= i <= j <= n, lexicographic in (i, j)."""
    return [Root(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def pairing(lam, alpha):
    """lam(h_alpha) = m_i + m_{i+1} + ... + m_j for alpha = alpha_{ij}."""
    if alpha.j > lam.n:
        raise RankMismatchError("root alpha_{%d,%d} does not exist in rank %d"
                                % (alpha.i, alpha.j, lam.n))
    return sum(lam.coeffs[alpha.i - 1 : alpha.j])


def theta_coeffs(n):
    """theta as a Weight: omega_1 + omega_n (2*omega_1 when n = 1)."""
    coeffs = [0] * n
    coeffs[0] += 1
    coeffs[n - 1] += 1
    return Weight(n, tuple(coeffs))


class Partition:
    """Weakly decreasing tuple of nonnegative integers; trailing zeros ignored."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def part(self, i):
        """i-th part, 1-based; zero beyond the length."""
        if i < 1:
            raise ValueError("part index is 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, length):
        if length < len(self.parts):
            raise ValueError("cannot pad below the partition length")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self):
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(
                sum(1 for p in self.parts if p >= j)
                for j in range(1, self.parts[0] + 1)
            )
        )

    def contains_cell(self, i, j):
        """True when (row i, column j), 1-based, lies in the diagram."""
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)


def weight_to_bounding_partition(lam):
    """Bounding partition (sum_{i>=1} m_i, sum_{i>=2} m_i, ..., m_n, 0).

    Only defined for dominant lam; the result has n+1 parts counting the
    final zero, i.e. length <= n as a partition.
    """
    if not lam.is_dominant():
        raise ValueError("bounding partition requires a dominant weight")
    tails = []
    total = 0
    for c in reversed(lam.coeffs):
        total += c
        tails.append(total)
    tails.reverse()
    return Partition(tuple(tails) + (0,))


def partition_to_weight(p, n):
    """Inverse of the bounding map: m_i = p_i - p_{i+1}, dropping p_{n+1}.

    Any partition with at most n+1 rows is accepted; a nonzero (n+1)-st part
    corresponds to determinant columns, which do not change the sl-weight.
    """
    if isinstance(p, Partition):
        parts = p.parts
    else:
        parts = Partition(p).parts
    if len(parts) > n + 1:
        raise RankMismatchError(
            "partition with %d rows does not fit in rank %d" % (len(parts), n)
        )
    padded = parts + (0,) * (n + 1 - len(parts))
    return Weight(n, tuple(padded[i] - padded[i + 1] for i in range(n)))


def w0_dual(lam):
    """-w_0(lam): reverses the fundamental-weight coefficients."""
    return Weight(lam.n, tuple(reversed(lam.coeffs)))


def dominance_leq(p, r):
    """Dominance order on partitions of equal size: all partial sums compare."""
    if isinstance(p, (tuple, list)):
        p = Partition(p)
    if isinstance(r, (tuple, list)):
        r = Partition(r)
    if p.size() != r.size():
        raise ValueError("dominance order compares partitions of equal size")
    length = max(p.length(), r.length())
    pp, rr = p.padded(length), r.padded(length)
    sp = sr = 0
    for a, b in zip(pp, rr):
        sp += a
        sr += b
        if sp > sr:
            return False
    return True


def dominant_weights_up_to(n, max_size):
    """All dominant weights with size() <= max_size, lexicographic by coeffs."""
    out = []
    for coeffs in itertools.product(*(range(max_size + 1) for _ in range(n))):
        w = Weight(n, coeffs)
        if w.size() <= max_size:
            out.append(w)
    return out
