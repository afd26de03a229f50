"""Graded characters: q-Whittaker functions, Pieri rules, closed-form tensor
and truncation identities, and decomposition into the Weyl-character basis.

A GradedCharacter is a Z[q]-linear combination of monomials in n+1 variables
x_1, ..., x_{n+1}, keyed by exponent tuples (gl-style). The sl-character is
read off by ignoring overall determinant factors; sl_normalize() re-keys
every monomial so its exponent minimum is zero, which is lossless within a
character whose monomials share a total degree.
"""

from __future__ import annotations

import functools
import itertools

from .gtpop import cell_bounds, cells, enumerate_gt, enumerate_pops, pattern_weight, pop_grade
from .qalg import QFactorRatio, QPoly, q_binomial, q_pochhammer
from .weights import (
    Partition,
    RankMismatchError,
    Weight,
    partition_to_weight,
    weight_to_bounding_partition,
)


class DecompositionError(RuntimeError):
    """Raised when a function is not a Z[q]-combination of Weyl characters."""


class GradedCharacter:
    """Z[q]-combination of monomials x^e, e an (n+1)-tuple of exponents."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("rank must be a positive integer")
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, poly in items:
                key = tuple(int(e) for e in key)
                if len(key) != n + 1:
                    raise RankMismatchError(
                        "rank %d character needs %d exponents per term" % (n, n + 1)
                    )
                if any(e < 0 for e in key):
                    raise ValueError("exponents must be nonnegative")
                if isinstance(poly, int):
                    poly = QPoly.const(poly)
                acc = data.get(key)
                poly = poly if acc is None else acc + poly
                if poly.is_zero():
                    data.pop(key, None)
                else:
                    data[key] = poly
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("GradedCharacter is immutable")

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * (n + 1): QPoly.one()})

    def coefficient(self, key):
        return self.terms.get(tuple(key), QPoly.zero())

    def is_zero(self):
        return not self.terms

    def _check_rank(self, other):
        if self.n != other.n:
            raise RankMismatchError("cannot combine characters of different ranks")

    def __add__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        self._check_rank(other)
        return GradedCharacter(
            self.n, itertools.chain(self.terms.items(), other.terms.items())
        )

    def __sub__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        self._check_rank(other)
        return GradedCharacter(
            self.n,
            itertools.chain(
                self.terms.items(), ((k, -p) for k, p in other.terms.items())
            ),
        )

    def __neg__(self):
        return GradedCharacter(self.n, {k: -p for k, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            if isinstance(other, int):
                other = QPoly.const(other)
            return GradedCharacter(
                self.n, {k: p * other for k, p in self.terms.items()}
            )
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        self._check_rank(other)
        data = {}
        for k1, p1 in self.terms.items():
            for k2, p2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                acc = data.get(key)
                prod = p1 * p2
                data[key] = prod if acc is None else acc + prod
        return GradedCharacter(self.n, data)

    __rmul__ = __mul__

    def det_twist(self, c):
        """Multiply by (x_1 ... x_{n+1})^c, c >= 0: add c to every exponent."""
        if c < 0:
            raise ValueError("determinant twist must be nonnegative")
        if c == 0:
            return self
        return GradedCharacter(
            self.n, {tuple(e + c for e in k): p for k, p in self.terms.items()}
        )

    def q1_dimension(self):
        """Total dimension: sum of all coefficients at q = 1."""
        return sum(p.at_one() for p in self.terms.values())

    def specialize_q0(self):
        """Set q = 0, keeping only constant terms."""
        return GradedCharacter(
            self.n, {k: p.constant_term() for k, p in self.terms.items()}
        )

    def sl_normalize(self):
        """Divide each monomial by det^{min exponent}; canonical sl form."""
        return GradedCharacter(
            self.n,
            ((tuple(e - min(k) for e in k), p) for k, p in self.terms.items()),
        )

    def total_degree(self):
        """Common exponent-sum of all monomials, or None if mixed/empty."""
        degrees = {sum(k) for k in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_symmetric(self):
        """True when invariant under all permutations of the variables."""
        orbits = {}
        for key, poly in self.terms.items():
            canon = tuple(sorted(key, reverse=True))
            orbits.setdefault(canon, []).append((key, poly))
        for canon, members in orbits.items():
            size = len(set(itertools.permutations(canon)))
            if len(members) != size:
                return False
            first = members[0][1]
            if any(poly != first for _, poly in members[1:]):
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, GradedCharacter)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        return "GradedCharacter(%d, %d terms)" % (self.n, len(self.terms))

    def to_json(self):
        return {
            "rank": self.n,
            "terms": [
                {"exponents": list(k), "coefficient": self.terms[k].coefficient_list()}
                for k in sorted(self.terms)
            ],
        }


def char_multiply(a, b):
    """Product of graded characters (monomial convolution)."""
    if not isinstance(a, GradedCharacter) or not isinstance(b, GradedCharacter):
        raise TypeError("char_multiply expects two GradedCharacter operands")
    return a * b


def qwhittaker_partition_char(p, n):
    """Graded character attached to a bottom row with at most n+1 parts.

    Each pattern contributes its gl-weight monomial with coefficient
    prod over cells (j, i) of the Gaussian binomial [a+b choose a]_q, where
    (a, b) are the overlay part-count and part-size bounds of the cell.
    Adding a full column to the bottom row twists by the determinant and
    leaves every (a, b) unchanged.
    """
    if not isinstance(p, Partition):
        p = Partition(p)
    return _partition_char_cached(p.parts, n)


@functools.lru_cache(maxsize=None)
def _partition_char_cached(parts, n):
    data = {}
    for pattern in enumerate_gt(Partition(parts), n):
        coeff = QPoly.one()
        for j, i in cells(n):
            a, b = cell_bounds(pattern, j, i)
            coeff = coeff * q_binomial(a + b, a)
        key = pattern_weight(pattern)
        acc = data.get(key)
        data[key] = coeff if acc is None else acc + coeff
    return GradedCharacter(n, data)


def qwhittaker_char(lam):
    """Graded character of the local Weyl module with highest weight lam.

    Equals the Macdonald polynomial P_{bounding(lam)}(x; q, t) at t = 0.
    """
    if not lam.is_dominant():
        raise ValueError("graded Weyl characters require a dominant weight")
    return qwhittaker_partition_char(weight_to_bounding_partition(lam), lam.n)


def pop_char(lam):
    """Character read off the POP basis: sum of q^{grade} x^{weight}.

    Independent route from qwhittaker_char: the q-statistics come from
    explicit overlay enumeration rather than per-cell binomial weights.
    """
    if not lam.is_dominant():
        raise ValueError("POP characters require a dominant weight")
    data = {}
    for pop in enumerate_pops(lam, lam.n):
        key = pattern_weight(pop.pattern)
        g = pop_grade(pop)
        acc = data.get(key)
        unit = QPoly({g: 1})
        data[key] = unit if acc is None else acc + unit
    return GradedCharacter(lam.n, data)


def irreducible_char(lam):
    """Character of the irreducible module: the q-free pattern sum."""
    if not lam.is_dominant():
        raise ValueError("irreducible characters require a dominant weight")
    data = {}
    for pattern in enumerate_gt(lam, lam.n):
        key = pattern_weight(pattern)
        data[key] = data.get(key, 0) + 1
    return GradedCharacter(lam.n, data)


def arm_leg(p, cell):
    """(arm, leg) of a cell (row, column), 1-based, inside the diagram."""
    i, j = cell
    if not p.contains_cell(i, j):
        raise ValueError("cell (%d, %d) lies outside the diagram" % (i, j))
    arm = p.part(i) - j
    leg = sum(1 for row in p.parts if row >= j) - i
    return arm, leg


def b_factor_t0(p, cell):
    """Normalization factor of a cell at t = 0, as a symbolic ratio.

    Inside the diagram the factor is 1/(1 - q^{arm+1}) when the leg is zero
    and 1 otherwise; outside the diagram it is 1.
    """
    i, j = cell
    if not p.contains_cell(i, j):
        return QFactorRatio.identity()
    arm, leg = arm_leg(p, cell)
    if leg == 0:
        return QFactorRatio(den=(arm + 1,))
    return QFactorRatio.identity()


def _horizontal_strips(mu_padded, m):
    """Rows lam >= mu with lam/mu a horizontal strip of m boxes.

    lam_i ranges over [mu_i, mu_{i-1}] for i >= 2 and [mu_1, mu_1 + m] for
    i = 1; yielded in descending lexicographic order.
    """

    def rec(i, remaining):
        if i == len(mu_padded):
            if remaining == 0:
                yield ()
            return
        low = mu_padded[i]
        high = min(
            low + remaining, mu_padded[i - 1] if i else mu_padded[0] + remaining
        )
        for v in range(high, low - 1, -1):
            for rest in rec(i + 1, remaining - (v - low)):
                yield (v,) + rest

    yield from rec(0, m)


def pieri_gm(mu, m, rank):
    """Pieri expansion data for multiplying by the m-th generator g_m.

    Returns [(lam, ratio)] over all lam in n+1 rows with lam/mu a horizontal
    m-strip, in descending lexicographic order of lam. The ratio is
    prod_{s in C} b_lam(s)/b_mu(s) over the cells C of lam lying in columns
    that meet the strip (factors outside a diagram are 1), reduced.
    """
    if not isinstance(mu, Partition):
        mu = Partition(mu)
    if m < 0:
        raise ValueError("strip size must be nonnegative")
    rows = rank + 1
    if mu.length() > rows:
        raise RankMismatchError(
            "partition with %d rows does not fit in %d variables" % (mu.length(), rows)
        )
    mu_p = mu.padded(rows)
    out = []
    for lam in _horizontal_strips(mu_p, m):
        strip_cols = {
            j for i in range(rows) for j in range(mu_p[i] + 1, lam[i] + 1)
        }
        ratio = QFactorRatio.identity()
        lam_part = Partition(lam)
        for j in sorted(strip_cols):
            for i in range(1, rows + 1):
                if lam_part.contains_cell(i, j):
                    ratio = ratio * b_factor_t0(lam_part, (i, j))
                    ratio = ratio / b_factor_t0(mu, (i, j))
        out.append((lam_part, ratio.reduce()))
    return out


def product_onerow(m, mu, rank):
    """Coefficients of P_mu * P_{(m)} in the P basis, as exact polynomials.

    P_{(m)} = (q; q)_m g_m, so each Pieri ratio is multiplied by (q; q)_m;
    the spectral normalization guarantees the quotients are polynomials.
    """
    poch = QFactorRatio(num=range(1, m + 1))
    out = []
    for lam, ratio in pieri_gm(mu, m, rank):
        out.append((lam, (poch * ratio).reduce().to_qpoly()))
    return out


_TENSOR_VARIANTS = ("omega1_omegan", "omega1_omega1", "omegan_omegan")


def _tensor_term_weight(variant, n, m, k, i):
    c = [0] * n
    if variant == "omega1_omegan":
        c[0] += m - i
        c[n - 1] += k - i
    elif variant == "omega1_omega1":
        c[0] += m + k - 2 * i
        if i and n >= 2:
            c[1] += i
    else:
        c[n - 1] += m + k - 2 * i
        if i and n >= 2:
            c[n - 2] += i
    return Weight(n, c)


def tensor_char_fundamental(variant, m, k, rank):
    """Closed form for a tensor product of two one-parameter Weyl modules.

    variant selects the pair of highest weights:
      omega1_omegan: m*omega_1 with k*omega_n,
      omega1_omega1: m*omega_1 with k*omega_1,
      omegan_omegan: m*omega_n with k*omega_n.
    The result is sum over i = 0..min(m, k) of
    [m i]_q [k i]_q (q; q)_i times the graded Weyl character at the contracted
    weight, each term det-twisted so all monomials share the total degree of
    the product. At rank 1 the omega_2-direction of a contracted weight
    degenerates to determinant columns and drops out of the weight.
    """
    if variant not in _TENSOR_VARIANTS:
        raise ValueError("unknown variant %r" % (variant,))
    if m < 0 or k < 0:
        raise ValueError("module parameters must be nonnegative")
    n = rank
    base = _tensor_term_weight(variant, n, m, k, 0).size()
    total = GradedCharacter.zero(n)
    for i in range(min(m, k) + 1):
        w = _tensor_term_weight(variant, n, m, k, i)
        deficit = base - w.size()
        shift, rem = divmod(deficit, n + 1)
        assert rem == 0
        coeff = q_binomial(m, i) * q_binomial(k, i) * q_pochhammer(i)
        total = total + (qwhittaker_char(w) * coeff).det_twist(shift)
    return total


def truncated_char(lam, j):
    """Graded character of the truncated module W_{|lam|-j}(lam), rank 2.

    lam = m_1 omega_1 + m_2 omega_2 with |lam| = m_1 + m_2 and
    0 <= j <= min(m_1, m_2). Alternating sum over i = 0..j of
    [j i]_q q^{i(|lam|-j) - i(i-1)/2} times the graded Weyl character at
    lam - i*theta, det-twisted by i to keep a single total degree.
    """
    if lam.n != 2:
        raise RankMismatchError("truncated characters are implemented for rank 2")
    m1, m2 = lam.coeffs
    if m1 < 0 or m2 < 0:
        raise ValueError("the highest weight must be dominant")
    size = m1 + m2
    if not 0 <= j <= min(m1, m2):
        raise ValueError("truncation parameter j must lie in [0, min(m_1, m_2)]")
    total = GradedCharacter.zero(2)
    for i in range(j + 1):
        w = Weight(2, (m1 - i, m2 - i))
        exp = i * (size - j) - i * (i - 1) // 2
        coeff = q_binomial(j, i) * QPoly({exp: 1 if i % 2 == 0 else -1})
        total = total + (qwhittaker_char(w) * coeff).det_twist(i)
    return total


_M_MODULE_VARIANTS = ("first", "last")


def m_module_char(nu, lam_scale, variant):
    """Graded character of M(nu, lam) for a doubled fundamental lam.

    variant "first": nu = nu_1 omega_1 + nu_2 omega_2 and
    lam = 2*lam_scale*omega_1; alternating sum over i = 0..lam_scale of
    [lam_scale i]_q q^{i(lam_scale+nu_1) - i(i-1)/2} times the graded Weyl
    character at (2*lam_scale + nu_1 - 2i) omega_1 + (nu_2 + i) omega_2.
    variant "last" is the mirror image: nu supported on omega_{n-1}, omega_n
    and lam = 2*lam_scale*omega_n, with terms det-twisted by i to keep a
    single total degree.
    """
    if variant not in _M_MODULE_VARIANTS:
        raise ValueError("unknown variant %r" % (variant,))
    n = nu.n
    if n < 2:
        raise RankMismatchError("M(nu, lam) characters require rank >= 2")
    if lam_scale < 0:
        raise ValueError("lam_scale must be nonnegative")
    if not nu.is_dominant():
        raise ValueError("nu must be dominant")
    if variant == "first":
        support = {1, 2}
        nu_edge = nu.coeffs[0]
    else:
        support = {n - 1, n}
        nu_edge = nu.coeffs[n - 1]
    if any(c and (idx not in support) for idx, c in enumerate(nu.coeffs, start=1)):
        raise ValueError("nu must be supported on the %s two fundamentals"
                         % ("first" if variant == "first" else "last"))
    total = GradedCharacter.zero(n)
    for i in range(lam_scale + 1):
        c = [0] * n
        if variant == "first":
            c[0] = 2 * lam_scale + nu.coeffs[0] - 2 * i
            c[1] = nu.coeffs[1] + i
            shift = 0
        else:
            c[n - 2] = nu.coeffs[n - 2] + i
            c[n - 1] = 2 * lam_scale + nu.coeffs[n - 1] - 2 * i
            shift = i
        exp = i * (lam_scale + nu_edge) - i * (i - 1) // 2
        coeff = q_binomial(lam_scale, i) * QPoly({exp: 1 if i % 2 == 0 else -1})
        total = total + (qwhittaker_char(Weight(n, c)) * coeff).det_twist(shift)
    return total


def decompose_weyl_basis(f):
    """Expand a symmetric graded character in the graded Weyl basis.

    Greedy peel: repeatedly take the lexicographically greatest exponent key
    with weakly decreasing entries (the dominant leader), emit its sl-weight
    and coefficient, and subtract that multiple of the corresponding
    character. Leaders strictly decrease, so the peel terminates; a
    nonsymmetric input is rejected up front.
    """
    if not isinstance(f, GradedCharacter):
        raise TypeError("decompose_weyl_basis expects a GradedCharacter")
    if not f.is_symmetric():
        raise DecompositionError("input is not a symmetric function")
    n = f.n
    remainder = f
    out = []
    seen = set()
    while remainder.terms:
        dominant = [
            k
            for k in remainder.terms
            if all(k[a] >= k[a + 1] for a in range(n))
        ]
        if not dominant:
            raise DecompositionError("no dominant leading term remains")
        key = max(dominant)
        if key in seen:
            raise DecompositionError("peel revisited a leading term")
        seen.add(key)
        coeff = remainder.terms[key]
        out.append((partition_to_weight(Partition(key), n), coeff))
        remainder = remainder - qwhittaker_partition_char(Partition(key), n) * coeff
    return out
