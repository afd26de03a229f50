"""Identity verification and filtration bookkeeping.

Every verify_* helper recomputes both sides of an identity from scratch
(closed form vs brute-force product) and returns a VerificationReport. The
extract_filtration helpers spell out the layer data of the graded
filtrations of two-factor tensor products, and the fusion-side functions
check the rank-2 dimension recurrences of the fusion modules M_j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .charformulas import (
    GradedCharacter,
    char_multiply,
    m_module_char,
    qwhittaker_char,
    truncated_char,
    tensor_char_fundamental,
)
from .qalg import QPoly, q_binomial
from .weights import Partition, Root, Weight, pairing


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check: status is 'pass', 'fail' or 'skip'."""

    name: str
    params: dict
    status: str
    detail: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self):
        return {
            "identity": self.name,
            "params": self.params,
            "status": self.status,
            "detail": self.detail,
        }


def _report(name, params, ok, detail=None):
    return VerificationReport(name, params, "pass" if ok else "fail", detail or {})


def _skip(name, params, reason):
    return VerificationReport(name, params, "skip", {"reason": reason})


def _sl_equal(a, b):
    return a.sl_normalize() == b.sl_normalize()


def _pair_weights(variant, m, k, rank):
    if variant == "omega1_omegan":
        return m * Weight.fundamental(rank, 1), k * Weight.fundamental(rank, rank)
    if variant == "omega1_omega1":
        return m * Weight.fundamental(rank, 1), k * Weight.fundamental(rank, 1)
    if variant == "omegan_omegan":
        return m * Weight.fundamental(rank, rank), k * Weight.fundamental(rank, rank)
    raise ValueError("unknown variant %r" % (variant,))


def verify_tensor_fundamental(variant, m, k, rank):
    """Closed tensor formula vs the brute product of graded Weyl characters."""
    a, b = _pair_weights(variant, m, k, rank)
    product = char_multiply(qwhittaker_char(a), qwhittaker_char(b))
    closed = tensor_char_fundamental(variant, m, k, rank)
    ok = _sl_equal(product, closed)
    return _report(
        "tensor-fundamental",
        {"variant": variant, "m": m, "k": k, "rank": rank},
        ok,
        {"terms": len(closed.terms)},
    )


def verify_truncated_product(m, k):
    """Rank-2 identity: W(m*omega_1) tensor W(k*omega_2) filters by truncations.

    ch of the product equals sum over i = 0..min(m,k) of [min(m,k) i]_q times
    the truncated character of (m-i, k-i) at truncation level max(m,k)-i.
    """
    a = m * Weight.fundamental(2, 1)
    b = k * Weight.fundamental(2, 2)
    product = char_multiply(qwhittaker_char(a), qwhittaker_char(b))
    big, small = max(m, k), min(m, k)
    total = GradedCharacter.zero(2)
    for i in range(small + 1):
        w = Weight(2, (m - i, k - i))
        level = big - i
        # truncation parameter of W_level(w) is |w| - level = small - i
        term = truncated_char(w, w.coeffs[0] + w.coeffs[1] - level)
        total = total + (term * q_binomial(small, i)).det_twist(i)
    ok = _sl_equal(product, total)
    return _report(
        "truncated-product", {"m": m, "k": k, "rank": 2}, ok, {"terms": len(total.terms)}
    )


def verify_m_module_product(variant, m, k, rank):
    """Tensor square of a fundamental-line Weyl module filters by M modules.

    variant "first": ch W(m*omega_1) ch W(k*omega_1) equals the sum over
    i = 0..min(m,k) of [min(m,k) i]_q ch M((M-L) omega_1 + i omega_2,
    2(L-i) omega_1); "last" is the omega_n mirror.
    """
    if variant not in ("first", "last"):
        raise ValueError("unknown variant %r" % (variant,))
    edge = 1 if variant == "first" else rank
    a = m * Weight.fundamental(rank, edge)
    b = k * Weight.fundamental(rank, edge)
    product = char_multiply(qwhittaker_char(a), qwhittaker_char(b))
    big, small = max(m, k), min(m, k)
    total = GradedCharacter.zero(rank)
    for i in range(small + 1):
        c = [0] * rank
        if variant == "first":
            c[0] = big - small
            c[1] = i
        else:
            c[rank - 1] = big - small
            c[rank - 2] = i
        term = m_module_char(Weight(rank, c), small - i, variant)
        shift = i if variant == "last" else 0
        total = total + (term * q_binomial(small, i)).det_twist(shift)
    ok = _sl_equal(product, total)
    return _report(
        "m-module-product",
        {"variant": variant, "m": m, "k": k, "rank": rank},
        ok,
        {"terms": len(total.terms)},
    )


def truncated_dim_check(lam, j):
    """Dimension of the rank-2 truncated module: 8^j * 3^{|lam| - 2j}."""
    dim = truncated_char(lam, j).q1_dimension()
    expected = 8**j * 3 ** (lam.coeffs[0] + lam.coeffs[1] - 2 * j)
    return _report(
        "truncated-dim",
        {"weight": list(lam.coeffs), "j": j},
        dim == expected,
        {"dimension": dim, "expected": expected},
    )


@dataclass(frozen=True)
class FiltrationLayer:
    """One graded layer family of a tensor-product filtration.

    multiplicity counts the layers of each grade shift: the number of layers
    shifted by q^l equals the coefficient of q^l, and shift_bound is the
    largest shift that occurs (the degree of the multiplicity polynomial).
    """

    family: str
    index: int
    params: dict
    multiplicity: QPoly
    shift_bound: int

    def to_json(self):
        return {
            "family": self.family,
            "index": self.index,
            "params": self.params,
            "multiplicity": self.multiplicity.coefficient_list(),
            "shift_bound": self.shift_bound,
        }


def layer_character(layer, rank):
    """Graded character of a single (unshifted) layer module."""
    if layer.family == "truncated":
        m1, m2 = layer.params["weight"]
        w = Weight(2, (m1, m2))
        return truncated_char(w, m1 + m2 - layer.params["truncation"])
    if layer.family in ("m_module_first", "m_module_last"):
        variant = "first" if layer.family == "m_module_first" else "last"
        return m_module_char(
            Weight(rank, tuple(layer.params["nu"])), layer.params["lam_scale"], variant
        )
    raise ValueError("unknown layer family %r" % (layer.family,))


def extract_filtration(m, k, family, rank=2):
    """Layer data of the filtration of a two-line tensor product.

    family "truncated": W(m*omega_1) tensor W(k*omega_2) at rank 2, layer r
    is the truncated module W_{max(m,k)-r} at (m-r, k-r);
    family "m_module_first"/"m_module_last": W(m*omega_e) tensor W(k*omega_e)
    for e = 1 resp. n, layer r the module M((M-L) omega_e + r omega_e',
    2(L-r) omega_e) with e' the adjacent fundamental. Each layer carries
    multiplicity polynomial [min(m,k) r]_q, and its grade shifts are bounded
    by (min(m,k)-r)*r, the degree of that polynomial.
    """
    big, small = max(m, k), min(m, k)
    layers = []
    for r in range(small + 1):
        mult = q_binomial(small, r)
        bound = (small - r) * r
        if family == "truncated":
            if rank != 2:
                raise ValueError("truncated filtrations are rank-2 only")
            params = {"weight": [m - r, k - r], "truncation": big - r}
        elif family == "m_module_first":
            params = {"nu": [big - small, r] + [0] * (rank - 2), "lam_scale": small - r}
        elif family == "m_module_last":
            params = {"nu": [0] * (rank - 2) + [r, big - small], "lam_scale": small - r}
        else:
            raise ValueError("unknown filtration family %r" % (family,))
        layers.append(FiltrationLayer(family, r, params, mult, bound))
    return layers


# ---------------------------------------------------------------------------
# rank-2 fusion modules M_j(lambda_1, lambda_2, lambda_3)


def fusion_dim(j, lam1, lam2, lam3):
    """Dimension 10^{lam3(h_theta)} 6^{lam2(h_theta)} 3^{lam1(h_theta)} 8^j.

    The three weights are rank-2 dominant weights; the atoms have dimensions
    3, 6, 10 (level-1, 2, 3 Demazure modules at a fundamental weight) and 8
    (the adjoint module).
    """
    if j < 0:
        raise ValueError("fusion index j must be nonnegative")
    for lam in (lam1, lam2, lam3):
        if lam.n != 2:
            raise ValueError("fusion modules are rank-2 objects")
        if not lam.is_dominant():
            raise ValueError("fusion weights must be dominant")
    theta = Root.highest(2)
    return (
        10 ** pairing(lam3, theta)
        * 6 ** pairing(lam2, theta)
        * 3 ** pairing(lam1, theta)
        * 8**j
    )


@dataclass(frozen=True)
class XiTuple:
    """Per-root partition data xi attached to a fusion module M_j.

    For each positive root alpha the tuple lists one entry per atom, largest
    first: 3 repeated lam3(h_alpha) times, then 2, then 1, with the adjoint
    factor folding into the 2s for theta and into the 1s for the simple
    roots. The sizes satisfy |xi^alpha| = (lam1 + 2 lam2 + 3 lam3 +
    j*theta)(h_alpha).
    """

    j: int
    lam1: Weight
    lam2: Weight
    lam3: Weight

    def xi(self, alpha):
        two_extra = self.j if (alpha.i, alpha.j) == (1, 2) else 0
        one_extra = self.j if alpha.i == alpha.j else 0
        parts = (
            (3,) * pairing(self.lam3, alpha)
            + (2,) * (pairing(self.lam2, alpha) + two_extra)
            + (1,) * (pairing(self.lam1, alpha) + one_extra)
        )
        return Partition(parts)

    def size_ok(self):
        target = (
            self.lam1
            + 2 * self.lam2
            + 3 * self.lam3
            + self.j * Weight(2, (1, 1))
        )
        return all(
            self.xi(alpha).size() == pairing(target, alpha)
            for alpha in (Root(1, 1), Root(2, 2), Root(1, 2))
        )


def _w(a, b):
    return Weight(2, (a, b))


def _h(lam, i):
    return lam.coeffs[i - 1]


def _fusion_recurrence_cases(lam2, lam3, max_j):
    """Yield (name, params, lhs_dim, rhs_dim) for every applicable recurrence.

    Each case states dim M_j(...) as a sum of layer dimensions of a short
    exact sequence or two-step filtration; hypotheses that fail yield skips
    at the call site.
    """
    om1, om2 = _w(1, 0), _w(0, 1)
    zero = _w(0, 0)
    theta = _w(1, 1)

    # j = 1, lam1 = 0, lam2(h_1) >= 1: two layers
    if _h(lam2, 1) >= 1:
        lhs = fusion_dim(1, zero, lam2, lam3)
        rhs = fusion_dim(0, om1, lam2 - om1 + om2, lam3) + fusion_dim(
            0, om2, lam2 - om1, lam3 + om1
        )
        yield "j1_lambda1_zero", {}, lhs, rhs
    # j = 1, lam1 = omega_1: two layers
    lhs = fusion_dim(1, om1, lam2, lam3)
    rhs = fusion_dim(0, zero, lam2 + om2, lam3) + fusion_dim(0, om2, lam2 + om1, lam3)
    yield "j1_lambda1_omega1", {}, lhs, rhs
    # mirrors of the two j = 1 cases (second fundamental direction)
    if _h(lam2, 2) >= 1:
        lhs = fusion_dim(1, zero, lam2, lam3)
        rhs = fusion_dim(0, om2, lam2 - om2 + om1, lam3) + fusion_dim(
            0, om1, lam2 - om2, lam3 + om2
        )
        yield "j1_lambda1_zero_mirror", {}, lhs, rhs
    lhs = fusion_dim(1, om2, lam2, lam3)
    rhs = fusion_dim(0, zero, lam2 + om1, lam3) + fusion_dim(0, om1, lam2 + om2, lam3)
    yield "j1_lambda1_omega2_mirror", {}, lhs, rhs

    for j in range(2, max_j + 1):
        # j >= 2, lam1 = 0: three layers
        lhs = fusion_dim(j, zero, lam2, lam3)
        rhs = (
            fusion_dim(j - 2, zero, lam2 + theta, lam3)
            + fusion_dim(j - 2, om2, lam2 + om2, lam3)
            + fusion_dim(j - 2, zero, lam2, lam3 + om1)
        )
        yield "jgeq2_lambda1_zero", {"j": j}, lhs, rhs
        # j >= 2, lam1 = omega_1: three layers
        lhs = fusion_dim(j, om1, lam2, lam3)
        rhs = (
            fusion_dim(j - 2, om1, lam2 + theta, lam3)
            + fusion_dim(j - 1, zero, lam2 + om2, lam3)
            + fusion_dim(j - 2, zero, lam2 + 2 * om1, lam3)
        )
        yield "jgeq2_lambda1_omega1", {"j": j}, lhs, rhs


def _fusion_lam3_zero_cases(lam1, lam2, max_j):
    """Recurrences for lam3 = 0 and lam1(h_1) >= 1 (arbitrary dominant lam1)."""
    om1, om2 = _w(1, 0), _w(0, 1)
    zero = _w(0, 0)
    theta = _w(1, 1)
    if _h(lam1, 1) < 1:
        return
    lhs = fusion_dim(1, lam1, lam2, zero)
    rhs = fusion_dim(0, lam1 - om1, lam2 + om2, zero) + fusion_dim(
        0, lam1 - om1 + om2, lam2 + om1, zero
    )
    yield "lambda3_zero_j1", {}, lhs, rhs
    for j in range(2, max_j + 1):
        lhs = fusion_dim(j, lam1, lam2, zero)
        rhs = (
            fusion_dim(j - 2, lam1, lam2 + theta, zero)
            + fusion_dim(j - 1, lam1 - om1, lam2 + om2, zero)
            + fusion_dim(j - 2, lam1 - om1, lam2 + 2 * om1, zero)
        )
        yield "lambda3_zero_jgeq2", {"j": j}, lhs, rhs


def verify_fusion_recurrences(max_pairing=3, max_j=4):
    """Check every fusion dimension recurrence over a grid of weights.

    Sweeps rank-2 dominant lam2, lam3 with lam2(h_theta), lam3(h_theta) <=
    max_pairing and j <= max_j; inapplicable hypotheses are reported as
    skips so the grid is visibly covered.
    """
    reports = []
    grid = [
        _w(a, b)
        for a in range(max_pairing + 1)
        for b in range(max_pairing + 1)
        if a + b <= max_pairing
    ]
    for lam2, lam3 in itertools.product(grid, grid):
        base = {"lam2": list(lam2.coeffs), "lam3": list(lam3.coeffs)}
        produced = set()
        for name, extra, lhs, rhs in _fusion_recurrence_cases(lam2, lam3, max_j):
            produced.add(name)
            reports.append(
                _report(
                    "fusion-recurrences", {**base, **extra, "case": name}, lhs == rhs
                )
            )
        if "j1_lambda1_zero" not in produced:
            reports.append(
                _skip(
                    "fusion-recurrences",
                    {**base, "case": "j1_lambda1_zero"},
                    "needs lam2(h_1) >= 1",
                )
            )
        if "j1_lambda1_zero_mirror" not in produced:
            reports.append(
                _skip(
                    "fusion-recurrences",
                    {**base, "case": "j1_lambda1_zero_mirror"},
                    "needs lam2(h_2) >= 1",
                )
            )
    for lam1, lam2 in itertools.product(grid, grid):
        base = {"lam1": list(lam1.coeffs), "lam2": list(lam2.coeffs)}
        produced = False
        for name, extra, lhs, rhs in _fusion_lam3_zero_cases(lam1, lam2, max_j):
            produced = True
            reports.append(
                _report(
                    "fusion-recurrences", {**base, **extra, "case": name}, lhs == rhs
                )
            )
        if not produced:
            reports.append(
                _skip(
                    "fusion-recurrences",
                    {**base, "case": "lambda3_zero"},
                    "needs lam1(h_1) >= 1",
                )
            )
    return reports
