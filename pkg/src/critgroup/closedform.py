"""Closed-form description of the critical group of KG(n, 2) for n >= 5.

This layer never touches a matrix except in ``verify_laplacian_identity``:
everything is computed from n alone.  It provides the Laplacian spectrum, the
group order via the Matrix-Tree theorem, the per-prime elementary divisor
multiplicities (a case analysis on which of n, n-1, n-3, n-4 the prime
divides, split into Case 1 for p > 3, Case 2 for p = 3, Case 3 for p = 2),
and the predicted invariant factor chain.  The rest of the package computes
the same data by brute force so the two can be compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod

from .arith import is_prime, prime_factors, valuation
from .critical import ElementaryDivisorProfile
from .graphs import kneser_graph, laplacian_matrix, srg_parameters
from .intmat import BigIntMatrix


@dataclass(frozen=True)
class SpectralData:
    """Nonzero Laplacian eigenvalues r, s of KG(n, 2) and their multiplicities f, g."""

    r: int
    s: int
    f: int
    g: int
    zero_multiplicity: int = 1


@dataclass(frozen=True)
class GrassmannHypothesis:
    """Dimension lower bounds feeding the multiplicity-forcing argument.

    ``indices`` a_1 < ... < a_h and ``bounds`` b_1 > ... > b_h assert that the
    filtration dimension at level a_j is at least b_j; ``d`` is the p-adic
    valuation of the group order.  Consistency requires
    sum_j (b_j - b_{j+1}) * a_j = d with b_{h+1} = kernel_dim.
    """

    prime: int
    indices: tuple[int, ...]
    bounds: tuple[int, ...]
    d: int
    total_dim: int
    kernel_dim: int = 1


@dataclass(frozen=True)
class CaseBranch:
    """Which arm of the per-prime case analysis applies, e.g. 'Case 2a' with a=2."""

    label: str
    a: int | None = None

    def describe(self) -> str:
        return self.label if self.a is None else f"{self.label}, a={self.a}"


@dataclass
class PredictedGroup:
    """Invariant factors of K(KG(n, 2)) as (base, multiplicity) pairs.

    ``parity`` records which of the two closed forms (odd or even n) applies.
    ``normalized()`` expands the pairs and drops trivial factors, giving a
    chain directly comparable with a computed decomposition.
    """

    factors: list[tuple[int, int]]
    parity: str

    def normalized(self) -> tuple[int, ...]:
        out = []
        for base, mult in self.factors:
            if base > 1:
                out.extend([base] * mult)
        return tuple(out)

    @property
    def order(self) -> int:
        return prod(base**mult for base, mult in self.factors)


def _require_n(n: int) -> None:
    if n < 5:
        raise ValueError(f"closed forms assume n >= 5, got {n}")


def spectral_data(n: int) -> SpectralData:
    """Laplacian spectrum of KG(n, 2): r = n(n-3)/2 with multiplicity f = n-1,
    s = (n-4)(n-1)/2 with multiplicity g = n(n-3)/2, and 0 with multiplicity 1."""
    _require_n(n)
    r = n * (n - 3) // 2
    s = (n - 4) * (n - 1) // 2
    f = n - 1
    g = n * (n - 3) // 2
    assert f + g + 1 == comb(n, 2)
    return SpectralData(r=r, s=s, f=f, g=g)


def critical_group_order(n: int) -> int:
    """Order of K(KG(n, 2)) by the Matrix-Tree theorem:
    n^(f-1) (n-1)^(g-1) (n-3)^f (n-4)^g / 2^(f+g-1)."""
    _require_n(n)
    sd = spectral_data(n)
    num = n ** (sd.f - 1) * (n - 1) ** (sd.g - 1) * (n - 3) ** sd.f * (n - 4) ** sd.g
    den = 2 ** (sd.f + sd.g - 1)
    order, rem = divmod(num, den)
    assert rem == 0
    return order


def order_valuation(n: int, p: int) -> int:
    """p-adic valuation of the group order, from the order formula termwise."""
    _require_n(n)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    sd = spectral_data(n)
    v = (
        (sd.f - 1) * valuation(n, p)
        + (sd.g - 1) * valuation(n - 1, p)
        + sd.f * valuation(n - 3, p)
        + sd.g * valuation(n - 4, p)
    )
    if p == 2:
        v -= sd.f + sd.g - 1
    return v


def primes_dividing_order(n: int) -> list[int]:
    """Ascending primes dividing the order of K(KG(n, 2))."""
    _require_n(n)
    candidates = prime_factors(n * (n - 1) * (n - 3) * (n - 4))
    return [p for p in candidates if order_valuation(n, p) > 0]


def laplacian_identity_holds(lap: BigIntMatrix, r: int, s: int, mu: int) -> bool:
    """Check (L - r*I)(L - s*I) = mu*J exactly."""
    v = lap.rows
    ident = BigIntMatrix.identity(v)
    j = BigIntMatrix.ones(v, v)
    return (lap - r * ident) @ (lap - s * ident) == mu * j


def verify_laplacian_identity(n: int) -> bool:
    """Check the Laplacian quadratic identity on the actual KG(n, 2) Laplacian."""
    _require_n(n)
    sd = spectral_data(n)
    mu = srg_parameters(n).mu
    return laplacian_identity_holds(laplacian_matrix(kneser_graph(n)), sd.r, sd.s, mu)


def classify_branch(n: int, p: int) -> CaseBranch:
    """Select the case-analysis arm for (n, p).

    Exactly one arm applies.  For p = 2 with n = 2 mod 4 the arm is Case 3b,
    where the order is odd and there is no 2-torsion; for any other prime not
    dividing the order there is no arm and a ValueError is raised.
    """
    _require_n(n)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")

    if p == 2:
        m = n % 4
        if m == 3:
            return CaseBranch("Case 3a", valuation(n - 3, 2))
        if m == 2:
            return CaseBranch("Case 3b")
        if m == 1:
            return CaseBranch("Case 3c", valuation(n - 1, 2))
        v0 = valuation(n, 2)
        v4 = valuation(n - 4, 2)
        if v0 > 2:
            assert v4 == 2
            return CaseBranch("Case 3 d-i", v0)
        if v4 > 2:
            assert v0 == 2
            return CaseBranch("Case 3 d-ii", v4)
        raise AssertionError(
            "Case 3 d-iii reached (v2(n) = v2(n-4) = 2): this configuration cannot occur"
        )

    if p == 3:
        if n % 3 == 2:
            raise ValueError(f"3 does not divide the group order for n={n}")
        if n % 3 == 1:
            a1 = valuation(n - 1, 3)
            a4 = valuation(n - 4, 3)
            if a1 > 1:
                assert a4 == 1
                return CaseBranch("Case 2a", a1)
            if a4 > 1:
                assert a1 == 1
                return CaseBranch("Case 2b", a4)
            return CaseBranch("Case 2c")
        a0 = valuation(n, 3)
        a3 = valuation(n - 3, 3)
        if a0 > 1:
            assert a3 == 1
            return CaseBranch("Case 2d", a0)
        if a3 > 1:
            assert a0 == 1
            return CaseBranch("Case 2e", a3)
        return CaseBranch("Case 2f")

    divides = [m for m in (n, n - 1, n - 3, n - 4) if m % p == 0]
    if not divides:
        raise ValueError(f"{p} does not divide the group order for n={n}")
    assert len(divides) == 1, f"p={p} divides more than one of n, n-1, n-3, n-4"
    target = divides[0]
    label = {n: "Case 1a", n - 1: "Case 1b", n - 3: "Case 1c", n - 4: "Case 1d"}[target]
    return CaseBranch(label, valuation(target, p))


def trivial_profile(n: int, p: int) -> ElementaryDivisorProfile:
    """Profile for a prime not dividing the order: e_0 = f + g, kernel rank 1."""
    _require_n(n)
    sd = spectral_data(n)
    return ElementaryDivisorProfile(prime=p, multiplicities={0: sd.f + sd.g}, kernel_rank=1)


def predicted_elementary_divisors(n: int, p: int) -> ElementaryDivisorProfile:
    """Closed-form p-elementary divisor multiplicities of the KG(n, 2) Laplacian.

    Requires p to divide the group order.  Dispatches on the case branch and
    evaluates that branch's multiplicity table directly.
    """
    _require_n(n)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if order_valuation(n, p) == 0:
        raise ValueError(f"{p} does not divide the group order for n={n}")
    sd = spectral_data(n)
    f, g = sd.f, sd.g
    br = classify_branch(n, p)
    a = br.a
    table: dict[int, int]
    if br.label == "Case 1a":
        table = {a: f - 1, 0: g + 1}
    elif br.label == "Case 1b":
        table = {a: g - 1, 0: f + 1}
    elif br.label == "Case 1c":
        table = {a: f, 0: g}
    elif br.label == "Case 1d":
        table = {a: g, 0: f}
    elif br.label == "Case 2a":
        table = {1: 1, a + 1: g - 1, 0: f}
    elif br.label == "Case 2b":
        table = {a: 1, a + 1: g - 1, 0: f}
    elif br.label == "Case 2c":
        table = {1: 1, 2: g - 1, 0: f}
    elif br.label == "Case 2d":
        table = {1: 1, a + 1: f - 1, 0: g}
    elif br.label == "Case 2e":
        table = {a: 1, a + 1: f - 1, 0: g}
    elif br.label == "Case 2f":
        table = {1: 1, 2: f - 1, 0: g}
    elif br.label == "Case 3a":
        table = {a - 1: f, 0: g}
    elif br.label == "Case 3c":
        table = {a - 1: g - 1, 0: f + 1}
    elif br.label == "Case 3 d-i":
        table = {1: g + 1 - f, a: f - 1, 0: f}
    elif br.label == "Case 3 d-ii":
        table = {a - 1: g + 1 - f, a: f - 1, 0: f}
    else:  # pragma: no cover - Case 3b is excluded by the order check above
        raise AssertionError(f"unexpected branch {br.label}")
    profile = ElementaryDivisorProfile(prime=p, multiplicities=table, kernel_rank=1)
    assert profile.torsion_valuation == order_valuation(n, p)
    assert profile.total_multiplicity == f + g
    return profile


def grassmann_conclusion(hyp: GrassmannHypothesis) -> ElementaryDivisorProfile:
    """Multiplicities forced by a consistent set of filtration lower bounds.

    Given bounds dims[a_j] >= b_j whose weighted gaps already exhaust the
    valuation d of the order, the multiplicities are pinned down:
    e_{a_j} = b_j - b_{j+1} (with b_{h+1} = kernel_dim), e_0 = total_dim - b_1,
    and e_i = 0 elsewhere.
    """
    idx, bnd = hyp.indices, hyp.bounds
    if len(idx) != len(bnd):
        raise ValueError("indices and bounds must have equal length")
    if any(a <= 0 for a in idx) or list(idx) != sorted(set(idx)):
        raise ValueError("indices must be strictly increasing positive integers")
    if list(bnd) != sorted(set(bnd), reverse=True):
        raise ValueError("bounds must be strictly decreasing")
    if bnd and bnd[-1] < hyp.kernel_dim:
        raise ValueError("bounds may not drop below the kernel dimension")
    chain = list(bnd) + [hyp.kernel_dim]
    weighted = sum((chain[j] - chain[j + 1]) * idx[j] for j in range(len(idx)))
    if weighted != hyp.d:
        raise ValueError(f"inconsistent hypothesis: weighted gap sum {weighted} != d {hyp.d}")
    table = {0: hyp.total_dim - chain[0]}
    for j, a in enumerate(idx):
        table[a] = chain[j] - chain[j + 1]
    return ElementaryDivisorProfile(
        prime=hyp.prime, multiplicities=table, kernel_rank=hyp.kernel_dim
    )


def predicted_critical_group(n: int) -> PredictedGroup:
    """The closed-form invariant factor chain of K(KG(n, 2)).

    Odd n:  Z_{n-4} + (Z_{(n-4)(n-1)/2})^{n(n-5)/2}
            + Z_{(n-4)(n-1)(n-3)/4} + (Z_{(n-4)(n-1)(n-3)n/4})^{n-2}.
    Even n: the first factor becomes Z_{(n-4)/2} and the third
            Z_{(n-4)(n-1)(n-3)/2}; the rest is unchanged.
    """
    _require_n(n)
    mid_mult = n * (n - 5) // 2
    last = (n - 4) * (n - 1) * (n - 3) * n
    assert last % 4 == 0
    if n % 2 == 1:
        first = n - 4
        third = (n - 4) * (n - 1) * (n - 3)
        assert third % 4 == 0
        factors = [
            (first, 1),
            ((n - 4) * (n - 1) // 2, mid_mult),
            (third // 4, 1),
            (last // 4, n - 2),
        ]
        parity = "odd"
    else:
        assert (n - 4) % 2 == 0
        third = (n - 4) * (n - 1) * (n - 3)
        assert third % 2 == 0
        factors = [
            ((n - 4) // 2, 1),
            ((n - 4) * (n - 1) // 2, mid_mult),
            (third // 2, 1),
            (last // 4, n - 2),
        ]
        parity = "even"
    group = PredictedGroup(factors=factors, parity=parity)
    assert group.order == critical_group_order(n)
    return group
