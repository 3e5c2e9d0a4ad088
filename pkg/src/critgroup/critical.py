"""Critical groups, spanning tree counts, and per-prime elementary divisor data.

The critical group of a graph is the torsion part of the cokernel of its
Laplacian.  Two independent routes into its structure live here: the Smith
normal form route (``p_elementary_divisors``) and the mod-p^e row reduction
route (``mbar_filtration``).  ``verify_mdim_identity`` checks that they agree
through the tail-sum identity dims[i] = kernel_dim + sum of e_j for j >= i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import is_prime, valuation
from .graphs import Graph, laplacian_matrix
from .intmat import (
    AbelianGroupDecomposition,
    BigIntMatrix,
    SmithDecomposition,
    cokernel,
    determinant,
    matrix_rank,
    smith_normal_form,
)
from .modring import kernel_dimension_mod


@dataclass
class ElementaryDivisorProfile:
    """Multiplicities e_i of p^i among the elementary divisors of a matrix.

    ``multiplicities`` maps exponent i to e_i (zero entries dropped);
    ``kernel_rank`` is the number of zero diagonal entries, i.e. the rank of
    the free part of the cokernel.
    """

    prime: int
    multiplicities: dict[int, int] = field(default_factory=dict)
    kernel_rank: int = 0

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.kernel_rank < 0:
            raise ValueError("kernel rank must be nonnegative")
        clean = {}
        for i, e in sorted(self.multiplicities.items()):
            if i < 0 or e < 0:
                raise ValueError("exponents and multiplicities must be nonnegative")
            if e:
                clean[i] = e
        self.multiplicities = clean

    @property
    def total_multiplicity(self) -> int:
        return sum(self.multiplicities.values())

    @property
    def torsion_valuation(self) -> int:
        """Sum of i * e_i: the p-adic valuation of the torsion order."""
        return sum(i * e for i, e in self.multiplicities.items())

    @property
    def max_exponent(self) -> int:
        return max(self.multiplicities, default=0)

    def tail_sum(self, i: int) -> int:
        return sum(e for j, e in self.multiplicities.items() if j >= i)


@dataclass
class MbarFiltration:
    """Dimensions dims[i] of the mod-p reductions of {x : p^i divides M x}."""

    prime: int
    dims: tuple[int, ...]
    kernel_dim: int

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        self.dims = tuple(self.dims)
        if not self.dims:
            raise ValueError("dims must start at level 0")
        for a, b in zip(self.dims, self.dims[1:]):
            if b > a:
                raise ValueError("dims must be non-increasing")
        if any(d < self.kernel_dim for d in self.dims):
            raise ValueError("dims may not drop below the kernel dimension")

    @property
    def i_max(self) -> int:
        return len(self.dims) - 1


def critical_group(lap: BigIntMatrix) -> AbelianGroupDecomposition:
    """Critical group of a graph from its Laplacian.

    The invariant factors are the torsion part of the cokernel; the free rank
    equals the number of connected components.
    """
    return cokernel(lap)


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees, as the first principal cofactor of the Laplacian."""
    lap = laplacian_matrix(g)
    v = g.num_vertices
    rows = lap.to_rows()
    minor = [row[1:] for row in rows[1:]]
    return determinant(BigIntMatrix(v - 1, v - 1, [x for row in minor for x in row]))


def profile_from_smith(snf: SmithDecomposition, p: int) -> ElementaryDivisorProfile:
    """Read the p-elementary divisor multiplicities off a Smith diagonal."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    mult: dict[int, int] = {}
    for d in snf.diagonal:
        if d != 0:
            i = valuation(d, p)
            mult[i] = mult.get(i, 0) + 1
    return ElementaryDivisorProfile(
        prime=p, multiplicities=mult, kernel_rank=snf.cols - snf.rank
    )


def p_elementary_divisors(matrix: BigIntMatrix, p: int) -> ElementaryDivisorProfile:
    """Per-prime elementary divisor profile, via Smith normal form."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return profile_from_smith(smith_normal_form(matrix), p)


def mbar_filtration(matrix: BigIntMatrix, p: int, i_max: int) -> MbarFiltration:
    """Filtration dimensions dims[0..i_max] by mod-p^i row reduction.

    dims[i] for i >= 1 comes from the Howell-form kernel route, never from
    Smith normal form, so the result is an independent witness.  dims[0] is
    the full column count; the kernel dimension is columns minus the rank
    over the rationals.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    dims = [matrix.cols]
    for i in range(1, i_max + 1):
        dims.append(kernel_dimension_mod(matrix, p, i))
    kernel_dim = matrix.cols - matrix_rank(matrix)
    return MbarFiltration(prime=p, dims=tuple(dims), kernel_dim=kernel_dim)


def verify_mdim_identity(profile: ElementaryDivisorProfile, filt: MbarFiltration) -> bool:
    """Check dims[i] = kernel_dim + sum_{j >= i} e_j for every filtration level."""
    if profile.prime != filt.prime:
        raise ValueError(
            f"prime mismatch: profile at {profile.prime}, filtration at {filt.prime}"
        )
    return all(
        filt.dims[i] == filt.kernel_dim + profile.tail_sum(i) for i in range(len(filt.dims))
    )


def verify_eigenspace_bound(n: int, p: int, u: int, b: int, filt: MbarFiltration) -> bool:
    """Check dims[v_p(u)] >= b for an integer Laplacian eigenvalue u of multiplicity b.

    For v_p(u) = 0 the bound dims[0] >= b holds trivially since dims[0] is the
    vertex count.  ``n`` records which KG(n, 2) the data belongs to.
    """
    if p != filt.prime:
        raise ValueError(f"prime mismatch: {p} vs filtration at {filt.prime}")
    a = valuation(u, p)
    if a == 0:
        return True
    if a > filt.i_max:
        raise ValueError(f"filtration depth {filt.i_max} < valuation {a}")
    return filt.dims[a] >= b


def invariant_factors_from_profiles(profiles) -> tuple[int, ...]:
    """Regroup per-prime elementary divisors into an invariant factor chain.

    The k-th largest invariant factor is the product over primes of the k-th
    largest prime power present for that prime.
    """
    exponent_lists = []
    for prof in profiles:
        exps = []
        for i, e in sorted(prof.multiplicities.items(), reverse=True):
            if i > 0:
                exps.extend([i] * e)
        exponent_lists.append((prof.prime, exps))
    width = max((len(exps) for _, exps in exponent_lists), default=0)
    factors = []
    for idx in range(width):
        f = 1
        for p, exps in exponent_lists:
            if idx < len(exps):
                f *= p ** exps[idx]
        factors.append(f)
    return tuple(reversed(factors))
