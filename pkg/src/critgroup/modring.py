"""Row reduction over Z/p^e and solution-set dimensions mod a prime power.

Residue rings Z/p^e are not fields, so ordinary row echelon forms do not
capture a canonical generating set of a row span: a row with a zero-divisor
pivot also contributes its annihilator multiples.  The Howell form repairs
this by closing the echelon rows under annihilator multiples, normalizing
each pivot to the divisor of the modulus it generates, and reducing entries
above pivots.  The span of the rows whose leading entries sit past a given
column is then exactly the set of span elements vanishing up to that column,
which is what makes kernel extraction sound over these rings.

Nothing here touches the Smith normal form code in ``intmat``; the two routes
are kept independent so that one can serve as a witness for the other.
"""

from __future__ import annotations

from math import gcd

from .arith import is_prime, xgcd
from .intmat import BigIntMatrix


def _leading(row: list[int]) -> int | None:
    for j, x in enumerate(row):
        if x:
            return j
    return None


def _annihilator_row(row: list[int], col: int, modulus: int) -> list[int] | None:
    """Multiple of ``row`` by the annihilator of its pivot, or None if trivial."""
    d = gcd(row[col], modulus)
    if d == 1:
        return None
    c = modulus // d
    out = [(c * x) % modulus for x in row]
    out[col] = 0
    return out if any(out) else None


def howell_form(rows, modulus: int) -> list[list[int]]:
    """Canonical Howell form of the span of ``rows`` over Z/modulus.

    The modulus must be a prime power so that every entry factors as a unit
    times a power of the prime (unit parts are then invertible, which the
    pivot normalization relies on).  Returns the nonzero rows, sorted by
    pivot column, with pivots dividing the modulus and entries above each
    pivot reduced modulo it.
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    pivots: dict[int, list[int]] = {}
    queue = [[x % modulus for x in r] for r in rows]
    while queue:
        vec = queue.pop()
        j = _leading(vec)
        while j is not None:
            if j not in pivots:
                pivots[j] = vec
                ann = _annihilator_row(vec, j, modulus)
                if ann is not None:
                    queue.append(ann)
                break
            cur = pivots[j]
            a, b = cur[j], vec[j]
            if b % a == 0:
                f = b // a
                vec = [(w - f * s) % modulus for s, w in zip(cur, vec)]
            else:
                g, x, y = xgcd(a, b)
                af, bf = a // g, b // g
                merged = [(x * s + y * w) % modulus for s, w in zip(cur, vec)]
                vec = [(af * w - bf * s) % modulus for s, w in zip(cur, vec)]
                pivots[j] = merged
                ann = _annihilator_row(merged, j, modulus)
                if ann is not None:
                    queue.append(ann)
            j = _leading(vec)

    ordered = [pivots[j] for j in sorted(pivots)]
    # Pivot normalization: scale by the inverse of the unit part so the pivot
    # becomes gcd(pivot, modulus), a divisor of the modulus.
    for row in ordered:
        j = _leading(row)
        d = gcd(row[j], modulus)
        if row[j] != d:
            inv = pow(row[j] // d, -1, modulus)
            row[:] = [(inv * x) % modulus for x in row]
    # Reduce entries above each pivot modulo the pivot.
    cols = [_leading(r) for r in ordered]
    for r, (row, j) in enumerate(zip(ordered, cols)):
        d = row[j]
        for s in range(r):
            up = ordered[s]
            f = up[j] // d
            if f:
                up[:] = [(a - f * b) % modulus for a, b in zip(up, row)]
    return ordered


def kernel_generators_mod(matrix: BigIntMatrix, modulus: int) -> list[list[int]]:
    """Generators of {x in (Z/modulus)^n : M x = 0 over Z/modulus}.

    Computed by Howell-reducing the transpose augmented with an identity
    block; the rows whose matrix block vanishes carry the kernel generators.
    """
    m, n = matrix.rows, matrix.cols
    rows = []
    for i in range(n):
        row = [matrix[r, i] % modulus for r in range(m)]
        row.extend(int(i == c) for c in range(n))
        rows.append(row)
    reduced = howell_form(rows, modulus)
    return [row[m:] for row in reduced if not any(row[:m])]


def rank_mod_p(rows, p: int) -> int:
    """Rank over the field Z/p of the given rows (entries reduced mod p)."""
    work = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for j in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][j]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][j], -1, p)
        work[rank] = [(inv * x) % p for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][j]:
                f = work[i][j]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def kernel_dimension_mod(matrix: BigIntMatrix, p: int, e: int) -> int:
    """Dimension over Z/p of the mod-p image of {x : M x = 0 mod p^e}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("exponent must be at least 1")
    gens = kernel_generators_mod(matrix, p**e)
    if not gens:
        return 0
    return rank_mod_p(gens, p)
