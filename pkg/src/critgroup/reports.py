"""Verification reports: building, comparing, and serializing.

A report captures, for one n, the brute-force group computation next to every
closed-form prediction, plus the independent identity checks.  JSON and CSV
renderings are byte-deterministic: field order is fixed and timings are kept
out of the machine-readable payloads (they land in the text rendering only).
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from math import prod

from .arith import valuation
from .closedform import (
    critical_group_order,
    predicted_critical_group,
    predicted_elementary_divisors,
    primes_dividing_order,
    spectral_data,
)
from .critical import (
    ElementaryDivisorProfile,
    mbar_filtration,
    profile_from_smith,
    spanning_tree_count,
    verify_eigenspace_bound,
    verify_mdim_identity,
)
from .graphs import kneser_graph, laplacian_matrix
from .intmat import smith_normal_form


@dataclass
class PrimeReport:
    p: int
    computed: dict[int, int]
    predicted: dict[int, int]
    mdim_ok: bool
    eigenbound_ok: bool

    @property
    def matches(self) -> bool:
        return self.computed == self.predicted and self.mdim_ok and self.eigenbound_ok


@dataclass
class VerificationReport:
    n: int
    computed_factors: tuple[int, ...]
    predicted_factors: tuple[int, ...]
    order: int
    spanning_trees: int
    per_prime: list[PrimeReport]
    status: str
    timings: dict[str, float] = field(default_factory=dict)


def build_report(n: int, i_max_extra: int = 1) -> VerificationReport:
    """Run the full cross-validation pipeline for KG(n, 2)."""
    graph = kneser_graph(n)
    lap = laplacian_matrix(graph)
    sd = spectral_data(n)

    t0 = time.perf_counter()
    snf = smith_normal_form(lap)
    t_snf = time.perf_counter() - t0
    computed = tuple(d for d in snf.diagonal if d > 1)

    t0 = time.perf_counter()
    trees = spanning_tree_count(graph)
    t_trees = time.perf_counter() - t0

    predicted = predicted_critical_group(n).normalized()
    order = critical_group_order(n)

    t0 = time.perf_counter()
    per_prime = []
    for p in primes_dividing_order(n):
        comp_prof = profile_from_smith(snf, p)
        pred_prof = predicted_elementary_divisors(n, p)
        filt = mbar_filtration(lap, p, _filtration_depth(comp_prof, pred_prof, sd, p, i_max_extra))
        mdim_ok = verify_mdim_identity(comp_prof, filt)
        eig_ok = all(
            verify_eigenspace_bound(n, p, u, b, filt)
            for u, b in ((sd.r, sd.f), (sd.s, sd.g))
        )
        per_prime.append(
            PrimeReport(
                p=p,
                computed=dict(comp_prof.multiplicities),
                predicted=dict(pred_prof.multiplicities),
                mdim_ok=mdim_ok,
                eigenbound_ok=eig_ok,
            )
        )
    t_profiles = time.perf_counter() - t0

    ok = (
        computed == predicted
        and prod(computed) == order == trees
        and snf.cols - snf.rank == 1
        and all(pr.matches for pr in per_prime)
    )
    return VerificationReport(
        n=n,
        computed_factors=computed,
        predicted_factors=predicted,
        order=order,
        spanning_trees=trees,
        per_prime=per_prime,
        status="pass" if ok else "fail",
        timings={
            "snf_ms": round(t_snf * 1000, 3),
            "trees_ms": round(t_trees * 1000, 3),
            "profiles_ms": round(t_profiles * 1000, 3),
        },
    )


def _filtration_depth(
    comp: ElementaryDivisorProfile,
    pred: ElementaryDivisorProfile,
    sd,
    p: int,
    extra: int,
) -> int:
    # Deep enough for the eigenvalue valuations, plus `extra` levels past the
    # largest exponent so the stabilized tail is witnessed.
    tail = max(comp.max_exponent, pred.max_exponent) + extra
    return max(1, valuation(sd.r, p), valuation(sd.s, p), tail)


def profile_str(mult: dict[int, int]) -> str:
    return " ".join(f"{i}:{e}" for i, e in sorted(mult.items()))


def report_json_obj(r: VerificationReport) -> dict:
    return {
        "n": r.n,
        "computed_factors": list(r.computed_factors),
        "predicted_factors": list(r.predicted_factors),
        "order": r.order,
        "spanning_trees": r.spanning_trees,
        "per_prime": [
            {
                "p": pr.p,
                "computed": {str(i): e for i, e in sorted(pr.computed.items())},
                "predicted": {str(i): e for i, e in sorted(pr.predicted.items())},
                "mdim_ok": pr.mdim_ok,
                "eigenbound_ok": pr.eigenbound_ok,
            }
            for pr in r.per_prime
        ],
        "status": r.status,
    }


CSV_HEADER = [
    "n",
    "status",
    "order",
    "spanning_trees",
    "computed_factors",
    "predicted_factors",
    "p",
    "computed_profile",
    "predicted_profile",
    "mdim_ok",
    "eigenbound_ok",
]


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        base = [
            r.n,
            r.status,
            r.order,
            r.spanning_trees,
            " ".join(map(str, r.computed_factors)),
            " ".join(map(str, r.predicted_factors)),
        ]
        if not r.per_prime:
            writer.writerow(base + ["", "", "", "", ""])
        for pr in r.per_prime:
            writer.writerow(
                base
                + [
                    pr.p,
                    profile_str(pr.computed),
                    profile_str(pr.predicted),
                    pr.mdim_ok,
                    pr.eigenbound_ok,
                ]
            )
    return buf.getvalue()


def report_to_text(r: VerificationReport) -> str:
    lines = [f"n={r.n}  status={r.status}"]
    lines.append(f"  computed factors : {' '.join(map(str, r.computed_factors)) or '-'}")
    lines.append(f"  predicted factors: {' '.join(map(str, r.predicted_factors)) or '-'}")
    lines.append(f"  order={r.order}  spanning_trees={r.spanning_trees}")
    for pr in r.per_prime:
        match = "match" if pr.computed == pr.predicted else "MISMATCH"
        lines.append(
            f"  p={pr.p}: computed {profile_str(pr.computed)} | "
            f"predicted {profile_str(pr.predicted)} | {match} | "
            f"mdim={'ok' if pr.mdim_ok else 'FAIL'} | "
            f"eigenbound={'ok' if pr.eigenbound_ok else 'FAIL'}"
        )
    if r.timings:
        lines.append(
            "  timings: " + " ".join(f"{k}={v}" for k, v in sorted(r.timings.items()))
        )
    return "\n".join(lines) + "\n"
