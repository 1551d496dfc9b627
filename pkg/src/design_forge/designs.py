"""Design verification by exhaustive pair sweep.

Verification is literal: count, for every unordered pair of points, how
many blocks contain it, then inspect the histogram. Sweeping costs
O(b * k^2) pair increments against a triangular table, which beats
per-pair membership scans at every size this package handles. Reports
keep the full histograms so near-misses stay diagnosable, and the first
counterexample is deterministic (smallest failing pair in lexicographic
order).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import (
    ConsistencyError,
    ContainmentError,
    PartitionError,
    ShapeError,
    StateError,
)


@dataclass(frozen=True)
class DesignReport:
    """Outcome of a pair-balance sweep over one block collection.

    r_histogram maps per-point occurrence counts to how many points have
    that count; lambda_histogram maps per-pair coverage counts to how many
    pairs have that coverage. A passing design has exactly one key in each.
    """

    v: int
    k: int
    b: int
    r_histogram: dict[int, int]
    lambda_histogram: dict[int, int]
    passed: bool
    counterexample: tuple[int, int] | None


@dataclass(frozen=True)
class GddReport(DesignReport):
    """Grouped verdict: lambda_histogram covers the cross-group pairs only,
    within_group_coverage is the worst same-group pair (must be 0)."""

    group_count: int
    partition_ok: bool
    within_group_coverage: int
    cross_group_lambda: int | None


def _block_list(blocks) -> list:
    return list(getattr(blocks, "blocks", blocks))


def _pair_sweep(pts: list[int], index: dict[int, int], blocks: list):
    """Uniform-size check, containment check, then the triangular count table.

    Returns (block size, flat pair-count table, per-point occurrence list).
    """
    if not blocks:
        raise ShapeError("cannot verify an empty block collection")
    k = len(blocks[0])
    if k < 2:
        raise ShapeError("blocks must have at least two points")
    v = len(pts)
    counts = [0] * (v * v)
    occur = [0] * v
    for block in blocks:
        if len(block) != k:
            raise ShapeError(
                f"expected uniform block size {k}, found {len(block)}"
            )
        if len(set(block)) != len(block):
            raise ShapeError(f"block {tuple(block)} repeats a point")
        try:
            idx = sorted(index[x] for x in block)
        except KeyError as exc:
            raise ContainmentError(
                f"block {tuple(block)} uses point {exc.args[0]} "
                "outside the point set"
            ) from None
        for pos, a in enumerate(idx):
            occur[a] += 1
            base = a * v
            for c in idx[pos + 1:]:
                counts[base + c] += 1
    return k, counts, occur


def verify_bibd(points, blocks) -> DesignReport:
    """Sweep every pair of points and require constant coverage.

    Accepts a BlockFamily or any iterable of blocks. Nonuniform block sizes
    raise ShapeError and stray points raise ContainmentError; balance
    failures do not raise, they come back as a failing report whose
    counterexample is the smallest pair disagreeing with the first pair's
    coverage.
    """
    pts = sorted(set(points))
    index = {p: i for i, p in enumerate(pts)}
    blist = _block_list(blocks)
    k, counts, occur = _pair_sweep(pts, index, blist)
    v = len(pts)

    lambda_hist: Counter = Counter()
    reference = counts[1] if v > 1 else 0  # coverage of the first pair
    counterexample = None
    for a in range(v):
        base = a * v
        for c in range(a + 1, v):
            cov = counts[base + c]
            lambda_hist[cov] += 1
            if counterexample is None and cov != reference:
                counterexample = (pts[a], pts[c])
    passed = len(lambda_hist) == 1
    return DesignReport(
        v=v,
        k=k,
        b=len(blist),
        r_histogram=dict(sorted(Counter(occur).items())),
        lambda_histogram=dict(sorted(lambda_hist.items())),
        passed=passed,
        counterexample=None if passed else counterexample,
    )


def verify_gdd(points, groups, blocks) -> GddReport:
    """Check the grouped balance property.

    Passes iff the groups partition the points (with more than one group),
    no block covers a same-group pair, and every cross-group pair is
    covered the same number of times. Partition defects are reported, not
    raised; a group that repeats a point raises PartitionError and shape
    or containment defects raise as in verify_bibd.
    """
    pts = sorted(set(points))
    index = {p: i for i, p in enumerate(pts)}
    v = len(pts)

    glist = _block_list(groups)
    if not glist:
        raise ShapeError("cannot verify with an empty group collection")
    gsize = len(glist[0])
    membership = [0] * v
    same_pairs: set[int] = set()
    for g in glist:
        if len(g) != gsize:
            raise ShapeError(
                f"expected uniform group size {gsize}, found {len(g)}"
            )
        if len(set(g)) != len(g):
            raise PartitionError(f"group {tuple(g)} repeats a point")
        try:
            gidx = sorted(index[x] for x in g)
        except KeyError as exc:
            raise ContainmentError(
                f"group {tuple(g)} uses point {exc.args[0]} outside the point set"
            ) from None
        for pos, a in enumerate(gidx):
            membership[a] += 1
            for c in gidx[pos + 1:]:
                same_pairs.add(a * v + c)
    partition_ok = len(glist) > 1 and all(times == 1 for times in membership)

    blist = _block_list(blocks)
    k, counts, occur = _pair_sweep(pts, index, blist)

    within = 0
    within_example = None
    cross_hist: Counter = Counter()
    cross_reference = None
    cross_example = None
    for a in range(v):
        base = a * v
        for c in range(a + 1, v):
            flat = base + c
            cov = counts[flat]
            if flat in same_pairs:
                if cov > within:
                    within = cov
                if cov > 0 and within_example is None:
                    within_example = (pts[a], pts[c])
            else:
                cross_hist[cov] += 1
                if cross_reference is None:
                    cross_reference = cov
                elif cov != cross_reference and cross_example is None:
                    cross_example = (pts[a], pts[c])

    cross_ok = len(cross_hist) == 1
    passed = partition_ok and within == 0 and cross_ok
    counterexample = None
    if not passed:
        counterexample = within_example if within_example else cross_example
    return GddReport(
        v=v,
        k=k,
        b=len(blist),
        r_histogram=dict(sorted(Counter(occur).items())),
        lambda_histogram=dict(sorted(cross_hist.items())),
        passed=passed,
        counterexample=counterexample,
        group_count=len(glist),
        partition_ok=partition_ok,
        within_group_coverage=within,
        cross_group_lambda=next(iter(cross_hist)) if cross_ok else None,
    )


def observed_params(report: DesignReport) -> tuple[int, int, int, int]:
    """The (v, b, r, lambda) of a passing pair-balance report.

    Re-asserts the double-counting identities r (k-1) = lambda (v-1) and
    b k = v r before returning; those cannot fail for a genuinely balanced
    design, so a failure is an implementation bug. Grouped reports obey a
    different identity and are rejected.
    """
    if isinstance(report, GddReport):
        raise StateError("grouped reports have their own parameter identities")
    if not report.passed:
        raise StateError("report did not pass; parameters are not single-valued")
    (r,) = report.r_histogram
    (lam,) = report.lambda_histogram
    v, k, b = report.v, report.k, report.b
    if r * (k - 1) != lam * (v - 1) or b * k != v * r:
        raise ConsistencyError(
            f"double-counting identities failed for v={v}, k={k}, b={b}, "
            f"r={r}, lambda={lam}"
        )
    return v, b, r, lam
