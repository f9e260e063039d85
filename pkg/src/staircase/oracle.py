"""Exhaustive verification of the combinatorial lemmas behind the trees.

Every check is a pure fold over the deterministic diagram enumeration: each
diagram contributes a batch of assertions about its decomposition trees, and
a failed assertion becomes a witness in the report.  Checks accept an index
range so large runs can be sharded; fragments merge into the same aggregate
report that a serial run produces.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .diagram import (
    Diagram,
    col_count,
    complement_rotate,
    degree,
    enumerate_diagrams_upto,
    row_count,
    slice_below,
    to_generators,
    transpose,
)
from .ktheory import (
    central_charge,
    chern,
    chern_of_ideal,
    euler_char,
    from_slope_discriminant,
    line_bundle,
    reduced_rank0_hilbert_polynomial,
    ring_product,
)
from .objects import (
    RankMinusOne,
    RankOne,
    RankZero,
    chern_of,
    decompose,
    delta_opt,
    derived_dual,
    destabilizing_sequence,
    internal_nodes,
    is_trivial,
    mu_opt,
    rank_minus_one,
    rank_one,
    rank_zero,
    text_name,
)
from .resolution import minimal_free_resolution
from .slopes import is_horizontally_pure, scheme_slope
from .walls import is_nested, orthogonal_invariants, potential_wall

FAILURE_CAP = 100
DEFAULT_BOUND = 18
DEFAULT_CI_BOUND = 25


@dataclass(frozen=True)
class Failure:
    """A single counterexample: the diagram it came from and what broke."""

    diagram: Diagram
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    check: str
    degree_bound: int
    instances: int
    failures: tuple[Failure, ...]
    duration: float

    @property
    def passed(self) -> bool:
        return not self.failures


def merge_reports(first: VerificationReport, second: VerificationReport) -> VerificationReport:
    """Combine two shard reports for the same check and bound."""
    if (first.check, first.degree_bound) != (second.check, second.degree_bound):
        raise ValueError("cannot merge reports of different checks")
    return VerificationReport(
        first.check,
        first.degree_bound,
        first.instances + second.instances,
        (first.failures + second.failures)[:FAILURE_CAP],
        first.duration + second.duration,
    )


def _tree_roots(diagram: Diagram):
    """The root objects whose trees are probed for one diagram."""
    yield rank_one(diagram)
    best = scheme_slope(diagram)
    base = transpose(diagram) if best.orientation == "vertical" else diagram
    yield rank_zero(slice_below(base, best.index), best.index)
    full = rank_minus_one(diagram, row_count(diagram), col_count(diagram))
    if not is_trivial(full):
        yield full


def _all_internal_nodes(diagram: Diagram):
    for root in _tree_roots(diagram):
        yield from internal_nodes(decompose(root))


def _check_nesting(diagram: Diagram) -> Iterator[str]:
    """Child walls nest inside the parent wall; slopes/discriminants compare."""
    for node in _all_internal_nodes(diagram):
        seq = node.sequence
        for role, child in (("sub", seq.sub), ("quotient", seq.quotient)):
            if is_trivial(child):
                continue
            child_wall = destabilizing_sequence(child).wall
            rank = chern_of(child).r
            where = f"{role} {text_name(child)} of {text_name(node.node)}"
            if rank == 0:
                if mu_opt(child) != mu_opt(node.node):
                    yield f"{where}: mu_opt {mu_opt(child)} != {mu_opt(node.node)}"
                if delta_opt(child) > delta_opt(node.node):
                    yield (
                        f"{where}: Delta_opt {delta_opt(child)}"
                        f" > {delta_opt(node.node)}"
                    )
                side = "left"
            elif rank == 1:
                if mu_opt(child) > mu_opt(node.node):
                    yield f"{where}: mu_opt {mu_opt(child)} > {mu_opt(node.node)}"
                side = "left"
            else:
                if mu_opt(child) < mu_opt(node.node):
                    yield f"{where}: mu_opt {mu_opt(child)} < {mu_opt(node.node)}"
                side = "right"
            if not is_nested(child_wall, seq.wall, side):
                yield f"{where}: wall {child_wall} not nested in {seq.wall}"


def _check_purity(diagram: Diagram) -> Iterator[str]:
    """Rank-0 children of the trees are horizontally pure of the right shape."""
    for node in _all_internal_nodes(diagram):
        obj = node.node
        if isinstance(obj, RankOne) and not isinstance(
            node.sequence.quotient, RankZero
        ):
            yield f"quotient of {text_name(obj)} is not a rank-0 object"
        if isinstance(obj, RankMinusOne) and not isinstance(
            node.sequence.sub, RankZero
        ):
            yield f"sub of {text_name(obj)} is not a rank-0 object"
        if isinstance(obj, RankZero) and not is_horizontally_pure(obj.diagram, obj.k):
            yield f"{text_name(obj)} is not horizontally pure"


def _check_duality(diagram: Diagram) -> Iterator[str]:
    """Derived-dual slope identity and involutivity at rank -1 nodes."""
    for node in _all_internal_nodes(diagram):
        obj = node.node
        if not isinstance(obj, RankMinusOne):
            continue
        dual_diagram, twist, shift = derived_dual(obj)
        if shift != -1 or twist != obj.k + obj.i - obj.twist:
            yield f"unexpected dual twist/shift at {text_name(obj)}"
        if dual_diagram != complement_rotate(obj.diagram, obj.k, obj.i):
            yield f"dual diagram is not the rotated complement at {text_name(obj)}"
        if complement_rotate(dual_diagram, obj.k, obj.i) != obj.diagram:
            yield f"complement rotation not involutive at {text_name(obj)}"
        untwisted = mu_opt(obj) + obj.twist
        expected = -mu_opt(rank_one(dual_diagram)) + obj.i + obj.k - 3
        if untwisted != expected:
            yield (
                f"dual slope identity fails at {text_name(obj)}:"
                f" {untwisted} != {expected}"
            )


def _check_chern(diagram: Diagram) -> Iterator[str]:
    """Chern additivity, wall agreement, orthogonality, resolution sums."""
    for node in _all_internal_nodes(diagram):
        seq = node.sequence
        total = chern_of(node.node)
        sub = chern_of(seq.sub)
        quot = chern_of(seq.quotient)
        if chern(sub.r + quot.r, sub.c1 + quot.c1, sub.ch2 + quot.ch2) != total:
            yield f"chern additivity fails at {text_name(node.node)}"
        if potential_wall(sub, total) != seq.wall:
            yield f"W(sub, node) differs from node wall at {text_name(node.node)}"
        if potential_wall(total, quot) != seq.wall:
            yield f"W(node, quot) differs from node wall at {text_name(node.node)}"
        mu, delta = orthogonal_invariants(seq.wall)
        zeta = from_slope_discriminant(1, mu, delta)
        for name, ch in (("sub", sub), ("node", total), ("quotient", quot)):
            pairing = euler_char(ring_product(zeta, ch))
            if pairing != 0:
                yield (
                    f"orthogonal class pairs to {pairing} with {name}"
                    f" at {text_name(node.node)}"
                )
            top = central_charge(ch, seq.wall.center, seq.wall.radius_sq)
            if top.real != 0:
                yield (
                    f"central charge of {name} has real part {top.real}"
                    f" at the top of the wall of {text_name(node.node)}"
                )
    res = minimal_free_resolution(to_generators(diagram))
    total = [Fraction(0)] * 3
    for twist in res.generator_twists:
        total = [x + y for x, y in zip(total, line_bundle(twist))]
    for twist in res.syzygy_twists:
        total = [x - y for x, y in zip(total, line_bundle(twist))]
    if tuple(total) != tuple(chern_of_ideal(diagram)):
        yield "resolution chern sum differs from ideal chern character"


def _check_root_wall(diagram: Diagram) -> Iterator[str]:
    """Root wall center and radius from the scheme slope, transposing first."""
    best = scheme_slope(diagram)
    base = transpose(diagram) if best.orientation == "vertical" else diagram
    seq = destabilizing_sequence(rank_one(base))
    center = -best.value - Fraction(3, 2)
    if seq.cut != ("horizontal", best.index):
        yield f"root cut {seq.cut} is not horizontal at k={best.index}"
    if seq.wall.center != center:
        yield f"root wall center {seq.wall.center} != {center}"
    if seq.wall.radius_sq != center**2 - 2 * degree(diagram):
        yield f"root wall radius^2 {seq.wall.radius_sq} != center^2 - 2n"


def _check_ci(rectangle: Diagram) -> Iterator[str]:
    """Closed forms for a complete intersection, both wall-crossing stages."""
    a, b = col_count(rectangle), row_count(rectangle)
    seq = destabilizing_sequence(rank_one(rectangle))
    if seq.sub != rank_one((), -a):
        yield f"CI({a},{b}) sub is {text_name(seq.sub)}, expected O(-{a})"
    if seq.wall.center != Fraction(-a, 2) - b:
        yield f"CI({a},{b}) center {seq.wall.center} != -a/2 - b"
    if seq.wall.radius_sq != Fraction((a - 2 * b) ** 2, 4):
        yield f"CI({a},{b}) radius^2 {seq.wall.radius_sq} != (a/2 - b)^2"
    if mu_opt(rank_one(rectangle)) != b + Fraction(a - 3, 2):
        yield f"CI({a},{b}) mu_opt != b + (a-3)/2"
    if delta_opt(rank_one(rectangle)) != Fraction((a - 2 * b) ** 2 - 1, 8):
        yield f"CI({a},{b}) Delta_opt != ((a-2b)^2 - 1)/8"
    second = destabilizing_sequence(seq.quotient)
    if (second.wall == seq.wall) != (a == b):
        yield f"CI({a},{b}) wall equality should hold exactly when a = b"
    if second.wall.center != seq.wall.center:
        yield f"CI({a},{b}) second wall not concentric with the first"
    if second.wall.radius_sq != Fraction(a * a, 4):
        yield f"CI({a},{b}) second radius^2 {second.wall.radius_sq} != a^2/4"
    if seq.wall.radius_sq - second.wall.radius_sq != b * (b - a):
        yield f"CI({a},{b}) radius^2 gap != b(b-a)"
    if mu_opt(seq.quotient) != b + Fraction(a - 3, 2):
        yield f"CI({a},{b}) rank-0 mu_opt != b + (a-3)/2"
    if delta_opt(seq.quotient) != Fraction(a * a - 1, 8):
        yield f"CI({a},{b}) rank-0 Delta_opt != (a^2-1)/8"


def _check_triviality(diagram: Diagram) -> Iterator[str]:
    """Walls are nonempty and trivial children satisfy the case inequalities."""
    for node in _all_internal_nodes(diagram):
        seq = node.sequence
        obj = node.node
        where = f"{text_name(obj)}"
        if seq.wall.radius_sq <= 0:
            yield f"empty destabilizing wall at {where}"
        direction, index = seq.cut
        if isinstance(obj, RankOne):
            n = degree(obj.diagram)
            if is_trivial(seq.sub) and not index * index < 2 * n:
                yield f"case 1 fails at {where}: {index}^2 >= 2*{n}"
        elif isinstance(obj, RankZero):
            n, k = degree(obj.diagram), obj.k
            if is_trivial(seq.sub) and not index < Fraction(n, k) + Fraction(k, 2):
                yield f"case 2 fails at {where}: {index} >= n/k + k/2"
            if is_trivial(seq.quotient) and not index >= Fraction(n, k) - Fraction(k, 2):
                yield f"case 3 fails at {where}: {index} < n/k - k/2"
        else:
            n, k, i = degree(obj.diagram), obj.k, obj.i
            if is_trivial(seq.quotient):
                gap = k - index if direction == "horizontal" else i - index
                if not gap * gap < 2 * (k * i - n):
                    yield f"case 4 fails at {where}: {gap}^2 >= 2(ki - n)"


def _check_gieseker(diagram: Diagram) -> Iterator[str]:
    """Purity agrees with the reduced Hilbert-polynomial comparisons."""
    k = row_count(diagram)
    pure = is_horizontally_pure(diagram)
    _, const_k = reduced_rank0_hilbert_polynomial(diagram, k)
    compared = all(
        reduced_rank0_hilbert_polynomial(slice_below(diagram, j), j)[1] >= const_k
        for j in range(1, k)
    )
    if pure != compared:
        yield (
            f"purity ({pure}) and reduced-polynomial criterion ({compared})"
            " disagree"
        )


def _diagrams(n_max: int) -> list[Diagram]:
    return [d for d in enumerate_diagrams_upto(n_max) if d]


def _rectangles(a_max: int) -> list[Diagram]:
    return [(a,) * b for a in range(1, a_max + 1) for b in range(a, a_max + 1)]


_CHECKS: dict[str, tuple[Callable[[int], list[Diagram]], Callable[[Diagram], Iterator[str]]]] = {
    "nesting": (_diagrams, _check_nesting),
    "purity": (_diagrams, _check_purity),
    "duality": (_diagrams, _check_duality),
    "chern": (_diagrams, _check_chern),
    "rootwall": (_diagrams, _check_root_wall),
    "ci": (_rectangles, _check_ci),
    "triviality": (_diagrams, _check_triviality),
    "gieseker": (_diagrams, _check_gieseker),
}

CHECK_NAMES = tuple(_CHECKS)


def run_check(
    name: str,
    n_max: int | None = None,
    start: int = 0,
    stop: int | None = None,
    workers: int | None = None,
) -> VerificationReport:
    """Run one named check over an index range of its instance list."""
    if name not in _CHECKS:
        raise ValueError(f"unknown check {name!r}; choose from {CHECK_NAMES}")
    if n_max is None:
        n_max = DEFAULT_CI_BOUND if name == "ci" else DEFAULT_BOUND
    enumerate_instances, check = _CHECKS[name]
    instances = enumerate_instances(n_max)[start:stop]
    if workers and workers > 1 and len(instances) > 1:
        return _run_sharded(name, n_max, start, stop, workers)
    begin = time.perf_counter()
    failures = []
    for item in instances:
        for detail in check(item):
            if len(failures) < FAILURE_CAP:
                failures.append(Failure(item, detail))
    return VerificationReport(
        name, n_max, len(instances), tuple(failures), time.perf_counter() - begin
    )


def _run_sharded(name, n_max, start, stop, workers) -> VerificationReport:
    enumerate_instances, _ = _CHECKS[name]
    total = len(enumerate_instances(n_max))
    stop = total if stop is None else min(stop, total)
    step = max(1, -(-(stop - start) // workers))
    shards = [(lo, min(lo + step, stop)) for lo in range(start, stop, step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        fragments = list(
            pool.map(lambda span: run_check(name, n_max, span[0], span[1]), shards)
        )
    report = fragments[0]
    for fragment in fragments[1:]:
        report = merge_reports(report, fragment)
    return report


def run_all(n_max: int | None = None, workers: int | None = None) -> list[VerificationReport]:
    return [run_check(name, n_max, workers=workers) for name in CHECK_NAMES]


def verify_nesting(n_max: int = DEFAULT_BOUND, **kwargs) -> VerificationReport:
    return run_check("nesting", n_max, **kwargs)


def verify_purity(n_max: int = DEFAULT_BOUND, **kwargs) -> VerificationReport:
    return run_check("purity", n_max, **kwargs)


def verify_duality(n_max: int = DEFAULT_BOUND, **kwargs) -> VerificationReport:
    return run_check("duality", n_max, **kwargs)


def verify_chern(n_max: int = DEFAULT_BOUND, **kwargs) -> VerificationReport:
    return run_check("chern", n_max, **kwargs)


def verify_root_wall(n_max: int = DEFAULT_BOUND, **kwargs) -> VerificationReport:
    return run_check("rootwall", n_max, **kwargs)


def verify_ci(a_max: int = DEFAULT_CI_BOUND, **kwargs) -> VerificationReport:
    return run_check("ci", a_max, **kwargs)


def verify_triviality_inequalities(n_max: int = DEFAULT_BOUND, **kwargs) -> VerificationReport:
    return run_check("triviality", n_max, **kwargs)


def verify_gieseker(n_max: int = DEFAULT_BOUND, **kwargs) -> VerificationReport:
    return run_check("gieseker", n_max, **kwargs)


def render_report(report: VerificationReport, show_duration: bool = False) -> str:
    """Structured text; excludes timing by default so output is reproducible."""
    lines = [
        f"check: {report.check}",
        f"bound: {report.degree_bound}",
        f"instances: {report.instances}",
        f"failures: {len(report.failures)}",
    ]
    for failure in report.failures:
        rows = ",".join(str(h) for h in failure.diagram)
        lines.append(f"  witness rows:{rows} -- {failure.detail}")
    lines.append(f"status: {'pass' if report.passed else 'FAIL'}")
    if show_duration:
        lines.append(f"duration: {report.duration:.3f}s")
    return "\n".join(lines)


def render_reports(reports, show_duration: bool = False) -> str:
    return "\n\n".join(render_report(r, show_duration) for r in reports)
