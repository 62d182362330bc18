"""Named verification suites: every identity, counted from scratch and compared.

Each suite rebuilds its regions and graphs, counts with the engines, and
compares against the independent side of the identity (closed form,
scaled recurrence, reduced graph, or factorization product).  Reports
keep a fixed case order and their JSON form contains no timing data, so
repeated runs are byte-identical.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from . import engines
from .factorize import apply_factorization, find_diagonal_axis
from .formulas import (
    LEMMA1_IDS,
    lemma1_sides,
    lemma4_value,
    lemma5_value,
    lemma6_lhs,
    lemma6_rhs,
    theorem1_value,
)
from .grids import EmbeddedGraph, dual_graph, isomorphic_embedded, reduce_forced
from .regions import (
    KLEIN_ABUT,
    KLEIN_NONABUT,
    PINWHEEL,
    QUARTER_KINDS,
    build_holey_ar,
    build_holey_ar_bar,
    build_quartered,
    set_A,
    set_B,
)

SUITE_NAMES = (
    "theorem1",
    "lemma1",
    "lemma2",
    "lemma3",
    "lemma4",
    "lemma5",
    "lemma6",
    "factorization",
    "engines",
)

_RANDOM_SEED = 20240801


@dataclass(frozen=True)
class VerifyCase:
    case_id: str
    expected: str
    actual: str
    ok: bool


@dataclass
class SuiteReport:
    suite: str
    cases: list[VerifyCase] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def to_json_dict(self) -> dict:
        # wall_ms deliberately omitted: report bytes must be run-independent
        return {
            "suite": self.suite,
            "ok": self.ok,
            "cases": [
                {
                    "id": c.case_id,
                    "expected": c.expected,
                    "actual": c.actual,
                    "ok": c.ok,
                }
                for c in self.cases
            ],
        }

    def pretty(self) -> str:
        lines = [f"suite {self.suite}: {'ok' if self.ok else 'FAILED'} "
                 f"({len(self.cases)} cases, {self.wall_ms:.0f} ms)"]
        for c in self.cases:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"  {mark} {c.case_id}: expected {c.expected}, got {c.actual}")
        return "\n".join(lines)


def _case(cid: str, expected, actual) -> VerifyCase:
    e, a = str(expected), str(actual)
    return VerifyCase(case_id=cid, expected=e, actual=a, ok=e == a)


def _bool_case(cid: str, value: bool) -> VerifyCase:
    return VerifyCase(case_id=cid, expected="true", actual=str(value).lower(), ok=value)


def suite_theorem1(max_order: int = 12) -> SuiteReport:
    """Engine count of every quartered region equals its closed form."""
    report = SuiteReport(suite="theorem1")
    t0 = time.monotonic()
    for order in range(1, max_order + 1):
        for kind in QUARTER_KINDS:
            counted = engines.count(dual_graph(build_quartered(order, kind)))
            report.cases.append(_case(f"{kind}({order})", theorem1_value(kind, order), counted))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


def suite_lemma1(max_n: int = 2) -> SuiteReport:
    """The four doubling recurrences, both sides counted independently."""
    report = SuiteReport(suite="lemma1")
    t0 = time.monotonic()
    for n in range(1, max_n + 1):
        for which in LEMMA1_IDS:
            lhs, scaled_rhs = lemma1_sides(which, n)
            report.cases.append(_case(f"{which}[n={n}]", scaled_rhs, lhs))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


# Forced-edge identities: (id, family, larger order, smaller order).
_LEMMA2_PAIRS = (
    ("eq11", KLEIN_ABUT, lambda n: 4 * n, lambda n: 4 * n - 2),
    ("eq12", KLEIN_ABUT, lambda n: 4 * n + 1, lambda n: 4 * n - 1),
    ("eq13", KLEIN_NONABUT, lambda n: 4 * n + 2, lambda n: 4 * n),
    ("eq14", KLEIN_NONABUT, lambda n: 4 * n + 3, lambda n: 4 * n + 1),
)


def suite_lemma2(max_n: int = 2) -> SuiteReport:
    """Forced-edge reduction maps the larger dual onto the smaller one."""
    report = SuiteReport(suite="lemma2")
    t0 = time.monotonic()
    for n in range(1, max_n + 1):
        for name, kind, big, small in _LEMMA2_PAIRS:
            g_big = dual_graph(build_quartered(big(n), kind))
            g_small = dual_graph(build_quartered(small(n), kind))
            reduction = reduce_forced(g_big)
            iso = (not reduction.infeasible) and isomorphic_embedded(reduction.reduced, g_small)
            report.cases.append(_bool_case(f"{name}[n={n}]:iso", iso))
            report.cases.append(
                _case(f"{name}[n={n}]:count", engines.count(g_small), engines.count(g_big))
            )
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


# Factorization identities: (id, graph builder, upper kind, lower kind, order).
_LEMMA3_TABLE = (
    ("eq15", lambda n: build_holey_ar(2 * n, 4 * n, set_B(n)),
     KLEIN_ABUT, PINWHEEL, lambda n: 4 * n),
    ("eq16", lambda n: build_holey_ar(2 * n, 4 * n, set_A(n)),
     PINWHEEL, KLEIN_NONABUT, lambda n: 4 * n),
    ("eq17", lambda n: build_holey_ar_bar(2 * n, 4 * n - 1, set_A(n)),
     KLEIN_ABUT, PINWHEEL, lambda n: 4 * n - 1),
    ("eq18", lambda n: build_holey_ar_bar(2 * n, 4 * n - 1, set_B(n)),
     PINWHEEL, KLEIN_NONABUT, lambda n: 4 * n - 1),
)


def suite_lemma3(max_n: int = 2) -> SuiteReport:
    """Holey rectangles factor into quartered duals with the right product."""
    report = SuiteReport(suite="lemma3")
    t0 = time.monotonic()
    for n in range(1, max_n + 1):
        for name, builder, plus_kind, minus_kind, order in _LEMMA3_TABLE:
            g = builder(n)
            axis = find_diagonal_axis(g)
            if axis is None:
                report.cases.append(_bool_case(f"{name}[n={n}]:axis", False))
                continue
            result = apply_factorization(g, axis)
            report.cases.append(_case(f"{name}[n={n}]:w", n, result.w))
            plus_dual = dual_graph(build_quartered(order(n), plus_kind))
            minus_dual = dual_graph(build_quartered(order(n), minus_kind))
            report.cases.append(
                _bool_case(f"{name}[n={n}]:plus~{plus_kind}",
                           isomorphic_embedded(result.g_plus, plus_dual))
            )
            report.cases.append(
                _bool_case(f"{name}[n={n}]:minus~{minus_kind}",
                           isomorphic_embedded(result.g_minus, minus_dual))
            )
            product = (1 << n) * engines.count(plus_dual) * engines.count(minus_dual)
            report.cases.append(_case(f"{name}[n={n}]:identity", engines.count(g), product))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


_HOLEY_SHAPES = ((2, 4), (2, 5), (3, 5), (3, 6))


def suite_lemma4(trials: int = 20) -> SuiteReport:
    """Hole-position formula equals engine count on fixed and random instances."""
    report = SuiteReport(suite="lemma4")
    t0 = time.monotonic()
    rng = random.Random(_RANDOM_SEED)
    instances = [(3, 5, (1, 3, 5))]
    for m, n in _HOLEY_SHAPES:
        for _ in range(trials):
            instances.append((m, n, tuple(sorted(rng.sample(range(1, n + 1), m)))))
    for m, n, kept in instances:
        g = build_holey_ar(m, n, kept)
        cid = f"ar({m},{n})keep={','.join(map(str, kept))}"
        report.cases.append(_case(cid, lemma4_value(m, n, kept), engines.count(g)))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


def suite_lemma5(trials: int = 20) -> SuiteReport:
    """Bottomless variant of the hole-position formula, same scheme."""
    report = SuiteReport(suite="lemma5")
    t0 = time.monotonic()
    rng = random.Random(_RANDOM_SEED + 1)
    instances = [(3, 5, (3, 4, 6))]
    for m, n in _HOLEY_SHAPES:
        for _ in range(trials):
            instances.append((m, n, tuple(sorted(rng.sample(range(1, n + 2), m)))))
    for m, n, removed in instances:
        g = build_holey_ar_bar(m, n, removed)
        cid = f"arbar({m},{n})remove={','.join(map(str, removed))}"
        report.cases.append(_case(cid, lemma5_value(m, n, removed), engines.count(g)))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


def suite_lemma6(max_n: int = 50) -> SuiteReport:
    """Exact rational equality of the difference-product ratio identity."""
    report = SuiteReport(suite="lemma6")
    t0 = time.monotonic()
    for n in range(1, max_n + 1):
        report.cases.append(_case(f"n={n}", lemma6_rhs(n), lemma6_lhs(n)))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


def suite_factorization(max_n: int = 2) -> SuiteReport:
    """The product identity itself, on the 4-cycle and all holey rectangles."""
    report = SuiteReport(suite="factorization")
    t0 = time.monotonic()
    targets: list[tuple[str, EmbeddedGraph]] = [
        ("square", EmbeddedGraph.from_points([(0, 0), (0, 1), (1, 0), (1, 1)]))
    ]
    for n in range(1, max_n + 1):
        targets.append((f"ar({2*n},{4*n})B{n}", build_holey_ar(2 * n, 4 * n, set_B(n))))
        targets.append((f"ar({2*n},{4*n})A{n}", build_holey_ar(2 * n, 4 * n, set_A(n))))
        targets.append(
            (f"arbar({2*n},{4*n-1})A{n}", build_holey_ar_bar(2 * n, 4 * n - 1, set_A(n)))
        )
        targets.append(
            (f"arbar({2*n},{4*n-1})B{n}", build_holey_ar_bar(2 * n, 4 * n - 1, set_B(n)))
        )
    for name, g in targets:
        axis = find_diagonal_axis(g)
        if axis is None:
            report.cases.append(_bool_case(f"{name}:axis", False))
            continue
        result = apply_factorization(g, axis)
        product = (1 << result.w)
        product *= engines.count(result.g_plus) * engines.count(result.g_minus)
        report.cases.append(_case(name, engines.count(g), product))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


def random_grid_subgraph(rng: random.Random, side: int = 6) -> EmbeddedGraph:
    """Induced subgraph of the side x side grid with each vertex kept at 1/2."""
    cells = [(i, j) for i in range(side) for j in range(side) if rng.random() < 0.5]
    return EmbeddedGraph.from_points(cells)


def suite_engines(trials: int = 300) -> SuiteReport:
    """All engines agree on random induced subgraphs of the 6x6 grid."""
    report = SuiteReport(suite="engines")
    t0 = time.monotonic()
    rng = random.Random(_RANDOM_SEED)
    for k in range(trials):
        g = random_grid_subgraph(rng)
        brute = engines.count_brute(g)
        report.cases.append(_case(f"rnd#{k:03d}:dp", brute, engines.count_profile_dp(g)))
        if engines.fkt_supported(g):
            report.cases.append(_case(f"rnd#{k:03d}:fkt", brute, engines.count_fkt(g)))
    report.wall_ms = (time.monotonic() - t0) * 1000
    return report


def run_suite(name: str, max_order: int = 12, max_n: int | None = None) -> SuiteReport:
    """Run one named suite with its bound (max_order for theorem1, max_n otherwise)."""
    if name == "theorem1":
        return suite_theorem1(max_order=max_order)
    if name == "lemma1":
        return suite_lemma1(max_n=max_n or 2)
    if name == "lemma2":
        return suite_lemma2(max_n=max_n or 2)
    if name == "lemma3":
        return suite_lemma3(max_n=max_n or 2)
    if name == "lemma4":
        return suite_lemma4()
    if name == "lemma5":
        return suite_lemma5()
    if name == "lemma6":
        return suite_lemma6(max_n=max_n or 50)
    if name == "factorization":
        return suite_factorization(max_n=max_n or 2)
    if name == "engines":
        return suite_engines()
    raise ValueError(f"unknown suite {name!r}")


def run_all(max_order: int = 12) -> list[SuiteReport]:
    """Every suite at its default bound, theorem1 at max_order."""
    return [run_suite(name, max_order=max_order) for name in SUITE_NAMES]


def reports_to_json(reports: list[SuiteReport]) -> str:
    """Deterministic JSON for one report or a combined run."""
    if len(reports) == 1:
        payload: dict = reports[0].to_json_dict()
    else:
        payload = {
            "suite": "all",
            "ok": all(r.ok for r in reports),
            "suites": [r.to_json_dict() for r in reports],
        }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def reports_to_csv(reports: list[SuiteReport]) -> str:
    lines = ["suite,case,expected,actual,ok"]
    for r in reports:
        for c in r.cases:
            lines.append(f"{r.suite},{c.case_id},{c.expected},{c.actual},{str(c.ok).lower()}")
    return "\n".join(lines)
