"""Upper bounds on the minimum decoding cut and lower bounds on
undecodable-subgraph counts, each verified against exact values.

Every bound is reported as a row carrying its hypothesis check, the raw
rational (or irrational) value, the integer form justified by integrality
of the exact quantity, and a satisfied flag. Inapplicable bounds are kept
as skipped rows with a reason, so reports stay auditable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import _kernels
from .analysis import (
    DEFAULT_ENUMERATION_CAP,
    DeletionSpectrum,
    SizeCapError,
    deletion_spectrum,
    min_dcut,
    _edge_arrays,
)
from .decodability import Parity, is_decodable_structural
from .multigraph import MultiGraph

MAX_CUT_VERTEX_CAP = 30


class InvariantViolation(RuntimeError):
    """A proven inequality failed against exact values."""


@dataclass(frozen=True)
class MaxCutResult:
    size: int
    partition: frozenset[int]


@dataclass(frozen=True)
class BoundRow:
    """One verified inequality.

    ``kind`` is "b_upper", "b_lower", or "u_lower"; ``bound`` is the
    integer form of ``raw`` (floored for upper bounds, ceiled for lower
    bounds). Skipped rows have ``applicable`` False and no verdict.
    """

    lemma: str
    kind: str
    applicable: bool
    note: str = ""
    raw: Fraction | float | None = None
    bound: int | None = None
    exact: int | None = None
    satisfied: bool | None = None


@dataclass(frozen=True)
class BoundsReport:
    parity: Parity
    exact_b: int
    rows: tuple[BoundRow, ...]


@dataclass(frozen=True)
class UndecodabilityBoundInputs:
    """Degree statistics feeding the undecodable-count bounds.

    theta = b(n+1) + n - 2m; alpha counts vertices of incidence degree
    exactly b; beta those of degree at least b + 2; mu is one more than
    the worst parallel multiplicity or per-vertex loop count.
    """

    theta: int
    alpha: int
    beta: int
    mu: int


def max_cut(g: MultiGraph) -> MaxCutResult:
    """Exact maximum number of non-loop edges across any vertex bipartition."""
    if g.n > MAX_CUT_VERTEX_CAP:
        raise SizeCapError(
            f"n={g.n} vertices exceeds the max-cut scan cap ({MAX_CUT_VERTEX_CAP})"
        )
    if g.n == 1:
        return MaxCutResult(size=0, partition=frozenset({1}))
    eu, ev = _edge_arrays(g)
    size, side = _kernels.max_cut_scan(eu, ev, g.n)
    part = frozenset(v for v in range(1, g.n + 1) if not (side >> (v - 1)) & 1)
    return MaxCutResult(size=int(size), partition=part)


def _upper(lemma: str, raw: Fraction | float, exact: int, note: str = "") -> BoundRow:
    bound = math.floor(raw)
    return BoundRow(
        lemma=lemma,
        kind="b_upper",
        applicable=True,
        note=note,
        raw=raw,
        bound=bound,
        exact=exact,
        satisfied=bound >= exact,
    )


def _skip(lemma: str, kind: str, reason: str) -> BoundRow:
    return BoundRow(lemma=lemma, kind=kind, applicable=False, note=reason)


def b_upper_bounds(g: MultiGraph, parity: Parity) -> BoundsReport:
    """All applicable upper bounds on the minimum decoding-cut size."""
    exact = min_dcut(g, parity).b
    profile = g.degree_profile()
    n, m = g.n, g.m
    loops = profile.total_loops
    delta = profile.min_incidence_degree
    rows: list[BoundRow] = []

    if parity is Parity.EVEN:
        rows.append(_upper("min_L_delta", Fraction(min(loops, delta)), exact))
        if is_decodable_structural(g, Parity.EVEN):
            # decodable graphs have a loop, so n * delta <= 2m - 1 strictly;
            # the raw bound (2m-1)/n equals 2m/n - 1 whenever n divides 2m
            rows.append(
                _upper(
                    "edge_lem_a",
                    Fraction(2 * m - 1, n),
                    exact,
                    note="min-degree route; (2m-1)/n",
                )
            )
            rows.append(_upper("edge_lem_b", Fraction(2 * m, n + 1), exact))
        else:
            reason = "graph is undecodable under even characteristic"
            rows.append(_skip("edge_lem_a", "b_upper", reason))
            rows.append(_skip("edge_lem_b", "b_upper", reason))
        rows.append(_lambda_lower_bound(g, loops, exact))
    else:
        rows.append(_upper("delta_I", Fraction(delta), exact))
        rows.append(_upper("two_m_over_n", Fraction(2 * m, n), exact))
        if g.n <= MAX_CUT_VERTEX_CAP:
            gamma = max_cut(g).size
            rows.append(_upper("m_minus_maxcut", Fraction(m - gamma), exact))
        else:
            rows.append(_skip("m_minus_maxcut", "b_upper", "n over the max-cut cap"))
        rows.extend(_edwards_rows(g, loops, exact))

    return BoundsReport(parity=parity, exact_b=exact, rows=tuple(rows))


def _lambda_lower_bound(g: MultiGraph, loops: int, exact: int) -> BoundRow:
    if g.n < 2:
        return _skip("lambda_lower", "b_lower", "single vertex has no edge cut")
    if not g.is_connected():
        return _skip("lambda_lower", "b_lower", "graph is disconnected")
    lam = g.edge_connectivity()
    if loops < lam:
        return _skip(
            "lambda_lower", "b_lower", f"needs loop count >= edge connectivity ({lam})"
        )
    return BoundRow(
        lemma="lambda_lower",
        kind="b_lower",
        applicable=True,
        raw=Fraction(lam),
        bound=lam,
        exact=exact,
        satisfied=lam <= exact,
    )


def _edwards_rows(g: MultiGraph, loops: int, exact: int) -> list[BoundRow]:
    """Max-cut-based bounds; with loops present only the loop-free
    reduction is asserted, flagged by distinct lemma names."""
    n, m = g.n, g.m
    rows: list[BoundRow] = []
    if loops == 0:
        raw = m / 2 - (math.sqrt(8 * m + 1) - 1) / 8
        rows.append(_upper("edwards_general", raw, exact))
        if g.is_connected():
            rows.append(
                _upper("edwards_connected", Fraction(m, 2) - Fraction(n - 1, 4), exact)
            )
        else:
            rows.append(
                _skip("edwards_connected", "b_upper", "graph is disconnected")
            )
    else:
        reduced = m - loops
        raw = m - reduced / 2 - (math.sqrt(8 * reduced + 1) - 1) / 8
        rows.append(
            _upper(
                "edwards_general_reduced",
                raw,
                exact,
                note=f"applied to the loop-free reduction (m'={reduced})",
            )
        )
        loop_free = g.delete_edges(e.id for e in g.loop_edges())
        if loop_free.is_connected():
            rows.append(
                _upper(
                    "edwards_connected_reduced",
                    Fraction(m) - Fraction(reduced, 2) - Fraction(n - 1, 4),
                    exact,
                    note=f"applied to the loop-free reduction (m'={reduced})",
                )
            )
        else:
            rows.append(
                _skip(
                    "edwards_connected_reduced",
                    "b_upper",
                    "loop-free reduction is disconnected",
                )
            )
    return rows


def undecodability_bound_inputs(
    g: MultiGraph, spectrum: DeletionSpectrum
) -> UndecodabilityBoundInputs:
    profile = g.degree_profile()
    b = spectrum.min_dcut_size()
    theta = b * (g.n + 1) + g.n - 2 * g.m
    alpha = sum(1 for d in profile.incidence_degree if d == b)
    beta = sum(1 for d in profile.incidence_degree if d >= b + 2)
    mu = max(profile.max_parallel_multiplicity + 1, profile.max_loop_count + 1)
    return UndecodabilityBoundInputs(theta=theta, alpha=alpha, beta=beta, mu=mu)


def _lower(
    lemma: str, raw: Fraction | int, exact: int, note: str = ""
) -> BoundRow:
    frac = Fraction(raw)
    bound = math.ceil(frac)
    return BoundRow(
        lemma=lemma,
        kind="u_lower",
        applicable=True,
        note=note,
        raw=frac,
        bound=bound,
        exact=exact,
        satisfied=Fraction(exact) >= frac,
    )


def u_lower_bounds(
    g: MultiGraph, parity: Parity, spectrum: DeletionSpectrum
) -> tuple[BoundRow, ...]:
    """Lower bounds on u_x verified against the exact spectrum.

    The degree-counting family applies under even characteristic, the
    regular-graph bound under odd; the propagation bound is emitted from
    the minimum cut index. Skipped hypotheses become skipped rows.
    """
    if spectrum.parity is not parity:
        raise ValueError(f"spectrum parity {spectrum.parity} does not match {parity}")
    if spectrum.m != g.m:
        raise ValueError("spectrum does not belong to this graph")
    n, m = g.n, g.m
    b = spectrum.min_dcut_size()
    rows: list[BoundRow] = []

    if parity is Parity.EVEN:
        # the degree-count family assumes at least two packets: with n = 1
        # the all-loops deletion coincides with isolating the only vertex
        eligible = spectrum.c[0] == 1 and n >= 2
        inputs = undecodability_bound_inputs(g, spectrum)
        theta = inputs.theta
        if eligible:
            rows.append(_lower("u_at_min_cut", theta + 1, spectrum.undecodable_count(b)))
        else:
            reason = "graph is undecodable" if spectrum.c[0] == 0 else "single-vertex system"
            rows.append(_skip("u_at_min_cut", "u_lower", reason))

        equality = eligible and spectrum.undecodable_count(b) == theta + 1
        y_cap = min(b - max(inputs.mu - 1, 0) - 1, m - b)
        if equality and y_cap >= 1:
            for y in range(1, y_cap + 1):
                raw = (theta + 1) * comb(m - b, y) + (n - theta) * comb(m - b - 1, y - 1)
                rows.append(
                    _lower(
                        f"u_near_min_cut_y{y}",
                        raw,
                        spectrum.undecodable_count(b + y),
                    )
                )
        else:
            reason = (
                "needs u_b to meet the degree-count bound exactly"
                if not equality
                else "no y satisfies 1 <= y <= b - max(multiplicity, loop max) - 1"
            )
            rows.append(_skip("u_near_min_cut", "u_lower", reason))

        u_b = spectrum.undecodable_count(b)
        for z in range(1, m - b + 1):
            raw = Fraction(u_b * comb(m - b, z), comb(b + z, z))
            rows.append(_lower(f"u_propagation_z{z}", raw, spectrum.undecodable_count(b + z)))

        x0 = 2 * b - inputs.mu
        if equality and 0 <= x0 <= m:
            u_x0 = spectrum.undecodable_count(x0)
            for z in range(1, m - x0 + 1):
                raw = Fraction(u_x0 * comb(m - x0, z), comb(x0 + z, z))
                rows.append(
                    _lower(f"u_propagation_high_z{z}", raw, spectrum.undecodable_count(x0 + z))
                )
        elif not equality:
            rows.append(
                _skip("u_propagation_high", "u_lower", "needs the exact-equality hypothesis")
            )
        else:
            rows.append(
                _skip("u_propagation_high", "u_lower", f"start index {x0} outside 0..{m}")
            )
    else:
        decodable = spectrum.c[0] == 1
        profile = g.degree_profile()
        if (
            decodable
            and n >= 4
            and m % n == 0
            and m // n >= 2
            and profile.min_incidence_degree == 2 * (m // n)
        ):
            r = m // n
            rows.append(_lower("u_regular_2r", n, spectrum.undecodable_count(2 * r)))
        else:
            rows.append(
                _skip(
                    "u_regular_2r",
                    "u_lower",
                    "needs a decodable 2r-regular graph with r >= 2, n >= 4",
                )
            )
    return tuple(rows)


@dataclass(frozen=True)
class VerificationReport:
    reports: tuple[BoundsReport, ...]

    def all_rows(self) -> list[tuple[Parity, BoundRow]]:
        return [(rep.parity, row) for rep in self.reports for row in rep.rows]


def verify_all(g: MultiGraph, *, cap: int = DEFAULT_ENUMERATION_CAP) -> VerificationReport:
    """Exact spectra plus both bound suites for both parities.

    Raises InvariantViolation naming the first failed lemma; also
    cross-checks the subset-scan minimum cut against the spectrum.
    """
    reports = []
    for parity in (Parity.EVEN, Parity.ODD):
        spectrum = deletion_spectrum(g, parity, cap=cap)
        report = b_upper_bounds(g, parity)
        if report.exact_b != spectrum.min_dcut_size():
            raise InvariantViolation(
                f"{parity.value}: subset-scan b={report.exact_b} disagrees with "
                f"spectrum b={spectrum.min_dcut_size()}"
            )
        rows = report.rows + u_lower_bounds(g, parity, spectrum)
        for row in rows:
            if row.applicable and row.satisfied is False:
                raise InvariantViolation(
                    f"{parity.value}: bound {row.lemma} violated "
                    f"(bound={row.bound}, exact={row.exact})"
                )
        reports.append(BoundsReport(parity=parity, exact_b=report.exact_b, rows=rows))
    return VerificationReport(reports=tuple(reports))


def report_csv(reports: list[BoundsReport] | tuple[BoundsReport, ...]) -> str:
    """CSV with columns lemma_id, hypothesis_ok, bound_value, exact_value, satisfied."""
    lines = ["lemma_id,hypothesis_ok,bound_value,exact_value,satisfied"]
    for rep in reports:
        for row in rep.rows:
            lemma_id = f"{rep.parity.value}.{row.lemma}"
            bound = "" if row.bound is None else str(row.bound)
            exact = "" if row.exact is None else str(row.exact)
            sat = "" if row.satisfied is None else str(row.satisfied).lower()
            lines.append(
                f"{lemma_id},{str(row.applicable).lower()},{bound},{exact},{sat}"
            )
    return "\n".join(lines) + "\n"
