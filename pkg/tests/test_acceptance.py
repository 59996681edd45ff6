"""Acceptance suite: one test per release criterion, one printed verdict each.

Run with ``pytest tests/test_acceptance.py -s`` to see the verdict lines.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from fractions import Fraction
from math import comb

import numpy as np

from graphcode import (
    FieldSpec,
    Parity,
    algorithm1,
    algorithm2,
    decode,
    decoding_probability,
    deletion_spectrum,
    encode,
    erase,
    is_decodable_rank,
    is_decodable_structural,
    is_decodable_trace,
    min_dcut,
    monte_carlo_probability,
    scheme_to_graph,
    spectrum_by_recurrence,
    uncoded,
    verify_all,
)
from graphcode import DecodingError
from graphcode.codec import surviving_subgraph
from conftest import (
    MIN_CUT_TABLE,
    PROBABILITY_TABLES,
    random_graph,
    small_graphs,
)

GF2, GF3, GF5 = FieldSpec(2), FieldSpec(3), FieldSpec(5)

PROBABILITY_TOLERANCE = 5e-7
CLOSED_FORM_TOLERANCE = 1e-12


def _verdict(number: int, label: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {number:2d} [{label}]: {status}{suffix}")
    assert ok, f"acceptance criterion {number} failed: {label} {suffix}"


def test_criterion_1_min_cut_table(suite_graphs):
    start = time.time()
    mismatches = []
    for label, g in suite_graphs.items():
        got = (min_dcut(g, Parity.EVEN).b, min_dcut(g, Parity.ODD).b)
        if got != MIN_CUT_TABLE[label]:
            mismatches.append((label, got, MIN_CUT_TABLE[label]))
    _verdict(
        1,
        "minimum-cut table, 12 graphs x 2 parities",
        not mismatches,
        f"{time.time() - start:.1f}s" if not mismatches else str(mismatches),
    )


def test_criterion_2_probability_tables(suite_graphs, suite_spectra):
    start = time.time()
    worst = 0.0
    bad = []
    for p, table in PROBABILITY_TABLES.items():
        for label, (even_ref, odd_ref) in table.items():
            even = decoding_probability(suite_spectra[(label, Parity.EVEN)], p)
            odd = decoding_probability(suite_spectra[(label, Parity.ODD)], p)
            for got, ref in ((even, even_ref), (odd, odd_ref)):
                worst = max(worst, abs(got - ref))
                if abs(got - ref) >= PROBABILITY_TOLERANCE:
                    bad.append((label, p, got, ref))
    _verdict(
        2,
        "72 decoding probabilities within 5e-7",
        not bad,
        f"max |delta| = {worst:.2e}, {time.time() - start:.1f}s" if not bad else str(bad[:4]),
    )


def test_criterion_3_construction_optimality():
    ok = True
    details = []
    for loops in (3, 4):
        g = scheme_to_graph(algorithm1(9, 2, 3, loops))
        s = deletion_spectrum(g, Parity.EVEN)
        b = min_dcut(g, Parity.EVEN).b
        if not (b == 3 and s.undecodable_count(3) == 4):
            ok = False
            details.append(f"alg1 loops={loops}: b={b}, u_3={s.undecodable_count(3)}")
    g = scheme_to_graph(algorithm2(9, 2))
    s = deletion_spectrum(g, Parity.ODD)
    b = min_dcut(g, Parity.ODD).b
    if not (b == 4 and s.undecodable_count(4) == 9):
        ok = False
        details.append(f"alg2: b={b}, u_4={s.undecodable_count(4)}")
    _verdict(3, "construction optimality (b and u at the cut)", ok, "; ".join(details))


def test_criterion_4_uncoded_closed_form():
    worst = 0.0
    for n, r in ((9, 2), (3, 3), (5, 1)):
        g = scheme_to_graph(uncoded(n, r))
        for parity in (Parity.EVEN, Parity.ODD):
            s = deletion_spectrum(g, parity)
            for i in range(101):
                p = i / 100
                expected = (1 - (1 - p) ** r) ** n
                worst = max(worst, abs(decoding_probability(s, p) - expected))
    _verdict(
        4,
        "uncoded closed form on 101-point grids",
        worst < CLOSED_FORM_TOLERANCE,
        f"max |delta| = {worst:.2e}",
    )


def _criteria_agree(g) -> bool:
    structural_even = is_decodable_structural(g, Parity.EVEN)
    structural_odd = is_decodable_structural(g, Parity.ODD)
    return (
        structural_even == is_decodable_rank(g, GF2)
        and structural_odd
        == is_decodable_rank(g, GF3)
        == is_decodable_rank(g, GF5)
        == is_decodable_trace(g)
    )


def test_criterion_5_criteria_equivalence():
    start = time.time()
    exhaustive = 0
    disagreements = 0
    for g in small_graphs(5, 6):
        exhaustive += 1
        if not _criteria_agree(g):
            disagreements += 1
    rand = random.Random(20260811)
    for _ in range(10000):
        if not _criteria_agree(random_graph(rand, 12, 14)):
            disagreements += 1
    _verdict(
        5,
        f"structural/rank/trace agreement on {exhaustive} exhaustive + 10000 random graphs",
        disagreements == 0,
        f"{time.time() - start:.1f}s",
    )


def test_criterion_6_recurrence_oracle():
    start = time.time()
    checked_even = checked_odd = 0
    failures = 0
    memo: dict = {}
    for g in small_graphs(5, 6):
        classes = Counter(e.pair() for e in g.edges if not e.is_loop)
        if not classes:
            continue
        has_parallel = any(k >= 2 for k in classes.values())
        bridges = [
            pair
            for pair, k in classes.items()
            if k == 1 and not g.edge_in_cycle(next(
                e.id for e in g.edges if not e.is_loop and e.pair() == pair
            ))
        ]
        if not has_parallel and not bridges:
            continue
        exact = deletion_spectrum(g, Parity.EVEN)
        if spectrum_by_recurrence(g, Parity.EVEN, _memo=memo).c != exact.c:
            failures += 1
        checked_even += 1
        if bridges:
            exact_odd = deletion_spectrum(g, Parity.ODD)
            if spectrum_by_recurrence(g, Parity.ODD, _memo=memo).c != exact_odd.c:
                failures += 1
            checked_odd += 1
    _verdict(
        6,
        f"recurrence = enumeration on {checked_even} even + {checked_odd} odd reducible graphs",
        failures == 0,
        f"{time.time() - start:.1f}s",
    )


def test_criterion_7_bound_suite(suite_graphs):
    start = time.time()
    failures = []
    for label, g in suite_graphs.items():
        try:
            verify_all(g)
        except Exception as exc:  # noqa: BLE001 - collected for the verdict
            failures.append(f"{label}: {exc}")
    rand = random.Random(31415)
    for i in range(500):
        g = random_graph(rand, 8, 12)
        try:
            verify_all(g)
        except Exception as exc:  # noqa: BLE001
            failures.append(f"random[{i}]: {exc}")
    _verdict(
        7,
        "bound suite on 12 reference + 500 random graphs",
        not failures,
        f"{time.time() - start:.1f}s" if not failures else failures[0],
    )


def test_criterion_8_codec_round_trip():
    start = time.time()
    rand = random.Random(2718)
    rng = np.random.default_rng(2718)
    schemes = {
        "ring+loops": algorithm1(9, 2, 3, 3),
        "circulant": algorithm2(9, 2),
        "uncoded": uncoded(9, 2),
    }
    trials_per_pair = 1000
    mismatches = 0
    for name, scheme in schemes.items():
        for field in (GF2, GF3, GF5):
            parity = Parity.from_field(field)
            packets = rng.integers(0, field.p, size=(scheme.n, 16))
            encoded = encode(scheme, packets, field)
            for t in range(trials_per_pair):
                batch = erase(encoded, rand.random(), seed=t, stream_index=t)
                expected = is_decodable_structural(
                    surviving_subgraph(batch, scheme), parity
                )
                try:
                    recovered = decode(batch, scheme, field)
                except DecodingError:
                    if expected:
                        mismatches += 1
                else:
                    if not expected or not (recovered == packets).all():
                        mismatches += 1
    _verdict(
        8,
        "codec round trip, 1000 trials x 3 schemes x 3 fields",
        mismatches == 0,
        f"{time.time() - start:.1f}s",
    )


def test_criterion_9_monte_carlo_consistency():
    start = time.time()
    cases = [
        (algorithm1(9, 2, 3, 3), Parity.EVEN, 0.607826),
        (algorithm2(9, 2), Parity.ODD, 0.703957),
    ]
    ok = True
    details = []
    for scheme, parity, reference in cases:
        g = scheme_to_graph(scheme)
        est = monte_carlo_probability(g, parity, 0.6, 10**6, seed=20260811)
        repeat = monte_carlo_probability(g, parity, 0.6, 10**6, seed=20260811)
        within = abs(est.estimate - reference) <= 4 * est.std_error
        if not within or est != repeat:
            ok = False
        details.append(f"{parity.value}: {est.estimate:.6f} vs {reference}")
    _verdict(
        9,
        "Monte Carlo within 4 standard errors, reproducible",
        ok,
        "; ".join(details) + f", {time.time() - start:.1f}s",
    )


def test_criterion_10_spectrum_monotonicity(suite_spectra):
    start = time.time()
    violations = 0

    def check(spectrum_even, spectrum_odd) -> int:
        bad = 0
        for s in (spectrum_even, spectrum_odd):
            ratios = [Fraction(s.c[x], comb(s.m, x)) for x in range(s.m + 1)]
            if any(a < b for a, b in zip(ratios, ratios[1:])):
                bad += 1
        if any(o < e for o, e in zip(spectrum_odd.c, spectrum_even.c)):
            bad += 1
        return bad

    labels = {key[0] for key in suite_spectra}
    for label in labels:
        violations += check(
            suite_spectra[(label, Parity.EVEN)], suite_spectra[(label, Parity.ODD)]
        )
    for g in small_graphs(4, 6):
        violations += check(
            deletion_spectrum(g, Parity.EVEN), deletion_spectrum(g, Parity.ODD)
        )
    rand = random.Random(31415)
    for _ in range(500):
        g = random_graph(rand, 8, 12)
        violations += check(
            deletion_spectrum(g, Parity.EVEN), deletion_spectrum(g, Parity.ODD)
        )
    _verdict(
        10,
        "normalized monotonicity and odd >= even dominance",
        violations == 0,
        f"{time.time() - start:.1f}s",
    )
