"""Acceptance gate: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` (or plain ``pytest``;
the verdict lines are written past output capture).
"""

from __future__ import annotations

import random
import time
from collections import Counter
from fractions import Fraction

import pytest

import oracles
from turanlab import cli, fbound, moves
from turanlab.counting import (
    count_copies,
    count_embeddings,
    matching_embeddings,
    spectral_radius,
    walk_count,
)
from turanlab.enumeration import cache_filename, enumerate_f_free, enumerate_graphs, generalized_turan
from turanlab.graph import clique_number
from turanlab.graph6 import graph6_encode, read_graph6_file
from turanlab.multipartite import weak_t_check
from turanlab.presets import complete, cycle, path
from turanlab.turan import complete_multipartite, compositions

pytestmark = pytest.mark.acceptance


@pytest.fixture
def verdict(capsys):
    def emit(label: str, ok: bool, detail: str, elapsed: float) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail} ({elapsed:.1f}s)")

    return emit


@pytest.fixture(scope="module")
def triangle_free_cache(tmp_path_factory):
    return tmp_path_factory.mktemp("g6cache")


def test_criterion_1_gps_reproduction(verdict, triangle_free_cache):
    t0 = time.perf_counter()
    K3 = complete(3)
    cases = [(path(3), "P3", range(4, 10))] + [
        (H, name, range(H.n + 1, 10)) for H, name in ((path(4), "P4"), (path(5), "P5"), (cycle(4), "C4"))
    ]
    bad = []
    for H, name, ns in cases:
        for n in ns:
            rep = generalized_turan(n, H, K3, cache_dir=triangle_free_cache)
            if not (rep.ex_value == rep.turan_value and rep.turan_is_unique):
                bad.append((name, n, rep.ex_value, rep.turan_value, rep.extremal_count))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    verdict("criterion 1 (ex(n,H,K3) = N(H,T2(n)), unique, H in P3,P4,P5,C4, n<=9)", ok,
            f"{len(bad)} failures {bad[:3]}", elapsed)
    assert ok


def test_criterion_2a_verbatim_formulas_match_oracle(verdict):
    t0 = time.perf_counter()
    sweep = moves.move_delta_sweep([3, 4, 5], 8, 24, variant="verbatim")
    bad = [m for m in sweep if not m.oracle_match]
    elapsed = time.perf_counter() - t0
    groups = Counter(g.split(":")[1] for m in bad for g in m.mismatched_groups)
    ok = not bad and elapsed < 300
    verdict("criterion 2a (verbatim phi-psi equals DP difference, k-1 in 3..5, sizes<=8, n<=24)", ok,
            f"{len(bad)}/{len(sweep)} tuples mismatch; groups {dict(sorted(groups.items()))}", elapsed)
    assert ok


def test_criterion_2b_mismatches_localised_and_flagged(verdict, tmp_path):
    t0 = time.perf_counter()
    sweep = moves.move_delta_sweep([3, 4, 5], 8, 24, variant="verbatim")
    unlocalised = [m for m in sweep if not m.oracle_match and not m.mismatched_groups]
    status = cli.main(["move-delta", "--k", "4..6", "--format", "json", "-o", str(tmp_path / "md.json")])
    expected = cli.EXIT_MISMATCH if any(not m.oracle_match for m in sweep) else cli.EXIT_OK
    corrected = moves.move_delta_sweep([3, 4, 5], 8, 24, variant="corrected")
    corrected_bad = sum(not m.oracle_match for m in corrected)
    elapsed = time.perf_counter() - t0
    ok = not unlocalised and status == expected and corrected_bad == 0 and elapsed < 300
    verdict("criterion 2b (every mismatch localised to a case group, exit status 2)", ok,
            f"unlocalised {len(unlocalised)}, exit {status}, corrected-variant mismatches {corrected_bad}", elapsed)
    assert ok


def test_criterion_3a_closed_form(verdict):
    t0 = time.perf_counter()
    wrong = [k for k in range(4, 51) if fbound.f_k_theta(k, 0).value != fbound.printed_closed_form(k)]
    elapsed = time.perf_counter() - t0
    ok = not wrong
    verdict("criterion 3a (f(k,0) = (4k^4-24k^3+111k^2-163k+87)/(k-1)^4, k=4..50)", ok,
            f"{len(wrong)} of 47 values differ; f(4,0) evaluates to {fbound.f_k0(4)}", elapsed)
    assert ok


def test_criterion_3b_f40_value(verdict):
    t0 = time.perf_counter()
    value = fbound.f_k_theta(4, 0).value
    ok = value == Fraction(699, 81)
    verdict("criterion 3b (f(4,0) = 699/81)", ok, f"exact value {value}", time.perf_counter() - t0)
    assert ok


def test_criterion_3c_positivity_and_minimum(verdict):
    t0 = time.perf_counter()
    rep = fbound.f_k0_positive_scan(10**4, closed_form_upto=0)
    elapsed = time.perf_counter() - t0
    ok = rep.all_positive and rep.min_at_4 and elapsed < 1.0
    verdict("criterion 3c (f(k,0) > 0, minimum at k=4, k<=10^4, under 1s)", ok,
            f"min {rep.minimum} at k={rep.argmin}", elapsed)
    assert ok


def test_criterion_4_weak_t_scans(verdict):
    t0 = time.perf_counter()
    bad = []
    for k in range(3, 7):
        for n in range(k - 1, 41):
            rep = weak_t_check(2, k, n)
            if not rep.balanced_is_unique_maximizer:
                bad.append((k, n, rep.maximizers))
    table = [weak_t_check(6, 4, n) for n in range(12, 49)]
    findings = [(r.n, r.maximizers) for r in table if not r.balanced_is_unique_maximizer]
    recorded = all(r.max_value >= r.balanced_value and r.maximizers for r in table)
    elapsed = time.perf_counter() - t0
    ok = not bad and recorded and len(table) == 37 and elapsed < 120
    verdict("criterion 4 (l=2 balanced unique for k=3..6, n<=40; l=6,k=4 table n=12..48)", ok,
            f"l=2 failures {len(bad)}; l=6 non-balanced maximisers at {findings or 'no n'}", elapsed)
    assert ok


def test_criterion_5_walk_spectral_suite(verdict):
    t0 = time.perf_counter()
    graphs = [G for n in range(1, 9) for G in enumerate_graphs(n)]
    rng = random.Random(20240605)
    graphs += [oracles.random_graph(rng.randint(1, 12), rng.random(), rng) for _ in range(1000)]
    paths = {ell: path(ell) for ell in range(2, 7)}
    bad = []
    for G in graphs:
        walks = [walk_count(G, k) for k in range(6)]
        for ell, P in paths.items():
            if 2 * count_copies(P, G) > walks[ell - 1]:
                bad.append(("paths", G, ell))
        mu = spectral_radius(G)
        omega = clique_number(G)
        for r in range(2, 7):
            bound = (omega - 1) / omega * walks[r - 1]
            if mu**r > bound * (1 + 1e-6) + 1e-9:
                bad.append(("clique", G, r))
        for ell in range(2, 7):
            if walks[ell - 1] / G.n > mu ** (ell - 1) * (1 + 1e-6) + 1e-9:
                bad.append(("mean", G, ell))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    verdict("criterion 5 (2N(P_l) <= W_{l-1}; mu^r <= (w-1)/w W_{r-1}; W_{l-1}/n <= mu^{l-1})", ok,
            f"{len(graphs)} graphs, {len(bad)} violations", elapsed)
    assert ok


def test_criterion_6_matching_embedding_inequality(verdict):
    t0 = time.perf_counter()
    K3 = complete(3)
    checked = 0
    bad = []
    for n in range(1, 10):
        for G in enumerate_f_free(n, K3):
            for k in range(1, n // 2 + 1):
                even = count_embeddings(path(2 * k), G)
                # P_{2k} <= 2^{1-k} I_k   <=>   2^{k-1} P_{2k} <= I_k
                if Fraction(even) > Fraction(matching_embeddings(G, k), 2 ** (k - 1)):
                    bad.append((graph6_encode(G), 2 * k))
                checked += 1
                if 2 * k + 1 <= n:
                    odd = count_embeddings(path(2 * k + 1), G)
                    if Fraction(odd) > Fraction(matching_embeddings(G, k, plus=True), 2**k):
                        bad.append((graph6_encode(G), 2 * k + 1))
                    checked += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    verdict("criterion 6 (P_2k <= 2^{1-k} I_k, P_2k+1 <= 2^{-k} I_k+ on triangle-free n<=9)", ok,
            f"{checked} comparisons, {len(bad)} violations", elapsed)
    assert ok


def test_criterion_7_counting_oracle(verdict):
    t0 = time.perf_counter()
    rng = random.Random(7)
    pairs = []
    for _ in range(200):
        G = oracles.random_graph(rng.randint(1, 8), rng.random(), rng)
        H = oracles.random_graph(rng.randint(1, 6), rng.random(), rng)
        pairs.append((H, G))
    patterns = [path(ell) for ell in range(2, 7)] + [cycle(ell) for ell in range(3, 7)] + [
        complete(4), complete_multipartite([1, 3]), complete_multipartite([2, 3]), path(2).disjoint_union(path(2)),
    ]
    hosts = [complete_multipartite(p) for n in range(1, 9) for r in range(1, n + 1) for p in compositions(n, r)]
    pairs += [(H, G) for G in hosts for H in patterns]
    bad = []
    for H, G in pairs:
        exact = oracles.injections(H, G)
        aut = oracles.automorphisms(H)
        if count_embeddings(H, G) != exact or count_copies(H, G) != exact // aut:
            bad.append((graph6_encode(H), graph6_encode(G)))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    verdict("criterion 7 (count_embeddings/count_copies equal naive injection counts)", ok,
            f"{len(pairs)} pairs ({len(hosts)} multipartite hosts), {len(bad)} disagreements", elapsed)
    assert ok


def test_criterion_8_enumeration_correctness(verdict, tmp_path):
    t0 = time.perf_counter()
    expected = [1, 2, 4, 11, 34, 156, 1044]
    burnside = [oracles.burnside_class_count(n) for n in range(1, 8)]
    brute = [len(oracles.brute_force_classes(n)) for n in range(1, 6)]
    counts = [sum(1 for _ in enumerate_graphs(n, cache_dir=tmp_path)) for n in range(1, 8)]
    raw = (tmp_path / cache_filename(7, None)).read_bytes()
    reread = b"".join(graph6_encode(G) + b"\n" for G in read_graph6_file(tmp_path / cache_filename(7, None)))
    again = [sum(1 for _ in enumerate_graphs(n, cache_dir=tmp_path)) for n in range(1, 8)]
    elapsed = time.perf_counter() - t0
    ok = (
        counts == expected == burnside
        and brute == expected[:5]
        and raw == reread
        and again == counts
        and (tmp_path / cache_filename(7, None)).read_bytes() == raw
        and elapsed < 120
    )
    verdict("criterion 8 (class counts 1,2,4,11,34,156,1044; graph6 cache round trip)", ok,
            f"counts {counts}, cache bytes identical {raw == reread}", elapsed)
    assert ok
