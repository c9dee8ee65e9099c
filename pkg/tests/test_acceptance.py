"""Acceptance gate: one test per exit criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` or ``python tests/test_acceptance.py``.
"""

import csv
import io
import json
import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from conftest import random_unitary  # noqa: E402
from renyitherm import (  # noqa: E402
    INFINITY,
    ONE,
    ZERO,
    EnergySpectrum,
    eigh,
    embed_distribution,
    free_energy,
    gibbs_state,
    gibbs_state_quantum,
    log_partition,
    make_dist,
    relation_check,
    relation_limit_check,
    renyi,
    renyi_quantum,
)
from renyitherm.cli import EXIT_IDENTITY, EXIT_IO, EXIT_OK, EXIT_VALIDATION, fmt, main  # noqa: E402

SEED = 8_675_309
_START = time.perf_counter()


ACCEPTANCE_LINES = []


def report(name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def draw_order(rng, lo=0.1, hi=10.0, gap=1e-3):
    while True:
        q = float(rng.uniform(lo, hi))
        if abs(q - 1) > gap:
            return q


def full_support_dist(rng, n):
    return make_dist(rng.dirichlet(np.ones(n)) + 1e-300)


def test_ac1_identity_suite():
    rng = np.random.default_rng(SEED + 1)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        e = rng.uniform(0, 10, size=int(rng.integers(1, 65)))
        T0 = float(rng.uniform(0.1, 10))
        q = draw_order(rng)
        worst = max(worst, abs(relation_check(e, T0, q).residual))
    elapsed = time.perf_counter() - t0
    report("AC1 identity suite", worst <= 1e-9 and elapsed < 10, f"max|lhs-rhs| = {worst:.2e} (<= 1e-9), {elapsed:.2f}s (< 10s)")


def test_ac2_special_case_suite():
    rng = np.random.default_rng(SEED + 2)
    worst_f0 = worst_rel = 0.0
    for _ in range(200):
        p = full_support_dist(rng, int(rng.integers(1, 65)))
        T0 = float(rng.uniform(0.1, 10))
        e = embed_distribution(p, T0)
        worst_f0 = max(worst_f0, abs(free_energy(e, T0).F))
        q = draw_order(rng)
        r = relation_check(e, T0, q)
        T = r.T
        # with F(T0) = 0 the identity reads F(T) = -(T - T0) S_{T0/T}
        worst_rel = max(worst_rel, abs(free_energy(e, T).F + (T - T0) * renyi(p, T0 / T)), abs(r.residual))
    ok = worst_f0 <= 1e-10 and worst_rel <= 1e-9
    report("AC2 special-case suite", ok, f"max|F(T0)| = {worst_f0:.2e} (<= 1e-10), max|F(T) + (T-T0) S| = {worst_rel:.2e} (<= 1e-9)")


def test_ac3_limit_suite():
    steps = [0.1 * 2.0**-k for k in range(7)]
    gaps = [abs(r.gap) for r in relation_limit_check(EnergySpectrum([0.0, 1.0]), 1.0, steps)]
    monotone = all(a > b for a, b in zip(gaps, gaps[1:]))
    rng = np.random.default_rng(SEED + 3)
    worst = 0.0
    for _ in range(100):
        p = full_support_dist(rng, int(rng.integers(2, 40)))
        shannon = renyi(p, ONE)
        for eps in (1e-8, -1e-8):
            worst = max(worst, abs(renyi(p, 1 + eps) - shannon))
    ok = monotone and gaps[-1] <= 2e-3 and worst <= 1e-6
    report(
        "AC3 limit suite",
        ok,
        f"gaps monotone={monotone}, final gap = {gaps[-1]:.3e} (<= 2e-3), max|S(1+-1e-8) - S1| = {worst:.2e} (<= 1e-6)",
    )


def test_ac4_entropy_family_suite():
    rng = np.random.default_rng(SEED + 4)
    grid = [0.0, 1e-3, 0.1, 0.3, 0.5, 0.9, 0.999, 1.0, 1.000002, 1.001, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0, 200.0, math.inf]
    worst_mono = worst_uniform = 0.0
    bounds_ok = bracket_ok = True
    for _ in range(200):
        n = int(rng.integers(1, 65))
        w = rng.dirichlet(np.ones(n) * rng.uniform(0.05, 3))
        w[rng.random(n) < 0.2] = 0.0
        if w.sum() == 0:
            w[0] = 1.0
        p = make_dist(w)
        curve = [renyi(p, q) for q in grid]
        worst_mono = max(worst_mono, max((b - a for a, b in zip(curve, curve[1:])), default=0.0))
        bounds_ok &= all(0.0 <= s <= math.log(n) for s in curve)
        s0, sinf = renyi(p, ZERO), renyi(p, INFINITY)
        bracket_ok &= all(s0 + 1e-12 >= s >= sinf - 1e-12 for s in curve)
    for n in (1, 2, 3, 5, 7, 10, 33, 64, 1000):
        u = make_dist(np.ones(n))
        worst_uniform = max(worst_uniform, max(abs(renyi(u, q) - math.log(n)) for q in grid))
    ok = worst_mono <= 1e-12 and bounds_ok and worst_uniform <= 1e-12 and bracket_ok
    report(
        "AC4 entropy-family suite",
        ok,
        f"max increase along q = {worst_mono:.2e} (<= 1e-12), bounds={bounds_ok}, "
        f"max|S_q(uniform) - ln n| = {worst_uniform:.2e} (<= 1e-12), S0 >= S_q >= S_inf: {bracket_ok}",
    )


def test_ac5_quantum_reduction_suite():
    rng = np.random.default_rng(SEED + 5)
    orders = [0, 0.5, 1, 2, 7.5, math.inf]
    worst_diag = worst_unitary = worst_gibbs = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 17))
        p = make_dist(rng.dirichlet(np.ones(n)))
        worst_diag = max(worst_diag, max(abs(renyi_quantum(np.diag(p.weights), q) - renyi(p, q)) for q in orders))
        # random (rho, U): rho has a random non-diagonal eigenbasis already
        basis = random_unitary(rng, n)
        rho = basis @ np.diag(p.weights) @ basis.conj().T
        u = random_unitary(rng, n)
        rho_u = u @ rho @ u.conj().T
        worst_unitary = max(worst_unitary, max(abs(renyi_quantum(rho_u, q) - renyi_quantum(rho, q)) for q in orders))
    for _ in range(30):
        n = int(rng.integers(1, 17))
        x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = x + x.conj().T
        T = float(rng.uniform(0.1, 10))
        quantum = eigh(gibbs_state_quantum(h, T)).eigenvalues
        classical = np.sort(gibbs_state(eigh(h).eigenvalues, T).weights)[::-1]
        worst_gibbs = max(worst_gibbs, float(np.max(np.abs(quantum - classical))))
    ok = worst_diag <= 1e-10 and worst_unitary <= 1e-8 and worst_gibbs <= 1e-9
    report(
        "AC5 quantum-reduction suite",
        ok,
        f"diag {worst_diag:.2e} (<= 1e-10), unitary {worst_unitary:.2e} (<= 1e-8), gibbs spectrum {worst_gibbs:.2e} (<= 1e-9)",
    )


def test_ac6_invariance_suite():
    rng = np.random.default_rng(SEED + 6)
    exact = True
    worst_f = worst_rel = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 65))
        # dyadic grid: E + c and the internal differences are exact in binary
        e = rng.integers(0, 10 * 2**20, size=n) / 2**20
        c = int(rng.integers(-100 * 2**20, 100 * 2**20)) / 2**20
        T0 = float(rng.uniform(0.1, 10))
        q = draw_order(rng)
        exact &= np.array_equal(gibbs_state(e + c, T0).weights, gibbs_state(e, T0).weights)
        worst_f = max(worst_f, abs(free_energy(e + c, T0).F - (free_energy(e, T0).F + c)))
        a, b = relation_check(e, T0, q), relation_check(e + c, T0, q)
        worst_rel = max(worst_rel, abs(a.lhs - b.lhs), abs(a.rhs - b.rhs))
    ok = exact and worst_f <= 1e-10 and worst_rel <= 1e-9
    report(
        "AC6 invariance suite",
        ok,
        f"gibbs bitwise unchanged={exact}, max|dF - c| = {worst_f:.2e} (<= 1e-10), max change in identity sides = {worst_rel:.2e} (<= 1e-9)",
    )


def test_ac7_hand_derived_oracles():
    checks = {
        "S2(3/4,1/4) = -ln(5/8)": (renyi(make_dist([0.75, 0.25]), 2), oracles.S2_THREE_QUARTERS),
        "S2(0.7,0.2,0.1) = -ln(0.54)": (renyi(make_dist([0.7, 0.2, 0.1]), 2), oracles.S2_SEVEN_TWO_ONE),
        "two-level lnZ(1) = ln(1+e^-1)": (log_partition([0.0, 1.0], 1.0), oracles.TWO_LEVEL_LNZ_T1),
    }
    r = relation_check(embed_distribution(make_dist([0.7, 0.2, 0.1]), 1.0), 1.0, 2.0)
    checks["relation lhs"] = (r.lhs, oracles.S2_SEVEN_TWO_ONE)
    checks["relation rhs"] = (r.rhs, oracles.S2_SEVEN_TWO_ONE)
    errors = {k: abs(got - want) for k, (got, want) in checks.items()}
    worst = max(errors.values())
    report("AC7 hand-derived oracles", worst <= 1e-12, f"max deviation {worst:.2e} (<= 1e-12) over {len(errors)} values")


def _cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_ac8_cli_contract(tmp_path, capsys):
    rng = np.random.default_rng(SEED + 8)
    round_trip_ok = True
    for i in range(20):
        probs = (rng.dirichlet(np.ones(int(rng.integers(1, 12)))) + 1e-3).tolist()
        total = math.fsum(probs)
        probs = [x / total for x in probs]
        temp0 = float(rng.uniform(0.1, 10))
        src = tmp_path / f"p{i}.json"
        src.write_text(json.dumps({"probabilities": probs}))
        code, energies = _cli(["embed", str(src), "--temp0", repr(temp0)])
        mid = tmp_path / f"e{i}.json"
        mid.write_text(energies)
        code2, back = _cli(["gibbs", str(mid), "--temp", repr(temp0)])
        back = json.loads(back)["probabilities"]
        expected = [x for x in make_dist(probs)]
        round_trip_ok &= code == code2 == EXIT_OK and [fmt(x) for x in back] == [fmt(x) for x in expected]

    good = tmp_path / "good.json"
    good.write_text('{"probabilities": [0.7, 0.2, 0.1]}')
    zero = tmp_path / "zero.json"
    zero.write_text('{"probabilities": [1.0, 0.0]}')
    codes = {
        "ok": _cli(["relation", str(good), "--q", "2"])[0] == EXIT_OK,
        "io": _cli(["entropy", str(tmp_path / "missing.json"), "--q", "1"])[0] == EXIT_IO,
        "validation": _cli(["embed", str(zero)])[0] == EXIT_VALIDATION,
        "degenerate": _cli(["relation", str(good), "--q", "1"])[0] == EXIT_VALIDATION,
        "identity": _cli(["relation", str(good), "--q", "2", "--tol", "-1"])[0] == EXIT_IDENTITY,
    }
    capsys.readouterr()

    csv_ok = True
    energies = tmp_path / "levels.json"
    energies.write_text(json.dumps({"energies": rng.uniform(0, 10, size=9).tolist()}))
    for mode, rng_text in (("q", "0.1:10:50"), ("T", "0.1:10:50"), ("q", "0.5:1.5:11"), ("T", "0.2:0.3:2")):
        code, text = _cli(["sweep", str(energies), "--mode", mode, "--range", rng_text, "--temp0", "1.0"])
        rows = list(csv.reader(io.StringIO(text)))
        header, body = rows[0], [[float(v) for v in r] for r in rows[1:]]
        xs = [r[0] for r in body]
        csv_ok &= (
            code == EXIT_OK
            and len(body) == int(rng_text.split(":")[2])
            and all(len(r) == len(header) for r in body)
            and all(a < b for a, b in zip(xs, xs[1:]))
            and all(math.isfinite(v) for r in body for v in r)
        )
        # serialize and reparse: same rows
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        csv_ok &= buf.getvalue() == text

    elapsed = time.perf_counter() - _START
    ok = round_trip_ok and all(codes.values()) and csv_ok and elapsed < 60
    report(
        "AC8 CLI contract",
        ok,
        f"embed->gibbs 12-digit round trip={round_trip_ok}, exit codes={codes}, CSV reparse={csv_ok}, acceptance runtime {elapsed:.1f}s (< 60s)",
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
