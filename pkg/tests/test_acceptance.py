"""The ten acceptance criteria, each at its stated tolerance.

Each test records one PASS/FAIL line (printed in the terminal summary) and
then asserts, so a red criterion stays red.
"""

import json
import time

import numpy as np

from schauderkit import (
    DEFAULT_SLACK,
    Ball,
    BasisShift,
    BasisVectors,
    FiniteSet,
    Geometric,
    GeometricRamp,
    HilbertCube,
    PlateauShift,
    Power,
    SeqElement,
    SpaceKind,
    Zero,
    apply_R,
    apply_S,
    check_condition1,
    check_precompact,
    decide_c,
    decide_c0,
    decide_convergence,
    decide_hilbert,
    decide_lp,
    direct_norm_check,
    estimate_operator_norm,
    norm_bounds,
    tail_norm_bounds,
    unit_vector,
    zero_element,
)
from schauderkit.cli import run
from schauderkit.fixtures import fixture_documents
from schauderkit.verify import recheck_report

from conftest import FOUR_SPACES, random_c_family, random_element, random_l2_family
from oracles import brute_norm, brute_smallest_K, brute_tail_norm, realize

D = DEFAULT_SLACK
GRID = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
L2 = SpaceKind.lp(2)


def ramp_fixture(rng, space):
    kind = rng.integers(3)
    if kind == 0:
        tail = Zero()
    elif kind == 1:
        tail = Geometric(float(rng.uniform(0, 2)), float(rng.uniform(0, 0.9)))
    else:
        tail = Power(float(rng.uniform(0, 2)), float(rng.uniform(2.5, 4.0)))
    prefix = tuple(rng.normal(size=int(rng.integers(0, 8))).tolist())
    limit = float(rng.normal()) if space.kind == "c" else 0.0
    base = SeqElement(space, prefix, limit, tail)
    shift = float(rng.uniform(-1, 1)) if space.kind == "c" else 0.0
    return GeometricRamp(space, float(rng.uniform(0.05, 0.95)), float(rng.uniform(-3, 3)), base, shift)


def test_1_iff_forward_on_ramps(criterion):
    rng = np.random.default_rng(2024)
    violations, verdicts = [], 0
    for i in range(200):
        space = FOUR_SPACES[i % 4]
        fam = ramp_fixture(rng, space)
        v = decide_convergence(fam, fam.base)
        if v.tag != "converges":
            violations.append((i, v.tag))
            continue
        verdicts += 1
        for row in v.payload["per_epsilon"]:
            N = row["N"]
            ns = list(range(N, N + 32)) + [N * 2**j for j in range(1, 21)]
            for n in ns:
                if not norm_bounds(fam.difference(n, fam.base)).hi < row["epsilon"]:
                    violations.append((i, row["epsilon"], n))
    ok = criterion("1 iff forward: 200 ramps converge, direct distances < eps beyond N",
                   not violations, f"{verdicts}/200 converge, {len(violations)} violations")
    assert ok, violations[:5]


def test_2_basis_shift_needs_condition_2(criterion):
    fam = BasisShift(L2, 1.0)
    coords = check_condition1(fam, zero_element(L2), k_max=64)
    cond1 = all(c.status == "certified_pass" for c in coords) and len(coords) == 64
    v = decide_convergence(fam, k_max=64)
    pairs = v.payload.get("pairs", [])
    exact = [K for K, n, lb in pairs if n == K + 1 and abs(lb - 1.0) <= 2**-30]
    ok = criterion("2 BasisShift(1): condition (1) certified, tail witness 1 for every K <= 64",
                   cond1 and v.tag == "diverges" and v.payload["type"] == "tail_lower_bound"
                   and exact == list(range(65)),
                   f"{len(exact)} exact witnesses")
    assert ok


def test_3_plateau_needs_limit_clause(criterion):
    fam = PlateauShift(1.0)
    v = decide_c(fam)
    termwise = check_condition1(fam, zero_element(SpaceKind.c()), k_max=64)[1:]
    dists = direct_norm_check(fam, n_max=200)
    ok = criterion("3 PlateauShift: LimitGap 1, termwise certified to 0, distances enclose 1",
                   v.payload == {"type": "limit_gap", "k": 0, "gap": 1.0}
                   and all(c.status == "certified_pass" for c in termwise)
                   and all(iv.contains(1.0) and iv.width <= D for iv in dists))
    assert ok


def test_4_identity_decomposition(criterion):
    rng = np.random.default_rng(4)
    failures = 0
    for i in range(500):
        x = random_element(rng, FOUR_SPACES[i % 4])
        for K in range(33):
            s, r = apply_S(x, K), apply_R(x, K)
            for k in range(1, x.m + 1):
                sk = s.prefix[k - 1] if k <= s.m else s.limit
                rk = r.prefix[k - 1] if k <= r.m else r.limit
                failures += abs(sk + rk - x.prefix[k - 1]) > D
            failures += abs(s.limit + r.limit - x.limit) > D
    ok = criterion("4 S_K x + R_K x = x on 500 fixtures, K = 0..32", failures == 0, f"{failures} failures")
    assert ok


def test_5_operator_norm_bounds(criterion):
    start = time.perf_counter()
    worst = {"S": 0.0, "R": 0.0, "coordinate": 0.0}
    for space in FOUR_SPACES:
        for K in range(1, 17):
            for op in worst:
                worst[op] = max(worst[op], estimate_operator_norm(op, K, space, trials=1000, seed=0))
    r3 = estimate_operator_norm("R", 3, SpaceKind.c(), trials=1000, seed=0)
    elapsed = time.perf_counter() - start
    ok = criterion("5 sampled ||S_K|| <= 1+d, ||R_K|| <= 2+d, ||c_k|| <= 2+d; ||R_3|| >= 1 in c",
                   worst["S"] <= 1 + D and worst["R"] <= 2 + D and worst["coordinate"] <= 2 + D and r3 >= 1,
                   f"S {worst['S']:.6f}, R {worst['R']:.6f}, c_k {worst['coordinate']:.6f}, "
                   f"R_3 in c {r3:.6f}, {elapsed:.1f}s")
    assert ok


def _witness_ok(verdict, space):
    w = verdict.payload
    return all(tail_norm_bounds(unit_vector(space, K + 1, w["size"]), K).lo >= max(lb, w["epsilon"])
               for K, lb in w["pairs"]) and len(w["pairs"]) == 65


def test_6_compactness(criterion):
    rng = np.random.default_rng(6)
    finite = all(
        check_precompact(FiniteSet(s, tuple(random_element(rng, s) for _ in range(4)))).tag == "precompact"
        for s in FOUR_SPACES * 10)
    bv, ball = check_precompact(BasisVectors(L2, 1.0)), check_precompact(Ball(L2, 1.0))
    negatives = (bv.tag == ball.tag == "not_precompact" and _witness_ok(bv, L2) and _witness_ok(ball, L2))
    cube = check_precompact(HilbertCube(L2, Geometric(1.0, 0.5)))
    K0 = next(r["K0"] for r in cube.payload["per_epsilon"] if r["epsilon"] == 1e-2)
    brute = brute_smallest_K(0.5 ** np.arange(1, 10_001), L2, 1e-2)
    ok = criterion("6 FiniteSet precompact; BasisVectors(1), unit Ball not; HilbertCube K0(1e-2) vs brute",
                   finite and negatives and cube.tag == "precompact" and abs(K0 - brute) <= 1,
                   f"K0 = {K0}, brute = {brute}")
    assert ok


def test_7_specialisation_coherence(criterion):
    rng = np.random.default_rng(7)
    mismatches = []
    for i in range(100):
        fam = random_l2_family(rng)
        cand = fam.reference()
        tags = (decide_lp(fam, cand).tag, decide_hilbert(fam, cand).tag, decide_convergence(fam, cand).tag)
        if len(set(tags)) != 1:
            mismatches.append(("l2", i, tags))
    for i in range(100):
        fc, f0 = random_c_family(rng)
        tags = (decide_c(fc, fc.reference()).tag, decide_c0(f0, f0.reference()).tag)
        if tags[0] != tags[1]:
            mismatches.append(("c", i, tags))
    ok = criterion("7 decide_lp(2) = decide_hilbert = general on 100 l2 families; decide_c = decide_c0 on 100",
                   not mismatches, f"{len(mismatches)} mismatches")
    assert ok, mismatches[:5]


def test_8_monotone_tails(criterion):
    rng = np.random.default_rng(8)
    spaces = FOUR_SPACES + [SpaceKind.lp(1.5), SpaceKind.lp(3), SpaceKind.hilbert()]
    violations = 0
    for i in range(500):
        x = random_element(rng, spaces[i % len(spaces)])
        his = [tail_norm_bounds(x, K).hi for K in range(65)]
        violations += sum(b > a for a, b in zip(his, his[1:]))
    ok = criterion("8 K -> tail_norm_bounds hi nonincreasing on 500 fixtures, K = 0..64",
                   violations == 0, f"{violations} violations")
    assert ok


def test_9_enclosure_soundness(criterion):
    rng = np.random.default_rng(9)
    spaces = FOUR_SPACES + [SpaceKind.lp(1.5), SpaceKind.lp(3), SpaceKind.hilbert()]
    misses = []
    for i in range(100):
        space = spaces[i % len(spaces)]
        x = random_element(rng, space, tails=(("geometric", "power", "zero")[i % 3],))
        n = 10_000
        e = realize(x, n, signs=rng.choice([-1.0, 1.0], n), fill=rng.uniform(0.5, 1.0, n))
        if not norm_bounds(x).contains(brute_norm(e, space, x.limit)):
            misses.append((i, "norm"))
        for K in (0, 1, 2, 5, 10, 20):
            if not tail_norm_bounds(x, K).contains(brute_tail_norm(e, space, K, x.limit)):
                misses.append((i, K))
    ok = criterion("9 10^4-term brute-force norms inside every enclosure on 100 closed-form fixtures",
                   not misses, f"{len(misses)} misses")
    assert ok, misses[:5]


def test_10_cli_round_trip(criterion, tmp_path, capsys):
    runs = []
    for r in range(2):
        out = tmp_path / f"run{r}"
        run(["fixtures", "--out", str(out), "--seed", "1"])
        reports = {}
        for name, doc in fixture_documents().items():
            path = out / f"{name}.json"
            target = tmp_path / f"{name}.{r}.report.json"
            code = run([doc["command"], str(path), "--seed", "1", "--out", str(target)])
            report = json.loads(target.read_text())
            reports[name] = (code, report, json.loads(path.read_text()))
        runs.append(reports)
    capsys.readouterr()
    problems = []
    for name, doc in fixture_documents().items():
        (c0, a, stored), (c1, b, _) = runs[0][name], runs[1][name]
        if a["verdict"] != doc["expected_verdict"]:
            problems.append(f"{name}: {a['verdict']}")
        payload = ("certificate", "witness", "reason")
        if [a.get(k) for k in payload] != [b.get(k) for k in payload] or c0 != c1:
            problems.append(f"{name}: runs differ")
        if a["input_sha256"] != b["input_sha256"]:
            problems.append(f"{name}: fixture bytes differ")
        problems += [f"{name}: {p}" for p in recheck_report(a, stored)]
    ok = criterion("10 CLI fixtures reproduce documented verdicts with identical JSON across two runs",
                   not problems, f"{len(problems)} problems")
    assert ok, problems
