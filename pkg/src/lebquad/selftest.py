"""Built-in identity suite: sum rules, normalizations, and oracle checks.

Each check prints one pass/fail line; the CLI 'selftest' subcommand is a
thin wrapper around :func:`run_selftest`.
"""
from __future__ import annotations

import numpy as np

from . import joint as joint_ops
from . import reference
from .datagen import builtin_scenario_names, generate, load_scenario
from .errors import ConditioningError, LebquadError
from .moments import SampleSet
from .pipeline import analyze

SUM_RULE_TOL = 1e-8
ORACLE_TOL = 1e-10


def _close(a, b, tol):
    return np.allclose(a, b, rtol=tol, atol=tol)


def _scenario_checks(name: str, n: int = 8):
    samples = generate(load_scenario(name))
    result = analyze(samples, n=n)
    S = result.projection()
    total = result.grams.total_measure
    V = joint_ops.value_correlation(result.quad_f, result.quad_g, S)
    P = joint_ops.probability_correlation(S)
    rho_unit = joint_ops.density_from_pure_unit(result.quad_f)
    rho_ident = joint_ops.density_identity(n)
    D_unit = joint_ops.density_matrix_correlation(S, rho_unit)
    D_ident = joint_ops.density_matrix_correlation(S, rho_ident)
    sq = joint_ops.pure_squared_correlation(S, rho_unit)

    yield (f"{name}: value sum rule total = <1>",
           abs(V.total - total) <= SUM_RULE_TOL * total)
    yield (f"{name}: value row sums = f-weights",
           _close(V.W.sum(axis=1), result.quad_f.weights, SUM_RULE_TOL))
    yield (f"{name}: value column sums = g-weights",
           _close(V.W.sum(axis=0), result.quad_g.weights, SUM_RULE_TOL))
    yield (f"{name}: probability total = n",
           abs(P.total - n) <= SUM_RULE_TOL * n)
    yield (f"{name}: probability doubly stochastic",
           _close(P.W.sum(axis=0), 1.0, SUM_RULE_TOL)
           and _close(P.W.sum(axis=1), 1.0, SUM_RULE_TOL))
    yield (f"{name}: density total = spur(rho)",
           abs(D_unit.total - rho_unit.spur) <= SUM_RULE_TOL * abs(rho_unit.spur))
    yield (f"{name}: density(pure unit) = value correlation",
           _close(D_unit.W, V.W, 1e-10))
    yield (f"{name}: density(identity) = probability correlation",
           _close(D_ident.W, P.W, 1e-10))
    yield (f"{name}: squared(pure unit) = product of weights",
           _close(sq.W, np.outer(result.quad_f.weights, result.quad_g.weights), 1e-10))
    yield (f"{name}: squared(pure unit) total = <1>^2",
           abs(sq.total - total**2) <= SUM_RULE_TOL * total**2)
    yield (f"{name}: pureness of pure state = 0",
           joint_ops.pureness_estimate(S, rho_unit) <= SUM_RULE_TOL)


def _oracle_checks(cases: int = 10, seed: int = 2718):
    rng = np.random.default_rng(seed)
    worst = 0.0
    ok = True
    for _ in range(cases):
        atoms = int(rng.integers(4, 6))
        n = int(rng.integers(2, 4))
        x = np.sort(rng.uniform(-1, 1, atoms))
        w = rng.uniform(0.2, 1.5, atoms)
        f = rng.standard_normal(atoms)
        g = rng.standard_normal(atoms)
        ref = reference.ref_joint(x, w, f, g, n)
        res = analyze(SampleSet(x=x, w=w, f=f, g=g), n=n, family="monomial")
        S = res.projection()
        V = joint_ops.value_correlation(res.quad_f, res.quad_g, S)
        P = joint_ops.probability_correlation(S)
        pairs = [
            (res.quad_f.nodes, ref["f_nodes"]),
            (res.quad_f.weights, ref["f_weights"]),
            (res.quad_g.nodes, ref["g_nodes"]),
            (res.quad_g.weights, ref["g_weights"]),
            (V.W, ref["V"]),
            (P.W, ref["P"]),
        ]
        for got, want in pairs:
            err = np.abs(np.asarray(got) - want).max()
            worst = max(worst, err)
            ok = ok and err <= ORACLE_TOL
    yield (f"oracle: naive reference agrees at n <= 3 (max err {worst:.2e})", ok)


def _conditioning_check():
    # 3 distinct atoms cannot support an order-4 pencil; the solver must say so.
    samples = SampleSet(
        x=np.array([-0.5, 0.1, 0.7]), w=np.ones(3),
        f=np.array([1.0, 2.0, 3.0]),
    )
    try:
        analyze(samples, n=4)
    except ConditioningError as exc:
        return ("conditioning: rank-deficient fixture rejected "
                f"(effective rank {exc.effective_rank})", True)
    except LebquadError:
        return ("conditioning: rank-deficient fixture rejected", False)
    return ("conditioning: rank-deficient fixture rejected", False)


def run_selftest(out=None) -> int:
    """Run all identities; print one line each; return 0 iff all pass."""
    import sys

    out = out or sys.stdout
    failures = []
    checks = []
    for name in builtin_scenario_names():
        checks.extend(_scenario_checks(name))
    checks.extend(_oracle_checks())
    checks.append(_conditioning_check())
    for label, passed in checks:
        out.write(f"{'PASS' if passed else 'FAIL'}  {label}\n")
        if not passed:
            failures.append(label)
    if failures:
        out.write(f"selftest: FAILED at '{failures[0]}'\n")
        return 1
    out.write(f"selftest: all {len(checks)} identities pass\n")
    return 0
