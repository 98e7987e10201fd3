"""Lebesgue quadrature of a single random process.

A Lebesgue quadrature partitions a process by VALUE rather than by
argument: the nodes are representative levels of f, the weights are the
measure of the sets where f is near each level. For f(x) = x it reduces
to the classical Gauss quadrature of the sampling measure.
"""
import numpy as np

from lebquad import SampleSet, analyze

# --- dense uniform sampling of [-1, 1], f(x) = x -------------------------
M = 100_000
x = -1 + (np.arange(M) + 0.5) * 2 / M
samples = SampleSet(x=x, w=np.full(M, 2 / M), f=x)

for n in (2, 3, 4):
    quad = analyze(samples, n=n).quad_f
    print(f"n = {n}")
    print("  nodes  :", np.round(quad.nodes, 7))
    print("  weights:", np.round(quad.weights, 7))
print("compare: Gauss-Legendre nodes for n = 3 are 0, +-0.7745967 "
      "with weights 8/9, 5/9")

# --- a genuinely nonlinear process ---------------------------------------
rng = np.random.default_rng(1)
x = rng.uniform(-1, 1, 20_000)
f = np.sin(np.pi * x) + 0.3 * x * x
samples = SampleSet(x=x, w=np.ones(x.size), f=f)
result = analyze(samples, n=6)
quad = result.quad_f

print("\nsin(pi x) + 0.3 x^2 under uniform sampling, n = 6")
print("  value-nodes:", np.round(quad.nodes, 4))
print("  weights    :", np.round(quad.weights, 1))
print("  sum of weights      :", quad.weights.sum(), " (total measure", x.size, ")")
print("  weighted node mean  :", (quad.weights * quad.nodes).sum())
print("  direct sample mean  :", f.sum())
