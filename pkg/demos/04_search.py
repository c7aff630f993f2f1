#!/usr/bin/env python3
"""Grover amplification: finding the inputs a Boolean function marks.

Starting from the uniform superposition, each round applies the phase
oracle and then inversion about the mean. The success probability after
k rounds is sin^2((2k+1)*theta) with sin(theta) = sqrt(M/N); the driver
checks its simulation against that closed form on every run.
"""

from svmem import needle, optimal_iterations, parse, predicted_success, run

# One marked state out of four is the textbook exact case: a single
# round reaches certainty.
report = run(needle(2, 2), shots=10, seed=7)
print(f"N=4, M=1: {report.iterations} iteration, "
      f"success={report.simulated_success:.15f}, samples={report.samples}")
print()

# Ten qubits, one marked state: ~25 rounds, near-certain success.
report = run(needle(517, 10), shots=5, seed=1)
print(f"N=1024, M=1: {report.iterations} iterations")
print(f"  predicted {report.predicted_success:.12f}")
print(f"  simulated {report.simulated_success:.12f}")
print(f"  samples   {report.samples}")
print()

# The success curve oscillates; stopping at the optimum matters.
N, M = 256, 4
best = optimal_iterations(N, M)
print(f"N={N}, M={M}: optimum is {best} rounds")
for k in range(2 * best + 1):
    bar = "#" * round(40 * predicted_success(N, M, k))
    print(f"  k={k:>2} {predicted_success(N, M, k):.4f} {bar}")
print()

# Any function works as the oracle, not just single-index needles.
report = run(parse("ab+cd", ["a", "b", "c", "d"]), shots=8, seed=3)
print(f"searching ab+cd over 4 qubits: M={report.marked}, "
      f"{report.iterations} iteration(s), success={report.simulated_success:.4f}")
print(f"samples: {report.samples}")
