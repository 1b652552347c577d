#!/usr/bin/env python3
"""Every zero of a constructed approximant lies on the unit circle.

We verify this numerically for three target functions at degree 32, then
show what happens to the zeros when the construction is broken on purpose.
A scatter plot is written to circle_zeros.png when matplotlib is available.
"""

import numpy as np

from cpolyapprox import (
    ComplexPolynomial,
    ConstantFunction,
    RationalFunction,
    ZeroFunction,
    check_roots_on_circle,
    construct,
)

targets = {
    "f = 0": ZeroFunction(),
    "f = 1": ConstantFunction(1.0),
    "f = 1/(1 - z/2)": RationalFunction(ComplexPolynomial([1.0]),
                                        ComplexPolynomial([1.0, -0.5])),
}

N = 32
all_roots = {}
for label, f in targets.items():
    appr = construct(f, N)
    check = check_roots_on_circle(appr, 1e-7)
    all_roots[label] = check.roots
    print(f"{label:>18}: {N} roots, worst | |z|-1 | = "
          f"{check.max_deviation:.2e}  -> {'on the circle' if check.passed else 'OFF'}")

# Negative control: nudge one coefficient by 1e-2 and watch the roots leave
# the circle.  The check is not vacuous.
appr = construct(targets["f = 1/(1 - z/2)"], N)
c = appr.polynomial.coeffs.copy()
c[7] += 1e-2
broken = check_roots_on_circle(ComplexPolynomial(c), 1e-7)
print(f"\nperturbed coefficient: worst deviation {broken.max_deviation:.2e} "
      f"-> {'still passes (?)' if broken.passed else 'detected'}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the scatter plot")
else:
    fig, ax = plt.subplots(figsize=(6, 6))
    theta = np.linspace(0, 2 * np.pi, 512)
    ax.plot(np.cos(theta), np.sin(theta), lw=0.5, color="grey")
    for (label, roots), marker in zip(all_roots.items(), "o^s"):
        ax.scatter(roots.real, roots.imag, s=18, marker=marker, label=label)
    ax.scatter(broken.roots.real, broken.roots.imag, s=10, marker="x",
               color="red", label="perturbed (off circle)")
    ax.set_aspect("equal")
    ax.legend(loc="upper left", fontsize=8)
    ax.set_title(f"zeros of degree-{N} approximants")
    fig.savefig("circle_zeros.png", dpi=150)
    print("\nwrote circle_zeros.png")
