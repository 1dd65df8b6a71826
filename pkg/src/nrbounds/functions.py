"""Tagged scalar functions ``f: [0, inf) -> [0, inf)`` with convexity flags.

Chains check the flags, never the function itself: operator convexity is
asserted by whoever builds the descriptor and is not inferred numerically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

__all__ = ["ScalarFn", "power", "custom", "IDENTITY", "SQUARE"]


@dataclass(frozen=True)
class ScalarFn:
    """Scalar function descriptor.

    ``degree`` is set for the integer powers 1 and 2. Those are evaluated on
    matrices as polynomials (matrix products) and are defined on the whole
    real line; every other function requires a spectrum in ``[0, inf)``.
    """

    kind: str
    name: str
    nonnegative: bool
    increasing: bool
    convex: bool
    operator_convex: bool
    r: Optional[float] = None
    degree: Optional[int] = None
    func: Optional[Callable[[np.ndarray], np.ndarray]] = field(
        default=None, compare=False, repr=False)

    @property
    def nonneg_domain(self):
        return self.degree is None

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.degree == 1:
            return x.copy()
        if self.degree == 2:
            return x * x
        if self.kind == "power":
            return np.power(np.maximum(x, 0.0), self.r)
        return np.asarray(self.func(x), dtype=float)

    def describe(self):
        if self.kind == "power":
            return f"t^{self.r:g}"
        return self.name


def power(r):
    """``t -> t**r`` on ``[0, inf)``; operator convex exactly for ``1 <= r <= 2``."""
    r = float(r)
    if not np.isfinite(r) or r < 0:
        raise ValueError(f"power exponent must be finite and >= 0, got {r}")
    degree = int(r) if r in (1.0, 2.0) else None
    return ScalarFn(
        kind="power",
        name=f"power({r:g})",
        nonnegative=True,
        increasing=r > 0,
        convex=r >= 1 or r == 0,
        operator_convex=1.0 <= r <= 2.0,
        r=r,
        degree=degree,
    )


def custom(func, *, name, nonnegative, increasing, convex, operator_convex):
    """Wrap a vectorised callable; all four flags must be stated by the caller."""
    if operator_convex and not convex:
        raise ValueError("an operator convex function is convex")
    return ScalarFn(
        kind="custom",
        name=name,
        nonnegative=bool(nonnegative),
        increasing=bool(increasing),
        convex=bool(convex),
        operator_convex=bool(operator_convex),
        func=func,
    )


IDENTITY = ScalarFn(kind="identity", name="identity", nonnegative=True,
                    increasing=True, convex=True, operator_convex=True,
                    r=1.0, degree=1)
SQUARE = ScalarFn(kind="square", name="square", nonnegative=True,
                  increasing=True, convex=True, operator_convex=True,
                  r=2.0, degree=2)
