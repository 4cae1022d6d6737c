"""Reference divergences for side-by-side comparison: KL, JSD, and TV.

KL is kept deliberately strict: when some outcome has p > 0 but q = 0 it
raises :class:`~dlite.errors.KlUndefined` instead of returning infinity,
so the unboundedness that motivates a bounded alternative stays observable.
Callers that want a number anyway can epsilon-smooth both inputs first
(see :func:`dlite.distributions.smooth`).

All logarithms are natural (values in nats).
"""

from __future__ import annotations

import numpy as np

from .distributions import Distribution, align
from .errors import KlUndefined

__all__ = ["kl", "jsd", "tv"]


def _kl_sum(a: np.ndarray, b: np.ndarray) -> float:
    """Sum of a_i ln(a_i / b_i) over i with a_i > 0 (0 ln 0 = 0)."""
    mask = a > 0
    return float(np.sum(a[mask] * np.log(a[mask] / b[mask])))


def kl(p: Distribution, q: Distribution) -> float:
    """Relative entropy KL(P || Q) in nats. Asymmetric, unbounded.

    Raises KlUndefined when P puts mass on an outcome Q excludes.
    """
    pa, qa = align(p, q)
    a, b = pa.masses, qa.masses
    bad = (a > 0) & (b == 0)
    if np.any(bad):
        lab = pa.labels[int(np.argmax(bad))]
        raise KlUndefined(
            f"outcome {lab!r} has p > 0 but q = 0; smooth first or use a bounded measure"
        )
    return _kl_sum(a, b)


def jsd(p: Distribution, q: Distribution) -> float:
    """Jensen-Shannon divergence: mean KL to the midpoint distribution.

    Symmetric, always defined, bounded by ln 2 (attained on disjoint
    supports).
    """
    pa, qa = align(p, q)
    a, b = pa.masses, qa.masses
    m = 0.5 * (a + b)
    return 0.5 * (_kl_sum(a, m) + _kl_sum(b, m))


def tv(p: Distribution, q: Distribution) -> float:
    """Total variation distance: half the L1 difference. A metric on [0, 1]."""
    pa, qa = align(p, q)
    return float(0.5 * np.sum(np.abs(pa.masses - qa.masses)))
