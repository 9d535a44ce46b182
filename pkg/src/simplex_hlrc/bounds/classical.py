"""Griesmer bound, its inversion k_opt, and the classical LRC dimension bounds."""

import logging
from dataclasses import dataclass

from simplex_hlrc.errors import InvalidArgs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundValue:
    """Result of a lambda sweep: the minimum and every lambda attaining it."""

    value: int
    binding_lambdas: tuple[int, ...]

    @classmethod
    def from_terms(cls, terms: list[int]) -> "BoundValue":
        best = min(terms)
        return cls(best, tuple(lam for lam, t in enumerate(terms) if t == best))

    @property
    def binding_lambda(self) -> int:
        return self.binding_lambdas[0]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def griesmer(q: int, k: int, d: int) -> int:
    """G_q(k, d) = sum_{i<k} ceil(d / q^i), the least length of an [n, k, d]_q code.

    k = 0 gives 0 (empty sum).

    Raises:
        InvalidArgs: If k < 0 or d < 1
    """
    if k < 0 or d < 1:
        raise InvalidArgs(f"griesmer needs k >= 0 and d >= 1 (got k={k}, d={d})")
    return sum(_ceil_div(d, q**i) for i in range(k))


def k_opt(q: int, n: int, d: int) -> int:
    """Largest k with G_q(k, d) <= n.

    An upper bound on the largest dimension of a length-n code with minimum
    distance d; exact for every family this package constructs.
    """
    if d < 1:
        raise InvalidArgs(f"k_opt needs d >= 1 (got {d})")
    k = 0
    while griesmer(q, k + 1, d) <= n:
        k += 1
    return k


def log_max_codebook(q: int, n: int, d: int) -> int:
    """log_q of min(Singleton, Griesmer inversion) on the size of a code."""
    return min(n - d + 1, k_opt(q, n, d))


def abhmt_bound(q: int, n: int, d: int, r: int, delta: int) -> int:
    """(ceil((n-d+1)/(r+delta-1)) + 1) * log_q B(r+delta-1, delta), floored at the end.

    Here r is the size-convention locality: each repair set has at most
    r + delta - 1 symbols.
    """
    if r < 1 or delta < 2 or n < 1 or d < 1:
        raise InvalidArgs(
            f"abhmt_bound needs r >= 1, delta >= 2, n, d >= 1 "
            f"(got n={n}, d={d}, r={r}, delta={delta})"
        )
    span = r + delta - 1
    multiplier = _ceil_div(n - d + 1, span) + 1
    return multiplier * log_max_codebook(q, span, delta)


def cmg_bound(q: int, n: int, d: int, kappa: int, delta: int) -> BoundValue:
    """min over lambda of lambda + k_opt(n - mu, d).

    With lambda = a*kappa + b (0 <= b < kappa),
    mu = (a+1) G_q(kappa, delta) - G_q(kappa-b, delta). Terms with n - mu < 0
    contribute lambda alone.
    """
    if kappa < 1 or delta < 2 or n < 1 or d < 1:
        raise InvalidArgs(
            f"cmg_bound needs kappa >= 1, delta >= 2, n, d >= 1 "
            f"(got n={n}, d={d}, kappa={kappa}, delta={delta})"
        )
    full = griesmer(q, kappa, delta)
    terms = []
    for lam in range(n + 1):
        a, b = divmod(lam, kappa)
        mu = (a + 1) * full - griesmer(q, kappa - b, delta)
        remaining = n - mu
        terms.append(lam + (k_opt(q, remaining, d) if remaining >= 0 else 0))
    logger.debug(f"cmg sweep q={q} n={n} d={d} kappa={kappa} delta={delta}: {terms}")
    return BoundValue.from_terms(terms)
