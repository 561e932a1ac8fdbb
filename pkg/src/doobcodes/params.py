"""
Admissible parameters of 1-perfect codes in Doob graphs.

A nontrivial 1-perfect code in D(m, n) needs 2m + n = (4^mu - 1)/3.  This module
holds the finer arithmetic for additive codes (group type Z2^Gamma x Z4^Delta of
the coset group), linear codes over GR(4^2), the product-construction bound,
and `classify`, which lists every construction in this package that yields a
code for a given (m, n).

Note on Delta: additive codes need Delta >= 2 when m > 0.  In the degenerate
Hamming case m = 0 the same equations hold with Delta = 0, n'' = 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional


def _log(base: int, x: int) -> Optional[int]:
    """Exact integer logarithm, or None if x is not a power of base."""
    if x < 1:
        return None
    e = 0
    while x % base == 0:
        x //= base
        e += 1
    return e if x == 1 else None


@dataclass(frozen=True)
class DoobParams:
    m: int
    n_prime: int
    n_dprime: int = 0

    @property
    def n(self) -> int:
        return self.n_prime + self.n_dprime


@dataclass(frozen=True)
class GroupParams:
    Gamma: int
    Delta: int


@dataclass(frozen=True)
class LinearParams:
    gamma: int
    delta: int


class Rejection(enum.Enum):
    """Reasons (m, n', n'') fails the additive-code conditions, in check order."""

    NEGATIVE = "negative parameter"
    TOTAL_NOT_POWER = "3(2m+n'+n'')+1 is not a power of 2"
    ORDER2_NOT_POWER = "3n'+n''+1 is not a power of 2"
    GAMMA_NEGATIVE = "Gamma would be negative"
    GAMMA_ODD = "Gamma is odd"
    DELTA_SMALL = "Delta < 2"
    NDPRIME_BOUND = "n'' > 2^Delta - 1"
    NDPRIME_ONE = "n'' = 1"


class ParameterError(ValueError):
    def __init__(self, reason: Rejection, params=None):
        super().__init__(reason.value if params is None else f"{params}: {reason.value}")
        self.reason = reason
        self.params = params


def mu_for(m: int, n: int) -> Optional[int]:
    """mu >= 1 with 2m + n = (4^mu - 1)/3, or None."""
    if m < 0 or n < 0:
        return None
    mu = _log(4, 3 * (2 * m + n) + 1)
    return mu if mu else None


def group_params(m: int, n_prime: int, n_dprime: int = 0, *, hamming: bool = False) -> GroupParams:
    """The coset-group type (Gamma, Delta) an additive 1-perfect code would have.

    Raises ParameterError naming the first violated condition.  With
    ``hamming=True`` (only meaningful for m = 0) Delta = 0 is accepted.
    """
    p = DoobParams(m, n_prime, n_dprime)
    if min(m, n_prime, n_dprime) < 0:
        raise ParameterError(Rejection.NEGATIVE, p)
    total = _log(2, 3 * (2 * m + n_prime + n_dprime) + 1)  # Gamma + 2 Delta
    if total is None:
        raise ParameterError(Rejection.TOTAL_NOT_POWER, p)
    order2 = _log(2, 3 * n_prime + n_dprime + 1)  # Gamma + Delta
    if order2 is None:
        raise ParameterError(Rejection.ORDER2_NOT_POWER, p)
    Delta = total - order2
    Gamma = order2 - Delta
    if Gamma < 0:
        raise ParameterError(Rejection.GAMMA_NEGATIVE, p)
    if Gamma % 2:
        raise ParameterError(Rejection.GAMMA_ODD, p)
    if Delta < 2 and not (hamming and m == 0 and Delta == 0):
        raise ParameterError(Rejection.DELTA_SMALL, p)
    if n_dprime > 2 ** Delta - 1:
        raise ParameterError(Rejection.NDPRIME_BOUND, p)
    if n_dprime == 1:
        raise ParameterError(Rejection.NDPRIME_ONE, p)
    return GroupParams(Gamma, Delta)


def linear_size(gamma: int, delta: int) -> tuple[int, int]:
    """(m, n) of the linear code with parameters (gamma, delta)."""
    if gamma < 0 or delta < 1:
        raise ValueError("need gamma >= 0 and delta >= 1")
    n = (4 ** (gamma + delta) - 1) // 3
    m = (4 ** (gamma + 2 * delta) - 4 ** (gamma + delta)) // 6
    return m, n


def linear_params(m: int, n: int) -> Optional[LinearParams]:
    s = _log(4, 3 * n + 1)  # gamma + delta
    if not s:
        return None
    t = _log(4, 6 * m + 4 ** s)  # gamma + 2 delta
    if t is None or t <= s:
        return None
    delta = t - s
    gamma = s - delta
    if gamma < 0:
        return None
    return LinearParams(gamma, delta)


def product_kr(mu: int) -> tuple[int, int]:
    """Grid shape (k, r) used by the product construction for diameter (4^mu-1)/3."""
    if mu < 2:
        raise ValueError("product construction needs mu >= 2")
    if mu % 2:
        return (2 ** (mu - 1) - 1) // 3, (2 ** (mu + 1) - 1) // 3
    k = (2 ** mu - 1) // 3
    return k, k


def product_bound(mu: int) -> int:
    """Largest m reachable by the product construction."""
    if mu < 2:
        raise ValueError("product construction needs mu >= 2")
    if mu % 2:
        num = 2 * 4 ** mu - 5 * 2 ** mu + 2  # twice (4^mu - 2.5*2^mu + 1)
        return num // 18
    return (4 ** mu - 2 * 2 ** mu + 1) // 9


# -- classification ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class Linear:
    gamma: int
    delta: int

    def __str__(self):
        return f"linear(gamma={self.gamma},delta={self.delta})"


@dataclass(frozen=True, order=True)
class AdditiveEvenDelta:
    Gamma: int
    Delta: int
    n_dprime: int

    def __str__(self):
        return f"additive(Gamma={self.Gamma},Delta={self.Delta},n''={self.n_dprime})"


@dataclass(frozen=True, order=True)
class SpecialD77:
    def __str__(self):
        return "special-d77"


@dataclass(frozen=True, order=True)
class Product:
    k: int
    r: int
    m: int

    def __str__(self):
        return f"product(k={self.k},r={self.r},m={self.m})"


@dataclass(frozen=True, order=True)
class Open:
    def __str__(self):
        return "open"


ConstructionTag = Linear | AdditiveEvenDelta | SpecialD77 | Product | Open
_TAG_ORDER = {Linear: 0, AdditiveEvenDelta: 1, SpecialD77: 2, Product: 3, Open: 4}


def additive_splits(m: int, n: int) -> list[tuple[int, GroupParams]]:
    """All n'' (with group type) for which (m, n-n'', n'') passes the additive conditions."""
    out = []
    for n4 in range(n + 1):
        try:
            gp = group_params(m, n - n4, n4, hamming=(m == 0))
        except ParameterError:
            continue
        out.append((n4, gp))
    return out


def classify(m: int, n: int) -> list:
    """Constructions covering D(m, n); ``[Open()]`` if none does."""
    mu = mu_for(m, n)
    if mu is None:
        raise ValueError(f"2m+n = {2 * m + n} is not (4^mu-1)/3")
    tags = []
    lp = linear_params(m, n)
    if lp is not None:
        tags.append(Linear(lp.gamma, lp.delta))
    for n4, gp in additive_splits(m, n):
        if gp.Delta % 2 == 0:
            tags.append(AdditiveEvenDelta(gp.Gamma, gp.Delta, n4))
    if (m, n) == (7, 7):
        tags.append(SpecialD77())
    if mu >= 2 and m <= product_bound(mu):
        k, r = product_kr(mu)
        tags.append(Product(k, r, m))
    if not tags:
        tags.append(Open())
    return sorted(tags, key=lambda t: (_TAG_ORDER[type(t)], t))


def admissible_pairs(mu: int) -> list[tuple[int, int]]:
    total = (4 ** mu - 1) // 3
    return [(m, total - 2 * m) for m in range(total // 2 + 1)]


def triple_verdict(m: int, n_prime: int, n_dprime: int) -> str:
    """One-line verdict on an additive parameter triple."""
    try:
        gp = group_params(m, n_prime, n_dprime, hamming=(m == 0))
    except ParameterError as exc:
        return f"rejected: {exc.reason.value}"
    head = f"(Gamma,Delta)=({gp.Gamma},{gp.Delta})"
    if gp.Delta % 2 == 0:
        return f"{head}, additive even-Delta: constructed"
    if (m, n_prime, n_dprime) == (7, 0, 7):
        return f"{head}, additive odd-Delta: special-d77"
    return f"{head}, additive odd-Delta: open"
