"""Integer factorization and prime-counting functions.

Factorization uses trial division for the bulk of desk-scale inputs and
falls back to Pollard's rho (Brent variant) guarded by a deterministic
Miller-Rabin test. Primality is deterministic for anything below 3.3e24,
which covers every 64-bit input; larger numbers get 40 extra pseudo-random
rounds seeded from the input so results stay reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import FactorizationTimeout, NonPositive

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_RHO_ITERATION_CAP = 10**7

# Witness set proving primality for all n < 3_317_044_064_679_887_385_961_981.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_PROBABILISTIC_ROUNDS = 40


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, multiplicity) pairs, primes increasing."""

    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, s in self.factors:
            out *= p**s
        return out


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1

    def witnesses():
        yield from _DETERMINISTIC_BASES
        if n >= _DETERMINISTIC_LIMIT:
            rng = random.Random(n)
            for _ in range(_PROBABILISTIC_ROUNDS):
                yield rng.randrange(2, n - 1)

    for a in witnesses():
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, iteration_cap: int) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle method)."""
    spent = 0

    def tick(steps: int):
        nonlocal spent
        spent += steps
        if spent > iteration_cap:
            raise FactorizationTimeout(f"rho exceeded {iteration_cap} iterations on {n}")

    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            tick(r)
            k = 0
            while k < r and g == 1:
                ys = y
                block = min(128, r - k)
                for _ in range(block):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                tick(block)
                g = math.gcd(q, n)
                k += block
            r *= 2
        if g == n:
            # The batched gcd overshot; retrace one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                tick(1)
        if 1 < g < n:
            return g
    raise FactorizationTimeout(f"rho failed to split {n}")


def factorize(z: int, rho_iteration_cap: int = DEFAULT_RHO_ITERATION_CAP) -> Factorization:
    """Prime factorization of a positive integer; z = 1 gives no factors."""
    if z <= 0:
        raise NonPositive(f"cannot factorize {z}")
    counts: dict[int, int] = {}
    remaining = z
    for d in (2, 3):
        while remaining % d == 0:
            counts[d] = counts.get(d, 0) + 1
            remaining //= d
    d = 5
    while d <= TRIAL_DIVISION_LIMIT and d * d <= remaining:
        for cand in (d, d + 2):
            while remaining % cand == 0:
                counts[cand] = counts.get(cand, 0) + 1
                remaining //= cand
        d += 6
    stack = [remaining] if remaining > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_probable_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        f = _pollard_rho(v, rho_iteration_cap)
        stack.append(f)
        stack.append(v // f)
    return Factorization(tuple(sorted(counts.items())))


def omega_truncated(z: int, m: int) -> int:
    """Number of prime factors of z with multiplicities capped at m."""
    if m < 1:
        raise NonPositive(f"threshold must be >= 1, got {m}")
    return sum(min(s, m) for _, s in factorize(z).factors)


def omega(z: int) -> int:
    """Number of distinct prime factors of z."""
    return len(factorize(z).factors)


def big_omega(z: int) -> int:
    """Number of prime factors of z counted with multiplicity."""
    return sum(s for _, s in factorize(z).factors)


def kappa_from_cyclic_orders(orders) -> int:
    """Number of primary cyclic summands of a direct sum of cyclic groups
    with the given orders.

    Each cyclic group of order d splits into one primary summand per
    distinct prime of d, so the count is the sum of omega(d_i); order-1
    factors contribute nothing.
    """
    total = 0
    for d in orders:
        d = int(d)
        if d < 1:
            raise NonPositive(f"cyclic order must be >= 1, got {d}")
        if d > 1:
            total += omega(d)
    return total
