"""Power residues modulo a prime and the Cayley graphs they generate.

Primality is deterministic on the whole supported range (n < 2^63) via
Miller-Rabin with the fixed witness set {2, 3, 5, 7, ..., 37}, which is a
proven deterministic test below 3.3 * 10^24; experiment inputs are never
accepted probabilistically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cayley import Digraph, cayley_digraph
from .groups import make_cyclic
from .setsystem import Subset

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Exact VC computation on power-residue graphs is desk-scale work; inputs
# beyond this default are refused unless the caller raises the cap.
DEFAULT_PRIME_CAP = 1009


def is_prime(n: int) -> bool:
    """Exact primality for 0 <= n < 2^63."""
    if n < 0 or n >= 1 << 63:
        raise ValueError(f"primality test supports [0, 2^63), got {n}")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class ResidueSet:
    """The multiplicative subgroup {x^r : x in (Z/nZ)*} of a prime field."""

    modulus: int
    exponent: int
    effective_exponent: int  # gcd(r, n-1); the set only depends on this
    members: Subset

    def __len__(self) -> int:
        return len(self.members)


def power_residues(n: int, r: int) -> ResidueSet:
    """r-th power residues mod a prime n; |result| = (n-1)/gcd(r, n-1)."""
    if not is_prime(n):
        raise ValueError(f"power residues need a prime modulus, got {n}")
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    bits = 0
    for x in range(1, n):
        bits |= 1 << pow(x, r, n)
    members = Subset(bits, n)
    eff = math.gcd(r, n - 1)
    assert len(members) == (n - 1) // eff
    return ResidueSet(n, r, eff, members)


def paley_digraph(n: int) -> Digraph:
    """Cayley digraph of Z/nZ generated by the quadratic residues."""
    qr = power_residues(n, 2)
    return cayley_digraph(make_cyclic(n), qr.members)


def residue_cayley_digraph(n: int, r: int) -> Digraph:
    """Cayley digraph of Z/nZ generated by the r-th power residues."""
    rs = power_residues(n, r)
    return cayley_digraph(make_cyclic(n), rs.members)


def residue_experiment(
    primes: list[int],
    r: int,
    require_congruence: bool = False,
    frontier_cap: int = 1_000_000,
    prime_cap: int = DEFAULT_PRIME_CAP,
):
    """Exact VC-dimension records for r-th power-residue Cayley graphs.

    Deterministic (no sampling); each record normalizes by log_r N with the
    given r recorded in the rate column, and the log2 normalization stays
    derivable from (vcdim, N).  Primes violating N = 1 (mod r) under
    ``require_congruence``, or whose VC search hits the frontier cap, yield
    per-item error records and the run continues.  Returns records sorted
    by N.
    """
    from .errors import FrontierCapError
    from .experiments import make_record
    from .setsystem import translate_family, vc_dim

    for n in primes:
        if not is_prime(n):
            raise ValueError(f"residue experiment inputs must be prime, got {n}")
        if n > prime_cap:
            raise ValueError(
                f"prime {n} exceeds the desk-scale cap {prime_cap}; raise prime_cap to override"
            )
    records = []
    for n in sorted(primes):
        group = f"C{n}"
        if require_congruence and (n - 1) % r != 0:
            records.append(
                make_record(
                    f"residue-r{r}", group, n, 0.0, 0, 0, None,
                    error="congruence", r=float(r),
                )
            )
            continue
        rs = power_residues(n, r)
        density = len(rs.members) / n
        fam = translate_family(make_cyclic(n), rs.members)
        try:
            value = vc_dim(fam, frontier_cap=frontier_cap)
            records.append(
                make_record(
                    f"residue-r{r}", group, n, density, 0, 0, value, r=float(r)
                )
            )
        except FrontierCapError:
            records.append(
                make_record(
                    f"residue-r{r}", group, n, density, 0, 0, None,
                    error="frontier-cap", r=float(r),
                )
            )
    return records
