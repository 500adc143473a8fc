"""Exact element-order spectra of SL4^eps(q) and its projective quotient.

Conjugacy data of a group element splits into a semisimple part, described
by the Frobenius-twist orbits of its characteristic-value exponents with
multiplicities, and a commuting unipotent part, one partition of each
multiplicity.  The element order is

    p_part(largest Jordan block) * (multiplicative order of the semisimple part)

so omega() never enumerates partitions: for a fixed semisimple datum the
achievable largest blocks are exactly 1..max(multiplicity), because the
partition (b, 1, ..., 1) realizes any b up to its multiplicity and the
other factors can stay trivial.  iter_class_data() exposes the full
partition-level enumeration so tests can confirm the shortcut loses nothing.

All exponent arithmetic happens inside one cyclic group of order q^12 - 1,
which contains every q^d - (eps)^d for d <= 4 as a divisor; degree-d
exponents are embedded by the cofactor q^12 - 1 over their own modulus.
"""

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import arith
from .params import GroupParams, derive, sign_from_str, sign_to_str

SPECTRUM_Q_CAP = 27

GROUP_FULL = "SL"
GROUP_PROJECTIVE = "PSL"

# Total number of degree-d blocks, counted with multiplicity, for each way
# of filling dimension 4: index d-1 holds the count of degree-d blocks.
_DIM_SPLITS = (
    (4, 0, 0, 0),
    (2, 1, 0, 0),
    (0, 2, 0, 0),
    (1, 0, 1, 0),
    (0, 0, 0, 1),
)

_PARTITIONS = {
    1: ((1,),),
    2: ((2,), (1, 1)),
    3: ((3,), (2, 1), (1, 1, 1)),
    4: ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)),
}


@dataclass(frozen=True)
class OrbitRep:
    """Canonical representative of a twist orbit of exact size d."""

    d: int
    e: int         # smallest exponent in the orbit, mod q^d - eps^d
    embedded: int  # same value as an exponent mod q^12 - 1


@dataclass(frozen=True)
class ClassDatum:
    """One conjugacy datum: orbit multiplicities plus Jordan partitions."""

    blocks: tuple  # ((OrbitRep, multiplicity), ...)
    partitions: tuple  # one partition of each multiplicity, same order


def _big_order(params: GroupParams) -> int:
    return params.q**12 - 1


@lru_cache(maxsize=None)
def enumerate_orbits(params: GroupParams, d: int) -> tuple[OrbitRep, ...]:
    """All orbits of e -> eps*q*e mod q^d - eps^d having exact size d.

    Scanning exponents in increasing order makes the first-seen member the
    canonical representative.
    """
    if d not in (1, 2, 3, 4):
        raise ValueError("block degree must be 1..4")
    eps, q = params.epsilon, params.q
    modulus = q**d - eps**d
    mult = (eps * q) % modulus
    cofactor = _big_order(params) // modulus
    seen = bytearray(modulus)
    reps = []
    for x in range(modulus):
        if seen[x]:
            continue
        seen[x] = 1
        size = 1
        y = (x * mult) % modulus
        while y != x:
            seen[y] = 1
            size += 1
            y = (y * mult) % modulus
        if size == d:
            reps.append(OrbitRep(d=d, e=x, embedded=x * cofactor))
    return tuple(reps)


def _geom_sum(params: GroupParams, d: int) -> int:
    """1 + (eps*q) + ... + (eps*q)^(d-1), reduced mod q^12 - 1."""
    eps, q = params.epsilon, params.q
    return sum((eps * q)**j for j in range(d)) % _big_order(params)


def _block_choices(orbits, total):
    """Multisets of distinct orbits with multiplicities summing to total."""
    out = []
    acc = []

    def rec(start, remaining):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(orbits)):
            for mu in range(1, remaining + 1):
                acc.append((orbits[i], mu))
                rec(i + 1, remaining - mu)
                acc.pop()

    rec(0, total)
    return out


def _semisimple_data(params: GroupParams):
    """Determinant-one orbit assignments, in a fixed deterministic order."""
    big = _big_order(params)
    per_d = {d: enumerate_orbits(params, d) for d in (1, 2, 3, 4)}
    geom = {d: _geom_sum(params, d) for d in (1, 2, 3, 4)}
    for split in _DIM_SPLITS:
        pools = [_block_choices(per_d[d], n)
                 for d, n in zip((1, 2, 3, 4), split) if n]
        for combo in product(*pools):
            blocks = tuple(b for group in combo for b in group)
            det = sum(mu * orb.embedded * geom[orb.d]
                      for orb, mu in blocks) % big
            if det == 0:
                yield blocks


def _p_part(p: int, b: int) -> int:
    """Smallest power of p that is >= b: the order of a size-b Jordan block."""
    v = 1
    while v < b:
        v *= p
    return v


def _orders_for_blocks(params: GroupParams, blocks) -> tuple[int, int]:
    """(semisimple order, least k making the semisimple part scalar)."""
    big = _big_order(params)
    quot = big // (params.q - params.epsilon)
    step = (params.epsilon * params.q) % big
    ss_order = 1
    xs = []
    for orb, _mu in blocks:
        ss_order = math.lcm(ss_order, big // math.gcd(big, orb.embedded))
        x = orb.embedded
        for _ in range(orb.d):
            xs.append(x)
            x = (x * step) % big
    k_pairs = 1
    for u in range(len(xs)):
        for v in range(u + 1, len(xs)):
            diff = (xs[u] - xs[v]) % big
            k_pairs = math.lcm(k_pairs, big // math.gcd(big, diff))
    k0 = k_pairs * (quot // math.gcd(quot, (xs[0] * k_pairs) % quot))
    return ss_order, k0


def iter_class_data(params: GroupParams):
    """Full class enumeration, partitions included; used for cross-checks."""
    for blocks in _semisimple_data(params):
        pools = [_PARTITIONS[mu] for _, mu in blocks]
        for parts in product(*pools):
            yield ClassDatum(blocks=blocks, partitions=parts)


def class_order(params: GroupParams, datum: ClassDatum,
                group: str = GROUP_FULL) -> int:
    """Exact order of any element with this conjugacy datum."""
    ss_order, k0 = _orders_for_blocks(params, datum.blocks)
    largest = max(max(part) for part in datum.partitions)
    up = _p_part(params.p, largest)
    if group == GROUP_FULL:
        return up * ss_order
    if group == GROUP_PROJECTIVE:
        return math.lcm(up, k0)
    raise ValueError(f"unknown group flavor {group!r}")


@lru_cache(maxsize=None)
def _omega_sets(params: GroupParams) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if params.q > SPECTRUM_Q_CAP:
        raise ValueError(
            f"spectrum enumeration is capped at q <= {SPECTRUM_Q_CAP}")
    p = params.p
    full: set[int] = set()
    proj: set[int] = set()
    for blocks in _semisimple_data(params):
        ss_order, k0 = _orders_for_blocks(params, blocks)
        max_mu = max(mu for _, mu in blocks)
        for b in range(1, max_mu + 1):
            up = _p_part(p, b)
            full.add(up * ss_order)
            proj.add(math.lcm(up, k0))
    return tuple(sorted(full)), tuple(sorted(proj))


def omega(params: GroupParams, group: str = GROUP_FULL) -> tuple[int, ...]:
    """All element orders of the chosen flavor, ascending."""
    full, proj = _omega_sets(params)
    if group == GROUP_FULL:
        return full
    if group == GROUP_PROJECTIVE:
        return proj
    raise ValueError(f"unknown group flavor {group!r}")


def member(orders, x: int) -> bool:
    """Spectrum membership: x divides some attained order."""
    if x < 1:
        raise ValueError("order must be positive")
    return any(o % x == 0 for o in orders)


_DUMP_HEADER = re.compile(r"^# epsilon=([+-]) q=(\d+) group=(SL|PSL)$")


def format_dump(params: GroupParams, group: str = GROUP_PROJECTIVE) -> str:
    """One header line, then the orders in ascending decimal, one per line."""
    orders = omega(params, group)
    head = f"# epsilon={sign_to_str(params.epsilon)} q={params.q} group={group}"
    return "\n".join([head, *map(str, orders)]) + "\n"


def parse_dump(text: str):
    """Inverse of format_dump; returns (params, group, orders)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty spectrum dump")
    got = _DUMP_HEADER.match(lines[0])
    if not got:
        raise ValueError(f"bad spectrum header: {lines[0]!r}")
    eps = sign_from_str(got.group(1))
    q = int(got.group(2))
    powers = arith.factorize(q)
    if len(powers) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    params = derive(eps, powers[0].prime, powers[0].exponent)
    orders = tuple(int(ln) for ln in lines[1:])
    if any(a >= b for a, b in zip(orders, orders[1:])) or not orders:
        raise ValueError("spectrum orders must be strictly ascending")
    return params, got.group(3), orders
