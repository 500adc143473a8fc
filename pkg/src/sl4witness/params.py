"""Derived constants for the groups SL4^eps(q) and their central quotients.

eps = +1 selects the linear family, eps = -1 the unitary one; q = p^m is an
odd prime power.  All downstream modules consume a GroupParams value rather
than recomputing these quantities.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from . import arith

# q beyond this makes the quartic factorizations needed for target orders
# impractically slow, so derive() refuses larger inputs.
Q_CAP = 1 << 16

PLUS = 1
MINUS = -1

KIND_R4 = "R4"
KIND_R3 = "R3"
KIND_TWO_PART = "TwoPartQ2M1"
KIND_R2_TWO_PART = "R2TimesTwoPart"


def sign_from_str(s: str) -> int:
    if s == "+":
        return PLUS
    if s == "-":
        return MINUS
    raise ValueError(f"epsilon must be '+' or '-', got {s!r}")


def sign_to_str(eps: int) -> str:
    if eps == PLUS:
        return "+"
    if eps == MINUS:
        return "-"
    raise ValueError(f"epsilon must be +1 or -1, got {eps!r}")


@dataclass(frozen=True)
class GroupParams:
    epsilon: int
    p: int
    m: int
    q: int
    q_minus_eps: int
    q_plus_eps: int
    phi3: int  # q^2 + eps*q + 1
    phi4: int  # q^2 + 1
    two_part_qme: int  # (q - eps)_2
    two_part_q2m1: int  # (q^2 - 1)_2
    center_order: int  # gcd(4, q - eps)


def derive(epsilon: int, p: int, m: int) -> GroupParams:
    """Validate (epsilon, p, m) and compute the derived constants."""
    if epsilon not in (PLUS, MINUS):
        raise ValueError("epsilon must be +1 or -1")
    if p < 3 or p % 2 == 0 or not arith.is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    q = p**m
    if q > Q_CAP:
        raise ValueError(f"q = {q} exceeds supported bound {Q_CAP}")
    q_minus_eps = q - epsilon
    q_plus_eps = q + epsilon
    return GroupParams(
        epsilon=epsilon,
        p=p,
        m=m,
        q=q,
        q_minus_eps=q_minus_eps,
        q_plus_eps=q_plus_eps,
        phi3=q * q + epsilon * q + 1,
        phi4=q * q + 1,
        two_part_qme=arith.two_part(q_minus_eps),
        two_part_q2m1=arith.two_part(q * q - 1),
        center_order=math.gcd(4, q_minus_eps),
    )


@dataclass(frozen=True)
class TargetOrderKind:
    """One admissible witness order family; order is None when the family
    does not apply at these parameters."""

    kind: str
    order: int | None
    applicable: bool


@lru_cache(maxsize=None)
def target_orders(params: GroupParams) -> tuple[TargetOrderKind, ...]:
    """The witness-order families for these parameters.

    R4, R3 and TwoPartQ2M1 always apply; R2TimesTwoPart applies exactly when
    3 < q and q = eps (mod 4).  For applicable families the primitive prime
    divisors involved are guaranteed to exist, so a None from
    primitive_prime_divisor means an internal defect.
    """
    eps, q = params.epsilon, params.q
    r4 = arith.primitive_prime_divisor(q, 4, eps)
    r3 = arith.primitive_prime_divisor(q, 3, eps)
    if r4 is None or r3 is None:
        raise ArithmeticError("primitive divisor existence guarantee violated")
    r2_applies = q > 3 and q % 4 == eps % 4
    r2_order = None
    if r2_applies:
        r2 = arith.primitive_prime_divisor(q, 2, eps)
        if r2 is None:
            raise ArithmeticError("primitive divisor existence guarantee violated")
        r2_order = r2 * params.two_part_qme
    return (
        TargetOrderKind(KIND_R4, r4, True),
        TargetOrderKind(KIND_R3, r3, True),
        TargetOrderKind(KIND_TWO_PART, params.two_part_q2m1, True),
        TargetOrderKind(KIND_R2_TWO_PART, r2_order, r2_applies),
    )
