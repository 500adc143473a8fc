"""Explicit small finite fields, 4x4 matrices, and sampling cross-checks.

Field elements are little-endian coefficient tuples of polynomials modulo a
monic irreducible.  The modulus is found by a counter scan, so repeated runs
always pick the same field and the same element tables; nothing here is
randomized except sample_orders, which takes an explicit seed.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import arith


class RealizationError(RuntimeError):
    """A certificate could not be realized as an explicit matrix."""


# ---------------------------------------------------------------------------
# bare polynomial helpers (little-endian coefficient lists, used only while
# hunting for an irreducible modulus)

def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    df = len(f) - 1
    for deg in range(len(out) - 1, df - 1, -1):
        c = out[deg]
        if c:
            out[deg] = 0
            for j in range(df):
                out[deg - df + j] = (out[deg - df + j] - c * f[j]) % p
    return _ptrim(out[:df])


def _ppowmod(a, e, f, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, f, p)
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        for shift in range(len(r) - len(b), -1, -1):
            c = (r[shift + len(b) - 1] * inv) % p
            if c:
                for j, bj in enumerate(b):
                    r[shift + j] = (r[shift + j] - c * bj) % p
        a, b = b, _ptrim(r)
    return a


def _is_irreducible(f, p):
    """Monic f of degree k: no factor of degree <= k // 2 survives the sieve.

    The i-th pass computes gcd(x^(p^i) - x, f); any factor of degree
    dividing i shows up there, and an irreducible f of degree k > k // 2
    never does, so no final confirmation step is needed.
    """
    k = len(f) - 1
    u = [0, 1]
    for _ in range(1, k // 2 + 1):
        u = _ppowmod(u, p, f, p)
        diff = list(u) + [0] * (2 - len(u))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(diff, f, p)
        if len(g) - 1 >= 1:
            return False
    return True


# ---------------------------------------------------------------------------

class Field:
    """F_{p^k}; elements are length-k tuples, constant coefficient first."""

    def __init__(self, p: int, k: int, modulus: tuple):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k
        self.zero = (0,) * k
        self.one = tuple(1 if i == 0 else 0 for i in range(k))
        # modulus is monic, so x^k folds down to minus its lower part
        self._xk = tuple((-c) % p for c in modulus[:k])

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k})"

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        if a == self.zero or b == self.zero:
            return self.zero
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        xk = self._xk
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg] % p
            if c:
                base = deg - k
                for j, rj in enumerate(xk):
                    if rj:
                        prod[base + j] += c * rj
        return tuple(c % p for c in prod[:k])

    def pow(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponents are not supported")
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def element(self, index: int):
        """The index-th element: base-p digits of index, least digit first."""
        if not 0 <= index < self.order:
            raise ValueError("element index out of range")
        digits = []
        n = index
        for _ in range(self.k):
            digits.append(n % self.p)
            n //= self.p
        return tuple(digits)


@lru_cache(maxsize=None)
def build_field(p: int, k: int) -> Field:
    """F_{p^k} with the first monic irreducible modulus in counter order."""
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    idx = 0
    while idx < p**k:
        digits = []
        n = idx
        for _ in range(k):
            digits.append(n % p)
            n //= p
        f = [*digits, 1]
        if _is_irreducible(f, p):
            return Field(p, k, tuple(f))
        idx += 1
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def element_of_order(field: Field, n: int):
    """Deterministic element of exact multiplicative order n."""
    if n < 1 or (field.order - 1) % n != 0:
        raise ValueError(f"F_{field.order} has no element of order {n}")
    cofactor = (field.order - 1) // n
    checks = [] if n == 1 else [n // ell for ell in arith.prime_divisors(n)]
    for idx in range(1, field.order):
        y = field.pow(field.element(idx), cofactor)
        if all(field.pow(y, c) != field.one for c in checks):
            return y
    raise RealizationError(f"no element of order {n} found")  # unreachable


@dataclass(frozen=True)
class Matrix4:
    field: Field
    rows: tuple

    def mul(self, other: "Matrix4") -> "Matrix4":
        F = self.field
        zero = F.zero
        out = []
        for i in range(4):
            row = []
            for j in range(4):
                acc = zero
                for l in range(4):
                    a = self.rows[i][l]
                    if a != zero:
                        b = other.rows[l][j]
                        if b != zero:
                            acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return Matrix4(F, tuple(out))

    def is_identity(self) -> bool:
        F = self.field
        return all(self.rows[i][j] == (F.one if i == j else F.zero)
                   for i in range(4) for j in range(4))

    def is_scalar(self) -> bool:
        F = self.field
        first = self.rows[0][0]
        return first != F.zero and all(
            self.rows[i][j] == (first if i == j else F.zero)
            for i in range(4) for j in range(4))


def identity(field: Field) -> Matrix4:
    return Matrix4(field, tuple(
        tuple(field.one if i == j else field.zero for j in range(4))
        for i in range(4)))


def diagonal(field: Field, entries) -> Matrix4:
    entries = tuple(entries)
    if len(entries) != 4:
        raise ValueError("need exactly four diagonal entries")
    return Matrix4(field, tuple(
        tuple(entries[i] if i == j else field.zero for j in range(4))
        for i in range(4)))


def realize(cert, *, size_limit: int = arith.SIZE_LIMIT) -> Matrix4:
    """Materialize the certificate's diagonal element over F_{p^(12m)}.

    That one field contains every characteristic value the four cases can
    ask for, since each case modulus divides q^12 - 1.  The element order
    is recomputed by repeated multiplication and compared with the claim.
    """
    pr = cert.params
    k = 12 * pr.m
    if pr.p**k > size_limit:
        raise RealizationError(
            f"field F_{pr.p}^{k} exceeds the size limit")
    field = build_field(pr.p, k)
    theta = element_of_order(field, cert.theta_order)
    entries = tuple(field.pow(theta, e) for e in cert.exponents)
    det = field.one
    for v in entries:
        det = field.mul(det, v)
    if det != field.one:
        raise RealizationError("diagonal determinant is not 1")
    g = diagonal(field, entries)
    acc = g
    order = 1
    while not acc.is_identity():
        acc = acc.mul(g)
        order += 1
        if order > cert.theta_order:
            raise RealizationError("order exceeded the theta-order bound")
    if order != cert.claimed_order:
        raise RealizationError(
            f"explicit order {order} != claimed {cert.claimed_order}")
    return g


# ---------------------------------------------------------------------------
# randomized cross-check over the prime field

def _det4_mod(mats, q):
    """Determinants mod q of a (n, 4, 4) batch, via complementary 2x2 minors."""
    m = mats % q

    def minor(r0, r1, c0, c1):
        return (m[:, r0, c0] * m[:, r1, c1] - m[:, r0, c1] * m[:, r1, c0])

    det = (minor(0, 1, 0, 1) * minor(2, 3, 2, 3)
           - minor(0, 1, 0, 2) * minor(2, 3, 1, 3)
           + minor(0, 1, 0, 3) * minor(2, 3, 1, 2)
           + minor(0, 1, 1, 2) * minor(2, 3, 0, 3)
           - minor(0, 1, 1, 3) * minor(2, 3, 0, 2)
           + minor(0, 1, 2, 3) * minor(2, 3, 0, 1))
    return det % q


def sample_orders(q: int, count: int, seed: int = 0, *,
                  step_cap: int = 100_000):
    """Orders of `count` uniform random determinant-one 4x4 matrices mod q,
    together with the orders of their images mod scalars.

    Rejection-sample invertible matrices, then scale the first row by
    det^{-1}; every determinant-one matrix has the same number (q - 1) of
    invertible preimages under that map, so the result is uniform.  Returns
    (full_orders, projective_orders) as plain lists.
    """
    if q not in (3, 5):
        raise ValueError("sampling cross-check supports q in {3, 5} only")
    if not 1 <= count <= 10**6:
        raise ValueError("count out of range")
    rng = np.random.default_rng(seed)
    mats = rng.integers(0, q, size=(count, 4, 4), dtype=np.int64)
    dets = _det4_mod(mats, q)
    while True:
        bad = np.flatnonzero(dets == 0)
        if bad.size == 0:
            break
        fresh = rng.integers(0, q, size=(bad.size, 4, 4), dtype=np.int64)
        mats[bad] = fresh
        dets[bad] = _det4_mod(fresh, q)
    inv_table = np.array([0] + [pow(v, q - 2, q) for v in range(1, q)],
                         dtype=np.int64)
    mats[:, 0, :] = (mats[:, 0, :] * inv_table[dets][:, None]) % q

    full = np.zeros(count, dtype=np.int64)
    proj = np.zeros(count, dtype=np.int64)
    active = np.arange(count)
    powers = mats.copy()
    k = 1
    while active.size:
        cur = powers[active]
        diag = np.einsum("nii->ni", cur)
        off_zero = (cur.sum(axis=(1, 2)) - diag.sum(axis=1)) == 0
        scalar = off_zero & (diag == diag[:, :1]).all(axis=1)
        newly_scalar = scalar & (proj[active] == 0)
        proj[active[newly_scalar]] = k
        ident = scalar & (diag[:, 0] == 1)
        full[active[ident]] = k
        active = active[~ident]
        if active.size == 0:
            break
        powers[active] = np.matmul(powers[active], mats[active]) % q
        k += 1
        if k > step_cap:
            raise RealizationError("order search exceeded the step cap")
    return full.tolist(), proj.tolist()
