"""Exact arithmetic in GF(q) for prime powers q.

Elements are the integers 0..q-1.  An integer encodes the coefficient vector
of a residue polynomial in base p, least significant digit = constant term, so
0 is the field zero and 1 is the field one.  The reduction polynomial is the
smallest monic irreducible polynomial of degree m when its lower coefficients
are read as a base-p number with the x^(m-1) coefficient most significant
(x^2+x+1 for GF(4), x^3+x+1 for GF(8)).
"""

from __future__ import annotations

import functools
from itertools import product

from .errors import DivisionByZero, NotPrimePower

MAX_ORDER = 1 << 16

OPS = ("add", "mul", "inv", "neg", "sub", "div")


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p**m, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime divisors")
    return p, m


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePower:
        return False
    return True


# polynomials over GF(p): coefficient lists, constant term first

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = _poly_trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = a[-1] * inv_lead % p
        for i, coef in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * coef) % p
        _poly_trim(a)
    return a


def _monic_polys(degree, p):
    for lower in product(range(p), repeat=degree):
        yield list(reversed(lower)) + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(d, p):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    # _monic_polys walks lower coefficients with x^(m-1) slowest
    for poly in _monic_polys(m, p):
        if m == 1 or is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _factor(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """GF(q).  Immutable once built; use :func:`field_new` to get a cached instance."""

    def __init__(self, q: int):
        p, m = prime_power(q)
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds supported maximum {MAX_ORDER}")
        self.q, self.p, self.m = q, p, m
        self.reduction_polynomial = tuple(smallest_irreducible(p, m))
        self._build_tables()

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    # raw polynomial arithmetic, only used while building tables
    def _digits(self, a):
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _raw_mul(self, a, b):
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, self.reduction_polynomial, p)
        return self._undigits(rem + [0] * (self.m - len(rem)))

    def _raw_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _build_tables(self):
        q = self.q
        order = q - 1
        factors = _factor(order)
        if q == 2:
            gen = 1
        else:
            gen = next(
                g for g in range(2, q)
                if all(self._raw_pow(g, order // r) != 1 for r in factors)
            )
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self.generator = gen
        self._exp, self._log = exp, log

    # public arithmetic on integer-encoded elements
    def check(self, a: int) -> int:
        if not (isinstance(a, int) and 0 <= a < self.q):
            raise ValueError(f"{a!r} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p, v, scale = self.p, 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            v += ((x + y) % p) * scale
            scale *= p
        return v

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p, v, scale = self.p, 0, 1
        while a:
            a, x = divmod(a, p)
            v += ((-x) % p) * scale
            scale *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)


@functools.lru_cache(maxsize=None)
def field_new(q: int) -> Field:
    return Field(q)


def field_arith(f: Field, a: int, b: int | None = None, op: str = "add") -> int:
    """Dispatch one field operation by name; unary ops ignore ``b``."""
    if op not in OPS:
        raise ValueError(f"unknown field operation {op!r}")
    f.check(a)
    if op in ("inv", "neg"):
        return getattr(f, op)(a)
    f.check(b)
    return getattr(f, op)(a, b)


# linear algebra over GF(q)

def row_reduce(f: Field, matrix) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(f: Field, matrix) -> int:
    return len(row_reduce(f, matrix)[1])


def nullspace(f: Field, matrix) -> list[list[int]]:
    """Basis of {x : M x = 0}, one vector per free column."""
    ncols = len(matrix[0])
    rows, pivots = row_reduce(f, matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = f.neg(rows[i][fc])
        basis.append(vec)
    return basis
