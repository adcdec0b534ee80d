"""Exact arithmetic in GF(p^d) with a deterministic integer encoding.

An element sum(c_i * x^i) of GF(p^d) = F_p[x]/(m(x)) is encoded as the
integer sum(c_i * p^i), so codes run over [0, q) with 0 and 1 the additive
and multiplicative identities.  Two choices make the encoding reproducible
across runs and implementations:

* the modulus m(x) is the monic irreducible of degree d whose coefficient
  tuple (c_{d-1}, ..., c_0) is lexicographically smallest, and
* the stored primitive element g is the smallest code of multiplicative
  order q - 1.

Multiplicative structure is handled through exp/log tables built from g;
addition works digit-wise in base p (with a full table for small fields).
All operations take and return plain integer codes.
"""

from __future__ import annotations

from .errors import PreconditionError

# Full q x q addition table below this order; exp/log tables are always built.
ADD_TABLE_MAX_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Decompose q = p^d with p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p = fs[0]
    d = 0
    while q % p == 0:
        q //= p
        d += 1
    return (p, d) if q == 1 else None


# -- polynomial helpers over F_p (coefficient lists, low degree first) --


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p) if m[-1] != 1 else 1
    while len(a) - 1 >= dm and _poly_trim(a):
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _poly_trim(a)
    return a


def _poly_mul_mod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    return _poly_mod(prod, m, p)


def _monic_polys(degree: int, p: int):
    """All monic degree-`degree` polynomials, low-first coefficient lists."""
    def rec(coeffs, pos):
        if pos == degree:
            yield coeffs + [1]
            return
        for c in range(p):
            yield from rec(coeffs + [c], pos + 1)
    yield from rec([], 0)


def _is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    d = len(m) - 1
    for div_deg in range(1, d // 2 + 1):
        for divisor in _monic_polys(div_deg, p):
            if not _poly_mod(m, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, d: int) -> list[int]:
    # Lexicographic order on the tuple (c_{d-1}, ..., c_0).
    def rec(high_to_low):
        if len(high_to_low) == d:
            m = list(reversed(high_to_low)) + [1]
            return m if _is_irreducible(m, p) else None
        for c in range(p):
            found = rec(high_to_low + [c])
            if found is not None:
                return found
        return None

    m = rec([])
    if m is None:  # cannot happen: irreducibles exist for every (p, d)
        raise PreconditionError(f"no irreducible polynomial of degree {d} over F_{p}")
    return m


class FieldContext:
    """GF(p^d) with canonical integer-coded elements.

    Construct via :func:`make_field`.  Immutable after construction; every
    operation is a pure function of its integer-code arguments.
    """

    def __init__(self, p: int, d: int, max_order: int = 2**20):
        if not is_prime(p):
            raise PreconditionError(f"characteristic {p} is not prime")
        if d < 1:
            raise PreconditionError(f"extension degree must be >= 1, got {d}")
        q = p**d
        if q > max_order:
            raise PreconditionError(f"field order {p}^{d} exceeds the limit {max_order}")
        self.p = p
        self.d = d
        self.q = q
        self.modulus: tuple[int, ...] = tuple(_smallest_irreducible(p, d))

        self._qm1_factors = prime_factors(q - 1) if q > 2 else []
        self.g = self._find_primitive()
        self._exp, self._log = self._build_mul_tables()
        self._add_table = self._build_add_table() if q <= ADD_TABLE_MAX_ORDER else None

    # -- bootstrap arithmetic (polynomial form), used only during setup --

    def _decode(self, a: int) -> list[int]:
        coeffs = []
        for _ in range(self.d):
            a, c = divmod(a, self.p)
            coeffs.append(c)
        return _poly_trim(coeffs)

    def _encode(self, coeffs: list[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def _mul_raw(self, a: int, b: int) -> int:
        return self._encode(
            _poly_mul_mod(self._decode(a), self._decode(b), list(self.modulus), self.p)
        )

    def _pow_raw(self, a: int, k: int) -> int:
        result = 1
        base = a
        while k:
            if k & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            k >>= 1
        return result

    def _order_raw(self, a: int) -> int:
        # order divides q-1; strip each prime factor while the power stays 1
        order = self.q - 1
        for r in self._qm1_factors:
            while order % r == 0 and self._pow_raw(a, order // r) == 1:
                order //= r
        return order

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            if self._order_raw(a) == self.q - 1:
                return a
        raise PreconditionError("no primitive element found")  # unreachable

    def _build_mul_tables(self) -> tuple[list[int], list[int]]:
        exp = [1] * (self.q - 1)
        log = [0] * self.q  # log[0] unused
        for k in range(1, self.q - 1):
            exp[k] = self._mul_raw(exp[k - 1], self.g)
        for k, v in enumerate(exp):
            log[v] = k
        return exp, log

    def _build_add_table(self) -> list[list[int]]:
        table = []
        for a in range(self.q):
            da = self._decode(a) + [0] * self.d
            row = []
            for b in range(self.q):
                db = self._decode(b)
                s = da[: self.d]
                for i, c in enumerate(db):
                    s[i] = (s[i] + c) % self.p
                row.append(self._encode(s))
            table.append(row)
        return table

    # -- public operations on integer codes --

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise PreconditionError(f"code {a} outside [0, {self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        self._check(a)
        self._check(b)
        da, db = self._decode(a) + [0] * self.d, self._decode(b)
        s = da[: self.d]
        for i, c in enumerate(db):
            s[i] = (s[i] + c) % self.p
        return self._encode(s)

    def neg(self, a: int) -> int:
        self._check(a)
        da = self._decode(a)
        return self._encode([(-c) % self.p for c in da])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            self._check(a)
            self._check(b)
            return 0
        return self._exp[(self._log[self._check(a)] + self._log[self._check(b)]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise PreconditionError("0 has no multiplicative inverse")
        return self._exp[(-self._log[self._check(a)]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        self._check(a)
        if a == 0:
            if k < 0:
                raise PreconditionError("0 cannot be raised to a negative power")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def frobenius(self, a: int, e: int = 1) -> int:
        """a^(p^e), the e-th power of the Frobenius automorphism."""
        if not 0 <= e < self.d:
            raise PreconditionError(f"Frobenius exponent must lie in [0, {self.d})")
        return self.pow(a, self.p**e)

    def element_order(self, a: int) -> int:
        if self._check(a) == 0:
            raise PreconditionError("0 has no multiplicative order")
        if a == 1:
            return 1
        order = self.q - 1
        for r in self._qm1_factors:
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def is_square(self, a: int) -> bool:
        """Whether a is a square in GF(q)*; every nonzero element is for even q."""
        if self._check(a) == 0:
            raise PreconditionError("square-class of 0 is undefined")
        if self.q % 2 == 0:
            return True
        return self._log[a] % 2 == 0

    def primitive_sixth_root(self) -> int:
        """epsilon = g^((q-1)/6), of multiplicative order exactly 6."""
        if (self.q - 1) % 6 != 0:
            raise PreconditionError(f"6 does not divide q - 1 = {self.q - 1}")
        return self._exp[(self.q - 1) // 6]

    def smallest_nonsquare(self) -> int:
        if self.q % 2 == 0:
            raise PreconditionError("every nonzero element of an even-order field is a square")
        for a in range(1, self.q):
            if not self.is_square(a):
                return a
        raise PreconditionError("no non-square exists")  # unreachable for odd q

    def __repr__(self) -> str:
        return f"GF({self.q})"


def make_field(p: int, d: int, max_order: int = 2**20) -> FieldContext:
    """Construct GF(p^d) with the canonical modulus and primitive element."""
    return FieldContext(p, d, max_order=max_order)


def field_for_order(q: int, max_order: int = 2**20) -> FieldContext:
    """Construct GF(q), factoring q = p^d; rejects non-prime-powers."""
    pd = prime_power(q)
    if pd is None:
        raise PreconditionError(f"{q} is not a prime power")
    return make_field(*pd, max_order=max_order)
