"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is stored as an integer coefficient vector over the power basis
1, z, ..., z^(phi(N)-1) of Q(zeta_N) together with a positive integer
denominator.  Construction always canonicalizes: coefficients are reduced
modulo the N-th cyclotomic polynomial, the representation is deflated to
the smallest cyclotomic field containing the value, and the gcd of all
integers is divided out.  Equal values therefore have bit-identical
representations and hash consistently, even when they were created at
different root orders.

Binary operations unify orders lazily to the lcm, so computations that
stay inside one field never pay for order juggling.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

__all__ = [
    "CyclotomicScalar",
    "ScalarError",
    "ZERO",
    "ONE",
    "MINUS_ONE",
    "zeta",
    "integer",
    "rational",
    "root_exponent",
    "root_of_unity_order",
    "parse_scalar",
    "scalar_to_json",
    "format_scalar",
    "get_max_order",
    "set_max_order",
    "euler_phi",
]


class ScalarError(ValueError):
    """Raised for malformed literals, unsupported orders or division by zero."""


# Root orders are capped so that a runaway lcm cascade fails loudly instead
# of silently allocating huge coefficient vectors.
_MAX_ORDER = 240
_FRACTION_RE = re.compile(r"-?\d+(/\d+)?")


def get_max_order() -> int:
    return _MAX_ORDER


def set_max_order(n: int) -> None:
    global _MAX_ORDER
    if n < 1:
        raise ScalarError("max order must be positive")
    _MAX_ORDER = n


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder by a monic integer polynomial."""
    num = list(num)
    dd = len(den) - 1
    q = [0] * max(1, len(num) - dd)
    for top in range(len(num) - 1, dd - 1, -1):
        c = num[top]
        if c:
            q[top - dd] = c
            for i in range(dd + 1):
                num[top - dd + i] -= c * den[i]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree."""
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
            assert rem == [0], "cyclotomic division must be exact"
    return tuple(poly)


def _reduce_mod_cyclotomic(coeffs: list[int], n: int) -> list[int]:
    phi = euler_phi(n)
    cp = cyclotomic_polynomial(n)
    coeffs = list(coeffs)
    for top in range(len(coeffs) - 1, phi - 1, -1):
        c = coeffs[top]
        if c:
            coeffs[top] = 0
            for i in range(phi):
                coeffs[top - phi + i] -= c * cp[i]
    coeffs = coeffs[:phi] + [0] * (phi - len(coeffs))
    return coeffs[:phi]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class _SubfieldSolver:
    """Solves a = sum_j c_j * zeta_N^{(N/M) j} for the subfield Q(zeta_M)."""

    def __init__(self, n: int, m: int):
        phi_n, phi_m = euler_phi(n), euler_phi(m)
        cols = []
        for j in range(phi_m):
            raw = [0] * ((n // m) * j + 1)
            raw[-1] = 1
            cols.append(_reduce_mod_cyclotomic(raw, n))
        # row-reduce [B | I] over Q, keeping the transform
        rows = [[Fraction(cols[j][i]) for j in range(phi_m)] for i in range(phi_n)]
        ident = [[Fraction(int(i == j)) for j in range(phi_n)] for i in range(phi_n)]
        pivots: list[int] = []
        r = 0
        for c in range(phi_m):
            pr = next((i for i in range(r, phi_n) if rows[i][c] != 0), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            ident[r], ident[pr] = ident[pr], ident[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            ident[r] = [x * inv for x in ident[r]]
            for i in range(phi_n):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                    ident[i] = [x - f * y for x, y in zip(ident[i], ident[r])]
            pivots.append(c)
            r += 1
        assert len(pivots) == phi_m, "subfield basis must be independent"
        self.rank = r
        self.transform = ident
        self.phi_n = phi_n
        self.phi_m = phi_m

    def solve(self, vec: list[int]) -> list[Fraction] | None:
        ev = [sum(row[i] * vec[i] for i in range(self.phi_n) if vec[i]) for row in self.transform]
        if any(ev[i] != 0 for i in range(self.rank, self.phi_n)):
            return None
        return ev[: self.phi_m]


@lru_cache(maxsize=None)
def _subfield_solver(n: int, m: int) -> _SubfieldSolver:
    return _SubfieldSolver(n, m)


def _deflate(order: int, num: list[int], den: int) -> tuple[int, list[int], int]:
    """Rewrite in the smallest cyclotomic field containing the value."""
    while order > 1:
        if not any(num[1:]):
            return 1, [num[0]], den
        for p in _prime_factors(order):
            m = order // p
            sol = _subfield_solver(order, m).solve(num)
            if sol is not None:
                denoms = lcm(*(f.denominator for f in sol)) if sol else 1
                num = [int(f * denoms) for f in sol]
                den *= denoms
                order = m
                break
        else:
            break
    return order, num, den


def _normalize(order: int, num: list[int], den: int) -> tuple[int, tuple[int, ...], int]:
    if den == 0:
        raise ScalarError("zero denominator")
    if den < 0:
        den, num = -den, [-c for c in num]
    if not any(num):
        return 1, (0,), 1
    order, num, den = _deflate(order, num, den)
    g = den
    for c in num:
        g = gcd(g, c)
    if g > 1:
        den //= g
        num = [c // g for c in num]
    return order, tuple(num), den


class CyclotomicScalar:
    """An element of some Q(zeta_N), canonicalized at the minimal such N."""

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, num, den: int = 1, _raw: bool = False):
        if order < 1:
            raise ScalarError("order must be positive")
        if order > _MAX_ORDER:
            raise ScalarError(f"root order {order} exceeds cap {_MAX_ORDER}")
        coeffs = [int(c) for c in num]
        if not _raw:
            coeffs = _reduce_mod_cyclotomic(coeffs, order)
            order, coeffs, den = _normalize(order, coeffs, den)
        self.order = order
        self.num = tuple(coeffs)
        self.den = den
        self._hash = hash((order, self.num, den))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.order == 1 and self.num[0] == 0

    def is_one(self) -> bool:
        return self.order == 1 and self.num == (1,) and self.den == 1

    def is_rational(self) -> bool:
        return self.order == 1

    def as_fraction(self) -> Fraction:
        if self.order != 1:
            raise ScalarError("not a rational number")
        return Fraction(self.num[0], self.den)

    # -- order unification ---------------------------------------------

    def _at_order(self, n: int) -> list[int]:
        """Coefficient vector of self inside Q(zeta_n); requires order | n."""
        if n == self.order:
            return list(self.num)
        step = n // self.order
        raw = [0] * ((len(self.num) - 1) * step + 1)
        for e, c in enumerate(self.num):
            if c:
                raw[e * step] = c
        return _reduce_mod_cyclotomic(raw, n)

    @staticmethod
    def _unify(a: "CyclotomicScalar", b: "CyclotomicScalar"):
        n = lcm(a.order, b.order)
        if n > _MAX_ORDER:
            raise ScalarError(f"root order {n} exceeds cap {_MAX_ORDER}")
        return n, a._at_order(n), b._at_order(n)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        n, av, bv = self._unify(self, other)
        da, db = self.den, other.den
        num = [c * db for c in av]
        for i, c in enumerate(bv):
            num[i] += c * da
        return CyclotomicScalar(n, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.order, tuple(-c for c in self.num), self.den, _raw=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        n, av, bv = self._unify(self, other)
        return CyclotomicScalar(n, _poly_mul(av, bv), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        if self.is_zero():
            raise ScalarError("division by zero")
        if self.order == 1:
            return CyclotomicScalar(1, (self.den,), self.num[0])
        # extended Euclid in Q[x]: find s with s * self ~ gcd(self, Phi_N) = const
        n = self.order

        def _trim(p: list[Fraction]) -> list[Fraction]:
            while len(p) > 1 and p[-1] == 0:
                p.pop()
            return p

        r0 = _trim([Fraction(c) for c in cyclotomic_polynomial(n)])
        r1 = _trim([Fraction(c) for c in self.num])
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            if len(r0) < len(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            f = r0[-1] / r1[-1]
            shift = len(r0) - len(r1)
            for i in range(len(r1)):
                r0[shift + i] -= f * r1[i]
            while len(s0) < len(s1) + shift:
                s0.append(Fraction(0))
            for i in range(len(s1)):
                s0[shift + i] -= f * s1[i]
            _trim(r0)
            r0, r1, s0, s1 = r1, r0, s1, s0
        # r0 = gcd (nonzero constant), s0 * self.num = r0 mod Phi
        if len(r0) != 1 or r0[0] == 0:
            raise ScalarError("inverse failed; value not invertible mod Phi_N")
        inv_coeffs = [c / r0[0] for c in s0]
        denoms = lcm(*(f.denominator for f in inv_coeffs)) if inv_coeffs else 1
        ints = [int(f * denoms) for f in inv_coeffs]
        return CyclotomicScalar(n, _poly_mul(ints, [self.den]), denoms)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def conjugate(self) -> "CyclotomicScalar":
        """Complex conjugation, zeta_N -> zeta_N^(N-1)."""
        return self.galois(-1)

    def galois(self, k: int) -> "CyclotomicScalar":
        """Apply zeta_N -> zeta_N^k; k must be coprime to the order."""
        n = self.order
        k %= n
        if n == 1:
            return self
        if gcd(k, n) != 1:
            raise ScalarError(f"galois exponent {k} not coprime to {n}")
        raw = [0] * n
        for e, c in enumerate(self.num):
            if c:
                raw[(e * k) % n] += c
        return CyclotomicScalar(n, raw, self.den)

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.order, self.num, self.den) == (other.order, other.num, other.den)

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicScalar({self.order}, {list(self.num)}, {self.den})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x) -> "CyclotomicScalar":
    if isinstance(x, CyclotomicScalar):
        return x
    if isinstance(x, int):
        return CyclotomicScalar(1, (x,), 1)
    if isinstance(x, Fraction):
        return CyclotomicScalar(1, (x.numerator,), x.denominator)
    return NotImplemented


ZERO = CyclotomicScalar(1, (0,), 1)
ONE = CyclotomicScalar(1, (1,), 1)
MINUS_ONE = CyclotomicScalar(1, (-1,), 1)


def integer(k: int) -> CyclotomicScalar:
    return CyclotomicScalar(1, (k,), 1)


def rational(p: int, q: int) -> CyclotomicScalar:
    return CyclotomicScalar(1, (p,), q)


def zeta(n: int, e: int = 1) -> CyclotomicScalar:
    """The root of unity zeta_n^e."""
    if n < 1:
        raise ScalarError("order must be positive")
    e %= n
    raw = [0] * (e + 1)
    raw[e] = 1
    return CyclotomicScalar(n, raw, 1)


@lru_cache(maxsize=None)
def _root_table(n: int) -> dict[CyclotomicScalar, int]:
    return {zeta(n, e): e for e in range(n)}


def root_exponent(a: CyclotomicScalar, n: int) -> int | None:
    """The exponent e with a == zeta_n^e, or None."""
    if n > _MAX_ORDER:
        raise ScalarError(f"root order {n} exceeds cap {_MAX_ORDER}")
    return _root_table(n).get(a)


def root_of_unity_order(a: CyclotomicScalar) -> int | None:
    """Multiplicative order of a if a is a root of unity, else None."""
    if a.is_zero():
        return None
    m = a.order
    bound = m if m % 2 == 0 else 2 * m
    if a ** bound != ONE:
        return None
    for d in range(1, bound + 1):
        if bound % d == 0 and a ** d == ONE:
            return d
    return None  # pragma: no cover


# -- JSON literals ------------------------------------------------------


def parse_scalar(obj) -> CyclotomicScalar:
    """Parse a scalar literal.

    Accepts {"N": int, "num": [int, ...], "den": int}, plain integers,
    the shorthand strings "0", "1", "-1", "i", "-i", "zN" or "zN^e",
    and integer or fraction strings like "7" or "-3/4".
    """
    if isinstance(obj, CyclotomicScalar):
        return obj
    if isinstance(obj, bool):
        raise ScalarError("booleans are not scalars")
    if isinstance(obj, int):
        return integer(obj)
    if isinstance(obj, str):
        s = obj.strip()
        simple = {"0": ZERO, "1": ONE, "-1": MINUS_ONE, "i": zeta(4), "-i": zeta(4, 3)}
        if s in simple:
            return simple[s]
        if _FRACTION_RE.fullmatch(s):
            p, _, q = s.partition("/")
            if q and int(q) == 0:
                raise ScalarError(f"zero denominator in {obj!r}")
            return rational(int(p), int(q)) if q else integer(int(p))
        if s.startswith("z"):
            body = s[1:]
            if "^" in body:
                base, _, exp = body.partition("^")
            else:
                base, exp = body, "1"
            try:
                return zeta(int(base), int(exp))
            except ValueError as err:
                raise ScalarError(f"bad root literal {obj!r}") from err
        raise ScalarError(f"unknown scalar literal {obj!r}")
    if isinstance(obj, dict):
        try:
            n = obj["N"]
            num = obj["num"]
            den = obj.get("den", 1)
        except (KeyError, TypeError) as err:
            raise ScalarError(f"bad scalar object {obj!r}") from err
        if not isinstance(n, int) or not isinstance(den, int) or not isinstance(num, list):
            raise ScalarError(f"bad scalar object {obj!r}")
        if not all(isinstance(c, int) for c in num):
            raise ScalarError(f"scalar coefficients must be integers: {obj!r}")
        if n < 1:
            raise ScalarError("scalar order must be positive")
        if den == 0:
            raise ScalarError("scalar denominator must be nonzero")
        return CyclotomicScalar(n, num, den)
    raise ScalarError(f"cannot parse scalar from {type(obj).__name__}")


def scalar_to_json(a: CyclotomicScalar):
    """Compact literal when one exists (int, "p/q", "zN^e"), else the full dict.

    Every output is accepted back by parse_scalar.
    """
    if a.order == 1:
        f = a.as_fraction()
        return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if root_exponent(a, a.order) is not None:
        return format_scalar(a)
    return {"N": a.order, "num": list(a.num), "den": a.den}


def format_scalar(a: CyclotomicScalar) -> str:
    """Readable form used in reports; round-trips through parse for roots."""
    if a.order == 1:
        f = a.as_fraction()
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    e = root_exponent(a, a.order)
    if e is not None:
        return f"z{a.order}^{e}"
    terms = []
    for k, c in enumerate(a.num):
        if c:
            terms.append(f"{c}*z{a.order}^{k}")
    body = " + ".join(terms)
    return body if a.den == 1 else f"({body})/{a.den}"
