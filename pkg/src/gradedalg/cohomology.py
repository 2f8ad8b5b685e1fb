"""Finite abelian groups and multiplicative cochain calculus.

Groups are finite products of cyclic groups; elements are residue tuples
enumerated in mixed-radix order (last coordinate fastest).  Cochains take
values in the multiplicative group of cyclotomic scalars.  The coboundary
conventions are

    d1(tau)(i,j)   = tau(i) tau(j) tau(i+j)^-1
    d2(kappa)(i,j,k) = kappa(j,k) kappa(i,j+k) kappa(i+j,k)^-1 kappa(i,j)^-1

so d2(d1(tau)) is identically one and 2-cocycles are the kernel of d2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd, lcm

from .scalars import (
    CyclotomicScalar,
    ONE,
    ScalarError,
    get_max_order,
    parse_scalar,
    root_exponent,
    root_of_unity_order,
    scalar_to_json,
    zeta,
)

__all__ = [
    "FinAbGroup",
    "Cochain1",
    "Cochain2",
    "Cochain3",
    "AbelianCocycleData",
    "CheckReport",
    "d1",
    "d2",
    "d3",
    "check_cocycle2",
    "check_bicharacter",
    "check_cocycle3",
    "cohomologous",
    "validate_abelian3",
    "solve_congruences",
    "subgroup_presentation",
    "UnsupportedValueError",
]


class UnsupportedValueError(ValueError):
    """Raised when a solver needs roots of unity but got something else."""


MAX_VIOLATIONS = 200


@dataclass
class CheckReport:
    """Outcome of an exhaustive pointwise verification."""

    ok: bool
    violations: list = field(default_factory=list)
    truncated: bool = False

    def add(self, indices, lhs, rhs) -> None:
        self.ok = False
        if len(self.violations) < MAX_VIOLATIONS:
            self.violations.append({"indices": list(indices), "lhs": lhs, "rhs": rhs})
        else:
            self.truncated = True

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, CyclotomicScalar):
                return scalar_to_json(x)
            return x

        out = {
            "ok": self.ok,
            "violations": [
                {"indices": v["indices"], "lhs": enc(v["lhs"]), "rhs": enc(v["rhs"])}
                for v in self.violations
            ],
        }
        if self.truncated:
            out["truncated"] = True
        return out


class FinAbGroup:
    """A product of cyclic groups Z/n1 x ... x Z/nk."""

    def __init__(self, moduli):
        moduli = tuple(int(n) for n in moduli)
        if not moduli or any(n < 1 for n in moduli):
            raise ValueError("moduli must be positive integers")
        self.moduli = moduli
        self.elements: list[tuple[int, ...]] = list(product(*(range(n) for n in moduli)))
        self.index = {e: k for k, e in enumerate(self.elements)}
        self.order = len(self.elements)
        self.exponent = lcm(*moduli)

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.moduli)

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % n for x, n in zip(a, self.moduli))

    def element(self, a) -> tuple[int, ...]:
        """Coerce a residue tuple (or int for rank-1 groups) to canonical form."""
        if isinstance(a, int):
            a = (a,)
        a = tuple(int(x) % n for x, n in zip(a, self.moduli))
        if len(a) != len(self.moduli):
            raise ValueError(f"element rank mismatch for {a}")
        return a

    def element_order(self, a) -> int:
        return lcm(*(n // gcd(n, x) if x else 1 for x, n in zip(a, self.moduli)))

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return "FinAbGroup(%s)" % " x ".join(f"Z/{n}" for n in self.moduli)

    def to_json(self) -> dict:
        return {"cyclic": list(self.moduli)}

    @staticmethod
    def from_json(obj) -> "FinAbGroup":
        if not isinstance(obj, dict) or "cyclic" not in obj:
            raise ValueError(f"bad group object {obj!r}")
        return FinAbGroup(obj["cyclic"])


class _CochainBase:
    arity = 0

    def __init__(self, group: FinAbGroup, values):
        self.group = group
        self.values = values  # flat tuple over element-index tuples, row-major

    def __call__(self, *args) -> CyclotomicScalar:
        idx = 0
        for a in args:
            idx = idx * self.group.order + self.group.index[self.group.element(a)]
        return self.values[idx]

    @classmethod
    def from_function(cls, group: FinAbGroup, fn):
        vals = tuple(fn(*combo) for combo in product(group.elements, repeat=cls.arity))
        return cls(group, vals)

    @classmethod
    def trivial(cls, group: FinAbGroup):
        return cls(group, (ONE,) * (group.order ** cls.arity))

    def pointwise(self, other, op):
        if self.group != other.group:
            raise ValueError("cochains live on different groups")
        return type(self)(self.group, tuple(op(a, b) for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        return self.pointwise(other, lambda a, b: a * b)

    def __truediv__(self, other):
        return self.pointwise(other, lambda a, b: a / b)

    def inverse(self):
        return type(self)(self.group, tuple(v.inverse() for v in self.values))

    def __eq__(self, other):
        return (
            isinstance(other, type(self))
            and self.group == other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((type(self).__name__, self.group, self.values))

    def is_normalized(self) -> bool:
        zero = self.group.zero()
        for combo in product(self.group.elements, repeat=self.arity):
            if zero in combo and not self(*combo).is_one():
                return False
        return True

    def values_are_roots(self) -> bool:
        return all(root_of_unity_order(v) is not None for v in self.values)

    def to_json(self) -> dict:
        def pack(vals, arity):
            if arity == 1:
                return [scalar_to_json(v) for v in vals]
            n = self.group.order
            step = len(vals) // n
            return [pack(vals[i * step:(i + 1) * step], arity - 1) for i in range(n)]

        return {"group": self.group.to_json(), "values": pack(self.values, self.arity)}

    @classmethod
    def from_json(cls, obj):
        group = FinAbGroup.from_json(obj["group"])
        flat: list[CyclotomicScalar] = []

        def unpack(vals, arity):
            if arity == 1:
                if len(vals) != group.order:
                    raise ValueError("cochain table has wrong length")
                flat.extend(parse_scalar(v) for v in vals)
            else:
                if len(vals) != group.order:
                    raise ValueError("cochain table has wrong length")
                for sub in vals:
                    unpack(sub, arity - 1)

        unpack(obj["values"], cls.arity)
        return cls(group, tuple(flat))


class Cochain1(_CochainBase):
    arity = 1


class Cochain2(_CochainBase):
    arity = 2


class Cochain3(_CochainBase):
    arity = 3


def d1(tau: Cochain1) -> Cochain2:
    g = tau.group
    return Cochain2.from_function(g, lambda i, j: tau(i) * tau(j) / tau(g.add(i, j)))


def d2(kappa: Cochain2) -> Cochain3:
    g = kappa.group

    def fn(i, j, k):
        return (
            kappa(j, k)
            * kappa(i, g.add(j, k))
            / (kappa(g.add(i, j), k) * kappa(i, j))
        )

    return Cochain3.from_function(g, fn)


def d3(psi: Cochain3):
    """The 4-coboundary as a callable; used only for cocycle verification."""
    g = psi.group

    def fn(i, j, k, l):
        return (
            psi(j, k, l)
            * psi(i, g.add(j, k), l)
            * psi(i, j, k)
            / (psi(g.add(i, j), k, l) * psi(i, j, g.add(k, l)))
        )

    return fn


def check_cocycle2(kappa: Cochain2) -> CheckReport:
    """Normalization and d2(kappa) = 1, with a violation list."""
    g = kappa.group
    report = CheckReport(ok=True)
    if not kappa.is_normalized():
        report.add(["normalization"], "kappa(0,-) or kappa(-,0)", "1")
    for i in g.elements:
        for j in g.elements:
            for k in g.elements:
                lhs = kappa(j, k) * kappa(i, g.add(j, k))
                rhs = kappa(g.add(i, j), k) * kappa(i, j)
                if lhs != rhs:
                    report.add([list(i), list(j), list(k)], lhs, rhs)
    return report


def check_bicharacter(chi: Cochain2) -> CheckReport:
    """Multiplicativity in each argument separately."""
    g = chi.group
    report = CheckReport(ok=True)
    for i in g.elements:
        for j in g.elements:
            for k in g.elements:
                lhs = chi(g.add(i, j), k)
                rhs = chi(i, k) * chi(j, k)
                if lhs != rhs:
                    report.add(["left", list(i), list(j), list(k)], lhs, rhs)
                lhs = chi(i, g.add(j, k))
                rhs = chi(i, j) * chi(i, k)
                if lhs != rhs:
                    report.add(["right", list(i), list(j), list(k)], lhs, rhs)
    return report


def check_cocycle3(psi: Cochain3) -> CheckReport:
    g = psi.group
    report = CheckReport(ok=True)
    if not psi.is_normalized():
        report.add(["normalization"], "psi with a zero argument", "1")
    dd = d3(psi)
    for combo in product(g.elements, repeat=4):
        val = dd(*combo)
        if not val.is_one():
            report.add([list(c) for c in combo], val, ONE)
    return report


# -- integer linear algebra for the coboundary solver --------------------


def _smith_diagonalize(a_rows: list[list[int]]):
    """U @ A @ V = D with U, V unimodular and D diagonal (no chain condition)."""
    a = [row[:] for row in a_rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        u[t], u[pi] = u[pi], u[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        for row in v:
            row[t], row[pj] = row[pj], row[t]
        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                for row in a:
                    row[j] -= q * row[t]
                for row in v:
                    row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        if any(a[i][t] for i in range(t + 1, m)) or any(a[t][j] for j in range(t + 1, n)):
            continue
        t += 1
    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return a, u, v


def solve_congruences(a_rows: list[list[int]], b: list[int], modulus: int) -> list[int] | None:
    """A particular x with A x = b (mod modulus), or None."""
    if not a_rows:
        return []
    n = len(a_rows[0])
    d, u, v = _smith_diagonalize(a_rows)
    m = len(a_rows)
    c = [sum(u[i][k] * b[k] for k in range(m)) % modulus for i in range(m)]
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di == 0:
            if c[i] % modulus != 0:
                return None
            continue
        g = gcd(di, modulus)
        if c[i] % g != 0:
            return None
        red = modulus // g
        y[i] = (c[i] // g) * pow(di // g, -1, red) % red
    x = [sum(v[i][k] * y[k] for k in range(n)) % modulus for i in range(n)]
    return x


def subgroup_presentation(group: FinAbGroup, elements):
    """Present a subgroup as an abstract product of cyclic groups.

    The subgroup is quotiented out of the free group on its own elements by
    the multiplication-table relations; the Smith form of that presentation
    yields invariant factors.  Returns (abstract, to_abstract, from_abstract)
    with mutually inverse dictionaries between subgroup elements and the
    abstract group's tuples.
    """
    elems = [group.element(e) for e in elements]
    if len(set(elems)) != len(elems):
        raise ValueError("duplicate subgroup elements")
    pos = {e: i for i, e in enumerate(elems)}
    if group.zero() not in pos:
        raise ValueError("subgroup must contain the neutral element")
    for a in elems:
        for b in elems:
            if group.add(a, b) not in pos:
                raise ValueError(f"subgroup not closed under addition at {(a, b)}")
    t = len(elems)
    relations = []
    row = [0] * t
    row[pos[group.zero()]] = 1
    relations.append(row)
    for a in elems:
        for b in elems:
            row = [0] * t
            row[pos[a]] += 1
            row[pos[b]] += 1
            row[pos[group.add(a, b)]] -= 1
            relations.append(row)
    # columns of the presentation matrix are the relation vectors
    a_t = [[rel[i] for rel in relations] for i in range(t)]
    d_mat, u, _v = _smith_diagonalize(a_t)
    factors = [d_mat[i][i] for i in range(t)]
    assert all(f >= 1 for f in factors), "subgroup presentation is not finite"
    kept = [i for i in range(t) if factors[i] != 1]
    if kept:
        abstract = FinAbGroup(tuple(factors[i] for i in kept))
        to_abstract = {
            e: tuple(u[i][pos[e]] % factors[i] for i in kept) for e in elems
        }
    else:
        abstract = FinAbGroup((1,))
        to_abstract = {e: (0,) for e in elems}
    from_abstract = {v: k for k, v in to_abstract.items()}
    if len(from_abstract) != len(elems) or len(elems) != abstract.order:
        raise ValueError("subgroup presentation failed to be bijective")
    for a in elems:
        for b in elems:
            lhs = abstract.add(to_abstract[a], to_abstract[b])
            if lhs != to_abstract[group.add(a, b)]:
                raise ValueError("subgroup presentation is not a homomorphism")
    return abstract, to_abstract, from_abstract


def cohomologous(kappa1: Cochain2, kappa2: Cochain2) -> Cochain1 | None:
    """A 1-cochain tau with d1(tau) * kappa1 = kappa2, or None.

    Values must be roots of unity.  The discrete-log system is solved over
    Z/M, first for M = lcm of the value orders, then for M scaled by the
    group order, which is conclusive: any coboundary witness tau satisfies
    tau(i)^(|G|) = prod_j q(i,j), a root of unity of order dividing M0.
    """
    if kappa1.group != kappa2.group:
        raise ValueError("cochains live on different groups")
    g = kappa1.group
    q = kappa2 / kappa1
    orders = []
    for val in q.values:
        o = root_of_unity_order(val)
        if o is None:
            raise UnsupportedValueError("cohomologous solver needs root-of-unity values")
        orders.append(o)
    m0 = lcm(*orders)
    tried = []
    for m in (m0, m0 * g.order):
        if m in tried:
            continue
        tried.append(m)
        if m > get_max_order():
            raise ScalarError(f"solver modulus {m} exceeds root order cap")
        tau = _solve_coboundary(q, m)
        if tau is not None:
            assert d1(tau) * kappa1 == kappa2
            return tau
    return None


def _solve_coboundary(q: Cochain2, modulus: int) -> Cochain1 | None:
    g = q.group
    unknowns = [e for e in g.elements if e != g.zero()]
    pos = {e: k for k, e in enumerate(unknowns)}
    rows, rhs = [], []
    for i in g.elements:
        for j in g.elements:
            e = root_exponent(q(i, j), modulus)
            if e is None:
                return None
            row = [0] * len(unknowns)
            for elem, sign in ((i, 1), (j, 1), (g.add(i, j), -1)):
                if elem != g.zero():
                    row[pos[elem]] += sign
            rows.append(row)
            rhs.append(e)
    sol = solve_congruences(rows, rhs, modulus)
    if sol is None:
        return None
    table = {g.zero(): ONE}
    for e, t in zip(unknowns, sol):
        table[e] = zeta(modulus, t)
    return Cochain1.from_function(g, lambda i: table[g.element(i)])


# -- abelian 3-cocycles ---------------------------------------------------


@dataclass
class AbelianCocycleData:
    """An associator-braiding pair (psi, Omega) on a finite abelian group."""

    psi: Cochain3
    omega: Cochain2

    def to_json(self) -> dict:
        return {"psi": self.psi.to_json(), "omega": self.omega.to_json()}

    @staticmethod
    def from_json(obj) -> "AbelianCocycleData":
        return AbelianCocycleData(
            psi=Cochain3.from_json(obj["psi"]), omega=Cochain2.from_json(obj["omega"])
        )


def validate_abelian3(data: AbelianCocycleData) -> dict:
    """Check the 3-cocycle condition and both hexagons; extract the trace.

    Hexagon conventions:
      H1: Omega(i+j,k) = Omega(i,k) Omega(j,k) psi(i,j,k) psi(k,i,j) / psi(i,k,j)
      H2: Omega(i,j+k) = Omega(i,j) Omega(i,k) psi(j,i,k) / (psi(i,j,k) psi(j,k,i))

    Returns a dict with the individual reports, the quadratic trace
    q(i) = Omega(i,i), and whether b(i,j) = q(i+j)/(q(i)q(j)) is a
    bicharacter (it is whenever the hexagons hold).
    """
    psi, omega = data.psi, data.omega
    if psi.group != omega.group:
        raise ValueError("psi and Omega live on different groups")
    g = psi.group
    cocycle = check_cocycle3(psi)
    hex1 = CheckReport(ok=True)
    hex2 = CheckReport(ok=True)
    for i in g.elements:
        for j in g.elements:
            for k in g.elements:
                lhs = omega(g.add(i, j), k)
                rhs = omega(i, k) * omega(j, k) * psi(i, j, k) * psi(k, i, j) / psi(i, k, j)
                if lhs != rhs:
                    hex1.add([list(i), list(j), list(k)], lhs, rhs)
                lhs = omega(i, g.add(j, k))
                rhs = omega(i, j) * omega(i, k) * psi(j, i, k) / (psi(i, j, k) * psi(j, k, i))
                if lhs != rhs:
                    hex2.add([list(i), list(j), list(k)], lhs, rhs)
    trace = Cochain1.from_function(g, lambda i: omega(i, i))
    bil = Cochain2.from_function(
        g, lambda i, j: trace(g.add(i, j)) / (trace(i) * trace(j))
    )
    return {
        "cocycle": cocycle,
        "hexagon1": hex1,
        "hexagon2": hex2,
        "ok": cocycle.ok and hex1.ok and hex2.ok,
        "trace": trace,
        "trace_bilinear": bil,
        "trace_bilinear_is_bicharacter": check_bicharacter(bil).ok,
    }
