"""Graded algebras in a host category: axioms, twisting, Frobenius structure.

An algebra is a host object with a grading by a finite abelian group Gamma
(independent of any host grading), a multiplication morphism and a unit
morphism.  Twisting rescales the multiplication blockwise by a 2-cochain,
mu^[kappa]_{i,j} = kappa(i,j) mu_{i,j}.  Frobenius data is a compatible
comultiplication/counit pair; for twisted group algebras both directions
are built explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .cohomology import (
    CheckReport,
    Cochain2,
    Cochain3,
    FinAbGroup,
    UnsupportedValueError,
    check_cocycle3,
    d2,
    solve_congruences,
)
from .hostcat import (
    Grading,
    HostError,
    HostMorphism,
    HostObject,
    GradedVecContext,
    RepContext,
    braiding,
    compose,
    direct_sum,
    identity_mor,
    sub_object,
    tensor_mor,
    tensor_obj,
)
from .linalg import Matrix
from .scalars import (
    ONE,
    ZERO,
    ScalarError,
    get_max_order,
    integer,
    rational,
    root_exponent,
    root_of_unity_order,
    zeta,
)

__all__ = [
    "GradedAlgebra",
    "FrobeniusData",
    "PointedAlgebraModel",
    "check_algebra",
    "twist_algebra",
    "algebra_iso_even",
    "check_frobenius",
    "check_separability",
    "twist_frobenius",
    "check_graded_commutative",
    "opposite_algebra",
    "solve_pointed_obstruction",
    "build_twisted_group_algebra",
]


class GradedAlgebra:
    """(carrier, grading, mul, unit) in a host category."""

    def __init__(self, carrier: HostObject, grading: Grading, mul: HostMorphism,
                 unit: HostMorphism):
        if grading.dim != carrier.dim:
            raise HostError("grading length must match carrier dimension")
        if mul.src != tensor_obj(carrier, carrier) or mul.tgt != carrier:
            raise HostError("mul must map carrier (x) carrier -> carrier")
        if unit.tgt != carrier or unit.src.dim != 1:
            raise HostError("unit must map the tensor unit into the carrier")
        self.carrier = carrier
        self.grading = grading
        self.mul = mul
        self.unit = unit
        self.context = carrier.context
        self.group = grading.group

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def component(self, g):
        """(object, embed, retract) of the homogeneous component A_g."""
        return sub_object(self.carrier, self.grading.indices(g))

    def mul_block(self, i, j) -> Matrix:
        """The block mu_{i,j}: A_i (x) A_j -> A_{i+j} in basis-index coordinates."""
        g = self.group
        i, j = g.element(i), g.element(j)
        rows = self.grading.indices(g.add(i, j))
        cols = [u * self.dim + v for u in self.grading.indices(i) for v in self.grading.indices(j)]
        return self.mul.mat.submatrix(rows, cols)

    def __eq__(self, other):
        return (
            isinstance(other, GradedAlgebra)
            and self.carrier == other.carrier
            and self.grading == other.grading
            and self.mul == other.mul
            and self.unit == other.unit
        )

    def __repr__(self):
        return f"GradedAlgebra(dim={self.dim}, group={self.group!r})"

    def to_json(self) -> dict:
        return {
            "carrier": self.carrier.to_json(),
            "grading": self.grading.to_json(),
            "mul": self.mul.to_json(),
            "unit": self.unit.to_json(),
        }


@dataclass
class FrobeniusData:
    """Comultiplication and counit for a graded algebra."""

    comul: HostMorphism  # A -> A (x) A
    counit: HostMorphism  # A -> unit object

    def to_json(self) -> dict:
        return {"comul": self.comul.to_json(), "counit": self.counit.to_json()}


def _pair_grades(alg: GradedAlgebra):
    """Grades of the basis of carrier (x) carrier, in Kronecker order."""
    g = alg.group
    return [
        (gu, gv)
        for gu in alg.grading.grades
        for gv in alg.grading.grades
    ]


def check_algebra(alg: GradedAlgebra) -> dict:
    """Associativity, left/right unitality, evenness; exact, exhaustive."""
    out: dict = {}
    a = alg.carrier
    mul, unit = alg.mul, alg.unit
    ida = identity_mor(a)

    assoc_l = compose(mul, tensor_mor(mul, ida))
    assoc_r = compose(mul, tensor_mor(ida, mul))
    rep = CheckReport(ok=True)
    if assoc_l.mat != assoc_r.mat:
        diff = assoc_l.mat - assoc_r.mat
        for i in range(diff.nrows):
            for j in range(diff.ncols):
                if not diff[i, j].is_zero():
                    rep.add([i, j], assoc_l.mat[i, j], assoc_r.mat[i, j])
    out["associative"] = rep

    rep = CheckReport(ok=True)
    left = compose(mul, tensor_mor(unit, ida))
    right = compose(mul, tensor_mor(ida, unit))
    if left.mat != Matrix.identity(a.dim):
        rep.add(["left"], "mul o (unit (x) id)", "id")
    if right.mat != Matrix.identity(a.dim):
        rep.add(["right"], "mul o (id (x) unit)", "id")
    out["unital"] = rep

    rep = CheckReport(ok=True)
    g = alg.group
    pg = _pair_grades(alg)
    for r in range(a.dim):
        for c in range(a.dim * a.dim):
            if not mul.mat[r, c].is_zero():
                gu, gv = pg[c]
                if alg.grading.grades[r] != g.add(gu, gv):
                    rep.add([r, c], mul.mat[r, c], "grade mismatch")
    zero = g.zero()
    for r in range(a.dim):
        if not unit.mat[r, 0].is_zero() and alg.grading.grades[r] != zero:
            rep.add(["unit", r], unit.mat[r, 0], "grade 0")
    out["even"] = rep

    host_ok = CheckReport(ok=True)
    for name, mor in (("mul", mul), ("unit", unit)):
        if not mor.is_valid():
            host_ok.add([name], "host validity", "morphism of the host category")
    out["host"] = host_ok
    out["ok"] = all(r.ok for r in out.values() if isinstance(r, CheckReport))
    return out


def twist_algebra(alg: GradedAlgebra, kappa: Cochain2) -> GradedAlgebra:
    """mu^[kappa]_{i,j} = kappa(i,j) mu_{i,j}; unit and grading unchanged."""
    if kappa.group != alg.group:
        raise HostError("twist cochain lives on the wrong group")
    pg = _pair_grades(alg)
    cols = [kappa(gu, gv) for gu, gv in pg]
    new_rows = [
        [cols[c] * alg.mul.mat[r, c] for c in range(alg.dim * alg.dim)]
        for r in range(alg.dim)
    ]
    new_mul = HostMorphism(alg.mul.src, alg.mul.tgt, Matrix(new_rows, ncols=alg.dim * alg.dim))
    return GradedAlgebra(alg.carrier, alg.grading, new_mul, alg.unit)


def twist_frobenius(alg: GradedAlgebra, frob: FrobeniusData, kappa: Cochain2) -> FrobeniusData:
    """comul^(kappa)_{i,j} = kappa(i,j)^-1 comul^{i,j}; counit unchanged."""
    if kappa.group != alg.group:
        raise HostError("twist cochain lives on the wrong group")
    pg = _pair_grades(alg)
    scales = [kappa(gu, gv).inverse() for gu, gv in pg]
    mat = frob.comul.mat
    new_rows = [
        [scales[r] * mat[r, c] for c in range(mat.ncols)] for r in range(mat.nrows)
    ]
    return FrobeniusData(
        comul=HostMorphism(frob.comul.src, frob.comul.tgt, Matrix(new_rows, ncols=mat.ncols)),
        counit=frob.counit,
    )


def algebra_iso_even(a: GradedAlgebra, b: GradedAlgebra):
    """An even algebra isomorphism a -> b by componentwise scalars, or None.

    Supported when every homogeneous component of both algebras is at most
    one-dimensional (the scalar search is then complete for algebras whose
    multiplication blocks are all nonzero).  Block ratios must be roots of
    unity; other values raise UnsupportedValueError.
    """
    if a.context != b.context or a.group != b.group:
        raise HostError("algebras live in different hosts or grading groups")
    g = a.group
    dims_a = a.grading.dims_by_grade()
    dims_b = b.grading.dims_by_grade()
    if any(n > 1 for n in dims_a.values()) or any(n > 1 for n in dims_b.values()):
        raise UnsupportedValueError("iso search needs componentwise dimension <= 1")
    if dims_a != dims_b:
        return None
    if a.carrier != b.carrier or a.grading != b.grading:
        # same graded shape is required for a componentwise scalar map
        return None

    support = []
    ratios = {}
    for i in g.elements:
        for j in g.elements:
            ma = a.mul_block(i, j)
            mb = b.mul_block(i, j)
            if ma.shape != mb.shape:
                return None
            if ma.is_zero() != mb.is_zero():
                return None
            if ma.is_zero():
                continue
            ratios[(i, j)] = ma[0, 0] / mb[0, 0]
            support.append((i, j))

    ua = a.unit.mat
    ub = b.unit.mat
    iz = a.grading.indices(g.zero())
    if not iz:
        return None
    unit_ratio = None
    for r in iz:
        if not ua[r, 0].is_zero() or not ub[r, 0].is_zero():
            if ua[r, 0].is_zero() or ub[r, 0].is_zero():
                return None
            unit_ratio = ub[r, 0] / ua[r, 0]
    if unit_ratio is None:
        unit_ratio = ONE

    vals = list(ratios.values()) + [unit_ratio]
    orders = []
    for v in vals:
        o = root_of_unity_order(v)
        if o is None:
            raise UnsupportedValueError("iso search needs root-of-unity block ratios")
        orders.append(o)
    m0 = lcm(*orders)

    elems = g.elements
    pos = {e: k for k, e in enumerate(elems)}
    for m in dict.fromkeys((m0, m0 * g.exponent, m0 * g.order)):
        if m > get_max_order():
            raise ScalarError(f"solver modulus {m} exceeds root order cap")
        rows, rhs = [], []
        for (i, j) in support:
            e = root_exponent(ratios[(i, j)], m)
            assert e is not None  # m is a multiple of every ratio order
            row = [0] * len(elems)
            row[pos[i]] += 1
            row[pos[j]] += 1
            row[pos[g.add(i, j)]] -= 1
            rows.append(row)
            rhs.append(e)
        e0 = root_exponent(unit_ratio, m)
        assert e0 is not None
        row = [0] * len(elems)
        row[pos[g.zero()]] = 1
        rows.append(row)
        rhs.append(e0)
        sol = solve_congruences(rows, rhs, m)
        if sol is None:
            continue
        c = {e: zeta(m, t) for e, t in zip(elems, sol)}
        phi_rows = [
            [c[a.grading.grades[r]] if r == s else ZERO for s in range(a.dim)]
            for r in range(a.dim)
        ]
        phi = HostMorphism(a.carrier, b.carrier, Matrix(phi_rows, ncols=a.dim))
        if phi.is_valid() and _is_algebra_morphism(phi, a, b):
            return phi
    return None


def _is_algebra_morphism(phi: HostMorphism, a: GradedAlgebra, b: GradedAlgebra) -> bool:
    lhs = compose(phi, a.mul)
    rhs = compose(b.mul, tensor_mor(phi, phi))
    if lhs.mat != rhs.mat:
        return False
    return compose(phi, a.unit).mat == b.unit.mat


def check_frobenius(alg: GradedAlgebra, frob: FrobeniusData) -> dict:
    """Coassociativity, counit, the Frobenius identity, and evenness."""
    a = alg.carrier
    ida = identity_mor(a)
    comul, counit = frob.comul, frob.counit
    out: dict = {}

    rep = CheckReport(ok=True)
    if compose(tensor_mor(comul, ida), comul).mat != compose(tensor_mor(ida, comul), comul).mat:
        rep.add(["coassoc"], "(comul (x) id) o comul", "(id (x) comul) o comul")
    out["coassociative"] = rep

    rep = CheckReport(ok=True)
    left = compose(tensor_mor(counit, ida), comul)
    right = compose(tensor_mor(ida, counit), comul)
    if left.mat != Matrix.identity(a.dim):
        rep.add(["left"], "(counit (x) id) o comul", "id")
    if right.mat != Matrix.identity(a.dim):
        rep.add(["right"], "(id (x) counit) o comul", "id")
    out["counital"] = rep

    rep = CheckReport(ok=True)
    mid = compose(comul, alg.mul)
    lhs = compose(tensor_mor(alg.mul, ida), tensor_mor(ida, comul))
    rhs = compose(tensor_mor(ida, alg.mul), tensor_mor(comul, ida))
    if lhs.mat != mid.mat:
        rep.add(["left"], "(mul (x) id) o (id (x) comul)", "comul o mul")
    if rhs.mat != mid.mat:
        rep.add(["right"], "(id (x) mul) o (comul (x) id)", "comul o mul")
    out["frobenius"] = rep

    rep = CheckReport(ok=True)
    g = alg.group
    pg = _pair_grades(alg)
    for r in range(len(pg)):
        for c in range(a.dim):
            if not comul.mat[r, c].is_zero():
                gu, gv = pg[r]
                if alg.grading.grades[c] != g.add(gu, gv):
                    rep.add([r, c], comul.mat[r, c], "grade mismatch")
    out["even"] = rep
    out["ok"] = all(r.ok for r in out.values() if isinstance(r, CheckReport))
    return out


def check_separability(alg: GradedAlgebra, frob: FrobeniusData) -> dict:
    """Delta-separability (mul o comul = id) and a separability witness.

    The witness is a morphism zeta: 1 -> A with
    mul o (id (x) mul) o (id (x) zeta (x) id) o comul = id.
    """
    a = alg.carrier
    ida = identity_mor(a)
    out: dict = {}
    rep = CheckReport(ok=True)
    if compose(alg.mul, frob.comul).mat != Matrix.identity(a.dim):
        rep.add(["delta"], "mul o comul", "id")
    out["delta_separable"] = rep

    n = a.dim
    columns = []
    for k in range(n):
        zc = Matrix.from_function(n, 1, lambda i, _j, k=k: ONE if i == k else ZERO)
        zmor = HostMorphism(alg.unit.src, a, zc)
        mid = tensor_mor(tensor_mor(ida, zmor), ida)
        val = compose(alg.mul, compose(tensor_mor(ida, alg.mul), compose(mid, frob.comul)))
        columns.append([val.mat[i, j] for i in range(n) for j in range(n)])
    target = [ONE if i == j else ZERO for i in range(n) for j in range(n)]
    big = Matrix.from_columns(columns, n * n)
    sol = big.solve_right(Matrix.column(target))
    rep = CheckReport(ok=sol is not None)
    if sol is None:
        rep.add(["separability"], "no witness zeta", "mul o (id x mul) o (id x zeta x id) o comul = id")
        witness = None
    else:
        witness = HostMorphism(alg.unit.src, a, Matrix.column([sol[i, 0] for i in range(n)]))
    out["separable"] = rep
    out["witness"] = witness
    out["ok"] = out["delta_separable"].ok and out["separable"].ok
    return out


def check_graded_commutative(alg: GradedAlgebra, kappa: Cochain2) -> dict:
    """Whether mu_{j,i} o c_{A_i,A_j} = kappa(i,j) mu_{i,j} for all i,j.

    Also returns the defect table: the scalar kappa-hat(i,j) forced by each
    nonzero block (None where the block vanishes, "incoherent" where no
    scalar works).
    """
    if kappa.group != alg.group:
        raise HostError("cochain lives on the wrong group")
    g = alg.group
    br = braiding(alg.carrier, alg.carrier)
    flipped = compose(alg.mul, br)  # on basis (u,v): mu(c(u,v))
    rep = CheckReport(ok=True)
    defect: dict = {}
    dim = alg.dim
    for i in g.elements:
        for j in g.elements:
            cols = [u * dim + v for u in alg.grading.indices(i) for v in alg.grading.indices(j)]
            rows_idx = list(range(dim))
            lhs = flipped.mat.submatrix(rows_idx, cols)
            base = alg.mul.mat.submatrix(rows_idx, cols)
            if base.is_zero() and lhs.is_zero():
                defect[(i, j)] = None
                continue
            want = base.scale(kappa(i, j))
            if lhs != want:
                for r in range(lhs.nrows):
                    for c in range(lhs.ncols):
                        if lhs[r, c] != want[r, c]:
                            rep.add([list(i), list(j), r, c], lhs[r, c], want[r, c])
            khat = _proportionality(lhs, base)
            defect[(i, j)] = khat
    return {"ok": rep.ok, "report": rep, "defect": defect}


def _proportionality(lhs: Matrix, base: Matrix):
    """The scalar s with lhs = s * base, "incoherent" if none exists."""
    ratio = None
    for r in range(base.nrows):
        for c in range(base.ncols):
            if not base[r, c].is_zero():
                cand = lhs[r, c] / base[r, c]
                if ratio is None:
                    ratio = cand
                elif ratio != cand:
                    return "incoherent"
    if ratio is None:
        return "incoherent" if not lhs.is_zero() else None
    return ratio if lhs == base.scale(ratio) else "incoherent"


def opposite_algebra(alg: GradedAlgebra) -> GradedAlgebra:
    """Same carrier with multiplication mul o c_{A,A}."""
    br = braiding(alg.carrier, alg.carrier)
    return GradedAlgebra(alg.carrier, alg.grading, compose(alg.mul, br), alg.unit)


def solve_pointed_obstruction(group: FinAbGroup, psi: Cochain3) -> dict:
    """Search for a normalized 2-cochain omega with d2(omega) = psi.

    The discrete-log system runs over Z/M for M = lcm of value orders,
    enlarged by the group exponent and order before giving up.  Returns a
    dict with the cocycle report for psi and the witness (or None).
    """
    if psi.group != group:
        raise HostError("psi lives on the wrong group")
    cocycle = check_cocycle3(psi)
    if not cocycle.ok:
        return {"psi_is_cocycle": cocycle, "omega": None, "solvable": False}
    orders = []
    for v in psi.values:
        o = root_of_unity_order(v)
        if o is None:
            raise UnsupportedValueError("obstruction solver needs root-of-unity values")
        orders.append(o)
    m0 = lcm(*orders)
    nz = [e for e in group.elements if e != group.zero()]
    for m in dict.fromkeys((m0, m0 * group.exponent, m0 * group.order)):
        if m > get_max_order():
            raise ScalarError(f"solver modulus {m} exceeds root order cap")
        rows, rhs = [], []
        pairs = [(i, j) for i in nz for j in nz]
        pair_pos = {pr: kk for kk, pr in enumerate(pairs)}
        # unknowns: omega on pairs of nonzero elements; normalization fixes the rest
        for i in group.elements:
            for j in group.elements:
                for k in group.elements:
                    e = root_exponent(psi(i, j, k), m)
                    assert e is not None  # m is a multiple of every value order
                    row = [0] * len(pairs)
                    for pair, sign in (
                        ((j, k), 1),
                        ((i, group.add(j, k)), 1),
                        ((group.add(i, j), k), -1),
                        ((i, j), -1),
                    ):
                        if pair[0] != group.zero() and pair[1] != group.zero():
                            row[pair_pos[pair]] += sign
                    rows.append(row)
                    rhs.append(e)
        sol = solve_congruences(rows, rhs, m)
        if sol is not None:
            table = {}
            for pr, t in zip(pairs, sol):
                table[pr] = zeta(m, t)

            def omega_fn(i, j):
                i, j = group.element(i), group.element(j)
                if i == group.zero() or j == group.zero():
                    return ONE
                return table[(i, j)]

            omega = Cochain2.from_function(group, omega_fn)
            assert d2(omega) == psi
            return {"psi_is_cocycle": cocycle, "omega": omega, "solvable": True}
    return {"psi_is_cocycle": cocycle, "omega": None, "solvable": False}


def build_twisted_group_algebra(ctx, group: FinAbGroup, omega: Cochain2, lines=None):
    """The twisted group algebra on invertible lines L_i, one per grade.

    In the graded-vector host the default lines are the one-dimensional
    objects concentrated in the matching host grade (requires the host
    group to equal the grading group).  In a representation host the lines
    must be one-dimensional representations whose pointwise products match
    the group law exactly.  Returns (algebra, frobenius) where frobenius is
    the Delta-separable structure comul^{i,j} = |Gamma|^-1 omega(i,j)^-1.
    """
    if omega.group != group:
        raise HostError("omega lives on the wrong group")
    if not omega.is_normalized():
        raise HostError("omega must be normalized")
    n = group.order
    if lines is None:
        if not isinstance(ctx, GradedVecContext):
            raise HostError("line objects are required in a representation host")
        if ctx.group != group:
            raise HostError("default lines need the host group to equal the grading group")
        lines = {g: ctx.object([g]) for g in group.elements}
    objs = [lines[g] for g in group.elements]
    if any(o.dim != 1 for o in objs):
        raise HostError("lines must be one-dimensional")
    if isinstance(ctx, RepContext):
        for gi in group.elements:
            for gj in group.elements:
                prod = tensor_obj(lines[gi], lines[gj])
                if prod != lines[group.add(gi, gj)]:
                    raise HostError(f"lines do not multiply along the group law at {(gi, gj)}")
    elif isinstance(ctx, GradedVecContext):
        for gi in group.elements:
            for gj in group.elements:
                if tensor_obj(lines[gi], lines[gj]) != lines[group.add(gi, gj)]:
                    raise HostError(f"lines do not multiply along the group law at {(gi, gj)}")

    carrier, _, _ = direct_sum(objs)
    grading = Grading(group, list(group.elements))
    idx = {g: k for k, g in enumerate(group.elements)}

    mul_rows = [[ZERO] * (n * n) for _ in range(n)]
    for gi in group.elements:
        for gj in group.elements:
            mul_rows[idx[group.add(gi, gj)]][idx[gi] * n + idx[gj]] = omega(gi, gj)
    mul = HostMorphism(tensor_obj(carrier, carrier), carrier, Matrix(mul_rows, ncols=n * n))

    unit_col = [ONE if k == idx[group.zero()] else ZERO for k in range(n)]
    unit_src = ctx.unit_object()
    unit = HostMorphism(unit_src, carrier, Matrix.column(unit_col))
    alg = GradedAlgebra(carrier, grading, mul, unit)

    inv_n = rational(1, n)
    comul_rows = [[ZERO] * n for _ in range(n * n)]
    for gi in group.elements:
        for gj in group.elements:
            comul_rows[idx[gi] * n + idx[gj]][idx[group.add(gi, gj)]] = inv_n * omega(gi, gj).inverse()
    comul = HostMorphism(carrier, tensor_obj(carrier, carrier), Matrix(comul_rows, ncols=n))
    counit_row = [[integer(n) if k == idx[group.zero()] else ZERO for k in range(n)]]
    counit = HostMorphism(carrier, unit_src, Matrix(counit_row, ncols=n))
    return alg, FrobeniusData(comul=comul, counit=counit)


@dataclass
class PointedAlgebraModel:
    """Scalar model of an algebra on one invertible line per grade,
    multiplied against a prescribed associator.

    The model exists as an algebra precisely when d2(omega) = psi; for the
    strict hosts in this package only psi = 1 can be realized by honest
    host objects, which is the content of the obstruction dichotomy.
    """

    group: FinAbGroup
    psi: Cochain3
    omega: Cochain2

    def check(self) -> CheckReport:
        rep = CheckReport(ok=True)
        if not self.omega.is_normalized():
            rep.add(["normalization"], "omega with a zero argument", "1")
        dd = d2(self.omega)
        for i in self.group.elements:
            for j in self.group.elements:
                for k in self.group.elements:
                    lhs = dd(i, j, k)
                    rhs = self.psi(i, j, k)
                    if lhs != rhs:
                        rep.add([list(i), list(j), list(k)], lhs, rhs)
        return rep
