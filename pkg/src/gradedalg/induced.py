"""Induction, Hom spaces between induced modules, stabilizers, and the
graded Schur machinery.

Ind x is the free right module (x (x) A, id (x) mul) graded by the
algebra's group, with grade 0 assigned to x.  Hom_A(Ind x, Ind y) is
computed by an exact linear solve and cross-checked against the
adjunction route through Hom(x, y (x) A_d).  Stabilizers, the sigma
cocycle on them, and the Schur trichotomy verdicts build on that.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import (
    CheckReport,
    Cochain2,
    FinAbGroup,
    UnsupportedValueError,
    check_cocycle2,
    cohomologous,
    subgroup_presentation,
)
from .galg import GradedAlgebra, _proportionality
from .gmod import RightModule, module_map_report
from .hostcat import (
    Grading,
    HostError,
    HostMorphism,
    HostObject,
    compose,
    grade_components,
    hom_basis,
    identity_mor,
    tensor_mor,
    tensor_obj,
)
from .linalg import LinAlgError, Matrix

__all__ = [
    "InducedModule",
    "StabilizerData",
    "InternalConsistencyError",
    "induce",
    "hom_A_induced",
    "induced_simplicity_probe",
    "stabilizer",
    "sigma_cocycle",
    "graded_schur_report",
]


class InternalConsistencyError(RuntimeError):
    """A structural fact the theory guarantees failed to hold; host bug."""


class InducedModule(RightModule):
    """The free right module (x (x) A, id_x (x) mul), grade 0 on x."""

    def __init__(self, base: HostObject, algebra: GradedAlgebra):
        carrier = tensor_obj(base, algebra.carrier)
        action = tensor_mor(identity_mor(base), algebra.mul)
        trivial = Grading(algebra.group, [algebra.group.zero()] * base.dim)
        grading = trivial.tensor(algebra.grading)
        super().__init__(algebra, carrier, grading, action)
        self.base = base


def induce(arg, algebra: GradedAlgebra):
    """Induction: objects to free modules, morphisms to f (x) id_A."""
    if isinstance(arg, HostMorphism):
        return tensor_mor(arg, identity_mor(algebra.carrier))
    return InducedModule(arg, algebra)


def _vec(mat: Matrix) -> list:
    return [mat[i, j] for i in range(mat.nrows) for j in range(mat.ncols)]


def _unvec(entries, nrows: int, ncols: int) -> Matrix:
    rows = [list(entries[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    return Matrix(rows, ncols=ncols)


def hom_A_induced(x: HostObject, y: HostObject, algebra: GradedAlgebra) -> dict:
    """A homogeneous basis of Hom_A(Ind x, Ind y) with its graded dimensions.

    Solves the module-morphism equation inside the host Hom space and
    cross-checks each graded dimension against the adjunction route
    Hom(x, y (x) A_d); a mismatch raises InternalConsistencyError.
    """
    mx = InducedModule(x, algebra)
    my = InducedModule(y, algebra)
    host_basis = hom_basis(mx.carrier, my.carrier)
    group = algebra.group

    ida = identity_mor(algebra.carrier)
    cols = []
    for b in host_basis:
        lhs = compose(b, mx.action)
        rhs = compose(my.action, tensor_mor(b, ida))
        cols.append(_vec(lhs.mat - rhs.mat))
    out_dim = mx.carrier.dim * algebra.dim * my.carrier.dim
    solutions = []
    if host_basis:
        system = Matrix.from_columns(cols, out_dim)
        null = system.nullspace()
        for j in range(null.ncols):
            mat = Matrix.zeros(my.carrier.dim, mx.carrier.dim)
            for k, b in enumerate(host_basis):
                c = null[k, j]
                if not c.is_zero():
                    mat = mat + b.mat.scale(c)
            solutions.append(mat)

    basis = []
    dims: dict = {}
    total = 0
    for d in group.elements:
        comp_vecs = []
        for mat in solutions:
            comp = grade_components(mat, mx.grading, my.grading).get(d)
            if comp is not None and not comp.is_zero():
                comp_vecs.append(_vec(comp))
        if not comp_vecs:
            continue
        stacked = Matrix.from_columns(comp_vecs, my.carrier.dim * mx.carrier.dim)
        homog = stacked.column_space_basis()
        mors = []
        for j in range(homog.ncols):
            mat = _unvec(homog.column_list(j), my.carrier.dim, mx.carrier.dim)
            mor = HostMorphism(mx.carrier, my.carrier, mat)
            rep = module_map_report(mor, mx, my)
            if not rep.ok:
                raise InternalConsistencyError(
                    "homogeneous part of a module morphism is not one itself")
            mors.append(mor)
        if mors:
            basis.append((d, mors))
            dims[d] = len(mors)
            total += len(mors)
    if total != len(solutions):
        raise InternalConsistencyError("module Hom space is not graded")

    adjunction_dims: dict = {}
    idy = identity_mor(y)
    for d in group.elements:
        comp, embed, _ = algebra.component(d)
        target = tensor_obj(y, comp)
        adj_basis = hom_basis(x, target)
        if adj_basis:
            adjunction_dims[d] = len(adj_basis)
        for b in adj_basis:
            full = compose(tensor_mor(idy, embed), b)
            transported = compose(tensor_mor(idy, algebra.mul), tensor_mor(full, ida))
            mor = HostMorphism(mx.carrier, my.carrier, transported.mat)
            if not module_map_report(mor, mx, my).ok:
                raise InternalConsistencyError("adjunction transport is not a module map")
            comps = grade_components(mor.mat, mx.grading, my.grading)
            if any(e != d and not m.is_zero() for e, m in comps.items()):
                raise InternalConsistencyError("adjunction transport is not homogeneous")
    if adjunction_dims != dims:
        raise InternalConsistencyError(
            f"adjunction dims {adjunction_dims} disagree with direct solve {dims}")

    return {
        "source": mx,
        "target": my,
        "basis": basis,
        "dims_by_grade": dims,
        "dim": total,
        "adjunction_dims": adjunction_dims,
    }


def induced_simplicity_probe(x: HostObject, algebra: GradedAlgebra, candidates) -> dict:
    """Quotient search restricted to induced targets.

    Ind x has a proper induced quotient exactly when some nonzero
    homogeneous morphism into an Ind y (y ranging over the given host
    objects) fails to be invertible.  Returns the verdict and the first
    witness (candidate index, grade) when one exists.
    """
    witness = None
    for pos, y in enumerate(candidates):
        hom = hom_A_induced(x, y, algebra)
        for d, mors in hom["basis"]:
            for mor in mors:
                if not mor.mat.is_zero() and not _is_invertible(mor.mat):
                    witness = {"candidate": pos, "grade": d}
                    break
            if witness:
                break
        if witness:
            break
    return {"simple": witness is None, "witness": witness}


@dataclass
class StabilizerData:
    """Stab x with its abstract presentation and chosen component isos."""

    base: HostObject
    algebra: GradedAlgebra
    elements: list
    group: FinAbGroup
    to_abstract: dict
    from_abstract: dict
    phi: dict = field(default_factory=dict)   # s -> x -> x (x) A, image in grade s
    sigma: Cochain2 | None = None
    sigma_class: str | None = None

    def to_json(self) -> dict:
        data = {
            "elements": [list(e) for e in self.elements],
            "group": self.group.to_json(),
        }
        if self.sigma is not None:
            data["sigma"] = self.sigma.to_json()
            data["sigma_class"] = self.sigma_class
        return data


def stabilizer(x: HostObject, algebra: GradedAlgebra) -> StabilizerData:
    """Stab x = {i : x (x) A_i isomorphic to x}, for simple x.

    Stores the deterministic component isomorphisms phi_s: x -> x (x) A
    (first Hom basis vector, first nonzero entry rescaled to 1) used by
    sigma_cocycle.
    """
    if len(hom_basis(x, x)) != 1:
        raise HostError("stabilizer is defined here for simple base objects")
    group = algebra.group
    elements = []
    phi = {}
    for i in group.elements:
        comp, embed, _ = algebra.component(i)
        target = tensor_obj(x, comp)
        if target.dim != x.dim:
            continue
        hb = hom_basis(x, target)
        if len(hb) != 1:
            continue
        mat = hb[0].mat
        try:
            mat.inverse()
        except LinAlgError:
            continue
        pivot = next(
            mat[r, c] for r in range(mat.nrows) for c in range(mat.ncols)
            if not mat[r, c].is_zero())
        normalized = mat.scale(pivot.inverse())
        full = compose(tensor_mor(identity_mor(x), embed),
                       HostMorphism(x, target, normalized))
        elements.append(i)
        phi[i] = full
    for a in elements:
        for b in elements:
            if group.add(a, b) not in phi:
                raise InternalConsistencyError("stabilizer is not closed under addition")
    abstract, to_abs, from_abs = subgroup_presentation(group, elements)
    return StabilizerData(
        base=x, algebra=algebra, elements=elements, group=abstract,
        to_abstract=to_abs, from_abstract=from_abs, phi=phi)


def _phi_endomorphism(stab: StabilizerData, s, scale=None) -> HostMorphism:
    """phi_s = (id_x (x) mul) o (phi-component (x) id_A) on Ind x."""
    alg = stab.algebra
    ida = identity_mor(alg.carrier)
    idx = identity_mor(stab.base)
    full = stab.phi[s]
    if scale is not None:
        full = HostMorphism(full.src, full.tgt, full.mat.scale(scale))
    return compose(tensor_mor(idx, alg.mul), tensor_mor(full, ida))


def sigma_cocycle(stab: StabilizerData, gauge: dict | None = None) -> StabilizerData:
    """Extract sigma from phi_{s'} o phi_s = sigma(s,s') phi_{s+s'}.

    phi_0 is renormalized so that phi_0 = id, making sigma normalized.  The
    optional gauge rescales each phi_s and must change sigma only by a
    coboundary.  Fills stab.sigma (on the abstract stabilizer group) and
    stab.sigma_class ("trivial", "nontrivial", or "undetermined").
    """
    alg = stab.algebra
    group = alg.group
    ind = InducedModule(stab.base, alg)
    phis = {}
    for s in stab.elements:
        scale = None if gauge is None else gauge.get(s)
        phis[s] = _phi_endomorphism(stab, s, scale)
        comps = grade_components(phis[s].mat, ind.grading, ind.grading)
        if any(d != s and not m.is_zero() for d, m in comps.items()):
            raise InternalConsistencyError("phi_s is not homogeneous of grade s")
        if not module_map_report(phis[s], ind, ind).ok:
            raise InternalConsistencyError("phi_s is not a module endomorphism")
    zero = group.zero()
    lam = _proportionality(phis[zero].mat, Matrix.identity(ind.dim))
    if lam in (None, "incoherent") or lam.is_zero():
        raise InternalConsistencyError("phi_0 is not a scalar multiple of the identity")
    phis[zero] = HostMorphism(
        phis[zero].src, phis[zero].tgt, phis[zero].mat.scale(lam.inverse()))

    table = {}
    for s in stab.elements:
        for sp in stab.elements:
            comp = compose(phis[sp], phis[s])
            target = phis[group.add(s, sp)]
            ratio = _proportionality(comp.mat, target.mat)
            if ratio in (None, "incoherent") or ratio.is_zero():
                raise InternalConsistencyError(
                    f"phi composite at {(s, sp)} is not proportional to phi_(s+s')")
            table[(s, sp)] = ratio

    sigma = Cochain2.from_function(
        stab.group,
        lambda a, b: table[(stab.from_abstract[a], stab.from_abstract[b])])
    rep = check_cocycle2(sigma)
    if not rep.ok:
        raise InternalConsistencyError(f"sigma is not a 2-cocycle: {rep.violations[:3]}")
    try:
        tau = cohomologous(sigma, Cochain2.trivial(stab.group))
        sigma_class = "trivial" if tau is not None else "nontrivial"
    except UnsupportedValueError:
        sigma_class = "undetermined"
    stab.sigma = sigma
    stab.sigma_class = sigma_class
    return stab


def _is_invertible(mat: Matrix) -> bool:
    if mat.nrows != mat.ncols:
        return False
    try:
        mat.inverse()
        return True
    except LinAlgError:
        return False


def graded_schur_report(x: HostObject, y: HostObject, algebra: GradedAlgebra) -> dict:
    """Schur verdicts for Hom_A(Ind x, Ind y) with x, y simple.

    Reports: graded dims of Hom and of End_A(Ind x); whether Hom is zero or
    a translate of End as a graded space; invertibility of every nonzero
    homogeneous basis morphism; one-dimensionality of the components;
    dim End = |Stab x|; and the Z/2 trichotomy pattern where applicable.
    """
    for obj, name in ((x, "x"), (y, "y")):
        if len(hom_basis(obj, obj)) != 1:
            raise HostError(f"{name} must be simple in the host")
    hom = hom_A_induced(x, y, algebra)
    end = hom_A_induced(x, x, algebra)
    stab = stabilizer(x, algebra)
    group = algebra.group

    translate = None
    if hom["dim"] == 0:
        zero_or_translate = True
    else:
        zero_or_translate = False
        for d in group.elements:
            shifted = {group.add(g, d): n for g, n in end["dims_by_grade"].items()}
            if shifted == hom["dims_by_grade"]:
                translate = d
                zero_or_translate = True
                break

    invert_rep = CheckReport(ok=True)
    for d, mors in hom["basis"]:
        for mor in mors:
            if not mor.mat.is_zero() and not _is_invertible(mor.mat):
                invert_rep.add([list(d)], "singular homogeneous morphism", "isomorphism")

    at_most_one = all(n <= 1 for n in hom["dims_by_grade"].values()) and all(
        n <= 1 for n in end["dims_by_grade"].values())

    pattern = None
    if group.order == 2:
        if hom["dim"] == 0:
            pattern = "0"
        elif hom["dim"] == 2:
            pattern = "k(Z/2)"
        elif hom["dim"] == 1:
            pattern = "k"
        else:
            pattern = "unexpected"

    return {
        "hom_dims": hom["dims_by_grade"],
        "end_dims": end["dims_by_grade"],
        "hom_dim": hom["dim"],
        "end_dim": end["dim"],
        "stabilizer": stab.elements,
        "end_dim_equals_stab": end["dim"] == len(stab.elements),
        "zero_or_translate": zero_or_translate,
        "translate": translate,
        "homogeneous_invertible": invert_rep,
        "components_at_most_one_dim": at_most_one,
        "pattern": pattern,
        "hom_basis": hom["basis"],
    }
