"""Graded modules over a graded algebra and tensor products over it.

Left, right, and two-sided modules carry their own grading by the
algebra's group, independent of the host grading.  Side-switching along
the host braiding, cocycle twisting, and the tensor product over A
(computed both as a coequalizer and as the image of the separability
idempotent) all live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import CheckReport, Cochain2, check_bicharacter, check_cocycle2
from .galg import FrobeniusData, GradedAlgebra, check_graded_commutative, twist_algebra
from .hostcat import (
    Grading,
    HostError,
    HostMorphism,
    HostObject,
    braiding,
    compose,
    identity_mor,
    image_and_cokernel,
    tensor_mor,
    tensor_obj,
)
from .linalg import Matrix

__all__ = [
    "RightModule",
    "LeftModule",
    "Bimodule",
    "NotGradedCommutativeError",
    "check_module",
    "module_map_report",
    "twist_module",
    "left_from_right_braided",
    "regular_right",
    "regular_left",
    "regular_bimodule",
    "restrict_scalars",
    "TensorOverA",
    "tensor_over_A",
    "graded_tensor",
    "tensor_morphisms_over_A",
]


class NotGradedCommutativeError(ValueError):
    """Raised when an operation needs A graded-commutative w.r.t. kappa."""

    def __init__(self, defect):
        super().__init__("algebra is not graded-commutative w.r.t. the given cochain")
        self.defect = defect


class _ModuleBase:
    def __init__(self, algebra: GradedAlgebra, carrier: HostObject, grading: Grading,
                 action: HostMorphism):
        if grading.group != algebra.group:
            raise HostError("module grading must use the algebra's group")
        if grading.dim != carrier.dim:
            raise HostError("grading length must match carrier dimension")
        if carrier.context != algebra.context:
            raise HostError("module and algebra live in different hosts")
        self.algebra = algebra
        self.carrier = carrier
        self.grading = grading
        self.action = action

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def to_json(self, algebra_ref=None) -> dict:
        alg = {"algebra_ref": algebra_ref} if algebra_ref is not None else {
            "algebra": self.algebra.to_json()}
        return {
            **alg,
            "kind": self.kind,
            "carrier": self.carrier.to_json(),
            "module_grading": self.grading.to_json(),
            "action": self.action.to_json(),
        }


class RightModule(_ModuleBase):
    """Carrier with action m (x) A -> m."""

    kind = "right"

    def __init__(self, algebra, carrier, grading, action):
        super().__init__(algebra, carrier, grading, action)
        if action.src != tensor_obj(carrier, algebra.carrier) or action.tgt != carrier:
            raise HostError("right action must map m (x) A -> m")


class LeftModule(_ModuleBase):
    """Carrier with action A (x) m -> m."""

    kind = "left"

    def __init__(self, algebra, carrier, grading, action):
        super().__init__(algebra, carrier, grading, action)
        if action.src != tensor_obj(algebra.carrier, carrier) or action.tgt != carrier:
            raise HostError("left action must map A (x) m -> m")


class Bimodule:
    """Commuting left and right actions on one carrier."""

    kind = "bi"

    def __init__(self, algebra: GradedAlgebra, carrier: HostObject, grading: Grading,
                 left: HostMorphism, right: HostMorphism):
        self.left_module = LeftModule(algebra, carrier, grading, left)
        self.right_module = RightModule(algebra, carrier, grading, right)
        self.algebra = algebra
        self.carrier = carrier
        self.grading = grading
        self.left = left
        self.right = right

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def to_json(self, algebra_ref=None) -> dict:
        base = self.right_module.to_json(algebra_ref)
        base.pop("action")
        base["kind"] = self.kind
        base["left_action"] = self.left.to_json()
        base["right_action"] = self.right.to_json()
        return base


def _action_even_report(action: HostMorphism, out_grading: Grading,
                        left_grading: Grading, right_grading: Grading) -> CheckReport:
    """Entries may only connect basis vectors whose grades add up."""
    rep = CheckReport(ok=True)
    pair = left_grading.tensor(right_grading)
    for r in range(action.mat.nrows):
        for c in range(action.mat.ncols):
            if not action.mat[r, c].is_zero():
                if out_grading.grades[r] != pair.grades[c]:
                    rep.add([r, c], action.mat[r, c], "grade mismatch")
    return rep


def check_module(mod) -> dict:
    """Exact module axioms: associativity, unit law, evenness, host validity."""
    if isinstance(mod, Bimodule):
        out = {
            "left": check_module(mod.left_module),
            "right": check_module(mod.right_module),
        }
        rep = CheckReport(ok=True)
        a = mod.algebra.carrier
        lhs = compose(mod.right, tensor_mor(mod.left, identity_mor(a)))
        rhs = compose(mod.left, tensor_mor(identity_mor(a), mod.right))
        if lhs.mat != rhs.mat:
            diff = lhs.mat - rhs.mat
            for i in range(diff.nrows):
                for j in range(diff.ncols):
                    if not diff[i, j].is_zero():
                        rep.add([i, j], lhs.mat[i, j], rhs.mat[i, j])
        out["commuting_actions"] = rep
        out["ok"] = out["left"]["ok"] and out["right"]["ok"] and rep.ok
        return out

    alg = mod.algebra
    a = alg.carrier
    idm = identity_mor(mod.carrier)
    ida = identity_mor(a)
    out = {}

    rep = CheckReport(ok=True)
    if mod.kind == "right":
        lhs = compose(mod.action, tensor_mor(mod.action, ida))
        rhs = compose(mod.action, tensor_mor(idm, alg.mul))
    else:
        lhs = compose(mod.action, tensor_mor(alg.mul, idm))
        rhs = compose(mod.action, tensor_mor(ida, mod.action))
    if lhs.mat != rhs.mat:
        diff = lhs.mat - rhs.mat
        for i in range(diff.nrows):
            for j in range(diff.ncols):
                if not diff[i, j].is_zero():
                    rep.add([i, j], lhs.mat[i, j], rhs.mat[i, j])
    out["associative"] = rep

    rep = CheckReport(ok=True)
    if mod.kind == "right":
        unit_law = compose(mod.action, tensor_mor(idm, alg.unit))
    else:
        unit_law = compose(mod.action, tensor_mor(alg.unit, idm))
    if unit_law.mat != Matrix.identity(mod.dim):
        diff = unit_law.mat - Matrix.identity(mod.dim)
        for i in range(diff.nrows):
            for j in range(diff.ncols):
                if not diff[i, j].is_zero():
                    rep.add([i, j], unit_law.mat[i, j], "identity entry")
    out["unital"] = rep

    if mod.kind == "right":
        out["even"] = _action_even_report(mod.action, mod.grading, mod.grading, alg.grading)
    else:
        out["even"] = _action_even_report(mod.action, mod.grading, alg.grading, mod.grading)

    rep = CheckReport(ok=True)
    if not mod.action.is_valid():
        rep.add(["action"], "host validity", "morphism of the host category")
    out["host"] = rep
    out["ok"] = all(r.ok for r in out.values() if isinstance(r, CheckReport))
    return out


def module_map_report(f: HostMorphism, src, tgt) -> CheckReport:
    """Whether f intertwines the actions (and both sides match shapes).

    Module morphisms need not be even for the module grading; grade parts
    are recovered with grade_components.
    """
    if src.kind != tgt.kind:
        raise HostError("source and target modules have different kinds")
    if src.algebra != tgt.algebra:
        raise HostError("modules live over different algebras")
    rep = CheckReport(ok=True)
    if f.src != src.carrier or f.tgt != tgt.carrier:
        rep.add(["shape"], "f", "morphism src.carrier -> tgt.carrier")
        return rep
    if not f.is_valid():
        rep.add(["host"], "f", "morphism of the host category")
    ida = identity_mor(src.algebra.carrier)
    if src.kind == "right":
        lhs = compose(f, src.action)
        rhs = compose(tgt.action, tensor_mor(f, ida))
    else:
        lhs = compose(f, src.action)
        rhs = compose(tgt.action, tensor_mor(ida, f))
    if lhs.mat != rhs.mat:
        diff = lhs.mat - rhs.mat
        for i in range(diff.nrows):
            for j in range(diff.ncols):
                if not diff[i, j].is_zero():
                    rep.add([i, j], lhs.mat[i, j], rhs.mat[i, j])
    return rep


def _scale_action_columns(action: HostMorphism, left_grading: Grading,
                          right_grading: Grading, scalar_fn) -> HostMorphism:
    """Rescale each column by scalar_fn(grade of left slot, grade of right slot)."""
    mat = action.mat
    scales = [
        scalar_fn(gu, gv)
        for gu in left_grading.grades
        for gv in right_grading.grades
    ]
    rows = [[scales[c] * mat[r, c] for c in range(mat.ncols)] for r in range(mat.nrows)]
    return HostMorphism(action.src, action.tgt, Matrix(rows, ncols=mat.ncols))


def twist_module(mod: RightModule, kappa: Cochain2) -> RightModule:
    """The kappa-twisted action over the kappa-twisted algebra."""
    if kappa.group != mod.algebra.group:
        raise HostError("twist cochain lives on the wrong group")
    rep = check_cocycle2(kappa)
    if not rep.ok:
        raise HostError(f"twisting needs a normalized 2-cocycle: {rep.violations[:3]}")
    new_action = _scale_action_columns(
        mod.action, mod.grading, mod.algebra.grading, lambda i, j: kappa(i, j))
    return RightModule(twist_algebra(mod.algebra, kappa), mod.carrier, mod.grading, new_action)


def left_from_right_braided(mod: RightModule, kappa: Cochain2) -> dict:
    """The left action a (x) x -> kappa(i,j)^-1 rho(braid(a (x) x)), blockwise.

    Requires the algebra to be graded-commutative with respect to kappa in
    the host braiding; otherwise rejected with the defect table attached.
    Returns the left module together with the two-sided module formed with
    the original right action and its commuting-actions verdict.
    """
    alg = mod.algebra
    gc = check_graded_commutative(alg, kappa)
    if not gc["ok"]:
        raise NotGradedCommutativeError(gc["defect"])
    br = braiding(alg.carrier, mod.carrier)
    base = compose(mod.action, br)
    left_action = _scale_action_columns(
        base, alg.grading, mod.grading, lambda i, j: kappa(i, j).inverse())
    left = LeftModule(alg, mod.carrier, mod.grading, left_action)
    bim = Bimodule(alg, mod.carrier, mod.grading, left_action, mod.action)
    bim_check = check_module(bim)
    return {
        "left": left,
        "bimodule": bim,
        "bimodule_check": bim_check,
        "bimodule_ok": bim_check["ok"],
    }


def regular_right(alg: GradedAlgebra) -> RightModule:
    return RightModule(alg, alg.carrier, alg.grading, alg.mul)


def regular_left(alg: GradedAlgebra) -> LeftModule:
    return LeftModule(alg, alg.carrier, alg.grading, alg.mul)


def regular_bimodule(alg: GradedAlgebra) -> Bimodule:
    return Bimodule(alg, alg.carrier, alg.grading, alg.mul, alg.mul)


def restrict_scalars(mod: RightModule, phi: HostMorphism, source: GradedAlgebra) -> RightModule:
    """Pull the action back along an algebra morphism phi: source -> mod.algebra."""
    if phi.src != source.carrier or phi.tgt != mod.algebra.carrier:
        raise HostError("phi must map the source algebra carrier into the acting one")
    action = compose(mod.action, tensor_mor(identity_mor(mod.carrier), phi))
    return RightModule(source, mod.carrier, mod.grading, action)


def _module_grades_from_columns(mat: Matrix, pair: Grading):
    """Grade of each column of an embedding/section, by its nonzero rows."""
    grades = []
    for j in range(mat.ncols):
        seen = {pair.grades[i] for i in range(mat.nrows) if not mat[i, j].is_zero()}
        if len(seen) != 1:
            raise HostError("tensor basis vector is not grade-homogeneous")
        grades.append(seen.pop())
    return grades


@dataclass
class TensorOverA:
    """m (x)_A n presented by a projection from m (x) n and its section."""

    m: object
    n: object
    method: str
    object: HostObject
    grading: Grading
    proj: HostMorphism      # m (x) n -> object
    section: HostMorphism   # object -> m (x) n, proj o section = id
    idempotent: HostMorphism | None = None
    agreement: dict | None = None
    checks: dict = field(default_factory=dict)

    def dims_by_grade(self) -> dict:
        return self.grading.dims_by_grade()


def _right_action_of(m) -> HostMorphism:
    if isinstance(m, Bimodule):
        return m.right
    if isinstance(m, RightModule):
        return m.action
    raise HostError("a right module or bimodule is required on the left slot")


def _left_action_of(n) -> HostMorphism:
    if isinstance(n, Bimodule):
        return n.left
    if isinstance(n, LeftModule):
        return n.action
    raise HostError("a left module or bimodule is required on the right slot")


def tensor_over_A(m, n, method: str = "coequalizer",
                  frobenius: FrobeniusData | None = None) -> TensorOverA:
    """The tensor product over A of a right and a left module.

    The coequalizer method forms the cokernel of rho (x) id - id (x)
    lambda on m (x) A (x) n.  The idempotent method needs Delta-separable
    Frobenius data and takes the image of
    p = (rho (x) lambda) o (id (x) (comul o unit) (x) id), after checking
    p^2 = p, the balancing identity, and proj o p = proj.  Whenever
    Frobenius data is supplied both presentations are computed and the
    explicit isomorphism between them is verified.
    """
    if method not in ("coequalizer", "idempotent"):
        raise HostError(f"unknown tensor method {method!r}")
    if method == "idempotent" and frobenius is None:
        raise HostError("the idempotent method needs Frobenius data")
    rho = _right_action_of(m)
    lam = _left_action_of(n)
    alg = m.algebra
    if n.algebra != alg:
        raise HostError("modules live over different algebras")
    idm = identity_mor(m.carrier)
    idn = identity_mor(n.carrier)
    diff = tensor_mor(rho, idn) - tensor_mor(idm, lam)
    ic = image_and_cokernel(diff)
    pair = m.grading.tensor(n.grading)
    coeq_grading = Grading(alg.group, _module_grades_from_columns(ic.section.mat, pair))

    checks: dict = {}
    idem = None
    agreement = None
    if frobenius is not None:
        if compose(alg.mul, frobenius.comul).mat != Matrix.identity(alg.dim):
            raise HostError("idempotent method needs Delta-separable data (mul o comul = id)")
        delta_eta = compose(frobenius.comul, alg.unit)
        mid = tensor_mor(tensor_mor(idm, delta_eta), idn)
        outer = tensor_mor(rho, lam)
        p = compose(outer, mid)
        rep = CheckReport(ok=True)
        if compose(p, p).mat != p.mat:
            rep.add(["p^2"], "p o p", "p")
        checks["idempotent"] = rep
        rep = CheckReport(ok=True)
        if compose(p, tensor_mor(rho, idn)).mat != compose(p, tensor_mor(idm, lam)).mat:
            rep.add(["balance"], "p o (rho (x) id)", "p o (id (x) lambda)")
        checks["balanced"] = rep
        rep = CheckReport(ok=True)
        if compose(ic.proj, p).mat != ic.proj.mat:
            rep.add(["descent"], "proj o p", "proj")
        checks["proj_absorbs_p"] = rep
        if not all(r.ok for r in checks.values()):
            raise HostError(f"separability idempotent failed its laws: {checks}")
        pic = image_and_cokernel(p)
        idem = p
        img_grading = Grading(alg.group, _module_grades_from_columns(pic.embed.mat, pair))
        iso = compose(ic.proj, pic.embed)  # image of p -> coequalizer
        iso_inv_mat = iso.mat.inverse()
        agreement = {
            "dims_match": img_grading.dims_by_grade() == coeq_grading.dims_by_grade(),
            "iso": iso,
        }
        if not agreement["dims_match"]:
            raise HostError("tensor methods disagree on graded dimensions")
        assert iso_inv_mat @ iso.mat == Matrix.identity(iso.mat.ncols)
        if method == "idempotent":
            return TensorOverA(
                m=m, n=n, method=method, object=pic.image, grading=img_grading,
                proj=pic.factor, section=pic.embed, idempotent=idem,
                agreement=agreement, checks=checks)
    return TensorOverA(
        m=m, n=n, method="coequalizer", object=ic.cokernel, grading=coeq_grading,
        proj=ic.proj, section=ic.section, idempotent=idem,
        agreement=agreement, checks=checks)


def _induced_right_action(t: TensorOverA, inner: HostMorphism) -> HostMorphism:
    """Descend id_m (x) (n-action) along the tensor projection."""
    ida = identity_mor(t.m.algebra.carrier)
    lifted = compose(t.proj, compose(inner, tensor_mor(t.section, ida)))
    # well-definedness: the lift kills the image of the balancing map
    rho = _right_action_of(t.m)
    lam = _left_action_of(t.n)
    idm = identity_mor(t.m.carrier)
    idn = identity_mor(t.n.carrier)
    diff = tensor_mor(rho, idn) - tensor_mor(idm, lam)
    full = compose(t.proj, inner)
    if compose(full, tensor_mor(diff, ida)).mat != Matrix.zeros(
            t.object.dim, diff.mat.ncols * t.m.algebra.dim):
        raise HostError("induced action does not descend to the tensor product")
    # independence of the chosen section
    recon = compose(full, tensor_mor(compose(t.section, t.proj), ida))
    if recon.mat != full.mat:
        raise HostError("induced action depends on the section")
    return lifted


def graded_tensor(m: RightModule, n: RightModule, kappa: Cochain2,
                  frobenius: FrobeniusData | None = None) -> RightModule:
    """m tensor-tilde n: promote n to a bimodule along the braiding, tensor
    over A, keep the right action inherited from n."""
    bic = check_bicharacter(kappa)
    if not bic.ok:
        raise HostError(f"graded tensor needs a bicharacter: {bic.violations[:3]}")
    promo = left_from_right_braided(n, kappa)
    if not promo["bimodule_ok"]:
        raise HostError("promoted module is not a bimodule")
    t = tensor_over_A(m, promo["bimodule"], method="coequalizer", frobenius=frobenius)
    idm = identity_mor(m.carrier)
    inner = tensor_mor(idm, n.action)  # m (x) n (x) A -> m (x) n
    action = _induced_right_action(t, inner)
    return RightModule(m.algebra, t.object, t.grading, action)


def tensor_morphisms_over_A(f: HostMorphism, g: HostMorphism,
                            src: TensorOverA, tgt: TensorOverA) -> HostMorphism:
    """proj' o (f (x) g) o section, with the idempotent-compatibility check.

    f must be a right-module morphism src.m -> tgt.m and g a left-module
    morphism src.n -> tgt.n; both tensor presentations must carry the
    separability idempotent.
    """
    if src.idempotent is None or tgt.idempotent is None:
        raise HostError("tensor presentations must be built with Frobenius data")
    frep = module_map_report(
        f,
        src.m.right_module if isinstance(src.m, Bimodule) else src.m,
        tgt.m.right_module if isinstance(tgt.m, Bimodule) else tgt.m,
    )
    if not frep.ok:
        raise HostError(f"f is not a right-module morphism: {frep.violations[:3]}")
    grep = module_map_report(
        g,
        src.n.left_module if isinstance(src.n, Bimodule) else src.n,
        tgt.n.left_module if isinstance(tgt.n, Bimodule) else tgt.n,
    )
    if not grep.ok:
        raise HostError(f"g is not a left-module morphism: {grep.violations[:3]}")
    fg = tensor_mor(f, g)
    if compose(tgt.idempotent, fg).mat != compose(fg, src.idempotent).mat:
        raise HostError("f (x) g does not commute with the separability idempotents")
    return compose(tgt.proj, compose(fg, src.section))
