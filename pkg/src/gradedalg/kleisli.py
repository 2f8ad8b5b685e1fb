"""The monad -(x)A, its Kleisli category, the lax monoidal structure, the
twisted interchange law, and the comparison with the module-level tensor.

Kleisli morphisms x -> y are host morphisms x -> y(x)A composed through
mul.  The lax structure map merges the two A factors after braiding one
past the middle object; whether it makes mul monoidal is equivalent to
commutativity of A, and on graded-commutative algebras the interchange
law acquires the twist kappa(|f|, |g'|).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .cohomology import Cochain2, check_bicharacter
from .galg import FrobeniusData, GradedAlgebra, check_graded_commutative
from .gmod import left_from_right_braided, tensor_over_A
from .hostcat import (
    Grading,
    HostError,
    HostMorphism,
    HostObject,
    braiding,
    braiding_inverse,
    compose,
    grade_components,
    hom_basis,
    identity_mor,
    tensor_mor,
    tensor_obj,
)
from .induced import InducedModule
from .linalg import Matrix
from .scalars import ONE

__all__ = [
    "MonadA",
    "KleisliMorphism",
    "kleisli_identity",
    "kleisli_compose",
    "kleisli_tensor",
    "lax_monoidal_map",
    "oplax_monoidal_map",
    "check_twisted_interchange",
    "check_monoidal_monad",
    "check_frobenius_monad",
    "kleisli_to_induced",
    "induced_to_kleisli",
    "induced_tensor_comparison",
]


class MonadA:
    """-(x)A with components generated per object on demand."""

    def __init__(self, algebra: GradedAlgebra, frobenius: FrobeniusData | None = None):
        self.algebra = algebra
        self.frobenius = frobenius

    def apply(self, c: HostObject) -> HostObject:
        return tensor_obj(c, self.algebra.carrier)

    def lift(self, f: HostMorphism) -> HostMorphism:
        return tensor_mor(f, identity_mor(self.algebra.carrier))

    def mul_at(self, c: HostObject) -> HostMorphism:
        return tensor_mor(identity_mor(c), self.algebra.mul)

    def unit_at(self, c: HostObject) -> HostMorphism:
        return tensor_mor(identity_mor(c), self.algebra.unit)

    def comul_at(self, c: HostObject) -> HostMorphism:
        if self.frobenius is None:
            raise HostError("comultiplication component needs Frobenius data")
        return tensor_mor(identity_mor(c), self.frobenius.comul)

    def counit_at(self, c: HostObject) -> HostMorphism:
        if self.frobenius is None:
            raise HostError("counit component needs Frobenius data")
        return tensor_mor(identity_mor(c), self.frobenius.counit)

    def check_laws(self, objects) -> dict:
        """Monad associativity and unit laws at each sampled component."""
        assoc = unit_left = unit_right = True
        for c in objects:
            mu = self.mul_at(c)
            tc = self.apply(c)
            if compose(mu, self.lift(mu)) != compose(mu, self.mul_at(tc)):
                assoc = False
            if compose(mu, self.lift(self.unit_at(c))) != identity_mor(tc):
                unit_left = False
            if compose(mu, self.unit_at(tc)) != identity_mor(tc):
                unit_right = False
        ok = assoc and unit_left and unit_right
        return {"associative": assoc, "unit_left": unit_left,
                "unit_right": unit_right, "ok": ok}


@dataclass
class KleisliMorphism:
    """A morphism x -> y of free modules, stored as its host map x -> y(x)A."""

    source: HostObject
    target: HostObject
    algebra: GradedAlgebra
    underlying: HostMorphism

    def __post_init__(self):
        expected = tensor_obj(self.target, self.algebra.carrier)
        if self.underlying.src != self.source or self.underlying.tgt != expected:
            raise HostError("underlying morphism does not match the Kleisli profile")

    @property
    def _source_grading(self) -> Grading:
        group = self.algebra.group
        return Grading(group, [group.zero()] * self.source.dim)

    @property
    def _target_grading(self) -> Grading:
        group = self.algebra.group
        trivial = Grading(group, [group.zero()] * self.target.dim)
        return trivial.tensor(self.algebra.grading)

    def grade_components(self) -> dict:
        """Split by the A-grade of the image: underlying = sum of the parts."""
        comps = grade_components(self.underlying.mat, self._source_grading,
                                 self._target_grading)
        out = {}
        for d, mat in comps.items():
            mor = HostMorphism(self.underlying.src, self.underlying.tgt, mat)
            if not mor.is_valid():
                raise HostError("grade component leaves the host hom space")
            out[d] = KleisliMorphism(self.source, self.target, self.algebra, mor)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, KleisliMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.underlying.mat == other.underlying.mat
        )


def kleisli_identity(x: HostObject, algebra: GradedAlgebra) -> KleisliMorphism:
    eta = tensor_mor(identity_mor(x), algebra.unit)
    return KleisliMorphism(x, x, algebra, eta)


def kleisli_compose(g: KleisliMorphism, f: KleisliMorphism) -> KleisliMorphism:
    if f.algebra is not g.algebra or f.target != g.source:
        raise HostError("Kleisli morphisms do not compose")
    alg = f.algebra
    merged = compose(
        tensor_mor(identity_mor(g.target), alg.mul),
        compose(tensor_mor(g.underlying, identity_mor(alg.carrier)), f.underlying))
    return KleisliMorphism(f.source, g.target, alg, merged)


def lax_monoidal_map(x: HostObject, y: HostObject, algebra: GradedAlgebra) -> HostMorphism:
    """(x(x)A)(x)(y(x)A) -> (x(x)y)(x)A: braid A past y, then multiply."""
    idx = identity_mor(x)
    ida = identity_mor(algebra.carrier)
    swap = tensor_mor(tensor_mor(idx, braiding(algebra.carrier, y)), ida)
    mul2 = tensor_mor(tensor_mor(idx, identity_mor(y)), algebra.mul)
    return compose(mul2, swap)


def oplax_monoidal_map(x: HostObject, y: HostObject, algebra: GradedAlgebra,
                       frobenius: FrobeniusData) -> HostMorphism:
    """(x(x)y)(x)A -> (x(x)A)(x)(y(x)A): split A, braid one copy back."""
    idx = identity_mor(x)
    ida = identity_mor(algebra.carrier)
    split = tensor_mor(tensor_mor(idx, identity_mor(y)), frobenius.comul)
    unswap = tensor_mor(tensor_mor(idx, braiding_inverse(algebra.carrier, y)), ida)
    return compose(unswap, split)


def kleisli_tensor(f: KleisliMorphism, g: KleisliMorphism) -> KleisliMorphism:
    if f.algebra is not g.algebra:
        raise HostError("Kleisli morphisms live over different algebras")
    alg = f.algebra
    merge = lax_monoidal_map(f.target, g.target, alg)
    underlying = compose(merge, tensor_mor(f.underlying, g.underlying))
    return KleisliMorphism(tensor_obj(f.source, g.source),
                           tensor_obj(f.target, g.target), alg, underlying)


def _default_objects(algebra: GradedAlgebra):
    objs = []
    for g in algebra.group.elements:
        comp, _, _ = algebra.component(g)
        if comp.dim > 0:
            objs.append(comp)
    return objs


def _tuple_dim(objects, idx_tuple) -> int:
    return sum(objects[i].dim for i in set(idx_tuple))


def _quadruple_indices(sizes, exhaustive: bool, samples: int, rng):
    if exhaustive:
        yield from itertools.product(*[range(n) for n in sizes])
    else:
        for _ in range(samples):
            yield tuple(rng.randrange(n) for n in sizes)


def check_twisted_interchange(algebra: GradedAlgebra, kappa: Cochain2,
                              objects=None, samples: int = 64, seed: int = 0,
                              exhaustive_dim: int = 4) -> dict:
    """Verify (f'.f) (x)_K (g'.g) = sum_{i,j} kappa(i,j) (f' (x)_K g'_j).(f_i (x)_K g).

    Quadruples run over Kleisli hom bases for all composable 6-tuples of
    the given objects (default: the algebra's homogeneous components),
    exhaustively when the distinct objects involved have total dimension
    at most exhaustive_dim, else `samples` seeded random draws.  Also
    finds a witness violating the untwisted law when kappa is nontrivial.
    """
    gc = check_graded_commutative(algebra, kappa)
    if not gc["ok"]:
        raise HostError("algebra is not graded-commutative with respect to kappa")
    if objects is None:
        objects = _default_objects(algebra)
    group = algebra.group
    carrier = algebra.carrier
    rng = random.Random(seed)
    kappa_nontrivial = any(
        kappa(i, j) != ONE for i in group.elements for j in group.elements)

    checked = 0
    exhaustive_tuples = sampled_tuples = 0
    violations = []
    untwisted_witness = None

    n = len(objects)
    for tup in itertools.product(range(n), repeat=6):
        xi, yi, zi, ui, vi, wi = tup
        x, y, z = objects[xi], objects[yi], objects[zi]
        u, v, w = objects[ui], objects[vi], objects[wi]
        bf = hom_basis(x, tensor_obj(y, carrier))
        bfp = hom_basis(y, tensor_obj(z, carrier))
        bg = hom_basis(u, tensor_obj(v, carrier))
        bgp = hom_basis(v, tensor_obj(w, carrier))
        sizes = [len(bf), len(bfp), len(bg), len(bgp)]
        if 0 in sizes:
            continue
        exhaustive = _tuple_dim(objects, tup) <= exhaustive_dim
        if exhaustive:
            exhaustive_tuples += 1
        else:
            sampled_tuples += 1
        for qi in _quadruple_indices(sizes, exhaustive, samples, rng):
            f = KleisliMorphism(x, y, algebra, bf[qi[0]])
            fp = KleisliMorphism(y, z, algebra, bfp[qi[1]])
            g = KleisliMorphism(u, v, algebra, bg[qi[2]])
            gp = KleisliMorphism(v, w, algebra, bgp[qi[3]])
            lhs = kleisli_tensor(kleisli_compose(fp, f), kleisli_compose(gp, g))
            rhs = Matrix.zeros(lhs.underlying.mat.nrows, lhs.underlying.mat.ncols)
            plain = Matrix.zeros(lhs.underlying.mat.nrows, lhs.underlying.mat.ncols)
            for i, fi in f.grade_components().items():
                inner = kleisli_tensor(fi, g)
                for j, gpj in gp.grade_components().items():
                    term = kleisli_compose(kleisli_tensor(fp, gpj), inner)
                    rhs = rhs + term.underlying.mat.scale(kappa(i, j))
                    plain = plain + term.underlying.mat
            checked += 1
            if lhs.underlying.mat != rhs and len(violations) < 3:
                violations.append({"objects": tup, "quadruple": qi})
            if untwisted_witness is None and kappa_nontrivial and lhs.underlying.mat != plain:
                untwisted_witness = {
                    "objects": tup,
                    "quadruple": qi,
                    "lhs": lhs.underlying,
                    "untwisted_rhs": HostMorphism(
                        lhs.underlying.src, lhs.underlying.tgt, plain),
                }

    ok = not violations and (untwisted_witness is not None or not kappa_nontrivial)
    return {
        "ok": ok,
        "law_holds": not violations,
        "checked": checked,
        "exhaustive_tuples": exhaustive_tuples,
        "sampled_tuples": sampled_tuples,
        "violations": violations,
        "kappa_nontrivial": kappa_nontrivial,
        "kappa_is_bicharacter": check_bicharacter(kappa).ok,
        "untwisted_witness": untwisted_witness,
    }


def check_monoidal_monad(algebra: GradedAlgebra, objects=None,
                         frobenius: FrobeniusData | None = None) -> dict:
    """Unit and multiplication monoidality of -(x)A via the lax structure.

    Verifies on sampled object pairs that the unit triangle holds, that
    mul-monoidality, the four-fold algebra identity with one braiding
    inserted, and plain commutativity all agree, and in the Delta-separable
    commutative case that oplax o lax equals the module-tensor idempotent.
    """
    if objects is None:
        objects = _default_objects(algebra)
    mon = MonadA(algebra, frobenius)
    carrier = algebra.carrier
    mul, unit = algebra.mul, algebra.unit
    ida = identity_mor(carrier)

    c_aa = braiding(carrier, carrier)
    commutative = compose(mul, c_aa) == mul
    mul4 = compose(mul, tensor_mor(mul, mul))
    algebra_criterion = compose(mul4, tensor_mor(tensor_mor(ida, c_aa), ida)) == mul4

    unit_monoidal = True
    mul_monoidal = True
    t2_natural = True
    witness = None
    for xi, x in enumerate(objects):
        for yi, y in enumerate(objects):
            t2 = lax_monoidal_map(x, y, algebra)
            lhs_u = compose(t2, tensor_mor(mon.unit_at(x), mon.unit_at(y)))
            if lhs_u != mon.unit_at(tensor_obj(x, y)):
                unit_monoidal = False
            tx, ty = mon.apply(x), mon.apply(y)
            lhs_m = compose(mon.mul_at(tensor_obj(x, y)),
                            compose(mon.lift(t2), lax_monoidal_map(tx, ty, algebra)))
            rhs_m = compose(t2, tensor_mor(mon.mul_at(x), mon.mul_at(y)))
            if lhs_m != rhs_m:
                mul_monoidal = False
                if witness is None:
                    witness = {"x": xi, "y": yi,
                               "lhs": lhs_m, "rhs": rhs_m}
            for x2 in objects:
                for h in hom_basis(x, x2):
                    lhs_n = compose(lax_monoidal_map(x2, y, algebra),
                                    tensor_mor(mon.lift(h), identity_mor(ty)))
                    rhs_n = compose(tensor_mor(tensor_mor(h, identity_mor(y)), ida),
                                    lax_monoidal_map(x, y, algebra))
                    if lhs_n != rhs_n:
                        t2_natural = False

    s2t2_equals_p = None
    if frobenius is not None and commutative:
        delta_separable = compose(mul, frobenius.comul) == identity_mor(carrier)
        if delta_separable:
            s2t2_equals_p = True
            trivial = Cochain2.trivial(algebra.group)
            for x in objects:
                for y in objects:
                    mx = InducedModule(x, algebra)
                    ny = InducedModule(y, algebra)
                    promoted = left_from_right_braided(ny, trivial)
                    t = tensor_over_A(mx, promoted["left"], method="idempotent",
                                      frobenius=frobenius)
                    s2t2 = compose(oplax_monoidal_map(x, y, algebra, frobenius),
                                   lax_monoidal_map(x, y, algebra))
                    if s2t2.mat != t.idempotent.mat:
                        s2t2_equals_p = False

    equivalence_ok = (mul_monoidal == algebra_criterion == commutative)
    return {
        "unit_monoidal": unit_monoidal,
        "mul_monoidal": mul_monoidal,
        "algebra_criterion": algebra_criterion,
        "commutative": commutative,
        "equivalence_ok": equivalence_ok,
        "t2_natural": t2_natural,
        "witness": witness,
        "s2t2_equals_p": s2t2_equals_p,
        "ok": unit_monoidal and equivalence_ok and t2_natural
        and s2t2_equals_p is not False,
    }


def check_frobenius_monad(algebra: GradedAlgebra, frobenius: FrobeniusData,
                          objects=None) -> dict:
    """Frobenius-monad identities of -(x)A at sampled components.

    Both composites through the comonad comultiplication must equal
    comul o mul componentwise; the tau checks record whether the braiding
    symmetrizer fixes mul and comul (the commutative avatars).
    """
    if objects is None:
        objects = _default_objects(algebra)
    mon = MonadA(algebra, frobenius)
    carrier = algebra.carrier
    frobenius_left = frobenius_right = True
    tau_mul = tau_comul = True
    c_aa = braiding(carrier, carrier)
    for c in objects:
        tc = mon.apply(c)
        middle = compose(mon.comul_at(c), mon.mul_at(c))
        left = compose(mon.lift(mon.mul_at(c)), mon.comul_at(tc))
        right = compose(mon.mul_at(tc), mon.lift(mon.comul_at(c)))
        if left != middle:
            frobenius_left = False
        if right != middle:
            frobenius_right = False
        tau = tensor_mor(identity_mor(c), c_aa)
        if compose(mon.mul_at(c), tau) != mon.mul_at(c):
            tau_mul = False
        if compose(tau, mon.comul_at(c)) != mon.comul_at(c):
            tau_comul = False
    return {
        "frobenius_left": frobenius_left,
        "frobenius_right": frobenius_right,
        "tau_mul": tau_mul,
        "tau_comul": tau_comul,
        "ok": frobenius_left and frobenius_right,
    }


def kleisli_to_induced(f: KleisliMorphism) -> HostMorphism:
    """The module morphism Ind x -> Ind y matching f under the equivalence."""
    alg = f.algebra
    return compose(
        tensor_mor(identity_mor(f.target), alg.mul),
        tensor_mor(f.underlying, identity_mor(alg.carrier)))


def induced_to_kleisli(g: HostMorphism, x: HostObject, y: HostObject,
                       algebra: GradedAlgebra) -> KleisliMorphism:
    """Inverse of kleisli_to_induced: restrict along the unit."""
    eta = kleisli_identity(x, algebra).underlying
    return KleisliMorphism(x, y, algebra, compose(g, eta))


def induced_tensor_comparison(x: HostObject, y: HostObject, algebra: GradedAlgebra,
                              kappa: Cochain2, frobenius: FrobeniusData) -> dict:
    """Ind(x (x) y) against Ind x (x)_A Ind y with the kappa-promoted left leg.

    Builds the idempotent-presentation tensor product, the explicit
    isomorphism psi (insert the unit, project) with inverse through the
    lax structure map, and reports graded-dimension equality plus the
    unit/counit laws of the iso pair.  Raises if the lax map fails to
    descend (it must, when A is graded-commutative for kappa).
    """
    mx = InducedModule(x, algebra)
    ny = InducedModule(y, algebra)
    promoted = left_from_right_braided(ny, kappa)
    t = tensor_over_A(mx, promoted["left"], method="idempotent", frobenius=frobenius)
    ind_xy = InducedModule(tensor_obj(x, y), algebra)

    dims_kleisli = ind_xy.grading.dims_by_grade()
    dims_graded = t.dims_by_grade()

    t2 = lax_monoidal_map(x, y, algebra)
    if compose(t2, t.idempotent) != t2:
        raise HostError("lax structure map does not descend to the tensor product")
    t2_bar = compose(t2, t.section)
    insert = tensor_mor(
        identity_mor(x),
        tensor_mor(algebra.unit, identity_mor(tensor_obj(y, algebra.carrier))))
    psi = compose(t.proj, HostMorphism(ind_xy.carrier, t2.src, insert.mat))

    iso_ok = (
        compose(t2_bar, psi) == identity_mor(ind_xy.carrier)
        and compose(psi, t2_bar) == identity_mor(t.object)
    )

    act_full = tensor_mor(identity_mor(mx.carrier), ny.action)
    act_t = compose(t.proj, compose(
        act_full, tensor_mor(t.section, identity_mor(algebra.carrier))))
    psi_module = compose(psi, ind_xy.action) == compose(
        act_t, tensor_mor(psi, identity_mor(algebra.carrier)))

    return {
        "dims_kleisli": dims_kleisli,
        "dims_graded": dims_graded,
        "dims_match": dims_kleisli == dims_graded,
        "tensor": t,
        "psi": psi,
        "psi_inverse": t2_bar,
        "iso_ok": iso_ok,
        "psi_is_module_map": psi_module,
        "ok": dims_kleisli == dims_graded and iso_ok and psi_module,
    }
