import pytest

from gradedalg.cohomology import (
    Cochain1,
    Cochain2,
    Cochain3,
    FinAbGroup,
    UnsupportedValueError,
    d1,
    d2,
)
from gradedalg.galg import (
    GradedAlgebra,
    PointedAlgebraModel,
    algebra_iso_even,
    build_twisted_group_algebra,
    check_algebra,
    check_frobenius,
    check_graded_commutative,
    check_separability,
    opposite_algebra,
    solve_pointed_obstruction,
    twist_algebra,
    twist_frobenius,
)
from gradedalg.hostcat import (
    GradedVecContext,
    Grading,
    HostError,
    HostMorphism,
    compose,
    tensor_obj,
)
from gradedalg.linalg import Matrix
from gradedalg.scalars import ONE, ZERO, integer, zeta

from conftest import MINUS, Z2, Z22, z22_braiding

Z3 = FinAbGroup((3,))
Z4 = FinAbGroup((4,))


def tga(group, omega=None, beta=None):
    ctx = GradedVecContext(group, beta or Cochain2.trivial(group))
    return build_twisted_group_algebra(ctx, group, omega or Cochain2.trivial(group))


def test_group_algebra_axioms():
    for group in (Z2, Z3, Z4, Z22):
        alg, frob = tga(group)
        assert check_algebra(alg)["ok"]
        assert check_frobenius(alg, frob)["ok"]
        assert compose(alg.mul, frob.comul).mat == Matrix.identity(alg.dim)
        sep = check_separability(alg, frob)
        assert sep["delta_separable"].ok and sep["witness"] is not None


def test_component_access(super_tga):
    alg, _ = super_tga
    comp, embed, retract = alg.component((1,))
    assert comp.dim == 1
    assert compose(retract, embed).mat == Matrix.identity(1)
    assert alg.mul_block((1,), (1,)).shape == (1, 1)
    assert alg.mul_block((1,), (1,))[0, 0] == ONE


def test_broken_multiplication_reported():
    ctx = GradedVecContext(Z2, Cochain2.trivial(Z2))
    alg, _ = tga(Z2)
    rows = [list(r) for r in alg.mul.mat.rows]
    rows[1][1] = integer(2)  # e0 * e1 = 2 e1 but e1 * e0 = e1: breaks associativity
    bad_mul = HostMorphism(alg.mul.src, alg.mul.tgt, Matrix(rows, ncols=4))
    bad = GradedAlgebra(alg.carrier, alg.grading, bad_mul, alg.unit)
    rep = check_algebra(bad)
    assert not rep["ok"] and not rep["associative"].ok


def test_twist_by_cocycle_preserves_axioms():
    omega = Cochain2.from_function(
        Z22, lambda s, t: MINUS if s[1] * t[0] % 2 else ONE)
    alg, frob = tga(Z22)
    twisted = twist_algebra(alg, omega)
    assert check_algebra(twisted)["ok"]
    tfrob = twist_frobenius(alg, frob, omega)
    assert check_frobenius(twisted, tfrob)["ok"]
    assert compose(twisted.mul, tfrob.comul).mat == Matrix.identity(4)
    assert twisted.mul_block((0, 1), (1, 0))[0, 0] == MINUS


def test_coboundary_twist_is_isomorphic():
    alg, _ = tga(Z22)
    tau = Cochain1.from_function(Z22, lambda a: zeta(4, a[0]))
    twisted = twist_algebra(alg, d1(tau))
    iso = algebra_iso_even(twisted, alg)
    assert iso is not None
    # explicit algebra morphism law: phi o mu_twisted = mu o (phi (x) phi)
    phi_sq = Matrix.zeros(16, 16)
    phi_sq = iso.mat.kron(iso.mat)
    assert iso.mat @ twisted.mul.mat == alg.mul.mat @ phi_sq
    back = algebra_iso_even(alg, twisted)
    assert back is not None
    assert back.mat @ alg.mul.mat == twisted.mul.mat @ back.mat.kron(back.mat)


def test_noncoboundary_twist_has_no_even_iso():
    alg, _ = tga(Z22)
    omega_bc = Cochain2.from_function(
        Z22, lambda s, t: MINUS if s[1] * t[0] % 2 else ONE)
    twisted = twist_algebra(alg, omega_bc)
    assert algebra_iso_even(twisted, alg) is None
    assert algebra_iso_even(alg, twisted) is None


def test_iso_search_needs_thin_components(super_host):
    carrier = super_host.object([0, 0])
    gr = Grading(Z2, [(0,), (0,)])
    mul = HostMorphism(tensor_obj(carrier, carrier), carrier,
                       Matrix([[ONE, ZERO, ZERO, ZERO], [ZERO, ONE, ONE, ZERO]], ncols=4))
    unit = HostMorphism(super_host.unit_object(), carrier,
                        Matrix([[ONE], [ZERO]], ncols=1))
    fat = GradedAlgebra(carrier, gr, mul, unit)
    with pytest.raises(UnsupportedValueError):
        algebra_iso_even(fat, fat)


def test_graded_commutative(super_tga):
    alg, _ = super_tga
    beta = Cochain2.from_function(Z2, lambda a, b: MINUS if a[0] * b[0] % 2 else ONE)
    gc = check_graded_commutative(alg, beta)
    assert gc["ok"]
    assert gc["defect"][((1,), (1,))] == MINUS
    gc_wrong = check_graded_commutative(alg, Cochain2.trivial(Z2))
    assert not gc_wrong["ok"]


def test_opposite_algebra(super_tga):
    alg, _ = super_tga
    opp = opposite_algebra(alg)
    assert check_algebra(opp)["ok"]
    # super tga: odd-odd block flips sign through the braiding
    assert opp.mul_block((1,), (1,))[0, 0] == MINUS
    assert opposite_algebra(opp).mul.mat == alg.mul.mat


def test_obstruction_dichotomy():
    psi_minus = Cochain3.from_function(
        Z2, lambda a, b, c: MINUS if a[0] * b[0] * c[0] % 2 else ONE)
    res = solve_pointed_obstruction(Z2, psi_minus)
    assert res["psi_is_cocycle"].ok and not res["solvable"] and res["omega"] is None

    res_plus = solve_pointed_obstruction(Z2, Cochain3.trivial(Z2))
    assert res_plus["solvable"]
    omega = res_plus["omega"]
    dd = d2(omega)
    for i in Z2.elements:
        for j in Z2.elements:
            for k in Z2.elements:
                assert dd(i, j, k).is_one()


def test_pointed_model_check():
    psi = Cochain3.from_function(
        Z2, lambda a, b, c: MINUS if a[0] * b[0] * c[0] % 2 else ONE)
    good = PointedAlgebraModel(Z2, Cochain3.trivial(Z2), Cochain2.trivial(Z2))
    assert good.check().ok
    bad = PointedAlgebraModel(Z2, psi, Cochain2.trivial(Z2))
    rep = bad.check()
    assert not rep.ok and rep.violations


def test_tga_with_nontrivial_braiding(z22_tga):
    alg, frob = z22_tga
    assert check_algebra(alg)["ok"]
    assert check_frobenius(alg, frob)["ok"]
    gc = check_graded_commutative(alg, z22_braiding())
    assert gc["ok"]


def test_tga_rep_host_lines(d4):
    alg, frob = d4["algebra"], d4["frobenius"]
    assert check_algebra(alg)["ok"]
    assert check_frobenius(alg, frob)["ok"]
    assert compose(alg.mul, frob.comul).mat == Matrix.identity(4)


def test_tga_rejects_wrong_lines(d4):
    rctx = d4["ctx"]
    lines = dict(d4["lines"])
    lines[(0, 0)] = d4["irrep2"]  # not one-dimensional
    with pytest.raises(HostError):
        build_twisted_group_algebra(rctx, Z22, Cochain2.trivial(Z22), lines)


def test_algebra_json_round_trip(super_tga, super_host):
    from gradedalg.io import algebra_from_json, frobenius_from_json
    alg, frob = super_tga
    back = algebra_from_json(super_host, alg.to_json())
    assert back.mul.mat == alg.mul.mat and back.unit.mat == alg.unit.mat
    assert back.grading.grades == alg.grading.grades
    fback = frobenius_from_json(super_host, frob.to_json())
    assert fback.comul.mat == frob.comul.mat and fback.counit.mat == frob.counit.mat
