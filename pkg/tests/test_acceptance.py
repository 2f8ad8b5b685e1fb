"""One test per acceptance criterion; conftest prints a PASS/FAIL summary.

Every equality here is exact cyclotomic arithmetic, so the tolerance of
each comparison is zero.  Wall-time budgets are asserted inside the tests.
"""
import random
import time

from gradedalg.cohomology import (
    Cochain1,
    Cochain2,
    Cochain3,
    FinAbGroup,
    check_bicharacter,
    cohomologous,
    d1,
    d2,
)
from gradedalg.galg import (
    algebra_iso_even,
    build_twisted_group_algebra,
    check_algebra,
    check_frobenius,
    check_graded_commutative,
    solve_pointed_obstruction,
    twist_algebra,
    twist_frobenius,
)
from gradedalg.gmod import (
    left_from_right_braided,
    regular_right,
    tensor_morphisms_over_A,
    tensor_over_A,
)
from gradedalg.hostcat import (
    GradedVecContext,
    Grading,
    HostMorphism,
    compose,
    hom_basis,
    identity_mor,
    is_even,
    tensor_obj,
)
from gradedalg.induced import graded_schur_report, induce, sigma_cocycle, stabilizer
from gradedalg.kleisli import (
    KleisliMorphism,
    check_monoidal_monad,
    check_twisted_interchange,
    induced_tensor_comparison,
    kleisli_tensor,
    kleisli_to_induced,
)
from gradedalg.linalg import Matrix
from gradedalg.scalars import ONE, ZERO, zeta

from conftest import (
    MINUS,
    Z2,
    Z22,
    d4_character,
    super_braiding,
    z22_braiding,
)

Z3 = FinAbGroup((3,))
Z4 = FinAbGroup((4,))


def omega_bc():
    return Cochain2.from_function(Z22, lambda s, t: MINUS if s[1] * t[0] % 2 else ONE)


def omega_aa():
    return Cochain2.from_function(Z22, lambda s, t: MINUS if s[0] * t[0] % 2 else ONE)


def test_criterion_1():
    started = time.monotonic()
    minus = Cochain3.from_function(
        Z2, lambda a, b, c: MINUS if a[0] * b[0] * c[0] % 2 else ONE)
    res = solve_pointed_obstruction(Z2, minus)
    assert res["psi_is_cocycle"].ok
    assert not res["solvable"] and res["omega"] is None

    plus = Cochain3.trivial(Z2)
    res = solve_pointed_obstruction(Z2, plus)
    assert res["solvable"] and res["omega"] is not None
    found = d2(res["omega"])
    for a in Z2.elements:
        for b in Z2.elements:
            for c in Z2.elements:
                assert found(a, b, c) == plus(a, b, c)
    assert time.monotonic() - started < 1.0


def test_criterion_2():
    started = time.monotonic()

    def coboundary(group, tau_values):
        tau = Cochain1.from_function(group, lambda a: tau_values[a])
        return d1(tau)

    cases = []
    for group, order in ((Z2, 2), (Z3, 3), (Z4, 4)):
        quad = {g: zeta(2 * order * order, g[0] * g[0]) for g in group.elements}
        lin = {g: zeta(order, g[0]) if g[0] else ONE for g in group.elements}
        cases.append((group, [Cochain2.trivial(group),
                              coboundary(group, quad),
                              coboundary(group, lin)]))
    gauge = {g: zeta(4, g[0]) for g in Z22.elements}
    cases.append((Z22, [Cochain2.trivial(Z22), coboundary(Z22, gauge), omega_bc()]))

    for group, cochains in cases:
        assert len(cochains) >= 3
        ctx = GradedVecContext(group, Cochain2.trivial(group))
        for omega in cochains:
            alg, frob = build_twisted_group_algebra(ctx, group, omega)
            assert check_algebra(alg)["ok"]
            assert check_frobenius(alg, frob)["ok"]
            assert compose(alg.mul, frob.comul).mat == Matrix.identity(alg.carrier.dim)
    assert time.monotonic() - started < 5.0


def test_criterion_3():
    started = time.monotonic()
    ctx = GradedVecContext(Z22, Cochain2.trivial(Z22))
    alg, frob = build_twisted_group_algebra(ctx, Z22, Cochain2.trivial(Z22))

    # twisting by an exact coboundary admits an even isomorphism both ways
    cob = omega_aa()
    tau = cohomologous(cob, Cochain2.trivial(Z22))
    assert tau is not None
    twisted = twist_algebra(alg, cob)
    assert check_frobenius(twisted, twist_frobenius(alg, frob, cob))["ok"]
    for src, tgt in ((twisted, alg), (alg, twisted)):
        iso = algebra_iso_even(src, tgt)
        assert iso is not None
        assert is_even(iso.mat, src.grading, tgt.grading)
        iso.mat.inverse()
        assert iso.mat @ src.mul.mat == tgt.mul.mat @ iso.mat.kron(iso.mat)
        assert iso.mat @ src.unit.mat == tgt.unit.mat

    # the non-coboundary twist admits none, in either direction
    assert cohomologous(omega_bc(), Cochain2.trivial(Z22)) is None
    hard = twist_algebra(alg, omega_bc())
    assert check_algebra(hard)["ok"]
    assert algebra_iso_even(hard, alg) is None
    assert algebra_iso_even(alg, hard) is None
    assert time.monotonic() - started < 5.0


def test_criterion_4(super_tga):
    started = time.monotonic()

    # kappa(1,1) = -1 is a bicharacter: braided promotion yields a bimodule
    alg, _ = super_tga
    kappa = super_braiding()
    assert check_bicharacter(kappa).ok
    promo = left_from_right_braided(regular_right(alg), kappa)
    assert promo["bimodule_ok"]

    # kappa(1,1) = zeta_4 is a cocycle but not a bicharacter: the check
    # fails with an explicit residual
    z4 = FinAbGroup((4,))
    beta4 = Cochain2.from_function(z4, lambda a, b: zeta(4, a[0] * b[0]))
    ctx4 = GradedVecContext(z4, beta4)
    car = ctx4.object([0, 1, 2])
    rows = [[ZERO] * 9 for _ in range(3)]
    for a in range(3):
        for b in range(3):
            if a + b <= 2:
                rows[a + b][a * 3 + b] = ONE
    from gradedalg.galg import GradedAlgebra
    talg = GradedAlgebra(
        car, Grading(Z2, [(0,), (1,), (0,)]),
        HostMorphism(tensor_obj(car, car), car, Matrix(rows, ncols=9)),
        HostMorphism(ctx4.unit_object(), car, Matrix([[ONE], [ZERO], [ZERO]], ncols=1)))
    kappa_i = Cochain2.from_function(
        Z2, lambda a, b: zeta(4) if a[0] * b[0] % 2 else ONE)
    assert not check_bicharacter(kappa_i).ok
    assert check_graded_commutative(talg, kappa_i)["ok"]

    mcar = ctx4.object([0, 2, 3, 1])
    act_rows = [[ZERO] * 12 for _ in range(4)]
    for m_i in range(4):
        act_rows[m_i][m_i * 3 + 0] = ONE
    act_rows[1][3 * 3 + 1] = ONE
    act_rows[2][1 * 3 + 1] = ONE
    act_rows[2][3 * 3 + 2] = ONE
    from gradedalg.gmod import RightModule, check_module
    mmod = RightModule(talg, mcar, Grading(Z2, [(0,), (0,), (1,), (1,)]),
                       HostMorphism(tensor_obj(mcar, car), mcar,
                                    Matrix(act_rows, ncols=12)))
    assert check_module(mmod)["ok"]
    promo = left_from_right_braided(mmod, kappa_i)
    assert not promo["bimodule_ok"]
    residual = promo["bimodule_check"]["commuting_actions"].violations
    assert residual
    assert time.monotonic() - started < 2.0


def _random_gv_object(ctx, rng):
    grades = [rng.choice(ctx.group.elements)[0] if len(ctx.group.moduli) == 1
              else rng.choice(ctx.group.elements)
              for _ in range(rng.randint(1, 2))]
    if len(ctx.group.moduli) == 1:
        return ctx.object(grades)
    return ctx.object(list(grades))


def _tensor_pair_laws(m, n_bimodule, frob):
    t = tensor_over_A(m, n_bimodule, method="idempotent", frobenius=frob)
    assert t.agreement is not None and t.agreement["dims_match"]
    assert t.checks["idempotent"].ok
    assert t.checks["balanced"].ok
    assert t.checks["proj_absorbs_p"].ok


def test_criterion_5(super_tga, plain_tga, d4):
    started = time.monotonic()
    rng = random.Random(20250814)

    # graded vector space host: untwisted p on the commutative algebra,
    # braided p^[kappa] on the supercommutative one
    plain_ctx = GradedVecContext(Z2, Cochain2.trivial(Z2))
    super_ctx = GradedVecContext(Z2, super_braiding())
    gv_runs = [
        (plain_ctx, plain_tga, Cochain2.trivial(Z2)),
        (super_ctx, super_tga, super_braiding()),
    ]
    gv_pairs = 0
    for ctx, (alg, frob), kappa in gv_runs:
        assert check_graded_commutative(alg, kappa)["ok"]
        for _ in range(10):
            x = _random_gv_object(ctx, rng)
            y = _random_gv_object(ctx, rng)
            m = induce(x, alg)
            promo = left_from_right_braided(induce(y, alg), kappa)
            assert promo["bimodule_ok"]
            _tensor_pair_laws(m, promo["bimodule"], frob)
            gv_pairs += 1
    assert gv_pairs >= 20

    # representation host: the character algebra with trivial twist is
    # commutative, the twisted one is graded-commutative for the
    # alternating bicharacter
    rctx, lines = d4["ctx"], d4["lines"]
    irreps = list(lines.values()) + [d4["irrep2"]]
    alg_t, frob_t = build_twisted_group_algebra(rctx, Z22, omega_bc(), lines)
    rep_runs = [
        (d4["algebra"], d4["frobenius"], Cochain2.trivial(Z22)),
        (alg_t, frob_t, z22_braiding()),
    ]
    rep_pairs = 0
    for alg, frob, kappa in rep_runs:
        assert check_graded_commutative(alg, kappa)["ok"]
        for _ in range(10):
            x = rng.choice(irreps)
            y = rng.choice(irreps)
            m = induce(x, alg)
            promo = left_from_right_braided(induce(y, alg), kappa)
            assert promo["bimodule_ok"]
            _tensor_pair_laws(m, promo["bimodule"], frob)
            rep_pairs += 1
    assert rep_pairs >= 20
    assert time.monotonic() - started < 30.0


def test_criterion_6(super_host, super_tga, d4):
    started = time.monotonic()

    # representation host: full stabilizer, 4-dim endomorphism algebra
    x2, alg = d4["irrep2"], d4["algebra"]
    st = sigma_cocycle(stabilizer(x2, alg))
    assert sorted(st.elements) == sorted(Z22.elements)
    rep = graded_schur_report(x2, x2, alg)
    assert rep["end_dim"] == 4 and rep["end_dim_equals_stab"]
    assert rep["components_at_most_one_dim"]
    assert rep["homogeneous_invertible"].ok
    assert rep["zero_or_translate"]

    # two gauges differ by an exact coboundary, class unchanged
    gauge = {(0, 0): ONE, (1, 0): zeta(4), (0, 1): MINUS, (1, 1): zeta(8, 3)}
    stg = sigma_cocycle(stabilizer(x2, alg), gauge)
    g_abs = Cochain1.from_function(st.group, lambda a: gauge[st.from_abstract[a]])
    shift = d1(g_abs)
    for a in st.group.elements:
        for b in st.group.elements:
            assert stg.sigma(a, b) == st.sigma(a, b) * shift(a, b)
    assert st.sigma_class == "nontrivial" and stg.sigma_class == "nontrivial"

    # trichotomy on the graded vector space host
    salg, _ = super_tga
    x0, x1 = super_host.object([0]), super_host.object([1])
    assert graded_schur_report(x0, x1, salg)["pattern"] == "k"
    carrier = super_host.object([0, 0])
    mul = HostMorphism(tensor_obj(carrier, carrier), carrier,
                       Matrix([[ONE, ZERO, ZERO, ONE], [ZERO, ONE, ONE, ZERO]],
                              ncols=4))
    unit = HostMorphism(super_host.unit_object(), carrier,
                        Matrix([[ONE], [ZERO]], ncols=1))
    from gradedalg.galg import GradedAlgebra
    doubled = GradedAlgebra(carrier, Grading(Z2, [(0,), (1,)]), mul, unit)
    assert graded_schur_report(x0, x0, doubled)["pattern"] == "k(Z/2)"
    z4 = FinAbGroup((4,))
    ctx4 = GradedVecContext(
        z4, Cochain2.from_function(z4, lambda a, b: zeta(4, a[0] * b[0])))
    car4 = ctx4.object([0, 2])
    far = GradedAlgebra(
        car4, Grading(Z2, [(0,), (1,)]),
        HostMorphism(tensor_obj(car4, car4), car4,
                     Matrix([[ONE, ZERO, ZERO, ONE], [ZERO, ONE, ONE, ZERO]],
                            ncols=4)),
        HostMorphism(ctx4.unit_object(), car4, Matrix([[ONE], [ZERO]], ncols=1)))
    assert graded_schur_report(ctx4.object([0]), ctx4.object([1]), far)["pattern"] == "0"

    # trichotomy on the representation host
    rctx, elems = d4["ctx"], d4["elems"]
    lines2 = {(0,): d4["lines"][(0, 0)], (1,): d4["lines"][(1, 0)]}
    sub, _ = build_twisted_group_algebra(rctx, Z2, Cochain2.trivial(Z2), lines2)
    assert graded_schur_report(x2, x2, sub)["pattern"] == "k(Z/2)"
    chi00 = d4["lines"][(0, 0)]
    assert graded_schur_report(chi00, chi00, sub)["pattern"] == "k"
    assert graded_schur_report(chi00, d4_character(rctx, elems, 0, 1),
                               sub)["pattern"] == "0"
    assert time.monotonic() - started < 30.0


def test_criterion_7(super_tga, z22_tga):
    started = time.monotonic()

    alg, _ = super_tga
    rep = check_twisted_interchange(alg, super_braiding())
    assert rep["ok"] and rep["law_holds"]
    assert rep["checked"] == 64 and rep["exhaustive_tuples"] == 64
    wit = rep["untwisted_witness"]
    assert wit is not None
    # the twist defect on the witness quadruple is exactly the sign
    assert wit["lhs"].mat == wit["untwisted_rhs"].mat.scale(MINUS)

    alg22, _ = z22_tga
    rep22 = check_twisted_interchange(alg22, z22_braiding())
    assert rep22["ok"] and rep22["law_holds"]
    assert rep22["checked"] == 4096 and rep22["exhaustive_tuples"] == 4096
    assert rep22["untwisted_witness"] is not None
    assert time.monotonic() - started < 60.0


def test_criterion_8(super_tga, plain_tga):
    started = time.monotonic()

    alg_c, frob_c = plain_tga
    mm = check_monoidal_monad(alg_c, frobenius=frob_c)
    assert mm["ok"] and mm["mul_monoidal"] and mm["commutative"]
    assert mm["s2t2_equals_p"] is True

    alg_s, frob_s = super_tga
    mm = check_monoidal_monad(alg_s, frobenius=frob_s)
    assert mm["ok"] and not mm["mul_monoidal"]
    assert mm["witness"] is not None
    assert time.monotonic() - started < 10.0


def test_criterion_9(super_host, super_tga, z22_host, z22_tga):
    started = time.monotonic()

    def even_endo(x, alg):
        for b in hom_basis(x, tensor_obj(x, alg.carrier)):
            comps = KleisliMorphism(x, x, alg, b).grade_components()
            if (0,) * len(alg.group.moduli) in comps:
                return comps[(0,) * len(alg.group.moduli)]
        raise AssertionError("no even endomorphism found")

    runs = [
        (super_host, super_tga, super_braiding(),
         [super_host.object([0]), super_host.object([1])]),
        (z22_host, z22_tga, z22_braiding(),
         [z22_host.object([g]) for g in Z22.elements]),
    ]
    pairs = 0
    for host, (alg, frob), beta, lines in runs:
        for x in lines:
            for y in lines:
                cmpxy = induced_tensor_comparison(x, y, alg, beta, frob)
                assert cmpxy["ok"]
                assert cmpxy["dims_kleisli"] == cmpxy["dims_graded"]
                f, g = even_endo(x, alg), even_endo(y, alg)
                big = kleisli_to_induced(kleisli_tensor(f, g))
                small = tensor_morphisms_over_A(
                    kleisli_to_induced(f), kleisli_to_induced(g),
                    cmpxy["tensor"], cmpxy["tensor"])
                assert cmpxy["psi"].mat @ big.mat == small.mat @ cmpxy["psi"].mat
                pairs += 1
    assert pairs >= 10
    assert time.monotonic() - started < 30.0
