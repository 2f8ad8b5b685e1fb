import itertools

import pytest

from gradedalg.cohomology import Cochain2
from gradedalg.gmod import module_map_report, tensor_morphisms_over_A
from gradedalg.hostcat import (
    HostError,
    HostMorphism,
    grade_components,
    hom_basis,
    identity_mor,
    tensor_obj,
)
from gradedalg.induced import InducedModule, induce
from gradedalg.kleisli import (
    KleisliMorphism,
    MonadA,
    check_frobenius_monad,
    check_monoidal_monad,
    check_twisted_interchange,
    induced_tensor_comparison,
    induced_to_kleisli,
    kleisli_compose,
    kleisli_identity,
    kleisli_tensor,
    kleisli_to_induced,
)
from gradedalg.linalg import Matrix
from gradedalg.scalars import integer

from conftest import MINUS, Z2, super_braiding, z22_braiding


def test_monad_laws(super_host, super_tga):
    alg, frob = super_tga
    mon = MonadA(alg, frob)
    laws = mon.check_laws([super_host.unit_object(), alg.carrier])
    assert laws["ok"]


def test_category_laws(super_host, super_tga):
    alg, _ = super_tga
    lines = [super_host.object([0]), super_host.object([1])]
    for x, y in itertools.product(lines, repeat=2):
        for b in hom_basis(x, tensor_obj(y, alg.carrier)):
            f = KleisliMorphism(x, y, alg, b)
            assert kleisli_compose(f, kleisli_identity(x, alg)) == f
            assert kleisli_compose(kleisli_identity(y, alg), f) == f

    count = 0
    for x, y, z, w in itertools.product(lines, repeat=4):
        for bf in hom_basis(x, tensor_obj(y, alg.carrier)):
            for bg in hom_basis(y, tensor_obj(z, alg.carrier)):
                for bh in hom_basis(z, tensor_obj(w, alg.carrier)):
                    f = KleisliMorphism(x, y, alg, bf)
                    g = KleisliMorphism(y, z, alg, bg)
                    h = KleisliMorphism(z, w, alg, bh)
                    assert kleisli_compose(kleisli_compose(h, g), f) == \
                        kleisli_compose(h, kleisli_compose(g, f))
                    # composing homogeneous maps adds grades
                    fc, gc = f.grade_components(), g.grade_components()
                    if len(fc) == 1 and len(gc) == 1:
                        (i,), (j,) = next(iter(fc)), next(iter(gc))
                        comps = kleisli_compose(g, f).grade_components()
                        assert set(comps) <= {((i + j) % 2,)}
                    count += 1
    assert count == 16


def test_tensor_of_identities(super_host, super_tga):
    alg, _ = super_tga
    L0, L1 = super_host.object([0]), super_host.object([1])
    assert kleisli_tensor(kleisli_identity(L0, alg), kleisli_identity(L1, alg)) == \
        kleisli_identity(tensor_obj(L0, L1), alg)


def test_super_interchange_exhaustive(super_tga):
    alg, _ = super_tga
    rep = check_twisted_interchange(alg, super_braiding())
    assert rep["ok"] and rep["law_holds"]
    assert rep["checked"] == 64
    assert rep["kappa_nontrivial"] and rep["kappa_is_bicharacter"]
    # without the twist the law fails, and the defect is exactly the sign
    wit = rep["untwisted_witness"]
    assert wit is not None
    assert wit["lhs"].mat == wit["untwisted_rhs"].mat.scale(MINUS)


def test_commutative_interchange_untwisted(plain_tga):
    alg, _ = plain_tga
    rep = check_twisted_interchange(alg, Cochain2.trivial(Z2))
    assert rep["ok"] and not rep["kappa_nontrivial"]
    assert rep["untwisted_witness"] is None


def test_interchange_rejects_wrong_cochain(super_tga):
    alg, _ = super_tga
    with pytest.raises(HostError):
        check_twisted_interchange(alg, Cochain2.trivial(Z2))


def test_rank2_interchange_exhaustive(z22_tga):
    alg, _ = z22_tga
    rep = check_twisted_interchange(alg, z22_braiding())
    assert rep["ok"]
    assert rep["checked"] == 4096 and rep["exhaustive_tuples"] == 4096
    assert rep["untwisted_witness"] is not None


def test_monoidal_monad_criterion(super_tga, plain_tga):
    alg_c, frob_c = plain_tga
    mm_c = check_monoidal_monad(alg_c, frobenius=frob_c)
    assert mm_c["unit_monoidal"] and mm_c["mul_monoidal"] and mm_c["commutative"]
    assert mm_c["equivalence_ok"] and mm_c["t2_natural"]
    assert mm_c["s2t2_equals_p"] is True
    assert mm_c["ok"]

    alg_s, frob_s = super_tga
    mm_s = check_monoidal_monad(alg_s, frobenius=frob_s)
    assert mm_s["unit_monoidal"] and not mm_s["mul_monoidal"]
    assert not mm_s["commutative"] and not mm_s["algebra_criterion"]
    assert mm_s["equivalence_ok"] and mm_s["witness"] is not None
    assert mm_s["s2t2_equals_p"] is None


def test_frobenius_monad(super_tga, plain_tga):
    alg_c, frob_c = plain_tga
    fm_c = check_frobenius_monad(alg_c, frob_c)
    assert fm_c["ok"] and fm_c["tau_mul"] and fm_c["tau_comul"]
    alg_s, frob_s = super_tga
    fm_s = check_frobenius_monad(alg_s, frob_s)
    assert fm_s["ok"] and not fm_s["tau_mul"]


def test_kleisli_induced_round_trip(super_host, super_tga):
    alg, _ = super_tga
    lines = [super_host.object([0]), super_host.object([1])]
    for x, y in itertools.product(lines, repeat=2):
        ind_x, ind_y = InducedModule(x, alg), InducedModule(y, alg)
        for b in hom_basis(x, tensor_obj(y, alg.carrier)):
            f = KleisliMorphism(x, y, alg, b)
            g = kleisli_to_induced(f)
            assert module_map_report(g, ind_x, ind_y).ok
            assert induced_to_kleisli(g, x, y, alg) == f
            for d, fd in f.grade_components().items():
                gd = kleisli_to_induced(fd)
                comps = grade_components(gd.mat, ind_x.grading, ind_y.grading)
                assert set(comps) <= {d}

    L0 = lines[0]
    assert kleisli_to_induced(kleisli_identity(L0, alg)) == \
        identity_mor(InducedModule(L0, alg).carrier)
    h = HostMorphism(L0, L0, Matrix([[integer(5)]], ncols=1))
    f_even = induced_to_kleisli(induce(h, alg), L0, L0, alg)
    assert kleisli_to_induced(f_even) == induce(h, alg)


def test_induced_tensor_comparison(super_host, super_tga, z22_host, z22_tga):
    alg, frob = super_tga
    beta = super_braiding()
    lines = [super_host.object([0]), super_host.object([1])]
    pairs = 0
    for x, y in itertools.product(lines, repeat=2):
        cmpxy = induced_tensor_comparison(x, y, alg, beta, frob)
        assert cmpxy["ok"]
        pairs += 1

    alg22, frob22 = z22_tga
    beta22 = z22_braiding()
    lines22 = [z22_host.object([g]) for g in z22_host.group.elements]
    for x, y in itertools.product(lines22, repeat=2):
        cmpxy = induced_tensor_comparison(x, y, alg22, beta22, frob22)
        assert cmpxy["ok"]
        pairs += 1
    assert pairs == 20


def test_even_morphism_correspondence(super_tga):
    alg, frob = super_tga
    beta = super_braiding()
    x = alg.carrier
    cmp_src = induced_tensor_comparison(x, x, alg, beta, frob)
    assert cmp_src["ok"]

    evens = []
    for b in hom_basis(x, tensor_obj(x, alg.carrier)):
        comps = KleisliMorphism(x, x, alg, b).grade_components()
        if (0,) in comps:
            evens.append(comps[(0,)])
    assert evens

    for f in evens:
        for g in evens:
            F = kleisli_to_induced(f)
            G = kleisli_to_induced(g)
            H_T = tensor_morphisms_over_A(F, G, cmp_src["tensor"], cmp_src["tensor"])
            H_K = kleisli_to_induced(kleisli_tensor(f, g))
            assert cmp_src["psi"].mat @ H_K.mat == H_T.mat @ cmp_src["psi"].mat
