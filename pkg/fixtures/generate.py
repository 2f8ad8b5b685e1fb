"""Regenerate every workspace file in this directory.

Run as `python fixtures/generate.py`. Output is deterministic, so the
script doubles as the record of where each fixture comes from.
"""
import json
import pathlib

from gradedalg.cohomology import Cochain2, Cochain3, FinAbGroup
from gradedalg.galg import GradedAlgebra, build_twisted_group_algebra
from gradedalg.gmod import RightModule, regular_right
from gradedalg.hostcat import (
    GradedVecContext,
    Grading,
    HostMorphism,
    RepContext,
    tensor_obj,
)
from gradedalg.linalg import Matrix
from gradedalg.scalars import ONE, ZERO, integer, zeta

HERE = pathlib.Path(__file__).resolve().parent
MINUS = integer(-1)


def render(node, depth=0):
    """Like json.dumps(indent=2) but keeps scalar-only lists on one line."""
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(node, dict):
        if not node:
            return "{}"
        items = (f'{inner}{json.dumps(k)}: {render(v, depth + 1)}'
                 for k, v in sorted(node.items()))
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(node, list):
        if all(not isinstance(v, (dict, list)) for v in node):
            return json.dumps(node)
        items = (inner + render(v, depth + 1) for v in node)
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(node)


def dump(name, data):
    path = HERE / name
    path.write_text(render(data) + "\n", encoding="utf-8")
    print(path.name, path.stat().st_size, "bytes")


z2 = FinAbGroup((2,))
z22 = FinAbGroup((2, 2))

# ---- Z/2 super-braided twisted group algebra ----
beta = Cochain2.from_function(z2, lambda a, b: MINUS if a[0] * b[0] % 2 else ONE)
ctx = GradedVecContext(z2, beta)
A, FA = build_twisted_group_algebra(ctx, z2, Cochain2.trivial(z2))
dump("z2_tga.json", {
    "version": "1",
    "host": ctx.to_json(),
    "cochains": {
        "kappa": beta.to_json(),
        "trivial": Cochain2.trivial(z2).to_json(),
    },
    "algebras": {"A": A.to_json()},
    "frobenius": {"FA": FA.to_json()},
    "modules": {"regular": regular_right(A).to_json(algebra_ref="A")},
    "objects": {"L0": ctx.object([0]).to_json(), "L1": ctx.object([1]).to_json()},
})

# ---- Z/2 trivially braided group algebra (commutative) ----
ctxp = GradedVecContext(z2, Cochain2.trivial(z2))
C, FC = build_twisted_group_algebra(ctxp, z2, Cochain2.trivial(z2))
dump("z2_plain.json", {
    "version": "1",
    "host": ctxp.to_json(),
    "cochains": {"trivial": Cochain2.trivial(z2).to_json()},
    "algebras": {"A": C.to_json()},
    "frobenius": {"FA": FC.to_json()},
    "modules": {"regular": regular_right(C).to_json(algebra_ref="A")},
    "objects": {"L0": ctxp.object([0]).to_json(), "L1": ctxp.object([1]).to_json()},
})

# ---- (Z/2)^2 fixture ----
kappa22 = Cochain2.from_function(
    z22, lambda s, t: MINUS if (s[0] * t[1] + s[1] * t[0]) % 2 else ONE)
omega_bc = Cochain2.from_function(
    z22, lambda s, t: MINUS if (s[1] * t[0]) % 2 else ONE)
omega_ad = Cochain2.from_function(
    z22, lambda s, t: MINUS if (s[0] * t[1]) % 2 else ONE)
# coboundary of tau(a,b) = i^a: lands in the trivial class
omega_aa = Cochain2.from_function(
    z22, lambda s, t: MINUS if (s[0] * t[0]) % 2 else ONE)
ctx22 = GradedVecContext(z22, kappa22)
A22, FA22 = build_twisted_group_algebra(ctx22, z22, Cochain2.trivial(z22))
A22bc, FA22bc = build_twisted_group_algebra(ctx22, z22, omega_bc)
dump("z2z2.json", {
    "version": "1",
    "host": ctx22.to_json(),
    "cochains": {
        "kappa": kappa22.to_json(),
        "omega_bc": omega_bc.to_json(),
        "omega_ad": omega_ad.to_json(),
        "omega_aa": omega_aa.to_json(),
        "trivial": Cochain2.trivial(z22).to_json(),
    },
    "algebras": {"A": A22.to_json(), "A_bc": A22bc.to_json()},
    "frobenius": {"FA": FA22.to_json(), "FA_bc": FA22bc.to_json()},
    "modules": {"regular": regular_right(A22).to_json(algebra_ref="A")},
    "objects": {
        f"L{a}{b}": ctx22.object([(a, b)]).to_json()
        for (a, b) in z22.elements
    },
})

# ---- D4 representation fixture ----
elems = [(k, e) for e in range(2) for k in range(4)]


def d4_mul(a, b):
    (k, e), (l, d) = a, b
    return ((k + (l if e == 0 else -l)) % 4, (e + d) % 2)


idx = {g: i for i, g in enumerate(elems)}
table = [[idx[d4_mul(a, b)] for b in elems] for a in elems]
rctx = RepContext(table, [f"r{k}s{e}" for (k, e) in elems])


def chi_obj(a, b):
    return rctx.object(
        [Matrix([[integer((-1) ** (a * k + b * e))]], ncols=1) for (k, e) in elems])


lines = {(a, b): chi_obj(a, b) for (a, b) in z22.elements}
AD4, FAD4 = build_twisted_group_algebra(rctx, z22, Cochain2.trivial(z22), lines)
AD4t, FAD4t = build_twisted_group_algebra(rctx, z22, omega_bc, lines)

R = Matrix([[ZERO, MINUS], [ONE, ZERO]], ncols=2)
S = Matrix([[ONE, ZERO], [ZERO, MINUS]], ncols=2)


def rho(k, e):
    m = Matrix.identity(2)
    for _ in range(k):
        m = R @ m
    if e:
        m = m @ S
    return m


irrep2 = rctx.object([rho(k, e) for (k, e) in elems])

dump("d4.json", {
    "version": "1",
    "host": rctx.to_json(),
    "cochains": {
        "omega_bc": omega_bc.to_json(),
        "trivial": Cochain2.trivial(z22).to_json(),
    },
    "algebras": {"A": AD4.to_json(), "A_twisted": AD4t.to_json()},
    "frobenius": {"FA": FAD4.to_json(), "FA_twisted": FAD4t.to_json()},
    "modules": {"regular": regular_right(AD4).to_json(algebra_ref="A")},
    "objects": {
        "irrep2": irrep2.to_json(),
        **{f"chi{a}{b}": lines[(a, b)].to_json() for (a, b) in z22.elements},
    },
})

# ---- obstruction fixtures ----
for sign, name in ((MINUS, "z2_psi_minus.json"), (ONE, "z2_psi_plus.json")):
    psi = Cochain3.from_function(
        z2, lambda a, b, c: sign if a[0] * b[0] * c[0] % 2 else ONE)
    dump(name, {
        "version": "1",
        "host": GradedVecContext(z2, Cochain2.trivial(z2)).to_json(),
        "cochains": {"psi": psi.to_json()},
    })

# ---- k[t]/(t^3) fixture in GradedVec(Z/4) ----
z4 = FinAbGroup((4,))
beta4 = Cochain2.from_function(z4, lambda a, b: zeta(4, a[0] * b[0]))
ctx4 = GradedVecContext(z4, beta4)
car = ctx4.object([0, 1, 2])           # basis 1, t, t^2
grading = Grading(z2, [(0,), (1,), (0,)])
mul_rows = [[ZERO] * 9 for _ in range(3)]
# basis products: t^a * t^b = t^{a+b} when a+b <= 2, else 0
for a in range(3):
    for b in range(3):
        if a + b <= 2:
            mul_rows[a + b][a * 3 + b] = ONE
mul = HostMorphism(tensor_obj(car, car), car, Matrix(mul_rows, ncols=9))
unit = HostMorphism(ctx4.unit_object(), car,
                    Matrix([[ONE], [ZERO], [ZERO]], ncols=1))
Att = GradedAlgebra(car, grading, mul, unit)

kappa_i = Cochain2.from_function(
    z2, lambda a, b: zeta(4, 1) if a[0] * b[0] % 2 else ONE)

mcar = ctx4.object([0, 2, 3, 1])       # a1, a2, b1, b2
mgrading = Grading(z2, [(0,), (0,), (1,), (1,)])
act_rows = [[ZERO] * 12 for _ in range(4)]
# action on the algebra basis (1, t, t^2): m*1 = m, chain b2 -t-> a2 -t-> b1
for m_i in range(4):
    act_rows[m_i][m_i * 3 + 0] = ONE
act_rows[1][3 * 3 + 1] = ONE           # b2 * t   = a2
act_rows[2][1 * 3 + 1] = ONE           # a2 * t   = b1
act_rows[2][3 * 3 + 2] = ONE           # b2 * t^2 = b1
action = HostMorphism(tensor_obj(mcar, car), mcar, Matrix(act_rows, ncols=12))
mmod = RightModule(Att, mcar, mgrading, action)

dump("tcubed.json", {
    "version": "1",
    "host": ctx4.to_json(),
    "cochains": {"kappa_i": kappa_i.to_json()},
    "algebras": {"A": Att.to_json()},
    "modules": {"m": mmod.to_json(algebra_ref="A")},
})
print("fixtures done")
