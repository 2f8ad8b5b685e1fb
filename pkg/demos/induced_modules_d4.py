"""
Induced modules over the dihedral group host
============================================

Host category: representations of D4 (order 8).  The algebra A is the
group algebra of (Z/2)^2 realized on the four linear characters, graded
by (Z/2)^2.  Inducing the 2-dimensional irreducible up to an A-module
gives an endomorphism algebra of dimension 4 = |Stab|, with a cocycle
sigma whose class is a genuine invariant: it survives any change of the
identification gauge.
"""
from gradedalg import (
    Cochain1,
    Cochain2,
    FinAbGroup,
    Matrix,
    RepContext,
    build_twisted_group_algebra,
    d1,
    graded_schur_report,
    hom_A_induced,
    integer,
    sigma_cocycle,
    stabilizer,
    zeta,
)

ONE = integer(1)
MINUS = integer(-1)
ZERO = integer(0)

# D4 = <r, s | r^4 = s^2 = 1, s r s = r^-1>, elements r^k s^e
elems = [(k, e) for e in range(2) for k in range(4)]
idx = {g: i for i, g in enumerate(elems)}
table = [[idx[((k + (l if e == 0 else -l)) % 4, (e + d) % 2)]
          for (l, d) in elems] for (k, e) in elems]
ctx = RepContext(table, [f"r{k}s{e}" for (k, e) in elems])

# the four linear characters chi_{a,b}(r^k s^e) = (-1)^{ak+be}
gamma = FinAbGroup((2, 2))
lines = {
    (a, b): ctx.object([Matrix([[integer((-1) ** (a * k + b * e))]], ncols=1)
                        for (k, e) in elems])
    for (a, b) in gamma.elements
}
A, FA = build_twisted_group_algebra(ctx, gamma, Cochain2.trivial(gamma), lines)

# the 2-dimensional irreducible rho(r) = rotation, rho(s) = reflection
R = Matrix([[ZERO, MINUS], [ONE, ZERO]], ncols=2)
S = Matrix([[ONE, ZERO], [ZERO, MINUS]], ncols=2)


def rho(k, e):
    m = Matrix.identity(2)
    for _ in range(k):
        m = R @ m
    return m @ S if e else m


x2 = ctx.object([rho(k, e) for (k, e) in elems])

# every character fixes the irreducible: full stabilizer
st = sigma_cocycle(stabilizer(x2, A))
print("stabilizer:", st.elements)
print("sigma class:", st.sigma_class)

rep = graded_schur_report(x2, x2, A)
print("dim End_A(Ind x2):", rep["end_dim"],
      "=|Stab|:", rep["end_dim_equals_stab"])
print("all homogeneous components <= 1-dim:", rep["components_at_most_one_dim"])
print("nonzero homogeneous morphisms invertible:",
      rep["homogeneous_invertible"].ok)

# changing the gauge multiplies sigma by an exact coboundary; the class
# cannot change
gauge = {(0, 0): ONE, (1, 0): zeta(4), (0, 1): MINUS, (1, 1): zeta(8, 3)}
st_g = sigma_cocycle(stabilizer(x2, A), gauge)
g_abs = Cochain1.from_function(st.group, lambda a: gauge[st.from_abstract[a]])
shift = d1(g_abs)
exact = all(st_g.sigma(a, b) == st.sigma(a, b) * shift(a, b)
            for a in st.group.elements for b in st.group.elements)
print("gauge difference is d1(gauge):", exact)
print("class after regauging:", st_g.sigma_class)

# between two different characters the Hom space is a 1-dim translate
chi00, chi10 = lines[(0, 0)], lines[(1, 0)]
hom = hom_A_induced(chi00, chi10, A)
print("Hom(Ind chi00, Ind chi10) dims by grade:", hom["dims_by_grade"])

# a character and the 2-dim irreducible never interact
print("Hom(Ind chi00, Ind x2) dim:", hom_A_induced(chi00, x2, A)["dim"])
