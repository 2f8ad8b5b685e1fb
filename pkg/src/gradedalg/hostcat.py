"""Concrete k-linear braided host categories.

Two kinds of host are supported, behind one object/morphism interface:

* ``GradedVecContext``: finite-dimensional vector spaces graded by a finite
  abelian group, morphisms the grade-preserving linear maps, braiding
  c(v (x) w) = beta(|v|,|w|) (w (x) v) for a bicharacter beta.

* ``RepContext``: finite-dimensional representations of a finite group
  given by its full multiplication table, morphisms the intertwiners,
  braiding the plain swap.

Objects carry an explicit ordered basis; tensor products use plain
Kronecker (left-major) basis order, which makes the monoidal structure
strictly associative and strictly unital.  Graded objects record one
grade per basis vector, so tensor factors interleave without any
re-sorting (re-sorting would break strict associativity).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .cohomology import Cochain2, FinAbGroup, check_bicharacter
from .linalg import Matrix
from .scalars import ONE, ZERO, CyclotomicScalar, integer, parse_scalar, rational, scalar_to_json

__all__ = [
    "HostError",
    "GradedVecContext",
    "RepContext",
    "HostObject",
    "GradedVecObject",
    "RepObject",
    "HostMorphism",
    "Grading",
    "tensor_obj",
    "tensor_mor",
    "identity_mor",
    "compose",
    "braiding",
    "braiding_inverse",
    "hom_basis",
    "grade_components",
    "is_even",
    "image_and_cokernel",
    "sub_object",
    "direct_sum",
    "host_from_json",
    "object_from_json",
    "morphism_from_json",
]


class HostError(ValueError):
    pass


# ---------------------------------------------------------------------------
# contexts


class GradedVecContext:
    """Vect_Gamma with braiding given by a bicharacter."""

    kind = "graded_vec"

    def __init__(self, group: FinAbGroup, braiding_char: Cochain2):
        if braiding_char.group != group:
            raise HostError("braiding bicharacter lives on the wrong group")
        rep = check_bicharacter(braiding_char)
        if not rep.ok:
            raise HostError(f"braiding table is not a bicharacter: {rep.violations[:3]}")
        self.group = group
        self.beta = braiding_char

    def object(self, grades) -> "GradedVecObject":
        return GradedVecObject(self, tuple(self.group.element(g) for g in grades))

    def object_from_dims(self, dims: dict) -> "GradedVecObject":
        """Basis sorted grade-major in group enumeration order."""
        grades = []
        for g in self.group.elements:
            grades.extend([g] * dims.get(g, 0))
        return self.object(grades)

    def unit_object(self) -> "GradedVecObject":
        return self.object([self.group.zero()])

    def __eq__(self, other):
        return (
            isinstance(other, GradedVecContext)
            and self.group == other.group
            and self.beta == other.beta
        )

    def __hash__(self):
        return hash((self.kind, self.group, self.beta))

    def __repr__(self):
        return f"GradedVecContext({self.group!r})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "group": self.group.to_json(),
            "braiding": self.beta.to_json(),
        }


class RepContext:
    """Representations of a finite group presented by its full table."""

    kind = "rep_cat"

    def __init__(self, mul_table, names=None):
        table = tuple(tuple(int(x) for x in row) for row in mul_table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise HostError("multiplication table must be square")
        if any(x < 0 or x >= n for row in table for x in row):
            raise HostError("multiplication table entries out of range")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise HostError(f"multiplication table not associative at {(a, b, c)}")
        ident = None
        for e in range(n):
            if all(table[e][a] == a and table[a][e] == a for a in range(n)):
                ident = e
                break
        if ident is None:
            raise HostError("multiplication table has no identity")
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == ident and table[b][a] == ident:
                    inv[a] = b
        if any(v is None for v in inv):
            raise HostError("multiplication table has non-invertible elements")
        self.table = table
        self.size = n
        self.identity = ident
        self.inverse = tuple(inv)
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))

    def object(self, matrices, check: bool = True) -> "RepObject":
        return RepObject(self, tuple(matrices), check=check)

    def unit_object(self) -> "RepObject":
        one = Matrix.identity(1)
        return RepObject(self, tuple(one for _ in range(self.size)), check=False)

    def __eq__(self, other):
        return isinstance(other, RepContext) and self.table == other.table

    def __hash__(self):
        return hash((self.kind, self.table))

    def __repr__(self):
        return f"RepContext(order={self.size})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "mul_table": [list(r) for r in self.table],
            "names": list(self.names),
        }


# ---------------------------------------------------------------------------
# objects


class GradedVecObject:
    def __init__(self, context: GradedVecContext, grades: tuple):
        self.context = context
        self.grades = grades
        self.dim = len(grades)

    def dims_by_grade(self) -> dict:
        out: dict = {}
        for g in self.grades:
            out[g] = out.get(g, 0) + 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, GradedVecObject)
            and self.context == other.context
            and self.grades == other.grades
        )

    def __hash__(self):
        return hash((self.context, self.grades))

    def __repr__(self):
        return f"GradedVecObject(grades={list(self.grades)})"

    def to_json(self) -> dict:
        return {"grades": [list(g) for g in self.grades]}


class RepObject:
    def __init__(self, context: RepContext, matrices: tuple, check: bool = True):
        if len(matrices) != context.size:
            raise HostError("need one matrix per group element")
        dim = matrices[0].nrows
        if any(m.shape != (dim, dim) for m in matrices):
            raise HostError("representation matrices must be square of equal size")
        if check:
            if matrices[context.identity] != Matrix.identity(dim):
                raise HostError("identity element must act as the identity matrix")
            for a in range(context.size):
                for b in range(context.size):
                    if matrices[a] @ matrices[b] != matrices[context.table[a][b]]:
                        raise HostError(f"representation property fails at {(a, b)}")
        self.context = context
        self.matrices = matrices
        self.dim = dim

    def __eq__(self, other):
        return (
            isinstance(other, RepObject)
            and self.context == other.context
            and self.matrices == other.matrices
        )

    def __hash__(self):
        return hash((self.context, self.matrices))

    def __repr__(self):
        return f"RepObject(dim={self.dim})"

    def to_json(self) -> dict:
        return {
            "matrices": [
                [[scalar_to_json(m[i, j]) for j in range(m.ncols)] for i in range(m.nrows)]
                for m in self.matrices
            ]
        }


HostObject = GradedVecObject | RepObject


# ---------------------------------------------------------------------------
# morphisms


class HostMorphism:
    """A morphism of the host category; mat maps source coords to target coords."""

    def __init__(self, src: HostObject, tgt: HostObject, mat: Matrix, check: bool = False):
        if src.context != tgt.context:
            raise HostError("source and target live in different hosts")
        if mat.shape != (tgt.dim, src.dim):
            raise HostError(f"matrix shape {mat.shape} != ({tgt.dim}, {src.dim})")
        self.src = src
        self.tgt = tgt
        self.mat = mat
        self.context = src.context
        if check:
            self.assert_valid()

    def assert_valid(self) -> None:
        if isinstance(self.src, GradedVecObject):
            for i in range(self.tgt.dim):
                for j in range(self.src.dim):
                    if not self.mat[i, j].is_zero() and self.tgt.grades[i] != self.src.grades[j]:
                        raise HostError(
                            f"entry ({i},{j}) crosses grades "
                            f"{self.tgt.grades[i]} != {self.src.grades[j]}"
                        )
        else:
            for g in range(self.context.size):
                if self.mat @ self.src.matrices[g] != self.tgt.matrices[g] @ self.mat:
                    raise HostError(f"matrix does not intertwine element {g}")

    def is_valid(self) -> bool:
        try:
            self.assert_valid()
        except HostError:
            return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, HostMorphism)
            and self.src == other.src
            and self.tgt == other.tgt
            and self.mat == other.mat
        )

    def __hash__(self):
        return hash((self.src, self.tgt, self.mat))

    def __repr__(self):
        return f"HostMorphism({self.src.dim} -> {self.tgt.dim})"

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def __add__(self, other: "HostMorphism") -> "HostMorphism":
        if self.src != other.src or self.tgt != other.tgt:
            raise HostError("can only add parallel morphisms")
        return HostMorphism(self.src, self.tgt, self.mat + other.mat)

    def __sub__(self, other: "HostMorphism") -> "HostMorphism":
        if self.src != other.src or self.tgt != other.tgt:
            raise HostError("can only subtract parallel morphisms")
        return HostMorphism(self.src, self.tgt, self.mat - other.mat)

    def scale(self, c) -> "HostMorphism":
        return HostMorphism(self.src, self.tgt, self.mat.scale(c))

    def to_json(self) -> dict:
        return {
            "src": self.src.to_json(),
            "tgt": self.tgt.to_json(),
            "matrix": [
                [scalar_to_json(self.mat[i, j]) for j in range(self.mat.ncols)]
                for i in range(self.mat.nrows)
            ],
        }


# ---------------------------------------------------------------------------
# monoidal structure


def tensor_obj(a: HostObject, b: HostObject) -> HostObject:
    if a.context != b.context:
        raise HostError("objects live in different hosts")
    if isinstance(a, GradedVecObject):
        grades = tuple(
            a.context.group.add(ga, gb) for ga in a.grades for gb in b.grades
        )
        return GradedVecObject(a.context, grades)
    mats = tuple(ma.kron(mb) for ma, mb in zip(a.matrices, b.matrices))
    return RepObject(a.context, mats, check=False)


def tensor_mor(f: HostMorphism, g: HostMorphism) -> HostMorphism:
    return HostMorphism(
        tensor_obj(f.src, g.src), tensor_obj(f.tgt, g.tgt), f.mat.kron(g.mat)
    )


def identity_mor(x: HostObject) -> HostMorphism:
    return HostMorphism(x, x, Matrix.identity(x.dim))


def compose(f: HostMorphism, g: HostMorphism) -> HostMorphism:
    """f after g."""
    if g.tgt != f.src:
        raise HostError("composition shape mismatch")
    return HostMorphism(g.src, f.tgt, f.mat @ g.mat)


def compose_many(*fs: HostMorphism) -> HostMorphism:
    return reduce(compose, fs)


def braiding(x: HostObject, y: HostObject) -> HostMorphism:
    """c_{x,y}: x (x) y -> y (x) x."""
    if x.context != y.context:
        raise HostError("objects live in different hosts")
    src = tensor_obj(x, y)
    tgt = tensor_obj(y, x)
    rows = [[ZERO] * src.dim for _ in range(tgt.dim)]
    if isinstance(x, GradedVecObject):
        beta = x.context.beta
        for u in range(x.dim):
            for v in range(y.dim):
                rows[v * x.dim + u][u * y.dim + v] = beta(x.grades[u], y.grades[v])
    else:
        for u in range(x.dim):
            for v in range(y.dim):
                rows[v * x.dim + u][u * y.dim + v] = ONE
    return HostMorphism(src, tgt, Matrix(rows, ncols=src.dim))


def braiding_inverse(x: HostObject, y: HostObject) -> HostMorphism:
    """The inverse of c_{x,y}, a morphism y (x) x -> x (x) y."""
    src = tensor_obj(y, x)
    tgt = tensor_obj(x, y)
    rows = [[ZERO] * src.dim for _ in range(tgt.dim)]
    if isinstance(x, GradedVecObject):
        beta = x.context.beta
        for u in range(x.dim):
            for v in range(y.dim):
                rows[u * y.dim + v][v * x.dim + u] = beta(x.grades[u], y.grades[v]).inverse()
    else:
        for u in range(x.dim):
            for v in range(y.dim):
                rows[u * y.dim + v][v * x.dim + u] = ONE
    return HostMorphism(src, tgt, Matrix(rows, ncols=src.dim))


# ---------------------------------------------------------------------------
# hom spaces


def hom_basis(x: HostObject, y: HostObject) -> list[HostMorphism]:
    """A deterministic basis of Hom(x, y)."""
    if x.context != y.context:
        raise HostError("objects live in different hosts")
    if isinstance(x, GradedVecObject):
        out = []
        for r in range(y.dim):
            for c in range(x.dim):
                if y.grades[r] == x.grades[c]:
                    mat = Matrix.from_function(
                        y.dim, x.dim, lambda i, j, r=r, c=c: ONE if (i, j) == (r, c) else ZERO
                    )
                    out.append(HostMorphism(x, y, mat))
        return out
    # Reynolds projector onto intertwiners, then exact row reduction
    ctx = x.context
    n = ctx.size
    avg = rational(1, n)
    vecs = []
    for r in range(y.dim):
        for c in range(x.dim):
            acc = Matrix.zeros(y.dim, x.dim)
            for g in range(n):
                wg = y.matrices[g]
                vg_inv = x.matrices[ctx.inverse[g]]
                term = Matrix.from_function(
                    y.dim,
                    x.dim,
                    lambda i, j, wg=wg, vg_inv=vg_inv, r=r, c=c: wg[i, r] * vg_inv[c, j],
                )
                acc = acc + term
            acc = acc.scale(avg)
            if not acc.is_zero():
                vecs.append([acc[i, j] for i in range(y.dim) for j in range(x.dim)])
    if not vecs:
        return []
    red, pivots, _ = Matrix(vecs, ncols=y.dim * x.dim).rref()
    out = []
    for k in range(len(pivots)):
        mat = Matrix(
            [[red[k, i * x.dim + j] for j in range(x.dim)] for i in range(y.dim)],
            ncols=x.dim,
        )
        out.append(HostMorphism(x, y, mat))
    return out


def hom_dim_by_characters(x: RepObject, y: RepObject) -> CyclotomicScalar:
    """Independent count of dim Hom(x,y) via characters: |G|^-1 sum chi_y(g) chi_x(g^-1)."""
    ctx = x.context
    total = ZERO
    for g in range(ctx.size):
        chi_y = sum((y.matrices[g][i, i] for i in range(y.dim)), ZERO)
        chi_x_inv = sum((x.matrices[ctx.inverse[g]][i, i] for i in range(x.dim)), ZERO)
        total = total + chi_y * chi_x_inv
    return total * rational(1, ctx.size)


# ---------------------------------------------------------------------------
# gradings as separate data (module and algebra gradings)


class Grading:
    """Assignment of a grade in a finite abelian group to each basis vector."""

    def __init__(self, group: FinAbGroup, grades):
        self.group = group
        self.grades = tuple(group.element(g) for g in grades)
        self.dim = len(self.grades)

    def indices(self, g) -> list[int]:
        g = self.group.element(g)
        return [k for k, gr in enumerate(self.grades) if gr == g]

    def dims_by_grade(self) -> dict:
        out: dict = {}
        for g in self.grades:
            out[g] = out.get(g, 0) + 1
        return out

    def tensor(self, other: "Grading") -> "Grading":
        if self.group != other.group:
            raise HostError("grading group mismatch")
        return Grading(
            self.group,
            [self.group.add(a, b) for a in self.grades for b in other.grades],
        )

    def __eq__(self, other):
        return (
            isinstance(other, Grading)
            and self.group == other.group
            and self.grades == other.grades
        )

    def __hash__(self):
        return hash((self.group, self.grades))

    def __repr__(self):
        return f"Grading({list(self.grades)})"

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "grades": [list(g) for g in self.grades]}

    @staticmethod
    def from_json(obj) -> "Grading":
        group = FinAbGroup.from_json(obj["group"])
        return Grading(group, [tuple(g) for g in obj["grades"]])


def grade_components(mat: Matrix, src: Grading, tgt: Grading) -> dict:
    """Split a matrix into homogeneous components by tgt-grade minus src-grade."""
    if mat.shape != (tgt.dim, src.dim):
        raise HostError("grading dimensions do not match the matrix")
    group = src.group
    comps: dict = {}
    for i in range(tgt.dim):
        for j in range(src.dim):
            if not mat[i, j].is_zero():
                d = group.add(tgt.grades[i], group.neg(src.grades[j]))
                comps.setdefault(d, [[ZERO] * src.dim for _ in range(tgt.dim)])
                comps[d][i][j] = mat[i, j]
    return {
        d: Matrix(rows, ncols=src.dim) for d, rows in sorted(comps.items(), key=lambda kv: kv[0])
    }


def is_even(mat: Matrix, src: Grading, tgt: Grading) -> bool:
    comps = grade_components(mat, src, tgt)
    return set(comps) <= {src.group.zero()}


# ---------------------------------------------------------------------------
# images, cokernels, subobjects, sums


@dataclass
class ImageCokernel:
    image: HostObject
    embed: HostMorphism            # image -> tgt, mono
    factor: HostMorphism           # src -> image, epi, embed o factor = f
    cokernel: HostObject
    proj: HostMorphism             # tgt -> cokernel, proj o f = 0
    section: HostMorphism          # cokernel -> tgt, proj o section = id


def image_and_cokernel(f: HostMorphism) -> ImageCokernel:
    """Exact epi-mono factorization and cokernel with section.

    In the graded host image basis vectors inherit the grades of the pivot
    columns and the cokernel keeps standard basis vectors, so both results
    are again graded objects.  In the representation host the image and
    cokernel carry the induced representations.
    """
    mat = f.mat
    e_mat = mat.column_space_basis()
    _, src_pivots, _ = mat.rref()
    factor_mat = e_mat.solve_right(mat)
    assert factor_mat is not None
    q_mat, s_mat, kept = mat.cokernel()

    if isinstance(f.src, GradedVecObject):
        img_grades = [f.src.grades[c] for c in src_pivots]
        img_obj = GradedVecObject(f.context, tuple(img_grades))
        cok_grades = [f.tgt.grades[i] for i in kept]
        cok_obj = GradedVecObject(f.context, tuple(cok_grades))
    else:
        li = _left_inverse(e_mat)
        img_mats = tuple(li @ w @ e_mat for w in f.tgt.matrices)
        img_obj = RepObject(f.context, img_mats, check=False)
        cok_mats = tuple(q_mat @ w @ s_mat for w in f.tgt.matrices)
        cok_obj = RepObject(f.context, cok_mats, check=False)

    return ImageCokernel(
        image=img_obj,
        embed=HostMorphism(img_obj, f.tgt, e_mat),
        factor=HostMorphism(f.src, img_obj, factor_mat),
        cokernel=cok_obj,
        proj=HostMorphism(f.tgt, cok_obj, q_mat),
        section=HostMorphism(cok_obj, f.tgt, s_mat),
    )


def _left_inverse(e: Matrix) -> Matrix:
    """A left inverse of a full-column-rank matrix, via row reduction."""
    _, pivots, tr = e.rref()
    if len(pivots) != e.ncols:
        raise HostError("matrix does not have full column rank")
    return Matrix([tr.rows[k] for k in range(e.ncols)], ncols=e.nrows)


def sub_object(x: HostObject, indices) -> tuple[HostObject, HostMorphism, HostMorphism]:
    """The subobject spanned by the listed basis indices, with embed/retract.

    For the representation host the index set must be invariant; this is
    verified exactly.
    """
    indices = list(indices)
    if isinstance(x, GradedVecObject):
        sub = GradedVecObject(x.context, tuple(x.grades[i] for i in indices))
    else:
        others = [i for i in range(x.dim) if i not in indices]
        for g, w in enumerate(x.matrices):
            for i in indices:
                for j in others:
                    if not w[j, i].is_zero() or not w[i, j].is_zero():
                        raise HostError(f"basis indices are not invariant under element {g}")
        mats = tuple(w.submatrix(indices, indices) for w in x.matrices)
        sub = RepObject(x.context, mats, check=False)
    embed = Matrix.from_columns(
        [[ONE if r == i else ZERO for r in range(x.dim)] for i in indices], x.dim
    )
    retract = embed.T
    return sub, HostMorphism(sub, x, embed), HostMorphism(x, sub, retract)


def direct_sum(objs: list[HostObject]):
    """Direct sum with injection and projection morphisms."""
    if not objs:
        raise HostError("empty direct sum needs an explicit context")
    ctx = objs[0].context
    if isinstance(objs[0], GradedVecObject):
        grades = tuple(g for o in objs for g in o.grades)
        total = GradedVecObject(ctx, grades)
    else:
        dims = [o.dim for o in objs]
        n = sum(dims)
        mats = []
        for g in range(ctx.size):
            rows = [[ZERO] * n for _ in range(n)]
            off = 0
            for o in objs:
                m = o.matrices[g]
                for i in range(o.dim):
                    for j in range(o.dim):
                        rows[off + i][off + j] = m[i, j]
                off += o.dim
            mats.append(Matrix(rows, ncols=n))
        total = RepObject(ctx, tuple(mats), check=False)
    injections, projections = [], []
    off = 0
    for o in objs:
        inj = Matrix.from_function(
            total.dim, o.dim, lambda i, j, off=off: ONE if i == off + j else ZERO
        )
        injections.append(HostMorphism(o, total, inj))
        projections.append(HostMorphism(total, o, inj.T))
        off += o.dim
    return total, injections, projections


# ---------------------------------------------------------------------------
# JSON


def host_from_json(obj) -> GradedVecContext | RepContext:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise HostError(f"bad host object {obj!r}")
    if obj["kind"] == "graded_vec":
        group = FinAbGroup.from_json(obj["group"])
        beta = Cochain2.from_json(obj["braiding"])
        return GradedVecContext(group, beta)
    if obj["kind"] == "rep_cat":
        return RepContext(obj["mul_table"], obj.get("names"))
    raise HostError(f"unknown host kind {obj['kind']!r}")


def object_from_json(ctx, obj) -> HostObject:
    if isinstance(ctx, GradedVecContext):
        return ctx.object([tuple(g) for g in obj["grades"]])
    mats = [Matrix([[parse_scalar(x) for x in row] for row in m]) for m in obj["matrices"]]
    return ctx.object(mats, check=True)


def morphism_from_json(ctx, obj) -> HostMorphism:
    src = object_from_json(ctx, obj["src"])
    tgt = object_from_json(ctx, obj["tgt"])
    mat = Matrix([[parse_scalar(x) for x in row] for row in obj["matrix"]], ncols=src.dim)
    return HostMorphism(src, tgt, mat, check=True)
