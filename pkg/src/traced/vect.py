"""Finite-dimensional exact linear algebra instances.

FinVect is the category of finite-dimensional rational vector spaces;
SuperVect adds a Z/2 grading with the signed switching
x (x) y -> (-1)^{|x||y|} y (x) x on homogeneous vectors, with morphisms
restricted to grading-preserving (even) maps.

Both are implemented on a common chassis: an object is the tuple of degrees
of its basis vectors, in basis order, and a morphism is a sparse rational
matrix whose entries connect equal degrees only.  Tensor products flatten
indices row-major, which makes the monoidal structure strict on the nose:

    index(e_i (x) f_j) = i * dim(Y) + j          for X (x) Y
    degree(e_i (x) f_j) = deg(e_i) + deg(f_j)

Duals reuse the same index set with negated degrees, so ev and coev are the
plain index pairings 1 |-> sum_i e_i (x) e^i and e^i (x) e_j |-> delta_ij.
"""

from __future__ import annotations

from .core import Capabilities, CategoryInstance, DirectSum, Morphism, ObjectRef
from .errors import DomainMismatch, NotEndo
from .matrices import RatMatrix
from ._rat import rat


def dim(x: ObjectRef) -> int:
    return len(x.payload)


class MatrixCategory(CategoryInstance):
    """Shared machinery for the matrix-backed instances.

    Subclasses fix the degree arithmetic and the braiding/twist scalars;
    everything else (composition, tensor, sums, duals) is generic.
    """

    # degree hooks -------------------------------------------------------

    def _deg_add(self, a: int, b: int) -> int:
        return a + b

    def _deg_sub(self, a: int, b: int) -> int:
        return a - b

    def _deg_neg(self, a: int) -> int:
        return -a

    def _braid_scalar(self, a: int, b: int):
        return rat(1)

    def _twist_scalar(self, a: int):
        return rat(1)

    # object and morphism builders ---------------------------------------

    def obj(self, degrees) -> ObjectRef:
        return ObjectRef(self.instance_id, tuple(int(d) for d in degrees))

    def mor(self, x: ObjectRef, y: ObjectRef, matrix) -> Morphism:
        """Build a morphism x -> y from a RatMatrix or a list of rows."""
        self._own_obj(x)
        self._own_obj(y)
        if not isinstance(matrix, RatMatrix):
            matrix = RatMatrix.from_rows(matrix)
        if matrix.rows != dim(y) or matrix.cols != dim(x):
            raise DomainMismatch(
                f"matrix is {matrix.rows}x{matrix.cols}, expected {dim(y)}x{dim(x)}"
            )
        tdeg, sdeg = y.payload, x.payload
        for (i, j) in matrix.entries:
            if tdeg[i] != sdeg[j]:
                raise DomainMismatch(
                    f"entry ({i},{j}) connects degree {sdeg[j]} to degree {tdeg[i]}"
                )
        return Morphism(self.instance_id, x, y, matrix)

    def matrix(self, f: Morphism) -> RatMatrix:
        return f.payload

    def scalar_mor(self, value) -> Morphism:
        unit = self.unit_object()
        return self.mor(unit, unit, RatMatrix(1, 1, {(0, 0): rat(value)}))

    def scalar_value(self, f: Morphism):
        if not self.is_scalar(f):
            raise DomainMismatch("not a scalar (I -> I) morphism")
        return f.payload.entry(0, 0)

    # monoidal structure ---------------------------------------------------

    def unit_object(self) -> ObjectRef:
        return self.obj((0,))

    def tensor_obj(self, x: ObjectRef, y: ObjectRef) -> ObjectRef:
        self._own_obj(x)
        self._own_obj(y)
        return self.obj(tuple(self._deg_add(a, b) for a in x.payload for b in y.payload))

    def identity(self, x: ObjectRef) -> Morphism:
        self._own_obj(x)
        return Morphism(self.instance_id, x, x, RatMatrix.identity(dim(x)))

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        self.check_composable(g, f)
        return Morphism(self.instance_id, f.source, g.target, g.payload @ f.payload)

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        self._own_mor(f)
        self._own_mor(g)
        return Morphism(
            self.instance_id,
            self.tensor_obj(f.source, g.source),
            self.tensor_obj(f.target, g.target),
            f.payload.kron(g.payload),
        )

    def _swap_matrix(self, x: ObjectRef, y: ObjectRef, scale) -> Morphism:
        """Permutation e_i (x) f_j |-> f_j (x) e_i, entry scaled by scale(dx, dy)."""
        dx, dy = x.payload, y.payload
        nx, ny = len(dx), len(dy)
        ent = {}
        for i in range(nx):
            for j in range(ny):
                v = scale(dx[i], dy[j])
                if v:
                    ent[(j * nx + i, i * ny + j)] = v
        return Morphism(
            self.instance_id,
            self.tensor_obj(x, y),
            self.tensor_obj(y, x),
            RatMatrix(nx * ny, nx * ny, ent),
        )

    def switching(self, x: ObjectRef, y: ObjectRef) -> Morphism:
        """s_{X,Y} = (id_Y (x) theta_X) . c_{X,Y}; plain braiding when the twist is trivial."""
        self._own_obj(x)
        self._own_obj(y)
        return self._swap_matrix(x, y, lambda a, b: self._braid_scalar(a, b) * self._twist_scalar(a))

    # braided / balanced ----------------------------------------------------

    def braiding_c(self, x: ObjectRef, y: ObjectRef) -> Morphism:
        self._need("braided")
        self._own_obj(x)
        self._own_obj(y)
        return self._swap_matrix(x, y, self._braid_scalar)

    def braiding_c_inv(self, x: ObjectRef, y: ObjectRef) -> Morphism:
        self._need("braided")
        self._own_obj(x)
        self._own_obj(y)
        return self._swap_matrix(y, x, lambda b, a: 1 / self._braid_scalar(a, b))

    def twist_theta(self, x: ObjectRef) -> Morphism:
        self._need("balanced")
        self._own_obj(x)
        n = dim(x)
        ent = {(i, i): self._twist_scalar(x.payload[i]) for i in range(n)}
        return Morphism(self.instance_id, x, x, RatMatrix(n, n, ent))

    # additive capability -----------------------------------------------------

    def zero_object(self) -> ObjectRef:
        self._need("additive")
        return self.obj(())

    def direct_sum(self, x: ObjectRef, y: ObjectRef) -> DirectSum:
        self._need("additive")
        self._own_obj(x)
        self._own_obj(y)
        nx, ny = dim(x), dim(y)
        s = self.obj(x.payload + y.payload)
        inj1 = self.mor(x, s, RatMatrix(nx + ny, nx, {(i, i): 1 for i in range(nx)}))
        inj2 = self.mor(y, s, RatMatrix(nx + ny, ny, {(nx + j, j): 1 for j in range(ny)}))
        proj1 = self.mor(s, x, RatMatrix(nx, nx + ny, {(i, i): 1 for i in range(nx)}))
        proj2 = self.mor(s, y, RatMatrix(ny, nx + ny, {(j, nx + j): 1 for j in range(ny)}))
        return DirectSum(s, inj1, inj2, proj1, proj2)

    def add_mor(self, f: Morphism, g: Morphism) -> Morphism:
        self._need("additive")
        self._own_mor(f)
        self._own_mor(g)
        if f.source != g.source or f.target != g.target:
            raise DomainMismatch("can only add parallel morphisms")
        return Morphism(self.instance_id, f.source, f.target, f.payload + g.payload)

    def negate_mor(self, f: Morphism) -> Morphism:
        self._need("additive")
        self._own_mor(f)
        return Morphism(self.instance_id, f.source, f.target, -f.payload)

    def zero_mor(self, x: ObjectRef, y: ObjectRef) -> Morphism:
        self._need("additive")
        self._own_obj(x)
        self._own_obj(y)
        return Morphism(self.instance_id, x, y, RatMatrix.zero(dim(y), dim(x)))

    # duals ---------------------------------------------------------------------

    def dual_obj(self, x: ObjectRef) -> ObjectRef:
        self._own_obj(x)
        return self.obj(tuple(self._deg_neg(d) for d in x.payload))

    def dual_data(self, x: ObjectRef):
        """(dual, ev, coev) with ev: X* (x) X -> I the index pairing and
        coev: I -> X (x) X* the diagonal element sum_i e_i (x) e^i."""
        xd = self.dual_obj(x)
        n = dim(x)
        unit = self.unit_object()
        ev = self.mor(self.tensor_obj(xd, x), unit,
                      RatMatrix(1, n * n, {(0, i * n + i): 1 for i in range(n)}))
        coev = self.mor(unit, self.tensor_obj(x, xd),
                        RatMatrix(n * n, 1, {(i * n + i, 0): 1 for i in range(n)}))
        return xd, ev, coev

    # traces -----------------------------------------------------------------

    def classical_trace(self, f: Morphism):
        """Sum of diagonal entries of an endomorphism."""
        self._own_mor(f)
        if f.source != f.target:
            raise NotEndo("classical trace needs an endomorphism")
        return f.payload.trace()


def _split_cod(inst, t: Morphism, x: ObjectRef, xd: ObjectRef) -> ObjectRef:
    """Recover Y from t: I -> Y (x) X*, given X and its dual."""
    n = dim(x)
    if t.source != inst.unit_object():
        raise DomainMismatch("t must have the unit object as source")
    if n == 0 or dim(t.target) % n != 0:
        raise DomainMismatch("target of t does not factor as Y (x) X*")
    y = inst.obj(inst._deg_sub(d, xd.payload[0]) for d in t.target.payload[::n])
    if inst.tensor_obj(y, xd) != t.target:
        raise DomainMismatch("target of t does not factor as Y (x) X*")
    return y


def phi(t: Morphism, x: ObjectRef) -> Morphism:
    """Turn t: I -> Y (x) X* into the map X -> Y it represents,
    (id_Y (x) ev) . (t (x) id_X)."""
    from .core import instance_of

    inst = instance_of(t)
    xd, ev, _ = inst.dual_data(x)
    y = _split_cod(inst, t, x, xd)
    lhs = inst.tensor(inst.identity(y), ev)
    rhs = inst.tensor(t, inst.identity(x))
    return inst.compose(lhs, rhs)


def phi_inv(f: Morphism) -> Morphism:
    """Inverse of phi on a dualizable source: f |-> (f (x) id_X*) . coev."""
    from .core import instance_of

    inst = instance_of(f)
    xd, _, coev = inst.dual_data(f.source)
    return inst.compose(inst.tensor(f, inst.identity(xd)), coev)


def alpha(t: Morphism, x: ObjectRef):
    """Package t: I -> Y (x) X* as the thick triple (X*, t, ev) over dom X."""
    from .core import instance_of
    from .thickened import ThickTriple

    inst = instance_of(t)
    xd, ev, _ = inst.dual_data(x)
    y = _split_cod(inst, t, x, xd)
    return ThickTriple(dom=x, cod=y, z=xd, t=t, b=ev)


class FinVect(MatrixCategory):
    """Finite-dimensional rational vector spaces with the plain swap."""

    instance_id = "finvect"
    capabilities = Capabilities(
        additive=True, braided=True, balanced=True, symmetric=True,
        has_duals=lambda _x: True,
    )

    def _deg_add(self, a, b):
        return 0

    def _deg_sub(self, a, b):
        return 0

    def _deg_neg(self, a):
        return 0

    def space(self, n: int) -> ObjectRef:
        return self.obj((0,) * n)


class SuperVect(MatrixCategory):
    """Z/2-graded vector spaces with the sign-twisted switching.

    An object records the parity of each basis vector; morphisms are even.
    The switching on homogeneous vectors is x (x) y |-> (-1)^{|x||y|} y (x) x,
    making the instance symmetric; the categorical trace of the canonical
    thickener of f comes out as the super trace classtr(eps . f).
    """

    instance_id = "supervect"
    capabilities = Capabilities(
        additive=True, braided=True, balanced=True, symmetric=True,
        has_duals=lambda _x: True,
    )

    def _deg_add(self, a, b):
        return (a + b) % 2

    def _deg_sub(self, a, b):
        return (a - b) % 2

    def _deg_neg(self, a):
        return a % 2

    def _braid_scalar(self, a, b):
        return rat(-1) if (a and b) else rat(1)

    def space(self, even: int, odd: int) -> ObjectRef:
        return self.obj((0,) * even + (1,) * odd)

    def even_dim(self, x: ObjectRef) -> int:
        return sum(1 for d in x.payload if d == 0)

    def odd_dim(self, x: ObjectRef) -> int:
        return sum(1 for d in x.payload if d == 1)

    def grading_involution(self, x: ObjectRef) -> Morphism:
        """eps_X: +1 on even, -1 on odd basis vectors."""
        n = dim(x)
        ent = {(i, i): (-1 if x.payload[i] else 1) for i in range(n)}
        return Morphism(self.instance_id, x, x, RatMatrix(n, n, ent))

    def super_trace(self, f: Morphism):
        """classtr(eps . f)."""
        self._own_mor(f)
        if f.source != f.target:
            raise NotEndo("super trace needs an endomorphism")
        return self.classical_trace(self.compose(self.grading_involution(f.source), f))
