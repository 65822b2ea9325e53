"""Z-graded rational vector spaces with a q-scalar braiding and twist.

For a fixed nonzero rational q (default 2, roots of unity excluded by
staying inside Q), homogeneous components braid by a scalar and twist by a
square:

    c_{X,Y}:  x_m (x) y_n  |->  q^{mn} * (y_n (x) x_m)
    theta_X:  x_m          |->  q^{m^2} * x_m
    s_{X,Y} = (id_Y (x) theta_X) . c_{X,Y}   (scalar q^{mn + m^2} on (m, n))

With q^2 != 1 the braiding is genuinely non-symmetric (c_{Y,X} . c_{X,Y}
scales degree (1,1) by q^2), while the twist still makes the switching
behave like the plain swap on every degree-0 vector of X (x) Z, because
q^{m(-m) + m^2} = 1.  Morphisms are degree-preserving; duals negate degrees.

The instance also declares the additive capability (degreewise direct sums),
so the full additivity and multiplicativity suites can run in one category.
"""

from __future__ import annotations

from .core import Capabilities, Morphism, ObjectRef
from .errors import DomainMismatch
from .vect import MatrixCategory
from ._rat import rat, rat_str


class GradedVect(MatrixCategory):
    capabilities = Capabilities(
        additive=True, braided=True, balanced=True, symmetric=False,
        has_duals=lambda _x: True,
    )

    def __init__(self, q=2):
        q = rat(q)
        if q * q == 1 or not q:
            raise ValueError("q must be a rational with q^2 != 1 (keeps the braiding non-symmetric)")
        self.q = q
        self.instance_id = f"graded(q={rat_str(q)})"

    def _qpow(self, e: int):
        return self.q ** e

    def _braid_scalar(self, a, b):
        return self._qpow(a * b)

    def _twist_scalar(self, a):
        return self._qpow(a * a)

    # objects --------------------------------------------------------------

    def space(self, dims: dict) -> ObjectRef:
        """Object from a degree -> dimension table, basis ordered by degree."""
        degrees = []
        for d in sorted(dims):
            n = dims[d]
            if n < 0:
                raise ValueError("negative dimension")
            degrees.extend([d] * n)
        return self.obj(degrees)

    def line(self, degree: int) -> ObjectRef:
        return self.obj((degree,))

    def dims(self, x: ObjectRef) -> dict:
        out: dict[int, int] = {}
        for d in x.payload:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    # extra switchings used by the negative-control suites -------------------

    def plain_swap(self, x: ObjectRef, y: ObjectRef) -> Morphism:
        """Degree-blind swap x (x) y |-> y (x) x, no q scalar, no twist."""
        self._own_obj(x)
        self._own_obj(y)
        return self._swap_matrix(x, y, lambda a, b: rat(1))

    def switching_s(self, x: ObjectRef, y: ObjectRef) -> Morphism:
        """Alias for the balanced switching (id (x) theta) . c."""
        return self.switching(x, y)

    def graded_dual(self, x: ObjectRef):
        """(dual, ev, coev) with dims(-m) = dims(m); zigzags are exact."""
        return self.dual_data(x)

    def homogeneous(self, x: ObjectRef) -> bool:
        return len(set(x.payload)) <= 1

    def mor_from_blocks(self, x: ObjectRef, y: ObjectRef, blocks: dict) -> Morphism:
        """Morphism from per-degree matrices {degree: rows}; off-degree
        entries are impossible by construction."""
        ent = {}
        xs = {d: [j for j, e in enumerate(x.payload) if e == d] for d in set(x.payload)}
        ys = {d: [i for i, e in enumerate(y.payload) if e == d] for d in set(y.payload)}
        for d, rows in blocks.items():
            cols_idx = xs.get(d, [])
            rows_idx = ys.get(d, [])
            if len(rows) != len(rows_idx) or any(len(r) != len(cols_idx) for r in rows):
                raise DomainMismatch(f"degree-{d} block has the wrong shape")
            for bi, row in enumerate(rows):
                for bj, v in enumerate(row):
                    if v:
                        ent[(rows_idx[bi], cols_idx[bj])] = rat(v)
        from .matrices import RatMatrix

        return self.mor(x, y, RatMatrix(len(y.payload), len(x.payload), ent))
