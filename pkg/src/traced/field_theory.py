"""Field-theory functors from 1-d bordisms to exact linear algebra.

The exact functor assigns the same rational vector space Q^d to every
point, sends an isometry to the permutation of tensor factors, an arc of
integer length n from an in-point to an out-point to the matrix power A^n,
and a circle of length n to the scalar classtr(A^n).  Monoidal structure is
the Kronecker product.  Arcs must join an in-point to an out-point: a cap
or cup traversal would need A to equal its own transpose, so evaluation on
such bordisms is refused rather than silently wrong.

A float mode (interval of length t |-> exp(-t*H)) is provided for demos
only; every verification suite uses the exact integer mode.
"""

from __future__ import annotations

import math

from .bordism import IN, OUT, Bord, Iso
from .core import Morphism, get_instance
from .errors import DirectedBordismRequired, DomainMismatch, NonIntegerLength
from .matrices import RatMatrix
from ._rat import rat


class FieldTheory:
    """Exact evaluation of 1-d bordisms against a square rational matrix."""

    def __init__(self, a: RatMatrix):
        if a.rows != a.cols or a.rows == 0:
            raise DomainMismatch("the transfer matrix must be square and nonempty")
        self.a = a
        self.d = a.rows
        self.vect = get_instance("finvect")
        self.rbord = get_instance("rbord1")
        self._powers = {0: RatMatrix.identity(self.d), 1: a}

    def power(self, n: int) -> RatMatrix:
        p = self._powers
        if n not in p:
            top = max(k for k in p if k <= n)
            mat = p[top]
            for k in range(top + 1, n + 1):
                mat = mat @ self.a
                p[k] = mat
        return p[n]

    def obj(self, x):
        """E(X) = Q^(d^|X|)."""
        return self.vect.space(self.d ** len(x.payload))

    def circle_value(self, length):
        n = self._int_length(length)
        return self.power(n).trace()

    @staticmethod
    def _int_length(length):
        length = rat(length)
        if length.denominator != 1 or length <= 0:
            raise NonIntegerLength(f"exact mode needs positive integer lengths, got {length}")
        return int(length.numerator)

    def __call__(self, f: Morphism) -> Morphism:
        if f.instance_id != "rbord1":
            raise DomainMismatch("field theory evaluates 1-d bordism morphisms")
        src, tgt = self.obj(f.source), self.obj(f.target)
        if isinstance(f.payload, Iso):
            mat = self._permutation(f.source.payload, f.target.payload, f.payload.as_dict())
            return self.vect.mor(src, tgt, mat)
        return self.vect.mor(src, tgt, self._bordism_matrix(f))

    def _permutation(self, src_labels, tgt_labels, mapping) -> RatMatrix:
        n = len(src_labels)
        d = self.d
        tgt_pos = {lab: k for k, lab in enumerate(tgt_labels)}
        ent = {}
        for col in range(d ** n):
            digits = _digits(col, d, n)
            out = [0] * n
            for i, lab in enumerate(src_labels):
                out[tgt_pos[mapping[lab]]] = digits[i]
            ent[(_undigits(out, d), col)] = 1
        return RatMatrix(d ** n, d ** n, ent)

    def _bordism_matrix(self, f: Morphism) -> RatMatrix:
        payload: Bord = f.payload
        src_labels, tgt_labels = f.source.payload, f.target.payload
        d = self.d
        ops = {}
        scalar = rat(1)
        for c in payload.circles:
            scalar *= self.circle_value(c)
        for (a, b, l) in payload.arcs:
            if a[0] == IN and b[0] == OUT:
                ops[b[1]] = (a[1], self.power(self._int_length(l)))
            else:
                raise DirectedBordismRequired(
                    f"arc {a} -- {b} does not run from an in-point to an out-point"
                )
        src_pos = {lab: k for k, lab in enumerate(src_labels)}
        n_in, n_out = len(src_labels), len(tgt_labels)
        ent = {}
        for col in range(d ** n_in):
            digits = _digits(col, d, n_in)
            out_entries = {(): scalar}
            for y in tgt_labels:
                x, mat = ops[y]
                j = digits[src_pos[x]]
                new = {}
                for prefix, v in out_entries.items():
                    for i in range(d):
                        w = mat.entry(i, j)
                        if w:
                            new[prefix + (i,)] = v * w
                out_entries = new
            for out_digits, v in out_entries.items():
                if v:
                    ent[(_undigits(list(out_digits), d), col)] = v
        return RatMatrix(d ** n_out, d ** n_in, ent)


def field_theory(a) -> FieldTheory:
    if not isinstance(a, RatMatrix):
        a = RatMatrix.from_rows(a)
    return FieldTheory(a)


def _digits(value: int, base: int, width: int):
    out = [0] * width
    for i in range(width - 1, -1, -1):
        out[i] = value % base
        value //= base
    return out


def _undigits(digits, base: int) -> int:
    value = 0
    for dgt in digits:
        value = value * base + dgt
    return value


# -- float demo mode ----------------------------------------------------------


def expm_neg(h, t: float):
    """exp(-t*h) for a small dense float matrix h (list of rows), by scaling
    and squaring of the Taylor series; demo accuracy only."""
    n = len(h)
    m = [[-t * h[i][j] for j in range(n)] for i in range(n)]
    norm = max(sum(abs(v) for v in row) for row in m) if n else 0.0
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 1 else 0
    scale = 2.0 ** squarings
    m = [[v / scale for v in row] for row in m]

    def matmul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    result = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    term = [row[:] for row in result]
    for k in range(1, 24):
        term = matmul(term, m)
        term = [[v / k for v in row] for row in term]
        result = [[result[i][j] + term[i][j] for j in range(n)] for i in range(n)]
    for _ in range(squarings):
        result = matmul(result, result)
    return result


def float_circle_value(h, t: float) -> float:
    e = expm_neg(h, t)
    return sum(e[i][i] for i in range(len(e)))
