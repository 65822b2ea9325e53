"""Evaluation of typechecked programs against their instance."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import get_instance
from ..thickened import canonical_thickener, tr_hat, trace_pairing
from .._rat import parse_rat, rat_str
from . import ast
from .typecheck import TypedProgram


@dataclass
class PrintResult:
    line: int
    text: str


@dataclass
class AssertResult:
    line: int
    ok: bool
    left: str
    right: str


@dataclass
class EvalReport:
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results if isinstance(r, AssertResult))


def render_value(inst, m) -> str:
    """Human-readable canonical form of a morphism value."""
    if inst.instance_id == "rbord1":
        from ..bordism import IN, Iso

        if isinstance(m.payload, Iso):
            inner = ", ".join(f"{a}->{b}" for a, b in m.payload.mapping)
            return "iso{" + inner + "}"
        parts = []
        for (a, b, l) in m.payload.arcs:
            if a[0] == IN and b[0] != IN:
                parts.append(f"{a[1]}->{b[1]} : {rat_str(l)}")
            elif a[0] == IN:
                parts.append(f"cap {a[1]} {b[1]} : {rat_str(l)}")
            else:
                parts.append(f"cup {a[1]} {b[1]} : {rat_str(l)}")
        parts.extend(f"loop: {rat_str(c)}" for c in m.payload.circles)
        return "bord{" + ", ".join(parts) + "}"
    mat = m.payload
    if mat.rows == 1 and mat.cols == 1 and inst.is_scalar(m):
        return rat_str(mat.entry(0, 0))
    rows = ["[" + ", ".join(rat_str(v) for v in row) + "]" for row in mat.to_rows()]
    return "[" + ", ".join(rows) + "]"


class Evaluator:
    def __init__(self, tp: TypedProgram):
        self.tp = tp
        self.inst = get_instance(tp.instance_id)
        self.triples: dict = {}

    def run(self) -> EvalReport:
        results = []
        for item in self.tp.program.items:
            if isinstance(item, ast.TripleDecl):
                self.triples[item.name] = self.tripleexpr(item.expr)
            elif isinstance(item, ast.PrintCmd):
                value = self.term(item.term)
                results.append(PrintResult(item.span.line, render_value(self.inst, value)))
            elif isinstance(item, ast.AssertCmd):
                left = self.term(item.left)
                right = self.term(item.right)
                results.append(
                    AssertResult(
                        item.span.line,
                        self.inst.mor_equal(left, right),
                        render_value(self.inst, left),
                        render_value(self.inst, right),
                    )
                )
        return EvalReport(results)

    def objexpr(self, e):
        from .typecheck import resolve_objexpr

        return resolve_objexpr(self.inst, self.tp.objects, e)

    def term(self, t: ast.Term):
        inst = self.inst
        if isinstance(t, ast.Gen):
            return self.tp.morphisms[t.name]
        if isinstance(t, ast.Id):
            return inst.identity(self.objexpr(t.obj))
        if isinstance(t, ast.Compose):
            return inst.compose(self.term(t.after), self.term(t.before))
        if isinstance(t, ast.Tensor):
            return inst.tensor(self.term(t.left), self.term(t.right))
        if isinstance(t, ast.S):
            return inst.switching(self.objexpr(t.x), self.objexpr(t.y))
        if isinstance(t, ast.C):
            return inst.braiding_c(self.objexpr(t.x), self.objexpr(t.y))
        if isinstance(t, ast.Theta):
            return inst.twist_theta(self.objexpr(t.obj))
        if isinstance(t, ast.Ev):
            _, ev, _ = inst.dual_data(self.objexpr(t.obj))
            return ev
        if isinstance(t, ast.Coev):
            _, _, coev = inst.dual_data(self.objexpr(t.obj))
            return coev
        if isinstance(t, ast.TraceHat):
            return tr_hat(self.tripleexpr(t.triple))
        if isinstance(t, ast.Pairing):
            f = self.term(t.f)
            g = self.term(t.g)
            if inst.instance_id == "rbord1":
                f_hat = inst.cut_thickener(f, parse_rat("1/2"))
            else:
                f_hat = canonical_thickener(f)
            return trace_pairing(f_hat, g)
        if isinstance(t, ast.Paren):
            return self.term(t.inner)
        raise AssertionError(f"unhandled term {t!r}")

    def tripleexpr(self, e: ast.TripleExpr):
        if isinstance(e, ast.TripleName):
            return self.triples[e.name]
        if isinstance(e, ast.Cut):
            sigma = self.term(e.term)
            return self.inst.cut_thickener(sigma, parse_rat(e.fraction))
        if isinstance(e, ast.Thicken):
            return canonical_thickener(self.term(e.term))
        raise AssertionError(f"unhandled triple expression {e!r}")


def evaluate(tp: TypedProgram) -> EvalReport:
    return Evaluator(tp).run()
