"""Dom/cod type checking for parsed programs.

Resolves objects, validates morphism literals against their declared types
(shape, degree preservation, boundary matching), enforces the capability
table of the target instance, and annotates every term with its inferred
source and target.  All diagnostics carry the source span.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import ObjectRef, get_instance
from ..errors import DomainMismatch, TypecheckError
from ..matrices import RatMatrix
from .._rat import parse_rat
from . import ast


@dataclass
class TypedProgram:
    instance_id: str
    program: ast.Program
    objects: dict
    morphisms: dict  # name -> Morphism (literals are static values)
    triple_types: dict  # name -> (dom, cod)
    term_types: dict  # id(node) -> (src, tgt)


def _fmt_obj(x: ObjectRef) -> str:
    return repr(x.payload)


def resolve_objexpr(inst, objects: dict, e: ast.ObjExpr) -> ObjectRef:
    """Evaluate an object expression against bound object names; shared by
    the checker and the evaluator."""
    iid = inst.instance_id
    if isinstance(e, ast.ObjName):
        if e.name not in objects:
            raise TypecheckError(f"unknown object {e.name!r}", e.span.line, e.span.col)
        return objects[e.name]
    if isinstance(e, ast.ObjUnit):
        return inst.unit_object()
    if isinstance(e, ast.ObjInt):
        if iid != "finvect":
            raise TypecheckError("bare dimensions are finvect objects only", e.span.line, e.span.col)
        return inst.space(e.dim)
    if isinstance(e, ast.ObjSuper):
        if iid != "supervect":
            raise TypecheckError("super(...) objects live in supervect", e.span.line, e.span.col)
        return inst.space(e.even, e.odd)
    if isinstance(e, ast.ObjGraded):
        if not iid.startswith("graded"):
            raise TypecheckError("graded{...} objects live in graded(q=...)", e.span.line, e.span.col)
        dims: dict[int, int] = {}
        for (deg, dim) in e.entries:
            if deg in dims:
                raise TypecheckError(f"degree {deg} listed twice", e.span.line, e.span.col)
            dims[deg] = dim
        return inst.space(dims)
    if isinstance(e, ast.ObjPts):
        if iid != "rbord1":
            raise TypecheckError("pts{...} objects live in rbord1", e.span.line, e.span.col)
        try:
            return inst.points(e.labels)
        except DomainMismatch as exc:
            raise TypecheckError(str(exc), e.span.line, e.span.col) from exc
    if isinstance(e, ast.ObjDual):
        inner = resolve_objexpr(inst, objects, e.inner)
        if not inst.has_dual(inner):
            raise TypecheckError(f"instance {iid!r} has no duals", e.span.line, e.span.col)
        return inst.dual_obj(inner)
    if isinstance(e, ast.ObjTensor):
        left = resolve_objexpr(inst, objects, e.left)
        right = resolve_objexpr(inst, objects, e.right)
        try:
            return inst.tensor_obj(left, right)
        except DomainMismatch as exc:
            raise TypecheckError(str(exc), e.span.line, e.span.col) from exc
    raise TypecheckError(f"unhandled object expression {e!r}", e.span.line, e.span.col)


class Checker:
    def __init__(self, program: ast.Program):
        self.program = program
        try:
            self.inst = get_instance(program.instance_id)
        except KeyError as exc:
            raise TypecheckError(str(exc)) from exc
        self.objects: dict[str, ObjectRef] = {}
        self.morphisms: dict = {}
        self.triples: dict = {}
        self.term_types: dict = {}

    def run(self) -> TypedProgram:
        for item in self.program.items:
            if isinstance(item, ast.ObjDecl):
                self._bind_fresh(item.name, item.span)
                self.objects[item.name] = self.objexpr(item.expr)
            elif isinstance(item, ast.MorDecl):
                self._bind_fresh(item.name, item.span)
                src = self.objexpr(item.src)
                tgt = self.objexpr(item.tgt)
                self.morphisms[item.name] = self.literal(item.literal, src, tgt)
            elif isinstance(item, ast.TripleDecl):
                self._bind_fresh(item.name, item.span)
                self.triples[item.name] = self.tripleexpr(item.expr)
            elif isinstance(item, ast.PrintCmd):
                self.term(item.term)
            elif isinstance(item, ast.AssertCmd):
                lt = self.term(item.left)
                rt = self.term(item.right)
                if lt != rt:
                    raise TypecheckError(
                        f"assert_equal compares a morphism {_fmt_obj(lt[0])} -> {_fmt_obj(lt[1])}"
                        f" with one {_fmt_obj(rt[0])} -> {_fmt_obj(rt[1])}",
                        item.span.line, item.span.col,
                    )
        return TypedProgram(
            instance_id=self.program.instance_id,
            program=self.program,
            objects=self.objects,
            morphisms=self.morphisms,
            triple_types=self.triples,
            term_types=self.term_types,
        )

    def _bind_fresh(self, name: str, span: ast.Span):
        if name in self.objects or name in self.morphisms or name in self.triples:
            raise TypecheckError(f"name {name!r} is already bound", span.line, span.col)

    # -- objects ---------------------------------------------------------------

    def objexpr(self, e: ast.ObjExpr) -> ObjectRef:
        return resolve_objexpr(self.inst, self.objects, e)

    # -- literals -----------------------------------------------------------------

    def literal(self, lit, src: ObjectRef, tgt: ObjectRef):
        inst = self.inst
        if isinstance(lit, ast.MatrixLit):
            if inst.instance_id == "rbord1":
                raise TypecheckError("matrix literals need a matrix instance", lit.span.line, lit.span.col)
            rows = [[parse_rat(v) for v in row] for row in lit.rows]
            widths = {len(r) for r in rows}
            if len(rows) != len(tgt.payload) or widths - {len(src.payload)}:
                got = f"{len(rows)}x{'/'.join(str(w) for w in sorted(widths)) or '0'}"
                raise TypecheckError(
                    f"matrix shape {got} does not match {len(tgt.payload)}x{len(src.payload)}",
                    lit.span.line, lit.span.col,
                )
            try:
                return inst.mor(src, tgt, RatMatrix.from_rows(rows) if rows else RatMatrix.zero(0, len(src.payload)))
            except DomainMismatch as exc:
                raise TypecheckError(str(exc), lit.span.line, lit.span.col) from exc
        if isinstance(lit, ast.BordLit):
            if inst.instance_id != "rbord1":
                raise TypecheckError("bord{...} literals live in rbord1", lit.span.line, lit.span.col)
            from ..bordism import IN, OUT

            arcs, circles = [], []
            for entry in lit.entries:
                if entry.kind == "loop":
                    circles.append(parse_rat(entry.length))
                elif entry.kind == "arc":
                    arcs.append(((IN, entry.a), (OUT, entry.b), parse_rat(entry.length)))
                elif entry.kind == "cap":
                    arcs.append(((IN, entry.a), (IN, entry.b), parse_rat(entry.length)))
                else:
                    arcs.append(((OUT, entry.a), (OUT, entry.b), parse_rat(entry.length)))
            try:
                return inst.bord_mor(src, tgt, arcs, circles)
            except DomainMismatch as exc:
                raise TypecheckError(str(exc), lit.span.line, lit.span.col) from exc
        if isinstance(lit, ast.IsoLit):
            if inst.instance_id != "rbord1":
                raise TypecheckError("iso{...} literals live in rbord1", lit.span.line, lit.span.col)
            try:
                return inst.iso_mor(src, tgt, dict(lit.pairs))
            except DomainMismatch as exc:
                raise TypecheckError(str(exc), lit.span.line, lit.span.col) from exc
        raise TypecheckError("unhandled literal", lit.span.line, lit.span.col)

    # -- terms ---------------------------------------------------------------------

    def term(self, t: ast.Term):
        inst = self.inst
        key = id(t)
        if isinstance(t, ast.Gen):
            if t.name not in self.morphisms:
                raise TypecheckError(f"unknown morphism {t.name!r}", t.span.line, t.span.col)
            m = self.morphisms[t.name]
            ty = (m.source, m.target)
        elif isinstance(t, ast.Id):
            x = self.objexpr(t.obj)
            ty = (x, x)
        elif isinstance(t, ast.Compose):
            before = self.term(t.before)
            after = self.term(t.after)
            if before[1] != after[0]:
                raise TypecheckError(
                    f"cannot chain: left ends at {_fmt_obj(before[1])} but right"
                    f" starts at {_fmt_obj(after[0])}",
                    t.span.line, t.span.col,
                )
            ty = (before[0], after[1])
        elif isinstance(t, ast.Tensor):
            lt = self.term(t.left)
            rt = self.term(t.right)
            try:
                ty = (inst.tensor_obj(lt[0], rt[0]), inst.tensor_obj(lt[1], rt[1]))
            except DomainMismatch as exc:
                raise TypecheckError(str(exc), t.span.line, t.span.col) from exc
        elif isinstance(t, ast.S):
            x, y = self.objexpr(t.x), self.objexpr(t.y)
            ty = (inst.tensor_obj(x, y), inst.tensor_obj(y, x))
        elif isinstance(t, ast.C):
            if not inst.capabilities.braided:
                raise TypecheckError(
                    f"instance {inst.instance_id!r} is not braided", t.span.line, t.span.col
                )
            x, y = self.objexpr(t.x), self.objexpr(t.y)
            ty = (inst.tensor_obj(x, y), inst.tensor_obj(y, x))
        elif isinstance(t, ast.Theta):
            if not inst.capabilities.balanced:
                raise TypecheckError(
                    f"instance {inst.instance_id!r} is not balanced", t.span.line, t.span.col
                )
            x = self.objexpr(t.obj)
            ty = (x, x)
        elif isinstance(t, (ast.Ev, ast.Coev)):
            x = self.objexpr(t.obj)
            if not inst.has_dual(x):
                raise TypecheckError(
                    f"instance {inst.instance_id!r} has no duals", t.span.line, t.span.col
                )
            xd = inst.dual_obj(x)
            unit = inst.unit_object()
            if isinstance(t, ast.Ev):
                ty = (inst.tensor_obj(xd, x), unit)
            else:
                ty = (unit, inst.tensor_obj(x, xd))
        elif isinstance(t, ast.TraceHat):
            dom, cod = self.tripleexpr(t.triple)
            if dom != cod:
                raise TypecheckError(
                    f"trace_hat needs an endomorphism-shaped triple, got"
                    f" {_fmt_obj(dom)} -> {_fmt_obj(cod)}",
                    t.span.line, t.span.col,
                )
            unit = inst.unit_object()
            ty = (unit, unit)
        elif isinstance(t, ast.Pairing):
            ft = self.term(t.f)
            gt = self.term(t.g)
            if not (gt[0] == ft[1] and gt[1] == ft[0]):
                raise TypecheckError(
                    f"pairing needs opposite shapes, got {_fmt_obj(ft[0])} -> {_fmt_obj(ft[1])}"
                    f" against {_fmt_obj(gt[0])} -> {_fmt_obj(gt[1])}",
                    t.span.line, t.span.col,
                )
            unit = inst.unit_object()
            ty = (unit, unit)
        elif isinstance(t, ast.Paren):
            ty = self.term(t.inner)
        else:
            raise TypecheckError(f"unhandled term {t!r}", t.span.line, t.span.col)
        self.term_types[key] = ty
        return ty

    def tripleexpr(self, e: ast.TripleExpr):
        inst = self.inst
        if isinstance(e, ast.TripleName):
            if e.name not in self.triples:
                raise TypecheckError(f"unknown triple {e.name!r}", e.span.line, e.span.col)
            return self.triples[e.name]
        if isinstance(e, ast.Cut):
            if inst.instance_id != "rbord1":
                raise TypecheckError("cut(...) lives in rbord1", e.span.line, e.span.col)
            src, tgt = self.term(e.term)
            frac = parse_rat(e.fraction)
            if not (0 < frac < 1):
                raise TypecheckError("cut fraction must lie in (0,1)", e.span.line, e.span.col)
            return (src, tgt)
        if isinstance(e, ast.Thicken):
            src, tgt = self.term(e.term)
            if not inst.has_dual(src):
                raise TypecheckError(
                    f"thicken needs duals; instance {inst.instance_id!r} has none",
                    e.span.line, e.span.col,
                )
            return (src, tgt)
        raise TypecheckError("unhandled triple expression", e.span.line, e.span.col)


def typecheck(program: ast.Program) -> TypedProgram:
    return Checker(program).run()
