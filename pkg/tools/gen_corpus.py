#!/usr/bin/env python3
"""Generate the golden .diag corpus.

Each program is emitted in the canonical format of the pretty-printer and is
checked before writing: the text must round-trip through parse/pretty and
every assertion inside must evaluate to true.  Expected values are computed
through the library API, so the corpus doubles as an oracle-equivalence
fixture.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from traced import get_instance, rat, rat_str, canonical_thickener, trace_pairing, tr_hat
from traced.dsl import parse, pretty, run_text

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "traced" / "data" / "corpus"

programs: list[tuple[str, str]] = []


def add(name: str, text: str):
    programs.append((name, text))


def mat_lit(m) -> str:
    rows = ["[" + ", ".join(rat_str(v) for v in row) + "]" for row in m.to_rows()]
    return "[" + ", ".join(rows) + "]"


def scalar_lit(v) -> str:
    return f"[[{rat_str(v)}]]"


fv = get_instance("finvect")
sv = get_instance("supervect")
g2 = get_instance("graded(q=2)")
g3 = get_instance("graded(q=3)")
rb = get_instance("rbord1")


# -- finvect ------------------------------------------------------------------

for n in (1, 2, 3, 4):
    add(f"finvect_dim_trace_{n}", f"""instance finvect
obj X = {n}
mor expect : I -> I = [[{n}]]
assert_equal(coev(X) ; s(X, dual(X)) ; ev(X), expect)
""")

# composition against a literal product
X2 = fv.space(2)
f = fv.mor(X2, X2, [[1, 2], [3, 4]])
g = fv.mor(X2, X2, [[0, 1], [1, 0]])
add("finvect_compose", f"""instance finvect
obj X = 2
mor f : X -> X = {mat_lit(f.payload)}
mor g : X -> X = {mat_lit(g.payload)}
mor fg : X -> X = {mat_lit(fv.compose(g, f).payload)}
assert_equal(f ; g, fg)
""")

add("finvect_unit_laws", """instance finvect
obj X = 3
mor f : X -> X = [[1, 0, 2], [0, 1, 0], [3, 0, 1]]
assert_equal(id(X) ; f, f)
assert_equal(f ; id(X), f)
assert_equal(f * id(I), f)
""")

rect = fv.mor(fv.space(2), fv.space(3), [[1, 0], [2, 1], [0, 3]])
back = fv.mor(fv.space(3), fv.space(2), [[1, 1, 0], [0, 2, 1]])
pair_val = fv.scalar_value(trace_pairing(canonical_thickener(rect), back))
add("finvect_pairing", f"""instance finvect
obj X = 2
obj Y = 3
mor f : X -> Y = {mat_lit(rect.payload)}
mor g : Y -> X = {mat_lit(back.payload)}
mor expect : I -> I = {scalar_lit(pair_val)}
assert_equal(pairing(f, g), expect)
""")

tr_val = fv.scalar_value(tr_hat(canonical_thickener(f)))
add("finvect_thicken_trace", f"""instance finvect
obj X = 2
mor f : X -> X = {mat_lit(f.payload)}
mor expect : I -> I = {scalar_lit(tr_val)}
assert_equal(trace_hat(thicken(f)), expect)
""")

add("finvect_zigzag", """instance finvect
obj X = 3
assert_equal(coev(X) * id(X) ; id(X) * ev(X), id(X))
assert_equal(id(dual(X)) * coev(X) ; ev(X) * id(dual(X)), id(dual(X)))
""")

add("finvect_theta_trivial", """instance finvect
obj X = 2
assert_equal(theta(X), id(X))
assert_equal(c(X, X), s(X, X))
""")

h = fv.mor(X2, X2, [[2, 0], [1, 1]])
k = fv.mor(X2, X2, [[1, 1], [0, 2]])
add("finvect_interchange", f"""instance finvect
obj X = 2
mor f : X -> X = {mat_lit(f.payload)}
mor g : X -> X = {mat_lit(g.payload)}
mor h : X -> X = {mat_lit(h.payload)}
mor k : X -> X = {mat_lit(k.payload)}
assert_equal((f ; g) * (h ; k), f * h ; g * k)
""")

sw = fv.switching(X2, fv.space(3))
add("finvect_switch_matrix", f"""instance finvect
obj X = 2
obj Y = 3
mor expect : X * Y -> Y * X = {mat_lit(sw.payload)}
assert_equal(s(X, Y), expect)
""")

add("finvect_symmetry", """instance finvect
obj X = 2
obj Y = 3
assert_equal(s(X, Y) ; s(Y, X), id(X * Y))
""")

add("finvect_print_trace", """instance finvect
obj X = 4
print(coev(X) ; s(X, dual(X)) ; ev(X))
print(id(X))
""")

# -- supervect -----------------------------------------------------------------

odd = sv.space(0, 1)
add("supervect_koszul_sign", """instance supervect
obj P = super(0, 1)
mor minus : P * P -> P * P = [[-1]]
assert_equal(s(P, P), minus)
""")

mixed = sv.space(1, 1)
fe = sv.mor(mixed, mixed, [[2, 0], [0, 5]])
str_val = sv.super_trace(fe)
add("supervect_super_trace", f"""instance supervect
obj X = super(1, 1)
mor f : X -> X = {mat_lit(fe.payload)}
mor expect : I -> I = {scalar_lit(str_val)}
assert_equal(trace_hat(thicken(f)), expect)
""")

add("supervect_id_trace", """instance supervect
obj X = super(1, 1)
mor zero : I -> I = [[0]]
assert_equal(coev(X) ; s(X, dual(X)) ; ev(X), zero)
""")

add("supervect_dim_trace", """instance supervect
obj X = super(2, 1)
mor expect : I -> I = [[1]]
assert_equal(coev(X) ; s(X, dual(X)) ; ev(X), expect)
""")

add("supervect_zigzag", """instance supervect
obj X = super(1, 1)
assert_equal(coev(X) * id(X) ; id(X) * ev(X), id(X))
""")

ge = sv.mor(mixed, mixed, [[3, 0], [0, 1]])
pair_sv = sv.scalar_value(trace_pairing(canonical_thickener(fe), ge))
add("supervect_pairing", f"""instance supervect
obj X = super(1, 1)
mor f : X -> X = {mat_lit(fe.payload)}
mor g : X -> X = {mat_lit(ge.payload)}
mor expect : I -> I = {scalar_lit(pair_sv)}
assert_equal(pairing(f, g), expect)
""")

sw_sv = sv.switching(mixed, mixed)
add("supervect_switch_matrix", f"""instance supervect
obj X = super(1, 1)
mor expect : X * X -> X * X = {mat_lit(sw_sv.payload)}
assert_equal(s(X, X), expect)
""")

add("supervect_symmetry", """instance supervect
obj X = super(1, 1)
obj Y = super(0, 2)
assert_equal(s(X, Y) ; s(Y, X), id(X * Y))
""")

add("supervect_theta_trivial", """instance supervect
obj P = super(0, 1)
assert_equal(theta(P), id(P))
""")


# -- graded -------------------------------------------------------------------

add("graded_line_trace", """instance graded(q=2)
obj L = graded{1: 1}
mor one : I -> I = [[1]]
assert_equal(coev(L) ; s(L, dual(L)) ; ev(L), one)
""")

add("graded_braiding_scalar", """instance graded(q=2)
obj A = graded{1: 1}
obj B = graded{2: 1}
mor expect : A * B -> B * A = [[4]]
assert_equal(c(A, B), expect)
""")

add("graded_twist_scalar", """instance graded(q=2)
obj D = graded{2: 1}
mor expect : D -> D = [[16]]
assert_equal(theta(D), expect)
""")

add("graded_switching_scalar", """instance graded(q=2)
obj A = graded{1: 1}
obj B = graded{2: 1}
mor expect : A * B -> B * A = [[8]]
assert_equal(s(A, B), expect)
""")

add("graded_degree_zero_swap", """instance graded(q=2)
obj Z = graded{0: 2}
obj A = graded{3: 1}
assert_equal(s(Z, A), c(Z, A))
""")

add("graded_not_symmetric", """instance graded(q=2)
obj A = graded{1: 1}
mor four : A * A -> A * A = [[4]]
assert_equal(c(A, A) ; c(A, A), four)
""")

add("graded_twist_equation", """instance graded(q=2)
obj A = graded{1: 1}
obj B = graded{-1: 1}
assert_equal(theta(A * B), theta(A) * theta(B) ; c(A, B) ; c(B, A))
""")

add("graded_q3_twist", """instance graded(q=3)
obj A = graded{1: 1}
obj B = graded{1: 1}
mor expect : A * B -> A * B = [[81]]
assert_equal(theta(A * B), expect)
""")

gx = g2.space({-1: 1, 1: 1})
gf = g2.mor_from_blocks(gx, gx, {-1: [[2]], 1: [[3]]})
gtr = g2.scalar_value(tr_hat(canonical_thickener(gf)))
add("graded_block_trace", f"""instance graded(q=2)
obj X = graded{{-1: 1, 1: 1}}
mor f : X -> X = {mat_lit(gf.payload)}
mor expect : I -> I = {scalar_lit(gtr)}
assert_equal(trace_hat(thicken(f)), expect)
""")

gg = g2.mor_from_blocks(gx, gx, {-1: [[1]], 1: [[1]]})
gpair = g2.scalar_value(trace_pairing(canonical_thickener(gf), gg))
add("graded_pairing", f"""instance graded(q=2)
obj X = graded{{-1: 1, 1: 1}}
mor f : X -> X = {mat_lit(gf.payload)}
mor g : X -> X = {mat_lit(gg.payload)}
mor expect : I -> I = {scalar_lit(gpair)}
assert_equal(pairing(f, g), expect)
""")

add("graded_zigzag", """instance graded(q=2)
obj X = graded{-2: 1, 0: 1, 3: 1}
assert_equal(coev(X) * id(X) ; id(X) * ev(X), id(X))
""")

add("graded_dual_dims", """instance graded(q=2)
obj L = graded{2: 1}
mor expect : dual(L) -> dual(L) = [[16]]
assert_equal(theta(dual(L)), expect)
""")

big_sw = g2.switching(gx, gx)
add("graded_switch_matrix", f"""instance graded(q=2)
obj X = graded{{-1: 1, 1: 1}}
mor expect : X * X -> X * X = {mat_lit(big_sw.payload)}
assert_equal(s(X, X), expect)
""")

# -- rbord1 --------------------------------------------------------------------

add("rbord_compose_lengths", """instance rbord1
obj W = pts{w}
obj X = pts{x}
obj Y = pts{y}
mor a : W -> X = bord{w->x : 3}
mor b : X -> Y = bord{x->y : 2}
mor expect : W -> Y = bord{w->y : 5}
assert_equal(a ; b, expect)
""")

add("rbord_glue_circle", """instance rbord1
obj X = pts{x}
mor sigma : X -> X = bord{x->x : 4}
mor circ : I -> I = bord{loop: 4}
assert_equal(trace_hat(cut(sigma, 1/2)), circ)
""")

add("rbord_cut_positions", """instance rbord1
obj X = pts{x}
mor sigma : X -> X = bord{x->x : 5}
assert_equal(trace_hat(cut(sigma, 1/5)), trace_hat(cut(sigma, 4/5)))
""")

add("rbord_swap_circle", """instance rbord1
obj X = pts{u, v}
mor sigma : X -> X = bord{u->v : 1, v->u : 2}
mor circ : I -> I = bord{loop: 3}
assert_equal(trace_hat(cut(sigma, 1/3)), circ)
""")

add("rbord_parallel_circles", """instance rbord1
obj X = pts{u, v}
mor sigma : X -> X = bord{u->u : 1, v->v : 2}
mor circs : I -> I = bord{loop: 1, loop: 2}
assert_equal(trace_hat(cut(sigma, 1/2)), circs)
""")

add("rbord_cup_cap_loop", """instance rbord1
obj P = pts{a, b}
mor cap2 : I -> P = bord{cup a b : 1}
mor cup2 : P -> I = bord{cap a b : 2}
mor circ : I -> I = bord{loop: 3}
assert_equal(cap2 ; cup2, circ)
""")

add("rbord_iso_relabel", """instance rbord1
obj X = pts{x}
obj Y = pts{y}
obj U = pts{u}
mor seg : X -> Y = bord{x->y : 2}
mor ren : Y -> U = iso{y->u}
mor expect : X -> U = bord{x->u : 2}
assert_equal(seg ; ren, expect)
""")

add("rbord_pairing_circle", """instance rbord1
obj X = pts{x}
obj Y = pts{y}
mor a : X -> Y = bord{x->y : 1}
mor b : Y -> X = bord{y->x : 2}
mor circ : I -> I = bord{loop: 3}
assert_equal(pairing(a, b), circ)
""")

add("rbord_tensor_union", """instance rbord1
obj X = pts{x}
obj Y = pts{y}
obj U = pts{u}
obj V = pts{v}
mor a : X -> Y = bord{x->y : 1}
mor b : U -> V = bord{u->v : 2}
mor expect : X * U -> Y * V = bord{x->y : 1, u->v : 2}
assert_equal(a * b, expect)
""")

add("rbord_switch_iso", """instance rbord1
obj X = pts{x}
obj Y = pts{y}
mor expect : X * Y -> Y * X = iso{x->x, y->y}
assert_equal(s(X, Y), expect)
""")

add("rbord_empty_unit", """instance rbord1
obj X = pts{x}
mor seg : X -> X = bord{x->x : 1}
assert_equal(seg * id(I), seg)
""")

add("rbord_iso_compose", """instance rbord1
obj X = pts{x}
obj Y = pts{y}
obj U = pts{u}
mor r1 : X -> Y = iso{x->y}
mor r2 : Y -> U = iso{y->u}
mor expect : X -> U = iso{x->u}
assert_equal(r1 ; r2, expect)
""")

add("rbord_free_circle", """instance rbord1
obj X = pts{x}
mor seg : X -> X = bord{x->x : 1, loop: 7}
mor expect : I -> I = bord{loop: 1, loop: 7}
assert_equal(trace_hat(cut(seg, 1/2)), expect)
""")

add("rbord_print", """instance rbord1
obj X = pts{x, y}
obj U = pts{u}
mor sigma : X -> X = bord{x->y : 1/2, y->x : 3/2}
print(trace_hat(cut(sigma, 1/4)))
print(s(X, U))
""")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for stale in OUT.glob("*.diag"):
        stale.unlink()
    assert len(programs) == len({n for n, _ in programs}), "duplicate program names"
    bad = []
    for name, text in programs:
        prog = parse(text)
        canonical = pretty(prog)
        if canonical != text:
            bad.append((name, "not canonical"))
            print(f"--- {name}: canonical form differs")
            print(canonical)
            continue
        report = run_text(text)
        if not report.ok:
            bad.append((name, "assert failed"))
            print(f"--- {name}: assertion failed")
            for r in report.results:
                print("   ", r)
    if bad:
        raise SystemExit(f"{len(bad)} corpus programs invalid: {[n for n, _ in bad]}")
    for name, text in programs:
        (OUT / f"{name}.diag").write_text(text)
    print(f"wrote {len(programs)} programs to {OUT}")


if __name__ == "__main__":
    main()
