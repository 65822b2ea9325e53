import pathlib

import pytest

from traced import canonical_thickener, get_instance, rat_str, tr_hat, trace_pairing
from traced.dsl import ast, parse, pretty, run_text, tokenize, typecheck
from traced.errors import LexError, ParseError, TypecheckError

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "src" / "traced" / "data" / "corpus"


def corpus_texts():
    return sorted(CORPUS.glob("*.diag"))


def test_corpus_has_fifty_programs():
    assert len(corpus_texts()) == 50


@pytest.mark.parametrize("path", corpus_texts(), ids=lambda p: p.stem)
def test_corpus_roundtrip_and_eval(path):
    text = path.read_text()
    prog = parse(text)
    assert pretty(prog) == text
    report = run_text(text)
    assert report.ok


def test_parse_reparse_fixed_point():
    for path in corpus_texts():
        text = path.read_text()
        assert pretty(parse(pretty(parse(text)))) == text


def test_diagrammatic_order():
    prog = parse("instance finvect\nobj X = 2\n"
                 "mor f : X -> X = [[1, 0], [0, 1]]\nprint(id(X) ; f)\n")
    cmd = prog.items[-1]
    assert isinstance(cmd.term, ast.Compose)
    assert isinstance(cmd.term.before, ast.Id)  # id runs first
    assert isinstance(cmd.term.after, ast.Gen)


def test_precedence_tensor_binds_tighter():
    prog = parse("instance finvect\nobj X = 2\n"
                 "mor f : X -> X = [[1, 0], [0, 1]]\n"
                 "mor g : X -> X = [[1, 0], [0, 1]]\n"
                 "mor h : X * X -> X * X = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]\n"
                 "print(f * g ; h)\n")
    term = prog.items[-1].term
    assert isinstance(term, ast.Compose)
    assert isinstance(term.before, ast.Tensor)
    assert isinstance(term.after, ast.Gen)


def test_unbalanced_bracket_position():
    with pytest.raises(ParseError) as err:
        parse("instance finvect\nobj X = (3\n")
    assert err.value.line == 3 and err.value.col == 1


def test_lex_error_position():
    with pytest.raises(LexError) as err:
        tokenize("instance finvect\nobj X = @\n")
    assert (err.value.line, err.value.col) == (2, 9)


def test_type_error_names_objects():
    with pytest.raises(TypecheckError) as err:
        typecheck(parse("instance finvect\nobj X = 2\nmor u : I -> I = [[1]]\n"
                        "print(coev(X) ; u)\n"))
    msg = str(err.value)
    assert "left ends at" in msg and "right starts at" in msg


def test_ev_coev_shape_mismatch_in_graded():
    """X (x) X* and X* (x) X interleave degrees differently once X is
    inhomogeneous, so chaining coev into ev is a type error that names
    both shapes."""
    with pytest.raises(TypecheckError) as err:
        typecheck(parse("instance graded(q=2)\nobj X = graded{1: 1, 2: 1}\n"
                        "print(coev(X) ; ev(X))\n"))
    msg = str(err.value)
    assert "left ends at" in msg and "right starts at" in msg


def test_capability_errors():
    with pytest.raises(TypecheckError, match="not braided"):
        typecheck(parse("instance rbord1\nobj X = pts{x}\nobj Y = pts{y}\nprint(c(X, Y))\n"))
    with pytest.raises(TypecheckError, match="no duals"):
        typecheck(parse("instance rbord1\nobj X = pts{x}\nprint(ev(X))\n"))
    # theta typechecks in the symmetric instance (identity twist)
    typecheck(parse("instance finvect\nobj X = 2\nprint(theta(X))\n"))


def test_trace_hat_requires_endo_shape():
    with pytest.raises(TypecheckError, match="endomorphism"):
        typecheck(parse("instance rbord1\nobj X = pts{x}\nobj Y = pts{y}\n"
                        "mor f : X -> Y = bord{x->y : 1}\n"
                        "print(trace_hat(cut(f, 1/2)))\n"))


def test_pairing_shape_check():
    with pytest.raises(TypecheckError, match="opposite shapes"):
        typecheck(parse("instance finvect\nobj X = 2\nobj Y = 3\n"
                        "mor f : X -> Y = [[0, 0], [0, 0], [0, 0]]\n"
                        "print(pairing(f, f))\n"))


def test_s_with_dual_infers_types():
    tp = typecheck(parse("instance finvect\nobj X = 2\nprint(s(X, dual(X)))\n"))
    inst = get_instance("finvect")
    term = tp.program.items[-1].term
    src, tgt = tp.term_types[id(term)]
    assert src == inst.tensor_obj(inst.space(2), inst.dual_obj(inst.space(2)))


def test_duplicate_binding_rejected():
    with pytest.raises(TypecheckError, match="already bound"):
        typecheck(parse("instance finvect\nobj X = 2\nobj X = 3\n"))


def test_unknown_names():
    with pytest.raises(TypecheckError, match="unknown morphism"):
        typecheck(parse("instance finvect\nprint(nope)\n"))
    with pytest.raises(TypecheckError, match="unknown object"):
        typecheck(parse("instance finvect\nprint(id(X))\n"))


def test_comments_and_whitespace():
    report = run_text("instance finvect  # header\n"
                      "obj X = 2   # two dimensions\n"
                      "# a standalone comment\n"
                      "assert_equal(id(X), id(X))\n")
    assert report.ok


def test_graded_header_with_fraction():
    report = run_text("instance graded(q=3/2)\nobj L = graded{1: 1}\n"
                      "mor e : L * L -> L * L = [[3/2]]\nassert_equal(c(L, L), e)\n")
    assert report.ok


def test_failed_assert_reported():
    report = run_text("instance finvect\nobj X = 2\n"
                      "mor two : I -> I = [[2]]\nmor three : I -> I = [[3]]\n"
                      "assert_equal(two, three)\n")
    assert not report.ok
    result = report.results[0]
    assert result.left == "2" and result.right == "3"


def test_oracle_equivalence_spot_checks():
    """Evaluator output must agree with direct API computation."""
    fv = get_instance("finvect")
    x = fv.space(4)
    f = fv.mor(x, x, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]])
    expect = fv.scalar_value(tr_hat(canonical_thickener(f)))
    report = run_text(
        "instance finvect\nobj X = 4\n"
        "mor f : X -> X = [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]]\n"
        "print(trace_hat(thicken(f)))\n"
    )
    assert report.results[0].text == rat_str(expect)

    from traced import rat

    rb = get_instance("rbord1")
    f1 = rb.interval("x", "y", 1)
    g1 = rb.interval("y", "x", 2)
    api = trace_pairing(rb.cut_thickener(f1, rat(1, 2)), g1)
    report = run_text(
        "instance rbord1\nobj X = pts{x}\nobj Y = pts{y}\n"
        "mor a : X -> Y = bord{x->y : 1}\nmor b : Y -> X = bord{y->x : 2}\n"
        "print(pairing(a, b))\n"
    )
    from traced.dsl import render_value

    assert report.results[0].text == render_value(rb, api)


def test_corpus_instances_covered():
    headers = {p.read_text().splitlines()[0] for p in corpus_texts()}
    assert "instance finvect" in headers
    assert "instance supervect" in headers
    assert "instance rbord1" in headers
    assert any(h.startswith("instance graded(") for h in headers)
