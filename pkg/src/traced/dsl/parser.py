"""Lexer and recursive-descent parser for .diag programs.

    program := "instance" instname item*
    item    := "obj" NAME "=" objexpr
             | "mor" NAME ":" objexpr "->" objexpr "=" morlit
             | "triple" NAME "=" tripleexpr
             | "print" "(" term ")"
             | "assert_equal" "(" term "," term ")"
    term    := tens (";" tens)*        ";" is diagrammatic (left runs first)
    tens    := atom ("*" atom)*        "*" binds tighter than ";"

`#` starts a line comment.  Numbers are unsigned rationals INT[/INT]; a
leading "-" is parsed where signed values are legal (matrix entries,
graded degrees).
"""

from __future__ import annotations

from ..errors import LexError, ParseError
from . import ast
from .ast import Span

SYMBOLS = ("->", "(", ")", "{", "}", "[", "]", ",", ":", ";", "*", "=", "-")

BUILTIN_TERMS = {"id", "s", "c", "theta", "ev", "coev", "trace_hat", "pairing"}


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind  # "name" | "number" | "symbol" | "eof"
        self.text = text
        self.line = line
        self.col = col

    @property
    def span(self):
        return Span(self.line, self.col)

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            tokens.append(Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(Token("number", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if text.startswith("->", i):
            tokens.append(Token("symbol", "->", line, start_col))
            i += 2
            col += 2
            continue
        if ch in "(){}[],:;*=-":
            tokens.append(Token("symbol", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise LexError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    # -- token helpers -----------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at_symbol(self, text) -> bool:
        t = self.peek()
        return t.kind == "symbol" and t.text == text

    def at_name(self, text=None) -> bool:
        t = self.peek()
        return t.kind == "name" and (text is None or t.text == text)

    def expect_symbol(self, text) -> Token:
        t = self.peek()
        if not self.at_symbol(text):
            raise ParseError(f"expected {text!r}, found {t.text!r}", t.line, t.col)
        return self.advance()

    def expect_name(self, text=None) -> Token:
        t = self.peek()
        if t.kind != "name" or (text is not None and t.text != text):
            want = repr(text) if text else "a name"
            raise ParseError(f"expected {want}, found {t.text!r}", t.line, t.col)
        return self.advance()

    def expect_number(self) -> Token:
        t = self.peek()
        if t.kind != "number":
            raise ParseError(f"expected a number, found {t.text!r}", t.line, t.col)
        return self.advance()

    def signed_number(self) -> str:
        if self.at_symbol("-"):
            self.advance()
            return "-" + self.expect_number().text
        return self.expect_number().text

    def unsigned_int(self) -> int:
        t = self.expect_number()
        if "/" in t.text:
            raise ParseError("expected an integer", t.line, t.col)
        return int(t.text)

    def signed_int(self) -> int:
        neg = False
        if self.at_symbol("-"):
            self.advance()
            neg = True
        v = self.unsigned_int()
        return -v if neg else v

    # -- grammar -----------------------------------------------------------

    def program(self) -> ast.Program:
        self.expect_name("instance")
        iid = self.instance_name()
        items = []
        while self.peek().kind != "eof":
            items.append(self.item())
        return ast.Program(instance_id=iid, items=tuple(items))

    def instance_name(self) -> str:
        t = self.expect_name()
        if t.text in ("finvect", "supervect", "rbord1"):
            return t.text
        if t.text == "graded":
            self.expect_symbol("(")
            self.expect_name("q")
            self.expect_symbol("=")
            q = self.signed_number()
            self.expect_symbol(")")
            return f"graded(q={q})"
        raise ParseError(f"unknown instance {t.text!r}", t.line, t.col)

    def item(self):
        t = self.peek()
        if t.kind != "name":
            raise ParseError(f"expected a declaration or command, found {t.text!r}", t.line, t.col)
        if t.text == "obj":
            return self.obj_decl()
        if t.text == "mor":
            return self.mor_decl()
        if t.text == "triple":
            return self.triple_decl()
        if t.text == "print":
            return self.print_cmd()
        if t.text == "assert_equal":
            return self.assert_cmd()
        raise ParseError(f"expected a declaration or command, found {t.text!r}", t.line, t.col)

    def obj_decl(self) -> ast.ObjDecl:
        kw = self.expect_name("obj")
        name = self.expect_name().text
        self.expect_symbol("=")
        return ast.ObjDecl(span=kw.span, name=name, expr=self.objexpr())

    def mor_decl(self) -> ast.MorDecl:
        kw = self.expect_name("mor")
        name = self.expect_name().text
        self.expect_symbol(":")
        src = self.objexpr()
        self.expect_symbol("->")
        tgt = self.objexpr()
        self.expect_symbol("=")
        return ast.MorDecl(span=kw.span, name=name, src=src, tgt=tgt, literal=self.morlit())

    def triple_decl(self) -> ast.TripleDecl:
        kw = self.expect_name("triple")
        name = self.expect_name().text
        self.expect_symbol("=")
        return ast.TripleDecl(span=kw.span, name=name, expr=self.tripleexpr())

    def print_cmd(self) -> ast.PrintCmd:
        kw = self.expect_name("print")
        self.expect_symbol("(")
        term = self.term()
        self.expect_symbol(")")
        return ast.PrintCmd(span=kw.span, term=term)

    def assert_cmd(self) -> ast.AssertCmd:
        kw = self.expect_name("assert_equal")
        self.expect_symbol("(")
        left = self.term()
        self.expect_symbol(",")
        right = self.term()
        self.expect_symbol(")")
        return ast.AssertCmd(span=kw.span, left=left, right=right)

    # -- object expressions ---------------------------------------------------

    def objexpr(self) -> ast.ObjExpr:
        left = self.objatom()
        while self.at_symbol("*"):
            op = self.advance()
            right = self.objatom()
            left = ast.ObjTensor(span=op.span, left=left, right=right)
        return left

    def objatom(self) -> ast.ObjExpr:
        t = self.peek()
        if t.kind == "number":
            self.advance()
            if "/" in t.text:
                raise ParseError("dimension must be an integer", t.line, t.col)
            return ast.ObjInt(span=t.span, dim=int(t.text))
        if self.at_symbol("("):
            self.advance()
            inner = self.objexpr()
            self.expect_symbol(")")
            return inner
        if t.kind != "name":
            raise ParseError(f"expected an object expression, found {t.text!r}", t.line, t.col)
        if t.text == "I":
            self.advance()
            return ast.ObjUnit(span=t.span)
        if t.text == "dual":
            self.advance()
            self.expect_symbol("(")
            inner = self.objexpr()
            self.expect_symbol(")")
            return ast.ObjDual(span=t.span, inner=inner)
        if t.text == "super":
            self.advance()
            self.expect_symbol("(")
            even = self.unsigned_int()
            self.expect_symbol(",")
            odd = self.unsigned_int()
            self.expect_symbol(")")
            return ast.ObjSuper(span=t.span, even=even, odd=odd)
        if t.text == "graded":
            self.advance()
            self.expect_symbol("{")
            entries = []
            if not self.at_symbol("}"):
                while True:
                    deg = self.signed_int()
                    self.expect_symbol(":")
                    dim = self.unsigned_int()
                    entries.append((deg, dim))
                    if self.at_symbol(","):
                        self.advance()
                        continue
                    break
            self.expect_symbol("}")
            return ast.ObjGraded(span=t.span, entries=tuple(entries))
        if t.text == "pts":
            self.advance()
            self.expect_symbol("{")
            labels = []
            if not self.at_symbol("}"):
                while True:
                    labels.append(self.expect_name().text)
                    if self.at_symbol(","):
                        self.advance()
                        continue
                    break
            self.expect_symbol("}")
            return ast.ObjPts(span=t.span, labels=tuple(labels))
        self.advance()
        return ast.ObjName(span=t.span, name=t.text)

    # -- morphism literals -------------------------------------------------------

    def morlit(self):
        t = self.peek()
        if self.at_symbol("["):
            return self.matrix_lit()
        if self.at_name("bord"):
            return self.bord_lit()
        if self.at_name("iso"):
            return self.iso_lit()
        raise ParseError(f"expected a morphism literal, found {t.text!r}", t.line, t.col)

    def matrix_lit(self) -> ast.MatrixLit:
        lb = self.expect_symbol("[")
        rows = []
        if not self.at_symbol("]"):
            while True:
                self.expect_symbol("[")
                row = []
                if not self.at_symbol("]"):
                    while True:
                        row.append(self.signed_number())
                        if self.at_symbol(","):
                            self.advance()
                            continue
                        break
                self.expect_symbol("]")
                rows.append(tuple(row))
                if self.at_symbol(","):
                    self.advance()
                    continue
                break
        self.expect_symbol("]")
        return ast.MatrixLit(span=lb.span, rows=tuple(rows))

    def bord_lit(self) -> ast.BordLit:
        kw = self.expect_name("bord")
        self.expect_symbol("{")
        entries = []
        if not self.at_symbol("}"):
            while True:
                entries.append(self.bord_entry())
                if self.at_symbol(","):
                    self.advance()
                    continue
                break
        self.expect_symbol("}")
        return ast.BordLit(span=kw.span, entries=tuple(entries))

    def bord_entry(self) -> ast.BordEntry:
        t = self.peek()
        if self.at_name("loop"):
            self.advance()
            self.expect_symbol(":")
            return ast.BordEntry(kind="loop", a="", b="", length=self.expect_number().text)
        if self.at_name("cap") or self.at_name("cup"):
            kind = self.advance().text
            a = self.expect_name().text
            b = self.expect_name().text
            self.expect_symbol(":")
            return ast.BordEntry(kind=kind, a=a, b=b, length=self.expect_number().text)
        a = self.expect_name().text
        self.expect_symbol("->")
        b = self.expect_name().text
        self.expect_symbol(":")
        return ast.BordEntry(kind="arc", a=a, b=b, length=self.expect_number().text)

    def iso_lit(self) -> ast.IsoLit:
        kw = self.expect_name("iso")
        self.expect_symbol("{")
        pairs = []
        if not self.at_symbol("}"):
            while True:
                a = self.expect_name().text
                self.expect_symbol("->")
                b = self.expect_name().text
                pairs.append((a, b))
                if self.at_symbol(","):
                    self.advance()
                    continue
                break
        self.expect_symbol("}")
        return ast.IsoLit(span=kw.span, pairs=tuple(pairs))

    # -- terms ----------------------------------------------------------------------

    def term(self) -> ast.Term:
        left = self.tensor_term()
        while self.at_symbol(";"):
            op = self.advance()
            right = self.tensor_term()
            # diagrammatic order: left executes first
            left = ast.Compose(span=op.span, after=right, before=left)
        return left

    def tensor_term(self) -> ast.Term:
        left = self.atom()
        while self.at_symbol("*"):
            op = self.advance()
            right = self.atom()
            left = ast.Tensor(span=op.span, left=left, right=right)
        return left

    def atom(self) -> ast.Term:
        t = self.peek()
        if self.at_symbol("("):
            self.advance()
            inner = self.term()
            self.expect_symbol(")")
            return ast.Paren(span=t.span, inner=inner)
        if t.kind != "name":
            raise ParseError(f"expected a term, found {t.text!r}", t.line, t.col)
        if t.text == "id":
            self.advance()
            self.expect_symbol("(")
            obj = self.objexpr()
            self.expect_symbol(")")
            return ast.Id(span=t.span, obj=obj)
        if t.text in ("s", "c"):
            self.advance()
            self.expect_symbol("(")
            x = self.objexpr()
            self.expect_symbol(",")
            y = self.objexpr()
            self.expect_symbol(")")
            node = ast.S if t.text == "s" else ast.C
            return node(span=t.span, x=x, y=y)
        if t.text == "theta":
            self.advance()
            self.expect_symbol("(")
            obj = self.objexpr()
            self.expect_symbol(")")
            return ast.Theta(span=t.span, obj=obj)
        if t.text in ("ev", "coev"):
            self.advance()
            self.expect_symbol("(")
            obj = self.objexpr()
            self.expect_symbol(")")
            node = ast.Ev if t.text == "ev" else ast.Coev
            return node(span=t.span, obj=obj)
        if t.text == "trace_hat":
            self.advance()
            self.expect_symbol("(")
            triple = self.tripleexpr()
            self.expect_symbol(")")
            return ast.TraceHat(span=t.span, triple=triple)
        if t.text == "pairing":
            self.advance()
            self.expect_symbol("(")
            f = self.term()
            self.expect_symbol(",")
            g = self.term()
            self.expect_symbol(")")
            return ast.Pairing(span=t.span, f=f, g=g)
        self.advance()
        return ast.Gen(span=t.span, name=t.text)

    def tripleexpr(self) -> ast.TripleExpr:
        t = self.peek()
        if self.at_name("cut"):
            self.advance()
            self.expect_symbol("(")
            term = self.term()
            self.expect_symbol(",")
            frac = self.expect_number().text
            self.expect_symbol(")")
            return ast.Cut(span=t.span, term=term, fraction=frac)
        if self.at_name("thicken"):
            self.advance()
            self.expect_symbol("(")
            term = self.term()
            self.expect_symbol(")")
            return ast.Thicken(span=t.span, term=term)
        name = self.expect_name()
        return ast.TripleName(span=name.span, name=name.text)


def parse(text_or_tokens) -> ast.Program:
    tokens = tokenize(text_or_tokens) if isinstance(text_or_tokens, str) else text_or_tokens
    parser = Parser(tokens)
    prog = parser.program()
    tail = parser.peek()
    if tail.kind != "eof":  # pragma: no cover - program() consumes to eof
        raise ParseError(f"unexpected trailing input {tail.text!r}", tail.line, tail.col)
    return prog
