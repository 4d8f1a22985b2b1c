"""Ideal-file parsing and canonical report serialization.

Input format: a "vars" header naming the ambient coordinates, then one
polynomial statement per ';'.  '#' starts a comment.  An optional
"assume pure_dimensional;" statement sets the corresponding flag.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json

from .polyring import GREVLEX, Polynomial


class ParseError(Exception):
    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass
class IdealFile:
    vars: tuple
    generators: list
    assume_pure_dimensional: bool = False
    source: str = "<memory>"


_PUNCT = set("+-*^(),;")


def _tokenize(text):
    """Yield (kind, value, line, col); kinds: ident, nat, punct, slash."""
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
        elif ch in " \t\r":
            i += 1
            col += 1
        elif ch == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("ident", text[start:i], line, col))
            col += i - start
        elif ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(("nat", text[start:i], line, col))
            col += i - start
        elif ch in _PUNCT:
            tokens.append(("punct", ch, line, col))
            i += 1
            col += 1
        elif ch == "/":
            tokens.append(("slash", ch, line, col))
            i += 1
            col += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message):
        kind, value, line, col = self.peek()
        shown = value if kind != "eof" else "end of input"
        raise ParseError(f"{message} (got {shown!r})", line, col)

    def expect_punct(self, ch):
        kind, value, _, _ = self.peek()
        if kind == "punct" and value == ch:
            return self.next()
        self.fail(f"expected {ch!r}")

    def expect_ident(self):
        kind, value, _, _ = self.peek()
        if kind == "ident":
            return self.next()[1]
        self.fail("expected identifier")

    def expect_nat(self):
        kind, value, _, _ = self.peek()
        if kind == "nat":
            return int(self.next()[1])
        self.fail("expected natural number")

    def at_punct(self, ch):
        kind, value, _, _ = self.peek()
        return kind == "punct" and value == ch

    # grammar: file := header stmt+ ; header := "vars" ident ("," ident)* ";"
    def parse_file(self):
        head = self.expect_ident()
        if head != "vars":
            self.fail("expected 'vars' header")
        names = [self.expect_ident()]
        while self.at_punct(","):
            self.next()
            names.append(self.expect_ident())
        self.expect_punct(";")
        if len(set(names)) != len(names):
            raise ParseError("duplicate variable name", 1, 1)
        self.vars = tuple(names)

        generators = []
        assume_pure = False
        while self.peek()[0] != "eof":
            kind, value, _, _ = self.peek()
            if kind == "ident" and value == "assume":
                self.next()
                word = self.expect_ident()
                if word != "pure_dimensional":
                    self.fail("unknown assumption")
                self.expect_punct(";")
                assume_pure = True
                continue
            generators.append(self.parse_expr())
            self.expect_punct(";")
        if not generators:
            kind, value, line, col = self.peek()
            raise ParseError("no generators", line, col)
        return self.vars, generators, assume_pure

    def parse_expr(self):
        acc = self.parse_term()
        while self.at_punct("+") or self.at_punct("-"):
            op = self.next()[1]
            rhs = self.parse_term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_term(self):
        acc = self.parse_factor()
        while self.at_punct("*"):
            self.next()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self):
        base = self.parse_base()
        if self.at_punct("^"):
            self.next()
            return base ** self.expect_nat()
        return base

    def parse_base(self):
        kind, value, line, col = self.peek()
        if kind == "ident":
            self.next()
            if value not in self.vars:
                raise ParseError(f"unknown variable {value!r}", line, col)
            return Polynomial.variable(self.vars, value, GREVLEX)
        if kind == "nat":
            self.next()
            num = int(value)
            if self.peek()[0] == "slash":
                self.next()
                den = self.expect_nat()
                if den == 0:
                    raise ParseError("zero denominator", line, col)
                return Polynomial.constant(self.vars, Fraction(num, den), GREVLEX)
            return Polynomial.constant(self.vars, num, GREVLEX)
        if kind == "punct" and value == "(":
            self.next()
            inner = self.parse_expr()
            self.expect_punct(")")
            return inner
        if kind == "punct" and value == "-":
            self.next()
            return -self.parse_factor()
        self.fail("expected variable, number, '(' or '-'")


def parse_ideal(text, source="<memory>"):
    """Parse an ideal file into variables, generators, and flags."""
    p = _Parser(text)
    vars, generators, assume_pure = p.parse_file()
    return IdealFile(vars=vars, generators=generators,
                     assume_pure_dimensional=assume_pure, source=source)


def format_ideal(ideal):
    """Render an IdealFile back to input syntax; parses to the same content."""
    lines = ["vars " + ", ".join(ideal.vars) + ";"]
    if ideal.assume_pure_dimensional:
        lines.append("assume pure_dimensional;")
    for g in ideal.generators:
        lines.append(str(g) + ";")
    return "\n".join(lines) + "\n"


# --- report serialization ---

def _emit(value, indent, out):
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (k, v) in enumerate(value.items()):
            assert isinstance(k, str), k
            out.append(pad + "  " + json.dumps(k) + ": ")
            _emit(v, indent + 1, out)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(value):
            out.append(pad + "  ")
            _emit(v, indent + 1, out)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(value, bool) or value is None:
        out.append(json.dumps(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(_float_repr(value))
    elif isinstance(value, Fraction):
        out.append(json.dumps(str(value)))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def _float_repr(x):
    """12 significant digits, always a valid JSON number."""
    assert x == x and x not in (float("inf"), float("-inf")), x
    s = f"{x:.12g}"
    return s


def emit_report(report):
    """Serialize a report dict to deterministic JSON text."""
    out = []
    _emit(report, 0, out)
    out.append("\n")
    return "".join(out)
