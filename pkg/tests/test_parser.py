"""Grammar, error positions, and the format/parse round trip."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from germcone.parser import IdealFile, ParseError, format_ideal, parse_ideal
from germcone.polyring import Polynomial

WORKED = """\
vars x, y, z;
x*(x - z^3)*(x - 2*z^2);
y*(y - z^3)*(y - 2*z^2);
(x + y)*(x + y - z^3);
"""


def test_worked_input_parses():
    ideal = parse_ideal(WORKED, source="worked")
    assert ideal.vars == ("x", "y", "z")
    assert [g.degree() for g in ideal.generators] == [6, 6, 4]
    assert ideal.assume_pure_dimensional is False
    assert ideal.source == "worked"


def test_expansion_is_exact():
    ideal = parse_ideal("vars x, y;\n(x + y)^3;\n")
    f = ideal.generators[0]
    x = Polynomial.variable(("x", "y"), "x")
    y = Polynomial.variable(("x", "y"), "y")
    assert f == (x + y) * (x + y) * (x + y)


def test_rational_coefficients():
    f = parse_ideal("vars x;\n2/3*x - 1/6;\n").generators[0]
    assert f.terms_dict() == {(1,): Fraction(2, 3), (0,): Fraction(-1, 6)}


def test_assume_directive():
    ideal = parse_ideal("vars x, y;\nassume pure_dimensional;\nx*y;\n")
    assert ideal.assume_pure_dimensional is True


def test_comments_and_unary_minus():
    text = "vars x, y;  # two variables\n-x^2 - -y;  # note the double minus\n"
    f = parse_ideal(text).generators[0]
    x = Polynomial.variable(("x", "y"), "x")
    y = Polynomial.variable(("x", "y"), "y")
    assert f == y - x * x


def test_zero_exponent():
    gens = parse_ideal("vars x;\nx^0;\n").generators
    assert gens[0] == Polynomial.constant(("x",), 1)


@pytest.mark.parametrize("text,line,col,fragment", [
    ("vars x;\nx + ;\n", 2, 5, "expected variable"),
    ("vars x, x;\nx;\n", 1, 1, "duplicate variable"),
    ("vars x;\n", 2, 1, "no generators"),
    ("vars x;\nx @ x;\n", 2, 3, "unexpected character '@'"),
    ("vars x;\ny;\n", 2, 1, "unknown variable 'y'"),
    ("vars x;\n1/0*x;\n", 2, 1, "zero denominator"),
    ("vars x;\n2x;\n", 2, 2, "expected ';'"),
    ("x^2;\n", 1, 2, "expected 'vars' header"),
    ("vars x;\nx^2\n", 3, 1, "expected ';'"),
])
def test_error_positions(text, line, col, fragment):
    with pytest.raises(ParseError) as exc:
        parse_ideal(text)
    assert exc.value.line == line
    assert exc.value.col == col
    assert fragment in exc.value.message
    assert str(exc.value).startswith(f"line {line}, col {col}: ")


def test_star_is_mandatory():
    with pytest.raises(ParseError):
        parse_ideal("vars x, y;\nx y;\n")
    with pytest.raises(ParseError):
        parse_ideal("vars x, y;\n2(x + y);\n")


# --- round trip ---

names = st.sampled_from([("x",), ("x", "y"), ("x", "y", "z")])


@st.composite
def ideal_files(draw):
    vars = draw(names)
    coeff = st.fractions(min_value=-6, max_value=6,
                         max_denominator=5).filter(lambda q: q != 0)
    mono = st.tuples(*(st.integers(0, 3) for _ in vars))
    poly = st.builds(
        lambda d: Polynomial(vars, d),
        st.dictionaries(mono, coeff, min_size=1, max_size=4))
    gens = draw(st.lists(poly.filter(lambda p: not p.is_zero()),
                         min_size=1, max_size=3))
    assume = draw(st.booleans())
    return IdealFile(vars=vars, generators=gens,
                     assume_pure_dimensional=assume)


@given(ideal_files())
def test_format_parse_round_trip(ideal):
    text = format_ideal(ideal)
    back = parse_ideal(text)
    assert back.vars == ideal.vars
    assert back.generators == ideal.generators
    assert back.assume_pure_dimensional == ideal.assume_pure_dimensional


def test_format_layout():
    x = Polynomial.variable(("x",), "x")
    text = format_ideal(IdealFile(vars=("x",), generators=[x * x - x]))
    assert text == "vars x;\nx^2 - x;\n"
