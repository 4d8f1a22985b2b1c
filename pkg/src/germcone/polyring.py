"""Exact multivariate polynomial arithmetic over Q with pluggable monomial orders."""

from fractions import Fraction


# --- monomials are plain exponent tuples ---

def m_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def m_divides(a, b):
    """True if a divides b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def m_div(a, b):
    """Quotient a/b, caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def m_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def m_deg(a):
    return sum(a)


class MonomialOrder:
    """Total multiplicative order on exponent tuples, selected by kind.

    grevlex and grlex are degree-compatible.  gradedfirst is graded with the
    first variable dominating inside each degree, then grevlex on the rest;
    it is the elimination-flavored order used for cone computations.
    """

    __slots__ = ("kind", "is_graded")

    def __init__(self, kind):
        assert kind in ("grevlex", "grlex", "lex", "gradedfirst"), kind
        self.kind = kind
        self.is_graded = kind != "lex"

    def key(self, m):
        if self.kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.kind == "grlex":
            return (sum(m), m)
        if self.kind == "lex":
            return m
        return (sum(m), m[0], tuple(-e for e in reversed(m[1:])))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")
LEX = MonomialOrder("lex")
GRADED_FIRST = MonomialOrder("gradedfirst")


class Polynomial:
    """Immutable polynomial: vars, order, and terms sorted descending."""

    __slots__ = ("vars", "order", "terms")

    def __init__(self, vars, terms, order=GREVLEX):
        self.vars = tuple(vars)
        self.order = order
        combined = {}
        for mono, coeff in (terms.items() if isinstance(terms, dict) else terms):
            mono = tuple(mono)
            assert len(mono) == len(self.vars), (mono, self.vars)
            assert all(e >= 0 for e in mono), mono
            c = combined.get(mono, 0) + Fraction(coeff)
            if c:
                combined[mono] = c
            elif mono in combined:
                del combined[mono]
        self.terms = tuple(sorted(combined.items(),
                                  key=lambda t: order.key(t[0]), reverse=True))

    # --- constructors ---

    @classmethod
    def zero(cls, vars, order=GREVLEX):
        return cls(vars, {}, order)

    @classmethod
    def constant(cls, vars, c, order=GREVLEX):
        return cls(vars, {(0,) * len(vars): Fraction(c)}, order)

    @classmethod
    def variable(cls, vars, name, order=GREVLEX):
        i = tuple(vars).index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, {mono: Fraction(1)}, order)

    # --- predicates and accessors ---

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m_deg(m) == 0 for m, _ in self.terms)

    def constant_value(self):
        assert self.is_constant()
        return self.terms[0][1] if self.terms else Fraction(0)

    def terms_dict(self):
        return dict(self.terms)

    def leading_term(self):
        assert self.terms, "zero polynomial has no leading term"
        return self.terms[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def degree(self):
        """Total degree, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m_deg(m) for m, _ in self.terms)

    def min_degree(self):
        """Order of vanishing at the origin, -1 for zero."""
        if not self.terms:
            return -1
        return min(m_deg(m) for m, _ in self.terms)

    def is_homogeneous(self):
        degs = {m_deg(m) for m, _ in self.terms}
        return len(degs) <= 1

    # --- arithmetic ---

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            assert other.vars == self.vars, (other.vars, self.vars)
            assert other.order == self.order, "mixed orders, convert explicitly"
            return other
        return Polynomial.constant(self.vars, other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.terms)
        for mono, coeff in other.terms:
            c = d.get(mono, 0) + coeff
            if c:
                d[mono] = c
            elif mono in d:
                del d[mono]
        return Polynomial(self.vars, d, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {m: -c for m, c in self.terms}, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m_mul(m1, m2)
                c = d.get(m, 0) + c1 * c2
                if c:
                    d[m] = c
                elif m in d:
                    del d[m]
        return Polynomial(self.vars, d, self.order)

    __rmul__ = __mul__

    def __pow__(self, e):
        assert isinstance(e, int) and e >= 0, e
        result = Polynomial.constant(self.vars, 1, self.order)
        for _ in range(e):
            result = result * self
        return result

    def scale_term(self, mono, coeff):
        """Multiply by the single term coeff * x^mono."""
        mono = tuple(mono)
        return Polynomial(self.vars,
                          {m_mul(m, mono): c * coeff for m, c in self.terms},
                          self.order)

    def monic(self):
        if not self.terms:
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        return Polynomial(self.vars, {m: c / lc for m, c in self.terms}, self.order)

    # --- structure maps ---

    def with_order(self, order):
        if order == self.order:
            return self
        return Polynomial(self.vars, dict(self.terms), order)

    def with_vars(self, newvars):
        """Reinterpret in a ring whose variables include the current ones."""
        newvars = tuple(newvars)
        pos = [newvars.index(v) for v in self.vars]
        n = len(newvars)
        d = {}
        for m, c in self.terms:
            mm = [0] * n
            for i, e in enumerate(m):
                mm[pos[i]] = e
            d[tuple(mm)] = c
        return Polynomial(newvars, d, self.order)

    def derivative(self, name):
        i = self.vars.index(name)
        d = {}
        for m, c in self.terms:
            if m[i] == 0:
                continue
            mm = list(m)
            mm[i] -= 1
            mono = tuple(mm)
            cc = d.get(mono, 0) + c * m[i]
            if cc:
                d[mono] = cc
            elif mono in d:
                del d[mono]
        return Polynomial(self.vars, d, self.order)

    def substitute(self, assignments):
        """Pin named variables to rational constants, dropping them from the ring."""
        for name in assignments:
            assert name in self.vars, name
        keep = [i for i, v in enumerate(self.vars) if v not in assignments]
        vals = {i: Fraction(assignments[v]) for i, v in enumerate(self.vars)
                if v in assignments}
        d = {}
        for m, c in self.terms:
            for i, val in vals.items():
                c = c * val ** m[i]
            if c == 0:
                continue
            mono = tuple(m[i] for i in keep)
            cc = d.get(mono, 0) + c
            if cc:
                d[mono] = cc
            elif mono in d:
                del d[mono]
        return Polynomial(tuple(self.vars[i] for i in keep), d, self.order)

    def evaluate(self, point):
        """Exact value at a rational point given as {name: value}."""
        total = Fraction(0)
        vals = [Fraction(point[v]) for v in self.vars]
        for m, c in self.terms:
            for i, e in enumerate(m):
                if e:
                    c = c * vals[i] ** e
            total += c
        return total

    # --- equality ignores the attached order ---

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if self.is_constant():
                return self.constant_value() == other
            return NotImplemented
        return self.vars == other.vars and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms)))

    # --- printing, parseable by the input grammar ---

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.terms:
            factors = []
            for v, e in zip(self.vars, mono):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            a = abs(coeff)
            if not factors:
                body = _frac_str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = _frac_str(a) + "*" + "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial<{self}>"


def _frac_str(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def divide(f, divisors, order):
    """Multivariate division: f = sum(q_i * divisors_i) + r.

    Divisors are tried in list order at every step.  No monomial of the
    remainder is divisible by any divisor's leading monomial.
    """
    assert all(not d.is_zero() for d in divisors), "zero divisor"
    quotients = [Polynomial.zero(f.vars, order) for _ in divisors]
    remainder = {}
    lead = [(d.with_order(order)) for d in divisors]
    p = dict(f.terms)
    key = order.key
    while p:
        mono = max(p, key=key)
        coeff = p.pop(mono)
        for i, d in enumerate(lead):
            lm, lc = d.leading_term()
            if m_divides(lm, mono):
                q = m_div(mono, lm)
                factor = coeff / lc
                quotients[i] = quotients[i] + Polynomial(
                    f.vars, {q: factor}, order)
                for m2, c2 in d.terms[1:]:
                    mm = m_mul(q, m2)
                    c = p.get(mm, 0) - factor * c2
                    if c:
                        p[mm] = c
                    elif mm in p:
                        del p[mm]
                break
        else:
            remainder[mono] = coeff
    return quotients, Polynomial(f.vars, remainder, order)
