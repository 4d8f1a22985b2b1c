"""Buchberger's algorithm and the homogenization route to tangent cones."""

from dataclasses import dataclass, field

from .localforms import initial_part
from .polyring import (GRADED_FIRST, GREVLEX, Polynomial, divide,
                       m_deg, m_div, m_lcm, m_mul)

PAIR_BUDGET = 10 ** 6


class ResourceLimitExceeded(Exception):
    """A configured work budget was exhausted; results are not truncated silently."""


class GermEmptyError(Exception):
    """The ideal contains a unit, so the germ misses the origin."""


@dataclass
class GroebnerBasis:
    order: object
    basis: list
    source: list = field(default_factory=list)
    reductions: int = 0

    def is_unit_ideal(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()


@dataclass
class TangentConeIdeal:
    vars: tuple
    generators: list


def spoly(f, g, order):
    """S-polynomial, cancelling the leading terms of f and g."""
    lm_f, lc_f = f.leading_term()
    lm_g, lc_g = g.leading_term()
    u = m_lcm(lm_f, lm_g)
    return (f.scale_term(m_div(u, lm_f), 1 / lc_f)
            - g.scale_term(m_div(u, lm_g), 1 / lc_g))


def _chain_skip(i, j, lcm_ij, basis, pending):
    # Buchberger's second criterion: some h divides the lcm and both
    # cross pairs were already handled.
    for h in range(len(basis)):
        if h == i or h == j:
            continue
        if not all(a <= b for a, b in zip(basis[h].leading_monomial(), lcm_ij)):
            continue
        if (min(i, h), max(i, h)) in pending:
            continue
        if (min(j, h), max(j, h)) in pending:
            continue
        return True
    return False


def buchberger(gens, order, budget=PAIR_BUDGET):
    """Reduced Groebner basis of the given generators under order."""
    assert gens, "empty generator list"
    assert all(not g.is_zero() for g in gens), "zero generator"
    source = [g.with_order(order) for g in gens]

    basis = []
    for g in source:
        g = g.monic()
        if g not in basis:
            basis.append(g)
    pending = {(i, j) for j in range(len(basis)) for i in range(j)}
    reductions = 0

    def pair_key(p):
        i, j = p
        u = m_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        return (order.key(u), i, j)

    while pending:
        i, j = min(pending, key=pair_key)
        pending.remove((i, j))
        lm_i = basis[i].leading_monomial()
        lm_j = basis[j].leading_monomial()
        u = m_lcm(lm_i, lm_j)
        if u == m_mul(lm_i, lm_j):
            continue
        if _chain_skip(i, j, u, basis, pending):
            continue
        reductions += 1
        if reductions > budget:
            raise ResourceLimitExceeded(
                f"groebner: pair reduction budget {budget} exhausted")
        _, r = divide(spoly(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            basis.append(r.monic())
            t = len(basis) - 1
            pending.update((i2, t) for i2 in range(t))

    basis = _minimalize(basis, order)
    basis = _interreduce(basis, order)
    basis.sort(key=lambda g: order.key(g.leading_monomial()))
    return GroebnerBasis(order=order, basis=basis, source=source,
                         reductions=reductions)


def _minimalize(basis, order):
    ranked = sorted(basis, key=lambda g: order.key(g.leading_monomial()))
    kept = []
    for g in ranked:
        lm = g.leading_monomial()
        if not any(all(a <= b for a, b in zip(h.leading_monomial(), lm))
                   for h in kept):
            kept.append(g)
    return kept


def _interreduce(basis, order):
    basis = list(basis)
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            if not others:
                continue
            _, r = divide(basis[i], others, order)
            assert not r.is_zero(), "minimal basis element reduced away"
            r = r.monic()
            if r != basis[i]:
                basis[i] = r
                changed = True
    return basis


def _fresh_name(vars, base="w"):
    name = base
    while name in vars:
        name = name + base
    return name


def homogenize(f, ext_vars):
    """Lift f to ext_vars (homogenizing variable first) at its total degree."""
    d = f.degree()
    terms = {(d - m_deg(m),) + m: c for m, c in f.terms}
    return Polynomial(ext_vars, terms, GRADED_FIRST)


def tangent_cone(gens, budget=PAIR_BUDGET):
    """Generators of the initial ideal of (gens), as a reduced grevlex basis.

    Each generator is homogenized by a fresh variable placed first in a
    graded order that ranks it above the others, so setting it back to 1
    turns leading terms into initial forms of standard-basis elements.
    """
    assert gens, "empty generator list"
    vars = gens[0].vars
    assert all(g.vars == vars for g in gens), "mixed variable tuples"
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("every generator is 0; the zero ideal cuts nothing")
    for g in gens:
        if g.min_degree() == 0:
            raise GermEmptyError(
                "a generator has a nonzero constant term; the germ misses 0")

    w = _fresh_name(vars)
    ext = (w,) + vars
    lifted = [homogenize(g, ext) for g in gens]
    gb = buchberger(lifted, GRADED_FIRST, budget)

    inits = []
    for g in gb.basis:
        flat = g.substitute({w: 1}).with_order(GREVLEX)
        init = initial_part(flat).init
        if init.min_degree() == 0:
            raise GermEmptyError("unit ideal: the germ misses 0")
        if init not in inits:
            inits.append(init)

    # a second (cheap, homogeneous) run canonicalizes and drops redundancy
    reduced = buchberger(inits, GREVLEX, budget)
    return TangentConeIdeal(vars=vars, generators=list(reduced.basis))
