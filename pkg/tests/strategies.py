"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from idealkit.monomial import MonomialIdeal
from idealkit.poly import Polynomial, Ring

RING = Ring(("x1", "x2"), ("y1", "y2"))

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def exponents(nvars=4, max_e=3):
    return st.tuples(*[st.integers(0, max_e)] * nvars)


@st.composite
def polynomials(draw, ring=RING, max_terms=4, max_e=3):
    terms = draw(st.dictionaries(exponents(ring.nvars, max_e), coeffs, max_size=max_terms))
    return Polynomial(ring, terms)


@st.composite
def block_exponent(draw, ring, block, max_deg=3):
    idx = list(ring.block_indices(block))
    e = [0] * ring.nvars
    for i in idx:
        e[i] = draw(st.integers(0, max_deg))
    if not any(e):
        e[idx[0]] = 1
    return tuple(e)


@st.composite
def monomial_ideals(draw, ring=RING, block=None, max_gens=4, max_deg=3):
    if block is None:
        gens = draw(st.lists(exponents(ring.nvars, max_deg).filter(any), min_size=1, max_size=max_gens))
    else:
        gens = draw(st.lists(block_exponent(ring, block, max_deg), min_size=1, max_size=max_gens))
    return MonomialIdeal(ring, gens)


@st.composite
def block_polynomials(draw, ring=RING, block="x", max_deg=2, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        terms[draw(block_exponent(ring, block, max_deg))] = Fraction(draw(st.integers(1, 3))) * draw(
            st.sampled_from([1, -1]))
    return Polynomial(ring, terms)
