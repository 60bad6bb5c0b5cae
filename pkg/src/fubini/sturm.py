"""Sturm-sequence real-root counting in exact rational arithmetic."""

from fractions import Fraction

from fubini.poly import IntPoly, RatPoly, gcd


def _as_rat(f):
    if isinstance(f, IntPoly):
        return f.to_rat()
    if isinstance(f, RatPoly):
        return f
    return RatPoly(f)


def squarefree_part(f):
    f = _as_rat(f)
    if f.degree <= 0:
        return f.monic()
    return (f // gcd(f, f.derivative())).monic()


def sturm_chain(f):
    f = _as_rat(f)
    chain = [f, f.derivative()]
    while chain[-1]:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign(v):
    return (v > 0) - (v < 0)


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def variations_at(chain, x):
    return _variations([_sign(p(x)) for p in chain])


def variations_at_neg_inf(chain):
    return _variations([_sign(p.leading) * (-1) ** p.degree for p in chain])


def variations_at_pos_inf(chain):
    return _variations([_sign(p.leading) for p in chain])


def count_real_roots(f):
    """Number of distinct real roots of a nonzero polynomial."""
    chain = sturm_chain(squarefree_part(f))
    return variations_at_neg_inf(chain) - variations_at_pos_inf(chain)


def sturm_count_nonpositive(f):
    """Distinct real roots of ``f`` in (-inf, 0], and the squarefree degree.

    A root at 0 is detected from the constant term of the squarefree part
    and deflated, so the chain is only ever evaluated at a non-root.
    """
    f = _as_rat(f)
    if not f:
        raise ValueError("zero polynomial has no finite root count")
    g = squarefree_part(f)
    sqf_degree = g.degree
    at_zero = 0
    if g.degree > 0 and g[0] == 0:
        at_zero = 1
        g = g.div_xk(1)
    if g.degree <= 0:
        return at_zero, sqf_degree
    chain = sturm_chain(g)
    below = variations_at_neg_inf(chain) - variations_at(chain, Fraction(0))
    return below + at_zero, sqf_degree
