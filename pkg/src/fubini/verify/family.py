"""Seeded test families: the polynomials f, g fed to the umbral checks and
the coefficient vectors a_0(x)..a_t(x) used by the R_{n,t} checks."""

from functools import lru_cache
import random

from fubini.poly import IntPoly

MONOMIAL_DEGREE = 6
RANDOM_COUNT = 20
RANDOM_DEGREE = 6
COEFF_RANGE = 9


@lru_cache(maxsize=None)
def poly_family(seed=0, random_count=RANDOM_COUNT):
    """u^0..u^6 followed by ``random_count`` random integer polynomials."""
    rng = random.Random(seed)
    family = [IntPoly.monomial(d) for d in range(MONOMIAL_DEGREE + 1)]
    for _ in range(random_count):
        family.append(
            IntPoly(rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(RANDOM_DEGREE + 1))
        )
    return tuple(family)


@lru_cache(maxsize=None)
def a_family(seed=0, random_count=2):
    """Coefficient vectors (a_0(x), ..., a_t(x)): three fixed, then random."""
    x = IntPoly.x()
    family = [(IntPoly([1]),), (IntPoly(), IntPoly([1])), (x,)]
    rng = random.Random(f"a-family:{seed}")
    for _ in range(random_count):
        t = rng.randint(1, 2)
        family.append(
            tuple(
                IntPoly(rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(3))
                for _ in range(t + 1)
            )
        )
    return tuple(family)
