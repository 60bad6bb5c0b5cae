"""Pure-Python inner loops. Reference implementation for ``_ckernels``."""


def convolve(a, b):
    """Coefficient lists of two integer polynomials -> product coefficients."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def convolve_mod(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return out


def axpy(acc, c, b):
    """In place ``acc += c * b``; ``acc`` must be at least as long as ``b``."""
    if c == 0:
        return
    for i, bi in enumerate(b):
        acc[i] += c * bi


def horner_mod(coeffs, x, p):
    r = 0
    for c in reversed(coeffs):
        r = (r * x + c) % p
    return r
