"""Dense univariate polynomial arithmetic over an exact coefficient field.

Polynomials are immutable tuples of field payloads in little-endian order
(coefficient of X^i at index i), normalized so the last entry is nonzero.
The empty tuple () is the zero polynomial.  All functions take the
coefficient field as first argument and never mutate their inputs.
"""

from __future__ import annotations

import itertools


def normalize(F, coeffs):
    cs = list(coeffs)
    while cs and F.is_zero(cs[-1]):
        cs.pop()
    return tuple(cs)


def deg(p):
    """Degree; -1 for the zero polynomial."""
    return len(p) - 1


def is_zero(p):
    return not p


def constant(F, c):
    return () if F.is_zero(c) else (c,)


def monomial(F, c, n):
    if F.is_zero(c):
        return ()
    return (F.zero(),) * n + (c,)


def add(F, p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = F.add(out[i], c)
    return normalize(F, out)


def neg(F, p):
    return tuple(F.neg(c) for c in p)


def sub(F, p, q):
    return add(F, p, neg(F, q))


def mul(F, p, q):
    if not p or not q:
        return ()
    out = [F.zero()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if F.is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return normalize(F, out)


def scale(F, c, p):
    if F.is_zero(c):
        return ()
    return normalize(F, [F.mul(c, a) for a in p])


def divmod_(F, p, q):
    """Quotient and remainder; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = deg(q)
    lead_inv = F.inv(q[-1])
    quot = [F.zero()] * max(0, len(p) - dq)
    for i in range(len(p) - 1, dq - 1, -1):
        if F.is_zero(rem[i]):
            continue
        c = F.mul(rem[i], lead_inv)
        quot[i - dq] = c
        for j in range(dq + 1):
            rem[i - dq + j] = F.sub(rem[i - dq + j], F.mul(c, q[j]))
    return normalize(F, quot), normalize(F, rem)


def mod(F, p, q):
    return divmod_(F, p, q)[1]


def gcd(F, p, q):
    while q:
        p, q = q, mod(F, p, q)
    return monic(F, p)


def monic(F, p):
    if not p or F.eq(p[-1], F.one()):
        return p
    return scale(F, F.inv(p[-1]), p)


def evaluate(F, p, x):
    acc = F.zero()
    for c in reversed(p):
        acc = F.add(F.mul(acc, x), c)
    return acc


def derivative(F, p):
    out = []
    for i in range(1, len(p)):
        ci = p[i]
        s = F.zero()
        for _ in range(i):
            s = F.add(s, ci)
        out.append(s)
    return normalize(F, out)


def pow_mod(F, p, n, m):
    """p^n mod m by square-and-multiply."""
    result = (F.one(),)
    base = mod(F, p, m)
    while n > 0:
        if n & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        n >>= 1
    return result


def x_poly(F):
    return (F.zero(), F.one())


def shift(F, p, n):
    """Multiply by X^n (n >= 0) or divide exactly by X^-n (n < 0)."""
    if not p:
        return ()
    if n >= 0:
        return (F.zero(),) * n + p
    if any(not F.is_zero(c) for c in p[:-n]):
        raise ValueError("not divisible by X^%d" % (-n))
    return p[-n:]


def low_valuation(F, p):
    """Largest n with X^n dividing p; p must be nonzero."""
    for i, c in enumerate(p):
        if not F.is_zero(c):
            return i
    raise ValueError("zero polynomial")


def monic_polys(F, d):
    """All monic polynomials of degree exactly d over a finite field."""
    els = list(F.elements())
    for lower in itertools.product(els, repeat=d):
        yield normalize(F, lower + (F.one(),))


def is_irreducible(F, p):
    """Irreducibility over a finite field by trial division."""
    d = deg(p)
    if d <= 0:
        return False
    if d == 1:
        return True
    for e in range(1, d // 2 + 1):
        for q in monic_polys(F, e):
            if deg(q) >= 1 and is_zero(mod(F, p, q)):
                return False
    return True


def factor_monic(F, p):
    """Factor a nonzero polynomial over a finite field by trial division.

    Returns (lead_coeff, [(irreducible_monic, multiplicity), ...]).
    Fine for the small degrees that show up in place computations.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    lead = p[-1]
    p = monic(F, p)
    factors = []
    d = 1
    while deg(p) > 0:
        if d > deg(p) // 2:
            factors.append((p, 1))
            break
        found = False
        for q in monic_polys(F, d):
            if deg(q) < 1:
                continue
            if is_zero(mod(F, p, q)):
                mult = 0
                while is_zero(mod(F, p, q)):
                    p = divmod_(F, p, q)[0]
                    mult += 1
                factors.append((q, mult))
                found = True
                if deg(p) == 0:
                    break
        if not found:
            d += 1
    return lead, factors


def sqrt(F, p):
    """Exact square root of a polynomial, or None.

    Char != 2: leading-coefficient root plus top-down coefficient recovery.
    Char 2: termwise Frobenius inverse (only even exponents can appear).
    """
    if not p:
        return ()
    d = deg(p)
    if d % 2 != 0:
        return None
    if F.char == 2:
        out = [F.zero()] * (d // 2 + 1)
        for i, c in enumerate(p):
            if F.is_zero(c):
                continue
            if i % 2 != 0:
                return None
            ok, w = F.is_square(c)
            if not ok:
                return None
            out[i // 2] = w
        q = normalize(F, out)
        return q if mul(F, q, q) == p else None
    ok, lead_root = F.is_square(p[-1])
    if not ok:
        return None
    h = d // 2
    q = [F.zero()] * (h + 1)
    q[h] = lead_root
    two = F.add(F.one(), F.one())
    inv_2lead = F.inv(F.mul(two, lead_root))
    # coefficient of X^(h+i) in q^2 must match p for i = h-1 .. 0
    for i in range(h - 1, -1, -1):
        s = F.zero()
        for j in range(i + 1, h):
            if i + h - j <= h:
                s = F.add(s, F.mul(q[j], q[i + h - j]))
        target = p[i + h] if i + h < len(p) else F.zero()
        q[i] = F.mul(F.sub(target, s), inv_2lead)
    q = normalize(F, q)
    return q if mul(F, q, q) == p else None
