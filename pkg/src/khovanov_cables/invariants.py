"""Classical invariants read off a bigraded dimension table."""

from __future__ import annotations


def poincare_text(dims: dict) -> str:
    """Dimension table as a polynomial string, monomials sorted by homological
    degree then quantum degree, both ascending.

    Accepts {(h, q): dim} or {h: dim} tables.
    """
    terms = []
    for key in sorted(dims):
        d = dims[key]
        if d == 0:
            continue
        if isinstance(key, tuple):
            h, q = key
            mono = _mono("t", h) + _mono("q", q)
        else:
            mono = _mono("t", key)
        if not mono:
            terms.append(str(d))
        elif d == 1:
            terms.append(mono)
        else:
            terms.append(f"{d}*{mono}")
    return " + ".join(terms) if terms else "0"


def _mono(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if e >= 0 else f"{var}^({e})"


def graded_euler(dims: dict[tuple[int, int], int]) -> dict[int, int]:
    """Coefficients of sum_h (-1)^h q^j dim^{h,j} as {exponent: coeff}."""
    poly: dict[int, int] = {}
    for (h, q), d in dims.items():
        poly[q] = poly.get(q, 0) + (-1) ** (h % 2) * d
    return {e: c for e, c in poly.items() if c}


def determinant_from_dims(dims: dict[tuple[int, int], int]) -> int:
    """Knot determinant from an undeformed dimension table.

    Divides the graded Euler characteristic by q + q^-1 and evaluates the
    quotient at q^2 = -1. Only valid for knots (odd quantum gradings).
    """
    poly = graded_euler(dims)
    assert all(e % 2 == 1 for e in poly), "determinant helper expects a knot table"
    quotient: dict[int, int] = {}
    # divide by (q + q^-1), top down: P = (q + 1/q) Q
    work = dict(poly)
    while work:
        top = max(work)
        c = work.pop(top)
        if c == 0:
            continue
        e = top - 1
        quotient[e] = quotient.get(e, 0) + c
        low = e - 1
        work[low] = work.get(low, 0) - c
        if work.get(low) == 0:
            work.pop(low)
    total = 0
    for e, c in quotient.items():
        assert e % 2 == 0, "quotient has odd exponents; not a knot table"
        total += c * (-1) ** ((e // 2) % 2)
    return abs(total)
