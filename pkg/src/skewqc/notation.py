"""Text codec for skew polynomials.

The wire format is a *coefficient string*: the tokens of the coefficients in
increasing powers of x.  For GF(4) the four tokens are ``0 1 a a^2`` and the
string is written densely with no separators, e.g. ``a001aa^21`` reads as

    a + x^3 + a*x^4 + a^2*x^5 + x^6

For GF(2) the dense alphabet is ``0 1``.  For every other field the tokens
(``0``, ``1``, ``g``, ``g^k`` for a fixed generator g, or plain digits for a
prime field) are separated by whitespace or commas.
"""

from __future__ import annotations

from typing import List

from .field import FieldSpec
from .skewpoly import SkewPoly


def _tokenize_gf4(text: str) -> List[int]:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "0":
            out.append(0)
            i += 1
        elif ch == "1":
            out.append(1)
            i += 1
        elif ch == "a":
            if text[i + 1 : i + 3] == "^2":
                out.append(3)
                i += 3
            elif text[i + 1 : i + 2] == "^":
                raise ValueError(f"bad exponent after 'a^' at position {i}")
            else:
                out.append(2)
                i += 1
        else:
            raise ValueError(f"invalid character {ch!r} at position {i}")
    return out


def _tokenize_gf2(text: str) -> List[int]:
    out = []
    for i, ch in enumerate(text):
        if ch not in "01":
            raise ValueError(f"invalid character {ch!r} at position {i}")
        out.append(int(ch))
    return out


def parse_coeff_string(field: FieldSpec, text: str) -> SkewPoly:
    """Parse a coefficient string (increasing powers) into a SkewPoly."""
    cleaned = text.replace(",", " ")
    if field.q in (2, 4):
        cleaned = "".join(cleaned.split())
        if not cleaned:
            raise ValueError("empty coefficient string")
        coeffs = _tokenize_gf4(cleaned) if field.q == 4 else _tokenize_gf2(cleaned)
    else:
        parts = cleaned.split()
        if not parts:
            raise ValueError("empty coefficient string")
        coeffs = [field.parse_token(tok) for tok in parts]
    return SkewPoly(field, coeffs)


def poly_coeff_string(f: SkewPoly) -> str:
    """Inverse of parse_coeff_string; the zero polynomial prints as '0'."""
    if f.is_zero:
        return "0"
    tokens = [f.field.tokens[c] for c in f.coeffs]
    return "".join(tokens) if f.field.q in (2, 4) else " ".join(tokens)


def poly_to_terms(f: SkewPoly) -> str:
    """Human-readable form, highest power first, e.g. 'x^3 + a^2*x^2 + 1'."""
    if f.is_zero:
        return "0"
    tokens = f.field.tokens
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if not c:
            continue
        tok = tokens[c]
        if k == 0:
            parts.append(tok)
        else:
            xs = "x" if k == 1 else f"x^{k}"
            parts.append(xs if c == 1 else f"{tok}*{xs}")
    return " + ".join(parts)
