"""Dense univariate polynomials in two coefficient kinds.

Coefficients are stored low degree first.  The "rational" kind holds exact
Fractions; the "complex" kind holds machine complex numbers (real inputs
just have zero imaginary parts).  The zero polynomial is the empty
coefficient sequence and has no degree.  Mixing kinds raises KindMismatch:
callers convert explicitly or not at all.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

RATIONAL = "rational"
COMPLEX = "complex"


class KindMismatch(TypeError):
    """Arithmetic attempted between polynomials of different coefficient kinds."""


class NotARoot(ValueError):
    """multiplicity() called on a point that is not a root."""


def _coerce(kind: str, value):
    if kind == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"rational coefficients must be exact, got {type(value).__name__}")
    return complex(value)


@dataclass(frozen=True)
class Poly:
    """Immutable dense polynomial; use the module constructors to build one."""

    coeffs: tuple
    kind: str

    @property
    def degree(self) -> int | None:
        """Index of the highest structurally nonzero coefficient; None if zero."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Poly") -> "Poly":
        return add(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return mul(self, other)

    def __call__(self, x):
        return eval_horner(self, x)


def _normalize(coeffs: list, kind: str) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly(coeffs: Sequence, kind: str | None = None) -> Poly:
    """Build a polynomial from low-to-high coefficients.

    Without an explicit kind, exact inputs (ints, Fractions) give the
    rational kind and anything floating gives the complex kind.
    """
    values = list(coeffs)
    if kind is None:
        exact = all(isinstance(v, (int, Fraction)) for v in values)
        kind = RATIONAL if exact else COMPLEX
    if kind not in (RATIONAL, COMPLEX):
        raise ValueError(f"unknown coefficient kind {kind!r}")
    return Poly(_normalize([_coerce(kind, v) for v in values], kind), kind)


def rational_poly(coeffs: Sequence) -> Poly:
    return poly(coeffs, RATIONAL)


def complex_poly(coeffs: Sequence) -> Poly:
    return poly(coeffs, COMPLEX)


def zero(kind: str = RATIONAL) -> Poly:
    return Poly((), kind)


def _check_kinds(p: Poly, q: Poly) -> str:
    if p.kind != q.kind:
        raise KindMismatch(f"cannot combine {p.kind} and {q.kind} polynomials")
    return p.kind


def eval_horner(p: Poly, x):
    """Evaluate by Horner's rule: d multiplications, no explicit powers."""
    if not p.coeffs:
        return Fraction(0) if p.kind == RATIONAL else 0j
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    return acc


def eval_naive(p: Poly, x):
    """Reference evaluation as an explicit power sum (the fidelity oracle)."""
    total = Fraction(0) if p.kind == RATIONAL else 0j
    for i, c in enumerate(p.coeffs):
        total += c * x ** i
    return total


def add(p: Poly, q: Poly) -> Poly:
    kind = _check_kinds(p, q)
    out = list(p.coeffs) + [_coerce(kind, 0)] * max(0, len(q.coeffs) - len(p.coeffs))
    for i, c in enumerate(q.coeffs):
        out[i] += c
    return Poly(_normalize(out, kind), kind)


def convolve(a: Sequence, b: Sequence, zero_value):
    """Coefficient convolution of two low-first sequences."""
    if not a or not b:
        return []
    out = [zero_value] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def mul(p: Poly, q: Poly) -> Poly:
    kind = _check_kinds(p, q)
    z = _coerce(kind, 0)
    return Poly(_normalize(convolve(p.coeffs, q.coeffs, z), kind), kind)


def max_norm(p: Poly):
    """Largest coefficient magnitude; 0 for the zero polynomial.

    Exact (a Fraction) in the rational kind, a float otherwise.
    """
    if not p.coeffs:
        return Fraction(0) if p.kind == RATIONAL else 0.0
    return max(abs(c) for c in p.coeffs)


@dataclass(frozen=True)
class NormCheck:
    """Outcome of one multiplicativity probe: is |pq| == |p|*|q| under max_norm?"""

    holds: bool
    lhs: object  # max_norm(p * q)
    rhs: object  # max_norm(p) * max_norm(q)


def norm_claim_check(p: Poly, q: Poly) -> NormCheck:
    """Probe the claim that max_norm is multiplicative.

    The claim is false in general ((1 + x)^2 gives 2 vs 1); the result is
    recorded as data, never asserted.
    """
    lhs = max_norm(mul(p, q))
    rhs = max_norm(p) * max_norm(q)
    if p.kind == RATIONAL:
        holds = lhs == rhs
    else:
        scale = max(1.0, abs(rhs))
        holds = abs(lhs - rhs) <= 1e-12 * scale
    return NormCheck(holds, lhs, rhs)


def synthetic_divide(p: Poly, r) -> tuple[Poly, object]:
    """Divide by (x - r): returns (quotient, remainder scalar p(r))."""
    if p.is_zero():
        raise ValueError("cannot divide the zero polynomial")
    r = _coerce(p.kind, r)
    out = []
    acc = _coerce(p.kind, 0)
    for c in reversed(p.coeffs):
        acc = acc * r + c
        out.append(acc)
    out.reverse()
    remainder = out[0]
    return Poly(_normalize(out[1:], p.kind), p.kind), remainder


def multiplicity(p: Poly, r, tol: float = 1e-9) -> int:
    """Largest m with (x - r)^m dividing p, by repeated synthetic division.

    Exact in the rational kind (tol ignored); in the complex kind each
    stage's remainder must stay below tol.  Raises NotARoot if r is not a
    root at all.
    """
    if p.is_zero():
        raise ValueError("every point is a root of the zero polynomial")
    kind = p.kind

    def is_root_here(q: Poly, rem) -> bool:
        if kind == RATIONAL:
            return rem == 0
        scale = max(1.0, float(max_norm(q)))
        return abs(rem) < tol * scale

    m = 0
    cur = p
    while not cur.is_zero() and cur.degree is not None and cur.degree >= 1:
        quotient, rem = synthetic_divide(cur, r)
        if not is_root_here(cur, rem):
            break
        m += 1
        cur = quotient
    if m == 0:
        raise NotARoot(f"{r!r} is not a root (remainder {eval_horner(p, r)!r})")
    return m


def _divisors(v: int) -> list[int]:
    v = abs(v)
    out = set()
    i = 1
    while i * i <= v:
        if v % i == 0:
            out.add(i)
            out.add(v // i)
        i += 1
    return sorted(out)


def is_nicely_factored(p: Poly) -> bool:
    """True iff p splits into linear factors over its working field.

    Complex kind: always true for nonzero p (fundamental theorem).  Rational
    kind: every irreducible factor must be linear, decided by stripping
    rational roots (root candidates peeled off an integer-scaled copy) until
    a nonzero constant remains.
    """
    if p.is_zero():
        return False
    if p.kind == COMPLEX:
        return True
    cur = p
    while cur.degree and cur.degree >= 1:
        # strip roots at zero first
        if cur.coeffs[0] == 0:
            cur = synthetic_divide(cur, 0)[0]
            continue
        denom = math.lcm(*(c.denominator for c in cur.coeffs))
        ints = [int(c * denom) for c in cur.coeffs]
        lead, const = ints[-1], ints[0]
        root = None
        for num in _divisors(const):
            for den in _divisors(lead):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if eval_horner(cur, cand) == 0:
                        root = cand
                        break
                if root is not None:
                    break
            if root is not None:
                break
        if root is None:
            return False
        cur = synthetic_divide(cur, root)[0]
    return True


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicities; count is the number of distinct roots."""

    roots: tuple[tuple[object, int, float], ...]  # (value, multiplicity, |p(value)|)
    count: int

    def values(self) -> list:
        return [r[0] for r in self.roots]

    def to_json(self) -> dict:
        out = []
        for value, mult, residual in self.roots:
            v = complex(value)
            jval = v.real if v.imag == 0 else {"re": v.real, "im": v.imag}
            out.append({"value": jval, "mult": mult, "residual": residual})
        return {"roots": out, "tau": self.count}


# ---------------------------------------------------------------------------
# serialization: "pi/2, -pi^2, 0, 2" is 2x^3 - pi^2 x + pi/2

_NUMBER = re.compile(r"^\d+(\.\d+)?$")


def _parse_atom(tok: str):
    if tok == "pi":
        return math.pi
    if _NUMBER.match(tok):
        return Fraction(tok) if "." not in tok else float(tok)
    m = re.match(r"^pi\^(\d+)$", tok)
    if m:
        return math.pi ** int(m.group(1))
    m = re.match(r"^(\d+(\.\d+)?)\^(\d+)$", tok)
    if m:
        base = Fraction(m.group(1)) if "." not in m.group(1) else float(m.group(1))
        return base ** int(m.group(3))
    raise ValueError(f"bad coefficient factor {tok!r}")


def parse_scalar(text: str):
    """One coefficient: products/quotients of numbers and pi powers."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty coefficient")
    sign = 1
    while s and s[0] in "+-":
        if s[0] == "-":
            sign = -sign
        s = s[1:]
    if not s:
        raise ValueError(f"bad coefficient {text!r}")
    value = None
    for part in s.split("*"):
        pieces = part.split("/")
        v = _parse_atom(pieces[0])
        for den in pieces[1:]:
            v = v / _parse_atom(den)
        value = v if value is None else value * v
    if isinstance(value, Fraction):
        return sign * value
    return sign * float(value)


def parse_poly_text(text: str) -> Poly:
    """Comma-separated low-to-high coefficients; any pi or decimal point
    makes the whole polynomial complex-kind, otherwise it is rational."""
    parts = [p for p in text.split(",")]
    if not parts or not text.strip():
        raise ValueError("empty polynomial text")
    values = [parse_scalar(p) for p in parts]
    exact = all(isinstance(v, Fraction) for v in values)
    return poly(values, RATIONAL if exact else COMPLEX)


def format_poly_text(p: Poly) -> str:
    if not p.coeffs:
        return "0"
    toks = []
    for c in p.coeffs:
        if p.kind == RATIONAL:
            toks.append(str(c))
        else:
            c = complex(c)
            toks.append(repr(c.real) if c.imag == 0 else repr(c))
    return ", ".join(toks)


def poly_to_json(p: Poly) -> dict:
    return {"coeffs": [str(c) if p.kind == RATIONAL else repr(complex(c))
                       for c in p.coeffs],
            "kind": p.kind}


def poly_from_json(doc: dict) -> Poly:
    if not isinstance(doc, dict) or "coeffs" not in doc or "kind" not in doc:
        raise ValueError('polynomial JSON must be {"coeffs": [...], "kind": ...}')
    kind = doc["kind"]
    if kind == RATIONAL:
        return poly([Fraction(c) for c in doc["coeffs"]], RATIONAL)
    if kind == COMPLEX:
        return poly([complex(str(c).replace(" ", "")) for c in doc["coeffs"]], COMPLEX)
    raise ValueError(f"unknown coefficient kind {kind!r}")
