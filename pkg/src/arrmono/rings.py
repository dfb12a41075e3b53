"""Exact coefficient rings: rationals, polynomials, Laurent polynomials, and
degree-truncated power series under the substitution x_j = exp(y_j).

A polynomial is a sparse dict mapping exponent tuples to Fraction
coefficients, with zero coefficients never stored:

    x1*x2 - 1   ->   {(1, 1, 0, 0): Fraction(1), (0, 0, 0, 0): Fraction(-1)}

The ambient ring fixes the variable count, the variable stem used for
display ("x" or "y"), and whether negative exponents are allowed (Laurent).
All values are immutable after construction; operations are pure.

Canonical term order is graded lexicographic (total degree first, then the
exponent tuple), descending, so serialization is deterministic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, ZeroAtPole

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class RationalField:
    """The scalar field Q; matrices over it hold bare Fractions."""

    tag: str = "rational"
    nvars: int = 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)


QQ = RationalField()


@dataclass(frozen=True)
class PolyRing:
    """Q[v1..vn] (laurent=False) or Q[v1^{+-1}..vn^{+-1}] (laurent=True)."""

    nvars: int
    laurent: bool = False
    var: str = "y"

    @property
    def tag(self) -> str:
        return "laurent" if self.laurent else "poly"

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c: int | Fraction) -> Poly:
        c = Fraction(c)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def variable(self, j: int) -> Poly:
        """The variable v_j, 1-based."""
        return self.monomial({j: 1})

    def monomial(self, exps: dict[int, int] | Sequence[int], coeff: int | Fraction = 1) -> Poly:
        """Monomial from a 1-based {index: exponent} dict or a full exponent tuple."""
        if isinstance(exps, dict):
            vec = [0] * self.nvars
            for j, e in exps.items():
                if not 1 <= j <= self.nvars:
                    raise ValueError(f"variable index {j} out of range 1..{self.nvars}")
                vec[j - 1] = e
            key = tuple(vec)
        else:
            key = tuple(exps)
            if len(key) != self.nvars:
                raise ValueError("exponent tuple length mismatch")
        c = Fraction(coeff)
        if c == 0:
            return Poly(self, {})
        if not self.laurent and any(e < 0 for e in key):
            raise ValueError(f"negative exponent {key} in non-Laurent ring")
        return Poly(self, {key: c})


def poly_ring(nvars: int, var: str = "y") -> PolyRing:
    return PolyRing(nvars, laurent=False, var=var)


def laurent_ring(nvars: int, var: str = "x") -> PolyRing:
    return PolyRing(nvars, laurent=True, var=var)


def _term_key(exps: Exponent) -> tuple[int, Exponent]:
    return (sum(exps), exps)


class Poly:
    """Sparse exact multivariate (Laurent) polynomial over Q."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[Exponent, Fraction]):
        self.ring = ring
        self.terms = terms

    # -- basic protocol ----------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            # Only unit monomials are invertible, and only in a Laurent ring.
            mono = self.as_monomial()
            if mono is None or not self.ring.laurent:
                raise ValueError("negative power of a non-unit")
            e, c = mono
            return Poly(self.ring, {tuple(k * n for k in e): c ** n})
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: int | Fraction) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, {e: c * v for e, v in self.terms.items()})

    # -- structural queries ------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]), reverse=True)

    def leading(self) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_term_key)
        return e, self.terms[e]

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Max total degree; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def as_monomial(self) -> tuple[Exponent, Fraction] | None:
        if len(self.terms) != 1:
            return None
        ((e, c),) = self.terms.items()
        return e, c

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_linear_integer_form(self) -> bool:
        """Homogeneous of degree <= 1 with integer coefficients and no constant."""
        for e, c in self.terms.items():
            if sum(e) != 1 or min(e) < 0 or c.denominator != 1:
                return False
        return True

    def linear_coefficients(self) -> tuple[Fraction, ...]:
        """Coefficient of each variable's degree-1 term."""
        out = [Fraction(0)] * self.ring.nvars
        for e, c in self.terms.items():
            if sum(e) == 1 and max(e) == 1:
                out[e.index(1)] = c
        return tuple(out)

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, point: Sequence[Fraction | int]) -> Fraction:
        if len(point) != self.ring.nvars:
            raise ValueError("point length mismatch")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for v, k in zip(pt, e):
                if k == 0:
                    continue
                if v == 0:
                    if k < 0:
                        raise ZeroAtPole(f"exponent {k} at zero coordinate")
                    val = Fraction(0)
                    break
                val *= v ** k
            total += val
        return total

    def substitute(self, j: int, replacement: "Poly") -> "Poly":
        """Replace variable v_j (1-based).  If any exponent of v_j is negative,
        the replacement must be a unit monomial so the inverse exists."""
        if replacement.ring != self.ring:
            raise ValueError("replacement ring mismatch")
        i = j - 1
        negative = any(e[i] < 0 for e in self.terms)
        if negative and replacement.as_monomial() is None:
            raise ValueError("negative exponents need a monomial replacement")
        out = self.ring.zero()
        for e, c in self.terms.items():
            k = e[i]
            base = Poly(self.ring, {e[:i] + (0,) + e[i + 1:]: c})
            if k == 0:
                out = out + base
                continue
            if k > 0:
                out = out + base * replacement ** k
            else:
                mono = replacement.as_monomial()
                assert mono is not None
                me, mc = mono
                inv = Poly(self.ring, {tuple(-a for a in me): 1 / mc})
                out = out + base * inv ** (-k)
        return out

    # -- exact division ------------------------------------------------------

    def exact_div(self, divisor: "Poly") -> "Poly":
        """Exact quotient self / divisor; raises NotInRing if not divisible."""
        from .errors import NotInRing

        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.ring.zero()
        if self.ring.laurent:
            # Shift both operands into the polynomial cone, divide there.
            shift_self = self._monomial_shift()
            shift_div = divisor._monomial_shift()
            plain = PolyRing(self.ring.nvars, laurent=False, var=self.ring.var)
            p = Poly(plain, {tuple(a - s for a, s in zip(e, shift_self)): c
                             for e, c in self.terms.items()})
            d = Poly(plain, {tuple(a - s for a, s in zip(e, shift_div)): c
                             for e, c in divisor.terms.items()})
            q = p.exact_div(d)
            delta = tuple(a - b for a, b in zip(shift_self, shift_div))
            return Poly(self.ring, {tuple(a + s for a, s in zip(e, delta)): c
                                    for e, c in q.terms.items()})
        quotient = self.ring.zero()
        rem = self
        de, dc = divisor.leading()
        while not rem.is_zero():
            re_, rc = rem.leading()
            qe = tuple(a - b for a, b in zip(re_, de))
            if any(k < 0 for k in qe):
                raise NotInRing("leading term not divisible")
            t = Poly(self.ring, {qe: rc / dc})
            quotient = quotient + t
            rem = rem - t * divisor
        return quotient

    def _monomial_shift(self) -> Exponent:
        mins = [0] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                mins[i] = min(mins[i], k)
        return tuple(mins)

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.ring.var}:{format_poly(self)})"


@dataclass(frozen=True)
class SeriesRing:
    """Truncated power series ring over a polynomial base, cap inclusive."""

    base: PolyRing
    cap: int

    @property
    def tag(self) -> str:
        return "series"

    @property
    def nvars(self) -> int:
        return self.base.nvars

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries(self, ((self.base.zero(),) * (self.cap + 1)))

    def one(self) -> TruncatedSeries:
        parts = [self.base.zero()] * (self.cap + 1)
        parts[0] = self.base.one()
        return TruncatedSeries(self, tuple(parts))

    def from_poly(self, p: Poly) -> TruncatedSeries:
        if p.ring != self.base:
            raise ValueError("series base ring mismatch")
        return TruncatedSeries(self, tuple(p.homogeneous_part(d) for d in range(self.cap + 1)))


class TruncatedSeries:
    """Power series truncated beyond a total-degree cap; parts homogeneous."""

    __slots__ = ("ring", "parts")

    def __init__(self, ring: SeriesRing, parts: tuple[Poly, ...]):
        if len(parts) != ring.cap + 1:
            raise ValueError("parts length must be cap + 1")
        self.ring = ring
        self.parts = parts

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self.parts == other.parts

    def __hash__(self):
        return hash((self.ring, self.parts))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.ring != self.ring:
                raise ValueError("series ring mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            parts = [self.ring.base.zero()] * (self.ring.cap + 1)
            parts[0] = self.ring.base.const(other)
            return TruncatedSeries(self.ring, tuple(parts))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return TruncatedSeries(self.ring, tuple(a + b for a, b in zip(self.parts, other.parts)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, tuple(-p for p in self.parts))

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cap = self.ring.cap
        parts = [self.ring.base.zero() for _ in range(cap + 1)]
        for i, a in enumerate(self.parts):
            if a.is_zero():
                continue
            for j, b in enumerate(other.parts):
                if i + j > cap:
                    break
                if b.is_zero():
                    continue
                parts[i + j] = parts[i + j] + a * b
        return TruncatedSeries(self.ring, tuple(parts))

    __rmul__ = __mul__

    def scale(self, c: int | Fraction) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, tuple(p.scale(c) for p in self.parts))

    def __str__(self) -> str:
        chunks = [format_poly(p) for p in self.parts if not p.is_zero()]
        return " + ".join(chunks) if chunks else "0"

    def __repr__(self) -> str:
        return f"TruncatedSeries(cap={self.ring.cap}, {self})"


# -- exp substitution ---------------------------------------------------------


def _exp_power_series(m: int, ring: PolyRing, j: int, cap: int) -> list[Poly]:
    """Homogeneous parts of exp(m * v_j) up to the cap."""
    parts = []
    fact = 1
    for k in range(cap + 1):
        if k > 0:
            fact *= k
        parts.append(ring.monomial({j: k} if k else {}, Fraction(m ** k, fact)))
    return parts


def exp_substitute(p: Poly, cap: int, target: PolyRing | None = None) -> TruncatedSeries:
    """Substitute x_j = exp(y_j) into a Laurent polynomial, truncating beyond
    total degree cap.  Negative powers use exp(-y_j) = 1 - y_j + y_j^2/2 - ...
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    if target is None:
        target = poly_ring(p.ring.nvars, var="y")
    sring = SeriesRing(target, cap)
    total = sring.zero()
    for e, c in p.terms.items():
        # exp(sum m_j y_j) expands as a single exponential of the linear form.
        term_parts = [target.zero() for _ in range(cap + 1)]
        linear = target.zero()
        for j, m in enumerate(e, start=1):
            if m:
                linear = linear + target.variable(j).scale(m)
        power = target.one()
        fact = 1
        for k in range(cap + 1):
            if k > 0:
                fact *= k
                power = power * linear
            term_parts[k] = power.scale(Fraction(c, fact))
        total = total + TruncatedSeries(sring, tuple(term_parts))
    return total


def linearize(p: Poly, target: PolyRing | None = None) -> tuple[Fraction, Poly]:
    """Value at the identity (all x_j = 1) and the linear term of p(exp(y))."""
    series = exp_substitute(p, 1, target)
    return series.parts[0].constant_term(), series.parts[1]


def linear_part(p: Poly, target: PolyRing | None = None) -> Poly:
    """Degree-1 homogeneous part of p under x_j = exp(y_j)."""
    return linearize(p, target)[1]


def evaluate(p: Poly, point: Sequence[Fraction | int]) -> Fraction:
    return p.evaluate(point)


# -- parsing and formatting ---------------------------------------------------


def format_fraction(c: Fraction) -> str:
    return str(c)


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def format_poly(p: Poly) -> str:
    """Human-readable form, canonical term order, e.g. 'x1*x2 - 1'."""
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        factors = []
        for j, k in enumerate(e, start=1):
            if k == 0:
                continue
            factors.append(f"{p.ring.var}{j}" + (f"^{k}" if k != 1 else ""))
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = str(abs(c)) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN_RE = re.compile(r"\s*([A-Za-z]\w*|\d+|\^|\*|\+|\-|/|\(|\))")


class _PolyParser:
    """Recursive-descent parser for expressions like 'x1*x2 - 1' or '-y2'."""

    def __init__(self, text: str, ring: PolyRing):
        self.toks = self._tokenize(text)
        self.pos = 0
        self.ring = ring

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ParseError(f"bad token at {text[pos:]!r}")
                break
            toks.append(m.group(1))
            pos = m.end()
        return toks

    def peek(self) -> str | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing tokens from {self.toks[self.pos:]}")
        return p

    def expr(self) -> Poly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        p = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q.scale(-1 if op == "-" else 1)
        return p

    def term(self) -> Poly:
        p = self.atom()
        while self.peek() == "*":
            self.take()
            p = p * self.atom()
        return p

    def atom(self) -> Poly:
        tok = self.take()
        if tok == "(":
            p = self.expr()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return p
        if tok == "-":
            return -self.atom()
        if tok.isdigit():
            num = int(tok)
            if self.peek() == "/":
                self.take()
                den = self.take()
                if not den.isdigit():
                    raise ParseError(f"bad denominator {den!r}")
                return self.ring.const(Fraction(num, int(den)))
            return self.ring.const(num)
        m = re.fullmatch(rf"{self.ring.var}(\d+)", tok)
        if not m:
            raise ParseError(f"unknown symbol {tok!r} in {self.ring.var}-ring")
        j = int(m.group(1))
        if not 1 <= j <= self.ring.nvars:
            raise ParseError(f"variable index {j} out of range 1..{self.ring.nvars}")
        exp = 1
        if self.peek() == "^":
            self.take()
            neg = False
            t = self.take()
            if t == "-":
                neg = True
                t = self.take()
            if not t.isdigit():
                raise ParseError(f"bad exponent {t!r}")
            exp = -int(t) if neg else int(t)
        if exp < 0 and not self.ring.laurent:
            raise ParseError("negative exponent in non-Laurent ring")
        return self.ring.monomial({j: exp})


def parse_poly(text: str, ring: PolyRing) -> Poly:
    return _PolyParser(text, ring).parse()


def poly_to_pairs(p: Poly) -> list[list]:
    """Canonical [[coeff, [exponents...]], ...] pairs, leading term first."""
    return [[format_fraction(c), list(e)] for e, c in p.sorted_terms()]


def poly_from_pairs(pairs: Iterable, ring: PolyRing) -> Poly:
    terms: dict[Exponent, Fraction] = {}
    for coeff, exps in pairs:
        e = tuple(int(k) for k in exps)
        if len(e) != ring.nvars:
            raise ParseError("exponent vector length mismatch")
        c = parse_fraction(str(coeff))
        if c:
            terms[e] = terms.get(e, Fraction(0)) + c
    return Poly(ring, {e: c for e, c in terms.items() if c})


def poly_to_json(p: Poly) -> str:
    return json.dumps(poly_to_pairs(p), separators=(",", ":"))


def parse_point(text: str, nvars: int) -> tuple[Fraction, ...]:
    """Comma-separated rational coordinates, e.g. '2,3,1/6,1'."""
    parts = [s for s in text.split(",") if s.strip()]
    if len(parts) != nvars:
        raise ParseError(f"expected {nvars} coordinates, got {len(parts)}")
    return tuple(parse_fraction(s) for s in parts)
