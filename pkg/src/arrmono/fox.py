"""Free-group words, group presentations, Fox derivatives, the universal
cochain complex of a presentation in degrees 0..2, and the action matrices
of a certified endomorphism.

Words are freely reduced tuples of (generator index 1..n, exponent +-1).
The abelianized Fox derivative of w with respect to generator j lives in the
Laurent ring Q[x1^{+-1}..xn^{+-1}]:

    d(uv) = du + u^ab * dv,   d(g_j) = 1,   d(g_j^{-1}) = -x_j^{-1}.

Commutator convention: [a, b] = a b a^{-1} b^{-1}.

A relator certificate for an endomorphism f writes each f(r_l) as an exact
product of conjugated relators, prod_i  w_i r_{k_i}^{e_i} w_i^{-1}; this is
the data that pins down the degree-2 action matrix exactly.  Certificates
are validated by free reduction, never trusted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AbelianizationNotPreserved,
    CertificateInvalid,
    ChainIdentityFailed,
    FundamentalIdentityFailed,
    ParseError,
)
from .linalg import RingComplex, RingMatrix
from .rings import Poly, PolyRing, laurent_ring

Letter = tuple[int, int]


def _reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError("letters carry exponent +-1 only")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Freely reduced word in a free group on ngens generators."""

    ngens: int
    letters: tuple[Letter, ...]

    @staticmethod
    def from_letters(ngens: int, letters: Iterable[Letter]) -> "Word":
        reduced = _reduce_letters(letters)
        for g, _ in reduced:
            if not 1 <= g <= ngens:
                raise ValueError(f"generator {g} out of range 1..{ngens}")
        return Word(ngens, reduced)

    @staticmethod
    def identity(ngens: int) -> "Word":
        return Word(ngens, ())

    @staticmethod
    def gen(ngens: int, j: int, e: int = 1) -> "Word":
        return Word.from_letters(ngens, [(j, 1 if e > 0 else -1)] * abs(e))

    def __mul__(self, other: "Word") -> "Word":
        if self.ngens != other.ngens:
            raise ValueError("mixing free groups of different rank")
        return Word(self.ngens, _reduce_letters(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(self.ngens, tuple((g, -e) for g, e in reversed(self.letters)))

    def conjugate(self, by: "Word") -> "Word":
        """by * self * by^{-1}."""
        return by * self * by.inverse()

    def commutator(self, other: "Word") -> "Word":
        return self * other * self.inverse() * other.inverse()

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def abelianization(self) -> tuple[int, ...]:
        vec = [0] * self.ngens
        for g, e in self.letters:
            vec[g - 1] += e
        return tuple(vec)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"g{g}" if e == 1 else f"g{g}^-1" for g, e in self.letters)


# -- word syntax -----------------------------------------------------------------
#
#   word       :=  factor*
#   factor     :=  generator | commutator, optionally ^<int>
#   commutator :=  '[' word ',' word ']'        ( [a,b] = a b a^-1 b^-1 )
#   generator  :=  g<k>


_WORD_TOKEN = re.compile(r"\s*(\[|\]|,|\^-?\d+|g\d+|1)")


def parse_word(text: str, ngens: int) -> Word:
    toks: list[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad word syntax at {text[pos:]!r}")
        toks.append(m.group(1))
        pos = m.end()

    def parse_seq(i: int, stop: set[str]) -> tuple[Word, int]:
        acc = Word.identity(ngens)
        while i < len(toks) and toks[i] not in stop:
            tok = toks[i]
            if tok == "[":
                left, i = parse_seq(i + 1, {","})
                if i >= len(toks) or toks[i] != ",":
                    raise ParseError("commutator missing ','")
                right, i = parse_seq(i + 1, {"]"})
                if i >= len(toks) or toks[i] != "]":
                    raise ParseError("commutator missing ']'")
                i += 1
                factor = left.commutator(right)
            elif tok == "1":
                factor = Word.identity(ngens)
                i += 1
            elif tok.startswith("g"):
                j = int(tok[1:])
                if not 1 <= j <= ngens:
                    raise ParseError(f"generator {tok} out of range 1..{ngens}")
                factor = Word.gen(ngens, j)
                i += 1
            else:
                raise ParseError(f"unexpected token {tok!r}")
            if i < len(toks) and toks[i].startswith("^"):
                power = int(toks[i][1:])
                i += 1
                if power < 0:
                    factor = factor.inverse()
                    power = -power
                w = Word.identity(ngens)
                for _ in range(power):
                    w = w * factor
                factor = w
            acc = acc * factor
        return acc, i

    word, i = parse_seq(0, set())
    if i != len(toks):
        raise ParseError("trailing tokens in word")
    return word


def format_word(w: Word) -> str:
    return str(w)


# -- presentation ------------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        for r in self.relators:
            if r.is_identity():
                raise ValueError("relators must be nonempty words")

    @property
    def nrels(self) -> int:
        return len(self.relators)

    def ring(self) -> PolyRing:
        return laurent_ring(self.ngens, var="x")


def parse_presentation(text: str) -> Presentation:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty presentation file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "generators":
        raise ParseError(f"expected 'generators N' header, got {lines[0]!r}")
    ngens = int(head[1])
    relators = tuple(parse_word(ln, ngens) for ln in lines[1:])
    try:
        return Presentation(ngens=ngens, relators=relators)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


# -- Fox calculus -------------------------------------------------------------------


def monomial_of(ring: PolyRing, exps: Sequence[int], coeff: int = 1) -> Poly:
    return ring.monomial(tuple(exps), coeff)


def fox_derivative(w: Word, j: int, ring: PolyRing | None = None) -> Poly:
    """Abelianized Fox derivative dw/dg_j as a Laurent polynomial."""
    if ring is None:
        ring = laurent_ring(w.ngens, var="x")
    prefix = [0] * w.ngens
    out = ring.zero()
    for g, e in w.letters:
        if e == 1:
            if g == j:
                out = out + monomial_of(ring, prefix)
            prefix[g - 1] += 1
        else:
            prefix[g - 1] -= 1
            if g == j:
                out = out - monomial_of(ring, prefix)
    return out


def abelianized(w: Word, ring: PolyRing) -> Poly:
    return monomial_of(ring, w.abelianization())


def universal_complex(pres: Presentation, require_complex: bool = True) -> RingComplex:
    """Degrees 0..2 from the presentation: D0 = row of (x_j - 1); D1 has the
    Fox derivatives of the relators, rows by generator, columns by relator.

    The composite D0 * D1 vanishes exactly when every relator abelianizes
    trivially (fundamental identity of Fox calculus); require_complex=False
    skips that check for degenerate presentations."""
    ring = pres.ring()
    n, m = pres.ngens, pres.nrels
    d0 = RingMatrix(ring, [[ring.variable(j) - 1 for j in range(1, n + 1)]])
    d1 = RingMatrix(ring, [[fox_derivative(r, i, ring) for r in pres.relators]
                           for i in range(1, n + 1)])
    cx = RingComplex(ring, [1, n, m], [d0, d1])
    if require_complex and not (d0 * d1).is_zero():
        raise FundamentalIdentityFailed("a relator does not abelianize to zero")
    return cx


# -- endomorphisms ------------------------------------------------------------------


@dataclass(frozen=True)
class Endomorphism:
    """Free-group endomorphism given by generator images."""

    ngens: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.ngens:
            raise ValueError("need exactly one image per generator")

    @staticmethod
    def identity(ngens: int) -> "Endomorphism":
        return Endomorphism(ngens, tuple(Word.gen(ngens, j) for j in range(1, ngens + 1)))

    @staticmethod
    def inner(ngens: int, by: Word) -> "Endomorphism":
        """Conjugation g_j -> by g_j by^{-1}."""
        return Endomorphism(ngens, tuple(Word.gen(ngens, j).conjugate(by)
                                         for j in range(1, ngens + 1)))

    def apply(self, w: Word) -> Word:
        out = Word.identity(self.ngens)
        for g, e in w.letters:
            img = self.images[g - 1]
            out = out * (img if e == 1 else img.inverse())
        return out

    def after(self, other: "Endomorphism") -> "Endomorphism":
        """self o other: apply other first, then self."""
        return Endomorphism(self.ngens, tuple(self.apply(im) for im in other.images))

    def preserves_abelianization(self) -> bool:
        for j, img in enumerate(self.images, start=1):
            vec = img.abelianization()
            if any(v != (1 if i == j else 0) for i, v in enumerate(vec, start=1)):
                return False
        return True


def parse_endomorphism(text: str, ngens: int) -> Endomorphism:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != ngens:
        raise ParseError(f"expected {ngens} image words, got {len(lines)}")
    return Endomorphism(ngens, tuple(parse_word(ln, ngens) for ln in lines))


def load_endomorphism(path, ngens: int) -> Endomorphism:
    with open(path, encoding="utf-8") as fh:
        return parse_endomorphism(fh.read(), ngens)


def phi1(endo: Endomorphism, ring: PolyRing | None = None) -> RingMatrix:
    """Degree-1 action matrix: entry [i][j] = d f(g_j) / d g_i.

    Requires f(g_j) to abelianize to x_j; under the row-vector convention the
    result satisfies D0 * Phi1 = D0."""
    if not endo.preserves_abelianization():
        raise AbelianizationNotPreserved("generator images must abelianize to themselves")
    if ring is None:
        ring = laurent_ring(endo.ngens, var="x")
    n = endo.ngens
    return RingMatrix(ring, [[fox_derivative(endo.images[j - 1], i, ring)
                              for j in range(1, n + 1)] for i in range(1, n + 1)])


# -- certificates -------------------------------------------------------------------


CertTerm = tuple[Word, int, int]  # (conjugator, 1-based relator index, sign +-1)


@dataclass(frozen=True)
class RelatorCertificate:
    """Per relator l, terms (w, k, e) with  prod_i w_i r_{k_i}^{e_i} w_i^{-1}
    freely reducing to f(r_l)."""

    terms: tuple[tuple[CertTerm, ...], ...]

    def validate(self, pres: Presentation, endo: Endomorphism) -> None:
        if len(self.terms) != pres.nrels:
            raise CertificateInvalid(
                f"certificate covers {len(self.terms)} relators, presentation has {pres.nrels}")
        for l, terms in enumerate(self.terms):
            prod = Word.identity(pres.ngens)
            for w, k, e in terms:
                if not 1 <= k <= pres.nrels:
                    raise CertificateInvalid(f"relator index {k} out of range")
                if e not in (1, -1):
                    raise CertificateInvalid(f"sign must be +-1, got {e}")
                rk = pres.relators[k - 1]
                prod = prod * (rk if e == 1 else rk.inverse()).conjugate(w)
            target = endo.apply(pres.relators[l])
            if prod != target:
                raise CertificateInvalid(
                    f"relator {l + 1}: product reduces to '{prod}', image is '{target}'")


def phi2_from_certificate(pres: Presentation, endo: Endomorphism,
                          cert: RelatorCertificate,
                          ring: PolyRing | None = None,
                          check_chain: bool = True) -> RingMatrix:
    """Degree-2 action matrix: entry [k][l] sums e * x^{ab(w)} over the
    certificate terms of relator l that target relator k."""
    cert.validate(pres, endo)
    if ring is None:
        ring = pres.ring()
    m = pres.nrels
    out = RingMatrix.zero(ring, m, m)
    for l, terms in enumerate(cert.terms):
        for w, k, e in terms:
            out.entries[k - 1][l] = out.entries[k - 1][l] + abelianized(w, ring).scale(e)
    if check_chain:
        d1 = RingMatrix(ring, [[fox_derivative(r, i, ring) for r in pres.relators]
                               for i in range(1, pres.ngens + 1)])
        p1 = phi1(endo, ring)
        check_chain_identity(d1, out, p1)
    return out


def check_chain_identity(boundary: RingMatrix, higher: RingMatrix,
                         lower: RingMatrix) -> None:
    """Assert boundary * higher == lower * boundary, naming the first bad entry."""
    lhs = boundary * higher
    rhs = lower * boundary
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs.entries[i][j] != rhs.entries[i][j]:
                raise ChainIdentityFailed(
                    f"chain identity fails at entry ({i + 1}, {j + 1}): "
                    f"{lhs.entries[i][j]} != {rhs.entries[i][j]}", entry=(i, j))


def phi2_solve_fallback(d1: RingMatrix, p1: RingMatrix):
    """One solution of D1 * X = Phi1 * D1 over the fraction field, plus the
    right-kernel basis of D1 quantifying the non-uniqueness.  The output is
    NOT canonical: any kernel shift of the columns is an equally valid X."""
    from .linalg import solve_right

    return solve_right(d1, p1 * d1)


# -- certificate algebra -------------------------------------------------------------


def identity_certificate(pres: Presentation) -> RelatorCertificate:
    return RelatorCertificate(tuple(
        ((Word.identity(pres.ngens), l + 1, 1),) for l in range(pres.nrels)))


def inner_certificate(pres: Presentation, by: Word) -> RelatorCertificate:
    """Conjugation by g sends r_l to g r_l g^{-1}."""
    return RelatorCertificate(tuple(
        ((by, l + 1, 1),) for l in range(pres.nrels)))


def compose_certificates(pres: Presentation,
                         outer: Endomorphism, outer_cert: RelatorCertificate,
                         inner: Endomorphism, inner_cert: RelatorCertificate,
                         ) -> tuple[Endomorphism, RelatorCertificate]:
    """Certificate for outer o inner from certificates of the two factors.

    (outer o inner)(r_l) = outer(prod_i u_i r_{j_i}^{d_i} u_i^{-1}); each
    outer(r_{j_i}) expands through outer's own certificate, conjugators
    getting outer(u_i) prepended.  Inverse factors reverse their expansion.
    """
    composed = outer.after(inner)
    new_terms = []
    for l in range(pres.nrels):
        acc: list[CertTerm] = []
        for u, j, d in inner_cert.terms[l]:
            fu = outer.apply(u)
            expansion = outer_cert.terms[j - 1]
            if d == 1:
                for w, k, e in expansion:
                    acc.append((fu * w, k, e))
            else:
                for w, k, e in reversed(expansion):
                    acc.append((fu * w, k, -e))
        new_terms.append(tuple(acc))
    cert = RelatorCertificate(tuple(new_terms))
    cert.validate(pres, composed)
    return composed, cert


# -- certificate file format ----------------------------------------------------------
#
#   relator 1
#   ( g3 g1 g2 g3^-1 , 1 , +1 )
#   ( 1 , 2 , -1 )
#   ...
# One 'relator L' header per relator, then one '(word, index, sign)' triple
# per line, in product order.


def parse_certificate(text: str, pres: Presentation) -> RelatorCertificate:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    terms: dict[int, list[CertTerm]] = {}
    current: int | None = None
    for ln in lines:
        if ln.startswith("relator"):
            parts = ln.split()
            if len(parts) != 2:
                raise ParseError(f"bad relator header {ln!r}")
            current = int(parts[1])
            if not 1 <= current <= pres.nrels:
                raise ParseError(f"relator index {current} out of range")
            terms.setdefault(current, [])
            continue
        if current is None:
            raise ParseError("certificate term before any 'relator' header")
        m = re.fullmatch(r"\(\s*(.*?)\s*,\s*(\d+)\s*,\s*([+-]?1|[+-])\s*\)", ln)
        if not m:
            raise ParseError(f"bad certificate term {ln!r}")
        word = parse_word(m.group(1), pres.ngens)
        k = int(m.group(2))
        sign = 1 if m.group(3) in ("+", "+1", "1") else -1
        terms[current].append((word, k, sign))
    if sorted(terms) != list(range(1, pres.nrels + 1)):
        raise ParseError("certificate must list every relator exactly once")
    return RelatorCertificate(tuple(tuple(terms[l]) for l in range(1, pres.nrels + 1)))


def format_certificate(cert: RelatorCertificate) -> str:
    lines = []
    for l, terms in enumerate(cert.terms, start=1):
        lines.append(f"relator {l}")
        for w, k, e in terms:
            lines.append(f"( {w} , {k} , {'+1' if e == 1 else '-1'} )")
    return "\n".join(lines) + "\n"


def load_certificate(path, pres: Presentation) -> RelatorCertificate:
    with open(path, encoding="utf-8") as fh:
        return parse_certificate(fh.read(), pres)
