"""Formal connection matrices, their exp/log relation to the representation
matrices, Gauss-Manin specializations, certified eigenvalue factorizations,
induced maps on cohomology, and weight classification.

Eigenvalue extraction never touches floating point.  Candidates are read off
exactly (trace terms for unit-monomial eigenvalues, unit-vector probes plus
a seeded generic point for integer linear forms), pre-filtered by exact
evaluation at probe points, and certified by exact polynomial division of
the characteristic polynomial.  Certification turns the candidate search
into a proof: a wrong candidate simply fails to divide.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    ChainIdentityFailed,
    FactorizationFailed,
    NoSolution,
    NonIntegerRootAtProbe,
    NotIdentityAtOne,
    NotInRing,
)
from .linalg import (
    QQ,
    CharPoly,
    RingComplex,
    RingMatrix,
    char_poly,
    coordinates_in_span,
    evaluate_matrix,
    generic_rank,
    linearize_matrix,
    mat_exp_truncated,
    rational_left_kernel,
    rational_rank,
    rational_row_space,
    series_matrix,
    solve_right,
)
from .rings import Poly, PolyRing, laurent_ring, poly_ring

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


# -- formal connection -------------------------------------------------------------


@dataclass
class FormalConnection:
    """Per-degree linear-term matrices of the representation under
    x_j = exp(y_j); entries are integral linear forms."""

    ring: PolyRing
    matrices: dict[int, RingMatrix]

    def degree(self, q: int) -> RingMatrix:
        return self.matrices[q]


def formal_connection(phis: dict[int, RingMatrix],
                      target: PolyRing | None = None) -> FormalConnection:
    """Entrywise linear part of each representation matrix.  Requires the
    value at x = 1 to be the identity in every degree."""
    omegas = {}
    ring = target
    for q, phi in sorted(phis.items()):
        const, lin = linearize_matrix(phi, ring)
        if ring is None:
            ring = lin.ring
        if not const.is_identity():
            raise NotIdentityAtOne(f"degree {q} matrix is not the identity at x = 1")
        for row in lin.entries:
            for e in row:
                if not e.is_linear_integer_form():
                    raise FactorizationFailed(
                        f"degree {q} linear part has a non-integral entry {e}")
        omegas[q] = lin
    return FormalConnection(ring=ring, matrices=omegas)


def gauss_manin_matrix(omega: RingMatrix, weights: Sequence[Fraction | int]) -> RingMatrix:
    """Specialize a formal connection matrix at rational weights."""
    return evaluate_matrix(omega, weights)


# -- exp/log verification ------------------------------------------------------------


@dataclass
class ExpRelationReport:
    """Outcome of the degree-2 exp/log comparison for one degree.

    entrywise_degree2 records literal equality of exp-substituted Phi and
    exp(Omega) at truncation 2.  The two sides are gauge conjugate rather
    than equal in general, so the certified check is gauge_degree2: existence
    of G = I + G1 with exp_sub(Phi) * G = G * exp(Omega) up to degree 2,
    an exactly solvable linear condition.
    """

    identity_at_one: bool
    linear_part_matches: bool
    gauge_degree2: bool
    entrywise_degree2: bool
    mismatch: str = ""

    @property
    def passed(self) -> bool:
        return self.identity_at_one and self.linear_part_matches and self.gauge_degree2


def _commutator_image_solve(omega: RingMatrix, rhs: RingMatrix) -> bool:
    """Does G1 * Omega - Omega * G1 = rhs admit a matrix of linear forms G1?

    Unknowns: n * s^2 rational coefficients of G1; equations: coefficients of
    the quadratic monomials of every entry."""
    ring: PolyRing = omega.ring
    s = omega.rows
    n = ring.nvars
    monomials = [(i, j) for i in range(n) for j in range(i, n)]
    mono_index = {m: idx for idx, m in enumerate(monomials)}
    rows = s * s * len(monomials)
    cols = s * s * n
    system = [[Fraction(0)] * cols for _ in range(rows)]
    rhs_vec = [Fraction(0)] * rows

    def quad_coeffs(p: Poly) -> dict[tuple[int, int], Fraction]:
        out: dict[tuple[int, int], Fraction] = {}
        for e, c in p.terms.items():
            support = [i for i, k in enumerate(e) if k]
            if sum(e) != 2:
                raise ValueError("expected a homogeneous quadratic")
            if len(support) == 1:
                out[(support[0], support[0])] = c
            else:
                out[(support[0], support[1])] = c
        return out

    # Row index for entry (a, b) and monomial m.
    def ridx(a: int, b: int, m: int) -> int:
        return (a * s + b) * len(monomials) + m

    # Column index for unknown coefficient of y_v in G1[a][b].
    def cidx(a: int, b: int, v: int) -> int:
        return (a * s + b) * n + v

    for a in range(s):
        for b in range(s):
            # (G1 * Omega)[a][b] = sum_k G1[a][k] * Omega[k][b]
            for k in range(s):
                om = omega.entries[k][b]
                for e, c in om.terms.items():
                    u = e.index(1)
                    for v in range(n):
                        i, j = min(u, v), max(u, v)
                        system[ridx(a, b, mono_index[(i, j)])][cidx(a, k, v)] += c
            # -(Omega * G1)[a][b] = -sum_k Omega[a][k] * G1[k][b]
            for k in range(s):
                om = omega.entries[a][k]
                for e, c in om.terms.items():
                    u = e.index(1)
                    for v in range(n):
                        i, j = min(u, v), max(u, v)
                        system[ridx(a, b, mono_index[(i, j)])][cidx(k, b, v)] -= c
            for m, c in quad_coeffs(rhs.entries[a][b]).items():
                rhs_vec[ridx(a, b, mono_index[m])] = c

    try:
        solve_right(RingMatrix(QQ, system), RingMatrix(QQ, [[v] for v in rhs_vec]))
        return True
    except NoSolution:
        return False


def verify_exp_relation(phi: RingMatrix, omega: RingMatrix) -> ExpRelationReport:
    """Compare the representation matrix with the exponential of its formal
    connection at truncation order 2."""
    const, lin = linearize_matrix(phi, omega.ring)
    identity_at_one = const.is_identity()
    linear_match = lin == omega
    mismatch = ""
    gauge = False
    entrywise = False
    if identity_at_one and linear_match:
        left = series_matrix(phi, 2, omega.ring)
        right = mat_exp_truncated(omega, 2)
        entrywise = left == right
        # Degree-2 parts: Phi_2 vs Omega^2/2; gauge freedom is ad_Omega.
        phi2 = left.map_entries(lambda s: s.parts[2], ring=omega.ring)
        om2 = (omega * omega).map_entries(lambda p: p.scale(Fraction(1, 2)))
        gauge = entrywise or _commutator_image_solve(omega, phi2 - om2)
        if not gauge:
            mismatch = "degree-2 terms are not gauge conjugate"
    else:
        mismatch = "value at x=1 or linear term mismatch"
    return ExpRelationReport(identity_at_one=identity_at_one,
                             linear_part_matches=linear_match,
                             gauge_degree2=gauge,
                             entrywise_degree2=entrywise,
                             mismatch=mismatch)


def verify_chain_map(boundaries: list[RingMatrix], maps: dict[int, RingMatrix]) -> None:
    """Check D^q * F^{q+1} = F^q * D^q for all consecutive degrees present."""
    for q, bq in enumerate(boundaries):
        if q in maps and (q + 1) in maps:
            lhs = bq * maps[q + 1]
            rhs = maps[q] * bq
            for i in range(lhs.rows):
                for j in range(lhs.cols):
                    if lhs.entries[i][j] != rhs.entries[i][j]:
                        raise ChainIdentityFailed(
                            f"chain identity fails in degree {q} at entry "
                            f"({i + 1}, {j + 1})", entry=(i, j))


# -- eigenvalue factorization ---------------------------------------------------------


@dataclass(frozen=True)
class EigenFactor:
    """One certified factor (z - value)^multiplicity of the char polynomial.

    kind is 'monomial' (value given by integer exponents) or 'linear_form'
    (value given by integer coefficients of the weights)."""

    kind: str
    data: tuple[int, ...]
    multiplicity: int

    def describe(self, var: str) -> str:
        from .rings import format_poly, laurent_ring, poly_ring

        n = len(self.data)
        if self.kind == "monomial":
            body = format_poly(laurent_ring(n, var=var).monomial(self.data))
        else:
            body = format_poly(_linear_form(poly_ring(n, var=var), self.data))
        return f"{body} (multiplicity {self.multiplicity})"


@dataclass
class EigenReport:
    kind: str
    size: int
    factors: tuple[EigenFactor, ...]
    certified: bool = True

    def multiset(self) -> dict[tuple[int, ...], int]:
        return {f.data: f.multiplicity for f in self.factors}


def _poly_root_from_exponents(ring: PolyRing, exps: tuple[int, ...]) -> Poly:
    return ring.monomial(tuple(exps))


def _linear_form(ring: PolyRing, coeffs: tuple[int, ...]) -> Poly:
    out = ring.zero()
    for j, c in enumerate(coeffs, start=1):
        if c:
            out = out + ring.variable(j).scale(c)
    return out


def _divide_out(cp: CharPoly, root: Poly) -> tuple[CharPoly, int]:
    """Divide by (z - root) as many times as the division stays exact."""
    mult = 0
    while True:
        nxt = cp.divide_linear(root)
        if nxt is None:
            return cp, mult
        cp = nxt
        mult += 1


def eigen_monomials(phi: RingMatrix, seed: int = 0) -> EigenReport:
    """Certify char(Phi) = prod (z - x^{m_i})^{k_i} with integer exponents.

    Candidate exponent vectors come from the terms of the trace (for a
    genuine factorization the trace is exactly sum k_i x^{m_i}, and distinct
    monomials cannot cancel), pre-filtered by exact evaluation at a vector of
    distinct primes; each candidate is certified by exact division.
    """
    n = phi.ring.nvars
    if not evaluate_matrix(phi, [1] * n).is_identity():
        raise NotIdentityAtOne("representation matrix must be the identity at x = 1")
    size = phi.rows
    cp = char_poly(phi)
    if size == 0:
        return EigenReport(kind="monomial", size=0, factors=())
    probe = [Fraction(p) for p in PRIMES[:n]]
    cp_probe = cp.evaluate_coeffs(probe)

    trace = phi.trace()
    candidates = sorted(trace.terms.keys())
    factors: list[EigenFactor] = []
    remaining = cp
    for exps in candidates:
        value = _poly_root_from_exponents(phi.ring, exps)
        # Pre-filter: x^m evaluated at the prime vector must be a root.
        val = value.evaluate(probe)
        if _eval_univariate(cp_probe, val) != 0:
            continue
        remaining, mult = _divide_out(remaining, value)
        if mult:
            factors.append(EigenFactor("monomial", tuple(exps), mult))
    if remaining.degree > 0:
        probe_rest = remaining.evaluate_coeffs(probe)
        const = probe_rest[0]
        if not _factors_over_primes(const, n):
            raise NonIntegerRootAtProbe(
                f"probe constant term {const} is not a unit monomial value")
        raise FactorizationFailed(
            f"{remaining.degree} eigenvalues are not unit monomials")
    return EigenReport(kind="monomial", size=size, factors=tuple(factors))


def _eval_univariate(coeffs: Sequence[Fraction], z: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _factors_over_primes(value: Fraction, n: int) -> bool:
    if value == 0 or value < 0:
        return False
    for part in (value.numerator, value.denominator):
        for p in PRIMES[:n]:
            while part % p == 0:
                part //= p
        if part != 1:
            return False
    return True


def _integer_roots(coeffs: list[Fraction]) -> dict[int, int]:
    """Integer roots with multiplicity of a monic integer polynomial."""
    work = list(coeffs)
    roots: dict[int, int] = {}
    # Strip roots at zero first.
    while len(work) > 1 and work[0] == 0:
        roots[0] = roots.get(0, 0) + 1
        work = work[1:]
    changed = True
    while changed and len(work) > 1:
        changed = False
        c0 = work[0]
        assert c0 != 0
        c0int = abs(int(c0)) if c0.denominator == 1 else None
        if c0int is None:
            break
        for cand in _divisors_with_sign(c0int):
            if _eval_univariate(work, Fraction(cand)) == 0:
                # Synthetic division by (z - cand).
                out = []
                carry = work[-1]
                for i in range(len(work) - 2, -1, -1):
                    out.append(carry)
                    carry = work[i] + cand * carry
                assert carry == 0
                work = list(reversed(out))
                roots[cand] = roots.get(cand, 0) + 1
                changed = True
                break
    return roots


def _divisors_with_sign(n: int) -> list[int]:
    divs = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            divs.update({d, n // d, -d, -(n // d)})
        d += 1
    return sorted(divs, key=abs)


def eigen_linear_forms(omega: RingMatrix, seed: int = 0) -> EigenReport:
    """Certify char(Omega) = prod (z - l_i(y))^{k_i} with l_i integral
    linear forms.

    Probes: each unit vector e_j gives the integer candidate j-th
    coefficients (integer roots of an integer characteristic polynomial); a
    seeded generic rational point resolves the matching between coordinates.
    Exact division certifies every assembled candidate.
    """
    ring: PolyRing = omega.ring
    n = ring.nvars
    for row in omega.entries:
        for e in row:
            if not e.is_linear_integer_form():
                raise ValueError(f"entry {e} is not an integral linear form")
    size = omega.rows
    if size == 0:
        return EigenReport(kind="linear_form", size=0, factors=())
    cp = char_poly(omega)

    per_axis: list[list[int]] = []
    for j in range(n):
        point = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        coeffs = cp.evaluate_coeffs(point)
        roots = _integer_roots(coeffs)
        if sum(roots.values()) != size:
            raise FactorizationFailed(
                f"axis probe {j + 1} has non-integer eigenvalues")
        per_axis.append(sorted(roots))

    rng = random.Random(seed)
    generic = [Fraction(rng.randint(2, 97), rng.randint(1, 9)) for _ in range(n)]
    cp_generic = cp.evaluate_coeffs(generic)

    candidates: list[tuple[int, ...]] = []
    stack: list[tuple[int, ...]] = [()]
    for axis in per_axis:
        stack = [t + (r,) for t in stack for r in axis]
    for cand in sorted(stack):
        value = sum(Fraction(c) * g for c, g in zip(cand, generic))
        if _eval_univariate(cp_generic, value) == 0:
            candidates.append(cand)

    factors: list[EigenFactor] = []
    remaining = cp
    for cand in candidates:
        form = _linear_form(ring, cand)
        remaining, mult = _divide_out(remaining, form)
        if mult:
            factors.append(EigenFactor("linear_form", cand, mult))
    if remaining.degree > 0:
        raise FactorizationFailed(
            f"{remaining.degree} eigenvalues are not integral linear forms")
    return EigenReport(kind="linear_form", size=size, factors=tuple(factors))


def spectra_correspond(phi_report: EigenReport, omega_report: EigenReport) -> bool:
    """Each monomial x^m of multiplicity k must appear as the linear form
    m . y with multiplicity >= k (linearization preserves eigenvalues)."""
    omega_mult = omega_report.multiset()
    for f in phi_report.factors:
        if omega_mult.get(f.data, 0) < f.multiplicity:
            return False
    return True


# -- projections and induced maps --------------------------------------------------------


@dataclass
class LocusSpec:
    """Substitutions x_j -> unit monomial (or 1) cutting out the locus on
    which a projection is a chain projection; the y-side substitutions are
    the linearizations y_j -> integer form."""

    x_subs: dict[int, Poly]
    y_subs: dict[int, Poly]

    def reduce_x(self, p: Poly) -> Poly:
        for j, rep in sorted(self.x_subs.items()):
            p = p.substitute(j, rep)
        return p

    def reduce_y(self, p: Poly) -> Poly:
        for j, rep in sorted(self.y_subs.items()):
            p = p.substitute(j, rep)
        return p


@dataclass
class ProjectionData:
    """User-supplied projection onto cohomology in the top degree: Xi over
    the Laurent ring, its linearization Upsilon, optional locus relations."""

    xi: RingMatrix
    upsilon: RingMatrix
    locus: LocusSpec | None = None

    @property
    def target_rank(self) -> int:
        return self.xi.cols


def verify_projection(delta: RingMatrix, mu: RingMatrix, proj: ProjectionData,
                      seed: int = 0) -> None:
    """Check D1 * Xi = 0 and mu1 * Upsilon = 0 (on the locus, if any),
    Upsilon = linear part of Xi, and generic rank Xi = number of columns."""
    from .errors import VerificationFailed

    prod = delta * proj.xi
    for i in range(prod.rows):
        for j in range(prod.cols):
            e = prod.entries[i][j]
            if proj.locus is not None:
                e = proj.locus.reduce_x(e)
            if not e.is_zero():
                raise VerificationFailed("projection.delta_xi",
                                         f"(D1 * Xi)[{i + 1}][{j + 1}] = {e} != 0")
    prod = mu * proj.upsilon
    for i in range(prod.rows):
        for j in range(prod.cols):
            e = prod.entries[i][j]
            if proj.locus is not None:
                e = proj.locus.reduce_y(e)
            if not e.is_zero():
                raise VerificationFailed("projection.mu_upsilon",
                                         f"(mu1 * Upsilon)[{i + 1}][{j + 1}] = {e} != 0")
    _, lin = linearize_matrix(proj.xi, proj.upsilon.ring)
    if lin != proj.upsilon:
        raise VerificationFailed("projection.linearization",
                                 "Upsilon is not the linear part of Xi")
    if generic_rank(proj.xi, seed=seed) != proj.xi.cols:
        raise VerificationFailed("projection.rank",
                                 "Xi does not have full column rank")


# Projection file format:
#   ring x 4
#   rows 5
#   cols 2
#   locus x3 = x1^-1*x2^-1     (zero or more; right side a unit monomial)
#   xi
#   <cols comma-separated x-expressions per line, rows lines>
#   upsilon                     (optional; defaults to the linear part of xi)
#   <cols comma-separated y-expressions per line, rows lines>


def parse_projection(text: str) -> ProjectionData:
    from .errors import ParseError
    from .rings import linear_part, parse_poly

    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    header: dict[str, str] = {}
    locus_lines: list[str] = []
    idx = 0
    while idx < len(lines) and lines[idx] not in ("xi", "upsilon"):
        ln = lines[idx]
        if ln.startswith("locus "):
            locus_lines.append(ln[len("locus "):])
        else:
            parts = ln.split()
            if len(parts) != 2:
                raise ParseError(f"bad projection header line {ln!r}")
            header[parts[0]] = parts[1]
        idx += 1
    for key in ("ring", "rows", "cols"):
        if key not in header:
            raise ParseError(f"projection file missing '{key}'")
    if header["ring"] != "x":
        raise ParseError("projection matrices live over the x-ring")
    rows = int(header["rows"])
    cols = int(header["cols"])
    nvars_line = header.get("nvars") or header.get("n")
    if nvars_line is None:
        raise ParseError("projection file missing 'nvars'")
    n = int(nvars_line)
    xring = laurent_ring(n, var="x")
    yring = poly_ring(n, var="y")

    def read_matrix(ring, start: int) -> tuple[RingMatrix, int]:
        entries = []
        for r in range(rows):
            if start + r >= len(lines):
                raise ParseError("projection matrix is truncated")
            cells = lines[start + r].split(",")
            if len(cells) != cols:
                raise ParseError(f"expected {cols} entries on line {lines[start + r]!r}")
            entries.append([parse_poly(c, ring) for c in cells])
        return RingMatrix(ring, entries), start + rows

    if idx >= len(lines) or lines[idx] != "xi":
        raise ParseError("projection file must contain an 'xi' block")
    xi, idx = read_matrix(xring, idx + 1)
    upsilon = None
    if idx < len(lines) and lines[idx] == "upsilon":
        upsilon, idx = read_matrix(yring, idx + 1)
    if idx != len(lines):
        raise ParseError("trailing lines in projection file")
    if upsilon is None:
        upsilon = xi.map_entries(lambda p: linear_part(p, yring), ring=yring)

    locus = None
    if locus_lines:
        x_subs: dict[int, Poly] = {}
        y_subs: dict[int, Poly] = {}
        for ln in locus_lines:
            if "=" not in ln:
                raise ParseError(f"bad locus line {ln!r}")
            lhs, rhs = (s.strip() for s in ln.split("=", 1))
            if not lhs.startswith("x"):
                raise ParseError("locus substitutions target x-variables")
            j = int(lhs[1:])
            rep = parse_poly(rhs, xring)
            mono = rep.as_monomial()
            if mono is None or mono[1] != 1:
                raise ParseError("locus right side must be a unit monomial")
            x_subs[j] = rep
            y_subs[j] = linear_part(rep, yring)
        locus = LocusSpec(x_subs=x_subs, y_subs=y_subs)
    return ProjectionData(xi=xi, upsilon=upsilon, locus=locus)


def load_projection(path) -> ProjectionData:
    with open(path, encoding="utf-8") as fh:
        return parse_projection(fh.read())


def induced_map(projection: RingMatrix, chain_map: RingMatrix) -> RingMatrix:
    """The unique X with chain_map * projection = projection * X, certified
    to have ring entries.  Uniqueness needs full column rank of projection."""
    res = solve_right(projection, chain_map * projection)
    if res.kernel_dimension != 0:
        raise NoSolution("projection has a kernel; induced map not unique")
    if not res.in_ring:
        raise NotInRing("induced map does not have ring entries")
    return res.cleared


# -- cohomology action ---------------------------------------------------------------


@dataclass
class CohomologyAction:
    """Action matrices on H^q of a specialized complex, with the chosen
    quotient bases (rows of representatives)."""

    betti: list[int]
    matrices: dict[int, RingMatrix]
    representatives: dict[int, list[list[Fraction]]]


def cohomology_action(cx: RingComplex, maps: dict[int, RingMatrix]) -> CohomologyAction:
    """Induced action on cohomology of a rational specialized complex.

    Bases: the row space of the incoming boundary is completed to a basis of
    the kernel of the outgoing boundary; the action of each representative is
    reduced modulo the boundary part.  The chain identity is verified first.
    """
    cx.check_complex()
    verify_chain_map(cx.boundaries, maps)
    betti = cx.betti()
    matrices: dict[int, RingMatrix] = {}
    reps: dict[int, list[list[Fraction]]] = {}
    for q in range(len(cx.ranks)):
        if q not in maps:
            continue
        bq = cx.ranks[q]
        if q < len(cx.boundaries):
            kernel = rational_left_kernel(cx.boundaries[q])
        else:
            kernel = [[Fraction(1) if i == j else Fraction(0) for i in range(bq)]
                      for j in range(bq)]
        image = rational_row_space(cx.boundaries[q - 1]) if q > 0 else []
        # Complete the image basis to a kernel basis; the complement
        # represents cohomology classes.
        stack = [list(v) for v in image]
        chosen: list[list[Fraction]] = []
        base_rank = len(image)
        for v in kernel:
            trial = stack + [list(v)]
            if rational_rank(RingMatrix(QQ, trial)) > len(stack):
                stack.append(list(v))
                chosen.append(list(v))
        assert len(chosen) == betti[q], "quotient dimension mismatch"
        reps[q] = chosen
        span = image + chosen
        rows = []
        for v in chosen:
            w = [sum(v[k] * maps[q].entries[k][j] for k in range(bq)) for j in range(bq)]
            coords = coordinates_in_span(span, w)
            if coords is None:
                raise ChainIdentityFailed(f"image of a degree-{q} cocycle left the kernel")
            rows.append(coords[base_rank:])
        matrices[q] = RingMatrix(QQ, rows) if chosen else RingMatrix.zero(QQ, 0, 0)
    return CohomologyAction(betti=betti, matrices=matrices, representatives=reps)


# -- weight classification --------------------------------------------------------------


@dataclass
class WeightClassification:
    point: tuple[Fraction, ...]
    betti: list[int]
    euler: int
    trivial: bool
    nonresonant: bool
    top_matches_euler: bool

    def verdict(self) -> str:
        if self.trivial:
            return "trivial"
        return "non-resonant" if self.nonresonant else "resonant"


def classify_weights(cx: RingComplex, point: Sequence[Fraction | int]) -> WeightClassification:
    """Specialize, compute cohomology ranks, and classify: non-resonant
    means cohomology concentrated in the top degree, whose dimension is then
    compared with |Euler characteristic|."""
    spec = cx.specialize(point)
    betti = spec.betti()
    euler = cx.euler_characteristic()
    trivial = all(b.is_zero() for b in spec.boundaries)
    top = len(cx.ranks) - 1
    nonres = all(h == 0 for h in betti[:top])
    return WeightClassification(
        point=tuple(Fraction(v) for v in point),
        betti=betti,
        euler=euler,
        trivial=trivial,
        nonresonant=nonres and not trivial,
        top_matches_euler=(betti[top] == abs(euler)),
    )


def exponent_log_bookkeeping(monomial_exponents: Sequence[int],
                             form_coefficients: Sequence[int]) -> bool:
    """Formal exp/log correspondence at the level of bookkeeping: the
    monomial x^m corresponds to the linear form m . y, coefficient by
    coefficient (so exp(-2 pi i sum m_j lambda_j) = prod t_j^{m_j})."""
    return tuple(monomial_exponents) == tuple(form_coefficients)
