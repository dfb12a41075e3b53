"""The graded quotient algebra on the nbc basis and its universal cochain
complex over Q[y1..yn], with boundary = left wedge by sum_j y_j a_j.

Rewriting into the nbc basis: a monomial a_S is zero when S contains a
minimal empty-intersection set; otherwise the lexicographically largest
broken circuit T inside S is rewritten through its circuit C = {c} u T,

    a_T  =  sum_{i >= 1} (-1)^{i+1} a_{C \\ C[i]},

with Koszul signs from re-sorting wedges.  Each replacement set contains the
least circuit element c < max(T) and drops a larger one, so the multiset of
index sets strictly decreases lexicographically and the rewriting terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import Arrangement, DependencyData, NbcBasis, compute_dependencies, nbc_basis
from .linalg import RingComplex, RingMatrix
from .rings import PolyRing, poly_ring


def wedge_sort(indices: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Sort wedge factors, returning (sorted tuple, sign); None if repeated."""
    arr = list(indices)
    sign = 1
    # Insertion sort; each adjacent swap flips the sign.
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(arr, arr[1:]):
        if a == b:
            return None
    return tuple(arr), sign


def merge_sign(left: Sequence[int], right: Sequence[int]) -> int | None:
    """Sign of sorting the concatenation left + right, each already sorted."""
    res = wedge_sort(tuple(left) + tuple(right))
    return None if res is None else res[1]


@dataclass
class OSElement:
    """A class of the quotient algebra written on nbc sets of one degree."""

    degree: int
    coeffs: dict[tuple[int, ...], Fraction]

    def __add__(self, other: "OSElement") -> "OSElement":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return OSElement(self.degree, out)

    def scale(self, c: Fraction) -> "OSElement":
        if c == 0:
            return OSElement(self.degree, {})
        return OSElement(self.degree, {k: c * v for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs


class NbcRewriter:
    """Memoized rewriting of arbitrary index sets into the nbc basis."""

    def __init__(self, dep: DependencyData):
        self.dep = dep
        self.cache: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}

    def rewrite(self, subset: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        """Expansion of a_subset (strictly increasing indices) over nbc sets,
        as a dict with integer coefficients."""
        if subset in self.cache:
            return self.cache[subset]
        sset = set(subset)
        if any(set(e) <= sset for e in self.dep.empty_min):
            self.cache[subset] = {}
            return {}
        inside = [b for b in self.dep.broken_circuits if set(b) <= sset]
        if not inside:
            self.cache[subset] = {subset: 1}
            return {subset: 1}
        broken = max(inside)
        circuit = self.dep.circuit_of_broken[broken]
        rest = tuple(i for i in subset if i not in set(broken))
        outer = merge_sign(broken, rest)
        assert outer is not None
        result: dict[tuple[int, ...], int] = {}
        for i in range(1, len(circuit)):
            # a_{T} = sum (-1)^{i+1} a_{C \ C[i]} inside the wedge with rest.
            replacement = tuple(c for k, c in enumerate(circuit) if k != i)
            term = wedge_sort(replacement + rest)
            if term is None:
                continue
            sorted_set, inner = term
            coeff = outer * inner * (-1) ** (i + 1)
            for k, v in self.rewrite(sorted_set).items():
                s = result.get(k, 0) + coeff * v
                if s:
                    result[k] = s
                else:
                    result.pop(k, None)
        self.cache[subset] = result
        return result


def reduce_to_nbc(dep: DependencyData, subset: Sequence[int]) -> OSElement:
    """Public wrapper: the class of a_subset expressed in the nbc basis."""
    s = tuple(subset)
    if any(a >= b for a, b in zip(s, s[1:])):
        raise ValueError("subset must be strictly increasing")
    expansion = NbcRewriter(dep).rewrite(s)
    return OSElement(len(s), {k: Fraction(v) for k, v in expansion.items()})


@dataclass
class AomotoComplex:
    """Boundaries mu_q over Q[y], rows indexed by nbc q-sets, columns by
    nbc (q+1)-sets; every entry an integral linear form."""

    ring: PolyRing
    nbc: NbcBasis
    complex: RingComplex

    @property
    def betti(self) -> list[int]:
        return list(self.complex.ranks)

    @property
    def boundaries(self) -> list[RingMatrix]:
        return self.complex.boundaries

    def boundary(self, q: int) -> RingMatrix:
        return self.complex.boundaries[q]


def aomoto_boundary(arr: Arrangement, dep: DependencyData | None = None,
                    basis: NbcBasis | None = None) -> AomotoComplex:
    """Assemble the boundary matrices of left-multiplication by
    sum_j y_j a_j on the nbc basis."""
    if dep is None:
        dep = compute_dependencies(arr)
    if basis is None:
        basis = nbc_basis(arr, dep)
    ring = poly_ring(arr.n, var="y")
    rewriter = NbcRewriter(dep)
    boundaries = []
    for q in range(arr.dim):
        rows_sets = basis.degree(q)
        cols_sets = basis.degree(q + 1)
        col_index = {s: i for i, s in enumerate(cols_sets)}
        mat = RingMatrix.zero(ring, len(rows_sets), len(cols_sets))
        for r, s in enumerate(rows_sets):
            for j in range(arr.n):
                if j in s:
                    continue
                term = wedge_sort((j,) + s)
                assert term is not None
                sorted_set, sign = term
                for target, coeff in rewriter.rewrite(sorted_set).items():
                    c = col_index.get(target)
                    if c is None:
                        continue
                    mat.entries[r][c] = mat.entries[r][c] + ring.monomial({j + 1: 1}, sign * coeff)
        boundaries.append(mat)
    cx = RingComplex(ring, basis.betti(), boundaries)
    cx.check_complex()
    return AomotoComplex(ring=ring, nbc=basis, complex=cx)


def specialize_complex(cx: RingComplex | AomotoComplex, point) -> RingComplex:
    """Entrywise evaluation with the complex property re-verified."""
    if isinstance(cx, AomotoComplex):
        cx = cx.complex
    return cx.specialize(point)


def cohomology_betti(cx: RingComplex) -> list[int]:
    """Exact cohomology ranks of a specialized (rational) complex."""
    return cx.betti()
