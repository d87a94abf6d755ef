"""
Cheap conjugacy invariants, used as non-equivalence certificates and as
cross-checks of the heavy conjugacy machinery.

Every value is returned in a canonical encoding (sorted tuples, normalized
polynomial shift/sign) so that equality is literal comparison. Each function
is constant on conjugacy classes of the relevant group; the decision layer
relies on that to turn a mismatch into a certificate.
"""

from __future__ import annotations

import dataclasses
import functools

import sympy

from .mixed import MixedBraid
from .words import BraidWord, exponent_sum, permutation


@dataclasses.dataclass(frozen=True)
class InvariantReport:
    name: str
    value: tuple

    def to_json(self) -> dict:
        return {"name": self.name, "value": repr(self.value)}


def cycle_type(b: MixedBraid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Multisets of cycle lengths of the permutation restricted to the
    invariant block and to the orbit block."""
    perm = permutation(b.word)
    first, second = [], []
    for cycle in perm.cycles():
        (first if cycle[0] <= b.n else second).append(len(cycle))
    return tuple(sorted(first)), tuple(sorted(second))


def linking_matrix(b: MixedBraid) -> tuple[tuple, ...]:
    """Pairwise linking numbers of the closure components.

    Each unordered pair of permutation cycles contributes one entry
    (tag_i, tag_j, lk) where lk is half the signed count of crossings between
    strands of the two cycles. Cycles in the invariant block are tagged
    ("A", sorted strands): kernel conjugation fixes those strands pointwise,
    so the full strand content is invariant and distinguishes loops around
    different punctures. Orbit cycles may be permuted by kernel conjugation,
    so they carry only ("o", length). Returned as a sorted tuple; zero
    entries are kept so the component count is part of the value."""
    word = b.word
    total = word.strands
    perm = permutation(word)
    cycles = perm.cycles()
    cycle_of = {}
    for ci, cyc in enumerate(cycles):
        for s in cyc:
            cycle_of[s] = ci

    counts: dict[tuple[int, int], int] = {}
    occupant = list(range(1, total + 1))
    for k in word.letters:
        i = abs(k)
        a, c = occupant[i - 1], occupant[i]
        ca, cc = cycle_of[a], cycle_of[c]
        if ca != cc:
            key = (min(ca, cc), max(ca, cc))
            counts[key] = counts.get(key, 0) + (1 if k > 0 else -1)
        occupant[i - 1], occupant[i] = c, a

    def tag(ci: int) -> tuple:
        cyc = cycles[ci]
        if cyc[0] <= b.n:
            return ("A",) + tuple(sorted(cyc))
        return ("o", len(cyc))

    entries = []
    for ci in range(len(cycles)):
        for cj in range(ci + 1, len(cycles)):
            signed = counts.get((ci, cj), 0)
            assert signed % 2 == 0, "signed crossing count between closed components must be even"
            t1, t2 = sorted([tag(ci), tag(cj)])
            entries.append((t1, t2, signed // 2))
    return tuple(sorted(entries))


def kernel_exponent_sum(beta_ox: BraidWord, beta_oy: BraidWord) -> tuple[int, int]:
    """Exponent sums of the two kernel parts; a mismatch certifies that no
    (twisted) kernel conjugation can relate them."""
    return exponent_sum(beta_ox), exponent_sum(beta_oy)


@functools.lru_cache(maxsize=None)
def _burau_gen(n: int, i: int, inverse: bool):
    t = sympy.Symbol("t")
    m = sympy.eye(n)
    if inverse:
        block = [[sympy.Integer(0), sympy.Integer(1)], [1 / t, 1 - 1 / t]]
    else:
        block = [[1 - t, t], [sympy.Integer(1), sympy.Integer(0)]]
    m[i - 1, i - 1] = block[0][0]
    m[i - 1, i] = block[0][1]
    m[i, i - 1] = block[1][0]
    m[i, i] = block[1][1]
    return sympy.ImmutableMatrix(m)


def burau_matrix(a: BraidWord):
    """Unreduced Burau matrix over integer Laurent polynomials in t; the map
    is a homomorphism for the left-to-right word order."""
    m = sympy.eye(a.strands)
    for k in a.letters:
        m = m * _burau_gen(a.strands, abs(k), k < 0)
    return sympy.ImmutableMatrix(m)


def _polydomain_burau(a: BraidWord):
    """Burau product with denominators cleared: returns (M, shift) with M a
    DomainMatrix over ZZ[t] such that the true matrix is t^-shift * M. The
    inverse generator block [[0,1],[1/t,1-1/t]] becomes t*[[0,t],[1,t-1]]/t^2;
    clearing one power of t per negative letter keeps everything polynomial."""
    from sympy.polys.domains import ZZ
    from sympy.polys.matrices import DomainMatrix

    t = sympy.Symbol("t")
    n = a.strands
    dom = ZZ[t]
    tp = dom.from_sympy(t)
    one, zero = dom.one, dom.zero
    cur = [[one if i == j else zero for j in range(n)] for i in range(n)]
    shift = 0
    for k in a.letters:
        i = abs(k)
        g = [[one if p == q else zero for q in range(n)] for p in range(n)]
        if k > 0:
            g[i - 1][i - 1] = one - tp
            g[i - 1][i] = tp
            g[i][i - 1] = one
            g[i][i] = zero
        else:
            for p in range(n):
                if p not in (i - 1, i):
                    g[p][p] = tp
            g[i - 1][i - 1] = zero
            g[i - 1][i] = tp
            g[i][i - 1] = one
            g[i][i] = tp - one
            shift += 1
        cur = [
            [sum((cur[p][r] * g[r][q] for r in range(n)), zero) for q in range(n)]
            for p in range(n)
        ]
    return DomainMatrix(cur, (n, n), dom), shift


def burau_charpoly(a: BraidWord) -> tuple[tuple[int, int, int], ...]:
    """Characteristic polynomial of the unreduced Burau matrix, encoded as a
    sorted tuple of (x_exponent, t_exponent, coefficient) with the t powers
    shifted to start at 0. Equal for conjugate braids."""
    t = sympy.Symbol("t")
    if a.strands == 0:
        return ((0, 0, 1),)
    n = a.strands
    dm, shift = _polydomain_burau(a)
    dom = dm.domain
    coeffs = dm.charpoly()  # monic, leading coefficient first
    # True matrix is t^-shift * M, so the x^{n-k} coefficient picks up t^-(shift*k).
    terms: list[tuple[int, int, int]] = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        poly = sympy.Poly(dom.to_sympy(c), t)
        for (e,), coeff in poly.terms():
            terms.append((n - k, e - shift * k, int(coeff)))
    jmin = min(j for _, j, _ in terms)
    terms = sorted((i, j - jmin, c) for i, j, c in terms)
    if terms[-1][2] < 0:
        terms = [(i, j, -c) for i, j, c in terms]
    return tuple(terms)


def standard_reports(b: MixedBraid) -> list[InvariantReport]:
    """The invariant battery for one mixed braid, in screening order."""
    return [
        InvariantReport("exponent_sum", (exponent_sum(b.word),)),
        InvariantReport("cycle_type", cycle_type(b)),
        InvariantReport("linking_matrix", linking_matrix(b)),
        InvariantReport("burau_charpoly", burau_charpoly(b.word)),
    ]
