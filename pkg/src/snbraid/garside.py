"""
Garside left canonical form and the conjugacy decision for Artin braid groups.

A braid is stored as Delta^p A_1 ... A_k where Delta is the positive half
twist and each factor A_i is a permutation braid (a positive braid in which
any two strands cross at most once), identified with its permutation.
Adjacent factors satisfy the left-weighted condition: the starting set of
A_{i+1} is contained in the finishing set of A_i. Two words are equal in B_n
iff their canonical forms are identical, which solves the word problem.

Conjugacy is decided through summit sets: cycle/decycle a representative to
maximal infimum and minimal supremum, walk the cycling orbit onto a circuit,
then close the resulting set under conjugation by simple elements (keeping
only elements with the summit infimum/supremum and, when circuits were
reached, only elements lying on their own cycling circuit). Two braids are
conjugate iff the sets intersect; the recorded parent chain yields an
explicit conjugating witness.

Internally permutations are 0-based tuples mapping start position to end
position, composed left-to-right: `_pmul(p, q)` is "p then q".
"""

from __future__ import annotations

import dataclasses
import functools
import itertools

from .words import (
    BraidWord,
    PermutationTable,
    StrandMismatchError,
    exponent_sum,
    free_reduce,
    permutation,
)

Perm = tuple[int, ...]

# ---------------------------------------------------------------------------
# permutation-braid primitives


def _pid(n: int) -> Perm:
    return tuple(range(n))


@functools.lru_cache(maxsize=None)
def _pw0(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _pmul(p: Perm, q: Perm) -> Perm:
    """p then q (as braid stacking; q o p as functions)."""
    return tuple(q[v] for v in p)


def _pinv(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


@functools.lru_cache(maxsize=1 << 18)
def _tau(p: Perm) -> Perm:
    """Conjugation by Delta: tau(x) = Delta^-1 x Delta. An involution."""
    w0 = _pw0(len(p))
    return _pmul(_pmul(w0, p), w0)


@functools.lru_cache(maxsize=1 << 18)
def _delta_complement(p: Perm) -> Perm:
    """The simple element Delta * p^-1, so that p^-1 = Delta^-1 * complement."""
    return _pmul(_pw0(len(p)), _pinv(p))


@functools.lru_cache(maxsize=1 << 20)
def _leftweight(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    """Rebalance the pair so that (x', y') is left-weighted and x'y' = xy.

    Moves crossings sigma_i with i in S(y) \\ F(x) from the head of y to the
    tail of x until the starting set of y is contained in the finishing set
    of x. Each move is O(1) via simultaneous image/position bookkeeping.
    """
    n = len(x)
    lx, ly = list(x), list(y)
    ix, iy = list(_pinv(x)), list(_pinv(y))
    moved = True
    while moved:
        moved = False
        for i in range(n - 1):
            # i in S(y): y starts with sigma_{i+1}; i not in F(x): x does not
            # finish with it, so the crossing transfers.
            if ly[i] > ly[i + 1] and ix[i] < ix[i + 1]:
                a, b = ix[i], ix[i + 1]
                lx[a], lx[b] = i + 1, i
                ix[i], ix[i + 1] = b, a
                v, w = ly[i], ly[i + 1]
                ly[i], ly[i + 1] = w, v
                iy[w], iy[v] = i, i + 1
                moved = True
    return tuple(lx), tuple(ly)


def _normalize(n: int, factors: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    """Left-weight an arbitrary factor sequence; return the power of Delta
    that floats to the front and the remaining factors (no Delta, no id)."""
    w0 = _pw0(n)
    idp = _pid(n)
    factors = [f for f in factors if f != idp]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            x, y = _leftweight(a, b)
            if (x, y) != (a, b):
                factors[i], factors[i + 1] = x, y
                changed = True
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == w0:
        lo += 1
    while lo < hi and factors[hi - 1] == idp:
        hi -= 1
    return lo, tuple(factors[lo:hi])


def _perm_word(p: Perm) -> list[int]:
    """A positive word (1-based letters) whose permutation braid is p."""
    q = list(p)
    out = []
    again = True
    while again:
        again = False
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                out.append(i + 1)
                q[i], q[i + 1] = q[i + 1], q[i]
                again = True
                break
    return out


# ---------------------------------------------------------------------------
# canonical forms


@dataclasses.dataclass(frozen=True)
class PermutationBraid:
    """A simple element: positive braid where strand pairs cross at most once."""

    table: PermutationTable

    def crossing_count(self) -> int:
        img = self.table.images
        return sum(
            1
            for i in range(self.table.size)
            for j in range(i + 1, self.table.size)
            if img[i] > img[j]
        )


@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """Left canonical form Delta^p A_1 ... A_k; the group-element identity."""

    strands: int
    delta_power: int
    factors: tuple[Perm, ...]

    @staticmethod
    def make(n: int, delta_power: int, factors: list[Perm]) -> "CanonicalForm":
        shift, fs = _normalize(n, list(factors))
        return CanonicalForm(n, delta_power + shift, fs)

    @staticmethod
    def identity(n: int) -> "CanonicalForm":
        return CanonicalForm(n, 0, ())

    @staticmethod
    def simple(n: int, p: Perm) -> "CanonicalForm":
        if p == _pid(n):
            return CanonicalForm(n, 0, ())
        if p == _pw0(n):
            return CanonicalForm(n, 1, ())
        return CanonicalForm(n, 0, (p,))

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    def mul(self, other: "CanonicalForm") -> "CanonicalForm":
        if self.strands != other.strands:
            raise StrandMismatchError("strand counts differ")
        q = other.delta_power
        left = self.factors if q % 2 == 0 else tuple(_tau(f) for f in self.factors)
        return CanonicalForm.make(
            self.strands, self.delta_power + q, list(left) + list(other.factors)
        )

    def inv(self) -> "CanonicalForm":
        k = len(self.factors)
        p = self.delta_power
        factors = []
        for j, a in enumerate(reversed(self.factors)):  # a = A_k, A_{k-1}, ...
            y = _delta_complement(a)
            if (k - 1 - j + p) % 2 == 1:
                y = _tau(y)
            factors.append(y)
        return CanonicalForm.make(self.strands, -k - p, factors)

    def conjugate_by(self, s: "CanonicalForm", s_inv: "CanonicalForm" | None = None) -> "CanonicalForm":
        """s^-1 * self * s."""
        if s_inv is None:
            s_inv = s.inv()
        return s_inv.mul(self).mul(s)

    def to_word(self) -> BraidWord:
        letters: list[int] = []
        n = self.strands
        if self.delta_power != 0:
            dw = _delta_letters(n)
            if self.delta_power > 0:
                letters.extend(dw * self.delta_power)
            else:
                inv = [-k for k in reversed(dw)]
                letters.extend(inv * (-self.delta_power))
        for f in self.factors:
            letters.extend(_perm_word(f))
        return BraidWord(n, tuple(letters))

    def factor_tables(self) -> tuple[PermutationBraid, ...]:
        return tuple(
            PermutationBraid(PermutationTable(self.strands, tuple(v + 1 for v in f)))
            for f in self.factors
        )

    def sort_key(self):
        return (self.delta_power, len(self.factors), self.factors)

    def to_json(self) -> dict:
        return {
            "n": self.strands,
            "delta_power": self.delta_power,
            "factors": [[v + 1 for v in f] for f in self.factors],
        }


def _delta_letters(n: int) -> list[int]:
    """Half twist as a word: (s1)(s2 s1)...(s_{n-1} ... s1)."""
    out: list[int] = []
    for i in range(1, n):
        out.extend(range(i, 0, -1))
    return out


def canonical_form(a: BraidWord) -> CanonicalForm:
    """Left canonical form of a word; idempotent on its own spellings."""
    n = a.strands
    if n <= 1:
        return CanonicalForm(n, 0, ())
    w0 = _pw0(n)
    factors: list[Perm] = []
    dpows: list[int] = []
    for k in a.letters:
        i = abs(k) - 1
        s = tuple(
            i + 1 if v == i else (i if v == i + 1 else v) for v in range(n)
        )
        if k > 0:
            factors.append(s)
            dpows.append(0)
        else:
            factors.append(_pmul(w0, s))  # Delta * sigma^-1 is simple
            dpows.append(-1)
    # Collect the Delta^-1 powers at the front; each factor gets conjugated
    # by the Delta power accumulated to its right.
    delta_pow = 0
    for i in range(len(factors) - 1, -1, -1):
        if delta_pow % 2 == 1:
            factors[i] = _tau(factors[i])
        delta_pow += dpows[i]
    return CanonicalForm.make(n, delta_pow, factors)


def equal(a: BraidWord, b: BraidWord) -> bool:
    """Word problem: equality in B_n."""
    if a.strands != b.strands:
        raise StrandMismatchError("cannot compare words on different strand counts")
    return canonical_form(a) == canonical_form(b)


def delta(n: int) -> BraidWord:
    """The positive half twist Delta_n."""
    if n < 2:
        raise ValueError("delta requires n >= 2")
    return BraidWord(n, tuple(_delta_letters(n)))


def full_twist(n: int) -> BraidWord:
    """Delta_n^2 = (s1 ... s_{n-1})^n, the generator of the center."""
    if n < 2:
        raise ValueError("full twist requires n >= 2")
    return BraidWord(n, tuple(range(1, n)) * n)


# ---------------------------------------------------------------------------
# conjugacy


@dataclasses.dataclass(frozen=True)
class ConjugacyResult:
    conjugate: bool
    witness: BraidWord | None = None

    def to_json(self) -> dict:
        out: dict = {"conjugate": self.conjugate}
        if self.witness is not None:
            out["witness"] = self.witness.format()
        return out


class SummitSearchError(RuntimeError):
    """Internal bound exceeded while walking a cycling orbit."""


@functools.lru_cache(maxsize=None)
def _simple_conjugators(n: int) -> tuple[tuple[CanonicalForm, CanonicalForm], ...]:
    """All nontrivial simple elements of B_n with their inverses, in
    lexicographic order of the underlying permutation."""
    out = []
    for p in itertools.permutations(range(n)):
        if p == _pid(n):
            continue
        s = CanonicalForm.simple(n, p)
        out.append((s, s.inv()))
    return tuple(out)


def _cycle(v: CanonicalForm) -> tuple[CanonicalForm, CanonicalForm]:
    """One cycling step; returns (new element, conjugator used)."""
    if not v.factors:
        return v, CanonicalForm.identity(v.strands)
    a1 = v.factors[0]
    iota = _tau(a1) if v.delta_power % 2 == 1 else a1
    nxt = CanonicalForm.make(
        v.strands, v.delta_power, list(v.factors[1:]) + [iota]
    )
    return nxt, CanonicalForm.simple(v.strands, iota)


def _decycle(v: CanonicalForm) -> tuple[CanonicalForm, CanonicalForm]:
    """One decycling step; returns (new element, conjugator used)."""
    if not v.factors:
        return v, CanonicalForm.identity(v.strands)
    ak = v.factors[-1]
    head = _tau(ak) if v.delta_power % 2 == 1 else ak
    nxt = CanonicalForm.make(
        v.strands, v.delta_power, [head] + list(v.factors[:-1])
    )
    return nxt, CanonicalForm.simple(v.strands, ak).inv()


def _summit(cf: CanonicalForm) -> tuple[CanonicalForm, CanonicalForm]:
    """Cycle to maximal infimum and decycle to minimal supremum; returns the
    summit element v and a conjugator g with v = g^-1 * cf * g."""
    n = cf.strands
    bound = max(1, n * (n - 1) // 2)
    v, g = cf, CanonicalForm.identity(n)
    improved = True
    while improved:
        improved = False
        stale = 0
        while stale < bound and v.factors:
            w, s = _cycle(v)
            if w.inf > v.inf:
                improved = True
                stale = 0
            else:
                stale += 1
            v, g = w, g.mul(s)
        stale = 0
        while stale < bound and v.factors:
            w, s = _decycle(v)
            if w.sup < v.sup:
                improved = True
                stale = 0
            else:
                stale += 1
            v, g = w, g.mul(s)
    return v, g


def _to_circuit(
    v: CanonicalForm, g: CanonicalForm, bound: int
) -> tuple[CanonicalForm, CanonicalForm, bool]:
    """Iterate cycling until the trajectory revisits an element; return the
    first element of the circuit (with its accumulated conjugator). The flag
    is False when the bound was hit before a circuit closed."""
    seen: dict[CanonicalForm, int] = {v: 0}
    traj = [(v, g)]
    for _ in range(bound):
        w, s = _cycle(v)
        g = g.mul(s)
        if w in seen:
            return traj[seen[w]][0], traj[seen[w]][1], True
        seen[w] = len(traj)
        traj.append((w, g))
        v = w
    return v, g, False


def _on_own_circuit(v: CanonicalForm, bound: int) -> bool:
    """Whether v lies on its own cycling circuit (ultra summit membership)."""
    seen = {v}
    w = v
    for _ in range(bound):
        w, _ = _cycle(w)
        if w == v:
            return True
        if w in seen:
            return False
        seen.add(w)
    raise SummitSearchError("cycling orbit exceeded the circuit bound")


def is_conjugate(a: BraidWord, b: BraidWord) -> ConjugacyResult:
    """Complete conjugacy decision in B_n with witness extraction.

    Returns a witness c with c * b * c^-1 = a whenever the answer is yes.
    """
    if a.strands != b.strands:
        raise StrandMismatchError("cannot compare words on different strand counts")
    n = a.strands
    if exponent_sum(a) != exponent_sum(b):
        return ConjugacyResult(False)
    if permutation(a).cycle_type() != permutation(b).cycle_type():
        return ConjugacyResult(False)
    ca, cb = canonical_form(a), canonical_form(b)
    if ca == cb:
        return ConjugacyResult(True, BraidWord.identity(n))

    va, ga = _summit(ca)
    vb, gb = _summit(cb)
    if (va.inf, va.sup) != (vb.inf, vb.sup):
        return ConjugacyResult(False)

    circuit_bound = max(10 * n * n, 64)
    va, ga, ok_a = _to_circuit(va, ga, circuit_bound)
    vb, gb, ok_b = _to_circuit(vb, gb, circuit_bound)
    uss_mode = ok_a and ok_b

    try:
        found = _closure_search(va, ga, vb, uss_mode, circuit_bound)
    except SummitSearchError:
        found = _closure_search(va, ga, vb, False, circuit_bound)
    if found is None:
        return ConjugacyResult(False)
    witness_cf = found.mul(gb.inv())
    witness = free_reduce(witness_cf.to_word())
    return ConjugacyResult(True, witness)


def _closure_search(
    va: CanonicalForm,
    ga: CanonicalForm,
    target: CanonicalForm,
    uss_mode: bool,
    circuit_bound: int,
) -> CanonicalForm | None:
    """Close the summit set of va under simple-element conjugation, breadth
    first in lexicographic order of the canonical-form encoding. Returns the
    accumulated conjugator h with target = h^-1 * (original a) * h when the
    target is reached, else None once the set is exhausted."""
    n = va.strands
    inf_sup = (va.inf, va.sup)
    simples = _simple_conjugators(n)
    visited: dict[CanonicalForm, CanonicalForm] = {va: ga}
    rejected: set[CanonicalForm] = set()
    if va == target:
        return ga
    frontier = [va]
    while frontier:
        frontier.sort(key=CanonicalForm.sort_key)
        nxt: list[CanonicalForm] = []
        for v in frontier:
            h = visited[v]
            for s, s_inv in simples:
                w = v.conjugate_by(s, s_inv)
                if (w.inf, w.sup) != inf_sup:
                    continue
                if w in visited or w in rejected:
                    continue
                if uss_mode and not _on_own_circuit(w, circuit_bound):
                    rejected.add(w)
                    continue
                visited[w] = h.mul(s)
                if w == target:
                    return visited[w]
                nxt.append(w)
        frontier = nxt
    return None


def conjugate_mod_full_twist(
    a: BraidWord, b: BraidWord
) -> tuple[ConjugacyResult, int | None]:
    """Decide whether a is conjugate to b * Delta^{2k} for some integer k.

    The twist power is forced by exponent sums; the answer is no whenever the
    exponent gap is not divisible by n(n-1). For n = 2 conjugacy degenerates
    to exponent-sum equality (B_2 is infinite cyclic).
    """
    if a.strands != b.strands:
        raise StrandMismatchError("cannot compare words on different strand counts")
    n = a.strands
    if n == 1:
        return ConjugacyResult(True, BraidWord.identity(1)), 0
    gap = exponent_sum(a) - exponent_sum(b)
    span = n * (n - 1)
    if gap % span != 0:
        return ConjugacyResult(False), None
    k = gap // span
    if n == 2:
        return ConjugacyResult(True, BraidWord.identity(2)), k
    shifted = b
    if k != 0:
        tw = full_twist(n)
        block = tw.letters if k > 0 else tuple(-x for x in reversed(tw.letters))
        shifted = BraidWord(n, b.letters + block * abs(k))
    res = is_conjugate(a, shifted)
    return res, (k if res.conjugate else None)
