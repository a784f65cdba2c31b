"""Good Lyndon words, dual PBW vectors and the dual canonical basis.

The table fixes a total order on the simple roots (default w1 < ... < wr) and
realizes everything over that order.  A non-default order is handled by
relabeling letters so that the chosen order becomes the natural tuple order,
computing on the relabeled Cartan datum, and translating words, weights and
elements back at the public boundary; every construction here commutes with a
simultaneous relabeling of letters and Cartan data.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import cartan, laurent, shuffle, words
from .cartan import CartanDatum, Weight
from .laurent import ONE, ZERO, LaurentPoly
from .shuffle import ShuffleElt
from .words import Word, format_word


class NotGoodLyndon(ValueError):
    """The word is not a good Lyndon word of this table."""


class NotGoodWord(ValueError):
    """The word is not a good word of this table."""


class NotInU(ValueError):
    """Expansion over the dual PBW family failed: the element lies outside the
    letter-generated subalgebra (or has non-integral expansion coefficients)."""


class UnsupportedFamily(ValueError):
    """The closed-form root vectors exist for the classical families only."""


class NotSimplyLaced(ValueError):
    """The commutation-class description needs a simply-laced datum."""


class StraighteningFailure(laurent.TheoryViolation):
    """The correction step of the straightening loop could not proceed."""


@dataclass(frozen=True)
class GoodWord:
    """A good word together with its non-increasing good-Lyndon factorization."""

    word: Word
    factors: tuple[tuple[Word, int], ...]

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class DualPBWVector:
    good_word: GoodWord
    elt: ShuffleElt
    kappa: LaurentPoly


@dataclass(frozen=True)
class DualCanonicalVector:
    good_word: GoodWord
    elt: ShuffleElt
    kappa: LaurentPoly


class GoodLyndonTable:
    """The bijection between positive roots and good Lyndon words, the induced
    convex order, and cached basis vectors built on top of it."""

    def __init__(self, datum: CartanDatum, order: Sequence[int] | None = None):
        r = datum.rank
        self.datum = datum
        self.order = tuple(order) if order is not None else tuple(range(1, r + 1))
        if sorted(self.order) != list(range(1, r + 1)):
            raise ValueError(f"order must be a permutation of 1..{r}")
        self._natural = self.order == tuple(range(1, r + 1))
        self._idatum = cartan.reorder(datum, self.order)
        # internal letter k <-> original letter self.order[k-1]
        self._out_letters = (0,) + self.order
        inv = [0] * (r + 1)
        for k, orig in enumerate(self.order, start=1):
            inv[orig] = k
        self._in_letters = tuple(inv)

        self._lyndon_of_root: dict[Weight, Word] = _good_lyndon_map(self._idatum)
        self._root_of_lyndon = {l: b for b, l in self._lyndon_of_root.items()}
        self._gl = frozenset(self._root_of_lyndon)
        self._r_cache: dict[Word, ShuffleElt] = {}
        self._dual_root_cache: dict[Word, tuple[ShuffleElt, LaurentPoly]] = {}
        self._canonical_cache: dict[Weight, tuple[tuple[Word, ShuffleElt, LaurentPoly], ...]] = {}

    # -- letter/weight/element translation -------------------------------------

    def _w_in(self, w: Word) -> Word:
        if any(not 1 <= a <= self.datum.rank for a in w):
            raise ValueError(f"{format_word(tuple(w))} has letters outside 1..{self.datum.rank}")
        if self._natural:
            return tuple(w)
        return tuple(self._in_letters[a] for a in w)

    def _w_out(self, w: Word) -> Word:
        if self._natural:
            return w
        return tuple(self._out_letters[a] for a in w)

    def _nu_in(self, nu: Weight) -> Weight:
        if len(nu) != self.datum.rank:
            raise ValueError(f"weight needs {self.datum.rank} entries")
        if self._natural:
            return tuple(nu)
        return tuple(nu[o - 1] for o in self.order)

    def _nu_out(self, nu: Weight) -> Weight:
        if self._natural:
            return nu
        out = [0] * len(nu)
        for k, o in enumerate(self.order):
            out[o - 1] = nu[k]
        return tuple(out)

    def _elt_out(self, e: ShuffleElt) -> ShuffleElt:
        if self._natural:
            return e
        return ShuffleElt(
            self.datum,
            self._nu_out(e.weight),
            {self._w_out(w): c for w, c in e.terms.items()},
        )

    def _elt_in(self, e: ShuffleElt) -> ShuffleElt:
        if e.datum != self.datum:
            raise shuffle.DatumMismatch("element does not live over this table's datum")
        if self._natural:
            return e
        return ShuffleElt(
            self._idatum,
            self._nu_in(e.weight),
            {self._w_in(w): c for w, c in e.terms.items()},
        )

    # -- the bijection and the convex order --------------------------------------

    def lyndon_words(self) -> tuple[Word, ...]:
        """All good Lyndon words, ascending in the table's lexicographic order."""
        return tuple(self._w_out(l) for l in sorted(self._gl))

    def lyndon_of_root(self, beta: Weight) -> Word:
        try:
            return self._w_out(self._lyndon_of_root[self._nu_in(tuple(beta))])
        except KeyError:
            raise NotGoodLyndon(f"{beta} is not a positive root") from None

    def root_of_lyndon(self, l: Word) -> Weight:
        li = self._w_in(tuple(l))
        if li not in self._root_of_lyndon:
            raise NotGoodLyndon(f"{format_word(l)} is not a good Lyndon word")
        return self._nu_out(self._root_of_lyndon[li])

    def roots_in_convex_order(self) -> tuple[Weight, ...]:
        """Positive roots sorted by their good Lyndon words."""
        return tuple(self._nu_out(self._root_of_lyndon[l]) for l in sorted(self._gl))

    # -- good words ----------------------------------------------------------------

    def _factors_i(self, w: Word) -> tuple[tuple[Word, int], ...] | None:
        parts = words.lyndon_factorization(w)
        if any(p not in self._gl for p in parts):
            return None
        grouped: list[tuple[Word, int]] = []
        for p in parts:
            if grouped and grouped[-1][0] == p:
                grouped[-1] = (p, grouped[-1][1] + 1)
            else:
                grouped.append((p, 1))
        return tuple(grouped)

    def is_good(self, w: Word) -> bool:
        return self._factors_i(self._w_in(tuple(w))) is not None

    def good_word(self, w: Word) -> GoodWord:
        wi = self._w_in(tuple(w))
        factors = self._factors_i(wi)
        if factors is None:
            raise NotGoodWord(f"{format_word(w)} is not a good word")
        return GoodWord(tuple(w), tuple((self._w_out(l), m) for l, m in factors))

    def good_words_of_weight(self, nu: Weight) -> tuple[GoodWord, ...]:
        """One good word per Kostant partition of nu, ascending lexicographically."""
        nui = self._nu_in(tuple(nu))
        out = []
        for part in cartan.kostant_partitions(self._idatum, nui):
            factors = sorted((self._lyndon_of_root[b] for b in part), reverse=True)
            w = tuple(a for l in factors for a in l)
            out.append(w)
        out.sort()
        return tuple(self.good_word(self._w_out(w)) for w in out)

    # -- Lyndon basis vectors -------------------------------------------------------

    def _r_i(self, l: Word) -> ShuffleElt:
        hit = self._r_cache.get(l)
        if hit is not None:
            return hit
        if len(l) == 1:
            out = ShuffleElt.from_word(self._idatum, l)
        else:
            l1, l2 = words.costandard_factorization(l)
            out = shuffle.shuffle_bracket(self._r_i(l1), self._r_i(l2))
        self._r_cache[l] = out
        return out

    def r_of_lyndon(self, l: Word) -> ShuffleElt:
        """The iterated shuffle bracket over the co-standard factorization."""
        li = self._w_in(tuple(l))
        if li not in self._gl:
            raise NotGoodLyndon(f"{format_word(l)} is not a good Lyndon word")
        return self._elt_out(self._r_i(li))

    # -- dual PBW vectors -------------------------------------------------------------

    def _dual_root_i(self, l: Word) -> tuple[ShuffleElt, LaurentPoly]:
        hit = self._dual_root_cache.get(l)
        if hit is not None:
            return hit
        datum = self._idatum
        beta = self._root_of_lyndon[l]
        n_val = cartan.n_of(datum, beta)
        norm = cartan.bilinear_form(datum, beta, beta)
        # Normalize the bracket vector: scale by (-1)^{len-1} q^{-N} times the
        # inverse of the squared-norm product, which is exact by construction.
        numerator = ONE - laurent.monomial(norm)
        denominator = ONE
        for i, c in enumerate(beta):
            if c:
                factor = ONE - laurent.monomial(2 * datum.d[i])
                for _ in range(c):
                    denominator = denominator * factor
        sign = 1 if len(l) % 2 else -1
        scale = numerator.shifted(-n_val) * sign
        scaled = self._r_i(l).scaled(scale)
        normalized = ShuffleElt(
            datum,
            scaled.weight,
            {w: laurent.exact_div(c, denominator) for w, c in scaled.terms.items()},
        )
        kappa_sq = normalized.terms.get(l, ZERO)
        kappa = laurent.sqrt_exact(kappa_sq)
        elt = ShuffleElt(
            datum,
            normalized.weight,
            {w: laurent.exact_div(c, kappa) for w, c in normalized.terms.items()},
        )
        if shuffle.max_word(elt) != l:
            raise StraighteningFailure(f"dual root vector of {format_word(l)} has wrong maximal word")
        self._dual_root_cache[l] = (elt, kappa)
        return elt, kappa

    def dual_root_vector(self, l: Word) -> DualPBWVector:
        li = self._w_in(tuple(l))
        if li not in self._gl:
            raise NotGoodLyndon(f"{format_word(l)} is not a good Lyndon word")
        elt, kappa = self._dual_root_i(li)
        return DualPBWVector(self.good_word(tuple(l)), self._elt_out(elt), kappa)

    def _d_of_lyndon(self, l: Word) -> int:
        beta = self._root_of_lyndon[l]
        d = cartan.bilinear_form(self._idatum, beta, beta) // 2
        assert d in (1, 2, 3), (l, d)
        return d

    def _kappa_i(self, factors: Iterable[tuple[Word, int]]) -> LaurentPoly:
        out = ONE
        for l, a in factors:
            _, kappa_l = self._dual_root_i(l)
            for _ in range(a):
                out = out * kappa_l
            out = out * laurent.q_factorial(a, self._d_of_lyndon(l))
        return out

    def kappa(self, g: Word | GoodWord) -> LaurentPoly:
        """The bar-symmetric leading coefficient attached to a good word."""
        if isinstance(g, GoodWord):
            g = g.word
        wi = self._w_in(tuple(g))
        factors = self._factors_i(wi)
        if factors is None:
            raise NotGoodWord(f"{format_word(g)} is not a good word")
        return self._kappa_i(factors)

    def _dual_pbw_i(self, wi: Word, factors: tuple[tuple[Word, int], ...]) -> tuple[ShuffleElt, LaurentPoly]:
        if not factors:  # the empty good word indexes the unit
            return ShuffleElt.from_word(self._idatum, ()), ONE
        if len(factors) == 1 and factors[0][1] == 1:
            return self._dual_root_i(wi)
        shift = sum(comb(a, 2) * self._d_of_lyndon(l) for l, a in factors)
        elt: ShuffleElt | None = None
        for l, a in reversed(factors):
            base, _ = self._dual_root_i(l)
            power = base
            for _ in range(a - 1):
                power = shuffle.qshuffle(power, base)
            elt = power if elt is None else shuffle.qshuffle(elt, power)
        assert elt is not None
        elt = elt.scaled(laurent.monomial(shift))
        kappa = self._kappa_i(factors)
        if shuffle.max_word(elt) != wi or elt.terms[wi] != kappa:
            raise StraighteningFailure(f"dual PBW vector of {format_word(wi)} has wrong leading term")
        return elt, kappa

    def dual_pbw(self, g: Word | GoodWord) -> DualPBWVector:
        """The normalized shuffle product of dual root vectors, smallest factor first."""
        good = g if isinstance(g, GoodWord) else self.good_word(tuple(g))
        wi = self._w_in(good.word)
        factors = self._factors_i(wi)
        if factors is None:
            raise NotGoodWord(f"{format_word(good.word)} is not a good word")
        elt, kappa = self._dual_pbw_i(wi, factors)
        return DualPBWVector(good, self._elt_out(elt), kappa)

    # -- the dual canonical basis --------------------------------------------------------

    def _dual_canonical_weight_i(self, nui: Weight) -> tuple[tuple[Word, ShuffleElt, LaurentPoly], ...]:
        hit = self._canonical_cache.get(nui)
        if hit is not None:
            return hit
        goods: list[tuple[Word, tuple[tuple[Word, int], ...]]] = []
        for part in cartan.kostant_partitions(self._idatum, nui):
            factors = sorted((self._lyndon_of_root[b] for b in part), reverse=True)
            w = tuple(a for l in factors for a in l)
            goods.append(w)
        goods.sort()
        done: dict[Word, tuple[ShuffleElt, LaurentPoly]] = {}
        out: list[tuple[Word, ShuffleElt, LaurentPoly]] = []
        for g in goods:
            factors = self._factors_i(g)
            assert factors is not None
            elt, kappa = self._dual_pbw_i(g, factors)
            last_pivot: Word | None = None
            while True:
                bad = [w for w, c in elt.terms.items() if not c.is_bar_symmetric()]
                if not bad:
                    break
                pivots = [w for w in bad if self._factors_i(w) is not None]
                if not pivots:
                    raise StraighteningFailure(
                        f"no good pivot below {format_word(g)}; asymmetric words "
                        f"{[format_word(w) for w in sorted(bad, reverse=True)]}"
                    )
                pivot = max(pivots)
                if pivot >= g or (last_pivot is not None and pivot >= last_pivot):
                    raise StraighteningFailure(f"pivot {format_word(pivot)} fails to decrease")
                last_pivot = pivot
                alpha = elt.terms[pivot]
                kappa_p = self._kappa_i(self._factors_i(pivot))
                # Bar symmetry of alpha - gamma*kappa_p with gamma in q Z[q]
                # pins gamma: gamma - bar(gamma) = (alpha - bar(alpha)) / kappa_p.
                delta = laurent.exact_div(alpha - alpha.bar(), kappa_p)
                if delta.bar() != -delta:
                    raise StraighteningFailure(f"correction at {format_word(pivot)} is not antisymmetric")
                gamma = delta.positive_part()
                if not gamma:
                    raise StraighteningFailure(f"empty correction at {format_word(pivot)}")
                b_pivot, _ = done[pivot]
                elt = elt - b_pivot.scaled(gamma)
            if shuffle.max_word(elt) != g or elt.terms[g] != kappa:
                raise StraighteningFailure(f"straightened vector at {format_word(g)} has wrong leading term")
            done[g] = (elt, kappa)
            out.append((g, elt, kappa))
        result = tuple(out)
        self._canonical_cache[nui] = result
        return result

    def dual_canonical_weight(self, nu: Weight) -> tuple[DualCanonicalVector, ...]:
        """All dual canonical vectors of one weight, ascending by good word."""
        nui = self._nu_in(tuple(nu))
        out = []
        for g, elt, kappa in self._dual_canonical_weight_i(nui):
            out.append(
                DualCanonicalVector(self.good_word(self._w_out(g)), self._elt_out(elt), kappa)
            )
        return tuple(out)

    def dual_canonical_vector(self, g: Word) -> DualCanonicalVector:
        """The dual canonical vector indexed by one good word."""
        good = self.good_word(tuple(g))
        nu = cartan.word_weight(self.datum, good.word)
        for vec in self.dual_canonical_weight(nu):
            if vec.good_word.word == good.word:
                return vec
        raise AssertionError("unreachable: every good word indexes a vector")

    # -- expansion over the dual PBW family ------------------------------------------------

    def _expand_i(self, elt_i: ShuffleElt) -> dict[Word, LaurentPoly]:
        residual = elt_i
        out: dict[Word, LaurentPoly] = {}
        while residual:
            w = shuffle.max_word(residual)
            factors = self._factors_i(w)
            if factors is None:
                raise NotInU(f"maximal word {format_word(self._w_out(w))} of the residual is not good")
            elt, kappa = self._dual_pbw_i(w, factors)
            try:
                c = laurent.exact_div(residual.terms[w], kappa)
            except laurent.InexactDivision as exc:
                raise NotInU(f"leading coefficient at {format_word(self._w_out(w))} not divisible") from exc
            out[w] = c
            residual = residual - elt.scaled(c)
        return out

    def expand_in_dual_pbw(self, f: ShuffleElt) -> dict[Word, LaurentPoly]:
        """Coefficients of f over the dual PBW vectors, by elimination at the
        maximal word; raises NotInU when the maximal word is not good."""
        return {self._w_out(w): c for w, c in self._expand_i(self._elt_in(f)).items()}


def good_lyndon_words(datum: CartanDatum, order: Sequence[int] | None = None) -> GoodLyndonTable:
    """Build the table of good Lyndon words for a datum and a simple-root order."""
    return GoodLyndonTable(datum, order)


def _good_lyndon_map(datum: CartanDatum) -> dict[Weight, Word]:
    """The bijection root -> Lyndon word, by increasing height: a simple root
    maps to its letter, and a composite root takes the maximal concatenation
    l(b1) l(b2) over decompositions b1 + b2 = b with l(b1) < l(b2)."""
    roots = cartan.positive_roots(datum)
    root_set = set(roots)
    table: dict[Weight, Word] = {}
    for beta in roots:  # already ordered by increasing height
        if cartan.height(beta) == 1:
            table[beta] = (beta.index(1) + 1,)
            continue
        best: Word | None = None
        for gamma in roots:
            if cartan.height(gamma) >= cartan.height(beta):
                break
            delta = cartan.sub(beta, gamma)
            if any(x < 0 for x in delta) or delta not in root_set:
                continue
            l1, l2 = table[gamma], table[delta]
            if l1 < l2:
                cand = l1 + l2
                if best is None or cand > best:
                    best = cand
        if best is None or not words.is_lyndon(best):
            raise RuntimeError(f"no Lyndon cover found for root {beta}")
        table[beta] = best
    return table


# -- reports and scans ---------------------------------------------------------------


@dataclass(frozen=True)
class PositivityReport:
    """Negative-coefficient witnesses for one weight; empty means all positive."""

    weight: Weight
    checked: int
    violations: tuple[tuple[Word, Word, LaurentPoly], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def positivity_report(table: GoodLyndonTable, nu: Weight) -> PositivityReport:
    """Scan every dual canonical vector of weight nu for negative coefficients."""
    violations = []
    vectors = table.dual_canonical_weight(nu)
    for vec in vectors:
        for w in sorted(vec.elt.terms):
            c = vec.elt.terms[w]
            if any(v < 0 for v in c.terms.values()):
                violations.append((vec.good_word.word, w, c))
    return PositivityReport(tuple(nu), len(vectors), tuple(violations))


def is_real(table: GoodLyndonTable, vec: DualCanonicalVector) -> bool:
    """True when the shuffle square of vec is a power of q times another
    dual canonical vector."""
    square = shuffle.qshuffle(vec.elt, vec.elt)
    # the maximal word is taken in the table's order
    top = table._w_out(shuffle.max_word(table._elt_in(square)))
    if not table.is_good(top):
        return False
    for candidate in table.dual_canonical_weight(square.weight):
        if candidate.good_word.word == top:
            break
    else:
        return False
    try:
        ratio = laurent.exact_div(square.terms[top], candidate.kappa)
    except laurent.InexactDivision:
        return False
    if not ratio.is_monomial() or ratio.leading_coefficient() != 1:
        return False
    return square == candidate.elt.scaled(ratio)


def _segment_elt(datum: CartanDatum, lo: int, hi: int) -> ShuffleElt:
    """The word w[lo..hi], or the empty word when hi < lo."""
    return ShuffleElt.from_word(datum, tuple(range(lo, hi + 1)))


def closed_form_root_vector(datum: CartanDatum, beta: Weight) -> ShuffleElt:
    """Closed shuffle formulas for the root vectors of the classical families
    under the standard node order; independent of the bracketing route."""
    if datum.family not in "ABCD":
        raise UnsupportedFamily(f"no closed form for family {datum.family}")
    beta = tuple(beta)
    if not cartan.is_positive_root(datum, beta):
        raise ValueError(f"{beta} is not a positive root of {datum}")
    r = datum.rank
    support = [i + 1 for i, c in enumerate(beta) if c]
    if datum.family == "A":
        return _segment_elt(datum, support[0], support[-1])
    if datum.family == "B":
        if max(beta) == 1:
            return _segment_elt(datum, support[0], support[-1])
        j = max(i + 1 for i, c in enumerate(beta) if c == 2)
        k = support[-1]
        inner = shuffle.qshuffle(_segment_elt(datum, 2, j), _segment_elt(datum, 1, k))
        return shuffle.prepend_letter(1, inner).scaled(laurent.q_int(2, datum.d[0]))
    if datum.family == "C":
        if max(beta) == 1:
            return _segment_elt(datum, support[0], support[-1])
        j = max(i + 1 for i, c in enumerate(beta) if c == 2)
        k = support[-1]
        inner = shuffle.qshuffle(_segment_elt(datum, 2, j), _segment_elt(datum, 2, k))
        out = shuffle.prepend_letter(1, inner)
        # Equal factors double the leading interleaving; the extra q restores
        # the bar-symmetric leading coefficient the root vector must carry.
        return out.scaled(laurent.monomial(1)) if j == k else out
    # family D: chains avoiding a fork node, the 1-3-...-i chain, or the full fork
    if beta[0] == 0:
        return _segment_elt(datum, support[0], support[-1])
    if beta[1] == 0:
        w = (1,) + tuple(range(3, support[-1] + 1))
        return ShuffleElt.from_word(datum, w)
    doubled = [i + 1 for i, c in enumerate(beta) if c == 2]
    j = max(doubled) if doubled else 2
    k = support[-1]
    inner = shuffle.qshuffle(_segment_elt(datum, 2, j), _segment_elt(datum, 3, k)) - shuffle.qshuffle(
        _segment_elt(datum, 2, k), _segment_elt(datum, 3, j)
    ).scaled(laurent.monomial(1))
    return shuffle.prepend_letter(1, inner)


def commutation_class_root_vector(table: GoodLyndonTable, l: Word) -> ShuffleElt:
    """For simply-laced data the root vector is the plain sum, coefficient one,
    of the commutation class of its good Lyndon word."""
    datum = table.datum
    if any(d != 1 for d in datum.d):
        raise NotSimplyLaced(f"{datum} is not simply laced")
    table.root_of_lyndon(l)  # validates membership
    cls = words.commutation_class(tuple(l), datum)
    return ShuffleElt(datum, cartan.word_weight(datum, l), {w: ONE for w in cls})


# -- whole-range scans ------------------------------------------------------------------


@dataclass(frozen=True)
class WeightEntry:
    weight: Weight
    vectors: int
    violations: tuple[dict, ...]
    elapsed: float


@dataclass(frozen=True)
class ScanReport:
    check: str
    max_height: int
    entries: tuple[WeightEntry, ...]
    elapsed: float

    @property
    def total_vectors(self) -> int:
        return sum(e.vectors for e in self.entries)

    @property
    def total_violations(self) -> int:
        return sum(len(e.violations) for e in self.entries)


def _positivity_violations(table: GoodLyndonTable, nu: Weight) -> list[dict]:
    report = positivity_report(table, nu)
    return [
        {"good_word": list(g), "word": list(w), "coefficient": c.to_json()}
        for g, w, c in report.violations
    ]


def _reality_violations(table: GoodLyndonTable, nu: Weight) -> list[dict]:
    out = []
    for vec in table.dual_canonical_weight(nu):
        if not is_real(table, vec):
            out.append({"good_word": list(vec.good_word.word), "kind": "imaginary"})
    return out


def _invariant_violations(table: GoodLyndonTable, nu: Weight) -> list[dict]:
    # all comparisons run in internal coordinates, where the table's order
    # is the natural tuple order; words are translated back for the report
    out = []
    nui = table._nu_in(tuple(nu))
    vectors = table._dual_canonical_weight_i(nui)
    partitions = cartan.kostant_partitions(table._idatum, nui)
    if len(vectors) != len(partitions):
        out.append({"kind": "count", "good_words": len(vectors), "kostant": len(partitions)})
    for g, elt, kappa in vectors:
        record = {"good_word": list(table._w_out(g))}
        if max(elt.terms) != g:
            out.append({**record, "kind": "max-word"})
            continue
        if elt.terms[g] != kappa:
            out.append({**record, "kind": "leading-coefficient"})
        if not kappa.is_bar_symmetric():
            out.append({**record, "kind": "kappa-not-symmetric"})
        if any(not c.is_bar_symmetric() for c in elt.terms.values()):
            out.append({**record, "kind": "coefficient-not-symmetric"})
        membership = shuffle.serre_membership(elt)
        if not membership.ok:
            out.append({**record, "kind": "not-in-subalgebra", "witness": str(membership.witness)})
        expansion = table._expand_i(elt)
        diag = expansion.pop(g, ZERO)
        if diag != ONE:
            out.append({**record, "kind": "expansion-diagonal", "value": str(diag)})
        for h, c in expansion.items():
            # off-diagonal coefficients live in q Z[q] and sit strictly below g
            if (c and c.valuation() < 1) or h > g:
                out.append(
                    {**record, "kind": "expansion-off-diagonal", "at": list(table._w_out(h)), "value": str(c)}
                )
    return out


_SCAN_CHECKS = {
    "positivity": _positivity_violations,
    "reality": _reality_violations,
    "invariants": _invariant_violations,
}


def scan(table: GoodLyndonTable, max_height: int, check: str) -> ScanReport:
    """Run one check over every nonzero weight of height at most max_height."""
    if check not in _SCAN_CHECKS:
        raise ValueError(f"unknown check {check!r}; choose from {sorted(_SCAN_CHECKS)}")
    run = _SCAN_CHECKS[check]
    entries = []
    t0 = time.perf_counter()
    for nu in cartan.weights_up_to_height(table.datum.rank, max_height):
        w0 = time.perf_counter()
        violations = tuple(run(table, nu))
        vectors = len(table.dual_canonical_weight(nu))
        entries.append(WeightEntry(nu, vectors, violations, time.perf_counter() - w0))
    return ScanReport(check, max_height, tuple(entries), time.perf_counter() - t0)
