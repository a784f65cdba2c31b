"""The twisted shuffle algebra on words: homogeneous elements with Laurent
polynomial coefficients, the q-shuffle product, concatenation, letter-deletion
operators, the reversal / bar / composite twists, and the linear-relation
membership test for the subalgebra generated by the letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import cartan, laurent
from .cartan import CartanDatum, Weight
from .laurent import ONE, ZERO, LaurentPoly
from .words import Word, format_word


class DatumMismatch(ValueError):
    """Operands live over different Cartan data."""


class ZeroElement(ValueError):
    """The operation needs a nonzero element."""


class HomogeneityError(ValueError):
    """Words of different weights were mixed in one element."""


class ShuffleElt:
    """A homogeneous element: a weight plus a sparse map word -> coefficient.

    Immutable by convention.  Every stored word has the element's weight and
    no stored coefficient is zero; the zero element is the empty map (its
    weight tag may lie outside the nonnegative cone, e.g. after deletions).
    """

    __slots__ = ("datum", "weight", "terms")

    def __init__(self, datum: CartanDatum, weight: Weight, terms: Mapping[Word, LaurentPoly] | None = None):
        if len(weight) != datum.rank:
            raise HomogeneityError("weight length must equal the rank")
        clean: dict[Word, LaurentPoly] = {}
        for w, c in (terms or {}).items():
            if not c:
                continue
            if cartan.word_weight(datum, w) != weight:
                raise HomogeneityError(f"word {format_word(w)} does not have weight {weight}")
            clean[w] = c
        self.datum = datum
        self.weight = tuple(weight)
        self.terms = clean

    @classmethod
    def from_word(cls, datum: CartanDatum, w: Word, coefficient: LaurentPoly = ONE) -> ShuffleElt:
        return cls(datum, cartan.word_weight(datum, w), {tuple(w): coefficient})

    @classmethod
    def zero(cls, datum: CartanDatum, weight: Weight) -> ShuffleElt:
        return cls(datum, weight, {})

    # -- basic structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShuffleElt):
            return NotImplemented
        if self.datum != other.datum or self.terms != other.terms:
            return False
        # Zero elements compare equal across weight tags; nonzero ones share
        # the weight automatically through their words.
        return True

    def __hash__(self) -> int:
        return hash((self.datum, frozenset(self.terms.items())))

    def support(self) -> list[Word]:
        return sorted(self.terms)

    def __add__(self, other: ShuffleElt) -> ShuffleElt:
        self._check_peer(other, same_weight=True)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return _raw_elt(self.datum, self.weight if self.terms or not other.terms else other.weight, out)

    def __sub__(self, other: ShuffleElt) -> ShuffleElt:
        return self + (-other)

    def __neg__(self) -> ShuffleElt:
        return _raw_elt(self.datum, self.weight, {w: -c for w, c in self.terms.items()})

    def scaled(self, c: LaurentPoly | int) -> ShuffleElt:
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        if not c:
            return ShuffleElt.zero(self.datum, self.weight)
        return _raw_elt(self.datum, self.weight, {w: v * c for w, v in self.terms.items()})

    def _check_peer(self, other: ShuffleElt, same_weight: bool = False) -> None:
        if self.datum != other.datum:
            raise DatumMismatch("operands live over different Cartan data")
        if same_weight and self.terms and other.terms and self.weight != other.weight:
            raise HomogeneityError(f"cannot mix weights {self.weight} and {other.weight}")

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for w in sorted(self.terms, reverse=True):
            c = self.terms[w]
            if c == ONE:
                lines.append(format_word(w))
            elif c.is_monomial():
                lines.append(f"{c} * {format_word(w)}")
            else:
                lines.append(f"({c}) * {format_word(w)}")
        return " + ".join(lines)

    def __repr__(self) -> str:
        return f"ShuffleElt({self.datum}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "weight": list(self.weight),
            "terms": [
                {"word": list(w), "coef": self.terms[w].to_json()}
                for w in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, datum: CartanDatum, data: Mapping) -> ShuffleElt:
        terms = {
            tuple(entry["word"]): LaurentPoly.from_json(entry["coef"])
            for entry in data["terms"]
        }
        return cls(datum, tuple(data["weight"]), terms)


def _raw_elt(datum: CartanDatum, weight: Weight, terms: dict[Word, LaurentPoly]) -> ShuffleElt:
    e = ShuffleElt.__new__(ShuffleElt)
    e.datum = datum
    e.weight = weight
    e.terms = terms
    return e


# -- the q-shuffle product -----------------------------------------------------

# Word-pair shuffles are memoized as raw {word: {exponent: coeff}} maps; cached
# values are shared and must never be mutated.
_CACHE: dict[tuple[CartanDatum, Word, Word], dict[Word, dict[int, int]]] = {}


def clear_cache() -> None:
    _CACHE.clear()


def _mul_add(acc: dict[int, int], p: Mapping[int, int], q: Mapping[int, int]) -> None:
    """acc += p * q on raw exponent maps."""
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            s = acc.get(e, 0) + c1 * c2
            if s:
                acc[e] = s
            else:
                del acc[e]


def _shift_add(acc: dict[int, int], p: Mapping[int, int], k: int) -> None:
    """acc += q^k * p on raw exponent maps."""
    for e, c in p.items():
        s = acc.get(e + k, 0) + c
        if s:
            acc[e + k] = s
        else:
            del acc[e + k]


def _shuffle_words(datum: CartanDatum, w1: Word, w2: Word) -> dict[Word, dict[int, int]]:
    """The product of two single words: peel the last letter of either factor,
    twisting the second branch by q^{-(|w1|, last of w2)}."""
    if not w1:
        return {w2: {0: 1}}
    if not w2:
        return {w1: {0: 1}}
    key = (datum, w1, w2)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    a, b = w1[-1], w2[-1]
    bil = datum.bilinear
    out: dict[Word, dict[int, int]] = {}
    for u, p in _shuffle_words(datum, w1[:-1], w2).items():
        _shift_add(out.setdefault(u + (a,), {}), p, 0)
    shift = -sum(bil[x - 1][b - 1] for x in w1)
    for u, p in _shuffle_words(datum, w1, w2[:-1]).items():
        _shift_add(out.setdefault(u + (b,), {}), p, shift)
    _CACHE[key] = out
    return out


def qshuffle(f: ShuffleElt, g: ShuffleElt) -> ShuffleElt:
    """The bilinear q-shuffle product."""
    f._check_peer(g)
    datum = f.datum
    weight = cartan.add(f.weight, g.weight)
    acc: dict[Word, dict[int, int]] = {}
    for wf, cf in f.terms.items():
        for wg, cg in g.terms.items():
            scale = (cf * cg).terms
            for u, p in _shuffle_words(datum, wf, wg).items():
                _mul_add(acc.setdefault(u, {}), scale, p)
    terms = {w: laurent.LaurentPoly(d) for w, d in acc.items() if d}
    return _raw_elt(datum, weight, terms)


def qshuffle_by_interleaving(datum: CartanDatum, w1: Word, w2: Word) -> ShuffleElt:
    """The same product of two words by direct enumeration of interleavings.

    Each way of placing w1's letters (in order) among len(w1)+len(w2) slots
    contributes the interleaved word with exponent minus the sum of pairings
    of every w1-letter with every w2-letter placed after it.  Exists to
    cross-check the recursive route at small size.
    """
    from itertools import combinations

    bil = datum.bilinear
    m, n = len(w1), len(w2)
    acc: dict[Word, dict[int, int]] = {}
    for pos in combinations(range(m + n), m):
        chosen = set(pos)
        rest = [p for p in range(m + n) if p not in chosen]
        letters = [0] * (m + n)
        for k, p in enumerate(pos):
            letters[p] = w1[k]
        for k, p in enumerate(rest):
            letters[p] = w2[k]
        e = 0
        for k, p in enumerate(pos):
            for l, p2 in enumerate(rest):
                if p < p2:
                    e += bil[w1[k] - 1][w2[l] - 1]
        _shift_add(acc.setdefault(tuple(letters), {}), {0: 1}, -e)
    terms = {w: laurent.LaurentPoly(d) for w, d in acc.items() if d}
    return _raw_elt(datum, cartan.word_weight(datum, w1 + w2), terms)


def concat(f: ShuffleElt, g: ShuffleElt) -> ShuffleElt:
    """Coefficient-wise bilinear concatenation of words."""
    f._check_peer(g)
    out: dict[Word, LaurentPoly] = {}
    for wf, cf in f.terms.items():
        for wg, cg in g.terms.items():
            w = wf + wg
            s = out.get(w, ZERO) + cf * cg
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return _raw_elt(f.datum, cartan.add(f.weight, g.weight), out)


def prepend_letter(i: int, f: ShuffleElt) -> ShuffleElt:
    alpha = cartan.simple_root(f.datum, i)
    return _raw_elt(
        f.datum,
        cartan.add(alpha, f.weight),
        {(i,) + w: c for w, c in f.terms.items()},
    )


def shuffle_bracket(f: ShuffleElt, g: ShuffleElt) -> ShuffleElt:
    """f * g - q^{(|f|,|g|)} g * f."""
    f._check_peer(g)
    e = cartan.bilinear_form(f.datum, f.weight, g.weight)
    return qshuffle(f, g) - qshuffle(g, f).scaled(laurent.monomial(e))


# -- deletion operators and twists ----------------------------------------------


def e_prime(f: ShuffleElt, i: int) -> ShuffleElt:
    """Linear extension of last-letter deletion (delete a trailing i)."""
    alpha = cartan.simple_root(f.datum, i)
    out: dict[Word, LaurentPoly] = {}
    for w, c in f.terms.items():
        if w and w[-1] == i:
            u = w[:-1]
            s = out.get(u, ZERO) + c
            if s:
                out[u] = s
            else:
                out.pop(u, None)
    return _raw_elt(f.datum, cartan.sub(f.weight, alpha), out)


def e_prime_dag(f: ShuffleElt, i: int) -> ShuffleElt:
    """Linear extension of first-letter deletion (delete a leading i)."""
    alpha = cartan.simple_root(f.datum, i)
    out: dict[Word, LaurentPoly] = {}
    for w, c in f.terms.items():
        if w and w[0] == i:
            u = w[1:]
            s = out.get(u, ZERO) + c
            if s:
                out[u] = s
            else:
                out.pop(u, None)
    return _raw_elt(f.datum, cartan.sub(f.weight, alpha), out)


def _pair_sum(datum: CartanDatum, w: Word) -> int:
    """sum over s < t of (alpha_{w_s}, alpha_{w_t})."""
    bil = datum.bilinear
    total = 0
    for s in range(len(w)):
        row = bil[w[s] - 1]
        for t in range(s + 1, len(w)):
            total += row[w[t] - 1]
    return total


def tau(f: ShuffleElt) -> ShuffleElt:
    """Word reversal; an anti-automorphism of the shuffle product."""
    out: dict[Word, LaurentPoly] = {}
    for w, c in f.terms.items():
        u = w[::-1]
        s = out.get(u, ZERO) + c
        out[u] = s
    return _raw_elt(f.datum, f.weight, {w: c for w, c in out.items() if c})


def bar_elt(f: ShuffleElt) -> ShuffleElt:
    """q -> q^{-1} on coefficients, each word reversed and twisted by
    q^{-sum_{s<t}(alpha_{w_s}, alpha_{w_t})}."""
    out: dict[Word, LaurentPoly] = {}
    for w, c in f.terms.items():
        u = w[::-1]
        v = c.bar().shifted(-_pair_sum(f.datum, w))
        s = out.get(u, ZERO) + v
        out[u] = s
    return _raw_elt(f.datum, f.weight, {w: c for w, c in out.items() if c})


def sigma(f: ShuffleElt) -> ShuffleElt:
    """bar composed with reversal: words kept, coefficients conjugated and twisted."""
    return bar_elt(tau(f))


# -- queries ---------------------------------------------------------------------


def max_word(f: ShuffleElt) -> Word:
    if not f.terms:
        raise ZeroElement("the zero element has no maximal word")
    return max(f.terms)


def coefficient(f: ShuffleElt, w: Word) -> LaurentPoly:
    return f.terms.get(tuple(w), ZERO)


def specialize_q1(f: ShuffleElt) -> dict[Word, int]:
    """Evaluate every coefficient at q = 1, dropping zeros."""
    out = {w: c.at_one() for w, c in f.terms.items()}
    return {w: v for w, v in out.items() if v}


# -- membership in the letter-generated subalgebra --------------------------------


@dataclass(frozen=True)
class MembershipWitness:
    """One failing linear relation: the context (i, j, z, t) and its value."""

    i: int
    j: int
    left: Word
    right: Word
    total: LaurentPoly

    def __str__(self) -> str:
        return (
            f"relation i={self.i} j={self.j} z={format_word(self.left)} "
            f"t={format_word(self.right)} sums to {self.total}"
        )


@dataclass(frozen=True)
class MembershipResult:
    ok: bool
    witness: MembershipWitness | None

    def __bool__(self) -> bool:
        return self.ok


def serre_membership(f: ShuffleElt) -> MembershipResult:
    """Test membership in the subalgebra generated by the letters.

    For every pair i != j and every context (z, t), the alternating sum of
    coefficients of z i^k j i^{1-a_ij-k} t, weighted by [1-a_ij choose k]_i,
    must vanish.  Contexts are harvested from the support, so absent words
    contribute zero; the first failing relation is reported as a witness.
    """
    datum = f.datum
    a = datum.cartan
    r = datum.rank
    contexts: set[tuple[int, int, Word, Word]] = set()
    for w in f.terms:
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                if i == j:
                    continue
                m = 1 - a[i - 1][j - 1]
                for p, letter in enumerate(w):
                    if letter != j:
                        continue
                    for k in range(m + 1):
                        if p - k < 0 or p + 1 + m - k > len(w):
                            continue
                        if all(x == i for x in w[p - k : p]) and all(
                            x == i for x in w[p + 1 : p + 1 + m - k]
                        ):
                            contexts.add((i, j, w[: p - k], w[p + 1 + m - k :]))
    for i, j, z, t in sorted(contexts):
        m = 1 - a[i - 1][j - 1]
        d = datum.d[i - 1]
        total = ZERO
        for k in range(m + 1):
            wk = z + (i,) * k + (j,) + (i,) * (m - k) + t
            c = f.terms.get(wk)
            if c is None:
                continue
            term = laurent.q_binom(m, k, d) * c
            total = total - term if k % 2 else total + term
        if total:
            return MembershipResult(False, MembershipWitness(i, j, z, t, total))
    return MembershipResult(True, None)
