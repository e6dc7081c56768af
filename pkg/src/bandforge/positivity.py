"""
Quasipositivity classification and negative-band counting.

A braid is strongly quasipositive (SQP) when some band word for it has no
negative letters; that happens exactly when inf >= 0.  Almost strongly
quasipositive (ASQP) allows one negative band and forces inf >= -1, with
inf = -1 in the strict case; the converse needs the super summit criterion
implemented in is_conj_strictly_asqp.

nb(beta) is the minimal number of negative bands over all band words.  The
reduction operation trades each leading delta^-1 against a maximal-length
positive entry, replacing it by the inverse of its complement; the terminal
mixed word is a shortest word for the braid, so its negative-letter count
*is* nb for n <= 4 (where the underlying shortest-word theorem is proved)
and an upper bound otherwise.  Together with |inf| <= nb and
nb <= (n-2)|inf| - min(0, sup) this pins nb between computable bounds, with
equality at n = 3 via the closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .conjugacy import sss_enumerate, sss_representative
from .factors import CanonicalFactor, complement, factor_to_word, tau
from .normal_form import LeftCanonicalForm, lcf
from .words import BraidWord, delta_word

#: (factor, sign) with sign in {+1, -1}; the factor itself is always positive.
SignedFactor = tuple[CanonicalFactor, int]


@dataclass(frozen=True)
class ReducedWord:
    """A mixed form delta^power E_1 ... E_m of signed canonical factors.

    Terminal means power >= 0 or every entry is negative; reduce() always
    returns a terminal form.
    """

    n: int
    power: int
    entries: tuple[SignedFactor, ...]

    def __post_init__(self):
        for f, sign in self.entries:
            if f.n != self.n:
                raise ValueError("entry strand count mismatch")
            if f.is_identity or f.is_delta:
                raise ValueError(f"entry {f.text()} must lie strictly between e and delta")
            if sign not in (1, -1):
                raise ValueError(f"entry sign must be +-1, got {sign}")

    @property
    def is_terminal(self) -> bool:
        return self.power >= 0 or all(sign < 0 for _, sign in self.entries)

    def to_word(self) -> BraidWord:
        d = delta_word(self.n)
        letters = list((d if self.power >= 0 else d.inverse()).letters * abs(self.power))
        for f, sign in self.entries:
            fw = factor_to_word(f)
            letters += (fw if sign > 0 else fw.inverse()).letters
        return BraidWord(self.n, tuple(letters))

    def text(self) -> str:
        parts = [f"d^{self.power}"] if self.power else []
        parts += [f.text() + ("" if sign > 0 else "^-1") for f, sign in self.entries]
        return " · ".join(parts) if parts else "e"


def leftmost_choice(candidates: Sequence[int]) -> int:
    """Default tie-break among maximal-length entries: smallest position."""
    return candidates[0]


def reduce_once(
    rw: ReducedWord, choose: Callable[[Sequence[int]], int] = leftmost_choice
) -> ReducedWord:
    """One reduction step: trade a delta^-1 against a longest positive entry.

    The chosen entry W_k (maximal word length among positive entries) is
    replaced by complement(W_k)^-1; entries to its left rotate by tau and
    the power rises by one.  Terminal forms are returned unchanged.
    """
    if rw.is_terminal:
        return rw
    lengths = [f.word_length if sign > 0 else -1 for f, sign in rw.entries]
    best = max(lengths)
    k = choose([i for i, length in enumerate(lengths) if length == best])
    head = tuple((tau(f), sign) for f, sign in rw.entries[:k])
    swapped = (complement(rw.entries[k][0]), -1)
    return ReducedWord(rw.n, rw.power + 1, head + (swapped,) + rw.entries[k + 1 :])


def reduce(
    source: Union[LeftCanonicalForm, ReducedWord],
    choose: Callable[[Sequence[int]], int] = leftmost_choice,
) -> ReducedWord:
    """Iterate reduce_once until terminal (at most |power| steps)."""
    if isinstance(source, LeftCanonicalForm):
        rw = ReducedWord(source.n, source.power, tuple((f, 1) for f in source.factors))
    else:
        rw = source
    while not rw.is_terminal:
        rw = reduce_once(rw, choose)
    return rw


def count_negative_bands(x: Union[BraidWord, ReducedWord]) -> int:
    """Negative letters of a word, or of the expansion of a reduced form.

    For a terminal form with power < 0 every entry is negative and each
    delta^-1 contributes n-1 letters: count = |power|(n-1) + sum of entry
    lengths.
    """
    if isinstance(x, BraidWord):
        return sum(1 for l in x.letters if l.sign < 0)
    delta_part = (-x.power) * (x.n - 1) if x.power < 0 else 0
    return delta_part + sum(f.word_length for f, sign in x.entries if sign < 0)


def is_sqp(w: BraidWord) -> bool:
    """Strongly quasipositive: inf >= 0."""
    return lcf(w).inf >= 0


def is_conj_sqp(w: BraidWord) -> bool:
    """Conjugate to an SQP braid: inf over the conjugacy class >= 0."""
    return sss_representative(w).inf_conj >= 0


def asqp_necessary(w: BraidWord) -> bool:
    """The necessary ASQP condition inf >= -1.

    One negative band contributes at most one delta^-1, so every ASQP braid
    passes; the converse fails in general (nb can exceed 1 at inf = -1).
    """
    return lcf(w).inf >= -1


@dataclass(frozen=True)
class NbReport:
    """Bounds (and, for n <= 4, the exact value) of the negative band number."""

    nb_lower: int
    nb_upper: int
    nb_exact: Optional[int]
    negative_band_count_of_reduced: int

    def __post_init__(self):
        if self.nb_exact is not None and not self.nb_lower <= self.nb_exact <= self.nb_upper:
            raise ValueError(f"inconsistent bounds {self}")

    def to_json(self) -> dict:
        return {
            "lower": self.nb_lower,
            "upper": self.nb_upper,
            "exact": self.nb_exact,
            "reduced_negative_bands": self.negative_band_count_of_reduced,
        }


def _nb_from_form(form: LeftCanonicalForm) -> NbReport:
    n, inf, sup = form.n, form.inf, form.sup
    if inf >= 0:
        return NbReport(0, 0, 0, 0)
    reduced_count = count_negative_bands(reduce(form))
    lower = -inf
    formula = (n - 2) * (-inf) - min(0, sup)
    upper = min(formula, reduced_count)
    if n == 3:
        # The reduction count must agree with the closed 3-braid formula.
        assert reduced_count == formula, (reduced_count, formula)
    exact = reduced_count if n <= 4 else None
    return NbReport(lower, upper, exact, reduced_count)


def nb_report(w: BraidWord) -> NbReport:
    """Negative-band bounds for the braid itself."""
    return _nb_from_form(lcf(w))


def nb_conjugacy_report(w: BraidWord) -> NbReport:
    """Negative-band bounds for the conjugacy class, via a summit element.

    Exact for n = 3 (closed formula in inf and sup of the class) and n = 4
    (reduction of a summit representative gives a shortest conjugate word).
    One representative suffices; no set enumeration happens here.
    """
    data = sss_representative(w)
    return _nb_from_form(data.representative)


@dataclass(frozen=True)
class StrictAsqpVerdict:
    """Outcome of the strictly-ASQP conjugacy test.

    holds: the summit criterion (every element has inf = -1 and a factor of
    word length n-2).  definitive: for n <= 4 the criterion is equivalent to
    being conjugate to a strictly ASQP braid; for n >= 5 it is only
    sufficient, so a False verdict is inconclusive.
    """

    holds: bool
    definitive: bool

    def __bool__(self) -> bool:
        return self.holds


def is_conj_strictly_asqp(w: BraidWord, budget: Optional[int] = None) -> StrictAsqpVerdict:
    """Test conjugacy to a braid with exactly one negative band."""
    n = w.n
    data = sss_representative(w)
    if data.inf_conj != -1:
        return StrictAsqpVerdict(False, n <= 4)
    target = n - 2
    holds = all(
        any(f.word_length == target for f in element.factors)
        for element in sss_enumerate(data, budget)
    )
    return StrictAsqpVerdict(holds, n <= 4 or holds)
