"""
Braid words over band generators.

A band generator a_{t,s} (with 1 <= s < t <= n) is the braid swapping strands
s and t in front of all other strands.  Words are plain letter sequences: no
normalization happens at this level beyond ordering each letter's indices as
t > s.  The group-theoretic content (relations, normal forms) lives in the
factor and normal-form modules.

Conventions fixed here and used everywhere else:

- A letter is rendered "a(t,s)" with t > s; an inverse letter is "A(t,s)".
  Rendering is independent of the index order given at construction.
- The permutation of a word applies letters left to right: the first letter
  of the word acts first.  Composition order is a convention, not a theorem;
  only invariance under the defining relations is mathematical content, so
  the order is fixed here once and documented.
- Words carry their strand count n.  Mixing words with different n is an
  error, never an implicit embedding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class ParseError(ValueError):
    """Raised for malformed word text; message carries the token position."""


class BandLetter(NamedTuple):
    """A signed band generator a_{t,s}^{sign} with t > s and sign in {+1, -1}."""

    t: int
    s: int
    sign: int

    @staticmethod
    def make(i: int, j: int, sign: int = 1) -> "BandLetter":
        if i == j:
            raise ValueError(f"band generator needs two distinct strands, got ({i},{j})")
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        return BandLetter(max(i, j), min(i, j), sign)

    def inverse(self) -> "BandLetter":
        return BandLetter(self.t, self.s, -self.sign)

    @property
    def chord(self) -> tuple[int, int]:
        """The unsigned generator (t, s)."""
        return (self.t, self.s)

    def render(self) -> str:
        return f"{'a' if self.sign > 0 else 'A'}({self.t},{self.s})"


@dataclass(frozen=True)
class BraidWord:
    """A strand count n plus a finite sequence of band letters.

    The empty sequence is the identity braid.  Multiplication is free
    concatenation; equality of the underlying braid elements is decided by
    the normal form (or, in tests, by the rewriting oracle).
    """

    n: int
    letters: tuple[BandLetter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        for letter in self.letters:
            if not 1 <= letter.s < letter.t <= self.n:
                raise ValueError(f"letter {letter.render()} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"cannot concatenate words with n={self.n} and n={other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(l.inverse() for l in reversed(self.letters)))

    def __pow__(self, exp: int) -> "BraidWord":
        base = self if exp >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(exp))

    def conjugated_by(self, v: "BraidWord") -> "BraidWord":
        """The word v^-1 * self * v."""
        return v.inverse() * self * v

    def is_positive(self) -> bool:
        return all(l.sign > 0 for l in self.letters)

    def render(self) -> str:
        return " ".join(l.render() for l in self.letters)

    def __str__(self) -> str:
        return self.render() or "e"


def delta_word(n: int) -> BraidWord:
    """The fundamental element as the descending word a_{n,n-1} ... a_{2,1}."""
    return BraidWord(n, tuple(BandLetter(k, k - 1, 1) for k in range(n, 1, -1)))


# Token grammar.  Whitespace-separated tokens; lowercase positive, uppercase
# inverse; "d"/"D" expand to the descending word for delta / its inverse.
_BAND_RE = re.compile(r"^([aAbB])\((\d+),(\d+)\)(?:\^(-?\d+))?$")
_ARTIN_RE = re.compile(r"^([sS])(\d+)(?:\^(-?\d+))?$")
_DELTA_RE = re.compile(r"^([dD])(?:\^(-?\d+))?$")
_ALIAS_RE = re.compile(r"^([aAbB])([0-9])(?:\^(-?\d+))?$")

# Kang-Ko-Lee style shorthand for the six B_4 generators.
_B4_ALIASES = {
    ("a", 1): (2, 1),
    ("a", 2): (3, 2),
    ("a", 3): (4, 3),
    ("a", 4): (4, 1),
    ("b", 1): (3, 1),
    ("b", 2): (4, 2),
}


def _expand(t: int, s: int, sign: int, power: int) -> list[BandLetter]:
    if power < 0:
        sign, power = -sign, -power
    return [BandLetter(t, s, sign)] * power


def parse_word(text: str, n: int) -> BraidWord:
    """Parse word text into a BraidWord on n strands.

    Grammar (whitespace separated): a(i,j) band letters, s<i> Artin letters,
    d for delta, each with an optional ^k power; uppercase means inverse.
    The B_4 aliases a1..a4, b1, b2 are accepted when n == 4.
    """
    letters: list[BandLetter] = []
    for pos, token in enumerate(text.split(), start=1):
        if m := _BAND_RE.match(token):
            kind, i, j = m.group(1), int(m.group(2)), int(m.group(3))
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(
                    f"token {pos} {token!r}: strand indices must be distinct and in 1..{n}"
                )
            sign = 1 if kind.islower() else -1
            power = 1 if m.group(4) is None else int(m.group(4))
            letters += _expand(max(i, j), min(i, j), sign, power)
        elif m := _ARTIN_RE.match(token):
            kind, i = m.group(1), int(m.group(2))
            if not 1 <= i <= n - 1:
                raise ParseError(f"token {pos} {token!r}: Artin index must be in 1..{n - 1}")
            sign = 1 if kind.islower() else -1
            power = 1 if m.group(3) is None else int(m.group(3))
            letters += _expand(i + 1, i, sign, power)
        elif m := _DELTA_RE.match(token):
            sign = 1 if m.group(1).islower() else -1
            power = sign * (1 if m.group(2) is None else int(m.group(2)))
            block = delta_word(n) if power > 0 else delta_word(n).inverse()
            letters += block.letters * abs(power)
        elif (m := _ALIAS_RE.match(token)) and n == 4:
            kind, idx = m.group(1), int(m.group(2))
            key = (kind.lower(), idx)
            if key not in _B4_ALIASES:
                raise ParseError(f"token {pos} {token!r}: unknown B4 generator alias")
            t, s = _B4_ALIASES[key]
            sign = 1 if kind.islower() else -1
            power = 1 if m.group(3) is None else int(m.group(3))
            letters += _expand(t, s, sign, power)
        else:
            raise ParseError(f"token {pos} {token!r}: not a valid word token")
    return BraidWord(n, tuple(letters))


def artin_to_band(artin_word: Iterable[int], n: int) -> BraidWord:
    """Convert a signed Artin word (+-i for sigma_i^{+-1}) to band letters.

    Adjacent-transposition bands coincide with Artin generators, so
    sigma_i^{+-1} maps to a_{i+1,i}^{+-1}.
    """
    letters = []
    for k in artin_word:
        i = abs(k)
        if not 1 <= i <= n - 1:
            raise ValueError(f"Artin index {i} out of range 1..{n - 1}")
        letters.append(BandLetter(i + 1, i, 1 if k > 0 else -1))
    return BraidWord(n, tuple(letters))


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Image of the word in the symmetric group; entry k-1 is the image of strand k.

    Letters apply left to right (the first letter acts first); signs are
    irrelevant since each letter maps to the transposition (s t).
    """
    img = list(range(1, w.n + 1))
    for letter in w.letters:
        for k in range(w.n):
            if img[k] == letter.s:
                img[k] = letter.t
            elif img[k] == letter.t:
                img[k] = letter.s
    return tuple(img)


def writhe(w: BraidWord) -> int:
    """Exponent sum: positive letters minus negative letters."""
    return sum(l.sign for l in w.letters)


def random_word(
    n: int, length: int, rng, negative_fraction: float = 0.0
) -> BraidWord:
    """Uniform random word; each letter is negated with the given probability."""
    pairs = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    letters = []
    for _ in range(length):
        t, s = rng.choice(pairs)
        sign = -1 if rng.random() < negative_fraction else 1
        letters.append(BandLetter(t, s, sign))
    return BraidWord(n, tuple(letters))
