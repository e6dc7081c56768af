"""Shared helpers: factor aliases for B_4, word surgery, oracle equality."""

from __future__ import annotations

import random

import pytest

from bandforge.factors import CanonicalFactor, delta_factor, factor, identity_factor
from bandforge.oracle import oracle_equal
from bandforge.words import BandLetter, BraidWord, parse_word


def b4(name: str) -> CanonicalFactor:
    """The B_4 canonical factor named in the Kang-Ko-Lee shorthand."""
    table = {
        "e": identity_factor(4),
        "a1": factor(4, [(1, 2)]),
        "a2": factor(4, [(2, 3)]),
        "a3": factor(4, [(3, 4)]),
        "a4": factor(4, [(1, 4)]),
        "b1": factor(4, [(1, 3)]),
        "b2": factor(4, [(2, 4)]),
        "a2a1": factor(4, [(1, 2, 3)]),
        "a3a2": factor(4, [(2, 3, 4)]),
        "a4a3": factor(4, [(1, 3, 4)]),
        "a1a4": factor(4, [(1, 2, 4)]),
        "a1a3": factor(4, [(1, 2), (3, 4)]),
        "a2a4": factor(4, [(2, 3), (1, 4)]),
        "delta": delta_factor(4),
    }
    return table[name]


def w4(text: str) -> BraidWord:
    return parse_word(text, 4)


def assert_same_braid(w1: BraidWord, w2: BraidWord, bound: int = 40) -> None:
    assert oracle_equal(w1, w2, bound=bound), f"{w1.render()} != {w2.render()}"


def assert_lcf_sound(w: BraidWord, bound: int = 24) -> None:
    """Oracle check that lcf(w) represents w, via positive lifts.

    Comparing delta^m * w against the positive factor concatenation (with
    m = max(0, -inf)) keeps the closure lengths small; feeding the expanded
    normal-form word back to the oracle would re-inflate every delta^-1.
    """
    from bandforge.factors import factor_to_word
    from bandforge.normal_form import lcf
    from bandforge.words import delta_word

    form = lcf(w)
    m = max(0, -form.power)
    lifted = delta_word(w.n) ** (form.power + m)
    for f in form.factors:
        lifted = lifted * factor_to_word(f)
    assert oracle_equal(delta_word(w.n) ** m * w, lifted, bound=bound), w.render()


def random_letters(n: int, length: int, rng: random.Random, neg: float = 0.0):
    pairs = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    out = []
    for _ in range(length):
        t, s = rng.choice(pairs)
        out.append(BandLetter(t, s, -1 if rng.random() < neg else 1))
    return tuple(out)


def random_braid_word(n: int, length: int, rng: random.Random, neg: float = 0.0) -> BraidWord:
    return BraidWord(n, random_letters(n, length, rng, neg))


def random_sparse_word(
    n: int, length: int, rng: random.Random, max_negs: int = 1
) -> BraidWord:
    """A random word with a bounded number of negative letters.

    Oracle closures grow with writhe + 6 * (#negatives); tests that compare
    against the oracle use this to stay within cheap closure sizes.
    """
    letters = list(random_letters(n, length, rng))
    flips = rng.sample(range(length), min(rng.randint(0, max_negs), length)) if length else []
    for i in flips:
        letters[i] = letters[i].inverse()
    return BraidWord(n, tuple(letters))


def relation_instances(n: int):
    """All two-letter equalities from the defining relations, as word pairs."""
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                x = ((k, j), (j, i))
                y = ((j, i), (k, i))
                z = ((k, i), (k, j))
                out += [(x, y), (y, z), (x, z)]
    chords = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    for a in chords:
        for b in chords:
            shared = set(a) & set(b)
            crossing = (a[1] < b[1] < a[0] < b[0]) or (b[1] < a[1] < b[0] < a[0])
            if a < b and not shared and not crossing:
                out.append(((a, b), (b, a)))
    return out


def insert_relator(w: BraidWord, rng: random.Random) -> BraidWord:
    """Insert u * v^-1 for a random relation u = v at a random position."""
    u, v = rng.choice(relation_instances(w.n))
    if rng.random() < 0.5:
        u, v = v, u
    chunk = tuple(BandLetter(t, s, 1) for t, s in u) + tuple(
        BandLetter(t, s, -1) for t, s in reversed(v)
    )
    pos = rng.randrange(len(w.letters) + 1)
    return BraidWord(w.n, w.letters[:pos] + chunk + w.letters[pos:])


def insert_cancellation(w: BraidWord, rng: random.Random) -> BraidWord:
    """Insert c * c^-1 (or c^-1 * c) at a random position."""
    (letter,) = random_letters(w.n, 1, rng, neg=0.5)
    chunk = (letter, letter.inverse())
    pos = rng.randrange(len(w.letters) + 1)
    return BraidWord(w.n, w.letters[:pos] + chunk + w.letters[pos:])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xBAD5EED)
