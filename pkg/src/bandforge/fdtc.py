"""
Fractional Dehn twist coefficient bounds.

Viewing an n-braid as a mapping class of the n-punctured disk, its FDTC
c(beta) is a conjugacy-invariant rational.  Since c(delta) = 1/n and delta
powers sandwich any normal form, the class invariants bound it:

    inf[beta] / n  <=  c(beta)  <=  sup[beta] / n.

Only the bounds are computed here; exact FDTC values (train-track work) are
out of scope and appear in the tests as fixtures that the intervals must
contain.  All arithmetic is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .conjugacy import sss_representative
from .words import BraidWord


@dataclass(frozen=True)
class FdtcInterval:
    """[inf[beta]/n, sup[beta]/n]; both endpoints exact rationals."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    @property
    def pinched(self) -> Optional[Fraction]:
        return self.lower if self.lower == self.upper else None

    def to_json(self) -> dict:
        exact = self.pinched
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "exact": str(exact) if exact is not None else None,
        }


def fdtc_bounds(w: BraidWord) -> FdtcInterval:
    """The interval [inf[beta]/n, sup[beta]/n] around the FDTC."""
    data = sss_representative(w)
    return FdtcInterval(Fraction(data.inf_conj, w.n), Fraction(data.sup_conj, w.n))


def fdtc_exact_if_pinched(w: BraidWord) -> Optional[Fraction]:
    """The FDTC itself when the interval degenerates (e.g. central powers)."""
    return fdtc_bounds(w).pinched
