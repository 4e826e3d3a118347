"""Finite probability distributions and their information measures.

Probabilities are stored either as doubles or, for exact work with dyadic
distributions, as ``fractions.Fraction`` values. All entropy-style measures
return bits and use the convention 0*log(0) = 0.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

Prob = Union[float, Fraction]

SUM_TOLERANCE = 1e-12


class DistributionError(ValueError):
    """Invalid probability vector."""


class SupportMismatchError(DistributionError):
    """q assigns zero mass where p does not."""


class SymbolDistribution:
    """Probability vector over symbol ids 0..n-1, n >= 2.

    When every entry is a Fraction the distribution is exact and sums are
    checked for strict equality; otherwise entries are doubles and the sum
    must be within 1e-12 of one.
    """

    __slots__ = ("probs", "exact", "_array")

    def __init__(self, probs: Sequence[Prob]):
        entries = tuple(probs)
        if len(entries) < 2:
            raise DistributionError("alphabet must contain at least 2 symbols")
        exact = all(isinstance(p, (Fraction, int)) for p in entries)
        if exact:
            entries = tuple(Fraction(p) for p in entries)
            if any(p < 0 for p in entries):
                raise DistributionError("negative probability")
            if sum(entries) != 1:
                raise DistributionError(f"probabilities sum to {sum(entries)}, not 1")
        else:
            entries = tuple(float(p) for p in entries)
            if any(p < 0.0 for p in entries):
                raise DistributionError("negative probability")
            total = math.fsum(entries)
            if abs(total - 1.0) > SUM_TOLERANCE:
                raise DistributionError(f"probabilities sum to {total!r}, not 1")
        self.probs = entries
        self.exact = exact
        self._array = None

    @property
    def alphabet_size(self) -> int:
        return len(self.probs)

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, symbol: int) -> Prob:
        return self.probs[symbol]

    def __iter__(self):
        return iter(self.probs)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolDistribution) and self.probs == other.probs

    def __hash__(self):
        return hash(self.probs)

    def __repr__(self) -> str:
        return f"SymbolDistribution({list(self.probs)!r})"

    @classmethod
    def uniform(cls, n: int, exact: bool = False) -> "SymbolDistribution":
        if exact:
            return cls([Fraction(1, n)] * n)
        return cls([1.0 / n] * n)

    @classmethod
    def from_weights(cls, weights: Sequence[float], exact: bool = False) -> "SymbolDistribution":
        if exact:
            total = sum(Fraction(w) for w in weights)
            return cls([Fraction(w) / total for w in weights])
        total = math.fsum(float(w) for w in weights)
        return cls([float(w) / total for w in weights])

    def is_dyadic(self) -> bool:
        for p in self.probs:
            if p == 0:
                continue
            f = Fraction(p)
            if f.numerator != 1 or f.denominator & (f.denominator - 1):
                return False
        return True

    def as_array(self) -> np.ndarray:
        if self._array is None:
            arr = np.array([float(p) for p in self.probs], dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__  # no-op; slots hold plain attributes
            self._array = arr
        return self._array

    def to_text(self) -> str:
        lines = [f"dist v1 {len(self.probs)}"]
        for i, p in enumerate(self.probs):
            if isinstance(p, Fraction):
                lines.append(f"{i} {p.numerator}/{p.denominator}")
            else:
                lines.append(f"{i} {p!r}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SymbolDistribution":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if len(head) != 3 or head[0] != "dist" or head[1] != "v1":
            raise DistributionError(f"bad distribution header: {lines[0]!r}")
        n = int(head[2])
        if len(lines) - 1 != n:
            raise DistributionError(f"expected {n} entries, got {len(lines) - 1}")
        probs: list[Prob] = [0.0] * n
        for ln in lines[1:]:
            sym_s, val_s = ln.split()
            sym = int(sym_s)
            if not 0 <= sym < n:
                raise DistributionError(f"symbol id {sym} out of range")
            if "/" in val_s:
                num, den = val_s.split("/")
                probs[sym] = Fraction(int(num), int(den))
            else:
                probs[sym] = float(val_s)
        if all(isinstance(p, Fraction) for p in probs):
            return cls(probs)
        return cls([float(p) for p in probs])


def _check_same_alphabet(p: SymbolDistribution, q: SymbolDistribution) -> None:
    if len(p) != len(q):
        raise DistributionError(
            f"alphabet sizes differ: {len(p)} vs {len(q)}"
        )


def entropy(p: SymbolDistribution) -> float:
    """H(p) = -sum p(w) log2 p(w), in bits."""
    return -math.fsum(
        float(x) * math.log2(float(x)) for x in p.probs if x > 0
    )


def cross_entropy(p: SymbolDistribution, q: SymbolDistribution) -> float:
    """H(p, q) = -sum p(w) log2 q(w); requires support(p) within support(q)."""
    _check_same_alphabet(p, q)
    acc = []
    for pw, qw in zip(p.probs, q.probs):
        if pw == 0:
            continue
        if qw == 0:
            raise SupportMismatchError("p has mass where q is zero")
        acc.append(float(pw) * math.log2(float(qw)))
    return -math.fsum(acc)


def kl_divergence(p: SymbolDistribution, q: SymbolDistribution, base: int | str = 2) -> float:
    """Relative entropy of p with respect to q, in the given base (2 or e)."""
    _check_same_alphabet(p, q)
    acc = []
    for pw, qw in zip(p.probs, q.probs):
        if pw == 0:
            continue
        if qw == 0:
            raise SupportMismatchError("p has mass where q is zero")
        acc.append(float(pw) * math.log2(float(pw) / float(qw)))
    value = math.fsum(acc)
    if base == 2:
        return value
    if base in ("e", math.e):
        return value * math.log(2.0)
    raise ValueError(f"unsupported base: {base!r}")


def total_variation(p: SymbolDistribution, q: SymbolDistribution) -> float:
    """Half the L1 distance between p and q."""
    _check_same_alphabet(p, q)
    return 0.5 * math.fsum(abs(float(a) - float(b)) for a, b in zip(p.probs, q.probs))


class PinskerResult(NamedTuple):
    holds: bool
    tv: float
    bound: float


def pinsker_check(p: SymbolDistribution, q: SymbolDistribution) -> PinskerResult:
    """Compare total variation against sqrt(KL_e(p||q) / 2)."""
    tv = total_variation(p, q)
    bound = math.sqrt(kl_divergence(p, q, base="e") / 2.0)
    return PinskerResult(tv <= bound + 1e-12, tv, bound)
