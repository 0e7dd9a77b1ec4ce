"""Classical Alexander polynomial of a braid closure via reduced Burau.

Convention, with t = mu: the letter sigma_i acts on rows/columns i-1, i, i+1
(1-based, clipped to the (n-1)x(n-1) matrix) by the identity except for
column i, which is (t, -t, 1).  Thus sigma_1 on two strands is (-t), and

    Delta(t) = det(I - rho(beta)) * (1 - t) / (1 - t^n)

up to units, which normalize_alexander removes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .algebra.matrix import Matrix, matrix_det
from .algebra.unipoly import RatFunc, UniPoly
from .extract import MU, AlexReport, normalize_alexander, _UNKNOT_TERM


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.strands, bool) or not isinstance(self.strands, int) or self.strands < 1:
            raise BraidError(f"strand count must be a positive integer, got {self.strands!r}")
        word = tuple(self.word)
        for letter in word:
            if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0 \
                    or abs(letter) > self.strands - 1:
                raise BraidError(f"letter {letter!r} out of range for {self.strands} strands")
        object.__setattr__(self, "word", word)

    def permutation(self) -> list[int]:
        perm = list(range(self.strands))
        for letter in self.word:
            i = abs(letter) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def components(self) -> int:
        perm, seen, count = self.permutation(), set(), 0
        for s in range(self.strands):
            if s in seen:
                continue
            count += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
        return count

    def is_knot(self) -> bool:
        return self.components() == 1

    def stabilized(self) -> "BraidWord":
        """Markov stabilization: append sigma_n on n+1 strands."""
        return BraidWord(self.strands + 1, self.word + (self.strands,))

    def to_document(self) -> dict:
        return {"strands": self.strands, "word": list(self.word)}


def parse_braid(document: str | Mapping) -> BraidWord:
    doc = json.loads(document) if isinstance(document, str) else document
    if not isinstance(doc, Mapping) or "strands" not in doc or not isinstance(doc.get("word", []), list):
        raise BraidError("braid document needs 'strands' and a 'word' list")
    return BraidWord(doc["strands"], tuple(doc.get("word", [])))


def burau_letter(letter: int, n: int) -> Matrix:
    size = n - 1
    one = RatFunc(UniPoly([1]))
    zero = RatFunc(UniPoly([]))
    rows = [[one if r == c else zero for c in range(size)] for r in range(size)]
    k = abs(letter) - 1
    if letter > 0:
        above, mid, below = MU, -MU, one
    else:
        inv = MU.inverse()
        above, mid, below = one, -inv, inv
    rows[k][k] = mid
    if k - 1 >= 0:
        rows[k - 1][k] = above
    if k + 1 < size:
        rows[k + 1][k] = below
    return Matrix(rows, size)


def reduced_burau(b: BraidWord) -> Matrix:
    if b.strands < 2:
        raise BraidError("reduced Burau needs at least 2 strands")
    size = b.strands - 1
    m = Matrix.identity(size, like=RatFunc(UniPoly([1])))
    for letter in b.word:
        m = m @ burau_letter(letter, b.strands)
    return m


def _laurent_numerator(r: RatFunc) -> UniPoly:
    """Numerator of r when its denominator is a power of mu (unit-normalized)."""
    den = r.den
    if den.degree != den.ord0() or den.lc != 1:
        raise RuntimeError(f"Burau quotient {r} is not a Laurent polynomial")
    return r.num


def alexander_from_braid(b: BraidWord) -> AlexReport:
    if not b.is_knot():
        raise BraidError(f"braid closure has {b.components()} components, not a knot")
    if b.strands == 1:
        raw = UniPoly([1])
    else:
        rho = reduced_burau(b)
        one = RatFunc(UniPoly([1]))
        i_minus = Matrix.identity(rho.nrows, like=one) - rho
        det = matrix_det(i_minus)
        n = b.strands
        q = det * (1 - MU) / (1 - MU ** n)
        raw = _laurent_numerator(q)
    delta = normalize_alexander(raw)
    d = RatFunc(delta)
    R = MU * RatFunc(delta.derivative()) / d + _UNKNOT_TERM
    return AlexReport(delta, raw, "Burau", R, raw.degree, {"braid": b.to_document()})


def random_braid(rng, strands: int, length: int) -> BraidWord:
    letters = [s * i for i in range(1, strands) for s in (1, -1)]
    return BraidWord(strands, tuple(rng.choice(letters) for _ in range(length)))


def random_knot_braid(rng, max_strands: int = 4, max_length: int = 8, tries: int = 1000) -> BraidWord:
    """Random braid word whose closure is a knot."""
    for _ in range(tries):
        n = rng.randint(2, max_strands)
        b = random_braid(rng, n, rng.randint(n - 1, max_length))
        if b.is_knot():
            return b
    raise RuntimeError("no knot closure found")

