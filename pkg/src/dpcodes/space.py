"""The ambient space J_q(n, w): weight-w words of length n over {0..q-1}.

Words are plain tuples of ints.  Word sets (codes and anticodes) keep their
words sorted lexicographically, so two sets with the same words compare equal
structurally.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EmptySet, InvariantViolation, LengthMismatch, TooFewWords

Word = tuple[int, ...]

# row block for chunked pairwise scans; keeps the distance tile ~ a few MB
_CHUNK = 256


def weight(x: Sequence[int]) -> int:
    return sum(1 for s in x if s)


_weight_of = weight


def support(x: Sequence[int]) -> frozenset[int]:
    """0-based positions of the nonzero symbols."""
    return frozenset(i for i, s in enumerate(x) if s)


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"words of length {len(u)} and {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


def space_size(n: int, w: int, q: int) -> int:
    """|J_q(n,w)| = C(n,w) (q-1)^w."""
    return comb(n, w) * (q - 1) ** w


def colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(n) in colexicographic order (largest element slowest)."""
    if k == 0:
        yield ()
        return
    if k > n:
        return
    yield from colex_subsets(n - 1, k)
    for s in colex_subsets(n - 1, k - 1):
        yield s + (n - 1,)


def place(n: int, positions: Sequence[int], symbols: Sequence[int]) -> Word:
    word = [0] * n
    for i, s in zip(positions, symbols):
        word[i] = s
    return tuple(word)


def enumerate_space(n: int, w: int, q: int) -> Iterator[Word]:
    """Every word of J_q(n,w) once: supports in colex order, then symbol
    patterns over 1..q-1 in lexicographic order."""
    if not (0 <= w <= n) or q < 2:
        raise ValueError(f"invalid space parameters n={n}, w={w}, q={q}")
    for supp in colex_subsets(n, w):
        for pattern in product(range(1, q), repeat=w):
            yield place(n, supp, pattern)


def canonical_word(n: int, w: int) -> Word:
    """Support {1..w}, all symbols 1."""
    return (1,) * w + (0,) * (n - w)


def ball(center: Sequence[int], e: int, q: int, restrict_weight: bool = True) -> set[Word]:
    """All words within Hamming distance e of ``center``; restricted to the
    center's weight class when ``restrict_weight`` is set."""
    center = tuple(center)
    n = len(center)
    w = weight(center)
    out = set()
    for k in range(min(e, n) + 1):
        for pos in combinations(range(n), k):
            choices = [[s for s in range(q) if s != center[i]] for i in pos]
            for repl in product(*choices):
                y = list(center)
                for i, s in zip(pos, repl):
                    y[i] = s
                y = tuple(y)
                if not restrict_weight or weight(y) == w:
                    out.add(y)
    return out


def as_array(words: Iterable[Sequence[int]]) -> np.ndarray:
    return np.asarray(list(words), dtype=np.int32)


def _pair_extreme(arr: np.ndarray, want_min: bool) -> int:
    # upper triangle only; stops once the trivial bound (1, or min(n, 2*max weight)) is hit
    n_words, n = arr.shape
    if want_min:
        best, stop = n + 1, 1
    else:
        best, stop = 0, min(n, 2 * int((arr != 0).sum(axis=1).max()))
    for start in range(0, n_words - 1, _CHUNK):
        block = arr[start:start + _CHUNK]
        rest = arr[start:]
        dist = (block[:, None, :] != rest[None, :, :]).sum(axis=2)
        # mask the diagonal and the lower triangle inside the tile
        k = block.shape[0]
        tri = np.arange(rest.shape[0])[None, :] <= np.arange(k)[:, None]
        if want_min:
            dist[tri] = n + 1
            best = min(best, int(dist.min()))
            if best <= stop:
                break
        else:
            dist[tri] = 0
            best = max(best, int(dist.max()))
            if best >= stop:
                break
    return best


def distance_matrix(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]] | None = None) -> np.ndarray:
    arr_a = as_array(a)
    arr_b = arr_a if b is None else as_array(b)
    return (arr_a[:, None, :] != arr_b[None, :, :]).sum(axis=2)


def min_distance(words) -> int:
    """Minimum pairwise distance over distinct words."""
    words = list(words)
    if len(words) < 2:
        raise TooFewWords("minimum distance needs at least two words")
    return _pair_extreme(as_array(words), want_min=True)


def diameter(words) -> int:
    """Maximum pairwise distance; 0 for a single word."""
    words = list(words)
    if not words:
        raise EmptySet("diameter of an empty set")
    if len(words) == 1:
        return 0
    return _pair_extreme(as_array(words), want_min=False)


class WordSet:
    """A finite set of equal-length words over {0..q-1}.

    ``weight`` is the constant weight if every word shares one, else None.
    Passing ``weight`` explicitly asserts it.  Duplicates are rejected.
    """

    def __init__(self, words: Iterable[Sequence[int]], q: int, n: int | None = None,
                 weight: int | None = None):
        ws = sorted(tuple(int(s) for s in x) for x in words)
        if n is None:
            if not ws:
                raise InvariantViolation("cannot infer length of an empty word set")
            n = len(ws[0])
        for x in ws:
            if len(x) != n:
                raise InvariantViolation(f"word {x} has length {len(x)}, expected {n}")
            if any(s < 0 or s >= q for s in x):
                raise InvariantViolation(f"word {x} has a symbol outside 0..{q - 1}")
        for a, b in zip(ws, ws[1:]):
            if a == b:
                raise InvariantViolation(f"duplicate word {a}")
        weights = {_weight_of(x) for x in ws}
        if weight is not None:
            if weights - {weight}:
                bad = next(x for x in ws if _weight_of(x) != weight)
                raise InvariantViolation(f"word {bad} does not have weight {weight}")
        elif len(weights) == 1:
            weight = weights.pop()
        self.words: tuple[Word, ...] = tuple(ws)
        self.q = q
        self.n = n
        self.weight = weight

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.words)

    def __contains__(self, x):
        return tuple(x) in self._members

    def __eq__(self, other):
        return (
            isinstance(other, WordSet)
            and (self.n, self.q, self.words) == (other.n, other.q, other.words)
        )

    def __hash__(self):
        return hash((self.n, self.q, self.words))

    def __repr__(self):
        w = "-" if self.weight is None else self.weight
        return f"{type(self).__name__}(n={self.n}, w={w}, q={self.q}, size={len(self)})"

    def array(self) -> np.ndarray:
        return as_array(self.words).reshape(len(self.words), self.n)

    def space_size(self) -> int:
        if self.weight is None:
            raise InvariantViolation("word set is not constant weight")
        return space_size(self.n, self.weight, self.q)


class Code(WordSet):
    @cached_property
    def min_distance(self) -> int:
        return min_distance(self.words)


class Anticode(WordSet):
    @cached_property
    def diameter(self) -> int:
        return diameter(self.words)
