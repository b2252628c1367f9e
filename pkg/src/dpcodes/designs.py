"""Steiner systems S(t,w,n) and generalized Steiner systems GS(t,w,n,q).

Points and coordinates passed in by callers are 1-based, as in the usual
design notation; internal word positions stay 0-based.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DerivationUndefined, NotPrimePower, ParamsOutOfRange
from .galois import is_prime_power
from .ortharray import mds_min_weight_codewords, mds_parity_check
from .report import VerificationReport
from .space import Code, min_distance, support


@dataclass(frozen=True)
class SteinerSystem:
    n: int
    t: int
    w: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks, t: int, w: int, n: int) -> "SteinerSystem":
        return cls(n, t, w, tuple(sorted(tuple(sorted(b)) for b in blocks)))

    def to_code(self) -> Code:
        """Characteristic vectors, q = 2."""
        words = [tuple(1 if i + 1 in b else 0 for i in range(self.n)) for b in self.blocks]
        return Code(words, q=2, n=self.n, weight=self.w)

    @classmethod
    def from_code(cls, c: Code, t: int) -> "SteinerSystem":
        blocks = [tuple(i + 1 for i in sorted(support(x))) for x in c.words]
        return cls.from_blocks(blocks, t, c.weight, c.n)

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class GeneralizedSteinerSystem:
    code: Code
    t: int

    @property
    def n(self):
        return self.code.n

    @property
    def w(self):
        return self.code.weight

    @property
    def q(self):
        return self.code.q

    def __len__(self):
        return len(self.code)


def fano_plane() -> SteinerSystem:
    """S(2,3,7) as the seven translates of the difference set {1,2,4} mod 7."""
    base = (1, 2, 4)
    blocks = [tuple((x + i) % 7 or 7 for x in base) for i in range(7)]
    return SteinerSystem.from_blocks(blocks, 2, 3, 7)


def affine_plane_s239() -> SteinerSystem:
    """S(2,3,9): lines of AG(2,3), point (x,y) labelled 3x+y+1."""
    label = lambda x, y: 3 * x + y + 1  # noqa: E731
    lines = []
    for m in range(3):
        for b in range(3):
            lines.append([label(x, (m * x + b) % 3) for x in range(3)])
    for c in range(3):
        lines.append([label(c, y) for y in range(3)])
    return SteinerSystem.from_blocks(lines, 2, 3, 9)


def steiner_block_count(t: int, w: int, n: int) -> Fraction:
    return Fraction(comb(n, t), comb(w, t))


def steiner_verify(blocks, t: int, w: int, n: int) -> VerificationReport:
    blocks = [tuple(sorted(b)) for b in blocks]
    report = VerificationReport(subject=f"S({t},{w},{n}) candidate, {len(blocks)} blocks")
    well_formed = all(len(set(b)) == w and all(1 <= p <= n for p in b) for b in blocks)
    report.add("blocks_are_w_subsets", "steiner-definition", True, well_formed)
    cover = Counter()
    for b in blocks:
        cover.update(combinations(b, t))
    uncovered = comb(n, t) - sum(1 for s in cover if all(1 <= p <= n for p in s))
    multi = sum(1 for k in cover.values() if k > 1)
    report.add("uncovered_t_subsets", "steiner-definition", 0, uncovered)
    report.add("multiply_covered_t_subsets", "steiner-definition", 0, multi)
    report.add("block_count", "steiner-block-count", steiner_block_count(t, w, n), len(blocks))
    if well_formed and len(blocks) >= 2:
        chars = [tuple(1 if i + 1 in b else 0 for i in range(n)) for b in blocks]
        jd = Fraction(min_distance(chars), 2)
        report.add("johnson_distance", "steiner-block-count", w - t + 1, jd)
    return report


def steiner_divisibility(t: int, w: int, n: int) -> tuple[bool, int | None]:
    """(True, None) if every C(n-i,t-i)/C(w-i,t-i), 0 <= i < t, is an integer;
    otherwise (False, first failing i)."""
    if not 1 <= t <= w <= n:
        raise ParamsOutOfRange(f"need 1 <= t <= w <= n, got t={t}, w={w}, n={n}")
    for i in range(t):
        if comb(n - i, t - i) % comb(w - i, t - i):
            return False, i
    return True, None


def steiner_derive(s: SteinerSystem, point: int) -> SteinerSystem:
    """Blocks through ``point`` with the point removed; points above it shift down."""
    if s.t <= 1:
        raise DerivationUndefined("derivation needs t > 1")
    if not 1 <= point <= s.n:
        raise ParamsOutOfRange(f"point {point} outside 1..{s.n}")
    relabel = lambda p: p if p < point else p - 1  # noqa: E731
    blocks = [tuple(relabel(p) for p in b if p != point) for b in s.blocks if point in b]
    return SteinerSystem.from_blocks(blocks, s.t - 1, s.w - 1, s.n - 1)


def gs_size(t: int, w: int, n: int, q: int) -> Fraction:
    return Fraction(comb(n, t), comb(w, t)) * (q - 1) ** t


def gs_verify(c: Code, t: int) -> VerificationReport:
    """Generalized Steiner system check.

    A weight-t word x is covered by c when supp(x) is inside supp(c) and the
    two agree on supp(x); for wt(c) = w this is the same as d(x,c) = w-t.
    Coverage is counted by expanding each codeword into its C(w,t)
    restrictions.
    """
    n, w, q = c.n, c.weight, c.q
    report = VerificationReport(subject=f"GS({t},{w},{n},{q}) candidate {c!r}")
    report.add("constant_weight", "gs-definition", True, w is not None)
    if w is None or not 0 <= t <= w:
        return report
    target = 2 * (w - t) + 1
    d = min_distance(c.words) if len(c) >= 2 else None
    if d is None:
        report.add("min_distance", "gs-definition", target, "vacuous")
    elif q == 2:
        # binary distances are even, so equality is unattainable; >= is the content
        report.add("min_distance", "gs-definition", f">={target}", d, passed=d >= target)
    else:
        report.add("min_distance", "gs-definition", target, d)
    cover = Counter()
    for x in c.words:
        supp = sorted(support(x))
        for sub in combinations(supp, t):
            cover[tuple((i, x[i]) for i in sub)] += 1
    n_targets = comb(n, t) * (q - 1) ** t
    report.add("uncovered_weight_t_words", "gs-definition", 0, n_targets - len(cover))
    report.add("multiply_covered_weight_t_words", "gs-definition", 0,
               sum(1 for k in cover.values() if k > 1))
    report.add("size", "gs-size", gs_size(t, w, n, q), len(c))
    return report


def gs_construct_2_3(q: int) -> GeneralizedSteinerSystem:
    """GS(2,3,q+1,q): weight-3 codewords of the [q+1, q-1, 3] MDS code over GF(q)."""
    if q < 3:
        raise ParamsOutOfRange("GS(2,3,q+1,q) needs q >= 3")
    if not is_prime_power(q):
        raise NotPrimePower(f"no construction for non-prime-power q = {q}")
    code = mds_min_weight_codewords(mds_parity_check(q + 1, 3, q))
    return GeneralizedSteinerSystem(code, 2)


def gs_derive(g: GeneralizedSteinerSystem, coordinate: int, symbol: int) -> GeneralizedSteinerSystem:
    """Codewords carrying ``symbol`` at the 1-based ``coordinate``, with that
    coordinate deleted."""
    if g.t <= 1:
        raise DerivationUndefined("derivation needs t > 1")
    if not 1 <= coordinate <= g.n:
        raise ParamsOutOfRange(f"coordinate {coordinate} outside 1..{g.n}")
    if not 1 <= symbol < g.q:
        raise ParamsOutOfRange(f"symbol must be a nonzero element of Z_{g.q}")
    i = coordinate - 1
    words = [x[:i] + x[i + 1:] for x in g.code.words if x[i] == symbol]
    return GeneralizedSteinerSystem(Code(words, q=g.q, n=g.n - 1, weight=g.w - 1), g.t - 1)
