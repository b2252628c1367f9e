"""Independent certification of code properties.

Every check is exhaustive and uses exact integer arithmetic.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .anticodes import AnticodeParams
from .errors import NotOA, PreconditionViolated, Unclassifiable
from .ortharray import oa_verify
from .report import VerificationReport
from .space import (
    WordSet, as_array, ball, canonical_word, colex_subsets, diameter, enumerate_space,
    min_distance, space_size, support,
)

REF_BOUND = "code-anticode-bound"


def _min_distance_or_none(words):
    return min_distance(words) if len(words) >= 2 else None


def support_regularity(c: WordSet, expected_per_support: int,
                       oa_strength: int | None = None) -> VerificationReport:
    """Count codewords on every w-subset of coordinates; optionally check that
    the nonzero projections on each support form an OA of that strength
    (symbols 1..q-1 shifted to 0..q-2) with index one."""
    report = VerificationReport(subject=repr(c))
    w = c.weight
    report.add("constant_weight", "support-regularity", True, w is not None)
    if w is None:
        return report
    groups = defaultdict(list)
    for x in c.words:
        groups[tuple(sorted(support(x)))].append(x)
    counts = [len(groups.get(s, ())) for s in colex_subsets(c.n, w)]
    bad = sum(1 for k in counts if k != expected_per_support)
    report.add("supports_checked", "support-regularity", comb(c.n, w), len(counts))
    report.add(
        "per_support_count", "support-regularity", expected_per_support,
        f"{min(counts)}..{max(counts)}" if counts and min(counts) != max(counts) else (counts[0] if counts else 0),
        passed=bad == 0,
    )
    if oa_strength is not None:
        failures = 0
        first = "-"
        for s in colex_subsets(c.n, w):
            rows = [[x[i] - 1 for i in s] for x in groups.get(s, ())]
            try:
                lam = oa_verify(rows, oa_strength, c.q - 1) if rows else None
            except NotOA as exc:
                lam = None
                if first == "-":
                    first = f"support{s}:{exc}"
            if lam != 1:
                failures += 1
        report.add("support_oa_index_one", "oa-projection", 0, failures,
                   passed=failures == 0)
        if failures:
            report.add("support_oa_first_failure", "oa-projection", "-", first, passed=False)
    return report


def diameter_perfect_check(c: WordSet, a: WordSet) -> VerificationReport:
    """|C| * |A| == |J_q(n,w)| and d(C) == diam(A) + 1, exactly.

    A code with a single word has no minimum distance; its distance condition
    is treated as vacuously satisfied.  Over q = 2 all distances inside one
    weight class are even, so the condition is read in Johnson distance
    (half the Hamming distance): d == diam + 2.
    """
    if (c.n, c.q) != (a.n, a.q) or c.weight is None or c.weight != a.weight:
        raise PreconditionViolated(
            f"code {c!r} and anticode {a!r} do not live in the same J_q(n,w)"
        )
    d = _min_distance_or_none(c.words)
    diam = diameter(a.words)
    if d is not None and d <= diam:
        raise PreconditionViolated(f"minimum distance {d} does not exceed anticode diameter {diam}")
    report = VerificationReport(subject=f"{c!r} vs {a!r}")
    total = space_size(c.n, c.weight, c.q)
    report.add("size_product", REF_BOUND, total, len(c) * len(a))
    step = 2 if c.q == 2 else 1
    report.add("distance_vs_diameter", REF_BOUND, diam + step, "vacuous" if d is None else d,
               passed=d is None or d == diam + step)
    return report


def perfect_check(c: WordSet, e: int) -> VerificationReport:
    """Every word of J_q(n,w) lies within distance e of exactly one codeword,
    and codewords are pairwise at distance >= 2e+1 (disjoint balls in the
    ambient Hamming space)."""
    report = VerificationReport(subject=f"{c!r}, e={e}")
    w = c.weight
    report.add("constant_weight", "perfect-code", True, w is not None)
    if w is None:
        return report
    code = as_array(c.words).reshape(len(c), c.n)
    counts = np.zeros(space_size(c.n, w, c.q), dtype=np.int64)
    batch = []
    offset = 0

    def flush():
        nonlocal offset
        if not batch:
            return
        sp = as_array(batch)
        dist = (sp[:, None, :] != code[None, :, :]).sum(axis=2)
        counts[offset:offset + len(batch)] = (dist <= e).sum(axis=1)
        offset += len(batch)
        batch.clear()

    for y in enumerate_space(c.n, w, c.q):
        batch.append(y)
        if len(batch) == 4096:
            flush()
    flush()
    report.add("uncovered_words", "perfect-code", 0, int((counts == 0).sum()))
    report.add("multiply_covered_words", "perfect-code", 0, int((counts > 1).sum()))
    d = _min_distance_or_none(c.words)
    report.add("min_distance", "sphere-packing", f">={2 * e + 1}", "vacuous" if d is None else d,
               passed=d is None or d >= 2 * e + 1)
    return report


@dataclass(frozen=True)
class FamilyMatch:
    label: str  # F1..F6, or "S"/"S-complement" for binary Steiner systems
    anticode: AnticodeParams | None
    note: str = ""


def _hamming_ball_size(n: int, e: int, alphabet: int) -> int:
    return sum(comb(n, i) * (alphabet - 1) ** i for i in range(e + 1))


def _is_power_of_two(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def classify_family(n: int, d: int, w: int, q: int, size: int) -> list[FamilyMatch]:
    """Every family whose size formula matches these parameters, with the
    anticode a diameter-perfect code of that shape is paired with."""
    if not (1 <= w <= n and d >= 1 and q >= 2 and size >= 1):
        raise ValueError(f"invalid parameters n={n}, d={d}, w={w}, q={q}, size={size}")
    total = space_size(n, w, q)
    out: list[FamilyMatch] = []

    if q == 2:
        # Johnson scheme: Steiner systems S(t,w,n) and their complements
        if d % 2 == 0:
            t = w - d // 2 + 1
            if 1 <= t <= w and 2 * w <= n and Fraction(comb(n, t), comb(w, t)) == size:
                out.append(FamilyMatch("S", AnticodeParams("binary_A", n, w, 2, t=t)))
            wc = n - w  # design weight of the complemented system
            tc = wc - d // 2 + 1
            if 1 <= tc <= wc and 2 * wc <= n and Fraction(comb(n, tc), comb(wc, tc)) == size:
                out.append(FamilyMatch("S-complement", AnticodeParams("binary_complement", n, wc, 2, t=tc)))
        if not out:
            raise Unclassifiable(f"no binary family matches ({n},{d},{w})_2 with {size} words")
        return out

    if w == n:
        if d <= n and size == (q - 1) ** (n - d + 1):
            out.append(FamilyMatch("F1", AnticodeParams("M_family", n, n, q, delta=d - 1),
                                   "lifted OA/MDS anticode"))
        elif d % 2 == 1 and size * _hamming_ball_size(n, (d - 1) // 2, q - 1) == (q - 1) ** n:
            out.append(FamilyMatch("F1", AnticodeParams("ball", n, n, q, e=(d - 1) // 2),
                                   "lifted Hamming-scheme perfect code"))
        else:
            out.append(FamilyMatch("F1", None, "w = n; anticode not determined by size"))

    if w == n - 1 and _is_power_of_two(q - 1) and q > 2 and total % size == 0:
        if d % 2 == 1:
            e = (d - 1) // 2
            bsize = len(ball(canonical_word(n, w), e, q))
            if size * bsize == total:
                out.append(FamilyMatch("F2", AnticodeParams("ball", n, w, q, e=e), "perfect code"))
            else:
                out.append(FamilyMatch("F2", None, f"anticode of size {total // size} must be searched"))
        else:
            out.append(FamilyMatch("F2", None, f"anticode of size {total // size} must be searched"))

    if d % 2 == 1:
        t = w - (d - 1) // 2
        if 1 <= t <= w and Fraction(comb(n, t), comb(w, t)) * (q - 1) ** t == size:
            out.append(FamilyMatch("F3", AnticodeParams("S_family", n, w, q, t=t), f"GS({t},{w},{n},{q})"))

    if d == w and size == comb(n, w) * (q - 1):
        out.append(FamilyMatch("F4", AnticodeParams("M_family", n, w, q, delta=w - 1)))
    if d == w + 1 and size == comb(n, w):
        out.append(FamilyMatch("F5", AnticodeParams("M_family", n, w, q, delta=w)))
    if d < w and size == comb(n, w) * (q - 1) ** (w - d + 1):
        out.append(FamilyMatch("F6", AnticodeParams("M_family", n, w, q, delta=d - 1)))

    if not out:
        raise Unclassifiable(f"no family size formula matches ({n},{d},{w})_{q} with {size} words")
    return out


def family_labels(n, d, w, q, size) -> set[str]:
    try:
        return {m.label for m in classify_family(n, d, w, q, size)}
    except Unclassifiable:
        return set()
