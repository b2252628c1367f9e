"""Explicit anticode families in J(n,w) and J_q(n,w).

All four families fix a prefix of the coordinates; callers that need another
placement permute coordinates themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .errors import ParamsOutOfRange
from .report import VerificationReport
from .space import Anticode, WordSet, ball, canonical_word, colex_subsets, diameter, enumerate_space


@dataclass(frozen=True)
class AnticodeParams:
    family: str  # "binary_A" | "binary_complement" | "S_family" | "M_family" | "ball"
    n: int
    w: int
    q: int
    t: int | None = None
    delta: int | None = None
    e: int | None = None

    def build(self) -> Anticode:
        if self.family == "binary_A":
            return anticode_binary(self.n, self.w, self.t)
        if self.family == "binary_complement":
            return anticode_binary(self.n, self.w, self.t, complement=True)
        if self.family == "S_family":
            return anticode_s(self.n, self.w, self.t, self.q)
        if self.family == "M_family":
            return anticode_m(self.n, self.w, self.delta, self.q)
        if self.family == "ball":
            return ball_anticode(self.n, self.w, self.e, self.q)
        raise ValueError(f"unknown anticode family {self.family!r}")

    def expected_size(self) -> int:
        if self.family in ("binary_A", "binary_complement"):
            return comb(self.n - self.t, self.w - self.t)
        if self.family == "S_family":
            return comb(self.n - self.t, self.w - self.t) * (self.q - 1) ** (self.w - self.t)
        if self.family == "M_family":
            return (self.q - 1) ** self.delta
        return len(self.build())

    def label(self) -> str:
        if self.family == "S_family":
            return f"s:{self.n},{self.w},{self.t}"
        if self.family == "M_family":
            return f"m:{self.n},{self.w},{self.delta}"
        if self.family == "ball":
            return f"ball:{self.n},{self.w},{self.e}"
        prefix = "a" if self.family == "binary_A" else "abar"
        return f"{prefix}:{self.n},{self.w},{self.t}"


def anticode_binary(n: int, w: int, t: int, complement: bool = False) -> Anticode:
    """A(n,w,t): weight-w binary words with ones on the first t coordinates.
    The complement family has zeros there and weight n-w.  For w <= n/2
    the Johnson diameter of both is w-t (Hamming diameter 2(w-t)); above
    that the set is still built (it is what A^s gives at q = 2) but the
    tails are forced to overlap and the diameter shrinks."""
    if not 0 <= t <= w <= n:
        raise ParamsOutOfRange(f"need 0 <= t <= w <= n, got n={n}, w={w}, t={t}")
    words = []
    for rest in colex_subsets(n - t, w - t):
        x = [1] * t + [0] * (n - t)
        for i in rest:
            x[t + i] = 1
        if complement:
            x = [1 - s for s in x]
        words.append(tuple(x))
    return Anticode(words, q=2, n=n, weight=n - w if complement else w)


def anticode_s(n: int, w: int, t: int, q: int) -> Anticode:
    """A^s(n,w,t): ones on the first t coordinates, any weight-(w-t) word over
    Z_q on the remaining n-t."""
    if not (0 <= t <= w <= n) or q < 2:
        raise ParamsOutOfRange(f"need 0 <= t <= w <= n, q >= 2; got n={n}, w={w}, t={t}, q={q}")
    words = [(1,) * t + tail for tail in enumerate_space(n - t, w - t, q)]
    return Anticode(words, q=q, n=n, weight=w)


def anticode_s_diameter(n: int, w: int, t: int, q: int) -> int:
    """Closed form for the diameter of A^s(n,w,t).

    Two tails of weight s = w-t inside m = n-t coordinates overlap in at
    least k = max(0, 2s-m) positions; with q >= 3 the overlap can still
    disagree, with q = 2 it cannot.
    """
    s, m = w - t, n - t
    if s == 0:
        return 0
    k = max(0, 2 * s - m)
    if q == 2:
        return 2 * (s - k)
    return 2 * s - k


def anticode_m(n: int, w: int, delta: int, q: int) -> Anticode:
    """A^m(n,w,delta): arbitrary nonzero symbols on the first delta
    coordinates, ones on the next w-delta, zeros on the last n-w."""
    if not (1 <= delta <= w <= n) or q < 2:
        raise ParamsOutOfRange(f"need 1 <= delta <= w <= n, q >= 2; got n={n}, w={w}, delta={delta}, q={q}")
    tail = (1,) * (w - delta) + (0,) * (n - w)
    words = [head + tail for head in product(range(1, q), repeat=delta)]
    return Anticode(words, q=q, n=n, weight=w)


def ball_anticode(n: int, w: int, e: int, q: int) -> Anticode:
    """Radius-e ball around the canonical word, inside J_q(n,w)."""
    if not (0 <= w <= n) or e < 0:
        raise ParamsOutOfRange(f"bad ball parameters n={n}, w={w}, e={e}")
    return Anticode(ball(canonical_word(n, w), e, q), q=q, n=n, weight=w)


def anticode_hamming_lift(words, q: int) -> Anticode:
    """Lift a Hamming-scheme anticode over {0..q-2} into J_q(n,n) by s -> s+1."""
    lifted = [tuple(s + 1 for s in x) for x in words]
    n = len(lifted[0])
    return Anticode(lifted, q=q, n=n, weight=n)


def complement(x):
    return tuple(1 - s for s in x)


def anticode_verify(a: WordSet, expected_diameter: int, expected_size: int,
                    ref: str = "anticode") -> VerificationReport:
    """Recount size and rescan the diameter; failures are reported, not raised."""
    report = VerificationReport(subject=repr(a))
    report.add("anticode_size", ref, expected_size, len(a))
    report.add("anticode_diameter", ref, expected_diameter, diameter(a.words))
    return report


def parse_anticode_spec(spec: str, q: int) -> AnticodeParams:
    """``s:n,w,t`` | ``m:n,w,delta`` | ``ball:n,w,e`` | ``a:n,w,t`` | ``abar:n,w,t``."""
    kind, _, rest = spec.partition(":")
    try:
        n, w, x = (int(v) for v in rest.split(","))
    except ValueError:
        raise ValueError(f"malformed anticode spec {spec!r}") from None
    if kind == "s":
        return AnticodeParams("S_family", n, w, q, t=x)
    if kind == "m":
        return AnticodeParams("M_family", n, w, q, delta=x)
    if kind == "ball":
        return AnticodeParams("ball", n, w, q, e=x)
    if kind == "a":
        return AnticodeParams("binary_A", n, w, 2, t=x)
    if kind == "abar":
        return AnticodeParams("binary_complement", n, w, 2, t=x)
    raise ValueError(f"unknown anticode family {kind!r} in {spec!r}")
