"""Necessary conditions for diameter-perfect constant-weight codes.

Each verdict is tagged with the family it constrains, so a report can say
which family shapes survive for a given (n, d, w, q).  A handful of
externally known existence results live in a separate fact table; they are
reported as notes and never mixed into the derived verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .designs import steiner_divisibility
from .errors import ParamsOutOfRange
from .ortharray import oa_feasible

FAMILIES = ("F1", "F2", "F3", "F4", "F5", "F6")


@dataclass(frozen=True)
class Verdict:
    bound: str
    family: str
    verdict: str  # "satisfied" | "violated"
    inequality: str

    @property
    def violated(self) -> bool:
        return self.verdict == "violated"


@dataclass
class BoundsReport:
    n: int
    d: int
    w: int
    q: int
    verdicts: list[Verdict] = field(default_factory=list)
    candidates: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    facts: list[str] = field(default_factory=list)

    def add(self, bound, family, ok: bool, inequality: str):
        self.verdicts.append(Verdict(bound, family, "satisfied" if ok else "violated", inequality))

    def violations(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.violated]

    def violations_for(self, family: str) -> list[Verdict]:
        return [v for v in self.verdicts if v.violated and v.family == family]

    @property
    def feasible_families(self) -> list[str]:
        return [f for f in self.candidates if not self.violations_for(f)]

    def render(self) -> str:
        lines = [f"BOUNDS n={self.n} d={self.d} w={self.w} q={self.q}"]
        for v in self.verdicts:
            lines.append(f"  [{v.family}] {v.bound}: {v.verdict}  ({v.inequality})")
        lines.append("  candidate families: " + (" ".join(self.candidates) or "none"))
        lines.append("  feasible by bounds: " + (" ".join(self.feasible_families) or "none"))
        for note in self.notes:
            lines.append(f"  note: {note}")
        for fact in self.facts:
            lines.append(f"  known: {fact}")
        return "\n".join(lines) + "\n"

    def render_kv(self) -> str:
        out = [f"n={self.n}", f"d={self.d}", f"w={self.w}", f"q={self.q}"]
        for i, v in enumerate(self.verdicts):
            out.append(f"verdict.{i}={v.family};{v.bound};{v.verdict};{v.inequality}")
        out.append("candidates=" + ",".join(self.candidates))
        out.append("feasible=" + ",".join(self.feasible_families))
        out.append(f"violations={len(self.violations())}")
        for i, fact in enumerate(self.facts):
            out.append(f"fact.{i}={fact}")
        return "\n".join(out) + "\n"


def _ineq(lhs_name, lhs, op, rhs_name, rhs) -> str:
    return f"{lhs_name}={lhs} {op} {rhs_name}={rhs}"


def moa_bounds(n: int, d: int, w: int, q: int, family: str = "F6") -> BoundsReport:
    """Alphabet/weight/length trade-offs for MOA-CW codes (d < w).

    With delta = w-d the nonzero projections on a support form an
    OA(delta+1, w, q-1), which drives every inequality below.  The even-q
    weight bound is kept in its published form w <= q+delta, which is
    looser than the OA substitution (w <= q+delta-2); ``feasibility_report``
    adds the OA check itself.
    """
    if not (1 <= d <= w <= n and q >= 2):
        raise ParamsOutOfRange(f"need 1 <= d <= w <= n and q >= 2; got {(n, d, w, q)}")
    r = BoundsReport(n, d, w, q, candidates=[family])
    delta = w - d
    if delta == 0:
        r.notes.append("d = w: MOA-CW bounds need d < w")
        return r
    if delta == 1:
        r.add("moa_weight_d_eq_w_minus_1", family, w <= q, _ineq("w", w, "<=", "q", q))
    if 2 <= delta <= w - 1:
        if q % 2 == 0:
            r.add("moa_weight_even_q", family, w <= q + delta, _ineq("w", w, "<=", "q+delta", q + delta))
        else:
            r.add("moa_weight_odd_q", family, w <= q + delta - 1,
                  _ineq("w", w, "<=", "q+delta-1", q + delta - 1))
        # the same inequalities rewritten as d against q
        if q % 2 == 0:
            r.add("moa_distance_even_q", family, d <= q, _ineq("d", d, "<=", "q", q))
        else:
            r.add("moa_distance_odd_q", family, d + 1 <= q, _ineq("d+1", d + 1, "<=", "q", q))
    if q - 1 <= delta + 1:
        r.add("moa_weight_small_alphabet", family, w <= delta + 2,
              _ineq("w", w, "<=", "delta+2", delta + 2))
    r.add("moa_length", family, n <= q + w - 2, _ineq("n", n, "<=", "q+w-2", q + w - 2))
    return r


@dataclass(frozen=True)
class Q0Bounds:
    lower: int
    upper: int
    exact: int | None = None

    def __iter__(self):
        return iter((self.lower, self.upper, self.exact))


def q0_bounds(w: int, n: int) -> Q0Bounds:
    """Smallest alphabet admitting an (n, w+1, w)_q code with one codeword
    per w-support."""
    if not 1 <= w <= n - 1:
        raise ParamsOutOfRange(f"need 1 <= w <= n-1, got w={w}, n={n}")
    upper = 1 + comb(n - 1, w - 1)
    if w == 1:
        # weight-one words on distinct coordinates are already at distance 2
        return Q0Bounds(2, 2, 2)
    lower = max(n - w + 2, w + 1)
    exact = None
    if n == w + 1:
        exact = w + 1
    elif w == 2:
        exact = n
    elif w == 3:
        exact = n - 1 if n % 2 else n
    return Q0Bounds(lower, upper, exact)


def _is_power_of_two(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def candidate_families(n: int, d: int, w: int, q: int) -> list[str]:
    """Family shapes compatible with (n, d, w, q), ignoring size."""
    out = []
    if w == n:
        out.append("F1")
    if w == n - 1 and q >= 3 and _is_power_of_two(q - 1):
        out.append("F2")
    if d % 2 == 1 and 1 <= w - (d - 1) // 2 <= w:
        out.append("F3")
    if d == w:
        out.append("F4")
    if d == w + 1 and w <= n - 1:
        out.append("F5")
    if d < w:
        out.append("F6")
    return out


# Externally established results, quoted rather than derived.
def _known_facts(n, d, w, q) -> list[str]:
    facts = []
    if q == 3 and w == n - 1:
        if d == 4:
            if n == 6:
                facts.append("exists: the only ternary w=n-1, d=4 diameter-perfect parameters (12 codewords) [Kro08, OsSv02]")
            else:
                facts.append("nonexistent: ternary w=n-1, d=4 diameter-perfect codes exist only for n=6 [Kro08]")
        if d == 5:
            m = n.bit_length() - 1
            if n == 16:
                facts.append("nonexistent: ternary length-16, d=5 diameter-perfect code [KOP16]")
            elif n == 64:
                facts.append("exists: ternary length-64, d=5 diameter-perfect code [BDMW]")
            elif _is_power_of_two(n) and m % 2 == 1:
                facts.append(f"exists: ternary d=5 diameter-perfect code for n=2^{m}, m odd [Kro08]")
        if d == 3:
            if _is_power_of_two(n) and n >= 4:
                facts.append("exists: ternary 1-perfect code in J_3(2^m, 2^m-1) [Sva99, LiTo99]")
            else:
                facts.append("nonexistent as a 1-perfect code: ternary 1-perfect codes only in J_3(2^m, 2^m-1) [LiTo99]")
    if d == 3 and n == q + 1 and w == q and q >= 5 and _is_power_of_two(q - 1):
        facts.append("exists: 1-perfect code in J_q(q+1, q), q = 2^k+1 [EtLi01]")
    return facts


def _binary_report(r: BoundsReport):
    n, d, w = r.n, r.d, r.w
    r.notes.append("q = 2: Johnson scheme, Steiner system checks only")
    if comb(n, w) == 1:
        # a single word: the trivial one-block system, every distance vacuous
        r.candidates = ["S"]
        r.add("single_word_space", "S", True, f"C({n},{w}) = 1")
        return
    if d % 2:
        r.add("binary_even_distance", "S", False, f"d={d} must be even for a binary constant-weight code")
        r.candidates = ["S"]
        return
    for label, weight in (("S", w), ("S-complement", n - w)):
        t = weight - d // 2 + 1
        if not 1 <= t <= weight <= n:
            continue
        r.candidates.append(label)
        ok, i = steiner_divisibility(t, weight, n)
        r.add("steiner_divisibility", label, ok,
              f"C({n}-i,{t}-i)/C({weight}-i,{t}-i) integral for 0<=i<{t}"
              + ("" if ok else f"; fails at i={i}"))
        r.add("steiner_half_weight", label, 2 * weight <= n, _ineq("2w", 2 * weight, "<=", "n", n))


def feasibility_report(n: int, d: int, w: int, q: int) -> BoundsReport:
    if not (1 <= w <= n and d >= 1 and q >= 2):
        raise ParamsOutOfRange(f"invalid parameters {(n, d, w, q)}")
    r = BoundsReport(n, d, w, q)
    r.facts = _known_facts(n, d, w, q)
    if q == 2:
        _binary_report(r)
        return r
    r.candidates = candidate_families(n, d, w, q)
    for fam in r.candidates:
        if fam == "F1":
            r.add("full_weight_distance", fam, d <= n, _ineq("d", d, "<=", "n", n))
        elif fam == "F2":
            total = comb(n, w) * (q - 1) ** w
            r.notes.append(f"F2: |J| = {total}; the code and anticode sizes must multiply to it")
        elif fam == "F3":
            t = w - (d - 1) // 2
            for i in range(t):
                size = Fraction(comb(n - i, t - i), comb(w - i, t - i)) * (q - 1) ** (t - i)
                r.add("gs_integrality", fam, size.denominator == 1,
                      f"|GS({t - i},{w - i},{n - i},{q})| = {size} must be an integer")
        elif fam == "F4":
            r.add("mds_cw_distance", fam, d == w, _ineq("d", d, "==", "w", w))
            r.notes.append("F4: some threshold QMDS(n,w) makes every larger q admissible; its value is unknown")
        elif fam == "F5":
            b = q0_bounds(w, n)
            if b.exact is not None:
                r.add("q0_exact", fam, q >= b.exact, _ineq("q", q, ">=", "q0", b.exact))
            else:
                r.add("q0_lower", fam, q >= b.lower, _ineq("q", q, ">=", "q0_lower", b.lower))
                if q < b.upper:
                    r.notes.append(f"F5: q={q} below the constructive threshold {b.upper}; existence undecided")
        elif fam == "F6":
            t = w - d + 1
            oa = oa_feasible(t, w, q - 1)
            r.add(oa.bound or "oa_existence", fam, not oa.infeasible,
                  f"OA({t},{w},{q - 1}) {oa.status}: {oa.reason}")
            r.verdicts.extend(moa_bounds(n, d, w, q).verdicts)
    if not r.candidates:
        r.notes.append("no diameter-perfect family has this shape")
    return r
