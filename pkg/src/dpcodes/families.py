"""Constructions for the diameter-perfect constant-weight code families.

Each constructor returns a :class:`FamilyCode` carrying the claimed
parameters and a manifest describing the deterministic choices it made.
``certify`` re-derives the claims and checks the code-anticode product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .anticodes import AnticodeParams, anticode_m
from .errors import NotFullWeight, NotPrimePower, ParamsInfeasible, ParamsOutOfRange, ShapeMismatch
from .galois import is_prime_power
from .ortharray import OrthogonalArray, mds_min_weight_codewords, mds_parity_check, oa_verify, rs_oa
from .report import VerificationReport
from .space import Code, colex_subsets, place, space_size
from .verifier import diameter_perfect_check, support_regularity


@dataclass
class FamilyCode:
    code: Code
    family: str
    n: int
    d: int
    w: int
    q: int
    manifest: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.code)

    @property
    def diameter(self) -> int:
        """Diameter D = d-1 of the matching anticode."""
        return self.d - 1

    def anticode_params(self) -> AnticodeParams:
        return AnticodeParams("M_family", self.n, self.w, self.q, delta=self.d - 1)

    def per_support(self) -> int:
        return (self.q - 1) ** max(self.w - self.d + 1, 0)

    def certify(self) -> VerificationReport:
        """Claimed n, w, q, d and size; per-support regularity; code-anticode
        equality against A^m(n, w, d-1)."""
        c = self.code
        report = VerificationReport(subject=f"{self.family} {c!r}")
        report.add("length", "claimed-parameters", self.n, c.n)
        report.add("weight", "claimed-parameters", self.w, c.weight)
        report.add("alphabet", "claimed-parameters", self.q, c.q)
        if len(c) >= 2:
            report.add("min_distance", "claimed-parameters", self.d, c.min_distance)
        report.add("size", "claimed-parameters", comb(self.n, self.w) * self.per_support(), len(c))
        strength = self.w - self.d + 1 if self.d <= self.w else None
        report.extend(support_regularity(c, self.per_support(), strength if strength and strength >= 2 else None))
        if self.d >= 2:
            report.extend(diameter_perfect_check(c, anticode_m(self.n, self.w, self.d - 1, self.q)))
        return report

    def manifest_entries(self) -> dict:
        out = {
            "family": self.family,
            "n": self.n, "d": self.d, "w": self.w, "q": self.q,
            "size": self.size,
            "anticode": self.anticode_params().label(),
            "anticode_size": (self.q - 1) ** (self.d - 1),
            "product": self.size * (self.q - 1) ** (self.d - 1),
            "space_size": space_size(self.n, self.w, self.q),
        }
        out.update(self.manifest)
        return out


# F1: full-weight codes and Hamming-scheme codes over one fewer symbol

def f1_lift(c: Code) -> Code:
    """Hamming-scheme code over {0..q-2} -> J_q(n,n) via s -> s+1."""
    return Code([tuple(s + 1 for s in x) for x in c.words], q=c.q + 1, n=c.n, weight=c.n)


def f1_project(c: Code) -> Code:
    if any(0 in x for x in c.words):
        raise NotFullWeight("projection needs every symbol nonzero")
    return Code([tuple(s - 1 for s in x) for x in c.words], q=c.q - 1, n=c.n)


def f1_convert(c: Code, direction: str) -> Code:
    if direction == "lift":
        return f1_lift(c)
    if direction == "project":
        return f1_project(c)
    raise ValueError(f"direction must be 'lift' or 'project', not {direction!r}")


def f1_from_mds(t: int, n: int, q_hamming: int) -> FamilyCode:
    """Lift the Reed-Solomon OA(t, n, q_hamming) into J_{q_hamming+1}(n, n)."""
    oa = rs_oa(t, n, q_hamming)
    code = f1_lift(Code(oa.rows, q=q_hamming, n=n))
    return FamilyCode(code, "F1", n, n - t + 1, n, q_hamming + 1,
                      {"source": f"rs_oa(t={t},n={n},q={q_hamming})", "relabel": "s->s+1"})


# F4: MDS-CW codes

def mds_cw_construct(n: int, w: int, q: int) -> FamilyCode:
    if not is_prime_power(q):
        raise NotPrimePower(f"{q} is not a prime power")
    if n > q + 1:
        raise ParamsInfeasible(f"MDS length {n} exceeds q+1 = {q + 1}")
    code = mds_min_weight_codewords(mds_parity_check(n, w, q))
    return FamilyCode(code, "F4", n, w, w, q,
                      {"source": f"min-weight codewords of GRS[{n},{n - w + 1},{w}] over GF({q})",
                       "evaluation_points": "0,1,2,...(+infinity when n=q+1)"})


def mds_cw_union(c1: FamilyCode, c2: FamilyCode) -> FamilyCode:
    """Keep c1's symbols 1..q1-1, move c2's to q1..q1+q2-2, take the union."""
    if (c1.n, c1.w) != (c2.n, c2.w):
        raise ShapeMismatch(f"(n,w) = {(c1.n, c1.w)} vs {(c2.n, c2.w)}")
    q1, q2 = c1.q, c2.q
    shifted = [tuple(s + q1 - 1 if s else 0 for s in x) for x in c2.code.words]
    q = q1 + q2 - 1
    code = Code(list(c1.code.words) + shifted, q=q, n=c1.n, weight=c1.w)
    return FamilyCode(code, "F4", c1.n, c1.w, c1.w, q,
                      {"source": f"union of MDS-CW codes over q1={q1}, q2={q2}",
                       "relabel": f"second code s->s+{q1 - 1}"})


# F5: d = w+1, one codeword per w-support

def f5_construct(n: int, w: int) -> FamilyCode:
    """Alphabet 1 + C(n-1, w-1); every coordinate hands out fresh symbols
    1, 2, 3, ... to the codewords touching it, in colex support order."""
    if not 1 <= w <= n - 1:
        raise ParamsOutOfRange(f"need 1 <= w <= n-1, got n={n}, w={w}")
    q = 1 + comb(n - 1, w - 1)
    next_symbol = [1] * n
    words = []
    for supp in colex_subsets(n, w):
        syms = []
        for i in supp:
            syms.append(next_symbol[i])
            next_symbol[i] += 1
        words.append(place(n, supp, syms))
    return FamilyCode(Code(words, q=q, n=n, weight=w), "F5", n, w + 1, w, q,
                      {"support_order": "colex", "symbol_assignment": "per-coordinate counter"})


@dataclass(frozen=True)
class OneFactorization:
    m: int
    factors: tuple[tuple[tuple[int, int], ...], ...]

    def verify(self) -> bool:
        m = self.m
        edges = [e for f in self.factors for e in f]
        if len(edges) != len(set(edges)) or len(edges) != m * (m - 1) // 2:
            return False
        for f in self.factors:
            pts = [p for e in f for p in e]
            if len(pts) != len(set(pts)):
                return False
            expected = m if m % 2 == 0 else m - 1
            if len(pts) != expected:
                return False
        return len(self.factors) == (m - 1 if m % 2 == 0 else m)


def one_factorization(m: int) -> OneFactorization:
    """Circle method on vertices 1..m (hub m) for even m; for odd m, run it on
    m+1 vertices and drop the hub to get a near-one-factorization."""
    if m < 2:
        raise ParamsOutOfRange("need m >= 2")
    if m % 2:
        full = one_factorization(m + 1)
        hub = m + 1
        factors = tuple(tuple(e for e in f if hub not in e) for f in full.factors)
        return OneFactorization(m, factors)
    k = m - 1
    factors = []
    for r in range(k):
        f = [tuple(sorted((r + 1, m)))]
        for j in range(1, m // 2):
            a, b = (r + j) % k + 1, (r - j) % k + 1
            f.append(tuple(sorted((a, b))))
        factors.append(tuple(sorted(f)))
    out = OneFactorization(m, tuple(factors))
    assert out.verify()
    return out


def f5_construct_w3(n: int) -> FamilyCode:
    """Weight-3, distance-4 code with one codeword per triple.  At coordinate i
    of triple {i,j,k} the symbol is r where {j,k} lies in factor r of a
    (near-)one-factorization of the other n-1 coordinates."""
    if n < 4:
        raise ParamsOutOfRange("need n >= 4")
    fact = one_factorization(n - 1)
    q = len(fact.factors) + 1
    # factor_of[i][(j,k)] for each coordinate i
    factor_of = []
    for i in range(n):
        others = [p for p in range(n) if p != i]
        lookup = {}
        for r, f in enumerate(fact.factors, start=1):
            for a, b in f:
                lookup[frozenset((others[a - 1], others[b - 1]))] = r
        factor_of.append(lookup)
    words = []
    for supp in colex_subsets(n, 3):
        syms = [factor_of[i][frozenset(p for p in supp if p != i)] for i in supp]
        words.append(place(n, supp, syms))
    return FamilyCode(Code(words, q=q, n=n, weight=3), "F5", n, 4, 3, q,
                      {"factorization": "circle method" + (" (near)" if (n - 1) % 2 else ""),
                       "symbol": "index of the factor holding the other two coordinates"})


# F6: multiple orthogonal arrays constant-weight codes

def moa_from_oa(oa: OrthogonalArray, l: int) -> FamilyCode:
    """Zero out subset S_r on block r of q^(t-1) rows, drop the last column,
    keep the first C(n-1,l) q^(t-1) rows.  OA symbols s become s+1."""
    n, t, q = oa.n, oa.t, oa.q
    if not 1 <= l <= n - 1:
        raise ParamsOutOfRange(f"need 1 <= l <= n-1, got l={l}")
    r = comb(n - 1, l)
    if q < r:
        raise ParamsInfeasible(f"q = {q} < C(n-1, l) = {r}")
    block = q ** (t - 1) * oa.lam
    rows = sorted(oa.rows, key=lambda row: row[-1])  # stable: blocks of equal last symbol
    subsets = list(colex_subsets(n - 1, l))
    words = []
    for b, zeros in enumerate(subsets):
        for row in rows[b * block:(b + 1) * block]:
            x = [s + 1 for s in row[:-1]]
            for i in zeros:
                x[i] = 0
            words.append(tuple(x))
    code = Code(words, q=q + 1, n=n - 1, weight=n - 1 - l)
    w = n - 1 - l
    # two published statements disagree on the distance (n-t-l+1 vs n-t-l-1);
    # certify what the code actually has and say which one it matches
    d = code.min_distance if len(code) >= 2 else n - t - l + 1
    matches = [label for label, v in (("n-t-l+1", n - t - l + 1), ("n-t-l-1", n - t - l - 1)) if v == d]
    family = "F4" if d == w else "F6"
    return FamilyCode(code, family, n - 1, d, w, q + 1,
                      {"subset_order": "colex", "block_size": block,
                       "oa": f"OA({t},{n},{q})", "l": l,
                       "distance_formula": ",".join(matches) or "neither"})


def moa_cw_construct(n: int, t: int, l: int, q: int) -> FamilyCode:
    if t < 2:
        raise ParamsOutOfRange("need t >= 2")
    if not 1 <= l <= n - 1:
        raise ParamsOutOfRange(f"need 1 <= l <= n-1, got l={l}")
    if q < comb(n - 1, l):
        raise ParamsInfeasible(f"q = {q} < C(n-1, l) = {comb(n - 1, l)}")
    oa = rs_oa(t, n, q)
    oa_verify(oa.rows, t, q)
    fc = moa_from_oa(oa, l)
    fc.manifest["oa"] = f"rs_oa(t={t},n={n},q={q})"
    return fc


def moa_reduce(c: FamilyCode, mode: str) -> FamilyCode:
    """puncture: words with 0 in coordinate 1, coordinate removed -> (n-1, d, w).
    shorten: words nonzero in coordinate 1, coordinate removed -> (n-1, d-1, w-1)."""
    if c.n < 2:
        raise ParamsOutOfRange("need n >= 2")
    if mode == "puncture":
        words = [x[1:] for x in c.code.words if x[0] == 0]
        n, d, w = c.n - 1, c.d, c.w
        if w > n:
            raise ParamsOutOfRange("puncturing a full-weight code leaves nothing")
    elif mode == "shorten":
        if c.d < 2 or c.w < 2:
            raise ParamsOutOfRange("shortening needs d >= 2 and w >= 2")
        words = [x[1:] for x in c.code.words if x[0] != 0]
        n, d, w = c.n - 1, c.d - 1, c.w - 1
    else:
        raise ValueError(f"mode must be 'puncture' or 'shorten', not {mode!r}")
    code = Code(words, q=c.q, n=n, weight=w)
    family = "F4" if d == w else "F6"
    manifest = dict(c.manifest)
    manifest["reduction"] = manifest.get("reduction", "") + mode[0]
    return FamilyCode(code, family, n, d, w, c.q, manifest)
