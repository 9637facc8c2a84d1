"""Seeded identity-verification suites and the grid-based identity checker.

Each suite pairs a deterministic instance generator with a single-instance
checker. Failures carry the full instance encoding so one instance can be
replayed in isolation. Both sides of every multivariate identity are
polynomial of per-variable degree <= d, so agreement on a per-variable grid
of d+1 distinct points proves the identity.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence

from .combinatorics import binom, check_sign_lemma, enum_partitions3
from .errors import UnknownSuite
from .io import parse_multiset
from .poly import Poly
from .rationals import format_rational, qof
from .rootsets import RootMultiset, rprod
from .schur import SchurSpec, schur_consistency_check, schur_value
from .sylvester import (apery_jouanolou_rhs, exchange_rhs_eval,
                        single_sum_eval, sres_det, syl_double, syl_single,
                        sylm, sylm_terms, sym_interp_eval)

import random


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    count: int = 50
    max_deg: int = 6
    coeff_bound: int = 8
    allow_shared_roots: bool = True


@dataclass
class SuiteReport:
    suite: str
    instances: int = 0
    failures: List[dict] = field(default_factory=list)
    wall_time: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "instances": self.instances,
            "failures": self.failures,
            "wall_time": self.wall_time,
            "notes": self.notes,
        }

    def human(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"[{status}] suite {self.suite}: {self.instances} instances,"
                 f" {len(self.failures)} failures,"
                 f" {self.wall_time:.2f}s"]
        lines.extend(f"  note: {n}" for n in self.notes)
        for f in self.failures:
            lines.append("  failure: " + json.dumps(f, sort_keys=True))
        return "\n".join(lines)


def grid_check_identity(lhs: Callable[..., Fraction],
                        rhs: Callable[..., Fraction],
                        nvars: int, per_var_degree: int,
                        avoid: Iterable = ()) -> bool:
    """Compare two k-variable polynomial evaluators on a full grid.

    Agreement at (per_var_degree+1)^k points with distinct coordinates per
    axis proves equality of polynomials of per-variable degree at most
    per_var_degree.
    """
    avoid_set = {qof(v) for v in avoid}
    values: List[Fraction] = []
    candidate = 0
    while len(values) < per_var_degree + 1:
        q = Fraction(candidate)
        if q not in avoid_set:
            values.append(q)
        candidate += 1
    for point in itertools.product(values, repeat=nvars):
        if lhs(*point) != rhs(*point):
            return False
    return True


# -- instance generation --------------------------------------------------------


def _rand_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _sample_distinct(rng: random.Random, k: int, bound: int,
                     avoid: Sequence[Fraction] = ()) -> List[Fraction]:
    seen = set(avoid)
    out: List[Fraction] = []
    while len(out) < k:
        q = _rand_rational(rng, bound)
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out


def _rand_multiset(rng: random.Random, m: int, bound: int,
                   avoid: Sequence[Fraction] = (),
                   force_repeat: bool = False) -> RootMultiset:
    max_distinct = m - 1 if (force_repeat and m >= 2) else m
    distinct = rng.randint(1, max(1, max_distinct))
    values = _sample_distinct(rng, distinct, bound, avoid)
    mults = [1] * distinct
    for _ in range(m - distinct):
        mults[rng.randrange(distinct)] += 1
    return RootMultiset(zip(values, mults))


def _rand_pair(rng: random.Random, cfg: FuzzConfig,
               force_repeat: bool) -> tuple:
    m = rng.randint(1, cfg.max_deg)
    n = rng.randint(1, cfg.max_deg)
    a = _rand_multiset(rng, m, cfg.coeff_bound,
                       force_repeat=force_repeat and m >= 2)
    share = cfg.allow_shared_roots and rng.random() < 0.5
    avoid = () if share else a.distinct_values()
    b = _rand_multiset(rng, n, cfg.coeff_bound, avoid=avoid,
                       force_repeat=force_repeat and n >= 2)
    return a, b

def _rand_set_pair(rng: random.Random, cfg: FuzzConfig,
                   min_m: int = 1, min_n: int = 1,
                   max_total: Optional[int] = None) -> tuple:
    while True:
        m = rng.randint(min_m, cfg.max_deg)
        n = rng.randint(min_n, cfg.max_deg)
        if max_total is None or m + n <= max_total:
            break
    vals = _sample_distinct(rng, m + n, cfg.coeff_bound)
    return (RootMultiset.from_values(vals[:m]),
            RootMultiset.from_values(vals[m:]))


def _valid_ds(m: int, n: int) -> range:
    return range(0, min(m, n) + (0 if m == n else 1))


def _sres_sign(d: int, m: int) -> int:
    return -1 if (d * (m - d)) % 2 else 1


def _collapsed_double_sum(a: RootMultiset, b: RootMultiset, d: int) -> Poly:
    """Literal two-index multiset sum, written out independently of sylm."""
    abar, a_excess = a.split()
    bbar, _ = b.split()
    m = a.size
    mp = a.excess_count
    total = Poly.zero()
    for ap_vals in itertools.combinations(abar.distinct_values(), d - mp):
        ap = RootMultiset.from_values(ap_vals)
        a_rest = abar.difference(ap)
        for bp_vals in itertools.combinations(bbar.distinct_values(), mp):
            bp = RootMultiset.from_values(bp_vals)
            b_rest = bbar.difference(bp)
            num = rprod(a_excess, b_rest) * rprod(a_rest, b.difference(bp))
            if num == 0:
                continue
            den = rprod(ap, a_rest) * rprod(bp, b_rest)
            total = total + (Poly.from_roots(ap_vals)
                             * Poly.from_roots(bp_vals)).scale(num / den)
    return total.scale(-1 if (mp * (m - d)) % 2 else 1)


# -- per-suite generators and checkers -----------------------------------------


def _gen_thm14(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    for i in range(cfg.count):
        a, b = _rand_pair(rng, cfg, force_repeat=i % 2 == 0)
        yield {"a": a.to_shorthand(), "b": b.to_shorthand()}


def _check_thm14(inst: dict) -> dict:
    a = parse_multiset(inst["a"])
    b = parse_multiset(inst["b"])
    m, n = a.size, b.size
    regimes = set()
    for d in _valid_ds(m, n):
        regimes.add("collapsed" if a.excess_count + b.excess_count <= d
                    else "general")
        lhs = sres_det(Poly.from_roots(a.values()),
                       Poly.from_roots(b.values()), d)
        rhs = sylm(a, b, d).scale(_sres_sign(d, m))
        if lhs != rhs:
            return {"ok": False, "d": d,
                    "sres": lhs.to_json(), "sylm_signed": rhs.to_json(),
                    "regimes": sorted(regimes)}
    return {"ok": True, "regimes": sorted(regimes)}


def _gen_thm12(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    produced = 0
    while produced < cfg.count:
        a, b = _rand_pair(rng, cfg, force_repeat=produced % 2 == 0)
        m, n = a.size, b.size
        ds = [d for d in _valid_ds(m, n)
              if d >= a.excess_count + b.excess_count]
        if not ds:
            continue
        produced += 1
        yield {"a": a.to_shorthand(), "b": b.to_shorthand(),
               "d": rng.choice(ds)}


def _check_thm12(inst: dict) -> dict:
    a = parse_multiset(inst["a"])
    b = parse_multiset(inst["b"])
    d = inst["d"]
    terms = list(sylm_terms(a, b, d))
    nonempty = [t for t in terms if any(t.partition.blocks)]
    if nonempty:
        return {"ok": False, "why": "non-empty partition in collapsed regime"}
    value = Poly.zero()
    for t in terms:
        value = value + t.value
    independent = _collapsed_double_sum(a, b, d)
    if value != independent:
        return {"ok": False, "sylm": value.to_json(),
                "double_sum": independent.to_json()}
    return {"ok": True}


def _gen_sets(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        a, b = _rand_set_pair(rng, cfg)
        yield {"a": a.to_shorthand(), "b": b.to_shorthand()}


def _check_eq1(inst: dict) -> dict:
    a = parse_multiset(inst["a"])
    b = parse_multiset(inst["b"])
    m, n = a.size, b.size
    f = Poly.from_roots(a.values())
    g = Poly.from_roots(b.values())
    for d in _valid_ds(m, n):
        sres = sres_det(f, g, d)
        for p in range(0, min(d, m) + 1):
            q = d - p
            if q > n:
                continue
            sign = -1 if (p * (m - d)) % 2 else 1
            expect = sres.scale(sign * binom(d, p))
            got = syl_double(a, b, p, q)
            if got != expect:
                return {"ok": False, "d": d, "p": p, "q": q,
                        "double": got.to_json(), "expected": expect.to_json()}
    return {"ok": True}


def _check_eq2(inst: dict) -> dict:
    a = parse_multiset(inst["a"])
    b = parse_multiset(inst["b"])
    m, n = a.size, b.size
    for d in _valid_ds(m, n):
        single = syl_single(a, b, d)
        for p in range(0, min(d, m) + 1):
            q = d - p
            if q > n:
                continue
            sign = -1 if (q * (m - d)) % 2 else 1
            expect = single.scale(sign * binom(d, p))
            got = syl_double(a, b, p, q)
            if got != expect:
                return {"ok": False, "d": d, "p": p, "q": q,
                        "double": got.to_json(), "expected": expect.to_json()}
    return {"ok": True}


def _check_eq3(inst: dict) -> dict:
    a = parse_multiset(inst["a"])
    b = parse_multiset(inst["b"])
    m, n = a.size, b.size
    f = Poly.from_roots(a.values())
    g = Poly.from_roots(b.values())
    for d in _valid_ds(m, n):
        lhs = sres_det(f, g, d)
        rhs = syl_single(a, b, d).scale(_sres_sign(d, m))
        if lhs != rhs:
            return {"ok": False, "d": d, "sres": lhs.to_json(),
                    "single_signed": rhs.to_json()}
    return {"ok": True}


def _gen_lemma24(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    emitted = 0
    while emitted < 2 * cfg.count:
        part = 1 if emitted % 2 == 0 else 2
        if part == 1:
            # part (1): |A| >= d, |B| >= d
            a, b = _rand_set_pair(rng, cfg)
            d = rng.randint(0, min(a.size, b.size))
        else:
            # part (2): |B| < d <= |A|, with room for a nonnegative |X|
            m = rng.randint(2, cfg.max_deg)
            n = rng.randint(1, m - 1)
            d = rng.randint(n + 1, m)
            if m + n - 2 * d < 0:
                continue
            vals = _sample_distinct(rng, m + n, cfg.coeff_bound)
            a = RootMultiset.from_values(vals[:m])
            b = RootMultiset.from_values(vals[m:])
        nx = min(rng.randint(1, 2), max(a.size + b.size - 2 * d, 0))
        emitted += 1
        yield {"part": part, "a": a.to_shorthand(), "b": b.to_shorthand(),
               "d": d, "nx": nx}


def _check_lemma24(inst: dict) -> dict:
    a = parse_multiset(inst["a"])
    b = parse_multiset(inst["b"])
    d, nx = inst["d"], inst["nx"]
    avoid = a.distinct_values() + b.distinct_values()
    if inst["part"] == 1:
        ok = grid_check_identity(
            lambda *xs: single_sum_eval(a, b, d, xs),
            lambda *xs: exchange_rhs_eval(a, b, d, xs),
            nx, d, avoid)
    else:
        ok = grid_check_identity(
            lambda *xs: single_sum_eval(a, b, d, xs),
            lambda *xs: Fraction(0),
            nx, d, avoid)
    return {"ok": ok}


def _gen_prop21(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    for i in range(cfg.count):
        a, b = _rand_set_pair(rng, cfg, max_total=8)
        m, n = a.size, b.size
        d = rng.randint(0, m)
        nx = rng.randint(1, 2)
        bound = max(nx + d, m + n - d, m)
        esize = bound + i % 3
        e_vals = _sample_distinct(rng, esize, cfg.coeff_bound + 4,
                                  avoid=a.distinct_values()
                                  + b.distinct_values())
        e = RootMultiset.from_values(e_vals)
        yield {"a": a.to_shorthand(), "b": b.to_shorthand(),
               "e": e.to_shorthand(), "d": d, "nx": nx}


def _check_prop21(inst: dict) -> dict:
    a = parse_multiset(inst["a"])
    b = parse_multiset(inst["b"])
    e = parse_multiset(inst["e"])
    d, nx = inst["d"], inst["nx"]
    avoid = (a.distinct_values() + b.distinct_values()
             + e.distinct_values())
    ok = grid_check_identity(
        lambda *xs: single_sum_eval(a, b, d, xs),
        lambda *xs: apery_jouanolou_rhs(a, b, d, e, xs),
        nx, d, avoid)
    return {"ok": ok}


def _symmetric_pool(d: int, nvars: int):
    """Named symmetric test functions with per-variable degree <= d."""
    pool = [("const", lambda xs: Fraction(7, 3))]
    if d >= 1:
        pool.append(("e1", lambda xs: sum(xs, Fraction(0))))
        if nvars >= 2:
            pool.append(("e2", lambda xs: sum(
                (xi * xj for i, xi in enumerate(xs) for xj in xs[i + 1:]),
                Fraction(0))))
    for k in range(2, d + 1):
        pool.append((f"p{k}",
                     lambda xs, k=k: sum((x ** k for x in xs), Fraction(0))))
    return pool


def _gen_prop23(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        esize = rng.randint(2, min(cfg.max_deg + 1, 6))
        d = rng.randint(0, esize - 1)
        e_vals = _sample_distinct(rng, esize, cfg.coeff_bound)
        e = RootMultiset.from_values(e_vals)
        xs = [_rand_rational(rng, cfg.coeff_bound)
              for _ in range(esize - d)]
        yield {"e": e.to_shorthand(), "d": d,
               "xs": [format_rational(v) for v in xs]}


def _check_prop23(inst: dict) -> dict:
    e = parse_multiset(inst["e"])
    d = inst["d"]
    xs = tuple(qof(v) for v in inst["xs"])
    for name, h in _symmetric_pool(d, len(xs)):
        got = sym_interp_eval(e, d, h, xs)
        want = h(xs)
        if got != want:
            return {"ok": False, "h": name,
                    "got": format_rational(got),
                    "want": format_rational(want)}
    return {"ok": True}


def _gen_lemma34(cfg: FuzzConfig):
    rmax = min(cfg.max_deg, 6)
    for r in range(1, rmax + 1):
        yield {"r": r}


def _check_lemma34(inst: dict) -> dict:
    r = inst["r"]
    checked = 0
    for part in enum_partitions3(r):
        b1 = part.blocks[0]
        for s in range(0, r + 1):
            if b1 and b1[0] - s < 1:
                continue
            checked += 1
            if not check_sign_lemma(r, s, part):
                return {"ok": False, "s": s,
                        "blocks": [list(b) for b in part.blocks]}
    return {"ok": True, "checked": checked}


def _gen_schur_consistency(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        r = rng.randint(1, 5)
        k = rng.randint(r, r + 3)
        removed = tuple(sorted(rng.sample(range(1, k + 1), k - r)))
        points = RootMultiset.from_values(
            _sample_distinct(rng, r, cfg.coeff_bound))
        yield {"k": k, "removed": list(removed),
               "points": points.to_shorthand()}


def _check_schur_consistency(inst: dict) -> dict:
    points = parse_multiset(inst["points"])
    ok = schur_consistency_check(inst["k"], tuple(inst["removed"]), points)
    return {"ok": ok}


_EXAMPLE_TRIPLES = [("0", "1", "2"), ("-1", "1/2", "3"), ("2", "-3", "5/2")]


def _gen_examples(cfg: FuzzConfig):
    for a1, a2, b1 in _EXAMPLE_TRIPLES:
        yield {"alpha1": a1, "alpha2": a2, "beta1": b1}


def _check_examples(inst: dict) -> dict:
    a1, a2, b1 = (qof(inst[k]) for k in ("alpha1", "alpha2", "beta1"))
    a = RootMultiset([(a1, 1), (a2, 2)])
    f = Poly.from_roots(a.values())
    # large-d case: g = (x - b1)^2, d = 2 -> SylM equals g exactly
    b_small = RootMultiset([(b1, 2)])
    g_small = Poly.from_roots(b_small.values())
    if sylm(a, b_small, 2).scale(_sres_sign(2, 3)) != g_small:
        return {"ok": False, "case": "d in range"}
    if sres_det(f, g_small, 2) != g_small:
        return {"ok": False, "case": "sres oracle, d in range"}
    # general case: g = (x - b1)^3, d = 2 -> SylM equals g - f
    b_big = RootMultiset([(b1, 3)])
    g_big = Poly.from_roots(b_big.values())
    if sylm(a, b_big, 2).scale(_sres_sign(2, 3)) != g_big - f:
        return {"ok": False, "case": "d below excess bound"}
    # negative case: the collapsed formula forced below its range is a
    # multiple of (x - b1) and differs from the true subresultant
    forced = sylm(a, b_big, 2, force_collapsed=True)
    quotient_exists = True
    try:
        forced.exact_div(Poly.from_roots([b1]))
    except Exception:
        quotient_exists = False
    if not quotient_exists:
        return {"ok": False, "case": "forced value not divisible by (x-b1)"}
    if forced.scale(_sres_sign(2, 3)) == g_big - f:
        return {"ok": False, "case": "forced value unexpectedly correct"}
    return {"ok": True}


_SUITES = {
    "thm14": (_gen_thm14, _check_thm14),
    "thm12": (_gen_thm12, _check_thm12),
    "eq1": (_gen_sets, _check_eq1),
    "eq2": (_gen_sets, _check_eq2),
    "eq3": (_gen_sets, _check_eq3),
    "lemma24": (_gen_lemma24, _check_lemma24),
    "prop21": (_gen_prop21, _check_prop21),
    "prop23": (_gen_prop23, _check_prop23),
    "lemma34": (_gen_lemma34, _check_lemma34),
    "schur-consistency": (_gen_schur_consistency, _check_schur_consistency),
    "examples": (_gen_examples, _check_examples),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, cfg: FuzzConfig) -> SuiteReport:
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; "
                           f"known: {', '.join(SUITE_NAMES)}")
    gen, check = _SUITES[name]
    report = SuiteReport(suite=name)
    start = time.perf_counter()
    regimes: set = set()
    for seq, inst in enumerate(gen(cfg)):
        report.instances += 1
        result = check(inst)
        regimes.update(result.get("regimes", ()))
        if not result.get("ok", False):
            entry = {"seq": seq, "suite": name, "instance": inst}
            entry.update({k: v for k, v in result.items() if k != "ok"})
            report.failures.append(entry)
    if name == "thm14" and report.instances >= 8:
        missing = {"collapsed", "general"} - regimes
        if missing:
            report.failures.append({
                "seq": -1, "suite": name, "instance": None,
                "why": f"regime(s) never exercised: {sorted(missing)}"})
        else:
            report.notes.append("both collapsed and general regimes covered")
    report.wall_time = time.perf_counter() - start
    return report


def replay(name: str, inst: dict) -> dict:
    """Re-run a single recorded instance for the given suite."""
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}")
    _, check = _SUITES[name]
    return check(inst)
