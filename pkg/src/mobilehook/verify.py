"""Property suite comparing every formula with the brute-force oracle."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from . import corpus, formulas as F, poset as O
from .excited import enumerate_diagrams, lattice_path_count
from .mobile import MobilePoset, hanging_poset, shape_poset
from .qseries import mul, q_binomial, series_inverse_pochhammer
from .shapes import SkewShape, zigzag_strip

ORACLE_CAP = 16


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"check": self.name, "cases": self.cases, "failures": len(self.failures),
                "examples": self.failures[:5]}


@dataclass
class SuiteReport:
    corpus: str
    seed: int
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"corpus": self.corpus, "seed": self.seed, "ok": self.ok,
                "checks": [c.to_json() for c in self.checks]}


def _tally(results: dict[str, CheckResult], name: str, ok: bool, where: str) -> None:
    r = results.setdefault(name, CheckResult(name))
    r.cases += 1
    if not ok:
        r.failures.append(where)


# -- per-mobile checks (run in workers) --------------------------------------

def check_mobile(data: dict) -> list[tuple[str, bool]]:
    """All mobile-level identities for one instance, as (check, passed) pairs."""
    m = MobilePoset.from_json(data)
    P = m.to_poset()
    count, maj_poly, inv_poly = O.eq_both(P, ORACLE_CAP)
    out = []
    H = F.mobile_maj_H(m)
    out.append(("mobile_maj_formula", H == maj_poly))
    out.append(("count", F.mobile_count_rational(m) == count == sum(H.coeffs)))
    lo, hi = F.bounds(m)
    out.append(("bounds", lo <= count <= hi))
    out.append(("maj_recurrence", F.verify_maj_recurrence(m, ORACLE_CAP).match))
    out.append(("chevalley_maj", F.verify_chevalley(m, "maj").match))
    diagrams = enumerate_diagrams(m.strip)
    out.append(("p_hat_invariant", len({F.p_hat(m, D) for D in diagrams}) == 1))
    if m.is_tree_mobile():
        out.append(("mobile_inv_formula", F.mobile_inv_H(m) == inv_poly))
        out.append(("inv_recurrence", F.verify_inv_recurrence(m, ORACLE_CAP).match))
        out.append(("chevalley_inv", F.verify_chevalley(m, "inv").match))
    if not m.hangings:
        out.append(("inv_equals_maj", inv_poly == maj_poly == F.mobile_inv_H(m)))
        out.append(("excited_lattice_paths", len(diagrams) == lattice_path_count(m.lam)))
    return out


def _run_mobiles(mobiles: list[MobilePoset], workers: int, results: dict[str, CheckResult]) -> None:
    payload = [m.to_json() for m in mobiles]
    if workers > 1 and len(payload) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(check_mobile, payload, chunksize=8))
    else:
        outcomes = [check_mobile(d) for d in payload]
    for data, pairs in zip(payload, outcomes):
        for name, ok in pairs:
            _tally(results, name, ok, str(data))


# -- poset-level checks ------------------------------------------------------

def check_ppartitions(P: O.LabeledPoset, N: int = 12) -> list[tuple[str, bool]]:
    inv_pochhammer = series_inverse_pochhammer(P.n, N)
    out = [("G(P)", O.ppartition_series(P, N) == mul(O.eq_stat(P, "maj"), inv_pochhammer).truncate(N))]
    ok = True
    for s in range(P.n):
        lhs = O.ppartition_series_restricted(P, s, N)
        rhs = mul(O.eq_stat_ending_at(P, s, "maj"), inv_pochhammer).truncate(N)
        ok &= lhs == rhs
    out.append(("G(P;s)", ok))
    return out


def check_disjoint(rng: random.Random, trials: int = 40, max_n: int = 4) -> dict[str, CheckResult]:
    """Disjoint-union identities on random pairs, plus the inv witness."""
    res: dict[str, CheckResult] = {}
    witness_found = False
    for _ in range(trials):
        P = corpus.random_poset(rng, rng.randint(1, max_n))
        Q = corpus.random_poset(rng, rng.randint(1, max_n))
        n, p = P.n + Q.n, P.n
        binom = q_binomial(n, p)
        # arbitrary interleaving of the two label sets
        pool = list(range(1, n + 1))
        rng.shuffle(pool)
        pl, ql = sorted(pool[:p]), sorted(pool[p:])
        labels = [pl[x - 1] for x in P.labels] + [ql[x - 1] for x in Q.labels]
        PQ = O.disjoint_union(P, Q, labels)
        rhs = mul(binom, mul(O.eq_stat(P, "maj"), O.eq_stat(Q, "maj")))
        _tally(res, "disjoint_maj", O.eq_stat(PQ, "maj") == rhs, f"{P.to_json()} + {Q.to_json()}")

        stacked = O.disjoint_union(P, Q)
        rhs_inv = mul(binom, mul(O.eq_stat(P, "inv"), O.eq_stat(Q, "inv")))
        _tally(res, "disjoint_inv", O.eq_stat(stacked, "inv") == rhs_inv, f"{P.to_json()} + {Q.to_json()}")
        if O.eq_stat(PQ, "inv") != rhs_inv:
            witness_found = True

        # restricted version: s in P with label above every label of Q
        for s in range(P.n):
            if all(labels[s] > labels[p + t] for t in range(Q.n)):
                lhs = O.eq_stat_ending_at(PQ, s, "maj")
                rhs_s = mul(q_binomial(n - 1, p - 1), mul(O.eq_stat_ending_at(P, s, "maj"), O.eq_stat(Q, "maj")))
                _tally(res, "disjoint_maj_ending", lhs == rhs_s, f"{P.to_json()} + {Q.to_json()} s={s}")
    # a fixed witness: two singletons labelled so Q sits below P
    a = O.antichain(1)
    PQ = O.disjoint_union(a, a, [2, 1])
    fixed = O.eq_stat(PQ, "inv") != mul(q_binomial(2, 1), mul(O.eq_stat(a, "inv"), O.eq_stat(a, "inv")))
    _tally(res, "disjoint_inv_witness", fixed or witness_found, "no witness")
    return res


def check_classical(results: dict[str, CheckResult], max_size: int = 8, box: int = 4,
                    seed: int = corpus.DEFAULT_SEED) -> None:
    for lam in corpus.partitions_up_to(max_size):
        P = shape_poset(SkewShape.of(lam.parts))
        count, maj_poly, _ = O.eq_both(P)
        _tally(results, "hlf", F.hlf_count(lam) == count, str(lam))
        _tally(results, "stanley", F.stanley_q_hlf(lam) == maj_poly, str(lam))
    for s in corpus.skew_shapes(box, 7):
        count, maj_poly, _ = O.eq_both(shape_poset(s))
        _tally(results, "nhlf", F.nhlf_count(s) == count, str(s))
        _tally(results, "mpp", F.mpp_q_nhlf(s) == maj_poly, str(s))
    rng = random.Random(seed)
    for h in corpus.small_hangings(max_size):
        P = hanging_poset(h)
        _tally(results, "peterson_proctor", F.dcomplete_maj(h) == O.eq_stat(P, "maj"), str(h.to_json()))
        if h.kind != "tree":
            continue
        _tally(results, "bjorner_wachs", F.bw_tree_inv(h) == O.eq_stat(P, "inv"), str(h.to_json()))
        for _ in range(2):
            labels = list(range(1, P.n + 1))
            rng.shuffle(labels)
            _tally(results, "peterson_proctor_labeled",
                   F.dcomplete_maj(h, labels) == O.eq_stat(P.with_labels(labels), "maj"),
                   f"{h.to_json()} {labels}")


def check_foata(results: dict[str, CheckResult], max_n: int = 6) -> None:
    for n in range(max_n + 1):
        images = set()
        for sigma in permutations(range(1, n + 1)):
            phi = O.foata(sigma)
            images.add(phi)
            ok = (O.maj(sigma) == O.inv(phi)
                  and O.descents(O.inverse(sigma)) == O.descents(O.inverse(phi)))
            _tally(results, "foata", ok, str(sigma))
        _tally(results, "foata_bijective", len(images) == factorial(n), f"n={n}")


def check_excited_fixtures(results: dict[str, CheckResult]) -> None:
    for k in range(1, 7):
        _tally(results, "zigzag_catalan", len(enumerate_diagrams(zigzag_strip(k))) == F.catalan(k), f"k={k}")


def check_zigzag_closed_forms(results: dict[str, CheckResult]) -> list[dict]:
    """Compare printed zigzag bounds with computed bounds and oracle counts."""
    rows = []
    for kind in ("C", "A"):
        for p in range(3):
            for k in range(1, 4):
                m = F.euler_family(kind, p, k)
                e = O.count_extensions(m.to_poset(), ORACLE_CAP)
                lo, hi = F.bounds(m)
                clo, chi = F.zigzag_closed_form(kind, p, k)
                row = {"kind": kind, "p": p, "k": k, "e": e, "lower": str(lo), "upper": str(hi),
                       "printed_lower": str(clo), "printed_upper": str(chi),
                       "printed_matches": lo == clo and hi == chi, "sandwich": lo <= e <= hi}
                rows.append(row)
                _tally(results, "zigzag_sandwich", row["sandwich"], str(row))
    return rows


# -- driver ------------------------------------------------------------------

CORPORA = {
    # name: (mixed mobiles, tree mobiles, largest poset size for P-partitions)
    "small": (240, 200, 7),
    "tiny": (30, 30, 5),
    "full": (None, None, 7),
}


def default_workers() -> int:
    return os.cpu_count() or 1


def run_suite(name: str = "small", seed: int = corpus.DEFAULT_SEED, workers: int | None = None,
              include_classical: bool = True) -> SuiteReport:
    if name not in CORPORA:
        raise ValueError(f"unknown corpus {name!r}; choose from {sorted(CORPORA)}")
    workers = default_workers() if workers is None else workers
    n_mixed, n_trees, max_poset = CORPORA[name]
    results: dict[str, CheckResult] = {}

    mixed = corpus.all_mobiles() if n_mixed is None else corpus.mobile_corpus(n_mixed, seed)
    trees = [] if n_trees is None else corpus.mobile_corpus(n_trees, seed + 1, trees_only=True)
    strips = [MobilePoset(s, ()) for s in corpus.bare_strips()]
    unique = list({str(m.to_json()): m for m in mixed + trees + strips}.values())
    _run_mobiles(unique, workers, results)

    for P in corpus.small_posets(max_poset, seed):
        for check, ok in check_ppartitions(P):
            _tally(results, check, ok, str(P.to_json()))
    for check, r in check_disjoint(random.Random(seed)).items():
        results[check] = r
    check_foata(results)
    check_excited_fixtures(results)
    check_zigzag_closed_forms(results)
    if include_classical:
        check_classical(results, seed=seed)
    return SuiteReport(name, seed, sorted(results.values(), key=lambda c: c.name))
