"""Hook-length formulas for linear extensions and their q-analogues.

All q-formulas are evaluated by clearing to a common denominator built from
``1 - q^h`` factors and finishing with one exact polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Optional, Sequence

from . import poset as oracle
from .excited import ExcitedDiagram, enumerate_diagrams, p_D, w_stat
from .mobile import HangingPoset, MobilePoset, hanging_poset
from .qseries import (ONE, IntPoly, exact_div, mul, one_minus_q_pow, pochhammer, product,
                      q_factorial, q_int)
from .shapes import Partition, SkewShape, content, zigzag_strip


@dataclass
class FormulaReport:
    formula: str
    input: str
    computed: object
    oracle: object = None
    match: Optional[bool] = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.match is None and self.oracle is not None:
            self.match = self.computed == self.oracle

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, IntPoly):
                return v.to_json()
            if isinstance(v, (int, Fraction)):
                return str(v)
            return v
        return {"formula": self.formula, "input": self.input, "computed": enc(self.computed),
                "oracle": enc(self.oracle), "match": self.match, "details": self.details}


# -- classical formulas ------------------------------------------------------

def hlf_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam."""
    hooks = prod(lam.hooks().values())
    q, r = divmod(factorial(lam.size), hooks)
    if r:
        raise ArithmeticError(f"hook product does not divide n! for {lam}")
    return q


def nhlf_count(s: SkewShape) -> int:
    """Number of standard Young tableaux of shape lambda/mu, summed over excited diagrams."""
    hooks = s.outer.hooks()
    total = Fraction(0)
    for D in enumerate_diagrams(s):
        total += Fraction(1, prod(hooks[u] for u in D.complement()))
    total *= factorial(s.size)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral count for {s}: {total}")
    return total.numerator


def stanley_q_hlf(lam: Partition) -> IntPoly:
    """maj generating function of the shape poset: q^b(lam) (q;q)_n / prod(1 - q^h)."""
    num = pochhammer(lam.size).shift(lam.b())
    return exact_div(num, product(one_minus_q_pow(h) for h in lam.hooks().values()))


def _diagram_sum(outer: Partition, diagrams: Sequence[ExcitedDiagram], hook_of, exponent_of) -> IntPoly:
    """sum_D q^e(D) prod_{u in D} (1 - q^h(u)); the numerator over prod_{u in lam} (1 - q^h(u))."""
    total = IntPoly()
    for D in diagrams:
        term = product(one_minus_q_pow(hook_of[u]) for u in D.cells)
        total = total + term.shift(exponent_of(D))
    return total


def mpp_q_nhlf(s: SkewShape) -> IntPoly:
    """maj generating function of a skew shape with reversed Schur labeling."""
    hooks = s.outer.hooks()
    diagrams = enumerate_diagrams(s)
    num = _diagram_sum(s.outer, diagrams, hooks, lambda D: w_stat(D, hooks.__getitem__))
    den = product(one_minus_q_pow(h) for h in hooks.values())
    return exact_div(mul(pochhammer(s.size), num), den)


def _hanging_descent_sum(h: HangingPoset, labels: Sequence[int]) -> tuple[int, int]:
    """(sum of hooks at descents, number of inverted comparable pairs) under labels."""
    P = hanging_poset(h, labels)
    hooks = h.hooks()
    maj_stat = sum(hooks[P.names[a]] for a, b in P.covers if P.labels[a] > P.labels[b])
    below = P.strictly_below()
    inv_stat = sum(1 for y in range(P.n) for x in range(P.n)
                   if below[y] >> x & 1 and P.labels[x] > P.labels[y])
    return maj_stat, inv_stat


def _hook_quotient(h: HangingPoset) -> IntPoly:
    return exact_div(q_factorial(h.size), product(q_int(x) for x in h.hooks().values()))


def dcomplete_maj(h: HangingPoset, labels: Sequence[int] | None = None) -> IntPoly:
    """q^maj(P, omega) [n]_q! / prod [h(x)]_q for a tree or straight shape.

    ``labels`` follow the element order of :func:`mobilehook.mobile.hanging_poset`;
    default is the natural labeling.  For shapes only natural labelings are accepted.
    """
    shift = 0
    if labels is not None:
        P = hanging_poset(h, labels)
        if not P.is_natural():
            if h.kind != "tree":
                raise ValueError("non-natural labelings are supported for trees only")
            shift = _hanging_descent_sum(h, labels)[0]
    return _hook_quotient(h).shift(shift)


def is_recursive_labeling(h: HangingPoset, labels: Sequence[int]) -> bool:
    """True when every subtree's labels form an interval of consecutive integers."""
    P = hanging_poset(h, labels)
    below = P.strictly_below()
    for x in range(P.n):
        sub = [P.labels[y] for y in range(P.n) if below[x] >> y & 1] + [P.labels[x]]
        if max(sub) - min(sub) + 1 != len(sub):
            return False
    return True


def bw_tree_inv(h: HangingPoset, labels: Sequence[int] | None = None) -> IntPoly:
    """[n]_q! / prod [h(x)]_q, the inv generating function of a rooted tree.

    Needs a natural labeling in which every subtree gets consecutive labels;
    the default (postorder) labeling qualifies.
    """
    if h.kind != "tree":
        raise ValueError("bw_tree_inv needs a rooted tree")
    if labels is not None:
        if not hanging_poset(h, labels).is_natural():
            raise ValueError("bw_tree_inv needs a natural labeling")
        if not is_recursive_labeling(h, labels):
            raise ValueError("bw_tree_inv needs subtrees to carry consecutive labels")
    return _hook_quotient(h)


# -- mobile posets -----------------------------------------------------------

def _mobile_pieces(m: MobilePoset):
    hooks = m.lam.hooks()
    mhooks = m.modified_hooks()
    diagrams = enumerate_diagrams(m.strip)
    hanging_den = product(one_minus_q_pow(x) for x in m.hangings_hook_multiset().elements())
    den = mul(hanging_den, product(one_minus_q_pow(h) for h in mhooks.values()))
    return hooks, mhooks, diagrams, den


def mobile_maj_numden(m: MobilePoset) -> tuple[IntPoly, IntPoly]:
    """H_{lambda/mu}(q) as numerator and denominator polynomials."""
    _, mhooks, diagrams, den = _mobile_pieces(m)
    num = _diagram_sum(m.lam, diagrams, mhooks, lambda D: w_stat(D, mhooks.__getitem__))
    return num, den


def mobile_inv_numden(m: MobilePoset) -> tuple[IntPoly, IntPoly]:
    """The inversion-statistic sum, with w(D) on plain hooks and p_D added."""
    if not m.is_tree_mobile():
        raise ValueError("the inversion formula needs rooted-tree hangings")
    hooks, mhooks, diagrams, den = _mobile_pieces(m)
    cols = m.column_sizes()
    num = _diagram_sum(m.lam, diagrams, mhooks,
                       lambda D: w_stat(D, hooks.__getitem__) + p_D(m.strip, D, cols))
    return num, den


def mobile_maj_H(m: MobilePoset) -> IntPoly:
    """e_q^maj of the mobile with reversed Schur / natural labeling."""
    num, den = mobile_maj_numden(m)
    return exact_div(mul(pochhammer(m.n), num), den)


def mobile_inv_H(m: MobilePoset) -> IntPoly:
    """e_q^inv of a mobile tree poset with the omega_inv labeling."""
    num, den = mobile_inv_numden(m)
    return exact_div(mul(pochhammer(m.n), num), den)


def mobile_count_rational(m: MobilePoset) -> int:
    mhooks = m.modified_hooks()
    total = Fraction(0)
    for D in enumerate_diagrams(m.strip):
        total += Fraction(1, prod(mhooks[u] for u in D.complement()))
    total *= Fraction(factorial(m.n), m.H_p())
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral count: {total}")
    return total.numerator


def mobile_count(m: MobilePoset) -> int:
    """Number of linear extensions; the rational sum and q = 1 value must agree."""
    direct = mobile_count_rational(m)
    via_q = sum(mobile_maj_H(m).coeffs)
    if direct != via_q:
        raise ArithmeticError(f"count mismatch: rational {direct} vs q=1 {via_q}")
    return direct


def bounds(m: MobilePoset) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds from the [mu] term and the number of excited diagrams."""
    mhooks = m.modified_hooks()
    base = Fraction(factorial(m.n), m.H_p() * prod(mhooks[u] for u in m.strip.cells()))
    return base, len(enumerate_diagrams(m.strip)) * base


# -- Euler-type families -----------------------------------------------------

def euler_family(kind: str, p: int, k: int) -> MobilePoset:
    """Zigzag strip with k - 1 down steps and, on each minimal cell, a p-chain
    (kind "C") or p one-element posets (kind "A")."""
    if p < 0 or k < 1:
        raise ValueError("need p >= 0 and k >= 1")
    strip = zigzag_strip(k)
    minimal = [(i, k - i + 2) for i in range(1, k + 1)]
    hangings = []
    for c in minimal:
        if p == 0:
            continue
        if kind == "C":
            hangings.append((c, HangingPoset.chain(p)))
        elif kind == "A":
            hangings.extend((c, HangingPoset.chain(1)) for _ in range(p))
        else:
            raise ValueError(f"kind must be 'C' or 'A', got {kind!r}")
    if kind not in ("C", "A"):
        raise ValueError(f"kind must be 'C' or 'A', got {kind!r}")
    return MobilePoset(strip, tuple(hangings))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def zigzag_closed_form(kind: str, p: int, k: int) -> tuple[Fraction, Fraction]:
    """The closed-form bounds for C_p(k) and A_p(k) exactly as printed."""
    n = 2 * k + k * p
    first = factorial(p + 1) ** k if kind == "C" else (p + 1) ** k
    den = first * (2 * p + 3) ** (k - 1) * (p + 2)
    lower = Fraction(factorial(n), den)
    return lower, catalan(k) * lower


# -- recurrences and Pieri-Chevalley identities ------------------------------

def verify_maj_recurrence(m: MobilePoset, cap: int = oracle.DEFAULT_CAP) -> FormulaReport:
    """e^maj(P) = sum over inner corners u of q^|left piece| e^maj(P minus u), both sides by oracle."""
    P = m.reversed_schur_labeling()
    lhs = oracle.eq_stat(P, "maj", cap)
    rhs = IntPoly()
    for u in m.strip.inner_corners():
        left, right, t_nu = m.split_elements(P, u)
        rest = P.restrict(left + right + t_nu)
        rhs = rhs + oracle.eq_stat(rest, "maj", cap).shift(len(left))
    return FormulaReport("maj_recurrence", str(m.to_json()), rhs, lhs)


def verify_inv_recurrence(m: MobilePoset, cap: int = oracle.DEFAULT_CAP) -> FormulaReport:
    """e^inv(P) = sum over inner corners u of q^(n - omega(u)) e^inv(P minus u)."""
    P = m.omega_inv_labeling()
    lhs = oracle.eq_stat(P, "inv", cap)
    rhs = IntPoly()
    exps = {}
    for u in m.strip.inner_corners():
        x = m.strip_element(P, u)
        left, right, t_nu = m.split_elements(P, u)
        rest = P.restrict(left + right + t_nu)
        e = P.n - P.labels[x]
        exps[str(u)] = e
        rhs = rhs + oracle.eq_stat(rest, "inv", cap).shift(e)
    return FormulaReport("inv_recurrence", str(m.to_json()), rhs, lhs, details={"exponents": exps})


def _frac_add(a: tuple[IntPoly, IntPoly], b: tuple[IntPoly, IntPoly]) -> tuple[IntPoly, IntPoly]:
    return mul(a[0], b[1]) + mul(b[0], a[1]), mul(a[1], b[1])


def _piece_numden(piece: MobilePoset | None, stat: str) -> tuple[IntPoly, IntPoly]:
    if piece is None:
        return ONE, ONE
    return mobile_maj_numden(piece) if stat == "maj" else mobile_inv_numden(piece)


def verify_chevalley(m: MobilePoset, stat: str = "maj") -> FormulaReport:
    """(1 - q^n) H = sum_u q^e(u) / prod_{T_nu}(1 - q^h) * H_left * H_right.

    e(u) is the size of the left piece for maj and n - omega_inv(u) for inv.
    Checked as a polynomial identity after cross-multiplying.
    """
    num, den = mobile_maj_numden(m) if stat == "maj" else mobile_inv_numden(m)
    P = m.to_poset()
    acc = (IntPoly(), ONE)
    for u in m.strip.inner_corners():
        left, right, t_nu = m.split_at(u)
        if stat == "maj":
            e = left.n if left is not None else 0
        else:
            e = P.n - P.labels[m.strip_element(P, u)]
        ln, ld = _piece_numden(left, stat)
        rn, rd = _piece_numden(right, stat)
        t_den = product(one_minus_q_pow(x) for h in t_nu for x in h.hooks().values())
        acc = _frac_add(acc, (mul(ln, rn).shift(e), mul(t_den, mul(ld, rd))))
    lhs = mul(mul(one_minus_q_pow(m.n), num), acc[1])
    rhs = mul(acc[0], den)
    return FormulaReport(f"chevalley_{stat}", str(m.to_json()), lhs, rhs)


def p_hat(m: MobilePoset, D: ExcitedDiagram) -> int:
    """sum_{[lambda] minus D} (hangings in columns >= j) - sum_{Br(D)} (hangings weakly SE)."""
    sizes = m.hanging_sizes()
    first = sum(p for (i, j) in D.complement() for (a, b), p in sizes.items() if b >= j)
    second = sum(p for (i, j) in D.broken for (a, b), p in sizes.items() if a >= i and b >= j)
    return first - second


# -- reports -----------------------------------------------------------------

def report_maj(m: MobilePoset, cap: int = oracle.DEFAULT_CAP) -> FormulaReport:
    return FormulaReport("mobile_maj", str(m.to_json()), mobile_maj_H(m),
                         oracle.eq_stat(m.reversed_schur_labeling(), "maj", cap))


def report_inv(m: MobilePoset, cap: int = oracle.DEFAULT_CAP) -> FormulaReport:
    return FormulaReport("mobile_inv", str(m.to_json()), mobile_inv_H(m),
                         oracle.eq_stat(m.omega_inv_labeling(), "inv", cap))
