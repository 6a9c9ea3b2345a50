"""Closed-form and recursive bounds on the nilpotency degree C(n, d, p).

Every bound carries its applicability condition on the characteristic, the
direction, an exact integer value when one exists, and a log10 value that is
always present (the comparator bounds grow like n^(n^3) and are only ever
needed in log space).
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .formal import check_characteristic

UPPER = "upper"
LOWER = "lower"

# coefficients a_n of the linear-in-d bound for 4 <= n <= 9, n/2 < p <= n
LINEAR_COEFF = {4: 8, 5: 12, 6: 24, 7: 30, 8: 50, 9: 64}

_EXACT_DIGIT_LIMIT = 40  # only materialize integers below ~1e40


@dataclass
class BoundResult:
    formula_id: str
    direction: str
    value_exact: int | None
    value_log10: float
    applicability: str
    citation: str
    conditional: bool = False

    def sort_log10(self):
        if self.value_exact is not None and self.value_exact > 0:
            return math.log10(self.value_exact)
        return self.value_log10

    def to_json(self):
        return {
            "formula_id": self.formula_id,
            "direction": self.direction,
            "value_exact": self.value_exact,
            "value_log10": self.value_log10,
            "applicability": self.applicability,
            "citation": self.citation,
            "conditional": self.conditional,
        }


@dataclass
class BoundSummary:
    n: int
    d: int
    p: int
    all: list
    best_upper: BoundResult
    best_lower: BoundResult
    assume_conjecture_n2: bool = False

    def to_json(self):
        return {
            "n": self.n,
            "d": self.d,
            "p": self.p,
            "best_upper": self.best_upper.to_json(),
            "best_lower": self.best_lower.to_json(),
            "assume_conjecture_n2": self.assume_conjecture_n2,
            "all": [b.to_json() for b in self.all],
        }


def _validate(n, d, p):
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    check_characteristic(p)


def _strict_int_bound(value):
    """Integer upper bound from a strict inequality C < value (a Fraction)."""
    if value.denominator == 1:
        return value.numerator - 1
    return value.numerator // value.denominator


def exact_known(n, d, p):
    """The exact nilpotency degree where it is known, else None."""
    _validate(n, d, p)
    if n == 1:
        return 1
    if d == 1:
        return n
    if n == 2:
        return d + 1 if p == 2 else 3
    if n == 3:
        if p == 0 or p > 3:
            return 6
        if p == 2:
            return 6 if d == 2 else d + 3
        return 3 * d + 1  # p == 3
    if n == 4 and p == 0:
        return 10
    return None


def _best_upper_value(n, d, p):
    """Best available integer upper bound on C(n, d, p), for use inside the
    recursion.  The recursion's right-hand side is monotone in these values,
    so any valid upper bound may stand in for the true degree."""
    v = exact_known(n, d, p)
    candidates = [] if v is None else [v]
    if p == 0 or 2 * p > n:
        candidates.append(recursive_bound(n, d, p))
    for b in closed_form_bounds(n, d, p):
        if b.value_exact is not None:
            candidates.append(b.value_exact)
    return min(candidates)


@lru_cache(maxsize=None)
def recursive_bound(n, d, p):
    """The recursive upper bound d * sum_{i=2..n} (i-1) C(floor(n/i), d) + 1.

    Valid for p = 0 or p > n/2.  Inner degrees are replaced by their best
    available upper bounds, which is sound by monotonicity of the sum.
    """
    _validate(n, d, p)
    if p != 0 and 2 * p <= n:
        raise ValueError("recursive bound needs p = 0 or p > n/2, got p=%d" % p)
    if n == 1:
        return 1
    total = 0
    for i in range(2, n + 1):
        total += (i - 1) * _best_upper_value(n // i, d, p)
    return d * total + 1


def closed_form_bounds(n, d, p, assume_conjecture_n2=False):
    """All applicable closed-form upper bounds at (n, d, p)."""
    _validate(n, d, p)
    if n < 2 or d < 2:
        return []
    out = []
    log_n = math.log10(n)
    log_d = math.log10(d)

    def emit(formula_id, exact_value, log10_value, cond, citation, conditional=False):
        out.append(
            BoundResult(formula_id, UPPER, exact_value, log10_value, cond, citation,
                        conditional)
        )

    if p == 0 or p > n:
        emit(
            "nagata_higman",
            2**n - 1,
            n * math.log10(2),
            "p = 0 or p > n",
            "Nagata-Higman theorem (Dubnov-Ivanov 1943)",
        )
    if p == 0:
        emit("razmyslov", n * n, 2 * log_n, "p = 0", "Razmyslov 1974")
    if p > n and n >= 3:
        emit(
            "doubling_sharpened",
            7 * 2 ** (n - 3) - 1,
            math.log10(7) + (n - 3) * math.log10(2),
            "p > n, n >= 3",
            "doubling recursion C(n) <= 2 C(n-1) + 1 seeded with C(3) = 6",
        )

    # polynomial-in-n bound: C < n^(log2(3d+2)+1)
    exponent = math.log2(3 * d + 2) + 1
    poly_log10 = exponent * log_n
    poly_exact = None
    if (3 * d + 2) & (3 * d + 1) == 0:  # 3d+2 a power of two
        m = (3 * d + 2).bit_length()  # log2(3d+2) + 1
        if m * log_n < _EXACT_DIGIT_LIMIT:
            poly_exact = _strict_int_bound(Fraction(n**m))
    if 2 * p > n and p > 0:
        emit("poly_in_n", poly_exact, poly_log10, "p > n/2",
             "polynomial growth in n for fixed d")
    elif p == 0:
        emit(
            "poly_in_n_char0_extension",
            poly_exact,
            poly_log10,
            "p = 0 (stated for p > n/2; the derivation also covers p = 0)",
            "polynomial growth in n for fixed d, characteristic-0 extension",
        )

    # half-exponential bound: C < 4 * 2^(n/2) * d  (factor 2 once n >= 30)
    if 2 * p > n and p > 0:
        factor = 2 if n >= 30 else 4
        log10_val = math.log10(factor) + n / 2 * math.log10(2) + log_d
        exact = None
        if n % 2 == 0 and (1 + n / 2 * math.log10(2) + log_d) < _EXACT_DIGIT_LIMIT:
            exact = _strict_int_bound(Fraction(factor * 2 ** (n // 2) * d))
        emit("exp_half", exact, log10_val, "p > n/2",
             "half-exponential bound, linear in d")

    if n in LINEAR_COEFF and 2 * p > n and p <= n:
        a = LINEAR_COEFF[n]
        emit(
            "small_n_linear",
            a * d + 1,
            math.log10(a * d + 1),
            "4 <= n <= 9, n/2 < p <= n",
            "linear-in-d table for small n",
        )

    # comparator bounds, any characteristic
    log10_klein1 = 6 * log_n + n * log_d - math.log10(6)
    exact = None
    if log10_klein1 < _EXACT_DIGIT_LIMIT:
        exact = _strict_int_bound(Fraction(n**6 * d**n, 6))
    emit("klein_small", exact, log10_klein1, "any p", "Klein 2000")

    m = n // 2
    if m >= 1:
        log10_klein2 = (
            n**3 * log_n + m * log_d - math.lgamma(m) / math.log(10)
        )
        exact = None
        if log10_klein2 < _EXACT_DIGIT_LIMIT:
            exact = _strict_int_bound(Fraction(n ** (n**3) * d**m, math.factorial(m - 1)))
        emit("klein_large", exact, log10_klein2, "any p", "Klein 2000")

    log3 = math.log(3)
    bk1 = (math.log(64) / log3 + 5) * math.log10(4) + 12 * (
        math.log(4 * n) / log3 + 1
    ) * log_n + log_d
    emit("belov_kharitonov_1", None, bk1, "any p", "Belov-Kharitonov 2012, Cor. 1.16")
    bk2 = math.log10(256) + (8 * math.log2(n) + 22) * log_n + log_d
    emit("belov_kharitonov_2", None, bk2, "any p", "Belov-Kharitonov 2012, Thm. 1.17")

    if n == 4:
        if p == 3:
            emit("n4_interval_upper", 3 * d + 4, math.log10(3 * d + 4),
                 "n = 4, p = 3", "canonical-form analysis for n = 4")
        elif p > 3:
            emit("n4_interval_upper", 13, math.log10(13),
                 "n = 4, p > 3", "canonical-form analysis for n = 4")

    if assume_conjecture_n2:
        if 2 * p > n and p <= n:
            val = n * n * math.log(n) * d
            emit(
                "modulo_conjecture_n2",
                None,
                math.log10(val),
                "n/2 < p <= n, conditional on C <= n^2 for p > n",
                "harmonic-sum refinement, conditional",
                conditional=True,
            )
        if p > n:
            emit(
                "conjecture_n2",
                n * n,
                2 * log_n,
                "p > n, conjectural",
                "conjectured extension of the characteristic-0 n^2 bound",
                conditional=True,
            )
    return out


def lower_bounds(n, d, p):
    """All applicable lower bounds at (n, d, p)."""
    _validate(n, d, p)
    out = []

    def emit(formula_id, value, cond, citation):
        out.append(
            BoundResult(formula_id, LOWER, value, math.log10(value), cond, citation)
        )

    if p == 0 or p > n:
        emit("kuzmin", n * (n + 1) // 2, "p = 0 or p > n", "Kuzmin 1975")
    if 0 < p <= n:
        emit("generator_count", d, "0 < p <= n", "DKZ 2002")
    emit("single_letter", n, "any p", "C(n,1) = n and monotonicity in d")
    for n_prev in range(n - 1, 1, -1):
        v = exact_known(n_prev, d, p)
        if v is not None:
            emit(
                "monotone_from_n%d" % n_prev,
                v,
                "any p (monotonicity in n)",
                "exact value at n = %d" % n_prev,
            )
            break
    if n == 4:
        if p == 2:
            emit("n4_interval_lower", 3 * d + 1, "n = 4, p = 2",
                 "x1^3...xd^3 survives at p = 2")
        elif p == 3:
            emit("n4_interval_lower", 3 * d + 1, "n = 4, p = 3",
                 "monotonicity from n = 3 at p = 3")
        elif d >= 2:
            emit("n4_interval_lower", 10, "n = 4, p = 0 or p > 3",
                 "Kuzmin value holds at n = 4 (Vaughan-Lee 1993)")
    return out


def best_bounds(n, d, p, assume_conjecture_n2=False):
    """Best applicable upper and lower bounds, with the full list attached."""
    _validate(n, d, p)
    entries = []
    exact = exact_known(n, d, p)
    if exact is not None:
        entries.append(
            BoundResult("exact", UPPER, exact, math.log10(exact),
                        "exact value known", "known-values table")
        )
        entries.append(
            BoundResult("exact", LOWER, exact, math.log10(exact),
                        "exact value known", "known-values table")
        )
    entries.extend(closed_form_bounds(n, d, p, assume_conjecture_n2))
    if n >= 2 and (p == 0 or 2 * p > n):
        v = recursive_bound(n, d, p)
        entries.append(
            BoundResult("recursive", UPPER, v, math.log10(v),
                        "p = 0 or p > n/2", "recursive degree bound")
        )
    entries.extend(lower_bounds(n, d, p))
    # conditional (conjecture-dependent) entries are listed but never chosen
    uppers = [b for b in entries if b.direction == UPPER and not b.conditional]
    lowers = [b for b in entries if b.direction == LOWER and not b.conditional]
    if not uppers or not lowers:
        raise ValueError("no applicable bounds at (n=%d, d=%d, p=%d)" % (n, d, p))
    best_upper = min(uppers, key=lambda b: (b.sort_log10(), b.value_exact is None))
    best_lower = max(lowers, key=lambda b: (b.sort_log10(), b.value_exact is not None))
    return BoundSummary(n, d, p, entries, best_upper, best_lower,
                        assume_conjecture_n2)


def comparator_ratio_log10(n, d=2):
    """log10 of (best Belov-Kharitonov bound) / (half-exponential bound).

    Both sides are linear in d, so the ratio does not depend on d.
    """
    log3 = math.log(3)
    log_n = math.log10(n)
    bk1 = (math.log(64) / log3 + 5) * math.log10(4) + 12 * (
        math.log(4 * n) / log3 + 1
    ) * log_n + math.log10(d)
    bk2 = math.log10(256) + (8 * math.log2(n) + 22) * log_n + math.log10(d)
    factor = 2 if n >= 30 else 4
    ours = math.log10(factor) + n / 2 * math.log10(2) + math.log10(d)
    return min(bk1, bk2) - ours


def comparator_table(n_start=4, n_stop=2000, d=2):
    """Rows (n, log10 ratio) for the comparator sweep, plus the minimum."""
    rows = [(n, comparator_ratio_log10(n, d)) for n in range(n_start, n_stop + 1)]
    return {"rows": rows, "min_log10_ratio": min(r for _, r in rows)}
