"""Invariants of tuples of generic matrices under simultaneous conjugation.

Entries of the d generic n x n matrices are independent commuting variables;
polynomials are sparse dicts over Q or F_p.  sigma_t is the coefficient of
lambda^(n-t) in det(X + lambda E), computed as the sum of principal t x t
minors, which is valid in every characteristic.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from . import bounds as B
from . import words as W
from .formal import check_characteristic, coerce_coeff
from .ideal import Echelon


def var_index(n, d, i, j, k):
    """Variable number of the (i, j) entry of the k-th generic matrix."""
    return ((k - 1) * n + i) * n + j


class Poly:
    """Sparse multivariate polynomial; exponent tuples -> field coefficients."""

    __slots__ = ("terms", "nvars", "p")

    def __init__(self, terms, nvars, p, _normalized=False):
        self.nvars = nvars
        self.p = p
        if _normalized:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                c = coerce_coeff(c, p)
                if c:
                    clean[e] = c
            self.terms = clean

    @classmethod
    def zero(cls, nvars, p):
        return cls({}, nvars, p, _normalized=True)

    @classmethod
    def const(cls, c, nvars, p):
        return cls({(0,) * nvars: c}, nvars, p)

    @classmethod
    def variable(cls, idx, nvars, p):
        e = [0] * nvars
        e[idx] = 1
        return cls({tuple(e): 1}, nvars, p)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e, 0) + c
            if self.p:
                acc %= self.p
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        return Poly(terms, self.nvars, self.p, _normalized=True)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = coerce_coeff(c, self.p)
        if not c:
            return Poly.zero(self.nvars, self.p)
        terms = {}
        for e, ce in self.terms.items():
            cc = ce * c
            if self.p:
                cc %= self.p
            if cc:
                terms[e] = cc
        return Poly(terms, self.nvars, self.p, _normalized=True)

    def __mul__(self, other):
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(e, 0) + c1 * c2
                if self.p:
                    acc %= self.p
                if acc:
                    terms[e] = acc
                else:
                    terms.pop(e, None)
        return Poly(terms, self.nvars, self.p, _normalized=True)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def evaluate(self, values):
        """Evaluate at a full vector of scalars."""
        total = 0
        for e, c in self.terms.items():
            prod = c
            for idx, exp in enumerate(e):
                if exp:
                    prod *= values[idx] ** exp
            total = total % self.p if self.p else total
            total += prod
        return total % self.p if self.p else total


def generic_matrix(n, d, p, k):
    nvars = n * n * d
    return [
        [Poly.variable(var_index(n, d, i, j, k), nvars, p) for j in range(n)]
        for i in range(n)
    ]


def mat_mul(a, b, n, nvars, p):
    return [
        [
            sum(
                (a[i][l] * b[l][j] for l in range(n)),
                Poly.zero(nvars, p),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]


def eval_word(n, d, a, p=0):
    """Product of generic matrices along the word a."""
    a = tuple(a)
    W.validate_word(a, d)
    nvars = n * n * d
    out = generic_matrix(n, d, p, a[0])
    for k in a[1:]:
        out = mat_mul(out, generic_matrix(n, d, p, k), n, nvars, p)
    return out


def _det(rows, nvars, p):
    size = len(rows)
    out = Poly.zero(nvars, p)
    for perm in permutations(range(size)):
        sign = 1
        seen = list(perm)
        for i in range(size):
            for j in range(i + 1, size):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = Poly.const(sign, nvars, p)
        for i in range(size):
            prod = prod * rows[i][perm[i]]
        out = out + prod
    return out


def sigma_poly(t, M, p=0):
    """Sum of the principal t x t minors of M (sigma_0 = 1)."""
    n = len(M)
    if not (0 <= t <= n):
        raise ValueError("need 0 <= t <= %d, got %d" % (n, t))
    nvars = M[0][0].nvars if n else 0
    if t == 0:
        return Poly.const(1, nvars, p)
    out = Poly.zero(nvars, p)
    for rows in combinations(range(n), t):
        sub = [[M[i][j] for j in rows] for i in rows]
        out = out + _det(sub, nvars, p)
    return out


def trace(M, p=0):
    nvars = M[0][0].nvars
    return sum((M[i][i] for i in range(len(M))), Poly.zero(nvars, p))


@dataclass(frozen=True)
class InvariantPoly:
    poly: Poly
    xdeg: tuple  # total degree in the entries of each generic matrix
    t: int
    word: tuple  # the word a of sigma_t(X_a)


@dataclass
class GeneratorSet:
    n: int
    d: int
    p: int
    entries: list  # InvariantPoly for sigma_t(X_a), t = 1 or p <= t <= n/2
    tail: list  # InvariantPoly for sigma_t(X_i), n/2 < t <= n, p <= t
    degree_sources: dict  # t -> the degree cap used for C(floor(n/t), d)

    def all(self):
        return self.entries + self.tail


def cyclic_min(w):
    return min(w[i:] + w[:i] for i in range(len(w)))


def _default_degree_cap(m, d, p):
    v = B.exact_known(m, d, p)
    if v is not None:
        return v
    summary = B.best_bounds(m, d, p)
    if summary.best_upper.value_exact is None:
        raise ValueError("no exact-integer degree cap available for C(%d,%d)" % (m, d))
    return summary.best_upper.value_exact


def sigma_of_word(n, d, t, a, p=0):
    return InvariantPoly(
        sigma_poly(t, eval_word(n, d, a, p), p),
        tuple(t * e for e in W.multidegree(a, d)),
        t,
        tuple(a),
    )


def generator_set(n, d, p, c_source=None):
    """The finite generating set of the conjugation-invariant ring.

    sigma_t(X_a) for t = 1 or p <= t <= n/2 with deg a bounded by the
    nilpotency degree for power floor(n/t), plus sigma_t of the single
    matrices for n/2 < t <= n with p <= t.  Words are deduplicated up to
    cyclic rotation.  c_source may override the degree caps (a valid upper
    bound yields a generating superset).
    """
    check_characteristic(p)
    if n not in (2, 3):
        raise ValueError("generic-matrix computations support n in {2, 3}")
    cap_of = c_source or (lambda m: _default_degree_cap(m, d, p))
    entries = []
    caps = {}
    for t in range(1, n // 2 + 1):
        if t != 1 and not (p <= t):
            continue
        m = n // t
        cap = cap_of(m)
        caps[t] = cap
        seen = set()
        for deg in range(1, cap + 1):
            for a in _all_words_of_degree(deg, d):
                rep = cyclic_min(a)
                if rep in seen:
                    continue
                seen.add(rep)
                entries.append(sigma_of_word(n, d, t, rep, p))
    tail = []
    for t in range(n // 2 + 1, n + 1):
        if 2 * t <= n or not (p <= t):
            continue
        for i in range(1, d + 1):
            tail.append(sigma_of_word(n, d, t, (i,), p))
    return GeneratorSet(n, d, p, entries, tail, caps)


def _all_words_of_degree(deg, d):
    out = []

    def rec(acc):
        if len(acc) == deg:
            out.append(tuple(acc))
            return
        for k in range(1, d + 1):
            rec(acc + [k])

    rec([])
    return out


def subalgebra_reduce(gens, target, p=0):
    """Does target lie in the span of products of the given generators?

    Products are restricted to those whose X-multidegrees sum to the
    target's; this is the degreewise membership test in the graded ring.
    """
    products = _graded_products(gens, target.xdeg, p)
    monomials = set(target.poly.terms)
    for poly in products:
        monomials.update(poly.terms)
    index = {m: i for i, m in enumerate(sorted(monomials))}
    ech = Echelon(len(index), p)
    for poly in products:
        ech.add({index[m]: c for m, c in poly.terms.items()})
    return ech.contains({index[m]: c for m, c in target.poly.terms.items()})


def _graded_products(gens, xdeg, p):
    """All products of generators (repetition allowed, order irrelevant)
    whose X-multidegrees add up to xdeg."""
    usable = [g for g in gens if all(a <= b for a, b in zip(g.xdeg, xdeg))]
    nvars = None
    for g in usable:
        nvars = g.poly.nvars
        break
    out = []

    def rec(i, remaining, acc):
        if not any(remaining):
            out.append(acc)
            return
        for j in range(i, len(usable)):
            g = usable[j]
            if all(a <= b for a, b in zip(g.xdeg, remaining)):
                rec(
                    j,
                    tuple(b - a for a, b in zip(g.xdeg, remaining)),
                    acc * g.poly if acc is not None else g.poly,
                )

    if nvars is None:
        return []
    rec(0, tuple(xdeg), None)
    return out


def generation_check(n, d, p, extra_deg, c_source=None, limits=None):
    """Degreewise evidence that the generator set generates.

    For every t and every word a of degree in (cap, cap + extra_deg], the
    invariant sigma_t(X_a) must reduce into products of the generators.
    Returns a report with one entry per case.
    """
    gens = generator_set(n, d, p, c_source)
    allgens = gens.all()
    cap_of = c_source or (lambda m: _default_degree_cap(m, d, p))
    cases = []
    for t in range(1, n + 1):
        cap = cap_of(n // t)
        for deg in range(cap + 1, cap + extra_deg + 1):
            seen = set()
            for a in _all_words_of_degree(deg, d):
                rep = cyclic_min(a)
                if rep in seen:
                    continue
                seen.add(rep)
                target = sigma_of_word(n, d, t, rep, p)
                ok = subalgebra_reduce(allgens, target, p)
                cases.append(
                    {"t": t, "word": W.format_word(rep), "deg": deg, "pass": bool(ok)}
                )
    return {
        "n": n,
        "d": d,
        "p": p,
        "extra_deg": extra_deg,
        "cases": cases,
        "summary": {
            "total": len(cases),
            "passed": sum(1 for c in cases if c["pass"]),
            "all_pass": all(c["pass"] for c in cases),
        },
    }


def newton_sigma_check(n, t, p=0):
    """Verify sigma_t(X_1) against the Newton-identity polynomial in the
    power traces tr(X_1^i).  Requires t < p or p = 0."""
    if p and t >= p:
        raise ValueError("Newton identities need t < p (got t=%d, p=%d)" % (t, p))
    nvars = n * n
    X = generic_matrix(n, 1, p, 1)
    power = X
    ptr = {}
    for i in range(1, t + 1):
        ptr[i] = trace(power, p)
        if i < t:
            power = mat_mul(power, X, n, nvars, p)
    e = {0: Poly.const(1, nvars, p)}
    for j in range(1, t + 1):
        acc = Poly.zero(nvars, p)
        for i in range(1, j + 1):
            term = e[j - i] * ptr[i]
            if i % 2 == 0:
                term = -term
            acc = acc + term
        inv_j = Fraction(1, j) if p == 0 else pow(j, -1, p)
        e[j] = acc.scale(inv_j)
    return sigma_poly(t, X, p) == e[t]


# ----- numeric specialization helpers (conjugation invariance checks) -----


def matrix_values(n, d, matrices):
    """Flatten a d-tuple of n x n scalar matrices into the variable vector."""
    values = [0] * (n * n * d)
    for k in range(1, d + 1):
        A = matrices[k - 1]
        for i in range(n):
            for j in range(n):
                values[var_index(n, d, i, j, k)] = A[i][j]
    return values


def invert_matrix(g):
    """Exact inverse of a matrix of Fractions (Gauss-Jordan)."""
    n = len(g)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(g)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def conjugate_tuple(matrices, g):
    """g * A_k * g^-1 for every matrix in the tuple, over the rationals."""
    ginv = invert_matrix(g)
    n = len(g)

    def mul(a, b):
        return [
            [sum(a[i][l] * b[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]

    return [mul(mul(g, A), ginv) for A in matrices]
