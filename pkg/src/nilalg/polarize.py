"""Multihomogeneous polarizations of x^n and their substitution instances.

t_theta(n, theta, (a_1..a_r)) is the sum over all ways to arrange theta_1
copies of a_1, ..., theta_r copies of a_r into a product of n factors.  The
bordered instances u * t_theta(...) * v of fixed multidegree span the
corresponding graded component of the relation ideal of the nil algebra.
"""

from . import words as W
from .formal import FormalSum


def _arrangements(counts):
    """Distinct sequences using counts[i] copies of symbol i."""
    total = sum(counts)
    seq = []
    counts = list(counts)

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                seq.append(i)
                yield from rec()
                seq.pop()
                counts[i] += 1

    yield from rec()


def t_theta(n, theta, args, p=0, d=None):
    """The polarization T_theta(a_1,...,a_r) as a FormalSum.

    Sum over all arrangements s of the multiset {i with multiplicity
    theta_i} of the concatenation a_{s(1)} ... a_{s(n)}.  Total coefficient
    mass is n!/prod(theta_i!) before reduction mod p.
    """
    theta = tuple(theta)
    if sum(theta) != n:
        raise ValueError("|theta| = %d != n = %d" % (sum(theta), n))
    if any(t <= 0 for t in theta):
        raise ValueError("theta entries must be positive: %r" % (theta,))
    if len(args) != len(theta):
        raise ValueError("need %d argument words, got %d" % (len(theta), len(args)))
    args = [tuple(a) for a in args]
    if d is None:
        d = max(max(a) for a in args)
    for a in args:
        W.validate_word(a, d)
    terms = {}
    for s in _arrangements(theta):
        w = tuple(letter for i in s for letter in args[i])
        acc = terms.get(w, 0) + 1
        if p:
            acc %= p
        if acc:
            terms[w] = acc
        else:
            terms.pop(w, None)
    return FormalSum(terms, d, p, _normalized=True)


def _sub_multidegrees(budget, scale):
    """All nonzero mu with scale*mu <= budget componentwise, ascending."""
    ranges = [range(0, b // scale + 1) for b in budget]
    out = []

    def rec(i, acc):
        if i == len(ranges):
            if any(acc):
                out.append(tuple(acc))
            return
        for e in ranges[i]:
            rec(i + 1, acc + [e])

    rec(0, [])
    out.sort()
    return out


def _pair_multisets(n, budget, p):
    """Multisets of (theta_i, a_i) pairs with sum(theta)=n, sum theta_i*mdeg(a_i) <= budget.

    Pairs are emitted as sorted tuples, which deduplicates instances up to
    simultaneous permutation of the pairs.
    """
    d = len(budget)

    def rec(n_left, budget_left, min_pair, acc):
        if n_left == 0:
            yield list(acc)
            return
        for theta_i in range(1, n_left + 1):
            for mu in _sub_multidegrees(budget_left, theta_i):
                for a in W.enumerate_words(mu):
                    pair = (theta_i, a)
                    if pair < min_pair:
                        continue
                    new_budget = tuple(
                        b - theta_i * m for b, m in zip(budget_left, W.multidegree(a, d))
                    )
                    yield from rec(n_left - theta_i, new_budget, pair, acc + [pair])

    yield from rec(n, tuple(budget), (0, ()), [])


def bare_instances(n, delta, p=0):
    """Unbordered polarization instances of multidegree exactly delta.

    Yields every nonzero t_theta(n, theta, args) with sum of theta_i *
    mdeg(a_i) equal to delta, deduplicated up to pair permutation.
    """
    d = len(delta)
    for pairs in _pair_multisets(n, delta, p):
        used = [0] * d
        for theta_i, a in pairs:
            for k, e in enumerate(W.multidegree(a, d)):
                used[k] += theta_i * e
        if tuple(used) != tuple(delta):
            continue
        f = t_theta(n, [t for t, _ in pairs], [a for _, a in pairs], p=p, d=d)
        if not f.is_zero():
            yield f


def ideal_instances(n, delta, p=0):
    """All bordered instances u * t_theta(...) * v of multidegree delta.

    u, v may be empty; the a_i are nonempty words.  The stream is finite,
    deterministic, deduplicated up to simultaneous permutation of the
    (theta_i, a_i) pairs, and omits instances that vanish over the field.
    """
    d = len(delta)
    if sum(delta) < n:
        return
    for pairs in _pair_multisets(n, delta, p):
        used = [0] * d
        for theta_i, a in pairs:
            for k, e in enumerate(W.multidegree(a, d)):
                used[k] += theta_i * e
        rem = tuple(b - u for b, u in zip(delta, used))
        core = t_theta(n, [t for t, _ in pairs], [a for _, a in pairs], p=p, d=d)
        if core.is_zero():
            continue
        for mu_u in sorted(
            set(_sub_multidegrees(rem, 1)) | {tuple([0] * d)}
        ):
            mu_v = tuple(r - u for r, u in zip(rem, mu_u))
            us = [()] if not any(mu_u) else W.enumerate_words(mu_u)
            vs = [()] if not any(mu_v) else W.enumerate_words(mu_v)
            for u in us:
                for v in vs:
                    g = core.map_words(lambda w: u + w + v)
                    if not g.is_zero():
                        yield g
