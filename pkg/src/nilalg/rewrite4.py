"""Canonical supports for the nil algebra with x^4 = 0.

Every element is congruent to a combination of words whose per-letter run
vectors come from a short list, subject to three cross-letter exclusions.
The reducer is the generic echelon reduction of the degree component; the
displayed rewrite relations serve as test vectors, not as the engine.
"""

from itertools import combinations_with_replacement

from . import ideal as I
from . import words as W

N4 = 4

ALLOWED_VECTORS = frozenset(
    [
        (),
        (1,),
        (1, 1),
        (1, 1, 1),
        (2,),
        (2, 1),
        (3,),
        (3, 1),
        (1, 3),
        (3, 2),
        (3, 2, 1),
    ]
)


class CanonicalFormDefect(RuntimeError):
    """Reduction left a non-canonical word; would falsify the support lemma."""


def allowed_power_vector(v):
    """Membership of a raw (unsorted) run vector in the canonical list."""
    return tuple(v) in ALLOWED_VECTORS


def _has_three(v):
    return W.is_subvector((3,), v)


def _has_three_two(v):
    return W.is_subvector((3, 2), v)


def cross_letter_ok(w, d=None):
    """Check the cross-letter exclusions on a word's run vectors.

    False when some letter has run vector (3,2,1) while another carries a
    (3), when three letters carry a (3), or when two letters carry a (3,2).
    """
    if d is None:
        d = max(w)
    powers = [W.x_power(w, k) for k in range(1, d + 1)]
    threes = sum(1 for v in powers if _has_three(v))
    if threes >= 3:
        return False
    if sum(1 for v in powers if _has_three_two(v)) >= 2:
        return False
    if any(v == (3, 2, 1) for v in powers) and threes >= 2:
        return False
    return True


def is_canonical_word(w, d=None):
    if d is None:
        d = max(w)
    return (
        all(allowed_power_vector(W.x_power(w, k)) for k in range(1, d + 1))
        and cross_letter_ok(w, d)
    )


def canonicalize(d, p, f, limits=None):
    """Reduce f to a combination of canonical words, modulo the ideal.

    Requires p != 2 (the run-vector list is specific to odd or zero
    characteristic).  The difference f - result lies in the ideal; if any
    residual term is non-canonical that is a defect signal and raises
    CanonicalFormDefect rather than being silenced.
    """
    if p == 2:
        raise ValueError("canonical supports require p != 2")
    g = I.reduce(N4, p, f, limits)
    bad = [w for w in g.terms if not is_canonical_word(w, d)]
    if bad:
        raise CanonicalFormDefect(
            "non-canonical words survived reduction: %s"
            % ", ".join(W.format_word(w) for w in bad)
        )
    return g


def witness_search(d, p, degree_range, limits=None):
    """A word of maximal degree in the range that is nonzero in the quotient.

    Scans degrees from the top down; within a component the non-pivot words
    are tried canonical-profiles-first.  Returns None when every degree in
    the range is exhausted without a witness.
    """
    degrees = sorted(degree_range, reverse=True)
    for total in degrees:
        for delta in I._sorted_multidegrees(total, d):
            if sum(delta) != total:
                continue
            qdim = I.quotient_dimension(N4, d, p, delta, limits)
            if qdim == 0:
                continue
            basis = I.component_basis(N4, d, p, delta, limits)
            candidates = basis.nonpivot_words()
            candidates.sort(key=lambda w: (not is_canonical_word(w, d),))
            return candidates[0]
    return None


def canonical_profiles(d):
    """All multisets of allowed run vectors for d letters that pass the
    cross-letter exclusions.  Degrees and exclusions are symmetric in the
    letters, so multisets suffice for counting arguments."""
    vectors = sorted(ALLOWED_VECTORS)
    out = []
    for combo in combinations_with_replacement(vectors, d):
        threes = sum(1 for v in combo if _has_three(v))
        if threes >= 3:
            continue
        if sum(1 for v in combo if _has_three_two(v)) >= 2:
            continue
        if any(v == (3, 2, 1) for v in combo) and threes >= 2:
            continue
        out.append(combo)
    return out


def max_profile_degree(d, three_letters=None):
    """Max total degree over canonical profiles for d letters.

    With three_letters given, restrict to profiles where exactly that many
    letters carry a (3) in their run vector.
    """
    best = -1
    for combo in canonical_profiles(d):
        if three_letters is not None:
            if sum(1 for v in combo if _has_three(v)) != three_letters:
                continue
        best = max(best, sum(sum(v) for v in combo))
    return best
