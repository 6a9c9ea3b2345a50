"""Words of the free semigroup on d letters, multidegrees and power vectors.

A word is a nonempty tuple of letter indices in 1..d.  The empty tuple ()
plays the role of the unity and is accepted only by operations that say so
explicitly.  Two partial orders on words are provided: the run-profile order
``gtr_compare`` (compares sorted run-length vectors letter by letter) and the
coarser run-count order ``succ_compare`` (compares only the number of runs).
"""

from functools import lru_cache
from math import factorial

GREATER = "greater"
LESS = "less"
EQUAL = "equal"
INCOMPARABLE = "incomparable"
PW_EQUIVALENT = "pw_equivalent"
PROFILE_EQUIVALENT = "profile_equivalent"

DEFAULT_WORD_LIMIT = 200_000


class WordError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    """Raised when a word enumeration would exceed the configured limit."""


def validate_word(w, d, allow_empty=False):
    """Check that w is a tuple of letter indices in 1..d."""
    if not isinstance(w, tuple):
        raise WordError("word must be a tuple of letter indices, got %r" % (w,))
    if len(w) == 0 and not allow_empty:
        raise WordError("empty word not allowed here")
    for k in w:
        if not isinstance(k, int) or not (1 <= k <= d):
            raise WordError("letter %r out of range 1..%d" % (k, d))
    return w


def multidegree(w, d):
    """Per-letter occurrence counts of w as a length-d tuple."""
    deg = [0] * d
    for k in w:
        deg[k - 1] += 1
    return tuple(deg)


def x_power(w, k):
    """Lengths of the maximal runs of letter k in w, in order of occurrence."""
    runs = []
    count = 0
    for letter in w:
        if letter == k:
            count += 1
        elif count:
            runs.append(count)
            count = 0
    if count:
        runs.append(count)
    return tuple(runs)


def sorted_power(w, k):
    """x_power sorted descending (the shape used by the partial orders)."""
    return tuple(sorted(x_power(w, k), reverse=True))


def power_sort_key(v):
    """Sort key realizing the order on sorted run vectors, ascending.

    Shorter vectors are greater, the empty vector is the unique maximum;
    among equal lengths the lexicographically greater vector is greater.
    """
    return (-len(v), v)


def compare_power(a, b):
    """Compare two descending run vectors; returns GREATER/LESS/EQUAL.

    Greater means: fewer runs, or equally many runs and lexicographically
    greater at the first difference.  () is the maximum.
    """
    for v in (a, b):
        if any(v[i] < v[i + 1] for i in range(len(v) - 1)):
            raise WordError("power vector %r is not sorted descending" % (v,))
        if any(e <= 0 for e in v):
            raise WordError("power vector entries must be positive")
    if a == b:
        return EQUAL
    ka, kb = power_sort_key(a), power_sort_key(b)
    return GREATER if ka > kb else LESS


def _per_letter_compare(a, b, d, key):
    """Product comparison of key(letter) over all letters.

    Returns GREATER/LESS if one word dominates the other with at least one
    strict inequality, EQUAL when all letters tie, INCOMPARABLE otherwise.
    """
    up = down = False
    for k in range(1, d + 1):
        ca = key(a, k)
        cb = key(b, k)
        if ca > cb:
            up = True
        elif ca < cb:
            down = True
        if up and down:
            return INCOMPARABLE
    if up:
        return GREATER
    if down:
        return LESS
    return EQUAL


def gtr_compare(a, b, d):
    """The run-profile partial order on words.

    a is greater than b when every letter's sorted run vector of a is >= the
    one of b and at least one is strictly greater; PW_EQUIVALENT when all
    sorted run vectors agree.
    """
    res = _per_letter_compare(a, b, d, lambda w, k: power_sort_key(sorted_power(w, k)))
    return PW_EQUIVALENT if res == EQUAL else res


def succ_compare(a, b, d):
    """The coarser partial order comparing only run counts per letter.

    Fewer runs is greater.  PROFILE_EQUIVALENT when the run counts agree for
    every letter.
    """
    res = _per_letter_compare(a, b, d, lambda w, k: -len(x_power(w, k)))
    return PROFILE_EQUIVALENT if res == EQUAL else res


def is_subvector(a, b):
    """True when a appears in b as an order-preserving subsequence."""
    it = iter(b)
    return all(any(x == y for y in it) for x in a)


def word_count(delta):
    """Number of words with multidegree delta (a multinomial coefficient)."""
    total = sum(delta)
    count = factorial(total)
    for e in delta:
        count //= factorial(e)
    return count


def enumerate_words(delta, limit=DEFAULT_WORD_LIMIT):
    """All words of multidegree delta in lexicographic order on letters.

    Raises EnumerationLimitError when the multinomial count exceeds limit.
    """
    if sum(delta) < 1:
        raise WordError("multidegree must have total degree >= 1")
    if any(e < 0 for e in delta):
        raise WordError("multidegree entries must be nonnegative")
    if limit is not None and word_count(delta) > limit:
        raise EnumerationLimitError(
            "component of multidegree %r has %d words, limit %d"
            % (delta, word_count(delta), limit)
        )
    return list(_words_rec(tuple(delta)))


@lru_cache(maxsize=None)
def _words_rec(delta):
    if sum(delta) == 0:
        return ((),)
    out = []
    for k, e in enumerate(delta):
        if e:
            rest = delta[:k] + (e - 1,) + delta[k + 1 :]
            out.extend((k + 1,) + tail for tail in _words_rec(rest))
    return tuple(out)


def word_sort_key(w, d):
    """Total order used to pick elimination pivots.

    Primary: per letter, the sorted run vector in the run-profile order
    (lower profile sorts first), then the raw run vector lexicographically
    so that e.g. a (2,3)-word sorts below its (3,2) companion.  Final
    tie-break: the letter sequence itself.  Words that sort first get
    eliminated first, so reduction rewrites toward profile-greater words.
    """
    keys = []
    for k in range(1, d + 1):
        runs = x_power(w, k)
        keys.append(power_sort_key(tuple(sorted(runs, reverse=True))))
        keys.append(runs)
    keys.append(w)
    return tuple(keys)


def parse_word(text, d=None):
    """Parse the factor syntax ``x1^2.x2.x1`` into a word tuple."""
    text = text.strip()
    if not text:
        raise WordError("empty word text")
    letters = []
    for factor in text.split("."):
        factor = factor.strip()
        if not factor.startswith("x"):
            raise WordError("bad factor %r" % factor)
        body = factor[1:]
        if "^" in body:
            idx_s, exp_s = body.split("^", 1)
        else:
            idx_s, exp_s = body, "1"
        try:
            idx, exp = int(idx_s), int(exp_s)
        except ValueError:
            raise WordError("bad factor %r" % factor) from None
        if idx < 1 or exp < 1:
            raise WordError("bad factor %r" % factor)
        letters.extend([idx] * exp)
    w = tuple(letters)
    if d is not None:
        validate_word(w, d)
    return w


def format_word(w):
    """Inverse of parse_word: run-compressed ``x1^2.x2.x1`` syntax."""
    if not w:
        raise WordError("cannot format the empty word")
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append("x%d" % w[i] if j - i == 1 else "x%d^%d" % (w[i], j - i))
        i = j
    return ".".join(parts)
