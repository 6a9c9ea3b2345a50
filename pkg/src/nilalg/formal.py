"""Sparse formal sums of words over an exact coefficient field.

The field is the rationals (p=0, coefficients stored as Fraction) or the
prime field F_p (coefficients stored as ints in 1..p-1).  Zero coefficients
are never stored.
"""

import re
from fractions import Fraction

from . import words as W


class FieldError(ValueError):
    pass


def check_characteristic(p):
    """p must be 0 or a prime."""
    if p == 0:
        return p
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise FieldError("characteristic must be 0 or prime, got %r" % (p,))
    return p


def coerce_coeff(c, p):
    """Bring a scalar into canonical stored form for characteristic p."""
    if p == 0:
        return c if isinstance(c, Fraction) else Fraction(c)
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise FieldError("denominator of %s not invertible mod %d" % (c, p))
        return c.numerator * pow(c.denominator, -1, p) % p
    return c % p


class FormalSum:
    """A finite F-linear combination of words over d letters.

    terms maps word tuples to nonzero stored coefficients.  All arithmetic
    stays within one (d, p) universe.
    """

    __slots__ = ("terms", "d", "p")

    def __init__(self, terms, d, p, _normalized=False):
        check_characteristic(p)
        self.d = d
        self.p = p
        if _normalized:
            self.terms = terms
        else:
            clean = {}
            for w, c in terms.items():
                W.validate_word(w, d)
                c = coerce_coeff(c, p)
                if c:
                    clean[w] = c
            self.terms = clean

    @classmethod
    def zero(cls, d, p):
        return cls({}, d, p, _normalized=True)

    @classmethod
    def word(cls, w, d, p, coeff=1):
        return cls({tuple(w): coeff}, d, p)

    def is_zero(self):
        return not self.terms

    def _check_same_universe(self, other):
        if self.d != other.d or self.p != other.p:
            raise FieldError(
                "mixed universes: (d=%d,p=%d) vs (d=%d,p=%d)"
                % (self.d, self.p, other.d, other.p)
            )

    def __add__(self, other):
        self._check_same_universe(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w, 0) + c
            if self.p:
                acc %= self.p
            if acc:
                terms[w] = acc
            else:
                terms.pop(w, None)
        return FormalSum(terms, self.d, self.p, _normalized=True)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = coerce_coeff(c, self.p)
        if not c:
            return FormalSum.zero(self.d, self.p)
        terms = {}
        for w, cw in self.terms.items():
            cc = cw * c
            if self.p:
                cc %= self.p
            if cc:
                terms[w] = cc
        return FormalSum(terms, self.d, self.p, _normalized=True)

    def __mul__(self, other):
        """Concatenation product, extended bilinearly."""
        self._check_same_universe(other)
        terms = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u + v
                acc = terms.get(w, 0) + cu * cv
                if self.p:
                    acc %= self.p
                if acc:
                    terms[w] = acc
                else:
                    terms.pop(w, None)
        return FormalSum(terms, self.d, self.p, _normalized=True)

    def map_words(self, fn):
        """Apply a word-to-word map, collecting coefficients.

        fn may return None to delete a term (used nowhere yet but cheap).
        """
        terms = {}
        for w, c in self.terms.items():
            w2 = fn(w)
            if w2 is None:
                continue
            acc = terms.get(w2, 0) + c
            if self.p:
                acc %= self.p
            if acc:
                terms[w2] = acc
            else:
                terms.pop(w2, None)
        return FormalSum(terms, self.d, self.p, _normalized=True)

    def multidegrees(self):
        return {W.multidegree(w, self.d) for w in self.terms}

    def is_multihomogeneous(self):
        return len(self.multidegrees()) <= 1

    def split_multihomogeneous(self):
        """Split into multihomogeneous parts, keyed by multidegree."""
        parts = {}
        for w, c in self.terms.items():
            delta = W.multidegree(w, self.d)
            parts.setdefault(delta, {})[w] = c
        return {
            delta: FormalSum(t, self.d, self.p, _normalized=True)
            for delta, t in parts.items()
        }

    def __eq__(self, other):
        return (
            isinstance(other, FormalSum)
            and self.d == other.d
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.d, self.p, frozenset(self.terms.items())))

    def __repr__(self):
        return "FormalSum(%s, d=%d, p=%d)" % (format_sum(self), self.d, self.p)

    def __str__(self):
        return format_sum(self)


_TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|x[0-9^.x]*)")
_STAR = re.compile(r"\s*\*\s*")


def parse_sum(text, d, p):
    """Parse ``expr := term (('+'|'-') term)*`` with optional coefficients.

    A term is ``[coeff '*'] word`` where coeff is INT or INT/INT and word
    uses the x1^2.x2 syntax.
    """
    terms = {}
    pos = 0
    sign = 1
    text = text.strip()
    if not text:
        raise W.WordError("empty formal-sum text")
    expect_term = True  # a leading sign is allowed, then strict alternation
    first = True
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise W.WordError("parse error at %r" % text[pos:])
        tok = m.group(1)
        pos = m.end()
        if tok in "+-":
            if expect_term and not first:
                raise W.WordError("two signs in a row in %r" % text)
            sign = 1 if tok == "+" else -1
            expect_term = True
            first = False
            continue
        if not expect_term:
            raise W.WordError("missing '+' or '-' before %r" % tok)
        first = False
        expect_term = False
        coeff = Fraction(sign)
        if tok[0] != "x":
            coeff *= Fraction(tok)
            m2 = _STAR.match(text, pos)
            if not m2:
                raise W.WordError("expected '*' after coefficient in %r" % text)
            pos = m2.end()
            m = _TOKEN.match(text, pos)
            if not m or m.group(1)[0] != "x":
                raise W.WordError("expected word after coefficient in %r" % text)
            tok = m.group(1)
            pos = m.end()
        w = W.parse_word(tok, d)
        stored = coerce_coeff(coeff, p)
        acc = (terms.get(w, 0) + stored) % p if p else terms.get(w, 0) + stored
        if acc:
            terms[w] = acc
        else:
            terms.pop(w, None)
        sign = 1
    if expect_term:
        raise W.WordError("dangling sign at the end of %r" % text)
    return FormalSum(terms, d, p, _normalized=True)


def format_sum(f):
    """Render a FormalSum in the grammar accepted by parse_sum."""
    if f.is_zero():
        return "0"
    items = sorted(f.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))
    out = []
    for w, c in items:
        if f.p:
            neg = False
            mag = c
        else:
            neg = c < 0
            mag = -c if neg else c
        body = W.format_word(w) if mag == 1 else "%s*%s" % (mag, W.format_word(w))
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
