"""Sparse alternating forms on oriented Euclidean 8-space.

A form of degree k stores its terms on strictly increasing index tuples
with exact rational coefficients; zero coefficients are pruned eagerly so
that equality is structural. The orientation is fixed to +e^{01234567} and
the model metric is the orthonormal frame, which turns the Hodge star into
a signed complementary-index map.

The text grammar (used by the CLI and by test fixtures)::

    form     = [sign] term { sign term }
    term     = [rational "*"] basis | rational
    basis    = "e^{" digit+ "}" | "e" digit+
    rational = ["-"] digits ["/" digits]

Digits are single indices 0..7; a repeated digit inside one term, terms of
mixed degree, and malformed rationals are rejected with a position-carrying
:class:`FormParseError`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import F0, F1, Matrix, Vector, det

DIM = 8


def sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort an index sequence, returning (sorted tuple, permutation sign).

    The sign is 0 when an index repeats.
    """
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i - 1] == idx[i]:
            return tuple(idx), 0
    return tuple(idx), sign


class AltForm:
    """Alternating k-form stored as {increasing index tuple: coefficient}."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, value in (terms or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"term {key} does not have degree {degree}")
            if any(not 0 <= i < DIM for i in key):
                raise ValueError(f"index out of range in term {key}")
            if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
                raise ValueError(f"term indices must be strictly increasing: {key}")
            if isinstance(value, float):
                raise TypeError("floating point coefficients are not allowed")
            if not isinstance(value, (int, Fraction)):
                value = Fraction(value)
            if value:
                clean[key] = value
        if degree > DIM and clean:
            raise ValueError("nonzero form of degree above the space dimension")
        self.degree = degree
        self.terms = clean

    @classmethod
    def _raw(cls, degree: int, terms: dict) -> "AltForm":
        form = object.__new__(cls)
        form.degree = degree
        form.terms = terms
        return form

    @classmethod
    def from_signed_terms(
        cls, degree: int, items: Iterable[tuple[Sequence[int], Fraction]]
    ) -> "AltForm":
        """Build a form from possibly unsorted index tuples."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for indices, coeff in items:
            key, sign = sort_with_sign(indices)
            if sign == 0:
                continue
            acc[key] = acc.get(key, F0) + sign * coeff
        return cls(degree, acc)

    def coefficient(self, key: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(key), F0)

    def coefficient_signed(self, indices: Sequence[int]) -> Fraction:
        key, sign = sort_with_sign(indices)
        if sign == 0:
            return F0
        c = self.terms.get(key)
        if c is None:
            return F0
        return c if sign > 0 else -c

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AltForm)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.degree, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "AltForm") -> "AltForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        acc = dict(self.terms)
        for key, c in other.terms.items():
            s = acc.get(key, F0) + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return AltForm._raw(self.degree, acc)

    def __sub__(self, other: "AltForm") -> "AltForm":
        return self + (-other)

    def __neg__(self) -> "AltForm":
        return AltForm._raw(self.degree, {k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar) -> "AltForm":
        if isinstance(scalar, (int, Fraction)):
            scalar = Fraction(scalar)
            if not scalar:
                return AltForm._raw(self.degree, {})
            return AltForm._raw(self.degree, {k: c * scalar for k, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def wedge(self, other: "AltForm") -> "AltForm":
        acc: dict[tuple[int, ...], Fraction] = {}
        for s_key, s_c in self.terms.items():
            for t_key, t_c in other.terms.items():
                key, sign = sort_with_sign(s_key + t_key)
                if sign == 0:
                    continue
                c = acc.get(key, F0) + sign * s_c * t_c
                if c:
                    acc[key] = c
                else:
                    acc.pop(key, None)
        return AltForm(self.degree + other.degree, acc)

    def evaluate(self, vectors: Sequence[Vector]) -> Fraction:
        """Multilinear alternating evaluation on ``degree`` vectors."""
        if len(vectors) != self.degree:
            raise ValueError(f"need {self.degree} vectors, got {len(vectors)}")
        if self.degree == 0:
            return self.terms.get((), F0)
        if not self.terms:
            return F0
        supports = [v.nonzero() for v in vectors]
        size = 1
        for s in supports:
            size *= len(s)
            if size > 128:
                break
        if size <= 128:
            total = F0
            for combo in _index_products(supports):
                indices, weight = combo
                c = self.coefficient_signed(indices)
                if c:
                    total += weight * c
            return total
        # dense vectors: evaluate term-by-term via k x k minors
        total = F0
        for key, c in self.terms.items():
            minor = [[v[i] for i in key] for v in vectors]
            d = det(minor)
            if d:
                total += c * d
        return total

    def star(self) -> "AltForm":
        """Hodge star for the identity metric and orientation +e^{01234567}.

        Applying it twice gives (-1)^(k(8-k)) times the input: the identity
        on every even degree (the only degrees used here), the negation on
        odd degrees.
        """
        if self.degree > DIM:
            raise ValueError("degree above the space dimension")
        acc: dict[tuple[int, ...], Fraction] = {}
        for key, c in self.terms.items():
            comp = tuple(i for i in range(DIM) if i not in key)
            inversions = sum(1 for a in key for b in comp if b < a)
            acc[comp] = c if inversions % 2 == 0 else -c
        return AltForm._raw(DIM - self.degree, acc)

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "terms": {
                "".join(str(i) for i in key): str(c)
                for key, c in sorted(self.terms.items())
            },
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "AltForm":
        from .linalg import parse_rational

        degree = obj["degree"]
        terms = {
            tuple(int(ch) for ch in key): parse_rational(value)
            for key, value in obj["terms"].items()
        }
        return cls(degree, terms)

    def __repr__(self) -> str:
        return f"AltForm({self.degree}, {print_form(self)!r})"


def _index_products(supports):
    """Yield (index tuple, coefficient product) over the nonzero supports."""
    stack = [((), 1)]
    for support in supports:
        stack = [
            (indices + (i,), weight * c)
            for indices, weight in stack
            for i, c in support
        ]
    return stack


def wedge(f: AltForm, g: AltForm) -> AltForm:
    return f.wedge(g)


def hodge_star(f: AltForm) -> AltForm:
    return f.star()


def evaluate(f: AltForm, vectors: Sequence[Vector]) -> Fraction:
    return f.evaluate(vectors)


def pullback(f: AltForm, m: Matrix) -> AltForm:
    """The form (x_1, ..., x_k) -> f(m x_1, ..., m x_k)."""
    cols = [m.column(j) for j in range(m.ncols)]
    acc = {}
    for key in combinations(range(DIM), f.degree):
        value = f.evaluate([cols[i] for i in key])
        if value:
            acc[key] = value
    return AltForm._raw(f.degree, acc)


# The Cayley 4-form: 14 terms, coefficients +/-1, self-dual for the fixed
# orientation. Its stabilizer in GL(8, R) preserving orientation is Spin(7).
_CAYLEY_TERMS: dict[tuple[int, int, int, int], int] = {
    (0, 1, 4, 5): 1,
    (0, 1, 6, 7): 1,
    (2, 3, 4, 5): 1,
    (2, 3, 6, 7): 1,
    (0, 2, 4, 6): 1,
    (0, 2, 5, 7): -1,
    (1, 3, 4, 6): -1,
    (1, 3, 5, 7): 1,
    (0, 3, 4, 7): -1,
    (0, 3, 5, 6): -1,
    (1, 2, 4, 7): -1,
    (1, 2, 5, 6): -1,
    (0, 1, 2, 3): 1,
    (4, 5, 6, 7): 1,
}


@cache
def cayley_form() -> AltForm:
    """The 14-term Cayley 4-form on 8-space."""
    return AltForm(4, dict(_CAYLEY_TERMS))


class FormParseError(ValueError):
    """Parse failure with the offending position in the input string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.reason = message
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: int | None = None) -> FormParseError:
        return FormParseError(message, self.pos if position is None else position)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> AltForm:
        terms: list[tuple[tuple[int, ...], Fraction]] = []
        degree: int | None = None
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("empty form expression")
        first = True
        while True:
            self.skip_ws()
            if self.pos >= len(self.text):
                if first:
                    raise self.error("expected a term")
                break
            sign = 1
            ch = self.peek()
            if ch in "+-":
                sign = -1 if ch == "-" else 1
                self.pos += 1
                self.skip_ws()
            elif not first:
                raise self.error(f"expected '+' or '-', found {ch!r}")
            term_start = self.pos
            indices, coeff = self.parse_term()
            if degree is None:
                degree = len(indices)
            elif len(indices) != degree:
                raise self.error(
                    f"mixed degrees: term of degree {len(indices)} in a degree-{degree} form",
                    term_start,
                )
            terms.append((indices, sign * coeff))
            first = False
        assert degree is not None
        return AltForm.from_signed_terms(degree, terms)

    def parse_term(self) -> tuple[tuple[int, ...], Fraction]:
        ch = self.peek()
        if ch == "e":
            return self.parse_basis(), F1
        if not ch.isdigit():
            raise self.error(f"expected a coefficient or basis term, found {ch!r}")
        coeff = self.parse_rational()
        self.skip_ws()
        ch = self.peek()
        if ch == "*":
            self.pos += 1
            self.skip_ws()
            if self.peek() != "e":
                raise self.error("expected a basis term after '*'")
            return self.parse_basis(), coeff
        if ch in ("", "+", "-"):
            return (), coeff  # a bare rational is a degree-0 term
        raise self.error(f"expected '*', '+', '-' or end of input, found {ch!r}")

    def parse_rational(self) -> Fraction:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        num = int(self.text[start:self.pos])
        if self.peek() != "/":
            return Fraction(num)
        self.pos += 1
        den_start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if den_start == self.pos:
            raise self.error("malformed rational: missing denominator", den_start)
        den = int(self.text[den_start:self.pos])
        if den == 0:
            raise self.error("malformed rational: zero denominator", den_start)
        return Fraction(num, den)

    def parse_basis(self) -> tuple[int, ...]:
        assert self.peek() == "e"
        self.pos += 1
        braced = self.peek() == "^"
        if braced:
            self.pos += 1
            if self.peek() != "{":
                raise self.error("expected '{' after 'e^'")
            self.pos += 1
        indices: list[int] = []
        seen: set[int] = set()
        while True:
            ch = self.peek()
            if ch.isdigit():
                i = int(ch)
                if i >= DIM:
                    raise self.error(f"index {i} out of range 0..{DIM - 1}")
                if i in seen:
                    raise self.error(f"repeated index {i} in one term")
                seen.add(i)
                indices.append(i)
                self.pos += 1
                continue
            break
        if not indices:
            raise self.error("expected at least one index digit")
        if braced:
            if self.peek() != "}":
                raise self.error("expected '}' to close the index list")
            self.pos += 1
        return tuple(indices)


def parse_form(text: str) -> AltForm:
    """Parse the canonical signed-sum grammar into an alternating form."""
    return _Parser(text).parse()


def print_form(f: AltForm) -> str:
    """Canonical text rendering; ``parse_form`` inverts it exactly.

    The zero form prints as "0" regardless of degree (the one spot where
    the text format drops degree information; the JSON format keeps it).
    """
    if not f.terms:
        return "0"
    parts = []
    for key, c in sorted(f.terms.items()):
        basis = "e^{%s}" % "".join(str(i) for i in key) if key else ""
        if not basis:
            piece = str(c)
        elif c == 1:
            piece = basis
        elif c == -1:
            piece = "-" + basis
        else:
            piece = f"{c}*{basis}"
        parts.append(piece)
    out = parts[0]
    for piece in parts[1:]:
        out += piece if piece.startswith("-") else "+" + piece
    return out
