"""Octonion arithmetic with the unit product table derived from the 4-form.

The table of imaginary-unit products is always computed from the form via
the induced triple cross product, never hard-coded, so printed tables stay
consistent with the form the library actually uses. A negative table label
-nu always means the sign-flipped basis vector -e_nu.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable, NamedTuple

from .forms import AltForm, cayley_form
from .linalg import GramMetric, Vector, _exact


class SignedUnit(NamedTuple):
    """A basis index 0..7 together with a sign, standing for sign * e_index."""

    index: int
    sign: int

    def __neg__(self) -> "SignedUnit":
        return SignedUnit(self.index, -self.sign)

    def as_vector(self, dim: int = 8) -> Vector:
        return Vector(
            (1 if self.sign > 0 else -1) if k == self.index else 0
            for k in range(dim)
        )

    def as_text(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.index}"


class NotSingleBasisVector(ValueError):
    """The triple product of two frame units was not a signed basis vector.

    Signals an input 4-form that does not carry a Cayley structure.
    """


class UnitTable:
    """7x7 signed product table of the imaginary units e_1..e_7.

    Every off-diagonal product is a signed basis unit +/-e_nu with
    nu not in {0, lam, mu}; the diagonal is fixed to -e_0 and the table is
    antisymmetric off the diagonal.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: dict[tuple[int, int], SignedUnit]):
        for lam in range(1, 8):
            for mu in range(1, 8):
                if lam == mu:
                    continue
                unit = entries.get((lam, mu))
                if unit is None:
                    raise ValueError(f"missing table entry ({lam},{mu})")
                if unit.index in (0, lam, mu):
                    raise NotSingleBasisVector(
                        f"product ({lam},{mu}) hit forbidden index {unit.index}"
                    )
                if entries[(mu, lam)] != -unit:
                    raise ValueError(f"table not antisymmetric at ({lam},{mu})")
        self.entries = dict(entries)

    @classmethod
    def from_form(cls, phi: AltForm | None = None, metric: GramMetric | None = None) -> "UnitTable":
        """Derive the table entries e_lam * e_mu from the triple cross product.

        Each product of distinct imaginary frame units must come out as a
        single signed basis vector; anything else raises
        :class:`NotSingleBasisVector`.
        """
        from .cross import CrossProduct

        cp = CrossProduct(phi if phi is not None else cayley_form(), metric)
        e = [Vector.basis(8, i) for i in range(8)]
        entries: dict[tuple[int, int], SignedUnit] = {}
        for lam in range(1, 8):
            for mu in range(1, 8):
                if lam == mu:
                    continue
                w = cp.cross3(e[0], e[lam], e[mu])
                support = w.nonzero()
                if len(support) != 1 or abs(support[0][1]) != 1:
                    raise NotSingleBasisVector(
                        f"P(e0,e{lam},e{mu}) = {w} is not a signed basis vector"
                    )
                nu, c = support[0]
                entries[(lam, mu)] = SignedUnit(nu, 1 if c > 0 else -1)
        return cls(entries)

    def product(self, i: int, j: int) -> SignedUnit:
        """Full unit product e_i * e_j for i, j in 0..7 (e_0 is the unit)."""
        if not (0 <= i < 8 and 0 <= j < 8):
            raise ValueError("unit indices must lie in 0..7")
        if i == 0:
            return SignedUnit(j, 1)
        if j == 0:
            return SignedUnit(i, 1)
        if i == j:
            return SignedUnit(0, -1)
        return self.entries[(i, j)]

    def imaginary(self, lam: int, mu: int) -> SignedUnit:
        """Table entry for imaginary units lam, mu in 1..7 (diagonal: -e_0)."""
        if not (1 <= lam < 8 and 1 <= mu < 8):
            raise ValueError("imaginary unit indices must lie in 1..7")
        return SignedUnit(0, -1) if lam == mu else self.entries[(lam, mu)]

    def structure_constant(self, lam: int, mu: int, nu: int) -> int:
        """Coefficient of e_nu in e_lam * e_mu for distinct lam, mu in 1..7."""
        unit = self.imaginary(lam, mu)
        return unit.sign if (lam != mu and unit.index == nu) else 0

    def as_text(self) -> str:
        header = "x|" + "".join(f"{mu:>5}" for mu in range(1, 8))
        lines = [header, "-" * len(header)]
        for lam in range(1, 8):
            cells = []
            for mu in range(1, 8):
                unit = self.imaginary(lam, mu)
                cells.append(f"{'+' if unit.sign > 0 else '-'}e{unit.index:<2}")
            lines.append(f"{lam}|" + "".join(f"{c:>5}" for c in cells))
        return "\n".join(lines)

    def as_csv(self) -> str:
        lines = ["x," + ",".join(str(mu) for mu in range(1, 8))]
        for lam in range(1, 8):
            cells = [self.imaginary(lam, mu).as_text() for mu in range(1, 8)]
            lines.append(f"{lam}," + ",".join(cells))
        return "\n".join(lines)

    def as_json_obj(self) -> dict[str, str]:
        return {
            f"{lam},{mu}": self.imaginary(lam, mu).as_text()
            for lam in range(1, 8)
            for mu in range(1, 8)
        }


@cache
def default_table() -> UnitTable:
    """The unit table of the Cayley form with the identity metric."""
    return UnitTable.from_form(cayley_form())


class Octonion:
    """Octonion with exact rational components; component 0 is the real part."""

    __slots__ = ("comps",)

    def __init__(self, comps: Iterable):
        comps = tuple(_exact(c) for c in comps)
        if len(comps) != 8:
            raise ValueError("an octonion has 8 components")
        self.comps = comps

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        return cls(1 if k == i else 0 for k in range(8))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls([0] * 8)

    @classmethod
    def from_vector(cls, v: Vector) -> "Octonion":
        return cls(v.comps)

    def as_vector(self) -> Vector:
        return Vector(self.comps)

    @property
    def real(self) -> Fraction:
        return self.comps[0]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Octonion) and self.comps == other.comps

    def __hash__(self) -> int:
        return hash(self.comps)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(a + b for a, b in zip(self.comps, other.comps))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(a - b for a, b in zip(self.comps, other.comps))

    def __neg__(self) -> "Octonion":
        return Octonion(-a for a in self.comps)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return Octonion(a * other for a in self.comps)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion(a * other for a in self.comps)
        return NotImplemented

    def conjugate(self) -> "Octonion":
        return Octonion((self.comps[0],) + tuple(-a for a in self.comps[1:]))

    def norm_sq(self) -> Fraction:
        return sum(a * a for a in self.comps)

    def is_zero(self) -> bool:
        return not any(self.comps)

    def __repr__(self) -> str:
        return f"Octonion([{', '.join(str(c) for c in self.comps)}])"


def oct_mul(x: Octonion, y: Octonion, table: UnitTable | None = None) -> Octonion:
    """Bilinear product extending the unit table, with e_0 the two-sided unit."""
    table = table or default_table()
    out = [0] * 8
    for i, a in enumerate(x.comps):
        if not a:
            continue
        for j, b in enumerate(y.comps):
            if not b:
                continue
            unit = table.product(i, j)
            out[unit.index] += a * b * unit.sign
    return Octonion(out)


def associator(x: Octonion, y: Octonion, z: Octonion, table: UnitTable | None = None) -> Octonion:
    """(xy)z - x(yz); identically zero on any pair of equal arguments."""
    table = table or default_table()
    return oct_mul(oct_mul(x, y, table), z, table) - oct_mul(x, oct_mul(y, z, table), table)
