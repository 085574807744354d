"""Triple cross product induced by a 4-form, and the rank-2 product on e0-perp.

The product is defined through the duality g(P(a,b,c), x) = phi(a,b,c,x);
for the identity metric the components of P(a,b,c) are plain form
evaluations. The induced product P(e0, ., .) on the orthogonal complement
of e_0 determines a 3-form on indices 1..7 whose coefficients are the
structure constants of the unit product table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .forms import AltForm, cayley_form
from .linalg import GramMetric, Vector, gram_det


class InputNotInE0Perp(ValueError):
    """An argument of the rank-2 product had a nonzero e_0 component."""


@dataclass(frozen=True)
class CompatibilityReport:
    """Exact residuals of the metric-compatibility identities."""

    orthogonality: tuple[Fraction, Fraction, Fraction]
    norm_residual: Fraction

    @property
    def ok(self) -> bool:
        return not any(self.orthogonality) and not self.norm_residual


@dataclass
class LemmaReport:
    """Outcome of a composition-rule sweep."""

    cases: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class CrossProduct:
    """The alternating triple product dual to a 4-form under a metric."""

    def __init__(self, phi: AltForm | None = None, metric: GramMetric | None = None):
        phi = phi if phi is not None else cayley_form()
        if phi.degree != 4:
            raise ValueError("the inducing form must have degree 4")
        self.phi = phi
        self.metric = metric or GramMetric(dim=8)
        self._metric_inv = None if self.metric.is_identity() else self.metric.matrix.inverse()
        self._basis = tuple(Vector.basis(8, i) for i in range(8))
        self._unit_products: dict[tuple[int, int, int], Vector] = {}

    def _cross3_units(self, i: int, j: int, k: int) -> Vector:
        key = (i, j, k)
        cached = self._unit_products.get(key)
        if cached is not None:
            return cached
        comps = [0] * 8
        if i != j and j != k and i != k:
            for m in range(8):
                if m == i or m == j or m == k:
                    continue
                co = self.phi.coefficient_signed((i, j, k, m))
                if co:
                    comps[m] = co
        rhs = Vector(comps)
        result = rhs if self._metric_inv is None else self._metric_inv @ rhs
        self._unit_products[key] = result
        return result

    def cross3(self, a: Vector, b: Vector, c: Vector) -> Vector:
        """The unique vector with g(result, e_i) = phi(a, b, c, e_i) for all i."""
        na, nb, nc = a.nonzero(), b.nonzero(), c.nonzero()
        if len(na) == 1 and len(nb) == 1 and len(nc) == 1:
            (i, ca), (j, cb), (k, cc) = na[0], nb[0], nc[0]
            base = self._cross3_units(i, j, k)
            w = ca * cb * cc
            return base if w == 1 else base * w
        comps = [0] * 8
        for i, ca in na:
            for j, cb in nb:
                if j == i:
                    continue
                w2 = ca * cb
                for k, cc in nc:
                    if k == i or k == j:
                        continue
                    w = w2 * cc
                    for m in range(8):
                        if m == i or m == j or m == k:
                            continue
                        co = self.phi.coefficient_signed((i, j, k, m))
                        if co:
                            comps[m] += w * co
        rhs = Vector(comps)
        if self._metric_inv is None:
            return rhs
        return self._metric_inv @ rhs

    def check_compatibility(self, a: Vector, b: Vector, c: Vector) -> CompatibilityReport:
        """Residuals of orthogonality to each argument and of the norm identity.

        All residuals are exactly zero for a metric-compatible product.
        """
        p = self.cross3(a, b, c)
        g = self.metric.inner
        return CompatibilityReport(
            orthogonality=(g(p, a), g(p, b), g(p, c)),
            norm_residual=g(p, p) - gram_det([a, b, c], self.metric),
        )

    def cross2(self, u: Vector, v: Vector) -> Vector:
        """Induced rank-2 product P(e0, u, v) on the complement of e_0."""
        if u[0] or v[0]:
            bad = "first" if u[0] else "second"
            raise InputNotInE0Perp(f"{bad} argument has a nonzero e0 component")
        return self.cross3(self._basis[0], u, v)

    def associative_form(self) -> AltForm:
        """The 3-form on indices 1..7 given by (x,y,z) -> phi(e0,x,y,z)."""
        terms = {}
        for key, c in self.phi.terms.items():
            if key[0] == 0:
                terms[key[1:]] = c
        return AltForm(3, terms)

    def composition_sides(
        self, a: Vector, b: Vector, u: Vector, v: Vector, w: Vector
    ) -> tuple[Vector, Vector]:
        """Left side P(a,b,P(u,v,w)) and the 12-term expansion it must equal."""
        lhs = self.cross3(a, b, self.cross3(u, v, w))
        return lhs, self.composition_rhs(a, b, u, v, w)

    def composition_rhs(
        self, a: Vector, b: Vector, u: Vector, v: Vector, w: Vector
    ) -> Vector:
        """The 12-term right side of the composition rule.

        Uses the pairing g(x^y, s^t) = g(x,s)g(y,t) - g(x,t)g(y,s) verbatim,
        including its index order in the w^u term.
        """
        g = self.metric.inner
        phi = self.phi.evaluate

        def wedge_pair(x: Vector, y: Vector, s: Vector, t: Vector) -> Fraction:
            return g(x, s) * g(y, t) - g(x, t) * g(y, s)

        acc = [0] * 8

        def add(scalar: Fraction, vec: Vector) -> None:
            if scalar:
                for i, c in vec.nonzero():
                    acc[i] += scalar * c

        add(-wedge_pair(a, b, u, v) - phi([a, b, u, v]), w)
        s = g(b, w)
        if s:
            add(s, self.cross3(a, u, v))
        s = g(a, w)
        if s:
            add(-s, self.cross3(b, u, v))

        add(-wedge_pair(a, b, v, w) - phi([a, b, v, w]), u)
        s = g(b, u)
        if s:
            add(s, self.cross3(a, v, w))
        s = g(a, u)
        if s:
            add(-s, self.cross3(b, v, w))

        add(-wedge_pair(a, b, w, u) - phi([a, b, w, u]), v)
        s = g(b, v)
        if s:
            add(s, self.cross3(a, w, u))
        s = g(a, v)
        if s:
            add(-s, self.cross3(b, w, u))

        return Vector(acc)


@cache
def default_cross() -> CrossProduct:
    """Cross product of the Cayley form with the identity metric."""
    return CrossProduct()


def _fuzz_vectors(count: int, seed: int = 8) -> list[Vector]:
    rng = random.Random(seed)
    return [
        Vector(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(8))
        for _ in range(count)
    ]


def verify_compatibility(
    cp: CrossProduct | None = None, fuzz: int = 100, seed: int = 8
) -> LemmaReport:
    """Check the orthogonality and norm identities on all 8^3 ordered basis
    triples plus deterministic pseudo-random rational triples."""
    cp = cp or default_cross()
    basis = [Vector.basis(8, i) for i in range(8)]
    report = LemmaReport()
    triples = [(a, b, c) for a in basis for b in basis for c in basis]
    extra = _fuzz_vectors(3 * fuzz, seed)
    triples += [tuple(extra[3 * k: 3 * k + 3]) for k in range(fuzz)]
    for a, b, c in triples:
        report.cases += 1
        res = cp.check_compatibility(a, b, c)
        if not res.ok:
            report.failures.append(
                {
                    "inputs": f"({a}; {b}; {c})",
                    "lhs": str(res.orthogonality),
                    "rhs": str(res.norm_residual),
                }
            )
    return report


def verify_composition_lemma(
    cp: CrossProduct | None = None,
    scope: str = "all-basis",
    sample_size: int = 100,
    seed: int = 8,
) -> LemmaReport:
    """Sweep the composition rule.

    ``scope="all-basis"`` checks all 8^5 = 32768 ordered basis 5-tuples,
    which by multilinearity of both sides covers all inputs; ``"sample"``
    checks deterministic pseudo-random rational 5-tuples instead.
    """
    cp = cp or default_cross()
    report = LemmaReport()
    if scope == "sample":
        vecs = _fuzz_vectors(5 * sample_size, seed)
        for k in range(sample_size):
            a, b, u, v, w = vecs[5 * k: 5 * k + 5]
            report.cases += 1
            lhs, rhs = cp.composition_sides(a, b, u, v, w)
            if lhs != rhs:
                report.failures.append(
                    {"inputs": f"({a}; {b}; {u}; {v}; {w})", "lhs": str(lhs), "rhs": str(rhs)}
                )
        return report
    if scope != "all-basis":
        raise ValueError("scope must be 'all-basis' or 'sample'")

    # Exhaustive basis sweep with precomputed basis products; identical to
    # calling cross3 directly, just without re-deriving basis values 32768
    # times.
    basis = [Vector.basis(8, i) for i in range(8)]
    ptab: dict[tuple[int, int, int], Vector] = {}
    for i in range(8):
        for j in range(8):
            for k in range(8):
                ptab[(i, j, k)] = cp.cross3(basis[i], basis[j], basis[k])
    gtab = [[cp.metric.inner(basis[i], basis[j]) for j in range(8)] for i in range(8)]
    phi_tab: dict[tuple[int, int, int, int], Fraction] = {}
    for i in range(8):
        for j in range(8):
            for k in range(8):
                for m in range(8):
                    c = cp.phi.coefficient_signed((i, j, k, m))
                    if c:
                        phi_tab[(i, j, k, m)] = c
    zero = Vector.zero(8)
    for a in range(8):
        for b in range(8):
            for u in range(8):
                gau = gtab[a][u]
                gbu = gtab[b][u]
                for v in range(8):
                    gav = gtab[a][v]
                    gbv = gtab[b][v]
                    for w in range(8):
                        report.cases += 1
                        gaw = gtab[a][w]
                        gbw = gtab[b][w]
                        inner = ptab[(u, v, w)]
                        lhs = zero
                        for m, c in inner.nonzero():
                            term = ptab[(a, b, m)]
                            lhs = lhs + (term if c == 1 else term * c)
                        acc = [0] * 8
                        c1 = -(gau * gbv - gav * gbu) - phi_tab.get((a, b, u, v), 0)
                        if c1:
                            acc[w] += c1
                        if gbw:
                            for m, c in ptab[(a, u, v)].nonzero():
                                acc[m] += gbw * c
                        if gaw:
                            for m, c in ptab[(b, u, v)].nonzero():
                                acc[m] -= gaw * c
                        c2 = -(gav * gbw - gaw * gbv) - phi_tab.get((a, b, v, w), 0)
                        if c2:
                            acc[u] += c2
                        if gbu:
                            for m, c in ptab[(a, v, w)].nonzero():
                                acc[m] += gbu * c
                        if gau:
                            for m, c in ptab[(b, v, w)].nonzero():
                                acc[m] -= gau * c
                        c3 = -(gaw * gbu - gau * gbw) - phi_tab.get((a, b, w, u), 0)
                        if c3:
                            acc[v] += c3
                        if gbv:
                            for m, c in ptab[(a, w, u)].nonzero():
                                acc[m] += gbv * c
                        if gav:
                            for m, c in ptab[(b, w, u)].nonzero():
                                acc[m] -= gav * c
                        if lhs.comps != tuple(acc):
                            report.failures.append(
                                {
                                    "inputs": f"(e{a}; e{b}; e{u}; e{v}; e{w})",
                                    "lhs": str(lhs),
                                    "rhs": str(Vector(acc)),
                                }
                            )
    return report
