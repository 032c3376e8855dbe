"""The graded ring of integral piecewise polynomial functions on a fan.

An element assigns to every maximal cone a polynomial in that cone's
quotient character coordinates; the defining condition is that the
polynomials on any two maximal cones restrict equally to their common
face.  Checking all pairwise common faces is enough: restriction to a
smaller face factors through any intermediate one.

Graded pieces are computed exactly as integer kernel lattices.  Unknowns
are the degree-k coefficients of all maximal cones in canonical monomial
order; each shared face contributes rows (restriction from one side minus
restriction from the other), and the canonical kernel basis of that system
is the basis of the degree-k piece.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import Cone, quotient_restriction_matrix, restriction_matrix
from .errors import ConeNotInFan, FanMismatch, Incompatible, LatticeMismatch
from .fans import Fan, SubdivisionMap
from .intlinalg import IntMatrix, in_row_lattice, kernel_lattice
from .polynomials import (
    LocalPolynomial,
    degree_matrix,
    integrality_certificate,
    monomials_of_degree,
    restrict_to_face,
)


class PPElement:
    """A piecewise polynomial: one local polynomial per maximal cone.

    ``parts`` is keyed by the cone id strings of the container, which is a
    Fan here (multifans reuse the same class with node ids as keys).
    """

    __slots__ = ("fan", "parts")

    def __init__(self, fan, parts):
        self.fan = fan
        self.parts = dict(sorted(parts.items()))

    @property
    def degree(self) -> int:
        return max((p.degree for p in self.parts.values()), default=0)

    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.parts.values())

    def __eq__(self, other):
        if not isinstance(other, PPElement):
            return NotImplemented
        return self.fan == other.fan and self.parts == other.parts

    def __repr__(self):
        inner = ", ".join(f"{k}: {p!r}" for k, p in self.parts.items())
        return f"PPElement({inner})"


def pp_validate(fan: Fan, parts) -> PPElement:
    """Check compatibility on all shared faces and wrap into a PPElement.

    ``parts`` maps each maximal cone id to a LocalPolynomial over that
    cone's quotient lattice.  Missing or extra keys, wrong lattices, and
    any failed restriction test raise.
    """
    want = {c.id_str: c for c in fan.maximal_cones}
    got = set(parts)
    if got != set(want):
        missing = sorted(set(want) - got)
        extra = sorted(got - set(want))
        raise FanMismatch(f"part keys do not match maximal cones (missing {missing}, extra {extra})")
    for cid, poly in parts.items():
        if not isinstance(poly, LocalPolynomial):
            raise TypeError(f"part {cid} is not a LocalPolynomial")
        if poly.lattice != want[cid].quotient:
            raise LatticeMismatch(f"part {cid} is not in the cone's quotient coordinates")
    cones = fan.maximal_cones
    for (i, j), tau in fan.pair_faces.items():
        a = restrict_to_face(parts[cones[i].id_str], cones[i], tau)
        b = restrict_to_face(parts[cones[j].id_str], cones[j], tau)
        if a != b:
            raise Incompatible(
                cones[i].id_str,
                cones[j].id_str,
                tau.id_str,
                f"{a!r} != {b!r}",
            )
    return PPElement(fan, parts)


def pp_constant(fan, c: int) -> PPElement:
    parts = {
        cone.id_str: LocalPolynomial.constant(cone.quotient, c)
        for cone in fan.maximal_cones
    }
    return PPElement(fan, parts)


def _check_same_fan(a: PPElement, b: PPElement):
    if a.fan != b.fan:
        raise FanMismatch("elements live on different fans")
    if set(a.parts) != set(b.parts):
        raise FanMismatch("elements carry different part keys")


def pp_add(a: PPElement, b: PPElement) -> PPElement:
    _check_same_fan(a, b)
    return PPElement(a.fan, {k: a.parts[k] + b.parts[k] for k in a.parts})


def pp_sub(a: PPElement, b: PPElement) -> PPElement:
    _check_same_fan(a, b)
    return PPElement(a.fan, {k: a.parts[k] - b.parts[k] for k in a.parts})


def pp_mul(a: PPElement, b: PPElement) -> PPElement:
    _check_same_fan(a, b)
    return PPElement(a.fan, {k: a.parts[k] * b.parts[k] for k in a.parts})


def pp_scale(c: int, a: PPElement) -> PPElement:
    if not isinstance(c, int):
        raise TypeError("piecewise polynomials form a ring over the integers")
    return PPElement(a.fan, {k: p.scale(c) for k, p in a.parts.items()})


@dataclass(frozen=True)
class GradedBasis:
    """A lattice basis of one graded piece.

    ``coefficients`` holds the basis elements as rows of coefficient
    vectors; ``layout`` records, per part id, the monomials its coordinate
    block runs over, in order.
    """

    degree: int
    elements: tuple
    rank: int
    coefficients: IntMatrix
    layout: tuple

    def coefficient_vector(self, elem: PPElement):
        out = []
        for part_id, monos in self.layout:
            poly = elem.parts[part_id]
            out.extend(poly.coefficient(m) for m in monos)
        return tuple(out)

    def contains(self, elem: PPElement) -> bool:
        return in_row_lattice(self.coefficients, self.coefficient_vector(elem))


def pp_basis(fan: Fan, k: int) -> GradedBasis:
    """Canonical lattice basis of the degree-k piecewise polynomials."""
    if k < 0:
        raise ValueError("negative degree")
    cones = fan.maximal_cones
    layout = []
    offsets = []
    total = 0
    for c in cones:
        monos = monomials_of_degree(c.quotient.rank, k)
        offsets.append(total)
        layout.append((c.id_str, monos))
        total += len(monos)

    rows = []
    for (i, j), tau in fan.pair_faces.items():
        ri = degree_matrix(restriction_matrix(cones[i], tau), k)
        rj = degree_matrix(restriction_matrix(cones[j], tau), k)
        for r in range(ri.rows):
            row = [0] * total
            for c in range(ri.cols):
                row[offsets[i] + c] = ri[r, c]
            for c in range(rj.cols):
                row[offsets[j] + c] = -rj[r, c]
            rows.append(row)
    kernel = kernel_lattice(IntMatrix(rows, cols=total))

    elements = []
    for b in range(kernel.rows):
        vec = kernel.row(b)
        parts = {}
        for (cid, monos), off, cone in zip(layout, offsets, cones):
            terms = {m: vec[off + t] for t, m in enumerate(monos)}
            parts[cid] = LocalPolynomial(cone.quotient, terms)
        elements.append(PPElement(fan, parts))
    return GradedBasis(
        degree=k,
        elements=tuple(elements),
        rank=kernel.rows,
        coefficients=kernel,
        layout=tuple(layout),
    )


def pp_restrict_orbit(a: PPElement, sigma: Cone) -> LocalPolynomial:
    """Restrict a piecewise polynomial to a single cone of its fan."""
    fan = a.fan
    entry = fan.face_index.get(sigma.key)
    if entry is None:
        raise ConeNotInFan(f"cone {sigma.id_str} is not in the fan")
    sigma = entry[0]
    i = entry[1][0]
    top = fan.maximal_cones[i]
    return restrict_to_face(a.parts[top.id_str], top, sigma)


def pp_pullback(m: SubdivisionMap, a: PPElement) -> PPElement:
    """Pull a piecewise polynomial back along a subdivision."""
    if a.fan != m.target:
        raise FanMismatch("element does not live on the subdivision's target fan")
    parts = {}
    for src in m.source.maximal_cones:
        tgt = m.target.cone_by_id(m.assignment[src.id_str])
        f = pp_restrict_orbit(a, tgt)
        r = quotient_restriction_matrix(tgt.quotient, src.quotient)
        parts[src.id_str] = f.substitute(r, src.quotient)
    return PPElement(m.source, parts)


@dataclass(frozen=True)
class PullbackReport:
    """Why an element failed to descend along a subdivision."""

    cone_id: str
    condition: str
    detail: str


def pp_is_pullback(m: SubdivisionMap, a: PPElement):
    """Decide whether an element of the refinement descends to the target.

    Returns ``(element_on_target, None)`` on success or ``(None, report)``
    naming the maximal target cone and the condition that failed: the
    assigned subcones must all carry the same polynomial, and that
    polynomial must have integer coefficients in the target cone's
    coordinates.
    """
    if a.fan != m.source:
        raise FanMismatch("element does not live on the subdivision's source fan")
    grouped: dict = {}
    for src_id, tgt_id in m.assignment.items():
        grouped.setdefault(tgt_id, []).append(src_id)
    parts = {}
    for sigma in m.target.maximal_cones:
        assigned = grouped.get(sigma.id_str, [])
        assert assigned, "subdivision validation guarantees coverage"
        candidate = a.parts[assigned[0]]
        assert candidate.lattice == sigma.quotient, (
            "full-dimensional subcones share the target cone's span"
        )
        for other in assigned[1:]:
            if a.parts[other] != candidate:
                return None, PullbackReport(
                    cone_id=sigma.id_str,
                    condition="same-polynomial",
                    detail=(
                        f"subcones {assigned[0]} and {other} carry different polynomials"
                    ),
                )
        witness, bad = integrality_certificate(candidate.to_rational())
        if witness is None:
            return None, PullbackReport(
                cone_id=sigma.id_str,
                condition="integrality",
                detail=f"non-integer coefficients {bad!r}",
            )
        parts[sigma.id_str] = witness
    return pp_validate(m.target, parts), None
