"""Pointed rational polyhedral cones and their character lattices.

A cone is built from integer generators in a fixed ambient lattice Z^n.
Construction canonicalizes aggressively: generators are made primitive,
deduplicated, reduced to the extremal rays, and sorted, so two descriptions
of the same cone produce identical objects and identical string ids.  The
facet description (span equations plus facet inequalities) is derived once
and drives membership, face enumeration, and intersection.

Every cone carries a quotient character lattice M_sigma = M / (sigma^perp
cap M): a projection matrix with kernel exactly sigma^perp cap M and an
integral section.  Both come from one Smith decomposition, so equal spans
give identical coordinates.  Polynomials on a cone are written in these
quotient coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import LatticeMismatch, NotAFace, NotPointed, ZeroVector
from .intlinalg import (
    IntMatrix,
    complement_projection,
    dot,
    in_row_lattice,
    kernel_lattice,
    primitive,
    rank as lattice_rank,
    saturate,
    solve_left,
)


@dataclass(frozen=True)
class QuotientCharacterLattice:
    """The character lattice of a cone's orbit: M_sigma = M / (sigma^perp cap M).

    perp_basis holds the canonical basis of sigma^perp cap M as rows;
    projection (rank x n) is a surjection M -> Z^rank with that kernel and
    section (n x rank) is an integral right inverse of it.
    """

    perp_basis: IntMatrix
    rank: int
    projection: IntMatrix
    section: IntMatrix

    @property
    def ambient_rank(self) -> int:
        return self.projection.cols

    def reduce(self, u):
        """Image of an ambient character u in quotient coordinates."""
        return self.projection.mul_vec(u)


def ambient_lattice(n: int) -> QuotientCharacterLattice:
    """M itself, viewed as the quotient lattice of a full-dimensional cone."""
    ident = IntMatrix.identity(n)
    return QuotientCharacterLattice(IntMatrix([], cols=n), n, ident, ident)


def quotient_restriction_matrix(
    src: QuotientCharacterLattice, dst: QuotientCharacterLattice
) -> IntMatrix:
    """Matrix of the induced map M_src -> M_dst on quotient coordinates.

    Defined whenever src.perp is contained in dst.perp, i.e. whenever the
    dst cone's span lies inside the src cone's span; the choice of section
    does not matter because sections differ by elements of the kernel.
    """
    if src.ambient_rank != dst.ambient_rank:
        raise LatticeMismatch("quotient lattices over different ambient lattices")
    for row in src.perp_basis.entries:
        if not in_row_lattice(dst.perp_basis, row):
            raise LatticeMismatch("no induced map: source annihilator not contained in target's")
    return dst.projection * src.section


class Cone:
    """A pointed rational polyhedral cone, canonically presented."""

    __slots__ = (
        "ambient_rank",
        "generators",
        "dim",
        "span_basis",
        "span_perp",
        "facet_normals",
        "_quotient",
        "_faces",
        "_face_keys",
    )

    def __init__(self, ambient_rank: int, generators):
        if ambient_rank < 0:
            raise ValueError("negative ambient rank")
        gens = []
        for g in generators:
            v = tuple(g)
            if len(v) != ambient_rank:
                raise ValueError(f"generator {v!r} does not have length {ambient_rank}")
            for x in v:
                if not isinstance(x, int):
                    raise TypeError("generators must be integer vectors")
            if all(x == 0 for x in v):
                raise ZeroVector("zero generator in cone input")
            gens.append(primitive(v))
        gens = sorted(set(gens))

        gmat = IntMatrix(gens, cols=ambient_rank)
        span = saturate(gmat)
        d = span.rows
        self.ambient_rank = ambient_rank
        self.dim = d
        self.span_basis = span
        self.span_perp = kernel_lattice(span)

        if d == 0:
            self.generators = ()
            self.facet_normals = ()
        else:
            coords = solve_left(span, gmat)
            assert coords is not None, "generators must lie in their own saturated span"
            local_gens = [coords.row(i) for i in range(coords.rows)]

            normals = set()
            for subset in combinations(range(len(local_gens)), d - 1):
                sub = IntMatrix([local_gens[i] for i in subset], cols=d)
                ker = kernel_lattice(sub)
                if ker.rows != 1:
                    continue
                w = ker.row(0)
                vals = [dot(w, g) for g in local_gens]
                if all(v >= 0 for v in vals):
                    normals.add(w)
                elif all(v <= 0 for v in vals):
                    normals.add(tuple(-x for x in w))
            local_normals = sorted(normals)

            if lattice_rank(IntMatrix(local_normals, cols=d)) != d:
                raise NotPointed(f"cone on {gens!r} contains a line")

            keep = []
            for g in local_gens:
                active = [w for w in local_normals if dot(w, g) == 0]
                if lattice_rank(IntMatrix(active, cols=d)) == d - 1:
                    keep.append(g)

            lift = solve_left(span.transpose(), IntMatrix.identity(d))
            assert lift is not None, "saturated spans always split"
            ambient_normals = sorted(
                tuple(dot(w, lift.column(j)) for j in range(lift.cols))
                for w in local_normals
            )

            extremal = sorted(
                {tuple(dot(g, span.column(j)) for j in range(span.cols)) for g in keep}
            )
            self.generators = tuple(extremal)
            self.facet_normals = tuple(ambient_normals)

        self._quotient = None
        self._faces = None
        self._face_keys = None

    @property
    def key(self):
        """Canonical identity: the sorted tuple of primitive extremal generators."""
        return (self.ambient_rank, self.generators)

    @property
    def id_str(self) -> str:
        if not self.generators:
            return "0"
        return ";".join(",".join(str(x) for x in g) for g in self.generators)

    def contains(self, point) -> bool:
        v = tuple(point)
        if len(v) != self.ambient_rank:
            raise ValueError("point has wrong length")
        if any(dot(k, v) != 0 for k in self.span_perp.entries):
            return False
        return all(dot(u, v) >= 0 for u in self.facet_normals)

    def contains_relint(self, point) -> bool:
        v = tuple(point)
        if self.dim == 0:
            return all(x == 0 for x in v)
        if any(dot(k, v) != 0 for k in self.span_perp.entries):
            return False
        return all(dot(u, v) > 0 for u in self.facet_normals)

    def contains_cone(self, other: "Cone") -> bool:
        if other.ambient_rank != self.ambient_rank:
            raise ValueError("ambient rank mismatch")
        return all(self.contains(g) for g in other.generators)

    def faces(self):
        """All faces, including the cone itself and the zero cone.

        Every face is the intersection with the vanishing locus of a set of
        facet normals, and is generated by the generators it contains.
        Returned sorted by (dimension, key).
        """
        if self._faces is None:
            seen = {}
            for r in range(len(self.facet_normals) + 1):
                for subset in combinations(self.facet_normals, r):
                    gens = tuple(
                        g
                        for g in self.generators
                        if all(dot(u, g) == 0 for u in subset)
                    )
                    if gens not in seen:
                        seen[gens] = None
            built = [Cone(self.ambient_rank, gens) for gens in seen]
            self._faces = tuple(sorted(built, key=lambda c: (c.dim, c.key)))
            self._face_keys = frozenset(c.key for c in self._faces)
        return self._faces

    def face_keys(self):
        if self._face_keys is None:
            self.faces()
        return self._face_keys

    def facets(self):
        return tuple(f for f in self.faces() if f.dim == self.dim - 1)

    def is_face_of(self, other: "Cone") -> bool:
        return self.key in other.face_keys()

    @property
    def quotient(self) -> QuotientCharacterLattice:
        if self._quotient is None:
            gmat = IntMatrix(self.generators, cols=self.ambient_rank)
            perp = kernel_lattice(gmat)
            q, s = complement_projection(perp)
            self._quotient = QuotientCharacterLattice(perp, self.ambient_rank - perp.rows, q, s)
        return self._quotient

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Cone({self.ambient_rank}, {list(self.generators)!r})"


def cone_from_generators(ambient_rank: int, generators) -> Cone:
    return Cone(ambient_rank, generators)


def quotient_lattice(cone: Cone) -> QuotientCharacterLattice:
    return cone.quotient


def restriction_matrix(sigma: Cone, tau: Cone) -> IntMatrix:
    """Matrix of Sym^1 M_sigma -> Sym^1 M_tau for a face tau of sigma."""
    if not tau.is_face_of(sigma):
        raise NotAFace(f"{tau!r} is not a face of {sigma!r}")
    return quotient_restriction_matrix(sigma.quotient, tau.quotient)


def intersect(c1: Cone, c2: Cone):
    """Intersection of two cones, plus whether it is a common face.

    The intersection is cut out by both spans' equations and both cones'
    facet inequalities.  Its extreme rays are found inside the joint span:
    a ray is the kernel of some rank (e-1) subset of the restricted
    inequalities, kept when the inequalities do not change sign on it.
    """
    if c1.ambient_rank != c2.ambient_rank:
        raise ValueError("ambient rank mismatch")
    n = c1.ambient_rank
    eqs = list(c1.span_perp.entries) + list(c2.span_perp.entries)
    s0 = kernel_lattice(IntMatrix(eqs, cols=n))
    e = s0.rows
    rays = []
    if e > 0:
        ineqs = sorted(
            {
                tuple(dot(u, s0.row(l)) for l in range(e))
                for u in c1.facet_normals + c2.facet_normals
            }
            - {(0,) * e}
        )
        found = set()
        for subset in combinations(ineqs, e - 1):
            ker = kernel_lattice(IntMatrix(subset, cols=e))
            if ker.rows != 1:
                continue
            w = ker.row(0)
            vals = [dot(q, w) for q in ineqs]
            if all(v >= 0 for v in vals):
                found.add(w)
            elif all(v <= 0 for v in vals):
                found.add(tuple(-x for x in w))
        for w in sorted(found):
            rays.append(tuple(dot(w, s0.column(j)) for j in range(n)))
    cone = Cone(n, rays)
    is_common_face = cone.key in c1.face_keys() and cone.key in c2.face_keys()
    return cone, is_common_face
