"""Piecewise polynomials indexed by a poset of cones.

A multifan keeps the local data of a fan but drops the condition that
cones meet along common faces.  It is a finite poset together with a cone
for each node, such that the nodes below any given node correspond one to
one with the faces of its cone.  Distinct nodes may carry the same cone,
and cones of incomparable nodes may overlap arbitrarily: the poset, not
the geometry, decides which compatibilities are imposed.

A piecewise polynomial assigns a polynomial to every maximal node.  Two
maximal nodes interact only through their common lower nodes, and by
transitivity of restriction it is enough to impose agreement on the
maximal ones among those.
"""

from __future__ import annotations

from itertools import combinations

from .cones import Cone, cone_from_generators, restriction_matrix
from .errors import (
    FaceBijectionFailure,
    FanMismatch,
    Incompatible,
    LatticeMismatch,
    NotAPoset,
)
from .fans import Fan
from .intlinalg import IntMatrix, kernel_lattice, rank as matrix_rank
from .polynomials import LocalPolynomial, degree_matrix, monomials_of_degree, restrict_to_face
from .ppring import GradedBasis, PPElement


class Multifan:
    """A finite poset of nodes, each labeled with a cone.

    Build through :func:`multifan_validate`, which checks the poset and
    the face-bijection condition at every node.
    """

    __slots__ = ("ambient_rank", "node_ids", "cones", "lower", "maximal_ids")

    def __init__(self, ambient_rank, node_ids, cones, lower, maximal_ids):
        self.ambient_rank = ambient_rank
        self.node_ids = node_ids
        self.cones = cones
        self.lower = lower
        self.maximal_ids = maximal_ids

    def cone_of(self, node_id: str) -> Cone:
        return self.cones[node_id]

    def leq(self, a: str, b: str) -> bool:
        return a in self.lower[b]

    def common_lower(self, a: str, b: str):
        return self.lower[a] & self.lower[b]

    def maximal_common_lower(self, a: str, b: str):
        """Nodes below both a and b that are maximal among those."""
        shared = self.common_lower(a, b)
        out = [
            c
            for c in shared
            if not any(d != c and c in self.lower[d] for d in shared)
        ]
        return tuple(sorted(out))

    def __eq__(self, other):
        if not isinstance(other, Multifan):
            return NotImplemented
        return (
            self.ambient_rank == other.ambient_rank
            and self.cones == other.cones
            and self.lower == other.lower
        )

    def __hash__(self):
        return hash(
            (
                self.ambient_rank,
                tuple(sorted((k, c.key) for k, c in self.cones.items())),
                tuple(sorted((k, tuple(sorted(v))) for k, v in self.lower.items())),
            )
        )

    def __repr__(self):
        return (
            f"Multifan(rank={self.ambient_rank}, nodes={len(self.node_ids)}, "
            f"maximal={len(self.maximal_ids)})"
        )


def multifan_validate(ambient_rank: int, cones, covers) -> Multifan:
    """Build a multifan from labeled nodes and covering relations.

    ``cones`` maps node ids to Cone instances of the given ambient rank;
    ``covers`` lists pairs ``(lower_id, upper_id)``.  The partial order is
    the transitive closure.  Cycles and unknown ids raise NotAPoset; a
    node whose lower set does not match the faces of its cone raises
    FaceBijectionFailure.
    """
    cones = dict(cones)
    for nid, cone in cones.items():
        if not isinstance(cone, Cone):
            raise TypeError(f"node {nid!r} is not labeled with a Cone")
        if cone.ambient_rank != ambient_rank:
            raise FanMismatch(
                f"node {nid!r} has ambient rank {cone.ambient_rank}, expected {ambient_rank}"
            )
    children: dict = {nid: set() for nid in cones}
    parents: dict = {nid: set() for nid in cones}
    for low, high in covers:
        if low not in cones or high not in cones:
            raise NotAPoset(f"cover ({low!r}, {high!r}) names an unknown node")
        if low == high:
            raise NotAPoset(f"node {low!r} covers itself")
        children[high].add(low)
        parents[low].add(high)

    # transitive closure by walking nodes bottom-up; a cycle leaves nodes
    # that can never be finished
    lower: dict = {}
    pending = {nid: len(children[nid]) for nid in cones}
    ready = [nid for nid, n in pending.items() if n == 0]
    while ready:
        nid = ready.pop()
        down = {nid}
        for c in children[nid]:
            down |= lower[c]
        lower[nid] = frozenset(down)
        for p in parents[nid]:
            pending[p] -= 1
            if pending[p] == 0:
                ready.append(p)
    if len(lower) != len(cones):
        stuck = sorted(set(cones) - set(lower))
        raise NotAPoset(f"covering relation has a cycle through {stuck}")

    for nid, cone in cones.items():
        below = lower[nid]
        face_keys = {f.key for f in cone.faces()}
        seen = {}
        for b in below:
            k = cones[b].key
            if k not in face_keys:
                raise FaceBijectionFailure(
                    nid, f"node {b!r} below it is not labeled with a face of its cone"
                )
            if k in seen:
                raise FaceBijectionFailure(
                    nid, f"nodes {seen[k]!r} and {b!r} below it carry the same face"
                )
            seen[k] = b
        if len(below) != len(face_keys):
            raise FaceBijectionFailure(
                nid,
                f"{len(below)} nodes below it, but its cone has {len(face_keys)} faces",
            )

    node_ids = tuple(sorted(cones))
    maximal = tuple(sorted(nid for nid in cones if not parents[nid]))
    return Multifan(ambient_rank, node_ids, cones, lower, maximal)


def multifan_from_fan(fan: Fan) -> Multifan:
    """The multifan of a fan: all its cones, ordered by the facet relation."""
    cones = {}
    covers = []
    for face, _ in fan.face_index.values():
        cones[face.id_str] = face
    for face in cones.values():
        for facet in face.facets():
            covers.append((facet.id_str, face.id_str))
    return multifan_validate(fan.ambient_rank, cones, covers)


def hypertoric_multifan(ambient_rank: int, vectors) -> Multifan:
    """The multifan of independent subsets of a vector configuration.

    Nodes are the linearly independent subsets of the given vectors,
    ordered by inclusion and labeled with the cones they span.  Node ids
    are the 1-based index sets, written like ``{1,3}``.
    """
    vecs = [tuple(v) for v in vectors]
    cones = {}
    covers = []
    subset_id = {}

    def name(indices):
        return "{" + ",".join(str(i + 1) for i in sorted(indices)) + "}"

    independent = [()]
    cones[name(())] = cone_from_generators(ambient_rank, [])
    subset_id[()] = name(())
    for size in range(1, len(vecs) + 1):
        found = []
        for sub in combinations(range(len(vecs)), size):
            if sub[:-1] not in subset_id:
                continue
            chosen = [vecs[i] for i in sub]
            if matrix_rank(IntMatrix(chosen, cols=ambient_rank)) != size:
                continue
            nid = name(sub)
            cones[nid] = cone_from_generators(ambient_rank, chosen)
            subset_id[sub] = nid
            found.append(sub)
        if not found:
            break
        independent.extend(found)
    for sub in independent:
        for drop in range(len(sub)):
            smaller = sub[:drop] + sub[drop + 1 :]
            covers.append((subset_id[smaller], subset_id[sub]))
    return multifan_validate(ambient_rank, cones, covers)


def _maximal_pairs(mf: Multifan):
    for a, b in combinations(mf.maximal_ids, 2):
        shared = mf.maximal_common_lower(a, b)
        if shared:
            yield a, b, shared


def mpp_validate(mf: Multifan, parts) -> PPElement:
    """Check a family over the maximal nodes on all shared lower nodes."""
    want = set(mf.maximal_ids)
    if set(parts) != want:
        missing = sorted(want - set(parts))
        extra = sorted(set(parts) - want)
        raise FanMismatch(
            f"part keys do not match maximal nodes (missing {missing}, extra {extra})"
        )
    for nid, poly in parts.items():
        if not isinstance(poly, LocalPolynomial):
            raise TypeError(f"part {nid} is not a LocalPolynomial")
        if poly.lattice != mf.cone_of(nid).quotient:
            raise LatticeMismatch(f"part {nid} is not in its node's quotient coordinates")
    for a, b, shared in _maximal_pairs(mf):
        for c in shared:
            tau = mf.cone_of(c)
            fa = restrict_to_face(parts[a], mf.cone_of(a), tau)
            fb = restrict_to_face(parts[b], mf.cone_of(b), tau)
            if fa != fb:
                raise Incompatible(a, b, c, f"{fa!r} != {fb!r}")
    return PPElement(mf, parts)


def mpp_basis(mf: Multifan, k: int) -> GradedBasis:
    """Canonical lattice basis of the degree-k piecewise polynomials."""
    if k < 0:
        raise ValueError("negative degree")
    layout = []
    offsets = {}
    total = 0
    for nid in mf.maximal_ids:
        monos = monomials_of_degree(mf.cone_of(nid).quotient.rank, k)
        offsets[nid] = total
        layout.append((nid, monos))
        total += len(monos)

    rows = []
    for a, b, shared in _maximal_pairs(mf):
        for c in shared:
            tau = mf.cone_of(c)
            ra = degree_matrix(restriction_matrix(mf.cone_of(a), tau), k)
            rb = degree_matrix(restriction_matrix(mf.cone_of(b), tau), k)
            for r in range(ra.rows):
                row = [0] * total
                for col in range(ra.cols):
                    row[offsets[a] + col] = ra[r, col]
                for col in range(rb.cols):
                    row[offsets[b] + col] = -rb[r, col]
                rows.append(row)
    kernel = kernel_lattice(IntMatrix(rows, cols=total))

    elements = []
    for i in range(kernel.rows):
        vec = kernel.row(i)
        parts = {}
        for nid, monos in layout:
            off = offsets[nid]
            terms = {m: vec[off + t] for t, m in enumerate(monos)}
            parts[nid] = LocalPolynomial(mf.cone_of(nid).quotient, terms)
        elements.append(PPElement(mf, parts))
    return GradedBasis(
        degree=k,
        elements=tuple(elements),
        rank=kernel.rows,
        coefficients=kernel,
        layout=tuple(layout),
    )
