"""Characteristic classes of sums of equivariant line bundles.

The input datum is one multiset of characters per maximal cone, written in
that cone's quotient coordinates; compatibility means the multisets agree
after restriction to every shared face.  The i-th class is the piecewise
polynomial whose part on each cone is the i-th elementary symmetric
polynomial of the cone's characters.  Compatibility of the multisets makes
these parts agree on shared faces, which is re-checked exactly on
assembly.
"""

from __future__ import annotations

from .cones import restriction_matrix
from .errors import FanMismatch, IncompatibleMultisets, IndexOutOfRange
from .fans import Fan
from .polynomials import LocalPolynomial, elementary_symmetric
from .ppring import PPElement, pp_validate


class BundleData:
    """Compatible character multisets on the maximal cones of a fan."""

    __slots__ = ("fan", "characters", "rank")

    def __init__(self, fan: Fan, characters, rank: int):
        self.fan = fan
        self.characters = dict(sorted(characters.items()))
        self.rank = rank

    def __eq__(self, other):
        if not isinstance(other, BundleData):
            return NotImplemented
        return self.fan == other.fan and self.characters == other.characters

    def __repr__(self):
        return f"BundleData(rank={self.rank}, cones={len(self.characters)})"


def bundle_validate(fan: Fan, data) -> BundleData:
    """Check one character multiset per maximal cone for compatibility.

    ``data`` maps cone ids to sequences of integer vectors, each written
    in the cone's quotient coordinates.  Multisets are kept in sorted
    order, so the order they are given in does not matter.
    """
    want = {c.id_str: c for c in fan.maximal_cones}
    if set(data) != set(want):
        raise FanMismatch("bundle data keys do not match the maximal cones")
    characters = {}
    sizes = set()
    for cid, vectors in data.items():
        cone = want[cid]
        cleaned = []
        for u in vectors:
            u = tuple(u)
            if len(u) != cone.quotient.rank:
                raise ValueError(
                    f"character {u!r} on cone {cid} has length {len(u)}, "
                    f"expected {cone.quotient.rank}"
                )
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in u):
                raise ValueError(f"character {u!r} on cone {cid} is not integral")
            cleaned.append(u)
        characters[cid] = tuple(sorted(cleaned))
        sizes.add(len(cleaned))
    if len(sizes) > 1:
        raise ValueError(f"bundle rank is ambiguous: multiset sizes {sorted(sizes)}")
    rank = sizes.pop() if sizes else 0

    cones = fan.maximal_cones
    for (i, j), tau in fan.pair_faces.items():
        ri = restriction_matrix(cones[i], tau)
        rj = restriction_matrix(cones[j], tau)
        left = sorted(ri.mul_vec(u) for u in characters[cones[i].id_str])
        right = sorted(rj.mul_vec(u) for u in characters[cones[j].id_str])
        if left != right:
            raise IncompatibleMultisets(cones[i].id_str, cones[j].id_str, tau.id_str)
    return BundleData(fan, characters, rank)


def bundle_sum(a: BundleData, b: BundleData) -> BundleData:
    if a.fan != b.fan:
        raise FanMismatch("bundles live on different fans")
    merged = {
        cid: tuple(sorted(a.characters[cid] + b.characters[cid]))
        for cid in a.characters
    }
    return BundleData(a.fan, merged, a.rank + b.rank)


def chern_class(bundle: BundleData, i: int) -> PPElement:
    """The i-th characteristic class as a piecewise polynomial."""
    if not 0 <= i <= bundle.rank:
        raise IndexOutOfRange(f"class index {i} out of range 0..{bundle.rank}")
    parts = {}
    for cone in bundle.fan.maximal_cones:
        cid = cone.id_str
        if i == 0:
            parts[cid] = LocalPolynomial.constant(cone.quotient, 1)
            continue
        classes = [
            LocalPolynomial.linear_form(cone.quotient, u)
            for u in bundle.characters[cid]
        ]
        parts[cid] = elementary_symmetric(classes, i)
    return pp_validate(bundle.fan, parts)


def total_chern(bundle: BundleData):
    """All classes c_0 .. c_rank, in order."""
    return tuple(chern_class(bundle, i) for i in range(bundle.rank + 1))
