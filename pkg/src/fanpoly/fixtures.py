"""Builders for the small corpus of fans used in tests and examples."""

from __future__ import annotations

from .cones import Cone
from .fans import Fan, star_subdivision
from .multifans import Multifan, hypertoric_multifan, multifan_validate


def p1() -> Fan:
    """The complete fan on the line: two rays."""
    return Fan(1, [Cone(1, [(1,)]), Cone(1, [(-1,)])])


def p2() -> Fan:
    """The complete smooth fan with rays (1,0), (0,1), (-1,-1)."""
    rays = [(1, 0), (0, 1), (-1, -1)]
    cones = [Cone(2, [rays[i], rays[(i + 1) % 3]]) for i in range(3)]
    return Fan(2, cones)


def p1xp1() -> Fan:
    """The complete smooth fan on the four coordinate rays."""
    rays = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    cones = [Cone(2, [rays[i], rays[(i + 1) % 4]]) for i in range(4)]
    return Fan(2, cones)


def diamond() -> Fan:
    """The complete fan on the rays (1,1), (-1,1), (-1,-1), (1,-1).

    Simplicial but not smooth: each maximal cone has index two in its span.
    """
    rays = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
    cones = [Cone(2, [rays[i], rays[(i + 1) % 4]]) for i in range(4)]
    return Fan(2, cones)


def blp2() -> Fan:
    """p2 with the cone on (1,0), (0,1) star-subdivided at (1,1)."""
    refined, _ = star_subdivision(p2(), Cone(2, [(1, 0), (0, 1)]))
    return refined


def p2_blowup() -> tuple:
    """The refinement p2 -> blp2 together with its subdivision map."""
    base = p2()
    refined, sub = star_subdivision(base, Cone(2, [(1, 0), (0, 1)]))
    return base, refined, sub


def cube() -> Fan:
    """The complete nonsimplicial fan over the faces of the cube.

    Six cones, one over each facet of [-1,1]^3; each has four generators.
    """
    cones = []
    for axis in range(3):
        for sign in (1, -1):
            gens = []
            for a in (1, -1):
                for b in (1, -1):
                    v = [a, b]
                    v.insert(axis, sign)
                    gens.append(tuple(v))
            cones.append(Cone(3, gens))
    return Fan(3, cones)


def hypertoric_3lines_vectors():
    """Three pairwise independent vectors in Z^2 with a dependent triple."""
    return [(1, 0), (0, 1), (1, 1)]


def hypertoric_3lines() -> Multifan:
    return hypertoric_multifan(2, hypertoric_3lines_vectors())


def doubled_cone() -> Multifan:
    """Two copies of the first quadrant glued along both boundary rays.

    Not a fan: the two maximal nodes carry the same cone.  Piecewise
    polynomials on it are pairs agreeing on both axes, so its graded
    ranks exceed those of the quadrant alone from degree two on.
    """
    quadrant = Cone(2, [(1, 0), (0, 1)])
    cones = {
        "o": Cone(2, []),
        "x": Cone(2, [(1, 0)]),
        "y": Cone(2, [(0, 1)]),
        "top": quadrant,
        "bot": quadrant,
    }
    covers = [
        ("o", "x"),
        ("o", "y"),
        ("x", "top"),
        ("y", "top"),
        ("x", "bot"),
        ("y", "bot"),
    ]
    return multifan_validate(2, cones, covers)
