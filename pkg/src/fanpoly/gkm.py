"""Fixed-point description of piecewise polynomials on complete fans.

A complete fan determines a graph: one vertex per maximal cone, one edge
per wall (codimension-one face), joining the two maximal cones that meet
along it.  A tuple of global polynomials, one per vertex, is in the image
of the piecewise polynomial ring exactly when for every edge the two
endpoint polynomials restrict equally to the wall's quotient coordinates.

The point of this module is that the wall conditions alone cut out the
same lattice as the full pairwise-face conditions, and that this can be
checked exactly: both sides are kernels of integer matrices over the same
coordinate layout, so equality is a lattice comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import restriction_matrix
from .errors import NotComplete
from .fans import Fan, is_complete
from .intlinalg import IntMatrix, kernel_lattice, lattices_equal
from .polynomials import degree_matrix, monomials_of_degree
from .ppring import pp_basis


@dataclass(frozen=True)
class GKMGraph:
    """Vertices are the maximal cones of a complete fan; edges its walls.

    Each edge is a triple ``(tau, i, j)`` with ``i < j`` indexing the two
    incident maximal cones.  Edges are sorted by the wall's canonical key.
    """

    fan: Fan
    edges: tuple

    def degrees(self):
        """Number of walls on each maximal cone, in cone order."""
        out = [0] * len(self.fan.maximal_cones)
        for _, i, j in self.edges:
            out[i] += 1
            out[j] += 1
        return out


def gkm_graph(fan: Fan) -> GKMGraph:
    if not is_complete(fan):
        raise NotComplete("the fixed-point graph is defined for complete fans")
    wall_dim = fan.ambient_rank - 1
    edges = []
    for face, incident in fan.face_index.values():
        if face.dim != wall_dim:
            continue
        i, j = incident
        edges.append((face, i, j))
    edges.sort(key=lambda e: e[0].key)
    return GKMGraph(fan, tuple(edges))


def beta_system(graph: GKMGraph, k: int) -> IntMatrix:
    """Difference-of-restrictions matrix of the wall conditions in degree k.

    Columns run over the maximal cones in order, one block of degree-k
    monomial coefficients each; each edge contributes one block of rows,
    the restriction matrix of the first endpoint minus the second's.
    """
    if k < 0:
        raise ValueError("negative degree")
    fan = graph.fan
    cones = fan.maximal_cones
    width = len(monomials_of_degree(fan.ambient_rank, k))
    total = width * len(cones)
    rows = []
    for tau, i, j in graph.edges:
        ri = degree_matrix(restriction_matrix(cones[i], tau), k)
        rj = degree_matrix(restriction_matrix(cones[j], tau), k)
        for r in range(ri.rows):
            row = [0] * total
            for c in range(width):
                row[i * width + c] = ri[r, c]
                row[j * width + c] = -rj[r, c]
            rows.append(row)
    return IntMatrix(rows, cols=total)


def gkm_kernel_basis(fan: Fan, k: int) -> IntMatrix:
    """Canonical basis of the tuples satisfying all wall conditions."""
    return kernel_lattice(beta_system(gkm_graph(fan), k))


def gkm_compare(fan: Fan, k: int) -> bool:
    """Whether the wall conditions cut out exactly the piecewise ring.

    Both lattices are expressed over the same coefficient layout (every
    maximal cone of a complete fan is full-dimensional, so its quotient
    coordinates are the ambient characters), making this an exact integer
    lattice equality.
    """
    return lattices_equal(gkm_kernel_basis(fan, k), pp_basis(fan, k).coefficients)
