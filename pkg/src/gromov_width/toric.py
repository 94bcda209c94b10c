"""Circle actions carved out of the torus action on a monotone toric manifold.

A primitive direction xi in the torus lattice restricts the torus action to
a circle whose weight along each edge at a vertex is the pairing of xi with
the edge direction.  Fixed components are combinatorial: vertices joined by
zero-weight edges glue into groups, and each group fills the face whose
toric subvariety the subcircle fixes pointwise.  Semifreeness is decided
exactly, face by face, through lattice quotient orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circle_action import (SEMIFREE, ActionData, FixedComponent, Provenance,
                            gradient_sphere_invariants)
from .errors import (CrossCheckFailed, HypothesisFailed, InconsistentComponent,
                     InvalidInput, NotAVertex, ZeroVector)
from .lattice import Vector, as_vector, content, pairing, quotient_order
from .polytope import (DelzantPolytope, EdgeSegment, VertexFigure, _fmt_point,
                       enumerate_edges, enumerate_vertices, in_reflexive_position)


@dataclass(frozen=True)
class SubcircleSpec:
    """A primitive subcircle direction inside the torus of a reflexive polytope."""

    xi: Vector
    polytope: DelzantPolytope
    source: str = ""

    def __post_init__(self):
        xi = as_vector(self.xi)
        g = content(xi)
        if g == 0:
            raise ZeroVector("subcircle direction must be nonzero")
        if g != 1:
            raise InvalidInput(
                f"direction {_fmt_point(xi)} is not primitive (gcd {g}); "
                "it would generate a non-effective subcircle")
        if len(xi) != self.polytope.dim:
            raise InvalidInput("direction length must equal the polytope dimension")
        if not in_reflexive_position(self.polytope):
            raise InvalidInput(
                "polytope is not in reflexive position; run monotone_normalize first")
        object.__setattr__(self, "xi", xi)


def vertex_weights(spec: SubcircleSpec, vertex: VertexFigure) -> tuple[int, ...]:
    """Pairings of xi with the outgoing edge directions, zeros included."""
    known = {v.position: v for v in enumerate_vertices(spec.polytope)}
    if known.get(vertex.position) != vertex:
        raise NotAVertex(f"{_fmt_point(vertex.position)} is not a vertex of the polytope")
    return tuple(sorted(pairing(spec.xi, e) for e in vertex.edge_directions))


@dataclass(frozen=True)
class FaceIsotropy:
    face: tuple[int, ...]   # sorted facet indices cutting out the face
    order: int              # 0 means the face's stratum is fixed pointwise


@dataclass(frozen=True)
class IsotropyReport:
    entries: tuple[FaceIsotropy, ...]

    def is_semifree(self) -> bool:
        return all(e.order <= 1 for e in self.entries)

    def first_violation(self) -> FaceIsotropy | None:
        return next((e for e in self.entries if e.order > 1), None)


def isotropy_report(spec: SubcircleSpec) -> IsotropyReport:
    """Isotropy order of every face stratum, the whole polytope included.

    Entries are sorted by codimension then by facet indices, so the first
    violation is always on a face of least codimension.
    """
    vertices = enumerate_vertices(spec.polytope)
    faces: set[tuple[int, ...]] = set()
    for v in vertices:
        members = sorted(v.incident_facets)
        for bits in range(1 << len(members)):
            faces.add(tuple(m for j, m in enumerate(members) if bits >> j & 1))
    entries = []
    for face in sorted(faces, key=lambda f: (len(f), f)):
        normals = [spec.polytope.facets[i].normal for i in face]
        entries.append(FaceIsotropy(face, quotient_order(spec.xi, normals)))
    return IsotropyReport(tuple(entries))


def face_label(polytope: DelzantPolytope, face: tuple[int, ...]) -> str:
    if not face:
        return "interior"
    indices = sorted(face)
    if len(indices) == polytope.dim:
        if all(i <= 8 for i in indices):
            return "p" + "".join(str(i + 1) for i in indices)
        return "p(" + ",".join(str(i + 1) for i in indices) + ")"
    return "&".join(polytope.facet_name(i) for i in indices)


def semifree_witness(spec: SubcircleSpec) -> str | None:
    """Facet-level witness for a semifreeness failure, or None if semifree."""
    bad = isotropy_report(spec).first_violation()
    if bad is None:
        return None
    kind = "facet" if len(bad.face) == 1 else "face"
    return f"{kind} {face_label(spec.polytope, bad.face)} isotropy order {bad.order}"


def toric_action(spec: SubcircleSpec) -> ActionData:
    """Fixed-point data of the xi-subcircle on the toric manifold of the polytope.

    Vertices connected by zero-weight edges form one fixed component; the
    component fills the face common to the group, its complex dimension is
    the face dimension, and the nonzero vertex weights (which must agree
    across the group) are the normal weights.
    """
    polytope = spec.polytope
    vertices = enumerate_vertices(polytope)
    edges = enumerate_edges(polytope)
    index_of = {v.position: i for i, v in enumerate(vertices)}

    parent = list(range(len(vertices)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for edge in edges:
        if pairing(spec.xi, edge.direction) == 0:
            a, b = find(index_of[edge.tail.position]), find(index_of[edge.head.position])
            if a != b:
                parent[b] = a

    groups: dict[int, list[int]] = {}
    for i in range(len(vertices)):
        groups.setdefault(find(i), []).append(i)

    comps = []
    for members in sorted(groups.values()):
        group = [vertices[i] for i in members]
        shared = frozenset.intersection(*(v.incident_facets for v in group))
        face_dim = polytope.dim - len(shared)
        filling = [v for v in vertices if shared <= v.incident_facets]
        if len(filling) != len(group):
            raise InconsistentComponent(
                f"zero-weight group at {_fmt_point(group[0].position)} "
                "does not fill its face")
        weight_sums = {sum(pairing(spec.xi, e) for e in v.edge_directions) for v in group}
        if len(weight_sums) != 1:
            raise InconsistentComponent(
                "vertices of one fixed component report different weight sums "
                f"{sorted(weight_sums)}")
        base = group[0]
        raw = [pairing(spec.xi, e) for e in base.edge_directions]
        if raw.count(0) != face_dim:
            raise InconsistentComponent(
                f"component at {_fmt_point(base.position)}: {raw.count(0)} tangent "
                f"weights on a {face_dim}-dimensional face")
        comps.append(FixedComponent(
            label=face_label(polytope, tuple(sorted(shared))),
            complex_dim=face_dim,
            weights=tuple(sorted(w for w in raw if w != 0)),
            H=-weight_sums.pop(),
        ))
    comps.sort(key=lambda c: (-c.H, c.label))
    detail = "xi=" + _fmt_point(spec.xi).replace(" ", "")
    if spec.source:
        detail += f", polytope={spec.source}"
    return ActionData(n=polytope.dim, components=tuple(comps),
                      provenance=Provenance("toric", detail))


def _lattice_point(position) -> Vector:
    if any(c.denominator != 1 for c in position):
        raise InvalidInput(f"vertex {_fmt_point(position)} is not a lattice point")
    return tuple(int(c) for c in position)


def _vertex_component(spec: SubcircleSpec, vertex: VertexFigure, label: str) -> FixedComponent:
    raw = [pairing(spec.xi, e) for e in vertex.edge_directions]
    return FixedComponent(label=label, complex_dim=raw.count(0),
                          weights=tuple(w for w in raw if w != 0), H=-sum(raw))


@dataclass(frozen=True)
class EdgeInvariants:
    edge: EdgeSegment
    c1: int
    area: int
    lattice_length: int


def edge_cross_check(spec: SubcircleSpec) -> list[EdgeInvariants]:
    """Verify c1 = area = lattice length on every edge sphere xi rotates.

    Three independent routes to one integer: the Chern number from the vertex
    weight sums, the area from the moment values of the endpoints, and the
    lattice length from the polytope alone.  Zero-weight edges lie inside the
    fixed set and are skipped.  Requires a semifree spec.
    """
    witness = semifree_witness(spec)
    if witness is not None:
        raise HypothesisFailed(SEMIFREE, witness)
    results = []
    for edge in enumerate_edges(spec.polytope):
        w = pairing(spec.xi, edge.direction)
        if w == 0:
            continue
        lo, hi = edge.endpoints if w > 0 else (edge.endpoints[1], edge.endpoints[0])
        h_lo = pairing(spec.xi, _lattice_point(lo.position))
        h_hi = pairing(spec.xi, _lattice_point(hi.position))
        area = h_hi - h_lo
        c1, _ = gradient_sphere_invariants(
            _vertex_component(spec, lo, "x"), _vertex_component(spec, hi, "y"))
        length = edge.lattice_length
        if not (c1 == area == length):
            raise CrossCheckFailed(
                f"edge {_fmt_point(edge.tail.position)}-{_fmt_point(edge.head.position)}: "
                f"c1 = {c1}, area = {area}, lattice length = {length}")
        results.append(EdgeInvariants(edge, c1, area, int(length)))
    return results
