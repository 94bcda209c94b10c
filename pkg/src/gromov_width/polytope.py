"""Delzant moment polytopes in half-space form.

A polytope is a list of facets, each a primitive inward normal with a
rational offset (constraint <x, normal> >= offset).  Vertex and edge
enumeration run over exact rationals and verify the smoothness condition at
every vertex: exactly dim facets meet there and their normals form a Z-basis.
monotone_normalize decides whether some translation puts the polytope in
reflexive position (every offset -1, all vertices on the lattice), which is
the combinatorial face of monotonicity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from pathlib import Path
from typing import Sequence

from .errors import Empty, InvalidInput, NotDelzant, NotMonotone, Unbounded
from .lattice import Vector, as_vector, content, pairing, primitive_direction
from .serialize import fraction_from_json, fraction_to_json

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class HalfSpace:
    """Constraint <x, normal> >= offset, with a primitive inward normal."""

    normal: Vector
    offset: Fraction

    def __post_init__(self):
        normal = as_vector(self.normal)
        g = content(normal)
        if g == 0:
            raise InvalidInput("facet normal must be nonzero")
        if g != 1:
            raise InvalidInput(f"facet normal {normal} is not primitive (gcd {g})")
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", Fraction(self.offset))


@dataclass(frozen=True)
class DelzantPolytope:
    dim: int
    facets: tuple[HalfSpace, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidInput("polytope dimension must be positive")
        facets = tuple(self.facets)
        if not facets:
            raise InvalidInput("a polytope needs at least one facet")
        for f in facets:
            if len(f.normal) != self.dim:
                raise InvalidInput(
                    f"facet normal {f.normal} has length {len(f.normal)}, expected {self.dim}")
        object.__setattr__(self, "facets", facets)

    def facet_name(self, index: int) -> str:
        return f"D{index + 1}"


@dataclass(frozen=True)
class VertexFigure:
    """A vertex, its active facets, and the primitive outgoing edge directions.

    edge_directions[j] pairs to 1 with the j-th active normal (in sorted facet
    order) and to 0 with the others; it points from the vertex into the
    polytope along an edge.
    """

    position: Point
    incident_facets: frozenset[int]
    edge_directions: tuple[Vector, ...]


@dataclass(frozen=True)
class EdgeSegment:
    """A bounded 1-face; endpoints ordered lexicographically by position."""

    endpoints: tuple[VertexFigure, VertexFigure]
    direction: Vector
    lattice_length: Fraction

    @property
    def tail(self) -> VertexFigure:
        return self.endpoints[0]

    @property
    def head(self) -> VertexFigure:
        return self.endpoints[1]


def _dot(point: Sequence, vec: Sequence) -> Fraction:
    return sum((Fraction(p) * c for p, c in zip(point, vec)), Fraction(0))


def _fmt_point(point: Sequence) -> str:
    return "(" + ", ".join(str(c) for c in point) + ")"


def _solve(rows: Sequence[Sequence], rhs: Sequence, nvars: int):
    """Gauss elimination over Q.

    Returns ("unique", solution), ("inconsistent", None), or
    ("underdetermined", None).
    """
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    rank = 0
    for col in range(nvars):
        piv = next((r for r in range(rank, len(aug)) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        prow = [x / aug[rank][col] for x in aug[rank]]
        aug[rank] = prow
        for r in range(len(aug)):
            if r != rank and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], prow)]
        pivots.append(col)
        rank += 1
        if rank == len(aug):
            break
    for r in range(rank, len(aug)):
        if aug[r][nvars] != 0:
            return "inconsistent", None
    if len(pivots) < nvars:
        return "underdetermined", None
    sol = [Fraction(0)] * nvars
    for row_idx, col in enumerate(pivots):
        sol[col] = aug[row_idx][nvars]
    return "unique", sol


def _integral_inverse(rows: Sequence[Vector]) -> list[Vector] | None:
    """Columns of the inverse of a square integer matrix, or None.

    None means singular or not unimodular (a non-integral inverse).  Column j
    of the result pairs to delta_ij with rows[i].
    """
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = [x / aug[col][col] for x in aug[col]]
        aug[col] = prow
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], prow)]
    inverse = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inverse for x in row):
        return None
    return [tuple(int(inverse[i][j]) for i in range(n)) for j in range(n)]


def _feasible(facets: Sequence[HalfSpace], dim: int) -> bool:
    """Exact Fourier-Motzkin test for a nonempty half-space intersection."""
    cons = [([Fraction(c) for c in f.normal], Fraction(f.offset)) for f in facets]
    for var in range(dim):
        pos = [c for c in cons if c[0][var] > 0]
        neg = [c for c in cons if c[0][var] < 0]
        new = [c for c in cons if c[0][var] == 0]
        for ca, ba in pos:
            alpha = ca[var]
            for cb, bb in neg:
                beta = cb[var]
                coeffs = [-beta * x + alpha * y for x, y in zip(ca, cb)]
                new.append((coeffs, -beta * ba + alpha * bb))
        cons = new
    return all(b <= 0 for _, b in cons)


def enumerate_vertices(polytope: DelzantPolytope) -> list[VertexFigure]:
    """All vertices in lexicographic order, with smoothness checks.

    Every dim-subset of facets is solved exactly; a unique solution satisfying
    the remaining constraints is a vertex.  At each vertex exactly dim facets
    must be active and their normals must form a Z-basis; the edge directions
    are the columns of the inverse normal matrix.  Raises Unbounded or Empty
    when there is no vertex to report, and NotDelzant on smoothness failures.
    """
    n = polytope.dim
    facets = polytope.facets
    positions: set[Point] = set()
    for subset in combinations(range(len(facets)), n):
        status, sol = _solve([facets[i].normal for i in subset],
                             [facets[i].offset for i in subset], n)
        if status != "unique":
            continue
        point = tuple(sol)
        if all(_dot(point, f.normal) >= f.offset for f in facets):
            positions.add(point)
    if not positions:
        if _feasible(facets, n):
            raise Unbounded("no vertex: the half-space intersection is unbounded")
        raise Empty("the half-space intersection is empty")

    vertices = []
    covered: set[int] = set()
    for point in sorted(positions):
        active = [i for i, f in enumerate(facets) if _dot(point, f.normal) == f.offset]
        if len(active) != n:
            raise NotDelzant(
                f"{len(active)} facets active at vertex {_fmt_point(point)}; need exactly {n}")
        inverse_cols = _integral_inverse([facets[i].normal for i in active])
        if inverse_cols is None:
            names = ", ".join(polytope.facet_name(i) for i in active)
            raise NotDelzant(
                f"normals at vertex {_fmt_point(point)} ({names}) are not a Z-basis")
        for e in inverse_cols:
            if all(pairing(e, f.normal) >= 0 for f in facets):
                raise Unbounded(
                    f"edge ray from vertex {_fmt_point(point)} never leaves the polytope")
        covered.update(active)
        vertices.append(VertexFigure(point, frozenset(active), tuple(inverse_cols)))
    for i in range(len(facets)):
        if i not in covered:
            raise NotDelzant(f"facet {polytope.facet_name(i)} supports no vertex")
    return vertices


def _primitive_rational(diff: Point) -> tuple[Vector, Fraction]:
    """Primitive integer direction d and length t > 0 with diff = t * d."""
    denom = lcm(*(c.denominator for c in diff))
    scaled = [int(c * denom) for c in diff]
    direction = primitive_direction(scaled)
    return direction, Fraction(content(scaled), denom)


def enumerate_edges(polytope: DelzantPolytope) -> list[EdgeSegment]:
    """Every bounded 1-face once, endpoints sorted, with exact lattice length."""
    vertices = enumerate_vertices(polytope)
    by_position = {v.position: v for v in vertices}
    found: dict[tuple[Point, Point], tuple[Vector, Fraction]] = {}
    for v in vertices:
        for e in v.edge_directions:
            steps = [(f.offset - _dot(v.position, f.normal)) / pairing(e, f.normal)
                     for f in polytope.facets if pairing(e, f.normal) < 0]
            t = min(steps)
            if t <= 0:
                raise NotDelzant(f"degenerate edge at vertex {_fmt_point(v.position)}")
            other = tuple(p + t * c for p, c in zip(v.position, e))
            if other not in by_position:
                raise NotDelzant(
                    f"edge from {_fmt_point(v.position)} ends at the non-vertex "
                    f"{_fmt_point(other)}")
            key = (v.position, other) if v.position < other else (other, v.position)
            direction, length = _primitive_rational(
                tuple(b - a for a, b in zip(key[0], key[1])))
            prior = found.get(key)
            if prior is not None and prior != (direction, length):
                raise NotDelzant(f"edge {_fmt_point(key[0])}-{_fmt_point(key[1])} "
                                 "reconstructed inconsistently from its endpoints")
            found[key] = (direction, length)
    return [EdgeSegment((by_position[k[0]], by_position[k[1]]), direction, length)
            for k, (direction, length) in sorted(found.items())]


def monotone_normalize(polytope: DelzantPolytope) -> tuple[Point, DelzantPolytope]:
    """The translation taking every facet offset to -1, plus the translated polytope.

    Raises NotMonotone when no such translation exists or when a translated
    vertex misses the lattice (reflexive position must be a lattice polytope).
    """
    vertices = enumerate_vertices(polytope)
    status, sol = _solve([f.normal for f in polytope.facets],
                         [Fraction(-1) - f.offset for f in polytope.facets],
                         polytope.dim)
    if status != "unique":
        raise NotMonotone("no translation takes every facet offset to -1")
    translation = tuple(sol)
    for v in vertices:
        shifted = tuple(p + t for p, t in zip(v.position, translation))
        if any(c.denominator != 1 for c in shifted):
            raise NotMonotone(
                f"vertex {_fmt_point(v.position)} translates to the non-lattice "
                f"point {_fmt_point(shifted)}")
    reflexive = DelzantPolytope(
        polytope.dim,
        tuple(HalfSpace(f.normal, Fraction(-1)) for f in polytope.facets))
    return translation, reflexive


def in_reflexive_position(polytope: DelzantPolytope) -> bool:
    return all(f.offset == -1 for f in polytope.facets)


def polytope_from_json(data) -> DelzantPolytope:
    """Parse {"dim": n, "facets": [{"normal": [...], "offset": ...}, ...]}."""
    if not isinstance(data, dict):
        raise InvalidInput("polytope JSON must be an object")
    if "dim" not in data or "facets" not in data:
        raise InvalidInput('polytope JSON needs "dim" and "facets" keys')
    dim = data["dim"]
    facets = data["facets"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise InvalidInput('"dim" must be an integer')
    if not isinstance(facets, list) or not facets:
        raise InvalidInput('"facets" must be a nonempty list')
    halves = []
    for entry in facets:
        if not isinstance(entry, dict) or "normal" not in entry or "offset" not in entry:
            raise InvalidInput(f'each facet needs "normal" and "offset": {entry!r}')
        normal = entry["normal"]
        if (not isinstance(normal, list)
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in normal)):
            raise InvalidInput(f'facet "normal" must be a list of integers: {normal!r}')
        halves.append(HalfSpace(tuple(normal), fraction_from_json(entry["offset"])))
    return DelzantPolytope(dim, tuple(halves))


def load_polytope(path) -> DelzantPolytope:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: invalid JSON ({exc})") from exc
    return polytope_from_json(data)


def polytope_to_json(polytope: DelzantPolytope) -> dict:
    return {
        "dim": polytope.dim,
        "facets": [{"normal": list(f.normal), "offset": fraction_to_json(f.offset)}
                   for f in polytope.facets],
    }
