"""Acceptance gate: one test per criterion, each ending in a PASS line.

Run with -s to see the lines; under plain pytest the verbose test names
serve the same purpose.  Timings are asserted where the contract pins them.
"""

import random
import time

from gromov_width.circle_action import gromov_width, product_action
from gromov_width.errors import HypothesisFailed
from gromov_width.grassmannian import GrassmannianSpec, grassmannian_action
from gromov_width.lattice import pairing, quotient_order
from gromov_width.polytope import enumerate_vertices, monotone_normalize
from gromov_width.seidel import EntryStatus, degree_check, seidel_structure
from gromov_width.toric import (
    SubcircleSpec,
    edge_cross_check,
    semifree_witness,
    toric_action,
    vertex_weights,
)

from generators import (
    random_delzant_3d,
    random_isotropy_instance,
    scrambled_monotone_2d,
)
from helpers import DATA, primitive_box, run_cli
from oracles import cramer_vertices, minor_gcd_isotropy

FIG1 = str(DATA / "fig1.json")
SIMPLEX = str(DATA / "p2_simplex.json")


def _reflexive_test_set():
    """fig1, the plane simplex, and 20 scrambled monotone polygons."""
    from gromov_width.polytope import load_polytope

    polys = [load_polytope(FIG1), load_polytope(SIMPLEX)]
    rng = random.Random(987654321)
    for _ in range(20):
        polys.append(scrambled_monotone_2d(rng)[3])
    return [monotone_normalize(p)[1] for p in polys]


def test_criterion_1_grassmannian_widths_under_a_second():
    start = time.monotonic()
    cases = 0
    for q in range(1, 9):
        for k in range(1, q + 1):
            m = k + q
            code, out = run_cli("width", "--grassmannian", f"{k},{m}")
            assert code == 0, (k, m)
            assert out.splitlines()[0] == f"Gromov width: {m}", (k, m)
            cases += 1
    elapsed = time.monotonic() - start
    assert cases == 36
    assert elapsed < 1.0, f"36 widths took {elapsed:.2f}s"
    print(f"\nPASS criterion 1: 36 Grassmannian widths equal m ({elapsed:.2f}s)")


def test_criterion_2_blowup_reproduction():
    code, out = run_cli("width", "--toric", FIG1, "--dir", "0,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Gromov width: 2"
    assert lines[1] == "H(F_max) = 2 (p23)"
    assert lines[2] == "s = 0 (p34)"

    code, out = run_cli("check", "--toric", FIG1, "--dir=-1,-2")
    assert code == 1
    assert "facet D3 isotropy order 2" in out
    assert "raw H_max - s = 1 (diagnostic only)" in out
    print("\nPASS criterion 2: blow-up width 2 and order-2 isotropy rejection")


def test_criterion_3_moment_levels_match_linear_functional():
    start = time.monotonic()
    directions = primitive_box(2, 3)
    assert len(directions) == 32
    polytopes = _reflexive_test_set()
    assert len(polytopes) == 22
    checked = 0
    for poly in polytopes:
        vertices = enumerate_vertices(poly)
        for xi in directions:
            spec = SubcircleSpec(xi, poly)
            for v in vertices:
                level = -sum(vertex_weights(spec, v))
                point = tuple(int(c) for c in v.position)
                assert level == pairing(xi, point), (xi, point)
                checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, f"criterion 3 took {elapsed:.2f}s"
    print(f"\nPASS criterion 3: <xi,v> = -m(v) at {checked} vertices "
          f"of 22 polytopes ({elapsed:.2f}s)")


def test_criterion_4_three_routes_to_each_edge_invariant():
    polytopes = _reflexive_test_set()
    semifree_cases = 0
    edges_checked = 0
    for poly in polytopes:
        for xi in primitive_box(2, 3):
            spec = SubcircleSpec(xi, poly)
            if semifree_witness(spec) is not None:
                continue
            semifree_cases += 1
            for row in edge_cross_check(spec):
                assert row.c1 == row.area == row.lattice_length
                edges_checked += 1
    assert semifree_cases >= 7, semifree_cases
    assert edges_checked >= 20, edges_checked
    print(f"\nPASS criterion 4: c1 = area = lattice length on {edges_checked} "
          f"edge spheres across {semifree_cases} semifree cases")


def test_criterion_5_product_width_is_min_of_widths():
    specs = [GrassmannianSpec(k, m)
             for m in range(2, 7) for k in range(1, m // 2 + 1)]
    assert len(specs) == 9
    widths = {(s.k, s.m): gromov_width(grassmannian_action(s)).width
              for s in specs}
    pairs = 0
    for a in specs:
        for b in specs:
            prod = product_action([grassmannian_action(a),
                                   grassmannian_action(b)])
            expect = min(widths[(a.k, a.m)], widths[(b.k, b.m)])
            assert gromov_width(prod).width == expect, (a, b)
            pairs += 1
    assert pairs == 81
    print("\nPASS criterion 5: width(A x B) = min width over 81 Grassmannian pairs")


def test_criterion_6_seidel_structures():
    g24 = grassmannian_action(GrassmannianSpec(2, 4))
    structure = seidel_structure(g24)
    assert structure.formula() == "S(φ) = [pt] ⊗ q^{−4}"
    for i in range(4):
        assert structure.status_of(i) is EntryStatus.FORCED_ZERO
    assert degree_check(structure) is True

    prod = product_action([g24, grassmannian_action(GrassmannianSpec(1, 2))])
    ps = seidel_structure(prod)
    assert ps.status_of(5) is EntryStatus.POINT_CLASS
    assert {i for i in range(6)
            if ps.status_of(i) is EntryStatus.FORCED_ZERO} == {3, 4}
    assert {i for i in range(6)
            if ps.status_of(i) is EntryStatus.UNCONSTRAINED} == {0, 1, 2}
    assert degree_check(ps) is True
    print("\nPASS criterion 6: Seidel element structure for Gr(2,4) and a product")


def test_criterion_7_randomized_oracle_agreement():
    start = time.monotonic()
    rng = random.Random(13579)
    vertex_instances = 0
    for _ in range(60):
        poly = scrambled_monotone_2d(rng)[3]
        assert {v.position for v in enumerate_vertices(poly)} == \
            cramer_vertices(poly)
        vertex_instances += 1
    for _ in range(45):
        poly = random_delzant_3d(rng)
        assert {v.position for v in enumerate_vertices(poly)} == \
            cramer_vertices(poly)
        vertex_instances += 1

    isotropy_instances = 0
    for _ in range(150):
        dim = rng.randrange(1, 5)
        xi, normals = random_isotropy_instance(rng, dim)
        assert quotient_order(xi, normals) == minor_gcd_isotropy(xi, normals)
        isotropy_instances += 1

    elapsed = time.monotonic() - start
    assert vertex_instances >= 100 and isotropy_instances >= 100
    assert elapsed < 10.0, f"criterion 7 took {elapsed:.2f}s"
    print(f"\nPASS criterion 7: {vertex_instances} vertex and "
          f"{isotropy_instances} isotropy instances agree with oracles "
          f"({elapsed:.2f}s)")


def test_criterion_8_failure_modes_and_exit_codes():
    code, out = run_cli("width", "--toric", str(DATA / "rect_2x4.json"),
                        "--dir", "1,0")
    assert code == 1
    assert out.startswith("NOT MONOTONE:")

    code, out = run_cli("width", "--toric", str(DATA / "p1xp1_square.json"),
                        "--dir", "1,0")
    assert code == 1
    assert out.startswith("MAX NOT ISOLATED: maximum component D2")

    code, out = run_cli("width", "--toric", FIG1, "--dir", "2,4")
    assert code == 2
    assert "not primitive (gcd 2)" in out

    code, _ = run_cli("width", "--toric", FIG1, "--dir", "0,1")
    assert code == 0
    print("\nPASS criterion 8: NotMonotone and non-isolated max exit 1, "
          "imprimitive direction exits 2")
