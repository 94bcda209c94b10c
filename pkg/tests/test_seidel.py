"""Shape of the Seidel element attached to a passing action."""

import pytest

from gromov_width.circle_action import ActionData, FixedComponent, product_action
from gromov_width.circle_action import gromov_width
from gromov_width.errors import DegreeMismatch, HypothesisFailed
from gromov_width.grassmannian import GrassmannianSpec, grassmannian_action
from gromov_width.seidel import (
    EntryStatus,
    SeidelEntry,
    SeidelStructure,
    degree_check,
    seidel_structure,
)


def blowup_action():
    return ActionData(n=2, components=(
        FixedComponent("p23", 0, (-1, -1)),
        FixedComponent("p34", 0, (-1, 1)),
        FixedComponent("D1", 1, (1,)),
    ))


def test_blowup_structure():
    structure = seidel_structure(blowup_action())
    assert (structure.n, structure.s) == (2, 0)
    assert structure.status_of(2) is EntryStatus.POINT_CLASS
    assert structure.status_of(1) is EntryStatus.FORCED_ZERO
    assert structure.status_of(0) is EntryStatus.FORCED_ZERO
    assert structure.formula() == "S(φ) = [pt] ⊗ q^{−2}"
    assert degree_check(structure) is True


def test_gr24_structure():
    structure = seidel_structure(grassmannian_action(GrassmannianSpec(2, 4)))
    assert (structure.n, structure.s) == (4, 0)
    for i in range(4):
        assert structure.status_of(i) is EntryStatus.FORCED_ZERO
    assert structure.formula() == "S(φ) = [pt] ⊗ q^{−4}"
    assert degree_check(structure) is True


def test_product_structure_keeps_low_terms():
    prod = product_action([
        grassmannian_action(GrassmannianSpec(2, 4)),
        grassmannian_action(GrassmannianSpec(1, 2)),
    ])
    structure = seidel_structure(prod)
    assert (structure.n, structure.s) == (5, 3)
    assert structure.status_of(5) is EntryStatus.POINT_CLASS
    assert structure.status_of(4) is EntryStatus.FORCED_ZERO
    assert structure.status_of(3) is EntryStatus.FORCED_ZERO
    for i in range(3):
        assert structure.status_of(i) is EntryStatus.UNCONSTRAINED, i
    assert (structure.formula()
            == "S(φ) = [pt] ⊗ q^{−5} + a_2 ⊗ q^{−2} + a_1 ⊗ q^{−1} + a_0")
    assert degree_check(structure) is True


def test_forced_zero_band_matches_width():
    for k, m in [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6)]:
        action = grassmannian_action(GrassmannianSpec(k, m))
        structure = seidel_structure(action)
        report = gromov_width(action)
        assert structure.n - structure.s == report.width
        zeros = [e.index for e in structure.entries
                 if e.status is EntryStatus.FORCED_ZERO]
        assert zeros == list(range(max(0, structure.s), structure.n))
        assert len(structure.entries) == structure.n + 1


def test_entry_bookkeeping():
    structure = seidel_structure(blowup_action())
    for entry in structure.entries:
        assert entry.cohomology_degree == 2 * entry.index
        assert entry.q_exponent == -entry.index
    with pytest.raises(DegreeMismatch):
        structure.status_of(17)


def test_structure_requires_passing_hypotheses():
    bad = ActionData(n=2, components=(
        FixedComponent("top", 0, (-1, -1)),
        FixedComponent("bad", 0, (-2, 1)),
    ))
    with pytest.raises(HypothesisFailed):
        seidel_structure(bad)


def test_degree_check_catches_bad_pairing():
    broken = SeidelStructure(n=1, s=0, entries=(
        SeidelEntry(0, EntryStatus.FORCED_ZERO, 0, 0),
        SeidelEntry(1, EntryStatus.POINT_CLASS, 4, -1),
    ))
    with pytest.raises(DegreeMismatch) as err:
        degree_check(broken)
    assert "not quantum degree 0" in str(err.value)


def test_degree_check_catches_gap():
    gappy = SeidelStructure(n=3, s=0, entries=(
        SeidelEntry(0, EntryStatus.FORCED_ZERO, 0, 0),
        SeidelEntry(2, EntryStatus.FORCED_ZERO, 4, -2),
        SeidelEntry(3, EntryStatus.POINT_CLASS, 6, -3),
    ))
    with pytest.raises(DegreeMismatch) as err:
        degree_check(gappy)
    assert "without gaps" in str(err.value)


def test_width_one_formula():
    action = ActionData(n=1, components=(
        FixedComponent("hi", 0, (-1,)),
        FixedComponent("lo", 0, (1,)),
    ))
    structure = seidel_structure(action)
    assert (structure.n, structure.s) == (1, -1)
    assert structure.formula() == "S(φ) = [pt] ⊗ q^{−1}"
    assert degree_check(structure) is True
