"""Fixed-point data of Hamiltonian circle actions and the width computation.

The model is small on purpose: a fixed component carries its complex
dimension and the multiset of nonzero isotropy weights on the directions
normal to it.  The moment map is normalized so that H equals minus the
weight sum on every component; with that choice a gradient sphere's Chern
number and symplectic area are the same integer, and once the hypothesis
checks pass the width is the gap between the two highest moment levels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from itertools import product as cartesian
from pathlib import Path
from typing import Sequence

from .errors import (AmbiguousMax, CrossCheckFailed, EmptyProduct, HypothesisFailed,
                     InvalidInput, NotEnoughComponents, NotOrdered)

SEMIFREE = "semifree"
ISOLATED_MAX = "isolated-max"
MONOTONE_CONSISTENCY = "monotone-consistency"
ALL_CHECKS = (SEMIFREE, ISOLATED_MAX, MONOTONE_CONSISTENCY)


@dataclass(frozen=True)
class FixedComponent:
    """One connected component of the fixed-point set.

    weights lists only the nonzero isotropy weights; the complex_dim zero
    weights along the component itself are implied, so
    len(weights) + complex_dim is the half-dimension of the ambient manifold.
    H is minus the weight sum once the action is moment-normalized.
    """

    label: str
    complex_dim: int
    weights: tuple[int, ...]
    H: int | None = None

    def __post_init__(self):
        if not self.label:
            raise InvalidInput("fixed components need a nonempty label")
        if not isinstance(self.complex_dim, int) or self.complex_dim < 0:
            raise InvalidInput(f"{self.label}: complex_dim must be a nonnegative integer")
        weights = tuple(sorted(self.weights))
        for w in weights:
            if not isinstance(w, int) or isinstance(w, bool) or w == 0:
                raise InvalidInput(
                    f"{self.label}: weights must be nonzero integers, got {w!r}")
        object.__setattr__(self, "weights", weights)

    @property
    def weight_sum(self) -> int:
        return sum(self.weights)


@dataclass(frozen=True)
class Provenance:
    kind: str
    detail: str = ""
    children: tuple["Provenance", ...] = ()

    def describe(self) -> str:
        if self.children:
            return self.kind + "(" + ", ".join(c.describe() for c in self.children) + ")"
        if self.detail:
            return f"{self.kind}({self.detail})"
        return self.kind


ABSTRACT_INPUT = Provenance("abstract-input")


@dataclass(frozen=True)
class ActionData:
    """Half-dimension n plus the list of fixed components.

    Whether each component's weight count is consistent with n is the job of
    check_monotone_consistency, not the constructor: inconsistent claims must
    surface as check failures, not construction errors.
    """

    n: int
    components: tuple[FixedComponent, ...]
    provenance: Provenance = ABSTRACT_INPUT

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput("half-dimension n must be a positive integer")
        comps = tuple(self.components)
        if not comps:
            raise InvalidInput("at least one fixed component is required")
        labels = [c.label for c in comps]
        if len(set(labels)) != len(labels):
            dup = next(l for l in labels if labels.count(l) > 1)
            raise InvalidInput(f"duplicate component label {dup!r}")
        object.__setattr__(self, "components", comps)

    @property
    def normalized(self) -> bool:
        return all(c.H is not None for c in self.components)


def normalize_moment(action: ActionData) -> ActionData:
    """Set H = -(weight sum) on every component; input H is never trusted."""
    comps = tuple(replace(c, H=-c.weight_sum) for c in action.components)
    return replace(action, components=comps)


def _require_normalized(action: ActionData) -> None:
    if not action.normalized:
        raise InvalidInput("action is not moment-normalized; call normalize_moment first")


def _levels_desc(action: ActionData) -> list[int]:
    return sorted({c.H for c in action.components}, reverse=True)


def _max_component(action: ActionData) -> FixedComponent:
    top = max(c.H for c in action.components)
    at_top = [c for c in action.components if c.H == top]
    if len(at_top) > 1:
        names = " and ".join(sorted(c.label for c in at_top))
        raise AmbiguousMax(f"components {names} both sit at the maximal level H = {top}")
    return at_top[0]


def raw_level_gap(action: ActionData) -> int | None:
    """Gap between the two highest moment levels; None with a single level.

    Diagnostic companion to hypothesis failures: it is what the width formula
    would print, but it is only a width when every check passes.
    """
    _require_normalized(action)
    levels = _levels_desc(action)
    if len(levels) < 2:
        return None
    return levels[0] - levels[1]


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    witness: str | None = None


def check_semifree(action: ActionData) -> CheckResult:
    """Pass iff every recorded weight is -1 or +1."""
    _require_normalized(action)
    for comp in action.components:
        for w in comp.weights:
            if w not in (-1, 1):
                return CheckResult(SEMIFREE, False,
                                   f"component {comp.label} has weight {w}")
    return CheckResult(SEMIFREE, True)


def check_isolated_max(action: ActionData) -> CheckResult:
    """Pass iff the unique top component is a point with all weights -1."""
    _require_normalized(action)
    top = _max_component(action)
    if top.complex_dim != 0:
        return CheckResult(ISOLATED_MAX, False,
                           f"maximum component {top.label} has complex_dim {top.complex_dim}")
    bad = next((w for w in top.weights if w != -1), None)
    if bad is not None:
        return CheckResult(ISOLATED_MAX, False,
                           f"maximum component {top.label} has weight {bad}")
    return CheckResult(ISOLATED_MAX, True)


def check_monotone_consistency(action: ActionData) -> CheckResult:
    """Pass iff the weight counts match n and the top level equals n.

    H values are integral by construction (weights are integers), so the
    content of this check is the cross-check of the claimed n against the
    weight data.
    """
    _require_normalized(action)
    for comp in action.components:
        if len(comp.weights) + comp.complex_dim != action.n:
            return CheckResult(
                MONOTONE_CONSISTENCY, False,
                f"component {comp.label}: {len(comp.weights)} weights + complex_dim "
                f"{comp.complex_dim} != n = {action.n}")
    top = _max_component(action)
    if top.H != action.n:
        return CheckResult(MONOTONE_CONSISTENCY, False,
                           f"H(F_max) = {top.H} but n = {action.n}")
    return CheckResult(MONOTONE_CONSISTENCY, True)


def run_all_checks(action: ActionData) -> list[CheckResult]:
    action = normalize_moment(action)
    return [check_semifree(action),
            check_isolated_max(action),
            check_monotone_consistency(action)]


@dataclass(frozen=True)
class WidthReport:
    width: int
    H_max: int
    s: int
    max_component: str
    second_level_components: tuple[str, ...]
    hypothesis_log: tuple[str, ...]


def gromov_width(action: ActionData) -> WidthReport:
    """Width of a fully checked action: H(F_max) minus the next moment level.

    Every hypothesis check must pass; the first failure raises
    HypothesisFailed carrying the witness and the raw level gap (which is not
    a width in that case).
    """
    action = normalize_moment(action)
    results = [check_semifree(action),
               check_isolated_max(action),
               check_monotone_consistency(action)]
    for result in results:
        if not result.passed:
            raise HypothesisFailed(result.check, result.witness, raw_level_gap(action))
    levels = _levels_desc(action)
    if len(levels) < 2:
        raise NotEnoughComponents(
            f"all components sit at the single moment level H = {levels[0]}")
    top, second = levels[0], levels[1]
    return WidthReport(
        width=top - second,
        H_max=top,
        s=second,
        max_component=_max_component(action).label,
        second_level_components=tuple(sorted(
            c.label for c in action.components if c.H == second)),
        hypothesis_log=tuple(r.check for r in results),
    )


def gradient_sphere_invariants(x: FixedComponent, y: FixedComponent) -> tuple[int, int]:
    """Chern number and symplectic area of a gradient sphere from x up to y.

    The Chern number comes from the weight sums, the area from the moment
    values; under the H = -(weight sum) normalization the two must agree, and
    that equality is asserted rather than assumed.
    """
    if x.H is None or y.H is None:
        raise InvalidInput("gradient-sphere endpoints must be moment-normalized")
    if x.H >= y.H:
        raise NotOrdered(f"need H({x.label}) < H({y.label}), got {x.H} >= {y.H}")
    c1 = x.weight_sum - y.weight_sum
    area = y.H - x.H
    if c1 != area:
        raise CrossCheckFailed(
            f"gradient sphere {x.label} -> {y.label}: c1 = {c1} but area = {area}")
    return c1, area


def _wrap_label(label: str) -> str:
    # parenthesize nested product labels so the factor boundaries stay unambiguous
    return f"({label})" if " x " in label else label


def product_action(parts: Sequence[ActionData]) -> ActionData:
    """Cartesian product: weights concatenate, moment values and n add."""
    if not parts:
        raise EmptyProduct("a product needs at least one factor")
    parts = [normalize_moment(p) for p in parts]
    if len(parts) == 1:
        return parts[0]
    comps = []
    for combo in cartesian(*(p.components for p in parts)):
        comps.append(FixedComponent(
            label=" x ".join(_wrap_label(c.label) for c in combo),
            complex_dim=sum(c.complex_dim for c in combo),
            weights=tuple(w for c in combo for w in c.weights),
            H=sum(c.H for c in combo),
        ))
    return ActionData(
        n=sum(p.n for p in parts),
        components=tuple(comps),
        provenance=Provenance("product", children=tuple(p.provenance for p in parts)),
    )


def action_from_json(data) -> ActionData:
    """Parse {"n": ..., "components": [...]}; any H in the file is ignored."""
    if not isinstance(data, dict):
        raise InvalidInput("action JSON must be an object")
    if "n" not in data or "components" not in data:
        raise InvalidInput('action JSON needs "n" and "components" keys')
    n = data["n"]
    raw_comps = data["components"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInput('"n" must be an integer')
    if not isinstance(raw_comps, list) or not raw_comps:
        raise InvalidInput('"components" must be a nonempty list')
    comps = []
    for entry in raw_comps:
        if not isinstance(entry, dict):
            raise InvalidInput(f"each component must be an object: {entry!r}")
        missing = {"label", "complex_dim", "weights"} - set(entry)
        if missing:
            raise InvalidInput(f"component missing keys {sorted(missing)}: {entry!r}")
        label = entry["label"]
        if not isinstance(label, str):
            raise InvalidInput(f'component "label" must be a string: {label!r}')
        weights = entry["weights"]
        if not isinstance(weights, list):
            raise InvalidInput(f"{label}: weights must be a list")
        comps.append(FixedComponent(label=label,
                                    complex_dim=entry["complex_dim"],
                                    weights=tuple(weights)))
    return ActionData(n=n, components=tuple(comps))


def load_action(path) -> ActionData:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: invalid JSON ({exc})") from exc
    return action_from_json(data)


def action_to_json(action: ActionData) -> dict:
    """Serializable form, components sorted by descending H then label."""
    action = normalize_moment(action)
    comps = sorted(action.components, key=lambda c: (-c.H, c.label))
    return {
        "n": action.n,
        "components": [{"label": c.label, "complex_dim": c.complex_dim,
                        "weights": list(c.weights), "H": c.H} for c in comps],
    }
