"""Constructive odd-graceful labelers for the cycle-plus-path family.

Two interchangeable constructions are provided and must agree vertex for
vertex. The closed form assigns every label directly: around the cycle, odd
positions take the ascending even numbers 0, 2, 4, ... while even positions
take the descending odd numbers 2q-1, 2q-3, ..., except the closing vertex,
which drops to 2q-(2m-3) so the two cycle edges at the seam consume the
weights 2q-3m+5 and 2q-2m+3. Along the path, odd positions take small odd
numbers and even positions take a descending run of even numbers; the exact
formulas branch on the parity of half the cycle order.

The pass-based variant reaches the same labeling operationally: after fixing
the closing cycle label and the reserved seam weight, one pass fills the
cycle and an independent pass walks the path, carrying a weight that starts
just below the closing label and decreases by 2, skipping over the reserved
weight when the sequence meets it. Vertex labels alternate adding and
subtracting the carried weight. Each vertex and edge is touched a constant
number of times, so construction is linear in the edge count.

Constructions below the family's minimum path order exist only to
demonstrate how the labeling degenerates there; they are emitted in full and
left to the verifier to reject.
"""

from __future__ import annotations

import enum

from .errors import BoundViolationError, InvalidParameterError
from .graph import FamilySpec
from .labeling import Labeling


class ConstructionMethod(enum.Enum):
    CLOSED_FORM = "closed"
    ALGORITHMIC = "algo"


class BoundPolicy(enum.Enum):
    """ENFORCE rejects path orders below the minimum; FORCE constructs anyway."""

    ENFORCE = "enforce"
    FORCE = "force"


def min_path_order(cycle_order: int) -> int:
    """Smallest path order for which the construction is valid.

    cycle_order - 1 when the cycle order is divisible by four, cycle_order - 3
    otherwise. One below either bound the construction provably collides (see
    the boundary tests).
    """
    if cycle_order < 4 or cycle_order % 2:
        raise InvalidParameterError(
            f"cycle order must be an even integer >= 4, got {cycle_order}"
        )
    return cycle_order - 1 if cycle_order % 4 == 0 else cycle_order - 3


def label_closed_form(spec: FamilySpec, policy: BoundPolicy = BoundPolicy.ENFORCE) -> Labeling:
    """Direct formula labeling; valid whenever the path order meets the minimum."""
    _check_bound(spec, policy)
    m, n, q = spec.cycle_order, spec.path_order, spec.edge_count
    k = spec.half_cycle
    labels = [0] * (m + n)

    for i in range(1, m + 1):
        if i % 2:
            labels[i - 1] = i - 1
        elif i <= m - 2:
            labels[i - 1] = 2 * q - (i - 1)
    labels[m - 1] = 2 * q - (2 * m - 3)

    base = 2 * q - 2 * m
    if k % 2:
        for i in range(1, n + 1):
            if i % 2:
                labels[m + i - 1] = i if i <= k - 2 else i + 2
            else:
                labels[m + i - 1] = base + 4 - i
    else:
        for i in range(1, n + 1):
            if i % 2:
                labels[m + i - 1] = i
            elif i <= k - 2:
                labels[m + i - 1] = base + 4 - i
            else:
                labels[m + i - 1] = base + 2 - i
    return Labeling(tuple(labels))


def label_algorithmic(spec: FamilySpec, policy: BoundPolicy = BoundPolicy.ENFORCE) -> Labeling:
    """Pass-based labeling; equals label_closed_form exactly on every input.

    The cycle pass and the path pass are independent once the closing label
    and the reserved weight are fixed, so they could run concurrently; here
    they run back to back.
    """
    _check_bound(spec, policy)
    m, n, q = spec.cycle_order, spec.path_order, spec.edge_count
    closing_label = 2 * q - (2 * m - 3)
    reserved_weight = 2 * q - 3 * m + 5
    labels = [0] * (m + n)
    _cycle_pass(labels, m, q, closing_label)
    _path_pass(labels, m, n, closing_label, reserved_weight)
    return Labeling(tuple(labels))


def construct_labeling(
    spec: FamilySpec,
    method: ConstructionMethod = ConstructionMethod.CLOSED_FORM,
    policy: BoundPolicy = BoundPolicy.ENFORCE,
) -> Labeling:
    if method is ConstructionMethod.CLOSED_FORM:
        return label_closed_form(spec, policy)
    return label_algorithmic(spec, policy)


def cycle_edge_labels(spec: FamilySpec) -> tuple[int, ...]:
    """Predicted cycle-edge weights in ring order.

    The first m-2 edges take 2q-1, 2q-3, ..., the seam edge takes 2q-3m+5 and
    the closing edge 2q-2m+3. Together the cycle consumes the top m-1 odd
    values plus 2q-3m+5; the path consumes everything else.
    """
    m, q = spec.cycle_order, spec.edge_count
    weights = [2 * q - (2 * i - 1) for i in range(1, m - 1)]
    weights.append(2 * q - 3 * m + 5)
    weights.append(2 * q - 2 * m + 3)
    return tuple(weights)


def _check_bound(spec: FamilySpec, policy: BoundPolicy) -> None:
    minimum = min_path_order(spec.cycle_order)
    if policy is BoundPolicy.ENFORCE and spec.path_order < minimum:
        raise BoundViolationError(
            f"path order {spec.path_order} is below the minimum {minimum} "
            f"for cycle order {spec.cycle_order}; construct with FORCE to "
            f"demonstrate the failure",
            required_min=minimum,
        )


def _cycle_pass(labels: list[int], m: int, q: int, closing_label: int) -> None:
    labels[0] = 0
    for i in range(3, m, 2):
        labels[i - 1] = labels[i - 3] + 2
    for i in range(2, m, 2):
        labels[i - 1] = 2 * q - i + 1
    labels[m - 1] = closing_label


def _path_pass(labels: list[int], m: int, n: int, closing_label: int, reserved_weight: int) -> None:
    labels[m] = 1
    w = closing_label
    previous = None
    for j in range(1, n):
        w -= 2
        if w == reserved_weight:
            w -= 2
        # Strictly descending, so no path weight can repeat or re-enter the
        # reserved value after the single skip.
        assert previous is None or w < previous
        previous = w
        labels[m + j] = labels[m + j - 1] + (w if j % 2 else -w)
