"""The on/off color process that shrinks a vertex set while tracking clique numbers.

Colors start off. While more than 10n vertices remain, either an on color
with density above 1/2 lets the set pass to a majority vertex's neighbourhood
(lowering that color's clique number), or an off color of density at least
1 - eps is turned on after restricting to vertices that see most of a
maximum clique Q of that color. Here eps = 1 - s/r.

At desk scale the process usually finds a monochromatic K_n or stops early;
the trace records every quantity needed to check its invariants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from . import _cliques
from ._cliques import Budget
from .coloring import CliqueWitness, SetColoring, clique_number_of_color, is_witness
from .errors import BudgetExceeded


@dataclass(frozen=True)
class ProcessStep:
    kind: str  # "majority" or "turn-on"
    color: int
    size_before: int
    size_after: int
    omega_before: int | None = None  # exact clique number of the color, majority steps
    omega_after: int | None = None
    vertex: int | None = None  # majority vertex
    T: int | None = None  # |T|
    Q: tuple[int, ...] = ()
    Q_prime: tuple[int, ...] = ()
    U: int | None = None  # |U|
    on_after: int = 0
    after: tuple[int, ...] = ()  # the vertex set this step passes to


@dataclass
class ProcessState:
    vertices: frozenset[int]
    epsilon: Fraction
    on: list[int] = field(default_factory=list)
    # per-color upper bounds on the clique number inside the current set
    omega: dict[int, int] = field(default_factory=dict)
    steps: list[ProcessStep] = field(default_factory=list)
    status: str = "running"  # then "witness", "small", "no-off-color", "empty", "budget"
    witness: CliqueWitness | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "epsilon": str(self.epsilon),
            "on": self.on,
            "remaining": len(self.vertices),
            "omega": {str(k): v for k, v in sorted(self.omega.items())},
            "witness": None if self.witness is None else
            {"vertices": list(self.witness.vertices), "color": self.witness.color},
            "steps": [vars(s) | {"Q": list(s.Q), "Q_prime": list(s.Q_prime), "after": list(s.after)}
                      for s in self.steps],
        }


def _adjacency(c: SetColoring) -> list[list[int]]:
    adj = [[0] * c.num_vertices for _ in range(c.num_colors)]
    for (u, v), m in c.items():
        while m:
            low = m & -m
            a = adj[low.bit_length() - 1]
            a[u] |= 1 << v
            a[v] |= 1 << u
            m ^= low
    return adj


def _edges_within(a: list[int], S: int) -> int:
    return sum((a[v] & S).bit_count() for v in _cliques.bits(S)) // 2


def extract_clique_process(
    c: SetColoring, n: int, *, budget: int | None = 1_000_000, initially_on: Iterable[int] = ()
) -> ProcessState:
    """Run the process on a graph coloring; returns the final state with its trace.

    Ties are broken by lowest color index and then lowest vertex index. The
    clique searches share ``budget``; running out ends the run with status
    "budget" instead of guessing. ``initially_on`` starts some colors on,
    which is only useful for exercising the majority step directly.
    """
    if c.uniformity != 2 or c.slack:
        raise ValueError("the process needs an exact graph coloring")
    r, s = c.num_colors, c.colors_per_edge
    eps = 1 - Fraction(s, r)
    adj = _adjacency(c)
    nodes = Budget(budget)
    S = (1 << c.num_vertices) - 1
    state = ProcessState(frozenset(range(c.num_vertices)), eps, on=sorted(set(initially_on)))

    def clique(color: int, within: int) -> list[int]:
        return _cliques.search(adj[color], 2, within, target=n, budget=nodes)

    def found(color: int, q: list[int]) -> ProcessState:
        state.witness = CliqueWitness(tuple(sorted(q)), color)
        state.status = "witness"
        return state

    try:
        while S.bit_count() > 10 * n:
            size = S.bit_count()
            pairs = size * (size - 1) // 2
            a_i = None
            for i in sorted(state.on):
                if 2 * _edges_within(adj[i], S) > pairs:
                    a_i = i
                    break
            if a_i is not None:
                a = adj[a_i]
                v = next(x for x in _cliques.bits(S) if 2 * (a[x] & S).bit_count() > size - 1)
                before = clique(a_i, S)
                if len(before) >= n:
                    return found(a_i, before)
                S_next = a[v] & S
                after = clique(a_i, S_next)
                state.omega[a_i] = len(after)
                state.steps.append(ProcessStep("majority", a_i, size, S_next.bit_count(), len(before), len(after),
                                               vertex=v, on_after=len(state.on),
                                               after=tuple(_cliques.bits(S_next))))
                S = S_next
                state.vertices = frozenset(_cliques.bits(S))
                continue

            color = None
            for i in range(r):
                if i not in state.on and _edges_within(adj[i], S) >= (1 - eps) * pairs:
                    color = i
                    break
            if color is None:
                state.status = "no-off-color"
                return state
            a = adj[color]
            T = 0
            for x in _cliques.bits(S):
                if (a[x] & S).bit_count() >= (1 - 2 * eps) * (size - 1):
                    T |= 1 << x
            Q = clique(color, T)
            if len(Q) >= n:
                return found(color, Q)
            Q_mask = sum(1 << x for x in Q)
            U = [x for x in _cliques.bits(T & ~Q_mask)
                 if (a[x] & Q_mask).bit_count() >= (1 - 10 * eps) * len(Q)]
            if not U:
                state.status = "empty"
                return state
            # pigeonhole over the set of non-neighbours in Q
            classes: dict[int, int] = {}
            for x in U:
                key = Q_mask & ~a[x]
                classes[key] = classes.get(key, 0) | (1 << x)
            key = max(classes, key=lambda k: (classes[k].bit_count(), -k))
            S_next = classes[key]
            state.on.append(color)
            # Q \ Q' joined with any clique of S_next is a clique inside T
            state.omega[color] = key.bit_count()
            state.steps.append(ProcessStep(
                "turn-on", color, size, S_next.bit_count(), T=T.bit_count(), Q=tuple(Q),
                Q_prime=tuple(_cliques.bits(key)), U=len(U), on_after=len(state.on),
                after=tuple(_cliques.bits(S_next)),
            ))
            S = S_next
            state.vertices = frozenset(_cliques.bits(S))
    except BudgetExceeded:
        state.status = "budget"
        return state
    state.status = "small"
    return state


def check_trace(state: ProcessState, c: SetColoring, n: int) -> list[str]:
    """Invariant violations in a finished run (empty when everything holds).

    Clique numbers are recomputed from scratch on the recorded vertex sets,
    so this does not trust the values stored in the trace.
    """
    problems = []
    r, s = c.num_colors, c.colors_per_edge
    if len(state.on) > 3 * (r - s):
        problems.append(f"{len(state.on)} colors on, limit {3 * (r - s)}")
    current = set(range(c.num_vertices))
    for step in state.steps:
        after = set(step.after)
        if len(current) != step.size_before or len(after) != step.size_after:
            problems.append(f"recorded sizes disagree with the vertex sets at color {step.color}")
        if not after < current:
            problems.append(f"step on color {step.color} did not pass to a proper subset")
        omega = clique_number_of_color(c, step.color, after)
        if step.kind == "majority":
            if 2 * len(after) < len(current):
                problems.append(f"majority step kept {len(after)} of {len(current)}")
            if any(not c.mask((step.vertex, x)) >> step.color & 1 for x in after):
                problems.append("majority step left the color neighbourhood")
            if omega != step.omega_after or step.omega_after > step.omega_before - 1:
                problems.append(f"clique number of color {step.color} did not drop")
        elif omega > len(step.Q_prime):
            problems.append(f"clique number {omega} of color {step.color} exceeds |Q'| = {len(step.Q_prime)}")
        current = after
    if state.witness is not None:
        if len(state.witness.vertices) < n or not is_witness(c, state.witness):
            problems.append("reported witness does not verify")
    return problems
