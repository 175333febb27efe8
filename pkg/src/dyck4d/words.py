"""Balanced-parenthesis words and their canonical paths in a 4D integer lattice.

After reading ``k`` symbols of a word, ``l`` counts opening parentheses,
``r`` closing ones, ``i = l + r`` is the number of steps taken and
``j = l - r`` the current excess of opens (the *unbalance*).  The four
values are tied: any two of them determine the other two.  Reading '('
moves a path by ``UP_STEP = (1, 1, 1, 0)``, reading ')' by
``DOWN_STEP = (1, -1, 0, 1)``, always starting from the origin.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidCharacter, MalformedPath, NegativePrefix, Unbalanced


class Axis(enum.Enum):
    """One of the four lattice coordinates."""

    I = "i"
    J = "j"
    L = "l"
    R = "r"


#: Canonical axis order; also the component order of nodes and vectors.
AXES = (Axis.I, Axis.J, Axis.L, Axis.R)

AXIS_INDEX = {axis: k for k, axis in enumerate(AXES)}


class Step(enum.Enum):
    OPEN = "("
    CLOSE = ")"


class LatticeNode(NamedTuple):
    """An integer point in (i, j, l, r) coordinate order.

    On a valid path: i = number of steps taken, j = opens minus closes,
    l = opens, r = closes.  The type itself does not validate; use
    :func:`dyck4d.lattice.is_lattice_node` to test membership.
    """

    i: int
    j: int
    l: int
    r: int


ORIGIN = LatticeNode(0, 0, 0, 0)

#: Path delta produced by reading '(' — components (i, j, l, r).
UP_STEP = (1, 1, 1, 0)
#: Path delta produced by reading ')'.
DOWN_STEP = (1, -1, 0, 1)

_WHITESPACE = frozenset(" \t\n\r\f\v")


@dataclass(frozen=True)
class DyckWord:
    """A balanced word: equal opens and closes, no prefix with excess closes.

    Constructing one validates the invariants, so every instance in
    circulation is valid; the empty word is allowed.
    """

    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        balance = 0
        for consumed, step in enumerate(self.steps, start=1):
            balance += 1 if step is Step.OPEN else -1
            if balance < 0:
                raise NegativePrefix(consumed)
        if balance:
            raise Unbalanced(balance)

    @property
    def n(self) -> int:
        """Half-length: the number of '(' (equal to the number of ')')."""
        return len(self.steps) // 2

    def __str__(self) -> str:
        return render_word(self)


def parse_word(text: str) -> DyckWord:
    """Parse ``text`` into a validated :class:`DyckWord`.

    ASCII whitespace is skipped.  Any other non-parenthesis character
    raises :class:`InvalidCharacter` with its index in the raw text.
    Balance violations raise :class:`NegativePrefix` (position = number of
    parenthesis steps consumed) or :class:`Unbalanced` (final excess).
    """
    steps = []
    for position, char in enumerate(text):
        if char == "(":
            steps.append(Step.OPEN)
        elif char == ")":
            steps.append(Step.CLOSE)
        elif char in _WHITESPACE:
            continue
        else:
            raise InvalidCharacter(position, char)
    return DyckWord(tuple(steps))


def render_word(word: DyckWord) -> str:
    """Inverse of :func:`parse_word`: '(' for each open, ')' for each close."""
    return "".join(step.value for step in word.steps)


@dataclass(frozen=True)
class Path4D:
    """An origin-anchored node sequence whose deltas are UP_STEP or DOWN_STEP.

    Validation guarantees the unbalance j stays non-negative everywhere,
    which is exactly the balanced-word condition.
    """

    nodes: tuple[LatticeNode, ...]

    def __post_init__(self):
        nodes = tuple(LatticeNode(*node) for node in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if not nodes or nodes[0] != ORIGIN:
            raise MalformedPath(0, "path must start at the origin (0, 0, 0, 0)")
        for index in range(1, len(nodes)):
            prev, node = nodes[index - 1], nodes[index]
            delta = (node.i - prev.i, node.j - prev.j, node.l - prev.l, node.r - prev.r)
            if delta != UP_STEP and delta != DOWN_STEP:
                raise MalformedPath(index, f"delta {delta} is neither an up-step nor a down-step")
            if node.j < 0:
                raise MalformedPath(index, "unbalance went negative")

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)


def word_to_path(word: DyckWord) -> Path4D:
    """The canonical path of a word: node k holds the counts after k symbols."""
    nodes = [ORIGIN]
    l = r = 0
    for step in word.steps:
        if step is Step.OPEN:
            l += 1
        else:
            r += 1
        nodes.append(LatticeNode(l + r, l - r, l, r))
    return Path4D(tuple(nodes))


def path_to_word(path: Path4D) -> DyckWord:
    """Inverse of :func:`word_to_path`.

    Accepts a :class:`Path4D` or any node sequence; the latter is validated
    first and raises :class:`MalformedPath` like the Path4D constructor.
    """
    if not isinstance(path, Path4D):
        path = Path4D(tuple(path))
    steps = []
    for prev, node in zip(path.nodes, path.nodes[1:]):
        steps.append(Step.OPEN if node.l > prev.l else Step.CLOSE)
    return DyckWord(tuple(steps))


def path_as_lists(path: Path4D) -> list[list[int]]:
    """JSON-ready form: a path is an array of [i, j, l, r] nodes."""
    return [list(node) for node in path.nodes]


def path_from_lists(rows) -> Path4D:
    """Rebuild a validated path from its JSON form."""
    nodes = []
    for index, row in enumerate(rows):
        values = list(row)
        if len(values) != 4 or not all(isinstance(v, int) for v in values):
            raise MalformedPath(index, "a node must be four integers [i, j, l, r]")
        nodes.append(LatticeNode(*values))
    return Path4D(tuple(nodes))
