from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, reduce

from wpgl.util.wpgl_types import InputError, InvalidSignatureError, SignatureIndexError

# a coordinate x^i_j is named by its (group, slot) pair, both 1-based
Variable = tuple[int, int]


def variable_name(variable: Variable) -> str:
    return f"x_{variable[0]}_{variable[1]}"


def parse_variable_name(name: str) -> Variable:
    parts = name.strip().split("_")
    if len(parts) != 3 or parts[0] != "x" or not parts[1].isdigit() or not parts[2].isdigit():
        raise InputError(f"bad variable name {name!r}, expected x_i_j")
    return int(parts[1]), int(parts[2])


@dataclass(frozen=True)
class WeightSignature:
    """The weights (n0,...,nr) of the G_m action, normalized to distinct weights m_1 < ... < m_t with multiplicities r_i.

    Two signatures are equal when their normalized forms agree; the raw order is kept only for display.
    """

    raw_weights: tuple[int, ...] = field(compare=False)
    weights: tuple[int, ...] = field(init=False)
    multiplicities: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        raw = tuple(self.raw_weights)
        if len(raw) < 2:
            raise InvalidSignatureError(f"need at least two weights, got {list(raw)}")
        if any(not isinstance(w, int) or isinstance(w, bool) or w <= 0 for w in raw):
            raise InvalidSignatureError(f"weights must be positive integers, got {list(raw)}")
        counts = Counter(raw)
        object.__setattr__(self, "raw_weights", raw)
        object.__setattr__(self, "weights", tuple(sorted(counts)))
        object.__setattr__(self, "multiplicities", tuple(counts[m] for m in sorted(counts)))

    @classmethod
    def parse(cls, text: str) -> WeightSignature:
        try:
            raw = tuple(int(item) for item in str(text).split(",") if item.strip() != "")
        except ValueError as err:
            raise InvalidSignatureError(f"bad weight list {text!r}") from err
        return cls(raw)

    @property
    def t(self) -> int:
        return len(self.weights)

    @property
    def d(self) -> int:
        return reduce(math.gcd, self.raw_weights)

    def weight(self, group: int) -> int:
        self.check_group(group)
        return self.weights[group - 1]

    def multiplicity(self, group: int) -> int:
        self.check_group(group)
        return self.multiplicities[group - 1]

    def check_group(self, group: int):
        if not 1 <= group <= self.t:
            raise SignatureIndexError(f"group index {group} outside 1..{self.t}")

    @cached_property
    def variables(self) -> tuple[Variable, ...]:
        return tuple((i, j) for i in range(1, self.t + 1) for j in range(1, self.multiplicities[i - 1] + 1))

    @cached_property
    def variable_index(self) -> dict[Variable, int]:
        return {v: k for k, v in enumerate(self.variables)}

    @cached_property
    def variable_weights(self) -> tuple[int, ...]:
        return tuple(self.weights[i - 1] for i, _ in self.variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def group_variables(self, group: int) -> tuple[Variable, ...]:
        self.check_group(group)
        return tuple((group, j) for j in range(1, self.multiplicities[group - 1] + 1))

    def to_json(self):
        return list(self.raw_weights)

    def __str__(self):
        return "(" + ",".join(str(w) for w in self.raw_weights) + ")"
