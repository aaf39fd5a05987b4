from __future__ import annotations

from dataclasses import dataclass
from typing import Any


DEFAULT_MAX_ORDER = 8        # congruence lattice enumeration
DEFAULT_CLOSURE_CAP = 5000   # transformation semigroup closure
DEFAULT_VARIABLE_CAP = 3     # user supplied pseudoidentities


@dataclass(frozen=True)
class Settings:
    max_order: int = DEFAULT_MAX_ORDER
    closure_cap: int = DEFAULT_CLOSURE_CAP
    variable_cap: int = DEFAULT_VARIABLE_CAP
    # accepted for randomized associativity spot checks; nothing samples yet
    seed: int | None = None

    @classmethod
    def from_args(cls, args: Any) -> "Settings":
        """Build settings from an argparse namespace, falling back to defaults
        for flags a subcommand does not define."""
        def pick(name: str, default: Any) -> Any:
            value = getattr(args, name, None)
            return default if value is None else value

        return cls(
            max_order=pick("max_order", DEFAULT_MAX_ORDER),
            closure_cap=pick("closure_cap", DEFAULT_CLOSURE_CAP),
            variable_cap=pick("variable_cap", DEFAULT_VARIABLE_CAP),
            seed=pick("seed", None),
        )
