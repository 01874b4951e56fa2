"""Resource caps and the shared exception types."""
from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace


class ResourceCap(RuntimeError):
    """A configured degree, pair, state or count bound was exceeded."""


class MemoryCap(ResourceCap):
    """A linear-algebra problem would exceed the configured size bound."""


class PreconditionError(ValueError):
    """The input does not satisfy an operation's precondition."""


@dataclass(frozen=True)
class Caps:
    degree_cap: int = 12
    pair_cap: int = 10**6
    bfs_cap: int = 10**6
    memory_cap: int = 2 * 10**5
    cycle_cap: int = 10**5
    admissible_cap: int = 16

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, int) or v <= 0:
                raise ValueError(f"{f.name} must be a positive integer, got {v!r}")

    def with_(self, **kw):
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    @classmethod
    def from_dict(cls, d):
        known = {f.name for f in fields(cls)}
        # accept camelCase keys from config files
        alias = {"degreeCap": "degree_cap", "pairCap": "pair_cap", "bfsCap": "bfs_cap",
                 "memoryCap": "memory_cap", "cycleCap": "cycle_cap",
                 "admissibleCap": "admissible_cap"}
        kw = {}
        for k, v in d.items():
            k = alias.get(k, k)
            if k in known:
                kw[k] = v
        return cls(**kw)

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


DEFAULT_CAPS = Caps()
