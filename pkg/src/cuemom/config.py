from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

CACHE_ENV_VAR = "CUEMOM_CACHE_DIR"


@dataclass(frozen=True)
class Budget:
    """Size guards. Exceeding any of them raises :class:`~cuemom.exact.SizeError`."""

    max_kb: int = 8  # k*beta; C(16, 8) = 12870 column states
    max_n: int = 64
    max_ct_evals: int = 5000  # (2*beta*N + 1)**k point evaluations in ct_extract
    max_xi_half: int = 6


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class MomentSpec:
    k: int
    beta: int
    n: int | None = None

    def __post_init__(self):
        if self.k < 1 or self.beta < 1:
            raise ValueError("k and beta must be positive integers")
        if self.n is not None and self.n < 0:
            raise ValueError("N must be a nonnegative integer")


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "cuemom"
