"""Runtime settings for scmh.

Library functions take their settings as keyword arguments. Only the CLI and
the census runner read the environment, through `Settings.from_env`.
"""

import os
from collections.abc import Mapping
from dataclasses import dataclass, replace
from enum import Enum

from scmh.errors import ConfigError

ENV_MAX_N = "SCMH_MAX_N"
ENV_JOBS = "SCMH_JOBS"

DEFAULT_MAX_N = 7
DEFAULT_JOBS = 1


class Positivity(Enum):
    """Which values a composition may take.

    ZERO_ADMITTED lets a monomial carry the value 0 whenever its lower bound
    from the h-vector is 0. STRICT requires every value to be at least 1.
    """

    ZERO_ADMITTED = "zero"
    STRICT = "strict"


@dataclass(frozen=True)
class Settings:
    """Settings shared by the CLI and the census runner."""

    max_n: int = DEFAULT_MAX_N
    jobs: int = DEFAULT_JOBS
    positivity: Positivity = Positivity.ZERO_ADMITTED

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "Settings":
        """Build settings from `SCMH_MAX_N` and `SCMH_JOBS`."""
        env = os.environ if environ is None else environ
        return cls(
            max_n=_read_int(env, ENV_MAX_N, DEFAULT_MAX_N),
            jobs=_read_int(env, ENV_JOBS, DEFAULT_JOBS),
        )

    def with_overrides(
        self,
        max_n: int | None = None,
        jobs: int | None = None,
        positivity: Positivity | None = None,
    ) -> "Settings":
        """Return a copy with the given fields replaced (None keeps the value)."""
        return replace(
            self,
            max_n=self.max_n if max_n is None else max_n,
            jobs=self.jobs if jobs is None else jobs,
            positivity=self.positivity if positivity is None else positivity,
        )


def _read_int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value
