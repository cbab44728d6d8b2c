"""Shared exception types and size limits."""

from __future__ import annotations

import os

DEFAULT_MAX_VERTICES = 32
ENV_MAX_VERTICES = "COVERIDEALS_MAX_VERTICES"


class CapacityError(RuntimeError):
    """An enumeration or search would exceed the configured size limits."""


class DocumentError(ValueError):
    """A graph or report document could not be parsed."""


def resolve_max_vertices(explicit: int | None = None) -> int:
    """Effective vertex cap: explicit argument, else env override, else default."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(ENV_MAX_VERTICES, "").strip()
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{ENV_MAX_VERTICES} must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_VERTICES


def ensure_vertex_capacity(count: int, explicit: int | None = None) -> None:
    cap = resolve_max_vertices(explicit)
    if count > cap:
        raise CapacityError(
            f"graph has {count} vertices, exceeding the cap of {cap} "
            f"(raise via --max-vertices or {ENV_MAX_VERTICES})"
        )
