"""HTTP service wrapping the core package."""

from __future__ import annotations

import warnings


def create_app():
    from .app import create_app as _create

    return _create()


def make_local_client():
    """In-process client running the real app over the ASGI interface.

    starlette's test client is the supported sync ASGI bridge; its
    httpx-fallback deprecation warning is noise here (httpx2 is not a
    dependency of this package).
    """
    with warnings.catch_warnings():
        warnings.filterwarnings(
            "ignore", message="Using `httpx` with `starlette.testclient`"
        )
        from starlette.testclient import TestClient

    from .app import create_app as _create

    return TestClient(_create())


__all__ = ["create_app", "make_local_client"]
