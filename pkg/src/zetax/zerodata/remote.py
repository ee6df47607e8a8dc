"""Opt-in remote fetch of zero datasets with an on-disk replay cache."""

from __future__ import annotations

import os
import re
import urllib.request
from pathlib import Path
from typing import Callable, Optional

from filelock import FileLock

from .loader import LoadError, ZeroDataset, parse_dataset

ENDPOINT_ENV = "ZETAX_ENDPOINT"
CACHE_ENV = "ZETAX_CACHE"
TIMEOUT = 30


class FetchError(RuntimeError):
    """The remote dataset could not be obtained or failed validation."""


def _default_getter(url: str) -> bytes:
    with urllib.request.urlopen(url, timeout=TIMEOUT) as resp:
        return resp.read()


def cache_dir() -> Path:
    root = os.environ.get(CACHE_ENV)
    if root:
        return Path(root)
    return Path.home() / ".cache" / "zetax"


def _cache_path(label: str) -> Path:
    if not re.fullmatch(r"[A-Za-z0-9._-]+", label):
        raise FetchError(f"invalid label {label!r}")
    return cache_dir() / f"{label}.json"


def fetch_remote(label: str, endpoint: Optional[str] = None, allow_network: bool = False,
                 getter: Callable[[str], bytes] = _default_getter) -> ZeroDataset:
    """Dataset for ``label``, from the cache if present, else GET {endpoint}/{label}.

    The raw response body is cached only after it validates, so a cache
    replay is byte-identical to the accepted response.
    """
    path = _cache_path(label)
    if path.exists():
        try:
            return parse_dataset(path.read_bytes(), f"cache:{path}")
        except LoadError as exc:
            raise FetchError(f"corrupt cache entry {path}: {exc}") from exc
    if not allow_network:
        raise FetchError(f"{label} is not cached and network access is disabled")
    endpoint = endpoint or os.environ.get(ENDPOINT_ENV)
    if not endpoint:
        raise FetchError(f"no endpoint given (use --endpoint or ${ENDPOINT_ENV})")
    url = f"{endpoint.rstrip('/')}/{label}"
    try:
        body = getter(url)
    except Exception as exc:  # any transport failure
        raise FetchError(f"GET {url} failed: {exc}") from exc
    try:
        ds = parse_dataset(body, url)
    except LoadError as exc:
        raise FetchError(f"{url}: {exc}") from exc
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        tmp = path.with_suffix(".tmp")
        tmp.write_bytes(body)
        tmp.replace(path)
    return ds
