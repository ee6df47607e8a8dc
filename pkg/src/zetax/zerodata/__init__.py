"""Zero datasets for small fields and the empirical counting-window check."""

from .loader import BUNDLED, LoadError, ZeroDataset, load_fixture, parse_dataset
from .remote import CACHE_ENV, ENDPOINT_ENV, FetchError, cache_dir, fetch_remote
from .window import WindowReport, WindowRow, count_zeros, verify_window

__all__ = [
    "BUNDLED", "LoadError", "ZeroDataset", "load_fixture", "parse_dataset",
    "CACHE_ENV", "ENDPOINT_ENV", "FetchError", "cache_dir", "fetch_remote",
    "WindowReport", "WindowRow", "count_zeros", "verify_window",
]
