"""Exact interval-cover certificates for the p-adic Littlewood inequality.

A cover of [0, 1/2] by type-1 and type-2 intervals certifies that
liminf q |q|_p ||q x|| < 1/E for every real x.
"""
from .arith import parse_fraction, format_fraction
from .intervals import Type1, Type2, endpoints, size_bound, contains_with_progress
from .search import SearchConfig, StallError, next_interval, BACKEND
from .builder import Cover, build_cover, build_cover_parallel
from .verifier import verify_cover, spot_check, oracle_min

__version__ = "0.1.0"
