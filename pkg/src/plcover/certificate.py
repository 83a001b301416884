"""Line-oriented certificate and checkpoint files.

Certificate::

    PLCCOVER v1 p=<p> E=<E> start=<a/b> target=<a/b>
    T1 <c> <n>            (or T2 <c> <d> <n>), right-to-left
    ...
    END count=<N>

Checkpoint::

    PLCCKPT v1 p=<p> E=<E> point=<a/b> count=<N> segment=<i> [type1=<N1>] [elapsed=<s>]
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, TextIO

from .arith import format_fraction, parse_fraction
from .intervals import CoverInterval, format_interval

CERT_MAGIC = "PLCCOVER"
CKPT_MAGIC = "PLCCKPT"
VERSION = "v1"


class FormatError(ValueError):
    pass


class CheckpointError(ValueError):
    pass


def _parse_fields(line: str, magic: str) -> Dict[str, str]:
    parts = line.split()
    if len(parts) < 2 or parts[0] != magic:
        raise FormatError(f"expected {magic} header, got {line.strip()!r}")
    if parts[1] != VERSION:
        raise FormatError(f"unsupported version {parts[1]!r}")
    fields = {}
    for tok in parts[2:]:
        key, sep, val = tok.partition("=")
        if not sep or not val:
            raise FormatError(f"bad header field {tok!r}")
        fields[key] = val
    return fields


@dataclass(frozen=True)
class Header:
    p: int
    E: int
    start: Fraction
    target: Fraction

    def format(self) -> str:
        return (f"{CERT_MAGIC} {VERSION} p={self.p} E={self.E} "
                f"start={format_fraction(self.start)} target={format_fraction(self.target)}")

    @classmethod
    def parse(cls, line: str) -> "Header":
        f = _parse_fields(line, CERT_MAGIC)
        try:
            return cls(int(f["p"]), int(f["E"]), parse_fraction(f["start"]), parse_fraction(f["target"]))
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad certificate header {line.strip()!r}: {exc}") from None


def end_line(count: int) -> str:
    return f"END count={count}"


class CertificateWriter:
    """Streaming sink writing one interval per line."""

    def __init__(self, fh: TextIO, header: Optional[Header] = None):
        self.fh = fh
        self.count = 0
        if header is not None:
            fh.write(header.format() + "\n")

    def __call__(self, iv: CoverInterval) -> None:
        self.fh.write(format_interval(iv) + "\n")
        self.count += 1

    def flush(self) -> None:
        self.fh.flush()
        os.fsync(self.fh.fileno())

    def finish(self, total: int) -> None:
        self.fh.write(end_line(total) + "\n")
        self.fh.flush()


@dataclass(frozen=True)
class Checkpoint:
    p: int
    E: int
    point: Fraction
    count: int
    segment: int = 0
    type1: int = 0
    elapsed: float = 0.0

    def format(self) -> str:
        return (f"{CKPT_MAGIC} {VERSION} p={self.p} E={self.E} point={format_fraction(self.point)} "
                f"count={self.count} segment={self.segment} type1={self.type1} "
                f"elapsed={self.elapsed:.3f}")


def checkpoint_save(state: Checkpoint, path: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(state.format() + "\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def checkpoint_restore(path: str, p: Optional[int] = None, E: Optional[int] = None,
                       segment: Optional[int] = None) -> Checkpoint:
    """Read a checkpoint, rejecting corrupt files and mismatched parameters."""
    with open(path) as fh:
        line = fh.readline()
    try:
        f = _parse_fields(line, CKPT_MAGIC)
        ck = Checkpoint(
            p=int(f["p"]), E=int(f["E"]), point=parse_fraction(f["point"]),
            count=int(f["count"]), segment=int(f["segment"]),
            type1=int(f.get("type1", 0)), elapsed=float(f.get("elapsed", 0.0)),
        )
    except (FormatError, KeyError, ValueError) as exc:
        raise CheckpointError(f"corrupt checkpoint {path}: {exc}") from None
    if p is not None and ck.p != p:
        raise CheckpointError(f"checkpoint is for p={ck.p}, not p={p}")
    if E is not None and ck.E != E:
        raise CheckpointError(f"checkpoint is for E={ck.E}, not E={E}")
    if segment is not None and ck.segment != segment:
        raise CheckpointError(f"checkpoint is for segment {ck.segment}, not {segment}")
    return ck
