"""Greedy right-to-left walk producing a cover of [target, start].

Starting from x = start, each step picks the interval chosen by
:func:`plcover.search.step` and moves x to its left endpoint, until
x <= target.  Intervals are streamed to a sink so that covers far larger
than memory can be written straight to disk.
"""
from __future__ import annotations

import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

from .certificate import (
    Checkpoint,
    CertificateWriter,
    FormatError,
    Header,
    checkpoint_restore,
    checkpoint_save,
    end_line,
)
from .intervals import CoverInterval, Type1, Type2, endpoints, parse_interval
from .search import SearchConfig, StallError, step

log = logging.getLogger(__name__)

HALF = Fraction(1, 2)
ZERO = Fraction(0)

Sink = Callable[[CoverInterval], None]


@dataclass
class Cover:
    p: int
    E: int
    start: Fraction
    target: Fraction
    intervals: Optional[List[CoverInterval]] = None
    count: int = 0
    type1: int = 0
    elapsed: float = 0.0
    dropped: int = 0  # redundant intervals removed while stitching segments

    @property
    def type2(self) -> int:
        return self.count - self.type1

    def summary(self) -> str:
        return (f"intervals={self.count} type1={self.type1} type2={self.type2} "
                f"elapsed={self.elapsed:.3f}")


def _validate_range(start: Fraction, target: Fraction) -> None:
    if not (0 <= target < start <= HALF):
        raise ValueError(f"need 0 <= target < start <= 1/2, got start={start} target={target}")


def build_cover(
    cfg: SearchConfig,
    start: Fraction = HALF,
    target: Fraction = ZERO,
    sink: Optional[Sink] = None,
    *,
    keep: bool = True,
    resume: Optional[Checkpoint] = None,
    on_checkpoint: Optional[Callable[[Checkpoint], None]] = None,
    checkpoint_every: int = 10_000_000,
    checkpoint_seconds: float = 60.0,
    segment: int = 0,
) -> Cover:
    """Walk from ``start`` down to ``target``.

    With ``keep=False`` only counts are retained; pass a ``sink`` to see the
    intervals.  ``resume`` continues a walk from a checkpoint; since every
    step depends only on the current point, the continuation is identical to
    an uninterrupted run.
    """
    _validate_range(start, target)
    t0 = time.perf_counter()
    x = start
    count = type1 = 0
    elapsed0 = 0.0
    if resume is not None:
        if (resume.p, resume.E) != (cfg.p, cfg.E):
            raise ValueError("checkpoint parameters do not match the search configuration")
        x, count, type1, elapsed0 = resume.point, resume.count, resume.type1, resume.elapsed
    kept: Optional[List[CoverInterval]] = [] if keep else None

    a, b = x.numerator, x.denominator
    ta, tb = target.numerator, target.denominator
    next_ck = count + checkpoint_every
    last_ck = t0
    while a * tb > ta * b:
        try:
            kind, c, d, n, _s, a, b = step(a, b, cfg)
        except StallError as exc:
            raise StallError(exc.point, count, segment) from None
        iv = Type1(c, n) if kind == 1 else Type2(c, d, n)
        count += 1
        type1 += kind == 1
        if sink is not None:
            sink(iv)
        if kept is not None:
            kept.append(iv)
        if on_checkpoint is not None:
            if count >= next_ck or (count & 1023 == 0 and time.perf_counter() - last_ck >= checkpoint_seconds):
                last_ck = time.perf_counter()
                next_ck = count + checkpoint_every
                on_checkpoint(Checkpoint(cfg.p, cfg.E, Fraction(a, b), count, segment, type1,
                                         elapsed0 + last_ck - t0))

    return Cover(cfg.p, cfg.E, start, target, kept, count, type1,
                 elapsed0 + time.perf_counter() - t0)


def _truncate_certificate(path: str, header: Header, keep_lines: int) -> int:
    """Cut a partial certificate back to its header plus ``keep_lines`` intervals.

    Returns the number of type-1 lines kept.
    """
    with open(path, "r+") as fh:
        first = fh.readline()
        if Header.parse(first) != header:
            raise FormatError(f"{path}: header does not match the resumed build")
        type1 = 0
        for i in range(keep_lines):
            line = fh.readline()
            if not line.endswith("\n") or line.startswith("END"):
                raise FormatError(f"{path}: only {i} complete intervals, checkpoint says {keep_lines}")
            type1 += line.startswith("T1")
        fh.truncate(fh.tell())
    return type1


def write_certificate(
    cfg: SearchConfig,
    path: str,
    start: Fraction = HALF,
    target: Fraction = ZERO,
    *,
    checkpoint_path: Optional[str] = None,
    resume: bool = False,
    checkpoint_every: int = 10_000_000,
    checkpoint_seconds: float = 60.0,
    segment: int = 0,
    progress: Optional[Callable[[Checkpoint], None]] = None,
    _sink_hook: Optional[Sink] = None,
) -> Cover:
    """Build a cover and stream it to a certificate file, with optional checkpoints.

    On ``resume`` the checkpoint is validated against (p, E, segment), the
    certificate is cut back to the checkpointed count, and the walk continues
    from the checkpointed point.
    """
    header = Header(cfg.p, cfg.E, start, target)
    state = None
    if resume and checkpoint_path and os.path.exists(checkpoint_path):
        state = checkpoint_restore(checkpoint_path, cfg.p, cfg.E, segment)
        _truncate_certificate(path, header, state.count)
        fh = open(path, "a")
        writer = CertificateWriter(fh)
    else:
        fh = open(path, "w")
        writer = CertificateWriter(fh, header)

    def on_ck(ck: Checkpoint) -> None:
        writer.flush()
        if checkpoint_path:
            checkpoint_save(ck, checkpoint_path)
        if progress is not None:
            progress(ck)

    sink = writer
    if _sink_hook is not None:
        def sink(iv, _hook=_sink_hook):
            writer(iv)
            _hook(iv)

    try:
        cover = build_cover(
            cfg, start, target, sink, keep=False, resume=state,
            on_checkpoint=on_ck if (checkpoint_path or progress) else None,
            checkpoint_every=checkpoint_every, checkpoint_seconds=checkpoint_seconds,
            segment=segment,
        )
        writer.finish(cover.count)
    finally:
        fh.close()
    if checkpoint_path and os.path.exists(checkpoint_path):
        os.remove(checkpoint_path)
    return cover


def segment_bounds(k: int) -> List[Fraction]:
    """r_i = (k - i)/(2k) for i = 0..k: uniform split of [0, 1/2]."""
    if k < 1:
        raise ValueError("need at least one segment")
    return [Fraction(k - i, 2 * k) for i in range(k + 1)]


def _segment_worker(args):
    cfg, i, start, target, path, ck_path, resume, ck_every, ck_seconds = args
    if path is None:
        return build_cover(cfg, start, target, segment=i)
    return write_certificate(cfg, path, start, target, checkpoint_path=ck_path, resume=resume,
                             checkpoint_every=ck_every, checkpoint_seconds=ck_seconds, segment=i)


def _read_body(path: str):
    with open(path) as fh:
        fh.readline()
        for line in fh:
            if line.startswith("END"):
                return
            yield parse_interval(line)


def _stitch(parts, p: int, E: int, emit: Sink):
    """Concatenate segment walks, dropping intervals made redundant by overlap.

    Segment i ends with an interval reaching at or below r_{i+1}, possibly well
    below it; the leading intervals of segment i+1 whose left endpoints are not
    below that reach add nothing and would break the strictly decreasing chain.
    """
    count = type1 = dropped = 0
    reach = None
    for part in parts:
        for iv in part:
            left = endpoints(iv, p, E)[0]
            if reach is not None and left >= reach:
                dropped += 1
                continue
            reach = left
            emit(iv)
            count += 1
            type1 += type(iv) is Type1
    return count, type1, dropped


def build_cover_parallel(
    cfg: SearchConfig,
    segments: int,
    out_path: Optional[str] = None,
    *,
    workers: Optional[int] = None,
    checkpoint_path: Optional[str] = None,
    resume: bool = False,
    checkpoint_every: int = 10_000_000,
    checkpoint_seconds: float = 60.0,
) -> Cover:
    """Cover [0, 1/2] by ``segments`` independent walks run in a process pool.

    Without ``out_path`` the intervals are returned in memory.  With one
    segment this is exactly :func:`build_cover` / :func:`write_certificate`.
    """
    bounds = segment_bounds(segments)
    if segments == 1:
        if out_path is None:
            return build_cover(cfg)
        return write_certificate(cfg, out_path, checkpoint_path=checkpoint_path, resume=resume,
                                 checkpoint_every=checkpoint_every,
                                 checkpoint_seconds=checkpoint_seconds)

    t0 = time.perf_counter()
    if out_path is not None:
        part_dir = os.path.dirname(os.path.abspath(out_path))
        part_paths = [f"{out_path}.part{i}" for i in range(segments)]
    else:
        part_dir = None
        part_paths = [None] * segments
    ck_paths = [f"{checkpoint_path}.{i}" if checkpoint_path else None for i in range(segments)]
    jobs = [
        (cfg, i, bounds[i], bounds[i + 1], part_paths[i], ck_paths[i], resume,
         checkpoint_every, checkpoint_seconds)
        for i in range(segments)
    ]
    n_workers = min(segments, workers or os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        results = list(pool.map(_segment_worker, jobs))
    log.debug("segments done: %s", [r.count for r in results])

    if out_path is None:
        kept: List[CoverInterval] = []
        count, type1, dropped = _stitch([r.intervals for r in results], cfg.p, cfg.E, kept.append)
    else:
        header = Header(cfg.p, cfg.E, HALF, ZERO)
        fd, tmp = tempfile.mkstemp(dir=part_dir, prefix=".plcover-")
        with os.fdopen(fd, "w") as fh:
            writer = CertificateWriter(fh, header)
            count, type1, dropped = _stitch([_read_body(pp) for pp in part_paths], cfg.p, cfg.E, writer)
            writer.finish(count)
        os.replace(tmp, out_path)
        for pp in part_paths:
            os.remove(pp)
        kept = None
    return Cover(cfg.p, cfg.E, HALF, ZERO, kept, count, type1,
                 time.perf_counter() - t0, dropped)
