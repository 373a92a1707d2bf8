"""Colorings, dominating-set checks, and certificate verification.

A Coloring is the universal certificate format: a total assignment
vertex -> color in {0..k-1} with k carried explicitly, so unused colors
invalidate a certificate instead of silently shrinking k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidCertificate, PreconditionViolated, SizeMismatch
from .graph import Graph


class VerificationMode(Enum):
    DOMATIC = "domatic"
    TOTAL_DOMATIC = "total-domatic"
    INJECTIVE = "injective"
    PROPER_INJECTIVE = "proper-injective"

    @staticmethod
    def parse(s: str) -> "VerificationMode":
        for m in VerificationMode:
            if m.value == s:
                return m
        raise PreconditionViolated(f"unknown verification mode {s!r}")


class Coloring:
    """Total color assignment with an explicit color count k."""

    __slots__ = ("k", "colors")

    def __init__(self, k: int, colors):
        if k < 1:
            raise InvalidCertificate("k must be >= 1")
        arr = np.asarray(colors, dtype=np.int32).copy()
        if arr.ndim != 1:
            raise InvalidCertificate("colors must be a flat sequence")
        if arr.size and (arr.min() < 0 or arr.max() >= k):
            raise InvalidCertificate("color value out of range(k)")
        arr.setflags(write=False)
        self.k = k
        self.colors = arr

    def __len__(self) -> int:
        return len(self.colors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coloring)
            and self.k == other.k
            and np.array_equal(self.colors, other.colors)
        )

    def __hash__(self):
        return hash((self.k, self.colors.tobytes()))

    def __repr__(self) -> str:
        return f"<Coloring k={self.k} n={len(self.colors)}>"

    def class_sizes(self) -> np.ndarray:
        return np.bincount(self.colors, minlength=self.k)

    def color_class(self, c: int) -> list[int]:
        return [int(v) for v in np.nonzero(self.colors == c)[0]]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a certificate check.

    On failure, witness is (smallest violating vertex, missing color) for the
    domatic modes and (vertex, repeated color) for the injective modes.
    """

    valid: bool
    witness: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.valid and self.witness is not None:
            raise ValueError("valid report cannot carry a witness")


def _segment_or(values: np.ndarray, indptr: np.ndarray) -> np.ndarray:
    # caller guarantees no empty segments (no isolated vertices)
    return np.bitwise_or.reduceat(values, indptr[:-1])


def _color_planes(colors: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex one-hot color bit across ceil(k/64) uint64 planes."""
    planes = (k + 63) // 64
    bits = np.zeros((len(colors), planes), dtype=np.uint64)
    plane = colors >> 6
    bits[np.arange(len(colors)), plane] = np.uint64(1) << (colors & 63).astype(np.uint64)
    full = np.full(planes, ~np.uint64(0), dtype=np.uint64)
    rem = k & 63
    if rem:
        full[-1] = (np.uint64(1) << np.uint64(rem)) - np.uint64(1)
    return bits, full


def _first_missing_color(g: Graph, c: Coloring, v: int, closed: bool) -> int:
    seen = 0
    if closed:
        seen |= 1 << int(c.colors[v])
    for w in g.neighbors(v):
        seen |= 1 << int(c.colors[w])
    for color in range(c.k):
        if not seen >> color & 1:
            return color
    raise AssertionError("no missing color at flagged vertex")


def _first_repeat_color(g: Graph, c: Coloring, v: int, closed: bool) -> int:
    members = [int(w) for w in g.neighbors(v)]
    if closed:
        members.append(v)
        members.sort()
    seen: set[int] = set()
    for w in members:
        color = int(c.colors[w])
        if color in seen:
            return color
        seen.add(color)
    raise AssertionError("no repeated color at flagged vertex")


def _verify_coverage(g: Graph, c: Coloring, closed: bool) -> VerificationReport:
    if g.has_isolated:
        # scalar path: empty neighborhoods break the vectorized segment OR
        for v in range(g.n):
            seen = 0
            if closed:
                seen |= 1 << int(c.colors[v])
            for w in g.neighbors(v):
                seen |= 1 << int(c.colors[w])
            if seen != (1 << c.k) - 1:
                return VerificationReport(False, (v, _first_missing_color(g, c, v, closed)))
        return VerificationReport(True)
    bits, full = _color_planes(c.colors, c.k)
    bad = np.zeros(g.n, dtype=bool)
    for p in range(bits.shape[1]):
        seen = _segment_or(bits[g.indices, p], g.indptr)
        if closed:
            seen |= bits[:, p]
        bad |= seen != full[p]
    if not bad.any():
        return VerificationReport(True)
    v = int(np.argmax(bad))
    return VerificationReport(False, (v, _first_missing_color(g, c, v, closed)))


def _verify_injective(g: Graph, c: Coloring, closed: bool) -> VerificationReport:
    rows = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    vals = c.colors[g.indices].astype(np.int64)
    if closed:
        rows = np.concatenate([rows, np.arange(g.n, dtype=np.int64)])
        vals = np.concatenate([vals, c.colors.astype(np.int64)])
    keys = rows * c.k + vals
    keys.sort()
    dup = keys[1:] == keys[:-1]
    if not dup.any():
        return VerificationReport(True)
    v = int(keys[1:][dup].min() // c.k)
    return VerificationReport(False, (v, _first_repeat_color(g, c, v, closed)))


def verify_coloring(g: Graph, c: Coloring, mode: VerificationMode) -> VerificationReport:
    """Check a coloring certificate.

    Domatic: every closed neighborhood contains all k colors.
    TotalDomatic: every open neighborhood contains all k colors.
    Injective: no open neighborhood repeats a color.
    ProperInjective: additionally no edge joins same-colored endpoints,
    which is equivalent to every closed neighborhood being rainbow.

    The witness vertex is the smallest violating id; verification outcome is
    deterministic.
    """
    if len(c) != g.n:
        raise SizeMismatch(f"coloring length {len(c)} != graph order {g.n}")
    if mode is VerificationMode.DOMATIC:
        return _verify_coverage(g, c, closed=True)
    if mode is VerificationMode.TOTAL_DOMATIC:
        return _verify_coverage(g, c, closed=False)
    if mode is VerificationMode.INJECTIVE:
        return _verify_injective(g, c, closed=False)
    if mode is VerificationMode.PROPER_INJECTIVE:
        return _verify_injective(g, c, closed=True)
    raise PreconditionViolated(f"unsupported mode {mode}")


def is_dominating(g: Graph, s: Iterable[int], total: bool = False) -> bool:
    """Is s a dominating set (total=False) or total dominating set (total=True)?"""
    mask = np.zeros(g.n, dtype=bool)
    for v in s:
        if not 0 <= v < g.n:
            raise PreconditionViolated(f"vertex {v} outside the graph")
        mask[v] = True
    if g.has_isolated:
        for v in range(g.n):
            covered = any(mask[w] for w in g.neighbors(v))
            if not covered and (total or not mask[v]):
                return False
        return True
    covered = np.logical_or.reduceat(mask[g.indices], g.indptr[:-1])
    if not total:
        covered |= mask
    return bool(covered.all())


def domination_upper_from_coloring(g: Graph, c: Coloring, mode: VerificationMode) -> int:
    """Minimum class size of a verified (total-)domatic coloring.

    Each class is a (total) dominating set, so this is an upper bound on the
    (total) domination number; it is exact for full colorings of regular
    graphs.
    """
    if mode not in (VerificationMode.DOMATIC, VerificationMode.TOTAL_DOMATIC):
        raise PreconditionViolated("only the domatic modes bound domination numbers")
    report = verify_coloring(g, c, mode)
    if not report.valid:
        raise InvalidCertificate(f"certificate fails at witness {report.witness}")
    return int(c.class_sizes().min())


# -- coloring surgery ---------------------------------------------------------


def merge_color_classes(c: Coloring, a: int, b: int) -> Coloring:
    """Merge class b into class a and compact color ids; k drops by one.

    Merging preserves validity of domatic and total-domatic certificates
    (the union of two dominating sets still dominates).
    """
    if not (0 <= a < c.k and 0 <= b < c.k) or a == b:
        raise PreconditionViolated("need two distinct colors within range(k)")
    lo, hi = min(a, b), max(a, b)
    colors = np.where(c.colors == hi, lo, c.colors)
    colors = np.where(colors > hi, colors - 1, colors)
    return Coloring(c.k - 1, colors)


def truncate_colors(c: Coloring, k: int) -> Coloring:
    """Reduce to k colors by merging classes downward modulo k."""
    if k < 1 or k > c.k:
        raise PreconditionViolated("truncation target must be in 1..k")
    if k == c.k:
        return c
    return Coloring(k, c.colors % k)


# -- certificate JSON ----------------------------------------------------------


def coloring_to_json(c: Coloring, provenance: Optional[dict] = None) -> str:
    """Canonical certificate JSON; key order is fixed so writes are bit-exact."""
    payload: dict = {"k": c.k, "colors": [int(x) for x in c.colors]}
    if provenance is not None:
        payload["provenance"] = provenance
    return json.dumps(payload, separators=(",", ":")) + "\n"


def coloring_from_json(text: str) -> tuple[Coloring, Optional[dict]]:
    try:
        payload = json.loads(text)
        coloring = Coloring(int(payload["k"]), payload["colors"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidCertificate(f"malformed certificate JSON: {exc}") from exc
    return coloring, payload.get("provenance")


def write_coloring(c: Coloring, path, provenance: Optional[dict] = None) -> None:
    with open(path, "w") as fh:
        fh.write(coloring_to_json(c, provenance))


def read_coloring(path) -> tuple[Coloring, Optional[dict]]:
    with open(path) as fh:
        return coloring_from_json(fh.read())
