"""Reading point files and writing result documents.

Coordinates are decimal text scaled by 10**k and rounded half-to-even, so
every later decision is made on exact integers.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_EVEN, Decimal, InvalidOperation
from pathlib import Path
from typing import Iterable, Optional

from .errors import InvalidInputError
from .geometry import PointSet

DEFAULT_SCALE_K = 6
MAX_SCALE_K = 9


def _check_k(k: int) -> None:
    if not 0 <= k <= MAX_SCALE_K:
        raise InvalidInputError(f"scale exponent k must be in [0, {MAX_SCALE_K}], got {k}")


def scale_decimal(text: str, k: int = DEFAULT_SCALE_K) -> int:
    try:
        d = Decimal(text.strip())
    except InvalidOperation:
        raise InvalidInputError(f"not a decimal number: {text!r}") from None
    if not d.is_finite():
        raise InvalidInputError(f"not a finite number: {text!r}")
    return int(d.scaleb(k).to_integral_value(rounding=ROUND_HALF_EVEN))


def parse_points(lines: Iterable[str], k: int = DEFAULT_SCALE_K) -> list[tuple[int, int]]:
    """Parse ``x,y`` lines; blank lines and ``#`` comments are skipped."""
    _check_k(k)
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p for p in line.replace(",", " ").split()]
        if len(parts) != 2:
            raise InvalidInputError(f"line {lineno}: expected 'x,y', got {raw.strip()!r}")
        try:
            out.append((scale_decimal(parts[0], k), scale_decimal(parts[1], k)))
        except InvalidInputError as exc:
            raise InvalidInputError(f"line {lineno}: {exc}") from None
    return out


def read_points(path, k: int = DEFAULT_SCALE_K) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return PointSet(parse_points(fh, k))


def format_scaled(v: int, k: int) -> str:
    """Inverse of :func:`scale_decimal` for integers, without float rounding."""
    if k == 0:
        return str(v)
    sign = "-" if v < 0 else ""
    q, r = divmod(abs(v), 10**k)
    return f"{sign}{q}.{r:0{k}d}"


def write_points(path, points, k: int = DEFAULT_SCALE_K, header: Optional[str] = None) -> None:
    _check_k(k)
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        for x, y in points:
            fh.write(f"{format_scaled(x, k)},{format_scaled(y, k)}\n")


def result_document(tour, scale_k: int) -> dict:
    frame = tour.partition.frame if tour.partition is not None else None
    doc = {
        "n": len(tour.order),
        "scale_k": scale_k,
        "acute": tour.acute,
        "max_angle_rad": tour.max_angle,
        "case_taken": tour.case_taken,
        "transforms_applied": list(tour.transforms_applied),
        "order": list(tour.order),
    }
    if frame is not None:
        doc["frame"] = {"u": list(frame.u), "v": list(frame.v), "cu": frame.cu, "cv": frame.cv}
    return doc


def write_document(path, doc: dict) -> None:
    Path(path).write_text(json.dumps(doc, sort_keys=True) + "\n", encoding="utf-8")


def read_order(path) -> list[int]:
    """Tour order from a result document or a plain list of integers."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{path}: bad result document: {exc}") from None
        if "order" not in doc:
            raise InvalidInputError(f"{path}: result document has no 'order'")
        order = doc["order"]
    else:
        try:
            order = [int(tok) for tok in stripped.replace(",", " ").split()]
        except ValueError as exc:
            raise InvalidInputError(f"{path}: {exc}") from None
    if not all(isinstance(i, int) for i in order):
        raise InvalidInputError(f"{path}: order entries must be integers")
    return order
