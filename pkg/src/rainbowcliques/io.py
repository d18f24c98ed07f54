"""Plain-text instance files.

Three formats share one layout: a header ``<tag> <n> <m>`` followed by ``m``
data lines.  Tags are ``ecg`` (``u v color``), ``mg`` (``u v mult`` with mult
1 or 2) and ``dg`` (``u v`` for the arc ``u -> v``).  Blank lines and lines
starting with ``#`` are ignored.  Writers emit lines in sorted order.
"""

from __future__ import annotations

from pathlib import Path

from .core import EdgeColoredGraph, SimpleDigraph, StandardMultigraph

__all__ = ["ParseError", "FORMATS", "parse", "serialize", "read_instance", "write_instance", "format_of"]

FORMATS = {"ecg": EdgeColoredGraph, "mg": StandardMultigraph, "dg": SimpleDigraph}


class ParseError(ValueError):
    """Malformed instance text; ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def format_of(obj) -> str:
    for tag, cls in FORMATS.items():
        if isinstance(obj, cls):
            return tag
    raise TypeError(f"no file format for {type(obj).__name__}")


def serialize(obj) -> str:
    tag = format_of(obj)
    if tag == "ecg":
        rows = [f"{u} {v} {c}" for (u, v), c in sorted(obj.color.items())]
    elif tag == "mg":
        rows = [f"{u} {v} {k}" for (u, v), k in sorted(obj.mult.items())]
    else:
        rows = [f"{u} {v}" for u, v in sorted(obj.arcs)]
    return "\n".join([f"{tag} {obj.n} {len(rows)}", *rows]) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse(text: str):
    """Parse one instance; raises :class:`ParseError` naming the bad line."""
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, t) for i, t in lines if t and not t[0].startswith("#")]
    if not lines:
        raise ParseError("empty input")
    hline, head = lines[0]
    if len(head) != 3 or head[0] not in FORMATS:
        raise ParseError(f"header must be '<ecg|mg|dg> <n> <m>', got {' '.join(head)!r}", hline)
    tag = head[0]
    n, m = _ints(head[1:], hline)
    if n < 0 or m < 0:
        raise ParseError("n and m must be nonnegative", hline)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else hline)
        raise ParseError(f"header declares {m} data lines, found {len(body)}", where)
    width = 2 if tag == "dg" else 3
    seen: dict = {}
    data = []
    for i, toks in body:
        if len(toks) != width:
            raise ParseError(f"expected {width} fields, got {len(toks)}", i)
        vals = _ints(toks, i)
        u, v = vals[0], vals[1]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", i)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", i)
        key = (u, v) if tag == "dg" else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate of line {seen[key]}", i)
        seen[key] = i
        if tag == "ecg" and vals[2] < 0:
            raise ParseError("colour must be a nonnegative integer", i)
        if tag == "mg" and vals[2] not in (1, 2):
            raise ParseError("multiplicity must be 1 or 2", i)
        data.append((key, vals[2] if width == 3 else None))
    if tag == "dg":
        return SimpleDigraph(n, [k for k, _ in data])
    return FORMATS[tag](n, dict(data))


def read_instance(path) -> object:
    return parse(Path(path).read_text())


def write_instance(obj, path) -> None:
    Path(path).write_text(serialize(obj))
