"""Canonical line-oriented network file format.

The format is bit-exact: serializing a parsed file reproduces it byte for
byte, and serializing the same network twice yields identical bytes. Reals
are written with at most six fractional digits, trailing zeros stripped,
never in exponent notation, and -0 normalized to 0.

Layout::

    rfidnet 1
    # optional comment lines
    reader <id> <x> <y> <radius>      (geometric)
    reader <id> -                     (explicit)
    tag <id> <x> <y>   |   tag <id> -
    covers <reader-id> <tag-id>       (explicit only, sorted (reader, tag))
"""

from __future__ import annotations

from .network import (
    NetworkOrigin,
    Point2D,
    ReaderSpec,
    RfidNetwork,
    TagSpec,
    build_geometric,
)

__all__ = [
    "FORMAT_HEADER",
    "NetworkFormatError",
    "canonical_real",
    "serialize_network",
    "parse_network",
    "save_network",
    "load_network",
]

FORMAT_HEADER = "rfidnet 1"


class NetworkFormatError(ValueError):
    """Raised on malformed input; message names the offending line."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def canonical_real(value: float) -> str:
    """Shortest fixed-point form with at most 6 fractional digits."""
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    if text in ("-0", ""):
        return "0"
    return text


def serialize_network(net: RfidNetwork) -> str:
    lines = [FORMAT_HEADER]
    for comment in net.header_comments:
        lines.append(f"# {comment}")
    for r in net.readers:
        if r.position is not None and r.radius is not None:
            lines.append(
                f"reader {r.id} {canonical_real(r.position.x)} "
                f"{canonical_real(r.position.y)} {canonical_real(r.radius)}"
            )
        else:
            lines.append(f"reader {r.id} -")
    for t in net.tags:
        if t.position is not None:
            lines.append(
                f"tag {t.id} {canonical_real(t.position.x)} "
                f"{canonical_real(t.position.y)}"
            )
        else:
            lines.append(f"tag {t.id} -")
    if net.origin is NetworkOrigin.EXPLICIT:
        pairs = sorted(
            (i, t) for i in range(net.reader_count) for t in net.coverage[i]
        )
        for i, t in pairs:
            lines.append(f"covers {i} {t}")
    return "\n".join(lines) + "\n"


def _parse_real(token: str, line_no: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise NetworkFormatError(f"bad {what} {token!r}", line_no) from None
    if value != value or value in (float("inf"), float("-inf")):
        raise NetworkFormatError(f"non-finite {what} {token!r}", line_no)
    return value


def _parse_id(token: str, line_no: int, what: str) -> int:
    if not token.isdigit():
        raise NetworkFormatError(f"bad {what} {token!r}", line_no)
    return int(token)


def parse_network(text: str) -> RfidNetwork:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != FORMAT_HEADER:
        raise NetworkFormatError(f"missing {FORMAT_HEADER!r} header", 1)

    comments: list[str] = []
    readers: list[ReaderSpec] = []
    tags: list[TagSpec] = []
    pairs: list[tuple[int, int]] = []
    bare_readers = 0

    for line_no, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "reader":
            if len(fields) == 3 and fields[2] == "-":
                readers.append(ReaderSpec(_parse_id(fields[1], line_no, "reader id")))
                bare_readers += 1
            elif len(fields) == 5:
                readers.append(
                    ReaderSpec(
                        _parse_id(fields[1], line_no, "reader id"),
                        Point2D(
                            _parse_real(fields[2], line_no, "x"),
                            _parse_real(fields[3], line_no, "y"),
                        ),
                        _parse_real(fields[4], line_no, "radius"),
                    )
                )
            else:
                raise NetworkFormatError(
                    "reader line needs '<id> <x> <y> <radius>' or '<id> -'", line_no
                )
        elif kind == "tag":
            if len(fields) == 3 and fields[2] == "-":
                tags.append(TagSpec(_parse_id(fields[1], line_no, "tag id")))
            elif len(fields) == 4:
                tags.append(
                    TagSpec(
                        _parse_id(fields[1], line_no, "tag id"),
                        Point2D(
                            _parse_real(fields[2], line_no, "x"),
                            _parse_real(fields[3], line_no, "y"),
                        ),
                    )
                )
            else:
                raise NetworkFormatError(
                    "tag line needs '<id> <x> <y>' or '<id> -'", line_no
                )
        elif kind == "covers":
            if len(fields) != 3:
                raise NetworkFormatError(
                    "covers line needs '<reader-id> <tag-id>'", line_no
                )
            pairs.append(
                (
                    _parse_id(fields[1], line_no, "reader id"),
                    _parse_id(fields[2], line_no, "tag id"),
                )
            )
        else:
            raise NetworkFormatError(f"unknown record {kind!r}", line_no)

    explicit = bool(pairs) or bare_readers > 0
    try:
        if explicit:
            if bare_readers != len(readers):
                raise ValueError(
                    "explicit coverage cannot be mixed with reader geometry"
                )
            cov: dict[int, list[int]] = {r.id: [] for r in readers}
            seen: set[tuple[int, int]] = set()
            for i, t in pairs:
                if (i, t) in seen:
                    raise ValueError(f"duplicate covers pair ({i}, {t})")
                seen.add((i, t))
                if i not in cov:
                    raise ValueError(f"covers names unknown reader {i}")
                cov[i].append(t)
            net = RfidNetwork(readers, tags, cov, NetworkOrigin.EXPLICIT, comments)
        else:
            net = build_geometric(readers, tags, header_comments=comments)
    except ValueError as exc:
        if isinstance(exc, NetworkFormatError):
            raise
        raise NetworkFormatError(str(exc)) from None
    return net


def save_network(net: RfidNetwork, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_network(net))


def load_network(path) -> RfidNetwork:
    with open(path, "r", encoding="ascii") as fh:
        return parse_network(fh.read())
