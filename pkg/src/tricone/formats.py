"""Text formats: sparse weighted graphs, dense facet lists, class CSVs, certificates.

Sparse graph::

    n 5
    # comment
    1 2 1
    1 5 -1/2

Facet list: a header ``n <int>`` then one dense colex vector per line.
Class CSV: ``canonical_rep;count;stab_order;category;degree`` per line, with
the representative written as space-separated integers and degree -1 when
it was not computed.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .graphcore import WeightedGraph, edge_index, num_edges


class ParseError(InvalidInputError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _parse_number(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"not an integer or rational: {tok!r}") from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_header(lineno: int, line: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise ParseError(lineno, f"expected header 'n <integer>', got {line!r}")
    n = int(parts[1])
    if n < 2:
        raise ParseError(lineno, "n must be at least 2")
    return n


def parse_graph(text: str) -> WeightedGraph:
    """Parse the sparse weighted-graph format."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(0, "empty graph file") from None
    n = _parse_header(lineno, header)
    w = [Fraction(0)] * num_edges(n)
    seen: set[int] = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(lineno, f"expected '<u> <v> <weight>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            i = edge_index((u, v), n)
        except (ValueError, InvalidInputError):
            raise ParseError(lineno, f"invalid edge {parts[0]} {parts[1]} for n={n}") from None
        if i in seen:
            raise ParseError(lineno, f"duplicate edge {{{u},{v}}}")
        seen.add(i)
        w[i] = _parse_number(parts[2], lineno)
    return WeightedGraph(n, tuple(w))


def format_graph(g: WeightedGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v} {w}" for (u, v), w in g.items() if w != 0]
    return "\n".join(lines) + "\n"


def read_graph(path) -> WeightedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(path, g: WeightedGraph) -> None:
    Path(path).write_text(format_graph(g))


def format_vector(vec: Iterable) -> str:
    return " ".join(str(x) for x in vec)


def parse_vector(line: str, lineno: int = 1) -> list[Fraction]:
    return [_parse_number(tok, lineno) for tok in line.replace(",", " ").replace("(", " ")
            .replace(")", " ").split()]


def format_facet_list(n: int, vectors: Iterable[Sequence]) -> str:
    rows = sorted(tuple(v) for v in vectors)
    return "\n".join([f"n {n}"] + [format_vector(r) for r in rows]) + "\n"


def parse_facet_list(text: str) -> tuple[int, list[tuple[Fraction, ...]]]:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(0, "empty facet list") from None
    n = _parse_header(lineno, header)
    out = []
    for lineno, line in lines:
        vec = parse_vector(line, lineno)
        if len(vec) != num_edges(n):
            raise ParseError(lineno, f"expected {num_edges(n)} entries, got {len(vec)}")
        out.append(tuple(vec))
    return n, out


def write_facet_list(path, n: int, vectors: Iterable[Sequence]) -> None:
    Path(path).write_text(format_facet_list(n, vectors))


def read_facet_list(path) -> tuple[int, list[tuple[Fraction, ...]]]:
    return parse_facet_list(Path(path).read_text())


def format_class_csv(classes) -> str:
    rows = []
    for c in classes:
        deg = -1 if c.degree is None else c.degree
        rows.append(f"{format_vector(c.as_ints())};{c.count};{c.stabilizer_order};{c.category};{deg}")
    return "\n".join(rows) + ("\n" if rows else "")


def parse_class_csv(text: str) -> list[tuple[tuple[int, ...], int, int, int, int]]:
    out = []
    for lineno, line in _content_lines(text):
        parts = line.split(";")
        if len(parts) != 5:
            raise ParseError(lineno, "expected 5 ';'-separated fields")
        try:
            rep = tuple(int(x) for x in parts[0].split())
            count, stab, cat, deg = (int(x) for x in parts[1:])
        except ValueError:
            raise ParseError(lineno, "non-integer field in class CSV") from None
        out.append((rep, count, stab, cat, deg))
    return out


def format_member_certificate(coefficients: dict) -> str:
    lines = [f"{a} {b} {c} {x.numerator}/{x.denominator}"
             for (a, b, c), x in sorted(coefficients.items())]
    return "\n".join(lines) + "\n"


def parse_member_certificate(text: str) -> dict:
    out = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 4:
            raise ParseError(lineno, "expected 'a b c num/den'")
        out[tuple(sorted(int(x) for x in parts[:3]))] = _parse_number(parts[3], lineno)
    return out
