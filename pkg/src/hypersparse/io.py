"""Text formats for hypergraphs and labels.

Hypergraph files start with a header ``uhg <n> <m>`` or ``dhg <n> <m>``
followed by ``m`` body lines::

    uhg 3 2
    2.0 0 1 2          # <weight> <v1> ... <vk>

    dhg 3 1
    1 0 > 1 2          # <weight> <tail ids> > <head ids>

``#`` starts a comment; blank lines are ignored. Label files hold
``<vertex> <value>`` lines. Serialization is canonical: sorted vertex lists,
single spaces, weights with 17 significant digits (exact round trip).
"""
import math

from .core import DirectedHypergraph, Labeling, UndirectedHypergraph
from .errors import InputError, ParseError


def _lines(text):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line.split()


def _int(tok, num, what):
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"bad {what} {tok!r}", num) from None
    return value


def _real(tok, num):
    try:
        value = float(tok)
    except ValueError:
        raise ParseError(f"bad weight {tok!r}", num) from None
    if not math.isfinite(value) or value < 0:
        raise ParseError(f"weight must be finite and nonnegative, got {tok}", num)
    return value


def _vertices(tokens, n, num):
    if not tokens:
        raise ParseError("empty vertex list", num)
    out = []
    for tok in tokens:
        v = _int(tok, num, "vertex")
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range", num)
        out.append(v)
    if len(set(out)) != len(out):
        raise ParseError("duplicate vertex in list", num)
    return out


def parse_hypergraph(text):
    """Parse a ``uhg``/``dhg`` document into a hypergraph."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("missing header", 1)
    num, head = lines[0]
    if len(head) != 3 or head[0] not in ("uhg", "dhg"):
        raise ParseError("header must be 'uhg <n> <m>' or 'dhg <n> <m>'", num)
    n = _int(head[1], num, "vertex count")
    m = _int(head[2], num, "edge count")
    if n < 0 or m < 0:
        raise ParseError("counts must be nonnegative", num)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else num)
        raise ParseError(f"header declares {m} lines, found {len(body)}", where)
    directed = head[0] == "dhg"
    items = []
    for num, toks in body:
        w = _real(toks[0], num)
        rest = toks[1:]
        if directed:
            if rest.count(">") != 1:
                raise ParseError("hyperarc needs exactly one '>' separator", num)
            cut = rest.index(">")
            items.append((_vertices(rest[:cut], n, num), _vertices(rest[cut + 1:], n, num), w))
        else:
            if ">" in rest:
                raise ParseError("'>' is only allowed in dhg files", num)
            items.append((_vertices(rest, n, num), w))
    try:
        if directed:
            return DirectedHypergraph(n, items)
        return UndirectedHypergraph(n, items)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def _fmt(w):
    return format(float(w), ".17g")


def serialize_hypergraph(G):
    if G.directed:
        lines = [f"dhg {G.n} {G.m}"]
        for t, h, w in G:
            lines.append(" ".join([_fmt(w), *map(str, t), ">", *map(str, h)]))
    else:
        lines = [f"uhg {G.n} {G.m}"]
        for e, w in G:
            lines.append(" ".join([_fmt(w), *map(str, e)]))
    return "\n".join(lines) + "\n"


def parse_labels(text, n=None):
    values = {}
    for num, toks in _lines(text):
        if len(toks) != 2:
            raise ParseError("label lines must be '<vertex> <value>'", num)
        v = _int(toks[0], num, "vertex")
        if v < 0 or (n is not None and v >= n):
            raise ParseError(f"vertex {v} out of range", num)
        if v in values:
            raise ParseError(f"duplicate label for vertex {v}", num)
        try:
            values[v] = float(toks[1])
        except ValueError:
            raise ParseError(f"bad label value {toks[1]!r}", num) from None
    return Labeling(values)


def serialize_labels(labels):
    return "".join(f"{v} {_fmt(x)}\n" for v, x in sorted(labels.values.items()))


def read_hypergraph(path):
    with open(path) as fh:
        return parse_hypergraph(fh.read())


def write_hypergraph(G, path):
    with open(path, "w") as fh:
        fh.write(serialize_hypergraph(G))


def read_labels(path, n=None):
    with open(path) as fh:
        return parse_labels(fh.read(), n)
