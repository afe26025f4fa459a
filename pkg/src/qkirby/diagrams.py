"""Kirby diagrams as Morse words, with abelian-group labels.

A diagram is written bottom to top, one slice per line.  Each slice is a
left-to-right list of tokens acting on the current row of strands:

    |        strand passing through
    cup<     minimum, left leg oriented up, right leg down
    cup>     minimum, left leg oriented down, right leg up
    cap<     maximum, consuming (up, down) legs
    cap>     maximum, consuming (down, up) legs
    x+       crossing, bottom-left to top-right strand in front
    x-       crossing, bottom-left to top-right strand behind
    dot(k)   dotted-circle marker spanning the next k strands

So the symbol on an extremum always describes the (left, right) leg
directions, ``>`` meaning (down, up) and ``<`` meaning (up, down); a plain
counterclockwise circle is ``cup>`` followed by ``cap>``.  Header lines
declare the label group (``group Z2``, ``group Z3^2``) and component labels
(``label C2 = 1``).  Undotted components are numbered C1, C2, ... in order
of first appearance (bottom to top, left to right within a slice), and
unlabeled components default to 0.  Lines starting with ``#`` are comments.

Dotted components are always unknotted zero-framed circles represented
solely by their markers; the strands a marker spans are the ones piercing
its disc, and their labels must satisfy the signed sum condition
sum_i (+-alpha_i) = 0, with the sign given by the strand direction.
"""

import itertools
import re
from fractions import Fraction

from .hopf import FiniteAbelianGroup

__all__ = [
    "ParseError",
    "ValidationError",
    "InvalidSite",
    "GKirbyDiagram",
    "LinkData",
    "TradeResult",
    "parse",
    "render",
    "linking_matrix",
    "signature",
    "euler_characteristic",
    "characteristic_sublinks",
    "even_sublinks",
    "mod2_rank",
    "trade_handles",
    "stabilize_gk2",
    "connected_sum_cp2",
    "reverse_component",
    "disjoint_union",
]


class ParseError(ValueError):
    """Positioned syntax error in diagram source (1-based line/column)."""

    def __init__(self, message, line, column):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """Structurally invalid diagram (open strands, widths, cocycle...)."""


class InvalidSite(ValueError):
    """Bad insertion site for a stabilization."""


# tokens are tuples: ("id",), ("cup", "<"), ("cap", ">"), ("x", +1), ("dot", k)

_TOKEN_RE = re.compile(r"\S+")


def _parse_token(word, line, column):
    if word == "|":
        return ("id",)
    if word in ("cup<", "cup>"):
        return ("cup", word[-1])
    if word in ("cap<", "cap>"):
        return ("cap", word[-1])
    if word == "x+":
        return ("x", 1)
    if word == "x-":
        return ("x", -1)
    m = re.fullmatch(r"dot\((\d+)\)", word)
    if m:
        return ("dot", int(m.group(1)))
    raise ParseError("unknown token %r" % word, line, column)


def _token_text(tok):
    if tok[0] == "id":
        return "|"
    if tok[0] == "cup":
        return "cup" + tok[1]
    if tok[0] == "cap":
        return "cap" + tok[1]
    if tok[0] == "x":
        return "x+" if tok[1] > 0 else "x-"
    return "dot(%d)" % tok[1]


def _parse_group(text, line):
    m = re.fullmatch(r"Z(\d+)(?:\^(\d+))?", text)
    if m is None:
        raise ParseError("bad group %r" % text, line, 7)
    n = int(m.group(1))
    k = int(m.group(2)) if m.group(2) else 1
    if n < 1 or k < 1:
        raise ParseError("bad group %r" % text, line, 7)
    return FiniteAbelianGroup((n,) * k)


def _render_group(group):
    orders = group.orders
    if len(orders) == 1:
        return "Z%d" % orders[0]
    return "Z%d^%d" % (orders[0], len(orders))


def _parse_element(text, group, line, column):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError("bad group element %r" % text, line, column)
    if len(parts) != len(group.orders):
        raise ParseError("element %r has wrong length" % text, line, column)
    return tuple(x % n for x, n in zip(parts, group.orders))


def _render_element(el):
    return ",".join(str(x) for x in el)


class GKirbyDiagram:
    """Validated Morse-word diagram.

    Immutable after construction; ``labels`` is a tuple with one group
    element per undotted component, in component order.
    """

    def __init__(self, group, slices, labels=None, label_names=None):
        self.group = group
        self.slices = tuple(tuple(s) for s in slices)
        self._scan()
        n = len(self.components)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValidationError(
                    "expected %d labels, got %d" % (n, len(labels)))
        else:
            labels = tuple([group.zero()] * n)
        if label_names:
            labels = list(labels)
            for name, el in label_names.items():
                m = re.fullmatch(r"C(\d+)", name)
                if not m or not 1 <= int(m.group(1)) <= n:
                    raise ValidationError("no such component %r" % name)
                labels[int(m.group(1)) - 1] = el
            labels = tuple(labels)
        self.labels = labels
        self._check_cocycles()

    # -- construction ---------------------------------------------------

    def _scan(self):
        """Run the Morse word, building the strand graph.

        Edges are maximal strand segments between events; ``|`` passes an
        edge through unchanged while every other token is an event node.
        """
        nodes = []
        edges = []  # dicts: dir, bottom, top (each a (node, port) pair)
        active = []

        def new_edge(direction):
            edges.append({"dir": direction, "bottom": None, "top": None})
            return len(edges) - 1

        for si, toks in enumerate(self.slices):
            pos = 0
            out = []
            for ti, tok in enumerate(toks):
                kind = tok[0]
                need = {"id": 1, "cup": 0, "cap": 2, "x": 2}.get(kind, tok[-1])
                if pos + need > len(active):
                    raise ValidationError(
                        "slice %d: token %d consumes more strands than "
                        "available" % (si + 1, ti + 1))
                ni = len(nodes)
                if kind == "id":
                    out.append(active[pos])
                    pos += 1
                elif kind == "cup":
                    dl, dr = (-1, 1) if tok[1] == ">" else (1, -1)
                    el, er = new_edge(dl), new_edge(dr)
                    edges[el]["bottom"] = (ni, 0)
                    edges[er]["bottom"] = (ni, 1)
                    nodes.append({"kind": "cup", "chir": tok[1],
                                  "slice": si, "tok": ti, "edges": (el, er)})
                    out.extend((el, er))
                elif kind == "cap":
                    el, er = active[pos], active[pos + 1]
                    pos += 2
                    want = (-1, 1) if tok[1] == ">" else (1, -1)
                    if (edges[el]["dir"], edges[er]["dir"]) != want:
                        raise ValidationError(
                            "slice %d: cap%s consumes strands with the "
                            "wrong orientations" % (si + 1, tok[1]))
                    edges[el]["top"] = (ni, 0)
                    edges[er]["top"] = (ni, 1)
                    nodes.append({"kind": "cap", "chir": tok[1],
                                  "slice": si, "tok": ti, "edges": (el, er)})
                elif kind == "x":
                    a, b = active[pos], active[pos + 1]
                    pos += 2
                    c = new_edge(edges[b]["dir"])  # top-left continues b
                    d = new_edge(edges[a]["dir"])  # top-right continues a
                    edges[a]["top"] = (ni, "in_l")
                    edges[b]["top"] = (ni, "in_r")
                    edges[c]["bottom"] = (ni, "out_l")
                    edges[d]["bottom"] = (ni, "out_r")
                    nodes.append({"kind": "x", "sign": tok[1],
                                  "slice": si, "tok": ti,
                                  "in": (a, b), "out": (c, d)})
                    out.extend((c, d))
                else:  # dot
                    k = tok[1]
                    ins = tuple(active[pos:pos + k])
                    pos += k
                    outs = tuple(new_edge(edges[e]["dir"]) for e in ins)
                    for i, (a, b) in enumerate(zip(ins, outs)):
                        edges[a]["top"] = (ni, ("in", i))
                        edges[b]["bottom"] = (ni, ("out", i))
                    nodes.append({"kind": "dot", "k": k, "slice": si,
                                  "tok": ti, "in": ins, "out": outs})
                    out.extend(outs)
            if pos != len(active):
                raise ValidationError(
                    "slice %d: %d strands left unconsumed"
                    % (si + 1, len(active) - pos))
            active = out
        if active:
            raise ValidationError("diagram has %d open strands at the top"
                                  % len(active))

        # components: union-find over edges
        parent = list(range(len(edges)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for node in nodes:
            if node["kind"] in ("cup", "cap"):
                union(*node["edges"])
            elif node["kind"] == "x":
                a, b = node["in"]
                c, d = node["out"]
                union(a, d)
                union(b, c)
            elif node["kind"] == "dot":
                for a, b in zip(node["in"], node["out"]):
                    union(a, b)

        roots = []
        comp_of = {}
        for e in range(len(edges)):
            r = find(e)
            if r not in comp_of:
                comp_of[r] = len(roots)
                roots.append(r)
        self.nodes = nodes
        self.edges = edges
        self.comp_of_edge = [comp_of[find(e)] for e in range(len(edges))]
        self.components = []
        for r in roots:
            first = min(e for e in range(len(edges)) if find(e) == r)
            node, _port = edges[first]["bottom"]
            self.components.append({
                "first_edge": first,
                "first_cup": (nodes[node]["slice"], nodes[node]["tok"]),
            })
        self.dots = [i for i, nd in enumerate(nodes) if nd["kind"] == "dot"]

    def _check_cocycles(self):
        for ni in self.dots:
            node = self.nodes[ni]
            total = self.group.zero()
            for e in node["in"]:
                lab = self.labels[self.comp_of_edge[e]]
                if self.edges[e]["dir"] < 0:
                    lab = self.group.neg(lab)
                total = self.group.add(total, lab)
            if total != self.group.zero():
                raise ValidationError(
                    "dotted disc in slice %d violates the signed label sum"
                    % (node["slice"] + 1))

    # -- basic queries ---------------------------------------------------

    @property
    def n_components(self):
        return len(self.components)

    @property
    def n_dots(self):
        return len(self.dots)

    def component_names(self):
        return ["C%d" % (i + 1) for i in range(self.n_components)]

    def with_labels(self, labels):
        """Same word, new labels (re-validates the cocycle condition)."""
        return GKirbyDiagram(self.group, self.slices, labels=labels)

    def __eq__(self, other):
        return (isinstance(other, GKirbyDiagram)
                and self.group.orders == other.group.orders
                and self.slices == other.slices
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.group.orders, self.slices, self.labels))

    def __repr__(self):
        return "GKirbyDiagram(%d components, %d dots)" % (
            self.n_components, self.n_dots)

    # -- traversal (used by the bead engine) ------------------------------

    def component_passes(self, comp):
        """Walk a component against its orientation from its basepoint.

        Returns a list of passes, one per event the strand runs through:
        ("x", node, "lr"/"rl", direction), ("cup"/"cap", node, chirality) or
        ("dot", node, leg, direction); direction is the strand orientation
        (+1 up) at the pass.  The basepoint is the component's first edge.
        """
        start = self.components[comp]["first_edge"]
        # travel against the orientation of the edge
        edge = start
        heading = "bottom" if self.edges[edge]["dir"] > 0 else "top"
        passes = []
        while True:
            node_i, port = self.edges[edge][heading]
            node = self.nodes[node_i]
            kind = node["kind"]
            if kind == "cup":
                other = node["edges"][1 - port]
                passes.append(("cup", node_i, node["chir"]))
                edge, heading = other, "top"
            elif kind == "cap":
                other = node["edges"][1 - port]
                passes.append(("cap", node_i, node["chir"]))
                edge, heading = other, "bottom"
            elif kind == "x":
                a, b = node["in"]
                c, d = node["out"]
                through = {("in_l", a): ("lr", d, "top"),
                           ("out_r", d): ("lr", a, "bottom"),
                           ("in_r", b): ("rl", c, "top"),
                           ("out_l", c): ("rl", b, "bottom")}
                role, nxt, heading = through[(port, edge)]
                passes.append(("x", node_i, role, self.edges[edge]["dir"]))
                edge = nxt
            else:  # dot leg
                side, leg = port
                if side == "in":
                    nxt, heading = node["out"][leg], "top"
                else:
                    nxt, heading = node["in"][leg], "bottom"
                passes.append(("dot", node_i, leg, self.edges[edge]["dir"]))
                edge = nxt
            if edge == start and (
                    heading == ("bottom" if self.edges[edge]["dir"] > 0
                                else "top")):
                return passes


def parse(text):
    """Parse diagram source into a validated GKirbyDiagram."""
    group = None
    label_lines = []
    slices = []
    for li, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("group "):
            if group is not None:
                raise ParseError("duplicate group line", li, 1)
            group = _parse_group(stripped[6:].strip(), li)
            continue
        if stripped.startswith("label "):
            m = re.fullmatch(r"label\s+(\S+)\s*=\s*(\S+)", stripped)
            if m is None:
                raise ParseError("bad label line", li, 1)
            label_lines.append((li, m.group(1), m.group(2)))
            continue
        toks = []
        for m in _TOKEN_RE.finditer(line):
            toks.append(_parse_token(m.group(0), li, m.start() + 1))
        slices.append(toks)
    if group is None:
        group = FiniteAbelianGroup((2,))
    names = {}
    for li, name, value in label_lines:
        names[name] = _parse_element(value, group, li, 1)
    return GKirbyDiagram(group, slices, label_names=names)


def render(d):
    """Serialize back to the diagram grammar; parse(render(d)) == d."""
    lines = ["group " + _render_group(d.group)]
    for i, lab in enumerate(d.labels):
        if lab != d.group.zero():
            lines.append("label C%d = %s" % (i + 1, _render_element(lab)))
    for toks in d.slices:
        lines.append(" ".join(_token_text(t) for t in toks))
    return "\n".join(lines) + "\n"


class LinkData:
    """Linking matrix of the undotted components (framings on the diagonal)."""

    def __init__(self, lk):
        self.lk = [list(row) for row in lk]
        self.n = len(self.lk)

    def __eq__(self, other):
        return isinstance(other, LinkData) and self.lk == other.lk

    def __repr__(self):
        return "LinkData(%r)" % (self.lk,)


def linking_matrix(d):
    n = d.n_components
    lk = [[0] * n for _ in range(n)]
    for node in d.nodes:
        if node["kind"] != "x":
            continue
        a, b = node["in"]
        sign = node["sign"] * d.edges[a]["dir"] * d.edges[b]["dir"]
        ca, cb = d.comp_of_edge[a], d.comp_of_edge[b]
        if ca == cb:
            lk[ca][ca] += sign
        else:
            lk[ca][cb] += sign
            lk[cb][ca] += sign
    for i in range(n):
        for j in range(n):
            if i != j:
                if lk[i][j] % 2:
                    raise ValidationError(
                        "odd signed crossing count between components "
                        "%d and %d" % (i + 1, j + 1))
                lk[i][j] //= 2
    return LinkData(lk)


def signature(link):
    """Signature of the linking matrix, by exact congruence diagonalization."""
    mat = link.lk if isinstance(link, LinkData) else link
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] for i in range(n)]
    sig = 0
    for k in range(n):
        if a[k][k] == 0:
            # find a usable pivot below/right of k
            piv = next((i for i in range(k, n) if a[i][i] != 0), None)
            if piv is not None:
                for j in range(n):
                    a[k][j], a[piv][j] = a[piv][j], a[k][j]
                for i in range(n):
                    a[i][k], a[i][piv] = a[i][piv], a[i][k]
            else:
                pair = next(((i, j) for i in range(k, n)
                             for j in range(i + 1, n) if a[i][j] != 0), None)
                if pair is None:
                    break  # remaining block is zero
                i, j = pair
                for c in range(n):
                    a[i][c] += a[j][c]
                for r in range(n):
                    a[r][i] += a[r][j]
                for c in range(n):
                    a[k][c], a[i][c] = a[i][c], a[k][c]
                for r in range(n):
                    a[r][k], a[r][i] = a[r][i], a[r][k]
        if a[k][k] == 0:
            break
        sig += 1 if a[k][k] > 0 else -1
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            if f:
                for c in range(n):
                    a[r][c] -= f * a[k][c]
                for c in range(n):
                    a[c][r] -= f * a[c][k]
    return sig


def euler_characteristic(d):
    return 1 - d.n_dots + d.n_components


def _mod2_rows(link):
    mat = link.lk if isinstance(link, LinkData) else link
    return [[x % 2 for x in row] for row in mat]


def mod2_rank(link):
    rows = _mod2_rows(link)
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                rows[r] = [(x + y) % 2 for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _sublinks(link, rhs):
    rows = _mod2_rows(link)
    n = len(rows)
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        if all(sum(rows[i][j] * bits[j] for j in range(n)) % 2 == rhs[i]
               for i in range(n)):
            out.append(bits)
    return out


def characteristic_sublinks(link):
    """All omega with lk(L_i, omega) = lk(L_i, L_i) mod 2 (spin structures)."""
    mat = link.lk if isinstance(link, LinkData) else link
    return _sublinks(link, [mat[i][i] % 2 for i in range(len(mat))])


def even_sublinks(link):
    """All omega with lk(L_i, omega) = 0 mod 2 (H^1 of the boundary)."""
    mat = link.lk if isinstance(link, LinkData) else link
    return _sublinks(link, [0] * len(mat))


def _circle_block(q, k, width):
    """Slices for a zero-framed circle around the strands q..q+k-1.

    The circle is born as a cup just right of the strands; its left leg
    sweeps behind them to the left and back in front of them to the right.
    """
    rows = [[("id",)] * (q + k) + [("cup", "<")] + [("id",)] * (width - q - k)]
    for j in range(1, k + 1):
        m = q + k - j
        rows.append([("id",)] * m + [("x", 1)] + [("id",)] * (width - m))
    for j in range(1, k + 1):
        m = q + j - 1
        rows.append([("id",)] * m + [("x", 1)] + [("id",)] * (width - m))
    rows.append([("id",)] * (q + k) + [("cap", "<")] + [("id",)]
                * (width - q - k))
    return rows


def _comp_map(old, new, cup_coord_map):
    """Map old component indices to new ones via first-cup coordinates."""
    coords = {c["first_cup"]: i for i, c in enumerate(new.components)}
    return [coords[cup_coord_map[c["first_cup"]]] for c in old.components]


class TradeResult:
    """Outcome of trading dotted components for zero-framed circles."""

    def __init__(self, diagram, old_to_new, circles, group):
        self.diagram = diagram
        self.old_to_new = old_to_new
        self.circles = circles
        self._group = group

    def extensions(self, omega=None):
        """Label vectors for the traded diagram.

        With ``omega`` (labels of the original undotted components), old
        components keep their labels and the new circles range over the
        whole group.  With ``omega=None`` every component ranges freely.
        """
        n = self.diagram.n_components
        if omega is None:
            yield from itertools.product(self._group.elements(), repeat=n)
            return
        base = [None] * n
        for old, new in enumerate(self.old_to_new):
            base[new] = omega[old]
        for choice in itertools.product(self._group.elements(),
                                        repeat=len(self.circles)):
            labels = list(base)
            for c, el in zip(self.circles, choice):
                labels[c] = el
            yield tuple(labels)


def trade_handles(d):
    """Replace every dotted disc by a zero-framed circle around its strands."""
    new_slices = []
    cup_map = {}
    circle_cups = []
    for si, toks in enumerate(d.slices):
        row = []
        pending = []  # (strand position, k) of dots in this slice
        pos = 0
        for ti, tok in enumerate(toks):
            if tok[0] == "dot":
                pending.append((pos, tok[1]))
                row.extend([("id",)] * tok[1])
                pos += tok[1]
            else:
                if tok[0] == "cup":
                    cup_map[(si, ti)] = (len(new_slices), len(row))
                row.append(tok)
                pos += {"id": 1, "cup": 2, "cap": 0, "x": 2}[tok[0]]
        width = sum({"id": 1, "cup": 2, "x": 2}.get(t[0], 0) +
                    (t[1] if t[0] == "dot" else 0) for t in toks)
        new_slices.append(row)
        for q, k in pending:
            block = _circle_block(q, k, width)
            cup_si = len(new_slices)
            circle_cups.append((cup_si, q + k))
            new_slices.extend(block)
    traded = GKirbyDiagram(d.group, new_slices)
    old_to_new = _comp_map(d, traded, cup_map)
    coords = {c["first_cup"]: i for i, c in enumerate(traded.components)}
    circles = [coords[c] for c in circle_cups]
    labels = list(traded.labels)
    for old, new in enumerate(old_to_new):
        labels[new] = d.labels[old]
    traded = traded.with_labels(labels)
    return TradeResult(traded, old_to_new, circles, d.group)


def stabilize_gk2(d, site):
    """Insert a canceling dotted/zero-framed pair at a slice boundary."""
    if not isinstance(site, int) or not 0 <= site <= len(d.slices):
        raise InvalidSite("site must be a slice index in 0..%d"
                          % len(d.slices))
    width = 0
    for toks in d.slices[:site]:
        width += sum({"id": 1, "cup": 2, "x": 2}.get(t[0], 0) +
                     (t[1] if t[0] == "dot" else 0) for t in toks)
        width -= sum({"id": 1, "cap": 2, "x": 2}.get(t[0], 0) +
                     (t[1] if t[0] == "dot" else 0) for t in toks)
    pad = [("id",)] * width
    block = [pad + [("cup", "<")],
             pad + [("dot", 1), ("id",)],
             pad + [("cap", "<")]]
    new_slices = list(d.slices[:site]) + block + list(d.slices[site:])
    cup_map = {}
    for si, toks in enumerate(d.slices):
        for ti, tok in enumerate(toks):
            if tok[0] == "cup":
                cup_map[(si, ti)] = (si if si < site else si + 3, ti)
    new = GKirbyDiagram(d.group, new_slices)
    old_to_new = _comp_map(d, new, cup_map)
    labels = list(new.labels)
    for old, ni in enumerate(old_to_new):
        labels[ni] = d.labels[old]
    return new.with_labels(labels)


def _kink_slices(sign):
    return [[("cup", ">")],
            [("cup", "<"), ("id",), ("id",)],
            [("id",), ("x", sign), ("id",)],
            [("cap", "<"), ("cap", ">")]]


def connected_sum_cp2(d, sign, label=None):
    """Disjoint +-1-framed unknot: boundary sum with a punctured (-)CP^2."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    new = GKirbyDiagram(d.group, list(d.slices) + _kink_slices(sign))
    labels = list(d.labels) + [label if label is not None else d.group.zero()]
    return new.with_labels(labels)


def reverse_component(d, comp):
    """Flip the orientation of one component and negate its label."""
    flip = set()
    for ni, node in enumerate(d.nodes):
        if node["kind"] in ("cup", "cap") and \
                d.comp_of_edge[node["edges"][0]] == comp:
            flip.add((node["slice"], node["tok"]))
    new_slices = []
    for si, toks in enumerate(d.slices):
        row = []
        for ti, tok in enumerate(toks):
            if (si, ti) in flip:
                row.append((tok[0], "<" if tok[1] == ">" else ">"))
            else:
                row.append(tok)
        new_slices.append(row)
    labels = list(d.labels)
    labels[comp] = d.group.neg(labels[comp])
    return GKirbyDiagram(d.group, new_slices, labels=labels)


def disjoint_union(d1, d2):
    """Stack two diagrams (both words are closed, so this is disjoint)."""
    if d1.group.orders != d2.group.orders:
        raise ValidationError("label groups differ")
    return GKirbyDiagram(d1.group, list(d1.slices) + list(d2.slices),
                         labels=tuple(d1.labels) + tuple(d2.labels))
