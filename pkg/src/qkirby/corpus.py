"""A small corpus of named Kirby diagrams with certified topology.

Each entry records the Morse word together with independently computable
topological data (linking matrix, signature, Euler characteristic of the
trace), so tests can cross-check the combinatorial layer before any
algebra runs.  ``gk_pairs`` builds pairs of labeled diagrams related by a
single generalized Kirby move, with the induced relabeling.
"""

from . import diagrams as dg

__all__ = ["CorpusDiagram", "DIAGRAMS", "names", "diagram", "GKPair",
           "gk_pairs", "Z2"]

Z2 = dg.FiniteAbelianGroup((2,))


class CorpusDiagram:
    def __init__(self, name, text, lk, signature, chi, description):
        self.name = name
        self.text = text
        self.lk = lk
        self.signature = signature
        self.chi = chi
        self.description = description

    @property
    def dotted(self):
        return "dot(" in self.text


_RAW = [
    ("unknot0", "cup>\ncap>", [[0]], 0, 2,
     "zero-framed unknot; trace is the disc bundle D^2 x S^2 minus stuff"),
    ("kink_plus", "cup>\ncup< | |\n| x+ |\ncap< cap>", [[1]], 1, 2,
     "+1-framed unknot (positive kink); trace is the twisted disc bundle"),
    ("kink_minus", "cup>\ncup< | |\n| x- |\ncap< cap>", [[-1]], -1, 2,
     "-1-framed unknot (negative kink)"),
    ("hopf00", "cup> cup>\n| x- |\n| x- |\ncap> cap>",
     [[0, 1], [1, 0]], 0, 3,
     "Hopf link, both components zero-framed; trace is S^2 x S^2 minus a "
     "ball"),
    ("hopf01",
     "cup> cup>\n"
     "| | cup< | |\n"
     "| | | x+ |\n"
     "| | cap< | |\n"
     "| x- |\n| x- |\ncap> cap>",
     [[0, 1], [1, 1]], 0, 3,
     "Hopf link with framings (0, 1); trace is the twisted S^2-bundle "
     "over S^2 minus a ball"),
    ("hopf11",
     "cup> cup>\n"
     "cup< | | | |\n| x+ | | |\ncap< | | | |\n"
     "| | cup< | |\n| | | x+ |\n| | cap< | |\n"
     "| x- |\n| x- |\ncap> cap>",
     [[1, 1], [1, 1]], 1, 3,
     "Hopf link with framings (1, 1); the slide of a split (+1, 0) pair"),
    ("hopf20",
     "cup> cup>\n"
     "cup< | | | |\n| x+ | | |\ncap< | | | |\n"
     "cup< | | | |\n| x+ | | |\ncap< | | | |\n"
     "| x- |\n| x- |\ncap> cap>",
     [[2, 1], [1, 0]], 0, 3,
     "Hopf link with framings (2, 0); the slide of one zero-framed Hopf "
     "component over the other"),
    ("dot_lone", "dot(0)", [], 0, 0,
     "a single dotted disc pierced by nothing; S^1 x B^3"),
    ("dot_cancel", "cup<\ndot(1) |\ncap<", [[0]], 0, 1,
     "a dotted disc pierced once by a zero-framed circle; a canceling "
     "pair, so the 4-ball"),
    ("dot_double", "cup>\ndot(2)\ncap>", [[0]], 0, 1,
     "a dotted disc pierced twice with opposite directions by one "
     "zero-framed circle"),
    ("dot_clasp", "cup> cup<\n| dot(2) |\ncap> cap<",
     [[0, 0], [0, 0]], 0, 2,
     "a dotted disc pierced once each, same direction, by two circles"),
]

DIAGRAMS = {}
for _name, _text, _lk, _sig, _chi, _desc in _RAW:
    DIAGRAMS[_name] = CorpusDiagram(_name, _text, _lk, _sig, _chi, _desc)

# composites built from the primitives above
_kp = DIAGRAMS["kink_plus"]
_km = DIAGRAMS["kink_minus"]
_u0 = DIAGRAMS["unknot0"]
_dc = DIAGRAMS["dot_cancel"]
DIAGRAMS["kinks_pm"] = CorpusDiagram(
    "kinks_pm", _kp.text + "\n" + _km.text, [[1, 0], [0, -1]], 0, 3,
    "split union of a +1- and a -1-framed unknot")
DIAGRAMS["kink_unknot"] = CorpusDiagram(
    "kink_unknot", _kp.text + "\n" + _u0.text, [[1, 0], [0, 0]], 1, 3,
    "split union of a +1-framed and a zero-framed unknot")
DIAGRAMS["unlink00"] = CorpusDiagram(
    "unlink00", _u0.text + "\n" + _u0.text, [[0, 0], [0, 0]], 0, 3,
    "split zero-framed two-component unlink")
DIAGRAMS["dots_two"] = CorpusDiagram(
    "dots_two", _dc.text + "\n" + _dc.text, [[0, 0], [0, 0]], 0, 1,
    "two disjoint canceling pairs; the 4-ball again")
DIAGRAMS["dot_and_hopf"] = CorpusDiagram(
    "dot_and_hopf", _dc.text + "\n" + DIAGRAMS["hopf00"].text,
    [[0, 0, 0], [0, 0, 1], [0, 1, 0]], 0, 3,
    "a canceling pair split from a zero-framed Hopf link")


def names():
    return sorted(DIAGRAMS)


def diagram(name, labels=None, group=None):
    """Instantiate a corpus entry as a labeled diagram."""
    entry = DIAGRAMS[name]
    d = dg.parse(entry.text)
    if group is not None:
        d = dg.GKirbyDiagram(group, d.slices)
    if labels is not None:
        d = d.with_labels(tuple((l % 2,) for l in labels))
    return d


class GKPair:
    """Two labeled-diagram families with equal invariants.

    ``left(labels)`` and ``right(labels)`` take the labels of the left
    diagram's components and return the two labeled diagrams; the right
    one carries the labels induced by the move.
    """

    def __init__(self, name, move, n_labels, left, right):
        self.name = name
        self.move = move
        self.n_labels = n_labels
        self.left = left
        self.right = right


def _lab(d, labels):
    return d.with_labels(tuple((l % 2,) for l in labels))


def gk_pairs():
    pairs = []

    # handle slides; sliding component i over j sends the label vector
    # (..., w_j, ...) to (..., w_j - w_i, ...) and adds row j to row i of
    # the linking matrix
    ku = diagram("kink_unknot")
    h11 = diagram("hopf11")
    pairs.append(GKPair(
        "slide_kink_over_unknot", "slide", 2,
        lambda ab: _lab(ku, ab),
        lambda ab: _lab(h11, [ab[0] + ab[1], ab[1]])))
    h00 = diagram("hopf00")
    h20 = diagram("hopf20")
    pairs.append(GKPair(
        "slide_hopf_component", "slide", 2,
        lambda ab: _lab(h00, ab),
        lambda ab: _lab(h20, [ab[0], ab[0] + ab[1]])))

    # stabilizations: a canceling pair appears, labeled zero
    kp = diagram("kink_plus")
    pairs.append(GKPair(
        "stabilize_kink", "stabilization", 1,
        lambda ab: _lab(kp, ab),
        lambda ab: _lab(dg.stabilize_gk2(kp, 2), list(ab) + [0])))
    pairs.append(GKPair(
        "stabilize_hopf", "stabilization", 2,
        lambda ab: _lab(h00, ab),
        lambda ab: _lab(dg.stabilize_gk2(h00, 1), list(ab) + [0])))

    # orientation reversals negate the reversed component's label
    km = diagram("kink_minus")
    pairs.append(GKPair(
        "reverse_kink", "reversal", 1,
        lambda ab: _lab(km, ab),
        lambda ab: _lab(dg.reverse_component(km, 0), [-ab[0]])))
    pairs.append(GKPair(
        "reverse_hopf_component", "reversal", 2,
        lambda ab: _lab(h00, ab),
        lambda ab: _lab(dg.reverse_component(h00, 1), [ab[0], -ab[1]])))

    return pairs
