"""Command-line interface.

Subcommands: ``invariant`` (refined/unrefined invariant of a diagram
file), ``boundary`` (normalized boundary 3-manifold invariant),
``decompose`` (decomposition identity report), ``rescale-check``
(rescaling law report), ``verify`` (the whole identity corpus) and
``trade`` (print the diagram with dotted discs traded for zero-framed
circles).  Output is plain text or deterministic JSON; exit code 0 means
success, 1 a failed verification, 2 a bad input.
"""

import argparse
import json
import sys

from . import diagrams as dg
from . import invariants as inv
from .cyclotomic import ScalarParseError, named_constants, parse as parse_scalar, render
from .sl2 import ParityUnsupported
from .beads import BeadOutsideU, UnsupportedGroup

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2

_INPUT_ERRORS = (
    dg.ParseError,
    dg.ValidationError,
    dg.InvalidSite,
    inv.StructureKindMismatch,
    inv.NotCharacteristic,
    inv.NotEven,
    inv.ZeroScale,
    ScalarParseError,
    ParityUnsupported,
    UnsupportedGroup,
    BeadOutsideU,
    ValueError,
    OSError,
)


def _build_parser():
    top = argparse.ArgumentParser(
        prog="qkirby",
        description="Exact invariants of 4-dimensional 2-handlebodies "
                    "from quantum sl2 at even roots of unity.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, diagram=True):
        if diagram:
            p.add_argument("diagram", help="path to a diagram file")
        p.add_argument("--format", choices=("json", "text"),
                       default="text", help="output format")

    p = sub.add_parser("invariant", help="invariant of a labeled diagram")
    common(p)
    p.add_argument("--p", type=int, required=True, help="order parameter")
    p.add_argument("--variant", choices=("restricted", "small"),
                   default="restricted")
    p.add_argument("--mode", choices=("refined", "unrefined"),
                   default="refined")
    p.add_argument("--omega", help="comma-separated component labels "
                                   "overriding the file's labels")

    p = sub.add_parser("boundary",
                       help="boundary 3-manifold invariant of a structure")
    common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--mode", choices=("boundary-spin", "boundary-coh"),
                   required=True)
    p.add_argument("--omega", required=True,
                   help="the structure as a comma-separated 0/1 sublink")

    p = sub.add_parser("decompose",
                       help="check the decomposition identities")
    common(p)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("rescale-check", help="check the rescaling law")
    common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--xi", default="i",
                   help="rescaling scalar: an integer, 'i', '-i', or "
                        "exact scalar text like '(1 - z^3)/2 [N=16]'")

    p = sub.add_parser("verify", help="run the identity corpus")
    common(p, diagram=False)
    p.add_argument("--p", type=int, action="append", required=True,
                   help="order parameter (repeatable)")
    p.add_argument("--quick", action="store_true",
                   help="skip the slowest sections")

    p = sub.add_parser("trade",
                       help="trade dotted discs for zero-framed circles")
    common(p)
    return top


def _read_diagram(path):
    with open(path, "r", encoding="utf-8") as fh:
        return dg.parse(fh.read())


def _parse_omega(text, group, n):
    parts = [s.strip() for s in text.split(",")] if text.strip() else []
    if len(parts) != n:
        raise ValueError("expected %d labels, got %d" % (n, len(parts)))
    labels = []
    for part in parts:
        coords = tuple(int(c) for c in part.split(":"))
        if len(coords) != len(group.orders):
            raise ValueError("label %r has the wrong rank for the group"
                             % part)
        labels.append(tuple(c % o for c, o in zip(coords, group.orders)))
    return tuple(labels)


def _parse_xi(text, p):
    text = text.strip()
    c = named_constants(p)
    if text == "i":
        return c.i
    if text == "-i":
        return -c.i
    try:
        return c.ctx.from_rational(int(text))
    except ValueError:
        pass
    return parse_scalar(text)


def _approx(value):
    z = value.to_complex(digits=15)
    return [float(z.real), float(z.imag)]


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True,
                         separators=(",", ": "), indent=1))
    else:
        for line in text_lines:
            print(line)


def _payload(p=None, variant=None, mode=None, omega=None, value=None,
             sigma=None, chi=None, diagnostics=None):
    return {
        "p": p,
        "variant": variant,
        "mode": mode,
        "omega": omega,
        "value_exact": None if value is None else render(value),
        "value_approx": None if value is None else _approx(value),
        "sigma": sigma,
        "chi": chi,
        "diagnostics": diagnostics or {},
    }


def _omega_out(labels):
    return [list(lab) for lab in labels]


def _report_payload(args, rep, p=None, mode=None, variant=None):
    payload = _payload(
        p=p, variant=variant, mode=mode,
        diagnostics={"checks": [
            {"name": name, "ok": ok, "detail": detail}
            for name, ok, detail in rep.checks]})
    return payload


def _run_invariant(args):
    d = _read_diagram(args.diagram)
    if args.omega is not None:
        d = d.with_labels(_parse_omega(args.omega, d.group,
                                       d.n_components))
    if args.p % 2 != 0 and args.mode == "refined":
        raise ParityUnsupported(
            "odd p exposes only the unrefined invariant")
    value = inv.invariant(d, args.p, variant=args.variant, mode=args.mode)
    sigma = dg.signature(dg.linking_matrix(d))
    chi = dg.euler_characteristic(d)
    payload = _payload(p=args.p, variant=args.variant, mode=args.mode,
                       omega=_omega_out(d.labels), value=value,
                       sigma=sigma, chi=chi,
                       diagnostics={"n_components": d.n_components,
                                    "n_dots": d.n_dots})
    _emit(args, payload, [
        "J = %s" % render(value),
        "  approx %.6f %+.6fi" % tuple(_approx(value)),
        "  sigma = %d, chi = %d" % (sigma, chi),
    ])
    return EXIT_OK


def _run_boundary(args):
    d = _read_diagram(args.diagram)
    kind = "spin" if args.mode == "boundary-spin" else "coh"
    e = dg.trade_handles(d).diagram if d.n_dots else d
    structure = tuple(
        lab[0] for lab in _parse_omega(args.omega, e.group,
                                       e.n_components))
    value = inv.boundary_invariant(d, structure, args.p, kind=kind)
    link = dg.linking_matrix(e)
    sigma = dg.signature(link)
    chi = dg.euler_characteristic(e)
    payload = _payload(p=args.p, variant="restricted", mode=args.mode,
                       omega=[[b] for b in structure], value=value,
                       sigma=sigma, chi=chi,
                       diagnostics={"n_components": e.n_components,
                                    "traded": d.n_dots > 0})
    _emit(args, payload, [
        "J(boundary, structure) = %s" % render(value),
        "  approx %.6f %+.6fi" % tuple(_approx(value)),
        "  sigma = %d" % sigma,
    ])
    return EXIT_OK


def _run_report(args, rep, mode):
    payload = _report_payload(args, rep, p=args.p, mode=mode,
                              variant="restricted")
    _emit(args, payload, [rep.summary()])
    return EXIT_OK if rep.ok else EXIT_VERIFICATION


def _run_decompose(args):
    d = _read_diagram(args.diagram)
    rep = inv.decomposition_check(d, args.p)
    return _run_report(args, rep, "decompose")


def _run_rescale(args):
    d = _read_diagram(args.diagram)
    xi = _parse_xi(args.xi, args.p)
    rep = inv.rescale_check(d, xi, args.p)
    return _run_report(args, rep, "rescale-check")


def _run_verify(args):
    for p in args.p:
        if p < 2:
            raise ValueError("p must be at least 2")
    rep = inv.verify_suite(args.p, deep=not args.quick)
    payload = _report_payload(args, rep, p=args.p[0], mode="verify")
    _emit(args, payload, [rep.summary()])
    return EXIT_OK if rep.ok else EXIT_VERIFICATION


def _run_trade(args):
    d = _read_diagram(args.diagram)
    traded = dg.trade_handles(d)
    text = dg.render(traded.diagram)
    payload = _payload(diagnostics={
        "diagram": text,
        "new_circles": traded.circles,
        "component_map": traded.old_to_new,
    })
    _emit(args, payload, [text.rstrip("\n")])
    return EXIT_OK


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handlers = {
        "invariant": _run_invariant,
        "boundary": _run_boundary,
        "decompose": _run_decompose,
        "rescale-check": _run_rescale,
        "verify": _run_verify,
        "trade": _run_trade,
    }
    try:
        return handlers[args.command](args)
    except inv.VerificationFailure as exc:
        print("verification failure: %s" % exc, file=sys.stderr)
        return EXIT_VERIFICATION
    except _INPUT_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
