"""Command line interface.

Every subcommand reads a presentation with ``-p`` (a JSON file, or one of the
built-ins ``@plane``, ``@qweyl``, ``@weyl``, ``@torus<n>``, ``@space<n>``)
and prints either plain text or, with ``--json``, one record per result.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..coeffs.lattice import genericity_check, verify_dependency
from ..completion import (
    HahnSeries,
    conjecture_check,
    m_power_membership,
    m_power_witness,
    series_invert,
)
from ..errors import ParseError, SkewPBWError
from ..presentation import associated_graded, describe_flags, extend_scalars, iterated_form
from ..valuation import INF, classify, compare_valuations, maximal_rank, val
from .parser import parse_element
from .printer import format_coeff, format_element, format_exponent, format_monomial
from .serialize import (
    load_document,
    order_from_spec,
    parse_matrix,
    presentation_hash,
    presentation_to_dict,
)


class UsageError(Exception):
    pass


def _builtin(name):
    from .. import families

    if name == "plane":
        return families.quantum_plane()
    if name == "qweyl":
        return families.quantum_weyl()
    if name == "weyl":
        return families.weyl_algebra()
    for prefix, make in (("torus", families.quantum_torus), ("space", None)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            n = int(name[len(prefix):])
            if make is not None:
                return make(n)
            from ..coeffs.fields import RationalFunctionField

            field = RationalFunctionField(("q",))
            upper = {(i, j): field.param(0) for i in range(n) for j in range(i + 1, n)}
            return families.quantum_space(n, field, upper)
    raise UsageError(f"unknown built-in presentation @{name}")


def _load(args, required=True):
    """(presentation, order) honouring --order, the document, then SKEWPBW_ORDER."""
    src = getattr(args, "presentation", None)
    if src is None:
        if required:
            raise UsageError("a presentation is required (-p FILE or -p @name)")
        return None, None
    if src.startswith("@"):
        p, doc_order = _builtin(src[1:]), None
    else:
        try:
            p, doc_order = load_document(src)
        except OSError as e:
            raise UsageError(f"cannot read {src}: {e.strerror}") from e
    spec = getattr(args, "order", None)
    order = order_from_spec(spec, p.n) if spec else doc_order or order_from_spec(None, p.n)
    return p, order


def _elem(args, p, text=None):
    text = args.expr if text is None else text
    if text is None:
        raise UsageError("an expression is required (-e EXPR)")
    return parse_element(text, p)


def _vec(v):
    if v is INF:
        return "inf"
    return [int(x) if Fraction(x).denominator == 1 else str(x) for x in v]


# --- subcommands ----------------------------------------------------------------
# Each returns (text lines, structured result, diagnostics).

def cmd_validate(args):
    p, order = _load(args)
    flags = describe_flags(p)
    lines = [f"valid: {p.name or 'presentation'}"]
    lines += [f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in flags.items()]
    lines.append(f"order: {order}")
    return lines, {"flags": flags, "order": str(order)}, []


def cmd_normalize(args):
    p, order = _load(args)
    f = _elem(args, p)
    s = format_element(f, order)
    return [s], {"normal_form": s}, []


def cmd_mul(args):
    p, order = _load(args)
    f, g = _elem(args, p, args.left), _elem(args, p, args.right)
    s = format_element(f * g, order)
    return [s], {"product": s}, []


def _qc_diag(p):
    if p.quasi_commutative:
        return []
    return ["presentation is not quasi-commutative: the leading exponent is not multiplicative here"]


def cmd_val(args):
    p, order = _load(args)
    f = _elem(args, p)
    v = val(f, order)
    text = "inf" if v is INF else format_exponent(v)
    return [f"nu = {text}"], {"valuation": _vec(v), "order": str(order)}, _qc_diag(p)


def cmd_classify(args):
    p, order = _load(args)
    f = _elem(args, p)
    c = classify(f, order)
    return [c], {"class": c, "valuation": _vec(val(f, order))}, _qc_diag(p)


def cmd_graded(args):
    p, _ = _load(args)
    gr = associated_graded(p)
    doc = presentation_to_dict(gr)
    return [json.dumps(doc, sort_keys=True, indent=2)], doc, []


def cmd_iterated(args):
    p, _ = _load(args)
    form = iterated_form(p)
    lines = form.describe()
    return lines, {"stages": lines}, []


def cmd_generic(args):
    p, _ = _load(args)
    res = genericity_check(p.q, p.sigma, len(p.field.params))
    lines = [f"generic: {str(res.generic).lower()}", f"rank: {res.rank} of {len(res.pairs)}"]
    result = {"generic": res.generic, "rank": res.rank, "pairs": [list(x) for x in res.pairs]}
    if not res.generic:
        ok = verify_dependency(p.q, res.pairs, res.dependency)
        rel = " * ".join(f"q{i}{j}^{a}" for (i, j), a in zip(res.pairs, res.dependency) if a)
        lines.append(f"dependency: {rel} = 1 (verified: {str(ok).lower()})")
        result["dependency"] = list(res.dependency)
        result["verified"] = ok
    return lines, result, []


def _parse_vector(text):
    try:
        v = json.loads(text.replace("(", "[").replace(")", "]"))
        return tuple(int(x) for x in v)
    except (ValueError, TypeError) as e:
        raise UsageError(f"bad exponent vector {text!r}") from e


def cmd_invert(args):
    p, order = _load(args)
    f = _elem(args, p)
    bound = _parse_vector(args.bound)
    if len(bound) != p.n:
        raise UsageError(f"bound has {len(bound)} entries, expected {p.n}")
    res = series_invert(HahnSeries.from_element(f, order), bound, fallback_terms=args.terms)
    s = str(res.series)
    lines = [f"f^-1 = {s}", f"terms summed: {res.terms_used}", f"target reached: {str(res.reached_target).lower()}"]
    result = {
        "inverse": s,
        "bound": _vec(res.series.bound) if res.series.bound else None,
        "terms_used": res.terms_used,
        "reached_target": res.reached_target,
    }
    return lines, result, list(res.notes)


def _factor_text(factors, order):
    return " * ".join(
        f"({format_element(x, order)})" if len(x.terms) > 1 else format_element(x, order) for x in factors
    )


def cmd_mpow(args):
    p, order = _load(args)
    f = _elem(args, p)
    if args.i < 1:
        raise UsageError("-i must be >= 1")
    member = m_power_membership(f, args.i, order)
    lines = [f"in m^{args.i}: {str(member).lower()}"]
    result = {"member": member, "i": args.i, "valuation": _vec(val(f, order))}
    if member and f.terms:
        if p.r == p.n:
            factors = m_power_witness(f, args.i, order)
            lines.append(f"factors: {_factor_text(factors, order)}")
            result["factors"] = [format_element(x, order) for x in factors]
        else:
            lines.append("factors: not available (needs r = n to invert monomials)")
    return lines, result, _qc_diag(p)


def cmd_conjecture(args):
    order = order_from_spec(args.order) if args.order else None
    p = None
    if args.presentation:
        p, porder = _load(args)
        order = order or porder
    if order is None:
        order = order_from_spec(None, 2)
    if args.depth < 1:
        raise UsageError("--depth must be >= 1")
    v = conjecture_check(order, args.depth, p)
    lines = [f"order: {order}"]
    result = {"kind": v.kind, "order": str(order), "depth": args.depth}
    if v.min_positive is not None:
        lines.append(f"least positive element: {format_exponent(v.min_positive)} ({format_monomial(v.min_positive)})")
        result["min_positive"] = list(v.min_positive)
    if v.kind == "witness":
        name = format_monomial(v.witness)
        lines.append(f"witness: {name} {format_exponent(v.witness)}")
        result["witness"] = list(v.witness)
        facts = []
        for i, parts, unit in v.factorizations:
            prod = " * ".join(format_monomial(e) or "1" for e in parts)
            u = format_coeff(unit)
            lines.append(f"i = {i}: {name} = {'' if unit == 1 else f'({u})^-1 * '}{prod}")
            facts.append({"i": i, "parts": [list(e) for e in parts], "unit": u})
        result["factorizations"] = facts
        lines.append(
            f"minimal element of iA: {format_exponent(v.min_elements[0])} * i for i = 1..{args.depth}"
        )
        result["min_elements"] = [list(e) for e in v.min_elements]
        lines.append(f"verdict: {name} lies in m^i for every i <= {args.depth}; the intersection is nonzero")
    elif v.kind == "intersection_trivial":
        lines.append("verdict: the intersection of the m^i is zero")
        result["min_elements"] = [list(e) for e in v.min_elements]
    else:
        lines.append("verdict: no least positive element")
    return lines, result, list(v.notes)


def cmd_compare_val(args):
    p, _ = _load(args)
    o1 = order_from_spec(args.order1, p.n)
    tau = parse_matrix(args.tau)
    o2 = order_from_spec(args.order2, len(tau))
    samples = [_elem(args, p, e) for e in (args.expr or [])]
    rep = compare_valuations(o1, o2, tau, samples)
    lines = [f"consistent: {str(rep.holds).lower()}", f"elements: {rep.checked_elements}, pairs: {rep.checked_pairs}"]
    result = {"holds": rep.holds, "elements": rep.checked_elements, "pairs": rep.checked_pairs}
    if rep.counterexample:
        ce = {k: (_vec(v) if isinstance(v, tuple) else [_vec(x) for x in v] if isinstance(v, list) else v)
              for k, v in rep.counterexample.items()}
        lines.append("counterexample: " + json.dumps(ce, sort_keys=True))
        result["counterexample"] = ce
    return lines, result, []


def cmd_rank(args):
    tau = parse_matrix(args.tau)
    ok = maximal_rank(tau)
    return [f"maximal rank: {str(ok).lower()}"], {"maximal_rank": ok}, []


def cmd_extend_scalars(args):
    p, _ = _load(args)
    doc = presentation_to_dict(extend_scalars(p))
    return [json.dumps(doc, sort_keys=True, indent=2)], doc, []


COMMANDS = {
    "validate": cmd_validate,
    "normalize": cmd_normalize,
    "mul": cmd_mul,
    "val": cmd_val,
    "classify": cmd_classify,
    "graded": cmd_graded,
    "iterated": cmd_iterated,
    "generic": cmd_generic,
    "invert": cmd_invert,
    "mpow": cmd_mpow,
    "conjecture": cmd_conjecture,
    "compare-val": cmd_compare_val,
    "rank": cmd_rank,
    "extend-scalars": cmd_extend_scalars,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    ap = _Parser(prog="skewpbw", description="Exact computation in skew PBW extensions.")
    ap.add_argument("--json", action="store_true", help="emit one JSON record per result")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def cmd(name, help_, pres=True, expr=False, order=True):
        sp = sub.add_parser(name, help=help_)
        if pres:
            sp.add_argument("-p", "--presentation", help="JSON file or @builtin")
        if order:
            sp.add_argument("--order", help="lex, lex<n> or a JSON matrix (default $SKEWPBW_ORDER or lex)")
        if expr:
            sp.add_argument("-e", "--expr", help="element expression")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    cmd("validate", "validate a presentation and print its flags")
    cmd("normalize", "print the normal form of an expression", expr=True)
    sp = cmd("mul", "multiply two elements")
    sp.add_argument("-a", "--left", required=True)
    sp.add_argument("-b", "--right", required=True)
    cmd("val", "leading exponent under the order", expr=True)
    cmd("classify", "zero / unit / maximal ideal / outside the valuation ring", expr=True)
    cmd("graded", "associated graded presentation", order=False)
    cmd("iterated", "iterated Ore extension stages", order=False)
    cmd("generic", "genericity of the multiparameters", order=False)
    sp = cmd("invert", "truncated series inverse over a quantum torus", expr=True)
    sp.add_argument("--bound", required=True, help="exponent bound, e.g. \"(3,0)\"")
    sp.add_argument("--terms", type=int, default=12, help="fallback number of geometric terms")
    sp = cmd("mpow", "membership in the i-th power of the maximal ideal", expr=True)
    sp.add_argument("-i", type=int, required=True)
    sp = cmd("conjecture", "search for a nonzero element of every m^i")
    sp.add_argument("--depth", type=int, default=10)
    sp = cmd("compare-val", "compare two valuations through tau", order=False)
    sp.add_argument("--order1", required=True)
    sp.add_argument("--order2", required=True)
    sp.add_argument("--tau", required=True)
    sp.add_argument("-e", "--expr", action="append", help="sample element (repeatable)")
    sp = cmd("rank", "is tau in GL(n, Z)", pres=False, order=False)
    sp.add_argument("--tau", required=True)
    cmd("extend-scalars", "carry a Z presentation to Q", order=False)
    return ap


def run_command(argv):
    """(exit status, stdout text, stderr text)."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        lines, result, diagnostics = COMMANDS[args.command](args)
    except UsageError as e:
        return 2, "", f"usage error: {e}\n{ap.format_usage()}"
    except (SkewPBWError, ZeroDivisionError, ValueError) as e:
        kind = type(e).__name__
        if getattr(args, "json", False):
            rec = _record(args, argv, None, [f"{kind}: {e}"])
            return 1, rec + "\n", ""
        return 1, "", f"error: {kind}: {e}\n"
    if args.json:
        return 0, _record(args, argv, result, diagnostics) + "\n", ""
    out = "\n".join(lines) + "\n"
    err = "".join(f"note: {d}\n" for d in diagnostics)
    return 0, out, err


def _record(args, argv, result, diagnostics):
    phash = None
    src = getattr(args, "presentation", None)
    if src:
        try:
            phash = presentation_hash(_load(args)[0])
        except (SkewPBWError, UsageError, ParseError, ValueError):
            phash = None
    rec = {
        "command": args.command,
        "presentation_hash": phash,
        "input": [a for a in argv if a != "--json"],
        "result": result,
        "diagnostics": diagnostics,
    }
    return json.dumps(rec, sort_keys=True, default=str)


def main(argv=None):
    status, out, err = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
