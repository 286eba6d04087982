"""
Command-line front end.

    sliceobs alex FILE
    sliceobs cover FILE --r 2,3,5
    sliceobs report --m 1 --r 2,3,5,7,11,13 --format machine

Exit codes: 0 success, 1 invalid input, 2 unsupported computation,
3 a verified step disagreed with its closed form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .alexander_module import (
    BlanchfieldPairing,
    RationalAlexanderModule,
    metabolisers,
    radical,
    unique_metaboliser_containing,
)
from .branched_cover import (
    CoverPresentation,
    cover_order_resultant,
    deck_image,
    double_cover_linking_form,
    is_z2_homology_sphere,
    lifted_generator,
    linking_metabolisers,
)
from .errors import InvalidInputError, SliceObsError, UnsupportedComputationError
from .family import (
    alpha_labels,
    family_expected,
    family_m,
    family_seifert,
    obstruction_report,
)
from .seifert import alexander_polynomial, classical_invariants, random_seifert, validate_seifert

VERBS = ("alex", "invariants", "module", "blanchfield", "metab", "cover", "linkform",
         "family", "report")
DEFAULT_DEGREES = (2, 3, 5, 7, 11, 13)


def parse_seifert_file(path):
    """Read ``{"name": ..., "matrix": [[...]]}`` and validate it.

    A missing ``.json`` suffix is tolerated, so ``data/trefoil`` finds ``data/trefoil.json``.
    """
    if not os.path.exists(path) and os.path.exists(path + ".json"):
        path = path + ".json"
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e.strerror}") from None
    return parse_seifert_text(text, source=path)


def parse_seifert_text(text, source="<input>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(
            f"{source}: parse error at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict) or "matrix" not in data:
        raise InvalidInputError(f"{source}: expected an object with a 'matrix' field")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise InvalidInputError(f"{source}: 'name' must be text")
    M = data["matrix"]
    if not isinstance(M, list) or not all(isinstance(r, list) for r in M):
        raise InvalidInputError(f"{source}: 'matrix' must be an array of arrays of integers")
    return validate_seifert(M, name=name)


def _parse_degrees(text):
    try:
        rs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInputError(f"--r expects comma-separated integers, got {text!r}") from None
    if not rs or any(r < 1 for r in rs):
        raise InvalidInputError("--r values must be >= 1")
    return rs


# -- rendering ----------------------------------------------------------------------

def _text_lines(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                yield f"{pad}{k}:"
                yield from _text_lines(v, indent + 1)
            else:
                yield f"{pad}{k}: {_scalar(v)}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict) and v:
                first = True
                for line in _text_lines(v, indent + 1):
                    yield (pad + "- " + line.lstrip()) if first else line
                    first = False
            elif isinstance(v, list) and v and any(isinstance(x, (list, dict)) for x in v):
                yield f"{pad}-"
                yield from _text_lines(v, indent + 1)
            else:
                yield f"{pad}- {_scalar(v)}"
    else:
        yield pad + _scalar(value)


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def render(doc, fmt):
    """Render a document; both formats carry exactly the same content."""
    if fmt == "machine":
        return json.dumps(doc, indent=2)
    if len(doc) == 1:
        (value,) = doc.values()
        if not isinstance(value, (dict, list)):
            return str(value)
    return "\n".join(_text_lines(doc))


# -- commands ------------------------------------------------------------------------

def _fmt_vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_sub(P):
    return "span{" + ", ".join(_fmt_vec(b) for b in P.basis) + "}"


def cmd_alex(V, args):
    return {"alexander_polynomial": str(alexander_polynomial(V))}


def cmd_invariants(V, args):
    inv = classical_invariants(V)
    return {"determinant": inv.determinant, "signature": inv.signature}


def cmd_module(V, args):
    M = RationalAlexanderModule(V)
    return {
        "alexander_polynomial": str(M.alexander_polynomial),
        "q_dimension": M.q_dimension,
        "invariant_factors": [str(d) for d in M.invariant_factors],
        "cyclic": M.is_cyclic(),
        "primary_decomposition_complete": M.primary_complete,
        "primary_decomposition": [
            {"factor": str(c.factor), "multiplicity": c.multiplicity,
             "resolved": c.resolved, "generators": [_fmt_vec(g) for g in c.generators]}
            for c in M.primary_decomposition],
        "generators": [
            {"label": f"e{i + 1}", "class": _fmt_vec(g),
             "annihilator": str(M.annihilator(g)) if any(g) else "1"}
            for i, g in enumerate(M.generator_classes)],
        "t_action": [[str(x) for x in row] for row in M.t_action],
    }


def cmd_blanchfield(V, args):
    M = RationalAlexanderModule(V)
    B = BlanchfieldPairing(V, M)
    return {
        "gram": [[str(c) for c in row] for row in B.gram],
        "hermitian": B.is_hermitian(),
        "radical_dimension": radical(M, B).dimension,
    }


def _resolve_element(M, V, text):
    """alpha1 / alpha2 / e<i> labels joined by '+', or a comma-separated coordinate vector."""
    text = text.strip()
    if text and (text[0].isdigit() or text[0] in "-("):
        try:
            coords = tuple(Fraction(x) for x in text.strip("()").split(","))
        except ValueError:
            raise InvalidInputError(f"cannot parse element {text!r}") from None
        if len(coords) != M.q_dimension:
            raise InvalidInputError(
                f"element has {len(coords)} coordinates, module dimension is {M.q_dimension}")
        return coords
    total = M.zero()
    for label in text.split("+"):
        label = label.strip().lower()
        if label in ("alpha1", "alpha2"):
            m = family_m(V)
            if m is None:
                raise InvalidInputError("alpha labels are defined only for K_m Seifert matrices")
            idx = alpha_labels(M, m)[int(label[-1]) - 1]
        elif label.startswith("e") and label[1:].isdigit():
            idx = int(label[1:])
            if not 1 <= idx <= len(M.generator_classes):
                raise InvalidInputError(f"no generator {label}")
        else:
            raise InvalidInputError(f"unknown element label {label!r}")
        total = tuple(a + b for a, b in zip(total, M.generator_classes[idx - 1]))
    return total


def cmd_metab(V, args):
    M = RationalAlexanderModule(V)
    B = BlanchfieldPairing(V, M)
    if args.element:
        x = _resolve_element(M, V, args.element)
        P = unique_metaboliser_containing(M, B, x)
        return {"element": _fmt_vec(x), "unique_metaboliser": _fmt_sub(P)}
    return {"metabolisers": [_fmt_sub(P) for P in metabolisers(M, B)]}


def cmd_cover(V, args):
    out = []
    for r in _parse_degrees(args.r or "2"):
        cover = CoverPresentation(V, r)
        if not cover.is_finite:
            raise UnsupportedComputationError(
                f"cover r={r}: infinite homology: unsupported for metaboliser analysis")
        entry = {
            "r": r,
            "group": str(cover.group),
            "order": cover.group.order,
            "resultant_order": cover_order_resultant(V, r),
            "z2_homology_sphere": is_z2_homology_sphere(V, r),
        }
        if V.size:
            lifts = [lifted_generator(cover, i) for i in range(1, V.size + 1)]
            entry["generators"] = [
                {"label": f"x{i}", "coords": _fmt_vec(x.coords), "order": x.order,
                 "deck_image": _fmt_vec(deck_image(cover, x).coords)}
                for i, x in enumerate(lifts, 1)]
            entry["deck_matrix"] = [_fmt_vec(row) for row in cover.deck_matrix()]
        out.append(entry)
    return {"covers": out}


def cmd_linkform(V, args):
    lf = double_cover_linking_form(V)
    k = len(lf.group.invariant_factors)
    deck = [[-1 if i == j else 0 for j in range(k)] for i in range(k)]
    mets = linking_metabolisers(lf, deck=deck)
    return {
        "group": str(lf.group),
        "linking_form": [[str(x) for x in row] for row in lf.gram],
        "metabolisers": [
            {"generators": [_fmt_vec(g) for g in mt.generators], "order": mt.order,
             "deck_invariant": mt.deck_invariant}
            for mt in mets],
    }


def cmd_family(args):
    m = args.m
    degrees = _parse_degrees(args.r) if args.r else list(DEFAULT_DEGREES)
    out = {"m": m, "seifert_matrix": str(family_seifert(m).rows()),
           "alexander_polynomial": str(family_expected(m, 1).delta), "covers": []}
    for r in degrees:
        e = family_expected(m, r)
        out["covers"].append({"r": r, "N_r": e.n_r, "group": str(e.cover_group)})
    return out


def cmd_report(args):
    degrees = _parse_degrees(args.r) if args.r else list(DEFAULT_DEGREES)
    report = obstruction_report(args.m, degrees)
    return report.to_dict(), (3 if not report.ok else 0)


MATRIX_COMMANDS = {
    "alex": cmd_alex,
    "invariants": cmd_invariants,
    "module": cmd_module,
    "blanchfield": cmd_blanchfield,
    "metab": cmd_metab,
    "cover": cmd_cover,
    "linkform": cmd_linkform,
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="sliceobs",
        description="Exact abelian slice obstructions from Seifert matrices.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", nargs="?", help="Seifert matrix JSON file")
    p.add_argument("--m", type=int, help="use the family matrix [[0, m+1], [m, 0]]")
    p.add_argument("--random", type=int, metavar="GENUS",
                   help="use a random Seifert matrix of this genus (see --seed, --bound)")
    p.add_argument("--bound", type=int, default=3, help="entry bound for --random")
    p.add_argument("--seed", type=int, default=0, help="seed for --random")
    p.add_argument("--r", help="comma-separated cover degrees")
    p.add_argument("--element", help="alpha1, alpha2, e<i>, sums like alpha1+alpha2, "
                                     "or a coordinate vector")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    return p


def _load_input(args):
    sources = [s for s in (args.input, args.m, args.random) if s is not None]
    if len(sources) != 1:
        raise InvalidInputError("give exactly one input: a file, --m, or --random")
    if args.input is not None:
        return parse_seifert_file(args.input)
    if args.m is not None:
        return family_seifert(args.m)
    return random_seifert(args.random, args.bound, args.seed)


def run(argv=None):
    """Execute a command; returns (stdout text, stderr text, exit code)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return "", "", 1 if e.code else 0
    code = 0
    try:
        if args.verb in ("family", "report"):
            if args.m is None or args.input is not None or args.random is not None:
                raise InvalidInputError(f"{args.verb} needs --m and no other input")
            if args.verb == "family":
                doc = cmd_family(args)
            else:
                doc, code = cmd_report(args)
        else:
            V = _load_input(args)
            doc = MATRIX_COMMANDS[args.verb](V, args)
    except SliceObsError as e:
        return "", f"sliceobs {args.verb}: {e}", e.exit_code
    err = ""
    if code == 3:
        err = f"sliceobs {args.verb}: a verified step failed"
    return render(doc, args.format), err, code


def main(argv=None):
    out, err, code = run(argv)
    if out:
        sys.stdout.write(out + "\n")
    if err:
        sys.stderr.write(err + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
