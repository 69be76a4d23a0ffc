"""Command-line front end.  Every command prints UTF-8 JSON lines."""
import argparse
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .classifier import LABELS, UnclassifiableParams, classify, match_signature
from .families import ARITY, NAMES, FamilyId, FamilyParams, WrongArity, make_representative
from .invariants import invariant_vector, signature
from .orbit import run_suite
from .witnesses import catalog, get_witness, verify_witness

EXIT_OK, EXIT_FAIL, EXIT_SCHEMA, EXIT_NONFINITE, EXIT_UNCLASSIFIABLE, EXIT_UNKNOWN_ID = 0, 1, 2, 3, 4, 5
TOOL = {"name": "slocc4", "version": __version__}


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _pair(z):
    return [float(np.real(z)), float(np.imag(z))]


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise CliError(EXIT_SCHEMA, f"{where}: expected a number, got {x!r}")
    if not math.isfinite(x):
        raise CliError(EXIT_NONFINITE, f"{where}: non-finite value")
    return float(x)


def _complex(v, where):
    if not isinstance(v, list) or len(v) != 2:
        raise CliError(EXIT_SCHEMA, f"{where}: expected [re, im]")
    return complex(_number(v[0], where), _number(v[1], where))


def parse_state_doc(doc):
    """Return (amplitudes, FamilyParams or None) from a StateFile document."""
    if not isinstance(doc, dict):
        raise CliError(EXIT_SCHEMA, "state file must hold a JSON object")
    has_amp, has_fam = "amplitudes" in doc, "family" in doc
    if has_amp == has_fam:
        raise CliError(EXIT_SCHEMA, "give either 'amplitudes' or a 'family'+'params' block, not both or neither")
    extra = set(doc) - ({"amplitudes"} if has_amp else {"family", "params"})
    if extra:
        raise CliError(EXIT_SCHEMA, f"unexpected keys {sorted(extra)}")
    if has_amp:
        amps = doc["amplitudes"]
        if not isinstance(amps, list) or len(amps) != 16:
            raise CliError(EXIT_SCHEMA, "'amplitudes' must be a list of 16 [re, im] pairs")
        return np.array([_complex(v, f"amplitudes[{k}]") for k, v in enumerate(amps)]), None
    name = doc["family"]
    if name not in {f.value for f in FamilyId}:
        raise CliError(EXIT_SCHEMA, f"unknown family {name!r}")
    fam = FamilyId(name)
    raw = doc.get("params", {})
    if not isinstance(raw, dict):
        raise CliError(EXIT_SCHEMA, "'params' must be an object")
    expected = set(NAMES[: ARITY[fam]])
    if set(raw) != expected:
        raise CliError(EXIT_SCHEMA, f"{name} takes parameters {sorted(expected)}, got {sorted(raw)}")
    vals = tuple(_complex(raw[k], f"params.{k}") for k in NAMES[: ARITY[fam]])
    try:
        p = FamilyParams(fam, vals)
    except WrongArity as e:
        raise CliError(EXIT_SCHEMA, str(e)) from None
    return make_representative(p), p


def load_state(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise CliError(EXIT_SCHEMA, f"cannot read {path}: {e.strerror}") from None
    except ValueError as e:
        raise CliError(EXIT_SCHEMA, f"{path} is not valid JSON: {e}") from None
    return parse_state_doc(doc)


def _label_doc(label):
    return label.to_dict()


def invariants_report(psi, p, tol):
    inv = invariant_vector(psi)
    sig = signature(psi, tol, inv)
    doc = {
        "tool": TOOL,
        "command": "invariants",
        "tol": tol,
        "amplitudes": [_pair(z) for z in psi],
        "invariants": inv.to_dict(),
        "signature": sig.to_dict(),
        "candidates": [_label_doc(l) for l in match_signature(sig, sig.f_zero)],
    }
    if p is not None:
        doc["input"] = p.to_json()
    return doc


def classify_report(psi, p, tol):
    inv = invariant_vector(psi)
    sig = signature(psi, tol, inv)
    doc = {"tool": TOOL, "command": "classify", "tol": tol, "invariants": inv.to_dict(),
           "signature": sig.to_dict()}
    if p is None:
        doc["candidatesOnly"] = True
        doc["candidates"] = [_label_doc(l) for l in match_signature(sig, sig.f_zero)]
        return doc
    try:
        result = classify(p, tol)
    except UnclassifiableParams as e:
        raise CliError(EXIT_UNCLASSIFIABLE, str(e)) from None
    doc["input"] = p.to_json()
    doc["candidatesOnly"] = False
    doc["assigned"] = _label_doc(result.label)
    doc["reducedTo"] = result.reduction.params.to_json()
    return doc


def _default_seed():
    env = os.environ.get("SLOCC_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise CliError(EXIT_SCHEMA, f"SLOCC_SEED must be an integer, got {env!r}") from None


class _Out:
    def __init__(self, path):
        self.fh = open(path, "w", encoding="utf-8") if path else None

    def line(self, doc):
        text = json.dumps(doc, ensure_ascii=False, sort_keys=True, allow_nan=False)
        if self.fh:
            self.fh.write(text + "\n")
        else:
            sys.stdout.write(text + "\n")

    def close(self):
        if self.fh:
            self.fh.close()


def cmd_invariants(args, out):
    psi, p = load_state(args.input)
    out.line(invariants_report(psi, p, args.tol))
    return EXIT_OK


def cmd_classify(args, out):
    psi, p = load_state(args.input)
    out.line(classify_report(psi, p, args.tol))
    return EXIT_OK


def cmd_witness(args, out):
    if args.id:
        try:
            records = [get_witness(args.id)]
        except KeyError:
            raise CliError(EXIT_UNKNOWN_ID, f"no witness record {args.id!r}") from None
    else:
        records = catalog()
    seed = args.seed if args.seed is not None else _default_seed()
    failed = 0
    for w in records:
        rep = verify_witness(w, args.samples, args.tol, seed)
        doc = rep.to_dict()
        doc["citation"] = w.citation
        out.line(doc)
        failed += not rep.ok
    out.line({"tool": TOOL, "command": "witness", "records": len(records), "failed": failed, "seed": seed})
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_suite(args, out):
    seed = args.seed if args.seed is not None else _default_seed()
    violations = checks = 0
    for doc in run_suite(seed, args.trials):
        out.line(doc)
        checks += 1
        violations += doc["violations"]
    out.line({"tool": TOOL, "command": "suite", "seed": seed, "trials": args.trials,
              "checks": checks, "violations": violations})
    return EXIT_OK if violations == 0 else EXIT_FAIL


def _parse_param(text):
    name, sep, value = text.partition("=")
    if not sep:
        raise CliError(EXIT_SCHEMA, f"parameter {text!r} should look like a=1+2j")
    try:
        z = complex(value.replace(" ", ""))
    except ValueError:
        raise CliError(EXIT_SCHEMA, f"cannot read {value!r} as a complex number") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise CliError(EXIT_NONFINITE, f"parameter {name} is not finite")
    return name.strip(), z


def cmd_family(args, out):
    if args.name not in {f.value for f in FamilyId}:
        raise CliError(EXIT_SCHEMA, f"unknown family {args.name!r}")
    fam = FamilyId(args.name)
    given = dict(_parse_param(t) for t in args.params)
    names = NAMES[: ARITY[fam]]
    if set(given) != set(names):
        raise CliError(EXIT_SCHEMA, f"{fam.value} takes parameters {list(names)}, got {sorted(given)}")
    p = FamilyParams(fam, tuple(given[k] for k in names))
    if args.block:
        out.line(p.to_json())
    else:
        out.line({"amplitudes": [_pair(z) for z in make_representative(p)]})
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="slocc4", description="Four-qubit SLOCC invariants and classes.")
    ap.add_argument("--version", action="version", version=f"slocc4 {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, tol=True):
        sp.add_argument("--out", help="write JSON lines here instead of standard output")
        if tol:
            sp.add_argument("--tol", type=float, default=1e-9)

    sp = sub.add_parser("invariants", help="I, D1..D3, F1..F10 and their zero flags")
    sp.add_argument("input")
    common(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("classify", help="class label (family input) or candidate labels (amplitudes)")
    sp.add_argument("input")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("witness", help="replay catalogued operator equivalences")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--id")
    g.add_argument("--all", action="store_true")
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int)
    common(sp)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("suite", help="run every orbit check")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--trials", type=int, default=200)
    common(sp, tol=False)
    sp.set_defaults(func=cmd_suite)

    sp = sub.add_parser("family", help="emit a representative as a state file")
    sp.add_argument("name", choices=[f.value for f in FamilyId])
    sp.add_argument("params", nargs="*", help="parameters as a=1+2j")
    sp.add_argument("--block", action="store_true", help="emit the family+params block instead of amplitudes")
    common(sp, tol=False)
    sp.set_defaults(func=cmd_family)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        print(json.dumps({"error": "tol must be positive"}), file=sys.stderr)
        return EXIT_SCHEMA
    if getattr(args, "samples", 1) < 1 or getattr(args, "trials", 1) < 1:
        print(json.dumps({"error": "samples and trials must be at least 1"}), file=sys.stderr)
        return EXIT_SCHEMA
    out = _Out(args.out)
    try:
        return args.func(args, out)
    except CliError as e:
        print(json.dumps({"error": str(e), "exit": e.code}, ensure_ascii=False), file=sys.stderr)
        return e.code
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
