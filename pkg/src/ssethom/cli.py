"""Command-line front end over the tagged JSON document formats.

Every run writes exactly one JSON report (or document) to stdout; the bytes
are stable across reruns with the same inputs, so timing and other
human-facing summaries go to stderr instead.  Exit status: 0 on success or a
passing check, 1 when a check or validation fails, 2 on usage errors or
malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent import futures

from . import formats, theorems
from .cat import (
    FinMonoid,
    FinNonUnitalCategory,
    FunctorData,
    MonoidAction,
    NatTransData,
    bar_construction,
    comma_resolution,
    monoid_as_category,
    nerve,
    over_category,
    regular_action,
    trivial_action,
    under_category,
    unitalize,
    validate_action,
    validate_category,
    validate_functor,
    validate_monoid,
    validate_nat_trans,
)
from .homalg import bicomplex, homology, parse_ring, total_complex, unnormalized_chains, normalized_chains
from .snf import SparseIntMatrix
from .specseq import check_convergence, spectral_sequence
from .sset import (
    BiSemiSimplicialSet,
    SemiSimplicialSet,
    SimplicialSet,
    euler_characteristic,
    skeleton,
    validate_bisset,
    validate_simplicial,
    validate_sset,
)


class UsageError(Exception):
    """Bad arguments or bad input; maps to exit status 2."""


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _say(line: str = "") -> None:
    print(line, file=sys.stderr)


def _ring(coeff: str) -> str:
    try:
        return parse_ring(coeff)
    except ValueError as e:
        raise UsageError(str(e)) from None


# ---------------------------------------------------------------------------
# loading with validation

_KINDS = (
    (SemiSimplicialSet, "semi-simplicial set", validate_sset),
    (SimplicialSet, "simplicial set", validate_simplicial),
    (BiSemiSimplicialSet, "bi-semi-simplicial set", validate_bisset),
    (FunctorData, "functor", validate_functor),
    (NatTransData, "natural transformation", validate_nat_trans),
    (FinNonUnitalCategory, "category", validate_category),
    (FinMonoid, "monoid", validate_monoid),
    (MonoidAction, "monoid action", validate_action),
    (SparseIntMatrix, "matrix", None),
)


def _kind_of(obj):
    for cls, name, checker in _KINDS:
        if isinstance(obj, cls):
            return name, checker
    raise TypeError(f"unhandled document object {type(obj).__name__}")


def _load_schema(path: str):
    try:
        return formats.read_document(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None
    except formats.FormatError as e:
        raise UsageError(f"{path}: {e}") from None


def _load_checked(path: str, want: tuple, what: str):
    """Load a document, insist on its kind, and run the owning validator."""
    obj = _load_schema(path)
    if not isinstance(obj, want):
        name, _ = _kind_of(obj)
        raise UsageError(f"{path}: expected {what}, found a {name} document")
    name, checker = _kind_of(obj)
    if checker is not None:
        rep = checker(obj)
        if not rep.ok:
            raise UsageError(f"{path}: invalid {name}: {rep.problems[0]}")
    return obj


def _describe(obj) -> str:
    if isinstance(obj, SemiSimplicialSet):
        tail = f", truncated at {obj.truncated_at}" if obj.truncated_at is not None else ""
        return f"semi-simplicial set with level sizes {tuple(obj.sizes)}{tail}"
    if isinstance(obj, SimplicialSet):
        tail = f", truncated at {obj.truncated_at}" if obj.truncated_at is not None else ""
        return f"simplicial set with generator counts {tuple(obj.gen_sizes)}{tail}"
    if isinstance(obj, BiSemiSimplicialSet):
        return (f"bi-semi-simplicial set on a {len(obj.sizes)}x{len(obj.sizes[0])} grid, "
                f"{sum(map(sum, obj.sizes))} simplices")
    if isinstance(obj, FunctorData):
        return (f"functor from {obj.source.n_objects} objects / {obj.source.n_morphisms} "
                f"morphisms to {obj.target.n_objects} / {obj.target.n_morphisms}")
    if isinstance(obj, NatTransData):
        return f"natural transformation with {len(obj.components)} components"
    if isinstance(obj, FinNonUnitalCategory):
        u = "unital" if obj.units is not None else "no units"
        return f"category with {obj.n_objects} objects, {obj.n_morphisms} morphisms, {u}"
    if isinstance(obj, FinMonoid):
        if obj.is_table:
            return f"monoid with {obj.size} elements"
        return f"commutative monoid presentation on {obj.gens} generators, {len(obj.relations)} relations"
    if isinstance(obj, MonoidAction):
        return f"{obj.side} action of a {obj.monoid.size}-element monoid on {obj.size} elements"
    if isinstance(obj, SparseIntMatrix):
        return f"{obj.rows}x{obj.cols} integer matrix"
    return type(obj).__name__


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    obj = _load_schema(args.file)
    name, checker = _kind_of(obj)
    if checker is None:
        ok, problems = True, []
    else:
        rep = checker(obj)
        ok, problems = rep.ok, list(rep.problems)
    _emit({"command": "validate", "file": args.file,
           "type": formats.save_document(obj)["type"], "ok": ok, "problems": problems})
    _say(f"{_describe(obj)}: {'ok' if ok else 'INVALID'}")
    for p in problems:
        _say(f"  {p}")
    return 0 if ok else 1


def _cmd_homology(args) -> int:
    obj = _load_checked(args.file, (SemiSimplicialSet, SimplicialSet),
                        "a semi-simplicial or simplicial document")
    ring = _ring(args.coeff)
    req = args.max_degree
    notes = []
    if isinstance(obj, SemiSimplicialSet):
        complete = obj.is_complete
        make = lambda th: unnormalized_chains(obj, ring, through=th)
    else:
        complete = obj.truncated_at is None
        make = lambda th: normalized_chains(obj, ring, through=th)
    C = make(req + 1) if (req is not None and complete) else make(None)
    top = C.trusted_through if req is None else min(req, C.trusted_through)
    if req is not None and top < req:
        notes.append(f"degrees above {top} are not determined by the truncated input")
    groups = []
    for k in range(top + 1):
        d = {"degree": k, **homology(C, k).to_dict()}
        if ring != "Z":
            r = d["rank"]
            d["pretty"] = "0" if r == 0 else ring if r == 1 else f"{ring}^{r}"
        groups.append(d)
    _emit({"command": "homology", "file": args.file, "coeff": ring,
           "complete": complete, "groups": groups, "notes": notes})
    for g in groups:
        _say(f"H_{g['degree']} = {g['pretty']}")
    for n in notes:
        _say(f"note: {n}")
    return 0


def _cmd_euler(args) -> int:
    obj = _load_checked(args.file, (SemiSimplicialSet, SimplicialSet),
                        "a semi-simplicial or simplicial document")
    if isinstance(obj, SemiSimplicialSet):
        try:
            value = euler_characteristic(obj)
        except ValueError as e:
            raise UsageError(f"{args.file}: {e}") from None
    else:
        if obj.truncated_at is not None:
            raise UsageError(f"{args.file}: Euler characteristic of a truncated "
                             "complex is not determined")
        value = sum((-1) ** q * n for q, n in enumerate(obj.gen_sizes))
    _emit({"command": "euler", "file": args.file, "value": value})
    _say(f"euler characteristic: {value}")
    return 0


def _cmd_skeleton(args) -> int:
    X = _load_checked(args.file, (SemiSimplicialSet,), "a semi-simplicial document")
    try:
        S = skeleton(X, args.degree)
    except ValueError as e:
        raise UsageError(f"{args.file}: {e}") from None
    sys.stdout.write(formats.dumps_document(S))
    _say(f"{args.degree}-skeleton: {_describe(S)}")
    return 0


def _cmd_nerve(args) -> int:
    obj = _load_checked(args.file, (FinNonUnitalCategory, FinMonoid),
                        "a category or monoid document")
    if isinstance(obj, FinMonoid):
        if not obj.is_table:
            raise UsageError(f"{args.file}: the nerve needs a table-form monoid")
        obj = monoid_as_category(obj)
    X = nerve(obj, args.cutoff).sset
    sys.stdout.write(formats.dumps_document(X))
    _say(f"nerve through level {args.cutoff}: {_describe(X)}")
    return 0


def _cmd_unitalize(args) -> int:
    C = _load_checked(args.file, (FinNonUnitalCategory,), "a category document")
    sys.stdout.write(formats.dumps_document(unitalize(C)))
    _say(f"adjoined {C.n_objects} fresh units")
    return 0


def _cmd_over(args) -> int:
    C = _load_checked(args.file, (FinNonUnitalCategory,), "a category document")
    if not (0 <= args.object < C.n_objects):
        raise UsageError(f"object {args.object} out of range (category has "
                         f"{C.n_objects} objects)")
    D = under_category(C, args.object) if args.under else over_category(C, args.object)
    sys.stdout.write(formats.dumps_document(D))
    kind = "under" if args.under else "over"
    _say(f"{kind} category at object {args.object}: {_describe(D)}")
    return 0


def _cmd_bar(args) -> int:
    M = _load_checked(args.file, (FinMonoid,), "a monoid document")
    if not M.is_table:
        raise UsageError(f"{args.file}: the bar construction needs a table-form monoid")
    act = {"trivial": trivial_action, "regular": regular_action}
    Y = act[args.left](M, "right")
    X = act[args.right](M, "left")
    B = bar_construction(Y, M, X, args.cutoff)
    sys.stdout.write(formats.dumps_document(B))
    _say(f"bar construction B({args.left}, M, {args.right}) through level "
         f"{args.cutoff}: {_describe(B)}")
    return 0


def _cmd_resolve(args) -> int:
    F = _load_checked(args.file, (FunctorData,), "a functor document")
    try:
        res = comma_resolution(F, args.cutoff, dual=args.dual)
    except ValueError as e:
        raise UsageError(f"{args.file}: {e}") from None
    doc = {
        "command": "resolve",
        "file": args.file,
        "cutoff": args.cutoff,
        "dual": args.dual,
        "bisset": formats.save_document(res.bisset),
        "eps": [[list(tab) for tab in row] for row in res.eps],
        "eta": [[list(tab) for tab in row] for row in res.eta],
    }
    _emit(doc)
    _say(f"comma resolution ({'dual' if args.dual else 'primal'}): "
         f"{_describe(res.bisset)}")
    return 0


def _cmd_specseq(args) -> int:
    B = _load_checked(args.file, (BiSemiSimplicialSet,), "a bi-semi-simplicial document")
    ring = _ring(args.coeff)
    if ring == "Z":
        raise UsageError("spectral sequences need field coefficients; "
                         "pass --coeff q or --coeff f<p>")
    D = bicomplex(B, ring)
    pages = spectral_sequence(D, orientation=args.orientation, R=args.max_page)
    conv = check_convergence(pages, total_complex(D))
    doc = {
        "command": "specseq",
        "file": args.file,
        "coeff": ring,
        "orientation": args.orientation,
        "pages": [{"r": page.r,
                   "entries": sorted([p, q, d] for (p, q), d in page.dims.items() if d)}
                  for page in pages],
        "convergence": {"ok": conv.ok,
                        "degrees": [list(d) for d in conv.degrees],
                        "problems": list(conv.problems)},
    }
    _emit(doc)
    for page in pages:
        live = sum(1 for d in page.dims.values() if d)
        _say(f"page r={page.r}: {live} nonzero spots")
    _say(f"convergence: {'ok' if conv.ok else 'FAILED'}")
    for p in conv.problems:
        _say(f"  {p}")
    return 0 if conv.ok else 1


def _cmd_group_complete(args) -> int:
    M = _load_checked(args.file, (FinMonoid,), "a monoid document")
    if M.is_table and args.cutoff is None:
        raise UsageError("--cutoff is required for a table-form monoid "
                         "(it bounds the classifying-space comparison)")
    try:
        rep = theorems.group_completion_report(M, args.cutoff if args.cutoff is not None else 0)
    except ValueError as e:
        raise UsageError(f"{args.file}: {e}") from None
    _emit(rep.to_dict())
    _render_report(rep.to_dict(), rep.seconds)
    return 0 if rep.verdict != "fail" else 1


# ---------------------------------------------------------------------------
# the check suite


_CHECK_INPUTS = {
    "adj-units": ((SemiSimplicialSet,), "a semi-simplicial document"),
    "fat-thin": ((SimplicialSet,), "a simplicial document"),
    "ez-diagonal": ((SimplicialSet, SimplicialSet), "two simplicial documents"),
    "products": ((SimplicialSet, SimplicialSet), "two simplicial documents"),
    "krannich": ((FinNonUnitalCategory,), "a category document"),
    "terminal-contractible": ((FinNonUnitalCategory,), "a category document"),
    "quillen-a": ((FunctorData,), "a functor document"),
    "resolution-triangle": ((FunctorData,), "a functor document"),
    "bar-acyclic": ((FinMonoid,), "a table-form monoid document"),
    "group-completion": ((FinMonoid,), "a monoid document"),
    "skeletal-shadow": ((SemiSimplicialSet,), "a semi-simplicial document"),
    "segal-nerve": ((FinMonoid,), "a group multiplication table"),
    "constant": ((), "no file (pass --size instead)"),
}

_RANDOM_CHECKS = {
    "adj-units": theorems.check_adj_units_random,
    "fat-thin": theorems.check_fat_thin_random,
    "ez-diagonal": theorems.check_ez_diagonal_random,
}

_PLAIN_CHECKS = {
    "adj-units": theorems.check_adj_units,
    "fat-thin": theorems.check_fat_thin,
    "krannich": theorems.check_krannich,
    "terminal-contractible": theorems.check_terminal_contractible,
    "quillen-a": theorems.check_quillen_a,
    "resolution-triangle": theorems.check_resolution_triangle,
    "bar-acyclic": theorems.check_bar_acyclic,
    "group-completion": theorems.group_completion_report,
    "segal-nerve": theorems.check_segal_nerve,
}


def _run_check(check_id: str, files: list, cutoff, seed, degree, size):
    if check_id not in _CHECK_INPUTS:
        known = ", ".join(sorted(_CHECK_INPUTS))
        raise UsageError(f"unknown check {check_id!r} (known: {known})")
    if cutoff is None:
        raise UsageError(f"check {check_id} needs --cutoff")
    if seed is not None:
        fn = _RANDOM_CHECKS.get(check_id)
        if fn is None:
            allowed = ", ".join(sorted(_RANDOM_CHECKS))
            raise UsageError(f"--seed only applies to the randomized checks ({allowed})")
        if files:
            raise UsageError("--seed generates the input; do not pass files with it")
        return fn(seed, cutoff)
    kinds, what = _CHECK_INPUTS[check_id]
    if len(files) != len(kinds):
        raise UsageError(f"check {check_id} takes {what}, got {len(files)} file(s)")
    objs = [_load_checked(f, (k,), what) for f, k in zip(files, kinds)]
    try:
        if check_id == "constant":
            if size is None:
                raise UsageError("check constant needs --size")
            return theorems.check_constant(size, cutoff)
        if check_id == "skeletal-shadow":
            if degree is None:
                raise UsageError("check skeletal-shadow needs --degree")
            return theorems.check_skeletal_shadow(objs[0], degree, cutoff)
        if check_id in ("ez-diagonal", "products"):
            fn = theorems.check_ez_diagonal if check_id == "ez-diagonal" else theorems.check_products
            return fn(objs[0], objs[1], cutoff)
        return _PLAIN_CHECKS[check_id](objs[0], cutoff)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _render_report(d: dict, seconds: float | None = None) -> None:
    timing = f"  [{seconds:.3f}s]" if seconds is not None else ""
    _say(f"{d['check']}: {d['verdict']}  (cutoff {d['cutoff']}, "
         f"trusted through {d['trusted_through']}){timing}")
    for it in d["hypotheses"]:
        mark = "ok  " if it["ok"] else "FAIL"
        tail = f": {it['detail']}" if it["detail"] else ""
        _say(f"  {mark} {it['label']}{tail}")
    for c in d["comparisons"]:
        mark = "==" if c["equal"] else "!="
        _say(f"  H_{c['degree']}: {c['left']['pretty']} {mark} {c['right']['pretty']}")
    for n in d["notes"]:
        _say(f"  note: {n}")


_BATCH_KEYS = {"check", "files", "cutoff", "seed", "degree", "size"}


def _check_batch_items(path: str) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            items = json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from None
    if not isinstance(items, list):
        raise UsageError(f"{path}: a batch file holds an array of check entries")
    for i, item in enumerate(items):
        where = f"{path}[{i}]"
        if not isinstance(item, dict) or "check" not in item:
            raise UsageError(f"{where}: each entry is an object with a 'check' field")
        extra = set(item) - _BATCH_KEYS
        if extra:
            raise UsageError(f"{where}: unknown field {sorted(extra)[0]!r}")
        files = item.get("files", [])
        if not isinstance(files, list) or any(not isinstance(f, str) for f in files):
            raise UsageError(f"{where}: 'files' must be an array of paths")
        for key in ("cutoff", "seed", "degree", "size"):
            v = item.get(key)
            if v is not None and (isinstance(v, bool) or not isinstance(v, int)):
                raise UsageError(f"{where}: {key} must be an integer")
    return items


def _batch_worker(work: tuple) -> dict:
    item, base = work
    files = [f if os.path.isabs(f) else os.path.join(base, f) for f in item.get("files", [])]
    rep = _run_check(item["check"], files, item.get("cutoff"),
                     item.get("seed"), item.get("degree"), item.get("size"))
    return rep.to_dict()


def _cmd_check(args) -> int:
    if args.batch is not None:
        if args.check_id is not None or args.files:
            raise UsageError("--batch replaces the check id and files")
        items = _check_batch_items(args.batch)
        base = os.path.dirname(os.path.abspath(args.batch))
        work = [(item, base) for item in items]
        if args.jobs > 1 and len(work) > 1:
            with futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_batch_worker, work))
        else:
            reports = [_batch_worker(w) for w in work]
        _emit(reports)
        for d in reports:
            _render_report(d)
        passed = sum(1 for d in reports if d["verdict"] == "pass")
        _say(f"{passed}/{len(reports)} checks passed")
        return 0 if passed == len(reports) else 1
    if args.check_id is None:
        raise UsageError("pass a check id or --batch FILE")
    if args.jobs != 1:
        raise UsageError("--jobs only applies to --batch runs")
    rep = _run_check(args.check_id, args.files, args.cutoff,
                     args.seed, args.degree, args.size)
    _emit(rep.to_dict())
    _render_report(rep.to_dict(), rep.seconds)
    return 0 if rep.verdict == "pass" else 1


# ---------------------------------------------------------------------------
# parser


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ssethom",
        description="Homology, nerves, bar constructions, and exact homological "
                    "checks over tagged JSON documents.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def cmd(name, func, help_text, file_help=None):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        if file_help is not None:
            sp.add_argument("file", help=file_help)
        sp.set_defaults(func=func)
        return sp

    cmd("validate", _cmd_validate,
        "Check a document against its structural laws.", "document to validate")

    sp = cmd("homology", _cmd_homology,
             "Integral or field homology of a complex.", "sset or simplicial document")
    sp.add_argument("--coeff", default="z", help="z, q, or f<p> (default z)")
    sp.add_argument("--max-degree", type=int, default=None,
                    help="report degrees 0..N (default: everything determined)")

    cmd("euler", _cmd_euler, "Euler characteristic of a complete complex.",
        "sset or simplicial document")

    sp = cmd("skeleton", _cmd_skeleton,
             "Write the n-skeleton of a semi-simplicial set.", "sset document")
    sp.add_argument("--degree", type=int, required=True, help="keep levels 0..n")

    sp = cmd("nerve", _cmd_nerve,
             "Write the nerve of a category or monoid through a level cutoff.",
             "category or monoid document")
    sp.add_argument("--cutoff", type=int, required=True,
                    help="highest nerve level to compute")

    cmd("unitalize", _cmd_unitalize,
        "Freely adjoin one identity per object.", "category document")

    sp = cmd("over", _cmd_over,
             "Write the over (or under) category at an object.", "category document")
    sp.add_argument("--object", type=int, required=True, help="base object index")
    sp.add_argument("--under", action="store_true",
                    help="take the under category instead")

    sp = cmd("bar", _cmd_bar,
             "Write a two-sided bar construction B(Y, M, X).", "monoid document")
    sp.add_argument("--cutoff", type=int, required=True,
                    help="highest bar level to compute")
    sp.add_argument("--left", choices=("trivial", "regular"), default="trivial",
                    help="right action in the left slot (default trivial)")
    sp.add_argument("--right", choices=("trivial", "regular"), default="regular",
                    help="left action in the right slot (default regular)")

    sp = cmd("resolve", _cmd_resolve,
             "Write the bi-semi-simplicial comma resolution of a functor.",
             "functor document")
    sp.add_argument("--cutoff", type=int, required=True,
                    help="highest resolution level in each direction")
    sp.add_argument("--dual", action="store_true",
                    help="use the dual comma direction")

    sp = cmd("specseq", _cmd_specseq,
             "Spectral sequence pages of a bi-semi-simplicial set, with the "
             "convergence tally.", "bisset document")
    sp.add_argument("--coeff", required=True, help="q or f<p> (a field)")
    sp.add_argument("--orientation", choices=("cols", "rows"), default="cols")
    sp.add_argument("--max-page", type=int, default=12,
                    help="stop after page r=N (default 12)")

    sp = cmd("group-complete", _cmd_group_complete,
             "Grothendieck group of a commutative (or group) monoid, with the "
             "classifying-space comparison for table input.", "monoid document")
    sp.add_argument("--cutoff", type=int, default=None,
                    help="homology comparison range (required for table input)")

    sp = sub.add_parser(
        "check",
        help="Run one named homological check, or a batch of them.",
        description="Run one named check and report pass/fail.  Known checks: "
                    + ", ".join(sorted(_CHECK_INPUTS)) + ".")
    sp.add_argument("check_id", nargs="?", default=None, metavar="check",
                    help="which check to run")
    sp.add_argument("files", nargs="*", help="input documents for the check")
    sp.add_argument("--cutoff", type=int, default=None,
                    help="homological range of the check (required)")
    sp.add_argument("--seed", type=int, default=None,
                    help="generate a random input instead of reading files "
                         "(adj-units, fat-thin, ez-diagonal)")
    sp.add_argument("--degree", type=int, default=None,
                    help="skeleton degree (skeletal-shadow only)")
    sp.add_argument("--size", type=int, default=None,
                    help="number of points (constant only)")
    sp.add_argument("--batch", default=None, metavar="FILE",
                    help="run every check listed in a JSON batch file")
    sp.add_argument("--jobs", type=int, default=1,
                    help="parallel workers for a batch run")
    sp.set_defaults(func=_cmd_check)

    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _say(f"[{time.perf_counter() - t0:.3f}s]")
    return code


if __name__ == "__main__":
    sys.exit(main())
