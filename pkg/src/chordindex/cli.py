"""Command-line front end.

Structured results go to stdout as JSON (``batch`` writes one JSON object
per line); a short human summary and timings go to stderr, so stdout is
byte-identical across runs.

Exit codes: 0 success, 1 a verification check failed, 2 the input could not
be parsed, 3 the class is not admissible.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .algebra import GroupRingElement
from .codec import parse_class, parse_file
from .diagram import gauss_diagram, mirror, reverse_orientation, writhe
from .errors import DiagramFormatError
from .homology import admissible_subgroup_basis, intersection
from .indices import (
    chord_index_by_coloring,
    chord_indices,
    coloring,
    parity,
    regular_index,
)
from .invariants import (
    group_ring_invariant,
    regular_invariant,
    small_state_sum,
    transcendental_invariant,
    virtual_writhe_polynomial,
    writhe_polynomial,
    zero_class_scan,
)
from .moves import KINDS, apply, find_sites, find_triangles, triangle_identity

INVARIANTS = (
    "indices",
    "parity",
    "writhe-polynomial",
    "virtual-writhe",
    "group-ring",
    "small-state-sum",
    "regular",
    "transcendental",
)
_NEEDS_ALPHA = {"indices", "parity", "writhe-polynomial", "transcendental"}

SCAN_NOTE = (
    "Classes listed have vanishing writhe polynomial. An empty list means no "
    "such class was found inside the coefficient box; it is not a proof that "
    "the surface has minimal genus."
)

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_INADMISSIBLE = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code, record):
        super().__init__(record.get("message", ""))
        self.code = code
        self.record = record


# -- helpers ----------------------------------------------------------------------


def _load(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Exit(EXIT_PARSE, {"error": "unreadable", "message": str(exc)}) from None
    try:
        return parse_file(text)
    except DiagramFormatError as exc:
        raise _Exit(EXIT_PARSE, {"error": type(exc).__name__, "message": str(exc)}) from None


def _choose_alpha(d, file_alpha, flag):
    """``--alpha`` wins over the file's class line; ``auto`` or nothing means ``[D]``."""
    if flag is not None and flag != "auto":
        try:
            return parse_class(flag, d.genus)
        except DiagramFormatError as exc:
            raise _Exit(EXIT_PARSE, {"error": type(exc).__name__, "message": str(exc)}) from None
    if flag is None and file_alpha is not None:
        return file_alpha
    return d.homology_class()


def _summary(d):
    return {
        "genus": d.genus,
        "crossings": d.n_crossings,
        "writhe": writhe(d),
        "class": list(d.homology_class()),
    }


def _invariant(name, d, alpha, normalized):
    if name == "indices":
        return {str(c): f for c, f in chord_indices(d, alpha).items()}
    if name == "parity":
        return {str(c): parity(d, alpha, c) for c in d.crossings}
    if name == "writhe-polynomial":
        return str(writhe_polynomial(d, alpha))
    if name == "virtual-writhe":
        return str(virtual_writhe_polynomial(gauss_diagram(d), normalized=normalized))
    if name == "group-ring":
        return group_ring_invariant(d).records()
    if name == "small-state-sum":
        return small_state_sum(d).records()
    if name == "regular":
        return regular_invariant(d).records()
    if name == "transcendental":
        return transcendental_invariant(d, alpha).records()
    raise ValueError(name)


def compute_report(path, alpha_arg=None, invariant="all", normalized=False) -> dict:
    d, file_alpha = _load(path)
    alpha = _choose_alpha(d, file_alpha, alpha_arg)
    names = INVARIANTS if invariant == "all" else (invariant,)
    k = intersection(alpha, d.homology_class())
    if k and any(n in _NEEDS_ALPHA for n in names):
        raise _Exit(
            EXIT_INADMISSIBLE,
            {
                "error": "NotAdmissible",
                "message": f"class {list(alpha)} meets the knot with intersection number {k}",
                "intersection": k,
            },
        )
    report = {"file": str(path), "diagram": _summary(d), "alpha": list(alpha), "invariants": {}}
    for name in names:
        report["invariants"][name] = _invariant(name, d, alpha, normalized)
    return report


# -- verification ------------------------------------------------------------------


def _check(name, passed, detail=""):
    return {"name": name, "passed": bool(passed), "detail": detail}


def _all_invariants(d, alpha):
    return (
        writhe_polynomial(d, alpha),
        group_ring_invariant(d),
        small_state_sum(d),
        transcendental_invariant(d, alpha),
        virtual_writhe_polynomial(gauss_diagram(d)),
    )


def verify_report(path, alpha_arg=None, seed=0, samples=8) -> dict:
    """Run the identity checks on one diagram.

    Removal and third-move sites are checked exhaustively; insertion sites
    are sampled (``samples`` per kind, seeded).
    """
    d, file_alpha = _load(path)
    alpha = _choose_alpha(d, file_alpha, alpha_arg)
    rng = random.Random(seed)
    checks = []

    col = coloring(d, alpha, strict=False)
    checks.append(_check("coloring-closes", col.closes, f"monodromy {col.monodromy}"))
    if not col.closes:
        return {"file": str(path), "alpha": list(alpha), "checks": checks, "passed": False}

    f = chord_indices(d, alpha)
    bad = [c for c in d.crossings if chord_index_by_coloring(d, alpha, c) != f[c]]
    checks.append(_check("coloring-matches-homology", not bad, f"mismatch at {bad}" if bad else ""))

    basis = admissible_subgroup_basis(d)
    ok = chord_indices(d, -alpha) == {c: -v for c, v in f.items()}
    for b in basis:
        fb = chord_indices(d, b)
        ok &= chord_indices(d, alpha + b) == {c: f[c] + fb[c] for c in f}
    checks.append(_check("linearity", ok, f"{len(basis)} basis classes"))

    tri_ok = True
    tris = find_triangles(d)
    for t in tris:
        lhs, rhs = triangle_identity(d, t)
        tri_ok &= lhs == rhs and f[t.tb] == f[t.tm] + f[t.mb]
    checks.append(_check("triangle-identities", tri_ok, f"{len(tris)} triangles"))

    base = _all_invariants(d, alpha)
    reg = regular_invariant(d)
    moved = failures = 0
    for kind in KINDS:
        sites = find_sites(d, kind)
        if kind.endswith("insert"):
            sites = rng.sample(sites, min(samples, len(sites)))
        for site in sites:
            e = apply(d, site)
            moved += 1
            ok = _all_invariants(e, alpha) == base
            if kind.startswith("r1"):
                ok &= _kink_change(d, e, site) == regular_invariant(e) - reg
            else:
                ok &= regular_invariant(e) == reg
            failures += not ok
    checks.append(_check("move-invariance", not failures, f"{moved} moves, {failures} failures"))

    w = writhe_polynomial(d, alpha)
    k = d.homology_class()
    checks.append(_check("reversal", writhe_polynomial(reverse_orientation(d), alpha) == w))
    checks.append(_check("mirror", writhe_polynomial(mirror(d), alpha) == -w.invert()))
    checks.append(_check("antipode", writhe_polynomial(d, -alpha) == w.invert()))
    checks.append(
        _check(
            "reversal-with-knot-class",
            writhe_polynomial(reverse_orientation(d), -k) == writhe_polynomial(d, k).invert(),
        )
    )
    return {
        "file": str(path),
        "alpha": list(alpha),
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }


def _kink_change(before, after, site):
    """Regular-invariant contribution of the kink created or destroyed by ``site``."""
    if site.kind == "r1-insert":
        (c,) = set(after.crossings) - set(before.crossings)
        d, sign = after, 1
    else:
        (c,) = site.crossings
        d, sign = before, -1
    r = regular_index(d, c)
    w = d.sign(c) * sign
    return GroupRingElement([(("x", r.x_class), w), (("y", r.y_class), w)])


def scan_report(path, bound, jobs=1) -> dict:
    d, _ = _load(path)
    found = zero_class_scan(d, bound, jobs=jobs)
    return {
        "file": str(path),
        "bound": bound,
        "basis": [list(b) for b in admissible_subgroup_basis(d)],
        "zero_classes": [list(a) for a in found],
        "note": SCAN_NOTE,
    }


def _batch_one(args):
    path, alpha, invariant, normalized = args
    try:
        return compute_report(path, alpha, invariant, normalized)
    except _Exit as exc:
        return dict({"file": str(path)}, **exc.record)


# -- entry point -------------------------------------------------------------------


def _parser():
    p = argparse.ArgumentParser(prog="chordindex", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def alpha_flag(sp):
        sp.add_argument(
            "--alpha",
            help='class as "2g integers", or "auto" for the knot class; '
            "defaults to the file's class line, else auto",
        )

    c = sub.add_parser("compute", help="compute invariants of one diagram file")
    c.add_argument("file")
    alpha_flag(c)
    c.add_argument("--invariant", default="all", choices=INVARIANTS + ("all",))
    c.add_argument("--normalized", action="store_true", help="report W(t) - W(1) for the virtual writhe polynomial")

    v = sub.add_parser("verify", help="run identity checks on one diagram file")
    v.add_argument("file")
    alpha_flag(v)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=8, help="insertion sites tried per move kind")

    s = sub.add_parser("scan", help="search a coefficient box for classes with vanishing writhe polynomial")
    s.add_argument("file")
    s.add_argument("--bound", type=int, default=2)
    s.add_argument("--jobs", type=int, default=1)

    b = sub.add_parser("batch", help="compute invariants for every .knot file in a directory")
    b.add_argument("directory")
    alpha_flag(b)
    b.add_argument("--invariant", default="all", choices=INVARIANTS + ("all",))
    b.add_argument("--normalized", action="store_true")
    b.add_argument("--jobs", type=int, default=1)
    return p


def _emit(obj, out):
    out.write(json.dumps(obj) + "\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = _parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "compute":
            rep = compute_report(args.file, args.alpha, args.invariant, args.normalized)
            _emit(rep, stdout)
            d = rep["diagram"]
            stderr.write(f"{args.file}: genus {d['genus']}, {d['crossings']} crossings, writhe {d['writhe']}\n")
            code = EXIT_OK
        elif args.command == "verify":
            rep = verify_report(args.file, args.alpha, args.seed, args.samples)
            _emit(rep, stdout)
            for chk in rep["checks"]:
                stderr.write(f"{'PASS' if chk['passed'] else 'FAIL'} {chk['name']} {chk['detail']}\n")
            code = EXIT_OK if rep["passed"] else EXIT_FAILED
        elif args.command == "scan":
            if args.bound < 1:
                raise _Exit(EXIT_PARSE, {"error": "BadBound", "message": "--bound must be positive"})
            rep = scan_report(args.file, args.bound, args.jobs)
            _emit(rep, stdout)
            stderr.write(f"{len(rep['zero_classes'])} classes with vanishing writhe polynomial\n")
            stderr.write(SCAN_NOTE + "\n")
            code = EXIT_OK
        else:
            files = sorted(Path(args.directory).glob("*.knot"))
            jobs = [(str(f), args.alpha, args.invariant, args.normalized) for f in files]
            if args.jobs > 1 and len(jobs) > 1:
                with ProcessPoolExecutor(args.jobs) as pool:
                    reports = list(pool.map(_batch_one, jobs))
            else:
                reports = [_batch_one(j) for j in jobs]
            for rep in reports:
                _emit(rep, stdout)
            errors = sum("error" in r for r in reports)
            stderr.write(f"{len(reports)} files, {errors} errors\n")
            code = EXIT_FAILED if reports and errors == len(reports) else EXIT_OK
    except _Exit as exc:
        _emit(exc.record, stdout)
        stderr.write(f"error: {exc.record['message']}\n")
        code = exc.code
    stderr.write(f"elapsed {time.perf_counter() - start:.3f}s\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
