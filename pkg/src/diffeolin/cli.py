"""Command-line front end.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input or
usage error.  Rationals are read and written as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .diffeospace import DiffSpace, normalize_terms, validate_space
from .dualmetric import induced_dual_metric, is_smooth_dual_metric, pseudo_metric_from_dual_metric
from .dualspace import dual_basis
from .errors import DiffeoError
from .exactlin import Matrix, Subspace, jacobi_eigen, parse_rational, symmetric_inertia
from .forms import canonical_pseudo_metric, is_pseudo_metric, is_smooth_form, smooth_form_space
from .probe import probe_invariants
from .report import Report, format_value, reproduce_paper_example, to_plain
from .splitting import check_smooth_split, decompose, invariant_standard_part

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# --------------------------------------------------------------------------
# Loading


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _rationals(values: Any, where: str) -> list:
    if not isinstance(values, list):
        raise InputError(f"{where}: expected a list of rationals")
    try:
        return [parse_rational(v) for v in values]
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from exc


def space_from_document(doc: Any, where: str = "space") -> DiffSpace:
    """Build a space from ``{"dimension": n, "generators": [...]}``.

    A generator is ``{"symbol": s, "vector": [...]}`` or
    ``{"terms": [{"symbol": s, "vector": [...]}, ...]}``; terms with symbol
    ``"smooth"`` are dropped.
    """
    if not isinstance(doc, dict) or "dimension" not in doc:
        raise InputError(f"{where}: expected an object with a 'dimension' field")
    dim = doc["dimension"]
    raw = doc.get("generators", [])
    if not isinstance(raw, list):
        raise InputError(f"{where}: 'generators' must be a list")
    terms = []
    for i, g in enumerate(raw):
        if not isinstance(g, dict):
            raise InputError(f"{where}: generator {i} must be an object")
        parts = g["terms"] if "terms" in g else [g]
        for t in parts:
            if not isinstance(t, dict) or "symbol" not in t or "vector" not in t:
                raise InputError(f"{where}: generator {i} needs 'symbol' and 'vector'")
            terms.append((str(t["symbol"]), tuple(_rationals(t["vector"], f"{where}: generator {i}"))))
    gens = normalize_terms(terms)
    diags = validate_space(dim, gens)
    if diags:
        raise InputError(f"{where}: " + "; ".join(diags))
    return DiffSpace(dim, tuple(gens))


def load_space(path: str) -> DiffSpace:
    return space_from_document(_read_json(path), path)


def load_matrix(path: str) -> Matrix:
    data = _read_json(path)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError(f"{path}: expected an array of arrays of rationals")
    rows = [_rationals(r, f"{path}: row {i}") for i, r in enumerate(data)]
    try:
        return Matrix(rows, cols=len(rows[0]) if rows else 0)
    except DiffeoError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_subspace(path: str, n: int) -> Subspace:
    """Spanning rows; canonicalized on load."""
    data = _read_json(path)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError(f"{path}: expected an array of spanning rows")
    rows = [_rationals(r, f"{path}: row {i}") for i, r in enumerate(data)]
    if any(len(r) != n for r in rows):
        raise InputError(f"{path}: spanning rows must have length {n}")
    return Subspace.span(rows, n)


def space_to_document(space: DiffSpace) -> dict:
    return {
        "dimension": space.dimension,
        "generators": [{"symbol": g.symbol, "vector": [str(x) for x in g.vector]} for g in space.generators],
    }


# --------------------------------------------------------------------------
# Commands.  Each returns (payload, exit code); payload is JSON-ready.


def _eigen_summary(A: Matrix, tol: float) -> list:
    w, _ = jacobi_eigen(A, tol=tol)
    return to_plain(list(w))


def cmd_dual(args):
    space = load_space(args.space)
    F = dual_basis(space)
    return {"k": F.k, "rows": to_plain(F.rows)}, EXIT_OK


def cmd_forms(args):
    space = load_space(args.space)
    basis = smooth_form_space(space)
    return {"dimension": len(basis), "basis": [to_plain(B) for B in basis]}, EXIT_OK


def _space_and_matrix(args):
    space = load_space(args.space)
    A = load_matrix(args.matrix)
    return space, A


def cmd_check_form(args):
    space, A = _space_and_matrix(args)
    ok = is_smooth_form(space, A)
    return {"smooth": ok, "reason": "smooth" if ok else "form not smooth"}, EXIT_OK if ok else EXIT_NEGATIVE


def cmd_pseudometric(args):
    space = load_space(args.space)
    A = canonical_pseudo_metric(space).matrix
    return {"matrix": to_plain(A), "inertia": list(symmetric_inertia(A))}, EXIT_OK


def cmd_check_pm(args):
    space, A = _space_and_matrix(args)
    v = is_pseudo_metric(space, A)
    payload = {"pseudo_metric": v.ok, "reason": v.reason, "inertia": list(symmetric_inertia(A)),
               "eigenvalues": _eigen_summary(A, args.tol)}
    return payload, EXIT_OK if v.ok else EXIT_NEGATIVE


def cmd_decompose(args):
    space, A = _space_and_matrix(args)
    V0, V1 = decompose(space, A)
    split = check_smooth_split(space, V0, V1)
    return {"V0": to_plain(V0), "V1": to_plain(V1), "smooth_split": split.verdict,
            "eigenvalues": _eigen_summary(A, args.tol)}, EXIT_OK


def cmd_check_split(args):
    space = load_space(args.space)
    V1 = load_subspace(args.first, space.dimension)
    V2 = load_subspace(args.second, space.dimension)
    s = check_smooth_split(space, V1, V2)
    payload = {"verdict": s.verdict, "reason": s.reason, "first": to_plain(V1), "second": to_plain(V2)}
    return payload, EXIT_OK if s.verdict else EXIT_NEGATIVE


def cmd_invariant_part(args):
    space = load_space(args.space)
    return {"subspace": to_plain(invariant_standard_part(space))}, EXIT_OK


def cmd_dual_metric(args):
    space, A = _space_and_matrix(args)
    B = induced_dual_metric(space, A)
    return {"matrix": to_plain(B.matrix), "positive_definite": is_smooth_dual_metric(space, B)}, EXIT_OK


def cmd_from_dual_metric(args):
    space, B = _space_and_matrix(args)
    A = pseudo_metric_from_dual_metric(space, B)
    return {"matrix": to_plain(A.matrix), "pseudo_metric": bool(is_pseudo_metric(space, A))}, EXIT_OK


def cmd_report(args):
    rep = reproduce_paper_example(tol=args.tol)
    return rep, EXIT_OK


def cmd_probe(args):
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    space = load_space(args.space) if args.space else None
    rep, ok = probe_invariants(args.seed, args.trials, space)
    return rep, EXIT_OK if ok else EXIT_NEGATIVE


# --------------------------------------------------------------------------
# Output


def _format_text(payload: dict) -> str:
    return "".join(f"{k}: {format_value(v)}\n" for k, v in payload.items())


def render(payload: Any, as_json: bool) -> str:
    if isinstance(payload, Report):
        return payload.to_json() + "\n" if as_json else payload.to_text()
    if as_json:
        return json.dumps(payload, indent=2) + "\n"
    return _format_text(payload)


def build_parser() -> argparse.ArgumentParser:
    def flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommand copies use SUPPRESS so they do not clobber flags given before the subcommand
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--json", action="store_true", help="machine-readable output",
                       **({"default": argparse.SUPPRESS} if suppress else {}))
        p.add_argument("--tol", type=float, help="Jacobi tolerance (default 1e-12)",
                       default=argparse.SUPPRESS if suppress else 1e-12)
        return p

    common = flags(True)
    parser = argparse.ArgumentParser(prog="diffeolin", description=__doc__.splitlines()[0], parents=[flags(False)])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for pos in positional:
            p.add_argument(pos)
        p.set_defaults(func=func)
        return p

    add("dual", cmd_dual, "space", help="canonical basis of the diffeological dual")
    add("forms", cmd_forms, "space", help="basis of the smooth symmetric forms")
    add("check-form", cmd_check_form, "space", "matrix", help="is the form smooth")
    add("pseudometric", cmd_pseudometric, "space", help="canonical pseudo-metric")
    add("check-pm", cmd_check_pm, "space", "matrix", help="is the matrix a pseudo-metric")
    add("decompose", cmd_decompose, "space", "matrix", help="V0 and V1 of a pseudo-metric")
    add("check-split", cmd_check_split, "space", "first", "second", help="is first + second a smooth split")
    add("invariant-part", cmd_invariant_part, "space", help="orthogonal complement of C")
    add("dual-metric", cmd_dual_metric, "space", "matrix", help="metric induced on the dual")
    add("from-dual-metric", cmd_from_dual_metric, "space", "matrix", help="pseudo-metric inducing a dual metric")
    add("report", cmd_report, help="reproduce the built-in R^3 example")
    p = add("probe", cmd_probe, help="randomized invariant checks")
    p.add_argument("space", nargs="?")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        payload, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DiffeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(render(payload, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
