"""Command line front end.

    gr1n <command> --shape SHAPE [--point POINT] [options]

SHAPE and POINT are inline JSON or paths to JSON files.  POINT may also be
the word ``generic``: a random rational point with simple spectrum is drawn
from ``--seed``.  ``--config FILE`` supplies any of shape, point, maxdeg,
p_div, mu and tableau; explicit flags override it.

Exit codes: 0 success, 1 bad input, 2 mathematical refusal, 3 failed
oracle verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .cherednik import (clifford_split, closed_generators, findim_check, is_simple_spectrum,
                        l_dimension, lattice_graded_dims, norm, radical, z_weight)
from .combinatorics import MultiPartition, StandardTableau, syt_count, syt_enumerate
from .errors import Gr1nError, MathematicalRefusal
from .oracle import TruncatedModule, generic_point, verify_suite
from .scalars import ParamPoint, rational_to_str

COMMANDS = ("syt", "weights", "norm", "spectrum", "generators", "lattice", "findim", "clifford", "verify")
LATTICE_COMMANDS = ("generators", "lattice", "findim", "clifford")


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="gr1n", description="Standard modules of the rational Cherednik algebra of G(r,1,n).")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="JSON job file")
    ap.add_argument("--shape", help="multipartition as JSON list of partitions, or a file")
    ap.add_argument("--point", help="parameter point as JSON, a file, or 'generic'")
    ap.add_argument("--maxdeg", type=int)
    ap.add_argument("--pdiv", type=int, help="p dividing r, for clifford")
    ap.add_argument("--mu", help="composition as JSON list")
    ap.add_argument("--tableau", help="tableau as JSON rows per component, or its index in syt order")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--list", action="store_true", help="syt: list the tableaux")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def _load_json(value: str):
    if value is None:
        return None
    if os.path.exists(value):
        with open(value) as fh:
            return json.load(fh)
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise InputError(f"not JSON and not a file: {value!r} ({e})")


def load_config(args) -> dict:
    cfg = {}
    if args.config:
        cfg = _load_json(args.config)
        if not isinstance(cfg, dict):
            raise InputError("config must be a JSON object")
    for key, val in (("shape", args.shape), ("point", args.point), ("maxdeg", args.maxdeg),
                     ("p_div", args.pdiv), ("mu", args.mu), ("tableau", args.tableau)):
        if val is not None:
            cfg[key] = val
    for key in ("shape", "mu", "tableau"):
        if isinstance(cfg.get(key), str):
            cfg[key] = _load_json(cfg[key])
    if isinstance(cfg.get("point"), str) and cfg["point"] != "generic":
        cfg["point"] = _load_json(cfg["point"])
    if "shape" not in cfg:
        raise InputError("--shape is required")
    try:
        cfg["shape"] = MultiPartition.from_json(cfg["shape"])
    except (TypeError, ValueError) as e:
        raise InputError(f"bad shape: {e}")
    return cfg


def resolve_point(cfg: dict, command: str, seed: int):
    """The ParamPoint of the job, plus the seed when it was sampled."""
    shape = cfg["shape"]
    raw = cfg.get("point")
    if raw is None:
        return None, None
    if raw == "generic":
        return generic_point(shape, seed, kappa_one=command in LATTICE_COMMANDS), seed
    try:
        p = ParamPoint.from_json(raw)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad point: {e}")
    if p.r != shape.r:
        raise InputError(f"point has r={p.r} but the shape has {shape.r} components")
    return p, None


def _require_point(p):
    if p is None:
        raise InputError("--point is required for this command")
    return p


def _tableau(shape: MultiPartition, raw) -> StandardTableau:
    tabs = syt_enumerate(shape)
    if raw is None:
        if len(tabs) == 1:
            return tabs[0]
        raise InputError("--tableau is required: the shape has more than one standard tableau")
    if isinstance(raw, int):
        if not 0 <= raw < len(tabs):
            raise InputError(f"tableau index {raw} out of range 0..{len(tabs) - 1}")
        return tabs[raw]
    try:
        return StandardTableau.from_rows(shape, raw)
    except (TypeError, ValueError, IndexError) as e:
        raise InputError(f"bad tableau: {e}")


def _mu(shape: MultiPartition, raw) -> tuple:
    if raw is None:
        raise InputError("--mu is required for this command")
    mu = tuple(int(x) for x in raw)
    if len(mu) != shape.n or any(x < 0 for x in mu):
        raise InputError(f"mu must be {shape.n} non-negative integers")
    return mu


def _q(x: Fraction) -> str:
    return rational_to_str(x)


# ------------------------------------------------------------------ commands


def cmd_syt(cfg, p, args) -> dict:
    shape = cfg["shape"]
    out = {"shape": shape.to_json(), "count": syt_count(shape)}
    if args.list:
        out["tableaux"] = [T.to_json() for T in syt_enumerate(shape)]
    return out


def cmd_weights(cfg, p, args) -> dict:
    shape = cfg["shape"]
    mu = _mu(shape, cfg.get("mu"))
    T = _tableau(shape, cfg.get("tableau"))
    w = z_weight(mu, T)
    out = {"mu": list(mu), "tableau": T.to_json(), "weight": w.to_json(),
           "text": [str(a) for a in w.alphas]}
    if p is not None:
        out["values"] = [_q(x) for x in w.evaluate(p)[0]]
    return out


def cmd_norm(cfg, p, args) -> dict:
    shape = cfg["shape"]
    mu = _mu(shape, cfg.get("mu"))
    T = _tableau(shape, cfg.get("tableau"))
    nm = norm(mu, T)
    out = {"mu": list(mu), "tableau": T.to_json(), "norm": nm.to_json(), "text": str(nm)}
    if p is not None:
        out["value"] = _q(nm.evaluate(p))
    return out


def cmd_spectrum(cfg, p, args) -> dict:
    return is_simple_spectrum(cfg["shape"], _require_point(p)).to_json()


def cmd_generators(cfg, p, args) -> dict:
    gens = closed_generators(cfg["shape"], _require_point(p))
    return {"generators": [g.to_json() for g in gens], "text": [str(g) for g in gens]}


def cmd_lattice(cfg, p, args) -> dict:
    shape = cfg["shape"]
    p = _require_point(p)
    maxdeg = int(cfg.get("maxdeg", 4))
    gens = closed_generators(shape, p)
    rad = radical(gens)
    return {"maxdeg": maxdeg,
            "radical": lattice_graded_dims(shape, p, gens, rad, maxdeg),
            "L": lattice_graded_dims(shape, p, gens, rad, maxdeg, complement=True),
            "generators": len(gens)}


def cmd_findim(cfg, p, args) -> dict:
    shape = cfg["shape"]
    p = _require_point(p)
    gens = closed_generators(shape, p)
    cert = findim_check(shape, p, gens, check=False)
    out = cert.to_json()
    if cert.finite:
        out.update(l_dimension(shape, p, cert, gens).to_json())
    return out


def cmd_clifford(cfg, p, args) -> dict:
    if cfg.get("p_div") is None:
        raise InputError("--pdiv is required for clifford")
    maxdeg = cfg.get("maxdeg")
    return clifford_split(cfg["shape"], _require_point(p), int(cfg["p_div"]),
                          None if maxdeg is None else int(maxdeg)).to_json()


def cmd_verify(cfg, p, args) -> dict:
    shape = cfg["shape"]
    if p is None:
        p = generic_point(shape, args.seed)
    maxdeg = int(cfg.get("maxdeg", 2))
    return verify_suite(TruncatedModule(shape, p, maxdeg))


DISPATCH = {
    "syt": cmd_syt, "weights": cmd_weights, "norm": cmd_norm, "spectrum": cmd_spectrum,
    "generators": cmd_generators, "lattice": cmd_lattice, "findim": cmd_findim,
    "clifford": cmd_clifford, "verify": cmd_verify,
}


def dispatch(command: str, cfg: dict, args) -> dict:
    p, seed = resolve_point(cfg, command, args.seed)
    report = DISPATCH[command](cfg, p, args)
    if p is not None and "point" not in report:
        report["point"] = p.to_json()
    if seed is not None:
        report["seed"] = seed
    return report


# ------------------------------------------------------------------ output


def emit_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _table(rows) -> str:
    return "\n".join("  ".join(str(x).rjust(4) for x in row) for row in rows)


def emit_text(command: str, report: dict) -> str:
    lines = []
    if command == "syt":
        lines.append(f"{report['count']} standard tableaux")
        for T in report.get("tableaux", []):
            lines.append(json.dumps(T))
    elif command == "weights":
        for i, a in enumerate(report["text"], start=1):
            val = f" = {report['values'][i - 1]}" if "values" in report else ""
            lines.append(f"alpha_{i} = {a}{val}")
        lines.append("residues: " + " ".join(str(x) for x in report["weight"]["residues"]))
    elif command == "norm":
        lines.append(report["text"])
        if "value" in report:
            lines.append(f"= {report['value']} at the point")
    elif command == "spectrum":
        if report["simple"]:
            lines.append("simple spectrum")
        else:
            lines.append("spectrum is not simple; exceptional hyperplanes through the point:")
            for v in report["violations"]:
                lines.append(f"  {v['family']}: l={v['l']} m={v['m']} k={v['k']}")
    elif command == "generators":
        if not report["generators"]:
            lines.append("M(λ) is irreducible at this point")
        lines.extend(report["text"])
    elif command == "lattice":
        degs = list(range(report["maxdeg"] + 1))
        lines.append(_table([["deg"] + degs, ["rad"] + report["radical"], ["L"] + report["L"]]))
    elif command == "findim":
        if report.get("finite"):
            lines.append(f"finite dimensional, dim L = {report['dim']}, bound B = {report['bound']}")
            lines.append(_table([["deg"] + list(range(len(report["graded"]))), ["dim"] + report["graded"]]))
        else:
            lines.append("no certificate found (finite dimensionality not proven)")
            for b in report["failed_corners"]:
                lines.append(f"  no chain from corner {b}")
        for c in report["chains"]:
            lines.append(f"  corner {c['corner']}: boxes {c['boxes']} k {c['k']} (sum {c['sum']})")
    elif command == "clifford":
        lines.append(f"orbit k = {report['orbit_k']}, {report['num_summands']} summands")
        lines.append(_table([["deg"] + list(range(len(report["graded_L"]))),
                             ["L"] + report["graded_L"], ["each"] + report["graded_per_summand"]]))
        if report["truncated"]:
            lines.append("(truncated: L(λ) not certified finite)")
        if report["warning_n_lt_3"]:
            lines.append("warning: n < 3")
    elif command == "verify":
        for c in report["checks"]:
            lines.append(f"{c['status']:5} {c['check']}  degrees {c['degrees']}")
            if "counterexample" in c:
                lines.append("      " + json.dumps(c["counterexample"], sort_keys=True))
        lines.append("all checks pass" if report["all_pass"] else "VERIFICATION FAILED")
    if "seed" in report:
        lines.append(f"(generic point from seed {report['seed']})")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        report = dispatch(args.command, cfg, args)
    except MathematicalRefusal as e:
        body = {"error": type(e).__name__, "code": e.code, "message": str(e)}
        if getattr(e, "witness", None) is not None:
            body["witness"] = e.witness
        print(emit_json(body) if args.format == "json" else f"refused ({e.code}): {e}", file=sys.stdout)
        return 2
    except (InputError, ValueError, KeyError, TypeError, Gr1nError) as e:
        print(f"gr1n: input error: {e}", file=sys.stderr)
        return 1
    print(emit_json(report) if args.format == "json" else emit_text(args.command, report))
    if args.command == "verify" and not report["all_pass"]:
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
