"""Config-driven command-line surface.

One JSON config per run; exact rationals travel as strings so no float
parsing ever happens.  Reports print to stdout as JSON (default) or TSV,
byte-identical across repeated runs of the same config.  The exit status
makes the tool usable as a test oracle: 0 when the command's verification
passed (or a report was produced), 1 when a verification failed, 2 for
config errors, which also print a single-line diagnostic naming the
offending field.

Commands: check-axioms, weights, probe-irreducible, singular-vectors,
hc-suite, invariants, annihilator, jacobi-sweep.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import jacobi_antisymmetry_sweep
from .analysis import (
    annihilator_probe,
    axiom_sweep,
    hc_criterion_suite,
    omega_invariants,
    probe_irreducible,
    singular_vectors,
    weight_table,
)
from .errors import HvkitError, ConfigurationError
from .modules import (
    EvaluationModule,
    IntermediateSeries,
    Module,
    OmegaModule,
    TruncatedVerma,
    module_from_descriptor,
)
from .polys import PolyB
from .scalars import parse_scalar, render_scalar

_COMMANDS = (
    "check-axioms",
    "weights",
    "probe-irreducible",
    "singular-vectors",
    "hc-suite",
    "invariants",
    "annihilator",
    "jacobi-sweep",
)

_TOP_FIELDS = {"command", "module", "bounds", "f", "generators", "raising"}
_BOUND_FIELDS = {"index", "monomial", "window", "level", "k", "operator"}


def _fail(field: str, why: str):
    raise ConfigurationError(f"{field}: {why}")


def _get_int(bounds: dict, name: str, default: int) -> int:
    value = bounds.get(name, default)
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(f"bounds.{name}", "must be an integer")
    return value


def _parse_poly(data, field: str) -> PolyB:
    if not isinstance(data, dict):
        _fail(field, "must be an object with a 'terms' list")
    unknown = set(data) - {"terms", "k"}
    if unknown:
        _fail(f"{field}.{sorted(unknown)[0]}", "unknown field")
    terms = data.get("terms")
    if not isinstance(terms, list):
        _fail(f"{field}.terms", "must be a list")
    k = data.get("k")
    parsed = {}
    for i, entry in enumerate(terms):
        if not isinstance(entry, dict) or set(entry) - {"exp", "coeff"}:
            _fail(f"{field}.terms[{i}]", "must have fields 'exp' and 'coeff'")
        exp = tuple(int(e) for e in entry.get("exp", ()))
        if k is None:
            k = len(exp)
        elif len(exp) != k:
            _fail(f"{field}.terms[{i}].exp", f"expected {k} entries")
        parsed[exp] = parse_scalar(entry.get("coeff", "1"))
    if k is None:
        _fail(f"{field}.k", "required for a polynomial without terms")
    return PolyB(k, parsed)


def _default_window(module: Module) -> int:
    if isinstance(module, IntermediateSeries):
        return 8
    if isinstance(module, OmegaModule):
        return 4
    if isinstance(module, EvaluationModule):
        return 6 if isinstance(module.inner, IntermediateSeries) else 2
    if isinstance(module, TruncatedVerma):
        return 2
    return 1


def run_config(config: dict, out_format: str = "json", seed: int | None = None):
    """Execute one config; returns (exit_code, report_text)."""
    if not isinstance(config, dict):
        _fail("config", "must be a JSON object")
    unknown = set(config) - _TOP_FIELDS
    if unknown:
        _fail(sorted(unknown)[0], "unknown field")
    command = config.get("command")
    if command not in _COMMANDS:
        _fail("command", f"must be one of {', '.join(_COMMANDS)}")
    bounds = config.get("bounds") or {}
    if not isinstance(bounds, dict):
        _fail("bounds", "must be an object")
    unknown = set(bounds) - _BOUND_FIELDS
    if unknown:
        _fail(f"bounds.{sorted(unknown)[0]}", "unknown field")

    if command == "jacobi-sweep":
        report = jacobi_antisymmetry_sweep(
            _get_int(bounds, "index", 6),
            _get_int(bounds, "monomial", 2),
            _get_int(bounds, "k", 2),
        )
        payload = {
            "command": command,
            "pairs_checked": report.pairs_checked,
            "triples_checked": report.triples_checked,
            "jacobi_violations": len(report.jacobi_violations),
            "antisymmetry_violations": len(report.antisymmetry_violations),
            "centrality_violations": len(report.centrality_violations),
        }
        return (0 if report.clean else 1), _render(payload, out_format)

    if "module" not in config:
        _fail("module", "required for this command")
    module = module_from_descriptor(config["module"])
    payload: dict = {"command": command, "module": module.describe()}

    if command == "check-axioms":
        report = axiom_sweep(
            module,
            index_bound=_get_int(bounds, "index", 5),
            monomial_bound=_get_int(bounds, "monomial", 2),
            window=_get_int(bounds, "window", _default_window(module)),
            order_seed=seed,
        )
        payload.update(report.summary())
        return (0 if report.clean else 1), _render(payload, out_format)

    if command == "weights":
        table = weight_table(module, window=_get_int(bounds, "window", 4))
        rows = sorted(table.items(), key=lambda item: item[0].sort_key())
        if out_format == "tsv":
            lines = ["d0\tI0\tC\tCI\tCD\tdimension"]
            for wt, dim in rows:
                lines.append("\t".join(list(wt.render()) + [str(dim)]))
            return 0, "\n".join(lines) + "\n"
        payload["weights"] = [
            {
                "d0": render_scalar(wt.d0),
                "I0": render_scalar(wt.I0),
                "C": render_scalar(wt.C),
                "CI": render_scalar(wt.CI),
                "CD": render_scalar(wt.CD),
                "dimension": dim,
            }
            for wt, dim in rows
        ]
        return 0, _render(payload, out_format)

    if command == "probe-irreducible":
        report = probe_irreducible(
            module,
            window=_get_int(bounds, "window", 4),
            operator_bound=_get_int(bounds, "operator", 3),
        )
        payload.update(report.summary())
        return 0, _render(payload, out_format)

    if command == "singular-vectors":
        if not isinstance(module, TruncatedVerma):
            _fail("module.family", "singular-vectors needs a verma module")
        raising = config.get("raising", "generators")
        if raising not in ("generators", "full"):
            _fail("raising", "must be 'generators' or 'full'")
        level = _get_int(bounds, "level", 2)
        vectors = singular_vectors(module, level, raising)
        payload.update(
            {
                "level": level,
                "raising": raising,
                "dimension": len(vectors),
                "vectors": sorted(v.render(module.coeffs) for v in vectors),
            }
        )
        return 0, _render(payload, out_format)

    if command == "hc-suite":
        if not isinstance(module, TruncatedVerma):
            _fail("module.family", "hc-suite needs a verma module")
        if "f" not in config:
            _fail("f", "required for hc-suite")
        f = _parse_poly(config["f"], "f")
        report = hc_criterion_suite(module, f, singular_depth=_get_int(bounds, "level", 4))
        payload.update(report.summary())
        return (0 if report.passed else 1), _render(payload, out_format)

    if command == "invariants":
        lam, alpha, mu, beta = omega_invariants(module)
        payload.update(
            {
                "lambda": render_scalar(lam),
                "alpha": render_scalar(alpha),
                "mu": [render_scalar(m) for m in mu],
                "beta": render_scalar(beta),
            }
        )
        return 0, _render(payload, out_format)

    if command == "annihilator":
        gens = config.get("generators")
        if not isinstance(gens, list) or not gens:
            _fail("generators", "required list of polynomials for annihilator")
        polys = [_parse_poly(g, f"generators[{i}]") for i, g in enumerate(gens)]
        report = annihilator_probe(
            module,
            polys,
            window=_get_int(bounds, "window", 2),
            index_bound=_get_int(bounds, "index", 2),
        )
        payload.update(report.summary())
        return 0, _render(payload, out_format)

    raise AssertionError(f"unhandled command {command}")  # pragma: no cover


def _flatten(prefix: str, value, lines: list):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], lines)
    elif isinstance(value, list):
        for i, item in enumerate(value):
            _flatten(f"{prefix}[{i}]", item, lines)
    else:
        lines.append(f"{prefix}\t{value}")


def _render(payload: dict, out_format: str) -> str:
    if out_format == "tsv":
        lines: list = []
        _flatten("", payload, lines)
        return "\n".join(lines) + "\n"
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hvkit",
        description="Exact checks for the Heisenberg-Virasoro map algebra and its modules.",
    )
    parser.add_argument("--config", required=True, help="path to a JSON run config")
    parser.add_argument("--out", choices=("json", "tsv"), default="json")
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="shuffle sweep sampling order (results are order-independent)",
    )
    args = parser.parse_args(argv)
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            config = json.load(fh)
    except OSError as exc:
        print(f"config error: cannot read {args.config}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"config error: invalid JSON in {args.config}: {exc}", file=sys.stderr)
        return 2
    try:
        code, text = run_config(config, args.out, args.seed)
    except ConfigurationError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except HvkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
