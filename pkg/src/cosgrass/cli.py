"""Command line interface: ``python -m cosgrass {lattice,spectrum,verify}``.

Exit codes: 0 success, 1 configuration or validation error, 2 a verification
check failed.  Output depends only on the command line, so two runs with the
same arguments are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import __version__
from .errors import CosGrassError
from .groupops import DEFAULT_PHASE_SIGN
from .rootdata import CaseParams, make_case
from .spectrum import SpectralValue, eta_closed, eta_recursive
from .verify import MC_SUITES, SUITES, Check, run_suite
from .weights import enumerate_weights

RESULT_FIELDS = [
    "field", "p", "q", "l", "mu",
    "lambda_re", "lambda_im", "eta_re", "eta_im",
    "status", "method",
]
LATTICE_FIELDS = ["field", "p", "q", "l", "mu", "degree"]
CHECK_FIELDS = ["suite", "check", "measured", "tolerance", "result"]

EXIT_OK, EXIT_CONFIG, EXIT_FAILED = 0, 1, 2


class ConfigError(Exception):
    """Bad command line; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    field: str | None = None
    p: int | None = None
    q: int | None = None
    l: int | None = None
    lambda_grid: str | None = None
    lambda_list: str | None = None
    max_degree: int = 10
    seed: int | None = None
    samples: int | None = None
    format: str = "csv"
    out: str | None = None
    cross_check: bool = False
    suite: str | None = None
    jobs: int = 1


# ---------------------------------------------------------------- parsing helpers


def fmt(x: float) -> str:
    """17 significant digits, with -0 folded into 0."""
    return format(float(x) + 0.0, ".17g")


def parse_grid(text: str) -> list[float]:
    """``START:STOP:STEP`` as a closed range."""
    try:
        start, stop, step = (float(s) for s in text.split(":"))
    except ValueError:
        raise ConfigError(f"--lambda expects START:STOP:STEP, got {text!r}") from None
    if not all(math.isfinite(v) for v in (start, stop, step)) or step == 0:
        raise ConfigError("--lambda needs finite values and a nonzero step")
    span = (stop - start) / step
    if span < -1e-9:
        raise ConfigError("--lambda step points away from STOP")
    count = int(math.floor(span + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def _parse_lambda_item(item) -> complex:
    if isinstance(item, bool):
        raise ValueError
    if isinstance(item, (int, float)):
        return complex(item)
    if isinstance(item, str):
        return complex(item.replace(" ", ""))
    if isinstance(item, list) and len(item) == 2:
        return complex(float(item[0]), float(item[1]))
    if isinstance(item, dict) and set(item) <= {"re", "im"}:
        return complex(float(item.get("re", 0.0)), float(item.get("im", 0.0)))
    raise ValueError


def parse_lambda_list(path: str) -> list[complex]:
    """JSON array; entries are numbers, ``[re, im]``, ``{"re", "im"}`` or ``"a+bj"``."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read lambda list {path}: {exc}") from None
    if not isinstance(data, list):
        raise ConfigError("lambda list must be a JSON array")
    out = []
    for item in data:
        try:
            out.append(_parse_lambda_item(item))
        except (ValueError, TypeError):
            raise ConfigError(f"bad lambda entry {item!r}") from None
    return out


def case_from_config(cfg: RunConfig) -> CaseParams:
    if cfg.field is None or cfg.p is None or cfg.q is None:
        raise ConfigError("--field, --p and --q are required")
    l = cfg.l if cfg.l is not None else 0
    if cfg.field == "C" and cfg.l is None:
        raise ConfigError("--l is required for --field C")
    return make_case(cfg.field, cfg.p, cfg.q, l)


def _lambdas(cfg: RunConfig) -> list[complex]:
    if (cfg.lambda_grid is None) == (cfg.lambda_list is None):
        raise ConfigError("give exactly one of --lambda and --lambda-list")
    if cfg.lambda_grid is not None:
        return [complex(v) for v in parse_grid(cfg.lambda_grid)]
    return parse_lambda_list(cfg.lambda_list)


# ---------------------------------------------------------------- row builders


def _case_cells(case: CaseParams) -> dict:
    return {"field": case.field, "p": case.p, "q": case.q, "l": case.l}


def _mu_str(mu) -> str:
    return "-".join(str(m) for m in mu)


def result_row(case: CaseParams, mu, lam: complex, val: SpectralValue, method: str) -> dict:
    finite = val.finite and math.isfinite(abs(val.eta))
    return {
        **_case_cells(case),
        "mu": _mu_str(mu),
        "lambda_re": float(lam.real),
        "lambda_im": float(lam.imag),
        "eta_re": float(val.eta.real) if finite else None,
        "eta_im": float(val.eta.imag) if finite else None,
        "status": val.status.value,
        "method": method,
    }


def _rows_for_mu(args) -> list[dict]:
    case, mu, lams, cross = args
    rows = []
    for lam in lams:
        rows.append(result_row(case, mu, lam, eta_closed(case, mu, lam), "closed"))
        if cross:
            rows.append(result_row(case, mu, lam, eta_recursive(case, mu, lam), "recursive"))
    return rows


def spectrum_rows(case: CaseParams, max_degree: int, lams: Sequence[complex], cross_check: bool, jobs: int = 1):
    """Rows ordered by weight (canonical order), then lambda, closed before recursive."""
    tasks = [(case, mu, list(lams), cross_check) for mu in enumerate_weights(case, max_degree)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_rows_for_mu, tasks))
    else:
        chunks = [_rows_for_mu(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def lattice_rows(case: CaseParams, max_degree: int) -> list[dict]:
    return [
        {**_case_cells(case), "mu": _mu_str(mu), "degree": sum(mu)}
        for mu in enumerate_weights(case, max_degree)
    ]


def check_row(c: Check) -> dict:
    return {
        "suite": c.suite,
        "check": c.name,
        "measured": float(c.measured),
        "tolerance": float(c.tolerance),
        "result": "PASS" if c.passed else "FAIL",
    }


# ---------------------------------------------------------------- writers


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return fmt(v)
    return str(v)


def render_csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for row in rows:
        w.writerow([_cell(row[f]) for f in fields])
    return buf.getvalue()


def _json_num(v):
    if isinstance(v, float):
        if not math.isfinite(v):
            return None
        return float(fmt(v))
    return v


def render_json(cfg: RunConfig, rows: list[dict]) -> str:
    doc = {
        "metadata": {
            "config": asdict(cfg),
            "seed": cfg.seed,
            "kernel_phase_sign": DEFAULT_PHASE_SIGN,
            "version": __version__,
        },
        "rows": [{k: _json_num(v) for k, v in row.items()} for row in rows],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def schema() -> dict:
    """The JSON schema every ``--format json`` document satisfies."""
    text = resources.files("cosgrass").joinpath("schema/output.schema.json").read_text()
    return json.loads(text)


def emit(cfg: RunConfig, rows: list[dict], fields: list[str]) -> None:
    text = render_json(cfg, rows) if cfg.format == "json" else render_csv(rows, fields)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def cmd_lattice(cfg: RunConfig) -> int:
    case = case_from_config(cfg)
    emit(cfg, lattice_rows(case, cfg.max_degree), LATTICE_FIELDS)
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    case = case_from_config(cfg)
    lams = _lambdas(cfg)
    rows = spectrum_rows(case, cfg.max_degree, lams, cfg.cross_check, cfg.jobs)
    emit(cfg, rows, RESULT_FIELDS)
    return EXIT_OK


def _verify_case(cfg: RunConfig, suite: str) -> CaseParams | None:
    given = [cfg.field, cfg.p, cfg.q, cfg.l]
    if suite == "sphere":
        return make_case(
            cfg.field or "C",
            cfg.p if cfg.p is not None else 1,
            cfg.q if cfg.q is not None else 2,
            cfg.l if cfg.l is not None else 1,
        )
    if all(v is None for v in given):
        return None
    return case_from_config(cfg)


def cmd_verify(cfg: RunConfig) -> int:
    suites = SUITES if cfg.suite == "all" else (cfg.suite,)
    if cfg.seed is None and any(s in MC_SUITES for s in suites):
        raise ConfigError("--seed is required for Monte Carlo suites")
    if cfg.samples is not None and cfg.samples < 2:
        raise ConfigError("--samples must be at least 2")
    seed = cfg.seed if cfg.seed is not None else 0
    checks: list[Check] = []
    for suite in suites:
        checks.extend(run_suite(suite, _verify_case(cfg, suite), seed, cfg.samples))
    emit(cfg, [check_row(c) for c in checks], CHECK_FIELDS)
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", choices=["R", "C"])
    common.add_argument("--p", type=int)
    common.add_argument("--q", type=int)
    common.add_argument("--l", type=int)
    common.add_argument("--max-degree", type=int, default=10)
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for row computation")

    parser = _Parser(prog="cosgrass", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("lattice", parents=[common], help="list lattice weights")

    sp = sub.add_parser("spectrum", parents=[common], help="tabulate eta_mu(lambda)")
    sp.add_argument("--lambda", dest="lambda_grid", metavar="START:STOP:STEP")
    sp.add_argument("--lambda-list", metavar="FILE")
    sp.add_argument("--cross-check", action="store_true", help="add recursive rows")

    vp = sub.add_parser("verify", parents=[common], help="run verification suites")
    vp.add_argument("suite", choices=list(SUITES) + ["all"])
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        field=ns.field,
        p=ns.p,
        q=ns.q,
        l=ns.l,
        lambda_grid=getattr(ns, "lambda_grid", None),
        lambda_list=getattr(ns, "lambda_list", None),
        max_degree=ns.max_degree,
        seed=ns.seed,
        samples=ns.samples,
        format=ns.format,
        out=ns.out,
        cross_check=getattr(ns, "cross_check", False),
        suite=getattr(ns, "suite", None),
        jobs=ns.jobs,
    )


COMMANDS = {"lattice": cmd_lattice, "spectrum": cmd_spectrum, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return int(exc.code or 0)
    cfg = config_from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except (ConfigError, CosGrassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
