"""
Command-line application for evaluation, kernels and identity checks
"""

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dotenv import dotenv_values, load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..kernels import (
    KernelParams,
    KernelValue,
    asc_kernel,
    asc_kernel_norm,
    asc_kernel_unity,
    bigqh_kernel,
    bigqh_kernel_norm,
    dual_qhahn_kernel,
    dual_qhahn_kernel_unity,
    kernel_direct,
    kernel_explicit,
    kernel_unity,
    mehler_kernel,
    qhermite_poisson,
    qhermite_qbessel_kernel,
)
from ..polys import (
    MuParams,
    ParamSet,
    alsalam_chihara,
    aw_norm,
    aw_poly,
    aw_weight,
    big_qhermite,
    cont_qhermite,
    dual_qhahn,
    q_laguerre,
)
from ..qcore import QKernelError, SeriesValue, qpoch_inf, qpoch_n
from ..qseries import eval_W, eval_phi
from ..qseries.hypergeometric import PhiSpec
from ..verify import (
    AskeyWilsonWeight,
    SuiteConfig,
    all_passed,
    default_registry,
    integrate_weighted,
    run_suite,
)

logger = logging.getLogger(__name__)

COMMANDS = ("eval", "kernel", "check", "suite")
EVAL_TARGETS = (
    "aw_poly", "aw_weight", "aw_norm", "aw_inner", "phi", "W", "qpoch_inf", "qpoch_n",
    "cont_qhermite", "dual_qhahn", "alsalam_chihara", "big_qhermite", "q_laguerre",
)
KERNEL_TARGETS = (
    "direct", "explicit", "unity", "mehler", "qhermite", "dual_qhahn", "dual_qhahn_unity",
    "asc", "asc_norm", "asc_unity", "bigqh", "bigqh_norm", "qbessel",
)

Coordinate = Tuple[Optional[float], float]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad command-line input outside any parameter model."""

    code = "USAGE"

    def __init__(self, invariant: str):
        self.invariant = invariant
        super().__init__(invariant)


# Configuration model
class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: str
    target: Optional[str] = None
    identity: Optional[str] = None
    q: Optional[float] = None
    lam: Tuple[float, ...] = ()
    mu: Tuple[float, ...] = ()
    t: complex = 0j
    xs: Tuple[Coordinate, ...] = ()
    ys: Tuple[Coordinate, ...] = ()
    n: int = 0
    m: int = 0
    a: complex = 0j
    numerator: Tuple[complex, ...] = ()
    denominator: Tuple[complex, ...] = ()
    z: complex = 0j
    w_a: complex = 0j
    w_b: Tuple[complex, ...] = ()
    alpha_lag: float = 0.0
    format: str = "json"
    seed: int = Field(default_factory=lambda: int(os.getenv("QKERNEL_SEED", "42")))
    only: Optional[Tuple[str, ...]] = None
    tolerances: Dict[str, float] = Field(default_factory=dict)
    progress: bool = True

    @field_validator("command")
    @classmethod
    def _known_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"command in {{{', '.join(COMMANDS)}}}")
        return value

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in ("json", "csv"):
            raise ValueError("format in {json, csv}")
        return value

    @field_validator("n", "m")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("degrees n, m >= 0")
        return value

    def require_q(self) -> float:
        if self.q is None:
            raise UsageError("--q is required")
        return self.q

    def lambda_set(self) -> ParamSet:
        return ParamSet(values=self.lam, q=self.require_q())

    def mu_set(self, unity: bool = False) -> MuParams:
        lam = self.lambda_set()
        return MuParams(values=self.mu, q=lam.q, companion=lam, unity=unity)

    def kernel_params(self) -> KernelParams:
        lam = self.lambda_set()
        return KernelParams(lam=lam, mu=self.mu_set(), t=self.t)

    def points(self) -> List[Tuple[Coordinate, Coordinate]]:
        """Coordinate pairs; several values on either side form a grid."""
        if not self.xs or not self.ys:
            raise UsageError("--theta/--x and --phi/--y are required")
        return [(x, y) for x in self.xs for y in self.ys]

    def single_abscissa(self) -> Optional[float]:
        if not self.xs:
            return None
        if len(self.xs) != 1:
            raise UsageError("exactly one --theta or --x")
        return self.xs[0][1]


# Argument parsing
def _floats(text: str) -> Tuple[float, ...]:
    return tuple(float(part) for part in text.split(",") if part.strip())


def _complex(text: str) -> complex:
    """'re' or 're,im'; Python complex literals are accepted as well."""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) == 1:
        return complex(parts[0].replace(" ", ""))
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"not a complex number: {text!r}")


def _complexes(text: str) -> Tuple[complex, ...]:
    """Semicolon separated complex values, each 're' or 're,im'."""
    return tuple(_complex(part) for part in text.split(";") if part.strip())


def _coordinates(thetas: Optional[str], xs: Optional[str]) -> Tuple[Coordinate, ...]:
    # theta wins when both are given
    if thetas:
        return tuple((theta, math.cos(theta)) for theta in _floats(thetas))
    if xs:
        return tuple((math.acos(x) if abs(x) <= 1 else None, x) for x in _floats(xs))
    return ()


def _tolerances(items: Sequence[str]) -> Dict[str, float]:
    tolerances = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--tol expects id=value, got {item!r}")
        tolerances[name.strip()] = float(value)
    return tolerances


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkernel",
        description="q-special functions and nonsymmetric Askey-Wilson Poisson kernels",
    )
    parser.add_argument("--command", choices=COMMANDS)
    parser.add_argument("--target", help="eval target or kernel name")
    parser.add_argument("--identity", help="registered check run by the check command")
    parser.add_argument("--config", help="key=value file pre-binding any flag")
    parser.add_argument("--q", type=float)
    parser.add_argument("--lambda", dest="lam", help="a,b,c,d")
    parser.add_argument("--mu", help="alpha,beta,gamma,delta")
    parser.add_argument("--t", help="re[,im]")
    parser.add_argument("--theta", help="angle(s) of x, comma separated")
    parser.add_argument("--phi", help="angle(s) of y, comma separated")
    parser.add_argument("--x", help="abscissa(e) of x; only mehler accepts |x| > 1")
    parser.add_argument("--y", help="abscissa(e) of y")
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int, help="second degree, for aw_inner")
    parser.add_argument("--a", help="re[,im]")
    parser.add_argument("--numerator", help="phi numerator parameters, ';' separated")
    parser.add_argument("--denominator", help="phi denominator parameters, ';' separated")
    parser.add_argument("--z", help="series argument re[,im]")
    parser.add_argument("--w-a", dest="w_a", help="very-well-poised leading parameter")
    parser.add_argument("--w-b", dest="w_b", help="very-well-poised parameters, ';' separated")
    parser.add_argument("--alpha-lag", dest="alpha_lag", type=float)
    parser.add_argument("--format", choices=("json", "csv"))
    parser.add_argument("--seed", type=int)
    parser.add_argument("--only", action="append", default=[],
                        help="registered check name, repeatable; --only '' selects nothing")
    parser.add_argument("--tol", action="append", default=[], help="id=value tolerance override")
    parser.add_argument("--log-level", dest="log_level")
    parser.add_argument("--no-progress", dest="no_progress", action="store_true")
    return parser


def _merged(args: argparse.Namespace) -> Dict[str, Any]:
    """Flag values over the optional --config file."""
    values: Dict[str, Any] = {}
    if args.config:
        for key, value in dotenv_values(args.config).items():
            values[key.lower().lstrip("-").replace("-", "_")] = value
        if "lambda" in values:
            values["lam"] = values.pop("lambda")
    for key, value in vars(args).items():
        if value is None or value is False or value == []:
            continue
        values[key] = value
    return values


def config_from_args(args: argparse.Namespace) -> CliConfig:
    values = _merged(args)
    if not values.get("command"):
        raise UsageError("--command is required")

    fields: Dict[str, Any] = {"command": values["command"]}
    for key in ("target", "identity", "format"):
        if values.get(key):
            fields[key] = values[key]
    for key, convert in (("q", float), ("n", int), ("m", int), ("seed", int), ("alpha_lag", float)):
        if values.get(key) is not None:
            fields[key] = convert(values[key])
    for key in ("lam", "mu"):
        if values.get(key):
            fields[key] = _floats(values[key])
    for key in ("t", "a", "z", "w_a"):
        if values.get(key):
            fields[key] = _complex(values[key])
    for key in ("numerator", "denominator", "w_b"):
        if values.get(key):
            fields[key] = _complexes(values[key])
    fields["xs"] = _coordinates(values.get("theta"), values.get("x"))
    fields["ys"] = _coordinates(values.get("phi"), values.get("y"))
    only = values.get("only")
    if only is not None:
        # blank names only mark an explicit, possibly empty, selection
        names = only if isinstance(only, list) else [only]
        fields["only"] = tuple(name.strip() for name in names if name.strip())
    tol = values.get("tol") or []
    fields["tolerances"] = _tolerances(tol if isinstance(tol, list) else [tol])
    fields["progress"] = str(values.get("no_progress", False)).lower() not in ("true", "1", "yes")
    return CliConfig(**fields)


# Serialisation
def _number(value: float) -> str:
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return format(value, ".17g")


def to_json(obj: Any) -> str:
    """JSON with every float written to 17 significant digits."""
    if isinstance(obj, BaseModel):
        return to_json(obj.model_dump())
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, complex):
        return to_json([obj.real, obj.imag])
    if isinstance(obj, float):
        return _number(obj)
    if hasattr(obj, "item"):
        return to_json(obj.item())
    return json.dumps(str(obj))


def to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_number(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


# Commands
def _evaluator(config: CliConfig) -> Callable[[], SeriesValue]:
    target = config.target
    policy = None
    x = config.single_abscissa()

    def polynomial(value: complex) -> SeriesValue:
        return SeriesValue(value=value, terms_used=config.n + 1, terminated=True)

    def need_x() -> float:
        if x is None:
            raise UsageError(f"{target} needs --theta or --x")
        return x

    evaluators: Dict[str, Callable[[], SeriesValue]] = {
        "aw_poly": lambda: polynomial(aw_poly(config.n, need_x(), config.lambda_set(), policy)),
        "aw_weight": lambda: SeriesValue(value=aw_weight(need_x(), config.lambda_set(), policy)),
        "aw_norm": lambda: SeriesValue(value=aw_norm(config.n, config.lambda_set(), policy)),
        "aw_inner": lambda: SeriesValue(value=_inner_product(config)),
        "phi": lambda: eval_phi(PhiSpec(numerator=config.numerator, denominator=config.denominator,
                                        z=config.z, q=config.require_q()), policy),
        "W": lambda: eval_W(config.w_a, config.w_b, config.z, config.require_q(), policy),
        "qpoch_inf": lambda: qpoch_inf(config.a, config.require_q(), policy),
        "qpoch_n": lambda: SeriesValue(value=qpoch_n(config.a, config.require_q(), config.n),
                                       terms_used=config.n, terminated=True),
        "cont_qhermite": lambda: polynomial(cont_qhermite(config.n, need_x(), config.require_q())),
        "dual_qhahn": lambda: polynomial(dual_qhahn(config.n, need_x(), config.lambda_set(), policy)),
        "alsalam_chihara": lambda: polynomial(alsalam_chihara(config.n, need_x(), config.lambda_set(), policy)),
        "big_qhermite": lambda: polynomial(big_qhermite(config.n, need_x(), config.lambda_set(), policy)),
        "q_laguerre": lambda: polynomial(q_laguerre(config.n, need_x(), config.alpha_lag, config.require_q(), policy)),
    }
    if target not in evaluators:
        raise UsageError(f"eval target in {{{', '.join(EVAL_TARGETS)}}}")
    return evaluators[target]


def _inner_product(config: CliConfig) -> complex:
    """int p_n p_m rho dx by the suite's quadrature rule; delta_{mn} / h_n up to quadrature error."""
    lam = config.lambda_set()
    return integrate_weighted(lambda x: aw_poly(config.n, x, lam) * aw_poly(config.m, x, lam),
                              AskeyWilsonWeight(lam))


def cmd_eval(config: CliConfig) -> Tuple[str, int]:
    result = _evaluator(config)()
    if config.format == "csv":
        value = complex(result.value)
        return to_csv(("target", "re", "im", "terms_used", "tail_estimate"),
                      [(config.target, value.real, value.imag, result.terms_used, result.tail_estimate)]), EXIT_OK
    return to_json({
        "target": config.target,
        "value": complex(result.value),
        "terms_used": result.terms_used,
        "tail_estimate": result.tail_estimate,
    }) + "\n", EXIT_OK


def _kernel(config: CliConfig) -> Callable[[float, float], Any]:
    """The named kernel as a function of the two abscissae."""
    target = config.target
    t = config.t

    def first(values: Tuple[float, ...], name: str) -> float:
        if len(values) != 1:
            raise UsageError(f"{target} takes one parameter in --{name}")
        return values[0]

    kernels: Dict[str, Callable[[float, float], Any]] = {
        "direct": lambda x, y: kernel_direct(x, y, config.kernel_params()).value,
        "explicit": lambda x, y: kernel_explicit(x, y, config.kernel_params()),
        "unity": lambda x, y: kernel_unity(x, y, config.lambda_set(), config.mu_set(unity=True)),
        "mehler": lambda x, y: mehler_kernel(x, y, t.real),
        "qhermite": lambda x, y: qhermite_poisson(x, y, t.real, config.require_q()),
        "dual_qhahn": lambda x, y: dual_qhahn_kernel(x, y, config.lambda_set(), config.mu_set(), t),
        "dual_qhahn_unity": lambda x, y: dual_qhahn_kernel_unity(x, y, config.lambda_set(),
                                                                   config.mu_set(unity=True)),
        "asc": lambda x, y: asc_kernel(x, y, config.lambda_set(), config.mu_set(), t),
        "asc_norm": lambda x, y: asc_kernel_norm(x, y, config.lambda_set(), config.mu_set(), t),
        "asc_unity": lambda x, y: asc_kernel_unity(x, y, config.lambda_set(),
                                                     config.mu_set(unity=True)),
        "bigqh": lambda x, y: bigqh_kernel(x, y, first(config.lam, "lambda"),
                                             first(config.mu, "mu"), t, config.require_q()),
        "bigqh_norm": lambda x, y: bigqh_kernel_norm(x, y, first(config.lam, "lambda"),
                                                       first(config.mu, "mu"), t, config.require_q()),
        "qbessel": lambda x, y: qhermite_qbessel_kernel(x, y, first(config.mu, "mu"), t,
                                                          config.require_q()),
    }
    if target not in kernels:
        raise UsageError(f"kernel in {{{', '.join(KERNEL_TARGETS)}}}")
    return kernels[target]


def cmd_kernel(config: CliConfig) -> Tuple[str, int]:
    kernel = _kernel(config)
    points = config.points()
    records = []
    for (theta, x), (phi, y) in points:
        result = kernel(x, y)
        record: Dict[str, Any] = {"theta": theta, "phi": phi, "x": x, "y": y}
        if isinstance(result, KernelValue):
            record.update(value=result.value, parts=list(result.parts or ()), diagnostics=result.diagnostics)
        else:
            record["value"] = complex(result)
        records.append(record)

    if config.format == "csv":
        rows = [(r["theta"], r["phi"], r["value"].real, r["value"].imag) for r in records]
        return to_csv(("theta", "phi", "re", "im"), rows), EXIT_OK
    if len(records) == 1:
        return to_json(dict(records[0], target=config.target)) + "\n", EXIT_OK
    return to_json({"target": config.target, "grid": records}) + "\n", EXIT_OK


def _reports_output(config: CliConfig, reports) -> Tuple[str, int]:
    code = EXIT_OK if all_passed(reports) else EXIT_FAILED
    if config.format == "csv":
        rows = [(r.identity_id, r.observed_error, r.tolerance, r.passed) for r in reports]
        return to_csv(("identity_id", "observed_error", "tolerance", "passed"), rows), code
    payload = [
        {
            "identity_id": r.identity_id,
            "observed_error": r.observed_error,
            "tolerance": r.tolerance,
            "passed": r.passed,
            "witness": r.witness,
        }
        for r in reports
    ]
    return to_json(payload) + "\n", code


def _suite_config(config: CliConfig, include: Optional[Sequence[str]]) -> SuiteConfig:
    return SuiteConfig(seed=config.seed, include=None if include is None else list(include),
                       tolerances=config.tolerances)


def cmd_check(config: CliConfig) -> Tuple[str, int]:
    names = {check.name for check in default_registry()}
    if config.identity not in names:
        raise UsageError(f"--identity names a registered check, got {config.identity!r}")
    reports = run_suite(_suite_config(config, [config.identity]), progress=config.progress)
    return _reports_output(config, reports)


def cmd_suite(config: CliConfig) -> Tuple[str, int]:
    registry = default_registry()
    names = {check.name for check in registry}
    unknown = [name for name in config.only or () if name not in names]
    if unknown:
        raise UsageError(f"--only names registered checks, unknown: {', '.join(unknown)}")
    reports = run_suite(_suite_config(config, config.only), registry, progress=config.progress)
    return _reports_output(config, reports)


HANDLERS = {"eval": cmd_eval, "kernel": cmd_kernel, "check": cmd_check, "suite": cmd_suite}


def _validation_invariant(error: ValidationError) -> str:
    first = error.errors()[0]
    return first["msg"].removeprefix("Value error, ")


def _error(code: str, invariant: str) -> int:
    print(f"ERROR {code} {invariant}", file=sys.stderr)
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    level = args.log_level or os.getenv("QKERNEL_LOG_LEVEL", "WARNING")
    logging.basicConfig(level=level.upper(), stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        config = config_from_args(args)
        output, code = HANDLERS[config.command](config)
    except (QKernelError, UsageError) as e:
        return _error(e.code, e.invariant)
    except ValidationError as e:
        return _error("VALIDATION", _validation_invariant(e))
    except ValueError as e:
        return _error("USAGE", str(e))

    sys.stdout.write(output)
    return code
