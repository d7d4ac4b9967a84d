"""
birthday-coincidence 명령행 인터페이스

    birthday-coincidence                          # summary --n 100 --days 365
    birthday-coincidence bounds --kmax 6
    birthday-coincidence mckinney --days 365
    birthday-coincidence taus --reps 1000000 --seed 20180403
    birthday-coincidence figure1 --format csv --out figure1.csv

종료 코드: 0 성공, 2 사용법 오류, 3 계산 가드 오류, 4 출력 I/O 오류
"""
import argparse
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from birthday_coincidence.calc.bonferroni import bound_ladder, partial_sum, prob_some_triple_day, tail_bound
from birthday_coincidence.calc.doubles_exact import (
    conditional_doubles,
    doubles_factorial_moment,
    expected_doubles,
    figure1_rows,
    hs_distribution,
    nonpoisson_ratios,
)
from birthday_coincidence.calc.exact_kernel import to_decimal
from birthday_coincidence.calc.mckinney import prob_no_r_repeat, threshold_n
from birthday_coincidence.calc.naive_baselines import (
    chatgpt_estimate,
    exact_no_pair,
    independence_report,
    naive_pair,
    regmi_triple,
    successive_day_values,
)
from birthday_coincidence.calc.poisson_model import poisson_summary
from birthday_coincidence.calc.simulator import figure1_simulated, sim_summary_to_dict, simulate
from birthday_coincidence.calc.triples_exact import DEFAULT_TOL, tau_entries
from birthday_coincidence.config import config
from birthday_coincidence.errors import CoincidenceError, InvalidParamsError
from birthday_coincidence.graph.audit_graph.claims import published_claim
from birthday_coincidence.graph.audit_graph.orchestrator import run_audit
from birthday_coincidence.output import FORMATS, Emission, Row, render, render_csv, write_output
from birthday_coincidence.schema.prob import Params, SimConfig, SimSummary, Statistic
from birthday_coincidence.utils.logger import get_logger
from birthday_coincidence.utils.oracle_util import get_oracle

logger = get_logger(name="cli")

COMMANDS = (
    "poisson", "naive", "bounds", "doubles", "mckinney", "taus",
    "simulate", "oracle", "figure1", "summary", "audit",
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_COMPUTATION = 3
EXIT_IO = 4


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _seed(text: str) -> int:
    value = _non_negative_int(text)
    if value >= 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _tolerance(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational or decimal tolerance, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


class CoincidenceArgumentParser(argparse.ArgumentParser):
    """도움말은 stdout, 사용법 오류는 stderr 로 보내되 run() 이 받은 스트림을 씁니다."""

    def __init__(self, *args, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self.stdout = stdout
        self.stderr = stderr

    def _print_message(self, message: str, file: Optional[TextIO] = None) -> None:
        if not message:
            return
        if file is None or file is sys.stdout:
            target = self.stdout or sys.stdout
        else:
            target = self.stderr or sys.stderr
        target.write(message)


def build_parser(stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive_int, default=config.DEFAULT_PEOPLE, help="number of people")
    common.add_argument("--days", type=_positive_int, default=config.DEFAULT_DAYS, help="number of days")
    common.add_argument("--kmax", type=_non_negative_int, default=None, help="number of terms or table rows")
    common.add_argument("--tol", type=_tolerance, default=None, help="bracket width tolerance, e.g. 1e-9")
    common.add_argument("--digits", type=_positive_int, default=config.COINCIDENCE_DIGITS)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--seed", type=_seed, default=config.COINCIDENCE_SEED)
    common.add_argument("--reps", type=_positive_int, default=None, help="Monte Carlo replicates")
    common.add_argument("--threads", type=_non_negative_int, default=None, help="0 = automatic")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")

    parser = CoincidenceArgumentParser(
        prog="birthday-coincidence",
        description="Exact probabilities of double, triple and r-fold birthday coincidences.",
        stdout=stdout,
        stderr=stderr,
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    for name in COMMANDS:
        sub = commands.add_parser(name, parents=[common], stdout=stdout, stderr=stderr)
        if name == "mckinney":
            sub.add_argument("--rmax", type=_positive_int, default=4, help="largest repeat count r")
        if name == "taus":
            sub.add_argument("--terms", type=_positive_int, default=None,
                             help="also stop each reduced ladder after this many terms (4 reproduces the printed table)")
        if name == "oracle":
            sub.add_argument("--statistic", choices=[s.value for s in Statistic], default="triples_count")
            sub.add_argument("--method", choices=["dp", "exhaustive"], default="dp")
    return parser


# 주석 도우미

def _is_reference_instance(p: Params) -> bool:
    return (p.n, p.d) == (config.DEFAULT_PEOPLE, config.DEFAULT_DAYS)


def _published(p: Params, claim_id: str) -> Optional[float]:
    return published_claim(claim_id).published if _is_reference_instance(p) else None


def _annotate(p: Params, claim_id: str, computed, digits: int) -> List[str]:
    """출판값이 허용오차를 벗어나면 published/computed 를 나란히 적은 메모"""
    if not _is_reference_instance(p):
        return []
    claim = published_claim(claim_id)
    if claim.within(float(computed)):
        return []
    line = f"{claim.label}: published: {claim.published:g} computed: {to_decimal(Fraction(computed), digits)}"
    if claim.remark:
        line += f" ({claim.remark})"
    return [line]


def _params(args: argparse.Namespace) -> Params:
    return Params(n=args.n, d=args.days)


def _sim_config(args: argparse.Namespace, reps: int) -> SimConfig:
    threads = args.threads if args.threads is not None else config.COINCIDENCE_THREADS
    return SimConfig(n=args.n, d=args.days, reps=reps, seed=args.seed, threads=threads)


def _echo(args: argparse.Namespace, **extra) -> Dict[str, object]:
    params: Dict[str, object] = {"n": args.n, "days": args.days}
    params.update({key: value for key, value in extra.items() if value is not None})
    return params


# 하위 명령

def cmd_poisson(args: argparse.Namespace) -> Emission:
    p = _params(args)
    s = poisson_summary(p)
    values = [
        ("mean_per_day", s.mean_per_day, None),
        ("pm2", s.pm2, "poisson_pm2"),
        ("pm3", s.pm3, "poisson_pm3"),
        ("expected_doubles", s.expected_doubles, "poisson_expected_doubles"),
        ("expected_triples", s.expected_triples, "poisson_expected_triples"),
        ("prob_at_least_one_triple_day", s.prob_at_least_one_triple_day, "poisson_triple_day"),
    ]
    rows = [
        {"quantity": name, "value": value, "published": _published(p, claim_id) if claim_id else None}
        for name, value, claim_id in values
    ]
    return Emission(command="poisson", params=_echo(args), columns=["quantity", "value", "published"], rows=rows)


def cmd_naive(args: argparse.Namespace) -> Emission:
    p = _params(args)
    digits = args.digits
    rows: List[Row] = []
    notes: List[str] = []

    def add(name: str, value, claim_id: Optional[str] = None):
        rows.append({"quantity": name, "value": value, "published": _published(p, claim_id) if claim_id else None})
        if claim_id:
            notes.extend(_annotate(p, claim_id, value, digits))

    if p.n >= 3:
        add("chatgpt_estimate", chatgpt_estimate(p.n, p.d), "chatgpt")
    if p.n >= 2:
        add("naive_pair", naive_pair(p.n, p.d), "naive_pair")
    add("exact_no_pair", exact_no_pair(p.n, p.d), "no_pair")
    if p.n >= 3:
        no_triple, at_least_one = regmi_triple(p.n, p.d)
        add("regmi_no_triple", no_triple, "regmi_no_triple")
        add("regmi_at_least_one", at_least_one, "regmi_at_least_one")
    for r, prefix in ((2, "b2"), (3, "b3")):
        if p.n >= 2 * r:
            first, second = successive_day_values(p.n, p.d, r)
            add(f"{prefix}_first", first.value, f"{prefix}_first")
            add(f"{prefix}_second", second.value, f"{prefix}_second")
            for label, day in (("first", first), ("second", second)):
                if day.exceeds_one:
                    notes.append(f"{prefix}_{label} exceeds 1 and is not a probability")
    if p.d >= 2:
        report = independence_report(p.d)
        add("pair_joint", report.pair_joint)
        add("pair_product", report.pair_product)
        add("triple_cycle_joint", report.triple_cycle_joint)
        add("triple_cycle_product", report.triple_cycle_product)
    return Emission(
        command="naive", params=_echo(args), columns=["quantity", "value", "published"], rows=rows, notes=notes,
    )


# 사다리 부분합 S_m 에 대응하는 출판 수치
_LADDER_CLAIMS = {1: "q1", 2: "v1", 3: "u2", 4: "v2", 5: "u3", 6: "v3"}


def cmd_bounds(args: argparse.Namespace) -> Emission:
    p = _params(args)
    k_max = args.kmax if args.kmax is not None else 6
    ladder = bound_ladder(p, k_max, args.tol)
    rows = []
    notes: List[str] = []
    for k, (term, partial) in enumerate(zip(ladder.terms, ladder.partial_sums), start=1):
        q_claim = f"q{k}" if k <= 6 else None
        sum_claim = _LADDER_CLAIMS.get(k)
        rows.append({
            "k": k,
            "q_k": term,
            "partial_sum": partial,
            "bound": "upper" if k % 2 == 1 else "lower",
            "published_q": _published(p, q_claim) if q_claim else None,
            "published_sum": _published(p, sum_claim) if sum_claim else None,
        })
        if q_claim:
            notes.extend(_annotate(p, q_claim, term, args.digits))
        if sum_claim and sum_claim != "q1":
            notes.extend(_annotate(p, sum_claim, partial, args.digits))

    lower, upper = ladder.bracket
    notes.insert(0, (
        f"bracket: [{to_decimal(lower, args.digits)}, {to_decimal(upper, args.digits)}] "
        f"width {to_decimal(ladder.width, 3)} converged={str(ladder.converged).lower()} "
        f"exhausted={str(ladder.exhausted).lower()} alternating from m={ladder.valid_from}"
    ))
    if not ladder.exhausted:
        notes.insert(1, f"next unused term q_{k_max + 1}: {to_decimal(tail_bound(p, k_max), args.digits)}")
    if k_max >= 6:
        notes.extend(_annotate(p, "triple_day", (lower + upper) / 2, args.digits))
    return Emission(
        command="bounds",
        params=_echo(args, kmax=k_max, tol=str(args.tol) if args.tol else None),
        columns=["k", "q_k", "partial_sum", "bound", "published_q", "published_sum"],
        rows=rows,
        notes=notes,
    )


def cmd_doubles(args: argparse.Namespace) -> Emission:
    p = _params(args)
    digits = args.digits
    table = hs_distribution(p)
    conditional, mean = conditional_doubles(p)
    ratios = dict(nonpoisson_ratios(p))
    rows = [
        {"k": k, "p_k": table.get(k), "conditional": conditional.get(k), "ratio": ratios.get(k)}
        for k in table.support
    ]

    notes: List[str] = []
    if p.n >= 2:
        ed = expected_doubles(p)
        notes.append(f"E[D] = {to_decimal(ed, digits)}")
        notes.extend(_annotate(p, "expected_doubles", ed, digits))
    if p.n >= 4:
        moment, ratio = doubles_factorial_moment(p)
        line = f"E[D(D-1)] = {to_decimal(moment, digits)}"
        if ratio is not None:
            line += f", E[D(D-1)]/E[D] = {to_decimal(ratio, digits)}"
        notes.append(line)
    notes.append(f"sum p_k = P(no day with 3 or more) = {to_decimal(table.total, digits)}")
    notes.append(f"sum k p_k = {to_decimal(table.mean(), digits)}")
    notes.append(f"E[D | no day with 3 or more] = {to_decimal(mean, digits)}")
    notes.extend(_annotate(p, "crowded_complement", 1 - table.total, digits))
    return Emission(
        command="doubles", params=_echo(args),
        columns=["k", "p_k", "conditional", "ratio"], rows=rows, notes=notes,
    )


_MCKINNEY_CLAIMS = {
    2: ("mckinney_r2_below", "mckinney_r2_at"),
    3: ("mckinney_r3_below", "mckinney_r3_at"),
    4: ("mckinney_r4_below", "mckinney_r4_at"),
}


def cmd_mckinney(args: argparse.Namespace) -> Emission:
    M = args.days
    show_published = M == config.DEFAULT_DAYS
    rows = []
    notes: List[str] = []
    for r in range(2, args.rmax + 1):
        n_star, below, at = threshold_n(M, r)
        claims = _MCKINNEY_CLAIMS.get(r) if show_published else None
        row = {"r": r, "n_below": n_star - 1, "p_below": below, "n_star": n_star, "p_at": at,
               "published_below": None, "published_at": None}
        if claims:
            below_claim, at_claim = (published_claim(claim_id) for claim_id in claims)
            row["published_below"] = below_claim.published
            row["published_at"] = at_claim.published
            for claim, value, n_value in ((below_claim, below, n_star - 1), (at_claim, at, n_star)):
                if claim.args.get("n") == n_value and not claim.within(value):
                    notes.append(
                        f"{claim.label}: published: {claim.published:g} "
                        f"computed: {to_decimal(Fraction(value), args.digits)}"
                        + (f" ({claim.remark})" if claim.remark else "")
                    )
        rows.append(row)
    return Emission(
        command="mckinney",
        params={"days": M, "rmax": args.rmax},
        columns=["r", "n_below", "p_below", "n_star", "p_at", "published_below", "published_at"],
        rows=rows,
        notes=notes,
    )


def cmd_taus(args: argparse.Namespace) -> Emission:
    p = _params(args)
    k_max = args.kmax if args.kmax is not None else 5
    tol = args.tol or DEFAULT_TOL
    entries = tau_entries(p, k_max, tol, args.terms)
    sim: Optional[SimSummary] = simulate(_sim_config(args, args.reps)) if args.reps else None

    rows = []
    for entry in entries:
        lower, upper = entry.value_bracket
        reduced = entry.tau0_bracket
        truncated = {}
        if args.terms:
            reduced_sum = partial_sum(p.n - 3 * entry.k, p.d - entry.k, args.terms) if entry.q_factor else None
            truncated = {
                "one_minus_tau0_truncated": reduced_sum if entry.k > 0 else None,
                "truncated": entry.truncated_value,
            }
        rows.append({
            "k": entry.k,
            "q_k": entry.q_factor if entry.k > 0 else None,
            "one_minus_tau0": 1 - (reduced[0] + reduced[1]) / 2 if entry.k > 0 else None,
            "calculation": entry.midpoint,
            "lower": lower,
            "upper": upper,
            "published": _published(p, f"tau{entry.k}") if entry.k <= 5 else None,
            "simulation": sim.t_law.get(entry.k) if sim else None,
            **truncated,
        })

    notes: List[str] = []
    if entries:
        notes.extend(_annotate(p, "tau0", entries[0].midpoint, args.digits))
    half_width = max((entry.half_width for entry in entries), default=Fraction(0))
    total = sum((entry.midpoint for entry in entries), Fraction(0))
    notes.append(f"largest bracket half-width: {to_decimal(half_width, 3)}")
    notes.append(
        f"sum of midpoints: {to_decimal(total, args.digits)}, "
        f"next term bound q_{k_max + 1}: {to_decimal(tail_bound(p, k_max), 3)}"
    )
    columns = ["k", "q_k", "one_minus_tau0", "calculation", "lower", "upper", "published", "simulation"]
    if args.terms:
        gap = max(abs(entry.truncated_value - entry.midpoint) for entry in entries)
        notes.append(
            f"truncated: each reduced ladder stopped after {args.terms} terms; "
            f"largest gap to the calculation column {to_decimal(gap, 3)} comes from truncation"
        )
        columns += ["one_minus_tau0_truncated", "truncated"]
    if sim:
        notes.append(f"simulation: reps={sim.reps} seed={sim.seed}")
    return Emission(
        command="taus",
        params=_echo(args, kmax=k_max, tol=str(tol), reps=args.reps, terms=args.terms),
        columns=columns,
        rows=rows,
        notes=notes,
        seed=sim.seed if sim else None,
    )


def cmd_simulate(args: argparse.Namespace) -> Emission:
    reps = args.reps or config.COINCIDENCE_REPS
    summary = simulate(_sim_config(args, reps))
    support = sorted(
        set(summary.t_law.entries) | set(summary.d_law.entries) | set(summary.d_law_given_t0.entries)
    )
    rows = [
        {
            "k": k,
            "t_law": summary.t_law.get(k),
            "d_law": summary.d_law.get(k),
            "d_law_given_t0": summary.d_law_given_t0.get(k),
        }
        for k in support
    ]
    notes = [
        f"mean_doubles = {summary.mean_doubles:.6g}",
        f"reps = {summary.reps}, seed = {summary.seed}",
        f"t_law 3-sigma bound = {to_decimal(summary.t_law.error_bound, 3)}",
    ]
    return Emission(
        command="simulate",
        params=_echo(args, reps=reps),
        columns=["k", "t_law", "d_law", "d_law_given_t0"],
        rows=rows,
        notes=notes,
        seed=summary.seed,
        summary=sim_summary_to_dict(summary),
    )


def cmd_oracle(args: argparse.Namespace) -> Emission:
    p = _params(args)
    oracle = get_oracle(args.method)
    result = oracle.law(p, Statistic(args.statistic))
    rows = [{"k": k, "probability": result.law.get(k)} for k in result.law.support]
    notes = [
        f"{args.method} oracle, {result.statistic.value}",
        f"mean = {to_decimal(result.law.mean(), args.digits)}",
    ]
    if result.statistic == Statistic.TRIPLES_COUNT:
        notes.extend(_annotate(p, "tau0", result.law.get(0), args.digits))
    return Emission(
        command="oracle",
        params=_echo(args, statistic=args.statistic, method=args.method),
        columns=["k", "probability"],
        rows=rows,
        notes=notes,
    )


def figure1_table(p: Params, sim: SimSummary) -> List[Row]:
    """
    k, 조건부 정확 분포, 같은 평균의 Poisson, 무조건 시뮬레이션 분포 (지지 집합의 합집합, k 오름차순)
    """
    exact = {k: (conditional, reference) for k, conditional, reference in figure1_rows(p)}
    cfg = SimConfig(n=sim.n, d=sim.d, reps=sim.reps, seed=sim.seed)
    simulated = {k: d_law for k, d_law, _ in figure1_simulated(cfg, sim)}
    rows = []
    for k in sorted(set(exact) | set(simulated)):
        # 정확한 분포의 지지 밖이면 조건부 확률은 0, Poisson 열은 비움
        conditional, reference = exact.get(k, (0.0, None))
        rows.append({
            "k": k,
            "conditional_exact": conditional,
            "poisson": reference,
            "simulated": simulated.get(k, Fraction(0)),
        })
    return rows


FIGURE1_COLUMNS = ["k", "conditional_exact", "poisson", "simulated"]


def emit_figure1(p: Params, sim: SimSummary, path: Optional[str], digits: int = 6,
                 stdout: Optional[TextIO] = None) -> None:
    """
    그림 데이터를 CSV (k,conditional_exact,poisson,simulated) 로 씁니다.

    Args:
        p: 인스턴스
        sim: 같은 (n, d) 로 돌린 시뮬레이션 결과
        path: 출력 파일 (None 이면 stdout)
        digits: 유효숫자 자릿수

    Raises:
        InvalidParamsError: sim 이 다른 인스턴스에서 나온 경우
        OSError: 파일 쓰기 실패
    """
    if (sim.n, sim.d) != (p.n, p.d):
        raise InvalidParamsError(f"simulation was run for n={sim.n}, d={sim.d}, not n={p.n}, d={p.d}")
    emission = Emission(
        command="figure1",
        params={"n": p.n, "days": p.d},
        columns=FIGURE1_COLUMNS,
        rows=figure1_table(p, sim),
    )
    write_output(render_csv(emission, digits), path, stdout or sys.stdout)


def cmd_figure1(args: argparse.Namespace) -> Emission:
    p = _params(args)
    reps = args.reps or config.COINCIDENCE_REPS
    sim = simulate(_sim_config(args, reps))
    _, mean = conditional_doubles(p)
    return Emission(
        command="figure1",
        params=_echo(args, reps=reps),
        columns=FIGURE1_COLUMNS,
        rows=figure1_table(p, sim),
        notes=[
            f"poisson mean = conditional mean = {to_decimal(mean, args.digits)}",
            f"simulated mean = {sim.mean_doubles:.6g}, reps = {sim.reps}, seed = {sim.seed}",
        ],
        seed=sim.seed,
    )


def cmd_summary(args: argparse.Namespace) -> Emission:
    p = _params(args)
    digits = args.digits
    tol = args.tol or DEFAULT_TOL
    lower, upper = prob_some_triple_day(p, tol)
    rows: List[Row] = []
    notes: List[str] = []

    def add(name: str, value, claim_id: Optional[str] = None):
        rows.append({"quantity": name, "value": value, "published": _published(p, claim_id) if claim_id else None})
        if claim_id:
            notes.extend(_annotate(p, claim_id, value, digits))

    add("poisson_exactly_three_some_day", poisson_summary(p).prob_at_least_one_triple_day, "poisson_triple_day")
    if p.n >= 3:
        add("chatgpt_at_least_three", chatgpt_estimate(p.n, p.d), "chatgpt")
        add("regmi_at_least_one_triple", regmi_triple(p.n, p.d)[1], "regmi_at_least_one")
    add("exact_exactly_three_some_day_lower", lower)
    add("exact_exactly_three_some_day_upper", upper)
    add("exact_exactly_three_some_day", (lower + upper) / 2, "triple_day")
    add("at_least_two_share", 1 - exact_no_pair(p.n, p.d))
    add("at_least_three_share", 1 - prob_no_r_repeat(p.n, p.d, 3), "at_least_three")
    return Emission(
        command="summary", params=_echo(args, tol=str(tol)),
        columns=["quantity", "value", "published"], rows=rows, notes=notes,
    )


def cmd_audit(args: argparse.Namespace) -> Emission:
    report = run_audit()
    summary = report["summary"]
    notes = [
        f"{summary['total']} claims: {summary['agrees']} agree, "
        f"{summary['adjudicated']} adjudicated, {summary['discrepancy']} unresolved"
    ]
    notes.extend(report.get("notes", []))
    return Emission(
        command="audit",
        params={},
        columns=["claim_id", "label", "published", "computed", "independent", "method", "status", "note"],
        rows=report["rows"],
        notes=notes,
    )


HANDLERS: Dict[str, Callable[[argparse.Namespace], Emission]] = {
    "poisson": cmd_poisson,
    "naive": cmd_naive,
    "bounds": cmd_bounds,
    "doubles": cmd_doubles,
    "mckinney": cmd_mckinney,
    "taus": cmd_taus,
    "simulate": cmd_simulate,
    "oracle": cmd_oracle,
    "figure1": cmd_figure1,
    "summary": cmd_summary,
    "audit": cmd_audit,
}


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    명령을 실행하고 종료 코드를 반환합니다.

    Args:
        argv: 인자 목록 (None 이면 sys.argv[1:])
        stdout: 결과 출력 스트림
        stderr: 진단 메시지 스트림

    Returns:
        0 성공, 2 사용법 오류, 3 계산 가드 오류, 4 출력 I/O 오류
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    # 하위 명령이 없으면 summary
    if not argv or (argv[0].startswith("-") and argv[0] not in ("-h", "--help")):
        argv = ["summary"] + argv

    parser = build_parser(stdout, stderr)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    logger.log_dict(vars(args), level=logger.DEBUG, prefix=f"{args.command}.")
    try:
        if args.command == "figure1" and args.format == "csv":
            sim = simulate(_sim_config(args, args.reps or config.COINCIDENCE_REPS))
            emit_figure1(_params(args), sim, args.out, args.digits, stdout)
            return EXIT_OK
        emission = HANDLERS[args.command](args)
        text = render(emission, args.format, args.digits)
        write_output(text, args.out, stdout)
    except CoincidenceError as exc:
        logger.warning(f"{args.command} failed: {exc}")
        stderr.write(f"error: {exc}\n")
        return EXIT_COMPUTATION
    except OSError as exc:
        logger.error(f"{args.command} output failed: {exc}")
        stderr.write(f"error: cannot write output: {exc}\n")
        return EXIT_IO
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
