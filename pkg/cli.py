# -*- coding: utf-8 -*-
"""
Komut Satırı Arayüzü
Alt komutlar: sample, cluster-fraction, distance-scaling, dense-density,
complete-graph, block-renorm, hierarchy-audit, diameter-scaling, theory.

Çıkış kodları: 0 başarı, 1 geçersiz girdi (bilinmeyen bayrak dahil), 2 kaynak hatası.
"""

import argparse

from imports import *
from errors import LabError, InvalidInputError, ResourceLimitError, InvariantViolation, DivergenceError
from settings import load_settings
from locales import tr
from lattice import BoxSpec
from bondspace import make_model, sample_graph, write_edge_list
from theory import CompleteGraphParams, delta as delta_exponent
from lab import ExperimentConfig, Laboratory
from reports import write_report

EXPERIMENTS = (
    "cluster-fraction", "distance-scaling", "dense-density", "block-renorm",
    "hierarchy-audit", "diameter-scaling",
)


class LabArgumentParser(argparse.ArgumentParser):
    """Kullanım hatalarında 2 yerine 1 ile çıkar."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ============================================================================
# AYRIŞTIRICI
# ============================================================================
def _common_parser():
    common = LabArgumentParser(add_help=False)
    model = common.add_argument_group("model")
    model.add_argument("--dim", type=int, default=1, help="lattice dimension d")
    model.add_argument("--s", type=float, default=1.5, help="decay exponent s")
    model.add_argument("--beta", type=float, default=1.0, help="profile amplitude beta")
    model.add_argument("--nn-prob", type=float, default=0.0, help="nearest-neighbour overlay probability")
    model.add_argument("--profile", choices=["shifted-power", "pure-power", "custom-table"], default="shifted-power")
    model.add_argument("--q-table", default=None, help="JSON file mapping |z| to q (custom-table profile)")
    model.add_argument("--norm", choices=["euclidean", "sup", "taxicab"], default="euclidean")

    run = common.add_argument_group("experiment")
    run.add_argument("--side", type=int, default=64, help="box side for single-box commands")
    run.add_argument("--sides", type=int, nargs="+", default=None, help="box sides (default: --side)")
    run.add_argument("--trials", type=int, default=10)
    run.add_argument("--seed", type=int, default=None, help="master seed (default: LRPLAB_SEED)")
    run.add_argument("--rho", type=float, default=0.3)
    run.add_argument("--ell", type=int, default=5)
    run.add_argument("--gamma", type=float, default=0.5)
    run.add_argument("--sprime", type=float, default=None)
    run.add_argument("--delta", type=float, default=0.5, help="block occupancy threshold")
    run.add_argument("--K", type=int, default=None, help="block side")
    run.add_argument("--betas", type=float, nargs="+", default=None, help="coupled beta sweep for block-renorm")
    run.add_argument("--distances", type=int, nargs="+", default=None)
    run.add_argument("--box-factor", type=float, default=4.0, help="pair box side / distance")
    run.add_argument("--theta", type=float, default=None, help="growth exponent for the s = 2d reference")

    graph = common.add_argument_group("complete graph")
    graph.add_argument("--n", type=int, default=100)
    graph.add_argument("--r", type=float, default=0.9)
    graph.add_argument("--p", type=float, default=0.3)
    graph.add_argument("--rprime", type=float, default=0.7)
    graph.add_argument("--pprime", type=float, default=0.15)

    out = common.add_argument_group("output")
    out.add_argument("--out", default=None, help="output file (default: stdout)")
    out.add_argument("--format", choices=["json", "csv", "xlsx", "pdf"], default="json")
    out.add_argument("--threads", type=int, default=None, help="worker pool width (default: LRPLAB_THREADS)")
    out.add_argument("--memory-budget", type=float, default=None, help="sampler memory budget in MB")
    out.add_argument("--lang", choices=["tr", "en"], default=None)
    out.add_argument("--timings", action="store_true", help="include wall-clock timings in reports")
    out.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser():
    common = _common_parser()
    parser = LabArgumentParser(prog="lrplab", description=tr("cli_description", "en"))
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("sample", parents=[common], help="sample one box and write its edge list")
    for name in EXPERIMENTS:
        sub.add_parser(name, parents=[common])
    sub.add_parser("complete-graph", parents=[common], help="complete-graph tail bound check")
    sub.add_parser("theory", parents=[common], help="print Delta, Chernoff rates and scale sequences")
    return parser


# ============================================================================
# KOMUTLAR
# ============================================================================
def _model(args):
    table = None
    if args.profile == "custom-table":
        if not args.q_table:
            raise InvalidInputError("custom-table profile needs --q-table")
        with open(args.q_table, encoding="utf-8") as f:
            table = {float(k): float(v) for k, v in json.load(f).items()}
    return make_model(d=args.dim, s=args.s, beta=args.beta, nn_prob=args.nn_prob,
                      profile=args.profile, norm=args.norm, table=table)


def _config(args, settings):
    return ExperimentConfig(
        model=_model(args),
        sides=tuple(args.sides or [args.side]),
        trials=args.trials,
        seed=settings['seed'],
        rho=args.rho,
        delta=args.delta,
        ell=args.ell,
        gamma=args.gamma,
        sprime=args.sprime,
        out=args.out,
        fmt=args.format,
        workers=settings['threads'],
        box_factor=args.box_factor,
        K=args.K,
        distances=tuple(args.distances or ()),
        memory_mb=settings['memory_mb'],
        betas=tuple(args.betas or ()),
    )


def _emit(report, args, settings):
    if args.out is None:
        sys.stdout.write(report.to_json(args.timings))
        return 0
    if not write_report(report, args.out, args.format, settings['lang'], args.timings):
        print(f"❌ {tr('cli_export_failed', settings['lang'])}: {args.out}", file=sys.stderr)
        return 1
    logging.info(f"✅ {tr('cli_report_written', settings['lang'])}: {args.out}")
    return 0


def _cmd_sample(args, settings):
    model = _model(args)
    box = BoxSpec.cornered((0,) * args.dim, args.side)
    graph = sample_graph(model, box, settings['seed'], workers=settings['threads'],
                         memory_mb=settings['memory_mb'])
    if args.out is None:
        sys.stdout.write(write_edge_list(graph))
    else:
        write_edge_list(graph, args.out)
        logging.info(f"✅ {tr('cli_edges_written', settings['lang'])}: {args.out}")
    return 0


def _cmd_theory(args, settings, lab):
    try:
        value = delta_exponent(args.s, args.dim)
    except DivergenceError:
        value = math.inf
    print(f"{tr('cli_delta', settings['lang'])} = {value:.5f}")
    report = lab.theory_report(args.s, args.dim, sprime=args.sprime)
    for name, records in sorted(report.tables.items()):
        print(f"\n[{name}]")
        print(pd.DataFrame(records).to_string(index=False))
    if args.out is not None:
        return _emit(report, args, settings)
    return 0


def _run(args, settings):
    lab = Laboratory(settings)
    command = args.command
    if args.out is None and args.format != "json" and command != "sample":
        raise InvalidInputError(f"--format {args.format} needs --out; only json is written to stdout")
    if command == "sample":
        return _cmd_sample(args, settings)
    if command == "theory":
        return _cmd_theory(args, settings, lab)
    if command == "complete-graph":
        params = CompleteGraphParams(args.n, args.r, args.p, args.rprime, args.pprime)
        report = lab.run_complete_graph_check(params, args.trials, settings['seed'], settings['threads'])
        return _emit(report, args, settings)

    config = _config(args, settings)
    if command == "cluster-fraction":
        report = lab.run_cluster_fraction(config)
    elif command == "distance-scaling":
        estimate = lab.run_distance_scaling(config)
        print(f"{tr('cli_slope', settings['lang'])} = {estimate.slope:.5f}", file=sys.stderr)
        report = estimate.report
    elif command == "dense-density":
        report = lab.run_dense_density(config)
    elif command == "block-renorm":
        report = lab.run_block_renorm(config)
    elif command == "hierarchy-audit":
        report = lab.run_hierarchy_audit(config)
    else:
        report = lab.run_diameter_scaling(config, args.theta)
    return _emit(report, args, settings)


def cli_main(argv=None):
    """
    Komut satırı giriş noktası.

    Args:
        argv (list, optional): Argümanlar (varsayılan sys.argv[1:])

    Returns:
        int: Süreç çıkış kodu
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO)

    settings = load_settings()
    if args.seed is not None:
        settings['seed'] = args.seed
    if args.threads is not None:
        settings['threads'] = max(1, args.threads)
    if args.memory_budget is not None:
        settings['memory_mb'] = args.memory_budget
    if args.lang is not None:
        settings['lang'] = args.lang
    lang = settings['lang']

    try:
        return _run(args, settings)
    except ResourceLimitError as e:
        print(f"❌ {tr('cli_resource_error', lang)}: {e}", file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print(f"❌ {tr('cli_invariant', lang)}: {e}", file=sys.stderr)
        return 1
    except (InvalidInputError, LabError, OSError, json.JSONDecodeError) as e:
        print(f"❌ {tr('cli_invalid_input', lang)}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(cli_main())
