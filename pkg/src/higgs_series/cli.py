"""Command line entry point.

    higgs-series compute -g 1 -r 2 --specialize a
    higgs-series verify --suite denominators --max-size 5

Exit codes: 0 success, 1 bad flags, 2 a coefficient that must be a Laurent
polynomial is not, 3 a verification check failed.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from . import ENGINE_VERSION, identities, mozgovoy, schiffmann
from .algebra import poly_to_json, poly_to_text
from .cache import CacheKey, SeriesCache, resolve_cache_dir
from .mozgovoy import HiggsContext, PolynomialityFailure
from .parallel import pmap
from .partitions import Partition, compositions
from .plethystic import TSeries
from .ratfunc import FactoredRat, NotPolynomial
from .records import VerificationRecord, VerificationReport

log = logging.getLogger("higgs_series")

MAX_RANK = 6
EXIT_OK, EXIT_FLAGS, EXIT_NOT_POLY, EXIT_CHECK = 0, 1, 2, 3

PIPELINES = ("mozgovoy", "schiffmann", "both")
SPECIALIZATIONS = ("none", "a", "e", "poincare")
SUITES = ("identities", "main", "denominators", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FLAGS, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    genus: int | None = None
    rank: int | None = None
    pipeline: str = "mozgovoy"
    specialization: str = "none"
    suite: str | None = None
    max_size: int | None = None
    output: str = "text"
    cache_dir: str | None = None
    use_cache: bool = True
    threads: int = 1
    timing: bool = False

    def validate(self) -> None:
        if self.genus is not None and self.genus < 0:
            raise UsageError("genus must be >= 0")
        if self.rank is not None and not 1 <= self.rank <= MAX_RANK:
            raise UsageError(f"rank must lie in 1..{MAX_RANK}")
        if self.threads < 1:
            raise UsageError("--threads must be >= 1")
        if self.max_size is not None and self.max_size < 0:
            raise UsageError("--max-size must be >= 0")
        if self.command == "compute" and (self.genus is None or self.rank is None):
            raise UsageError("compute needs -g and -r")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="higgs-series", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("-g", "--genus", type=int)
        sp.add_argument("-r", "--rank", type=int)
        sp.add_argument("--output", choices=("json", "text"), default="text")
        sp.add_argument("--cache-dir", help="overridden by $HIGGS_CACHE_DIR")
        sp.add_argument("--no-cache", action="store_true")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--degree", type=int, help="accepted and ignored: the counts do not depend on d")

    c = sub.add_parser("compute", help="compute H_{g,r} or one of its specializations")
    common(c)
    c.add_argument("--pipeline", choices=PIPELINES, default="mozgovoy")
    c.add_argument("--specialize", choices=SPECIALIZATIONS, default="none")

    v = sub.add_parser("verify", help="run a verification suite")
    common(v)
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--max-size", type=int)
    v.add_argument("--timing", action="store_true", help="include per-record timings (breaks byte-identical output)")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        genus=ns.genus,
        rank=ns.rank,
        pipeline=getattr(ns, "pipeline", "mozgovoy"),
        specialization=getattr(ns, "specialize", "none"),
        suite=getattr(ns, "suite", None),
        max_size=getattr(ns, "max_size", None),
        output=ns.output,
        cache_dir=ns.cache_dir,
        use_cache=not ns.no_cache,
        threads=ns.threads,
        timing=getattr(ns, "timing", False),
    )


# -- series with caching ----------------------------------------------------

class SeriesSource:
    """H and H' series, memoized in-process and cached on disk."""

    def __init__(self, cfg: RunConfig):
        self.threads = cfg.threads
        self.cache = SeriesCache(resolve_cache_dir(cfg.cache_dir)) if cfg.use_cache else None
        self._mem: dict[CacheKey, TSeries] = {}

    def get(self, pipeline: str, ctx: HiggsContext) -> TSeries:
        key = CacheKey(pipeline, ctx.g, ctx.R)
        if key in self._mem:
            return self._mem[key]
        series = self.cache.get(key) if self.cache else None
        if series is None:
            build = mozgovoy.h_series if pipeline == "mozgovoy" else schiffmann.h_prime_series
            series = build(ctx, self.threads)
            if self.cache:
                try:
                    self.cache.put(key, series)
                except OSError as exc:
                    log.warning("could not write cache entry: %s", exc)
        self._mem[key] = series
        return series


# -- compute ---------------------------------------------------------------

def _specialize_value(value: FactoredRat, pipeline: str, spec: str, g: int, r: int):
    """Return (kind, value) where kind is 'poly' or 'ratfunc'."""
    if spec == "none":
        if pipeline == "mozgovoy":
            try:
                return "poly", value.to_poly()
            except NotPolynomial as exc:
                raise PolynomialityFailure(exc.factors) from None
        return "ratfunc", value.reduced()
    try:
        a = value.specialize({"z": 1}).to_poly()
    except NotPolynomial as exc:
        raise PolynomialityFailure(exc.factors) from None
    if spec == "a":
        return "poly", a
    if spec == "e":
        return "poly", mozgovoy.e_from_a(a, g, r)
    return "poly", mozgovoy.poincare_from_a(a, g, r)


def run_compute(cfg: RunConfig, out) -> int:
    g, r = cfg.genus, cfg.rank
    ctx = HiggsContext(g, r)
    src = SeriesSource(cfg)
    names = ("mozgovoy", "schiffmann") if cfg.pipeline == "both" else (cfg.pipeline,)
    results = []
    for name in names:
        coeff = src.get(name, ctx)[r]
        try:
            kind, value = _specialize_value(coeff, name, cfg.specialization, g, r)
        except PolynomialityFailure as exc:
            print(f"error: {name} coefficient (g={g}, r={r}) is not a Laurent polynomial: {exc}", file=sys.stderr)
            return EXIT_NOT_POLY
        results.append((name, kind, value))
    agree = None
    if len(results) == 2 and cfg.specialization != "none":
        agree = results[0][2] == results[1][2]
    if cfg.output == "json":
        doc = {
            "engine_version": ENGINE_VERSION,
            "genus": g,
            "rank": r,
            "specialization": cfg.specialization,
            "extended_range": ctx.extended_range,
            "results": [_result_json(n, k, v) for n, k, v in results],
        }
        if agree is not None:
            doc["agree"] = agree
        out.write(json.dumps(doc, indent=1) + "\n")
    else:
        label = {"none": "H", "a": "A", "e": "E", "poincare": "P"}[cfg.specialization]
        for name, kind, value in results:
            out.write(f"# {label}_{{{g},{r}}} via {name}\n")
            out.write((poly_to_text(value) if kind == "poly" else repr(value)) + "\n")
        if ctx.extended_range:
            out.write("# note: g = 0 is extended range\n")
        if agree is not None:
            out.write(f"# pipelines agree: {agree}\n")
    return EXIT_CHECK if agree is False else EXIT_OK


def _result_json(name: str, kind: str, value) -> dict:
    if kind == "poly":
        return {"pipeline": name, "kind": kind, "variables": list(value.varset.names), "value": poly_to_json(value)}
    return {"pipeline": name, "kind": kind, "variables": list(value.varset.names), "value": value.to_json()}


# -- verify ----------------------------------------------------------------

Job = tuple[str, tuple]


def _job_denominator(mu, g):
    return [schiffmann.denominator_bound_check(Partition(mu), HiggsContext(g))]


def _job_progression(blocks, g):
    return [schiffmann.progression_bound_check(blocks, HiggsContext(g))]


def _job_n_omega(mu, g):
    return [schiffmann.check_n_omega_polynomial(Partition(mu), HiggsContext(g))]


def _job_j(mu, g):
    return [identities.check_j_factorization(Partition(mu), HiggsContext(g))]


def _job_l_n(n):
    return [schiffmann.l_n_identity(n)]


def _job_regularity(n, g):
    return [schiffmann.regularity_check(n, HiggsContext(g))]


def _job_identities(max_pair, max_sumz, max_ratio, max_armleg):
    return identities.identity_records(max_pair, max_sumz, max_ratio, max_armleg)


JOBS: dict[str, Callable[..., list[VerificationRecord]]] = {
    "denominator": _job_denominator,
    "n_omega": _job_n_omega,
    "progression": _job_progression,
    "j": _job_j,
    "l_n": _job_l_n,
    "regularity": _job_regularity,
    "identities": _job_identities,
}


def _run_job(job: Job) -> list[VerificationRecord]:
    name, args = job
    t0 = time.perf_counter()
    recs = JOBS[name](*args)
    dt = (time.perf_counter() - t0) / max(len(recs), 1)
    for rec in recs:
        rec.seconds = dt
    return recs


def _genera(cfg: RunConfig) -> list[int]:
    return [cfg.genus] if cfg.genus is not None else [0, 1, 2]


def identity_jobs(cfg: RunConfig) -> list[Job]:
    n = cfg.max_size
    sizes = (6, 8, 6, 5) if n is None else (n, n, n, n)
    jobs: list[Job] = [("identities", sizes)]
    jmax = 5 if n is None else n
    jobs += [("j", (tuple(mu), g)) for g in _genera(cfg) for mu in identities.partitions_upto(jmax)]
    return jobs


def denominator_jobs(cfg: RunConfig) -> list[Job]:
    n = 5 if cfg.max_size is None else cfg.max_size
    jobs: list[Job] = []
    for g in _genera(cfg):
        for mu in identities.partitions_upto(n):
            jobs.append(("denominator", (tuple(mu), g)))
            jobs.append(("n_omega", (tuple(mu), g)))
    for g in _genera(cfg):
        jobs += [("progression", (b, g)) for k in range(1, 4) for b in compositions(k)]
    jobs += [("l_n", (k,)) for k in range(1, 5)]
    for g in _genera(cfg):
        top = 2 if g >= 2 else 3
        jobs += [("regularity", (k, g)) for k in range(0, top + 1)]
    return jobs


def main_instances(cfg: RunConfig) -> list[tuple[int, int]]:
    if cfg.genus is not None:
        return [(cfg.genus, cfg.rank or 3)]
    return [(0, cfg.rank or 3), (1, cfg.rank or 3), (2, cfg.rank or 2)]


def main_records(cfg: RunConfig, src: SeriesSource) -> list[VerificationRecord]:
    out: list[VerificationRecord] = []
    for g, R in main_instances(cfg):
        ctx = HiggsContext(g, R)
        t0 = time.perf_counter()
        h = src.get("mozgovoy", ctx)
        hp = src.get("schiffmann", ctx)
        series_time = time.perf_counter() - t0
        recs = mozgovoy.check_rank1(g)
        for r in range(1, R + 1):
            recs.append(mozgovoy.check_polynomial(ctx, r, h))
            recs.extend(mozgovoy.check_symmetry(ctx, r, h))
            recs.append(schiffmann.check_laurent_in_z(ctx, r, hp))
            recs.append(schiffmann.compare_at_z1(ctx, r, h, hp))
        dt = (time.perf_counter() - t0) / len(recs)
        for rec in recs:
            rec.seconds = dt
        if ctx.extended_range:
            for rec in recs:
                rec.instance.setdefault("extended_range", True)
        log.debug("series for g=%d R=%d took %.2fs", g, R, series_time)
        out += recs
    return out


def run_verify(cfg: RunConfig, out) -> int:
    suite = cfg.suite or "all"
    records: list[VerificationRecord] = []
    if suite in ("identities", "all"):
        records += _flatten(pmap(_run_job, identity_jobs(cfg), cfg.threads))
    if suite in ("main", "all"):
        records += main_records(cfg, SeriesSource(cfg))
    if suite in ("denominators", "all"):
        records += _flatten(pmap(_run_job, denominator_jobs(cfg), cfg.threads))
    report = VerificationReport(records, ENGINE_VERSION)
    if cfg.output == "json":
        out.write(json.dumps(report.to_json(timing=cfg.timing), indent=1, sort_keys=True) + "\n")
    else:
        for rec in records:
            line = rec.line()
            if cfg.timing and rec.seconds is not None:
                line += f"  [{rec.seconds:.3f}s]"
            out.write(line + "\n")
        out.write(f"{report.n_pass} passed, {report.n_fail} failed\n")
    return EXIT_OK if report.ok else EXIT_CHECK


def _flatten(chunks: Sequence[list]) -> list:
    return [x for c in chunks for x in c]


def main(argv: Sequence[str] | None = None, out=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(ns)
    try:
        cfg.validate()
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"higgs-series: error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    if ns.degree is not None:
        log.warning("--degree %d ignored: the counts do not depend on the degree", ns.degree)
    if cfg.command == "compute":
        return run_compute(cfg, out)
    return run_verify(cfg, out)
