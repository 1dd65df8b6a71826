"""Suite runner: generate ensembles, evaluate chains, summarise, emit."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import bounds
from .bounds import CHAINS, DEFAULT_TOL, OperatorData
from .ensembles import KINDS, Ensemble, gen_matrix, gen_partner
from .errors import ConfigError
from .functions import power
from .hh import DEFAULT_NODES

__all__ = ["SuiteConfig", "SuiteReport", "MatrixResult", "run_suite",
           "sharpness_experiment", "evaluate_matrix", "default_config",
           "DEFAULT_R", "DEFAULT_T", "DEFAULT_P", "ALL_DIMS"]

DEFAULT_R = (1.0, 1.5, 2.0)
DEFAULT_T = (0.0, 0.25, 0.5, 1.0)
DEFAULT_P = (2.0, 3.0, 4.0)
ALL_DIMS = (2, 3, 5, 8)
# random restarts per supremum estimate; the boundary warm starts carry the search
SUITE_RESTARTS = 2


@dataclass
class SuiteConfig:
    ensembles: list
    chains: list = field(default_factory=lambda: list(CHAINS))
    tol: float = DEFAULT_TOL
    nodes: int = DEFAULT_NODES
    r_values: list = field(default_factory=lambda: list(DEFAULT_R))
    t_values: list = field(default_factory=lambda: list(DEFAULT_T))
    p_values: list = field(default_factory=lambda: list(DEFAULT_P))
    restarts: int = SUITE_RESTARTS
    output: Optional[str] = None
    format: str = "json"

    def validate(self):
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.nodes < 2:
            raise ConfigError("nodes must be >= 2")
        if self.restarts < 1:
            raise ConfigError("restarts must be >= 1")
        unknown = [c for c in self.chains if c not in CHAINS]
        if unknown:
            raise ConfigError(f"unknown chains {unknown}; known: {sorted(CHAINS)}")
        for name, vals, lo, hi in (("r", self.r_values, 1, 2), ("t", self.t_values, 0, 1),
                                   ("p", self.p_values, 2, 4)):
            bad = [v for v in vals if not lo <= v <= hi]
            if bad:
                raise ConfigError(f"{name} values {bad} outside [{lo}, {hi}]")
        if self.format not in ("json", "csv"):
            raise ConfigError(f"unknown format {self.format!r}")
        for e in self.ensembles:
            if not isinstance(e, Ensemble):
                raise ConfigError(f"not an Ensemble: {e!r}")
        return self

    def to_dict(self):
        d = asdict(self)
        d["ensembles"] = [asdict(e) for e in self.ensembles]
        return d

    @classmethod
    def from_dict(cls, obj):
        obj = dict(obj)
        try:
            obj["ensembles"] = [Ensemble(**e) for e in obj.get("ensembles", [])]
            return cls(**obj).validate()
        except TypeError as exc:
            raise ConfigError(f"bad config: {exc}") from exc


def default_config(count=500, dims=ALL_DIMS, seed=0, **kw):
    """Every ensemble kind at every dimension, all chains, default grids."""
    ens = [Ensemble(k, n, count, seed) for k in KINDS for n in dims]
    return SuiteConfig(ensembles=ens, **kw).validate()


@dataclass
class MatrixResult:
    kind: str
    dim: int
    index: int
    reports: list


@dataclass
class SuiteReport:
    config: dict
    results: list
    summary: dict
    runtime: float = 0.0

    @property
    def violations(self):
        return self.summary["violations"]

    def to_dict(self):
        """Report without the runtime, so equal configs serialise identically."""
        return {
            "config": self.config,
            "summary": self.summary,
            "results": [
                {"ensemble": m.kind, "dim": m.dim, "index": m.index,
                 "reports": [r.to_dict() for r in m.reports]}
                for m in self.results
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), allow_nan=False, separators=(",", ":"))

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["ensemble", "dim", "index", "chain_id", "params", "left_label",
                    "right_label", "left_value", "right_value", "gap", "satisfied"])
        for m in self.results:
            for rep in m.reports:
                params = ";".join(f"{k}={v}" for k, v in rep.params.items())
                for a in rep.assertions:
                    (ll, lv), (rl, rv) = rep.terms[a.left], rep.terms[a.right]
                    w.writerow([m.kind, m.dim, m.index, rep.chain_id, params, ll, rl,
                                repr(lv), repr(rv), repr(a.gap), int(a.satisfied)])
        return buf.getvalue()

    def write(self, path, fmt="json"):
        text = self.to_json() + "\n" if fmt == "json" else self.to_csv()
        with open(path, "w") as fh:
            fh.write(text)


def evaluate_matrix(A, partner, cfg: SuiteConfig):
    """All requested chains, over the parameter grids, for one matrix."""
    d = OperatorData(A)
    dp = OperatorData(partner)
    tol, nodes = cfg.tol, cfg.nodes
    fns = [power(r) for r in cfg.r_values]
    out = []
    for cid in cfg.chains:
        if cid in ("kittaneh", "abs_sum", "cartesian_parts", "additive_refinement"):
            out.append(CHAINS[cid](d, tol=tol))
        elif cid == "squared_refinement":
            out.append(bounds.squared_refinement_chain(d, nodes, tol))
        elif cid in ("power_mean", "cartesian_power"):
            out.extend(CHAINS[cid](d, r, nodes, tol) for r in cfg.r_values)
        elif cid == "prop_mean":
            out.extend(bounds.prop_mean_chain(d, dp, f, nodes, tol) for f in fns)
        elif cid == "convex_sup":
            out.extend(bounds.convex_sup_chain(d, dp, f, cfg.restarts, nodes, tol)
                       for f in fns)
        elif cid == "bourin":
            out.extend(bounds.bourin_norm_check(d, dp, f, tol) for f in fns)
        elif cid in ("cartesian_lower", "fourpoint_vs_integral"):
            out.extend(CHAINS[cid](d, f, nodes, tol) for f in fns)
        elif cid == "upper_fourpoint":
            out.extend(bounds.upper_fourpoint(d, f, tol) for f in fns)
        elif cid == "weighted_refined":
            out.extend(bounds.weighted_power_chain(d, t, p, tol)
                       for p in cfg.p_values for t in cfg.t_values)
        else:  # pragma: no cover - validate() rejects unknown ids
            raise ConfigError(f"unknown chain {cid!r}")
    return out


class _Tally:
    def __init__(self, chain_ids):
        self.chain_ids = list(chain_ids)
        self.matrices = 0
        self.total = 0
        self.violations = 0
        self.max_violation = 0.0
        self.min_gap = {}

    def add(self, reports):
        self.matrices += 1
        for rep in reports:
            for a in rep.assertions:
                self.total += 1
                if not a.satisfied:
                    self.violations += 1
                    self.max_violation = max(self.max_violation, -a.gap)
                cur = self.min_gap.get(rep.chain_id)
                self.min_gap[rep.chain_id] = a.gap if cur is None else min(cur, a.gap)

    def summary(self):
        return {
            "matrices": self.matrices,
            "total_assertions": self.total,
            "violations": self.violations,
            "max_violation": self.max_violation,
            "min_gap_per_chain": {c: self.min_gap[c] for c in self.chain_ids
                                  if c in self.min_gap},
        }


def run_suite(cfg: SuiteConfig, keep_reports=True):
    """Evaluate every chain on every generated matrix.

    Matrices are processed in (ensemble, index) order, and chains in the
    configured order, so the result does not depend on timing. With
    ``keep_reports=False`` only reports with a failed assertion are kept,
    which keeps memory flat on large runs; the summary covers everything.
    """
    cfg.validate()
    start = time.perf_counter()
    tally = _Tally(cfg.chains)
    results = []
    for e in cfg.ensembles:
        for i in range(e.count):
            reports = evaluate_matrix(gen_matrix(e, i), gen_partner(e, i), cfg)
            tally.add(reports)
            if not keep_reports:
                reports = [r for r in reports if not r.ok]
            if reports:
                results.append(MatrixResult(e.kind, e.dim, i, reports))
    report = SuiteReport(cfg.to_dict(), results, tally.summary(),
                         time.perf_counter() - start)
    if cfg.output:
        report.write(cfg.output, cfg.format)
    return report


def sharpness_experiment(count, dim, seed=0, tol=DEFAULT_TOL):
    """Normal matrices attain equality in the squared four-point bound.

    Each draw yields a two-term ``sharpness`` report asserting both
    directions of ``w^2(A) = ||(3|A|+|A^*|)^2 + (|A|+3|A^*|)^2|| / 32``
    at relative tolerance ``tol``.
    """
    if count < 1:
        raise ConfigError("count must be >= 1")
    e = Ensemble("normal", dim, count, seed)
    start = time.perf_counter()
    tally = _Tally(["sharpness"])
    results = []
    for i in range(count):
        reports = [bounds.sharpness_chain(gen_matrix(e, i), tol)]
        tally.add(reports)
        results.append(MatrixResult("normal", dim, i, reports))
    cfg = {"ensembles": [asdict(e)], "chains": ["sharpness"], "tol": tol}
    return SuiteReport(cfg, results, tally.summary(), time.perf_counter() - start)

