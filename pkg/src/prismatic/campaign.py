"""Verification campaigns over graph streams, counterexample checks, certificate output."""
from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Iterator

from prismatic import kernels
from prismatic.errors import BudgetExhausted, GraphFormatError, TheoremViolation
from prismatic.graph import (
    Graph,
    complete_bipartite,
    parse_graph6,
    prism,
    random_gnp,
    read_graph6_lines,
    to_graph6,
)
from prismatic.invariants import (
    TOUGHNESS_MAX_N,
    connectivity,
    format_toughness,
    independence_number,
    toughness,
)
from prismatic.oracles import hamilton_cycle
from prismatic.pipeline import (
    BRANCH_TAGS,
    Certificate,
    certificate_json,
    prism_ham_certificate,
    to_prism_cycle_certificate,
    verify_certificate,
)
from prismatic.products import cyclic_product_certificate, toughness_hamilton_check, verify_product_cycle

MODES = ("theorem3", "prop9", "prop10", "audit")
STATUSES = ("ok", "no_claim", "skipped", "fail", "gap", "gap_allowed", "budget", "input_error")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

KAB_MAX_VERTICES = 30


def parse_gen_spec(spec: str) -> dict:
    """``gnp n=12 p=0.5 count=1000 seed=7`` -> dict; only the gnp family is supported."""
    words = spec.split()
    if not words or words[0] != "gnp":
        raise GraphFormatError(f"unknown generator in {spec!r} (expected 'gnp ...')")
    raw = {}
    for w in words[1:]:
        key, sep, val = w.partition("=")
        if not sep or key in raw:
            raise GraphFormatError(f"bad generator field {w!r}")
        raw[key] = val
    missing = {"n", "p", "count", "seed"} - raw.keys()
    extra = raw.keys() - {"n", "p", "count", "seed"}
    if missing or extra:
        raise GraphFormatError(f"generator fields: missing {sorted(missing)}, unknown {sorted(extra)}")
    try:
        out = {"n": int(raw["n"]), "p": float(raw["p"]), "count": int(raw["count"]), "seed": int(raw["seed"])}
    except ValueError as exc:
        raise GraphFormatError(f"bad generator value: {exc}") from exc
    if not 1 <= out["n"] <= 62 or out["count"] < 0 or not 0.0 <= out["p"] <= 1.0:
        raise GraphFormatError(f"generator values out of range in {spec!r}")
    return out


def generate_lines(spec: str) -> Iterator[str]:
    cfg = parse_gen_spec(spec)
    for i in range(cfg["count"]):
        # independent stream per graph so records do not depend on --jobs
        yield to_graph6(random_gnp(cfg["n"], cfg["p"], cfg["seed"] * 1_000_003 + i))


def load_allowlist(path: str) -> dict[str, str]:
    """Triaged gap reports: JSON list of {"graph6": ..., "reason": ...}."""
    with open(path, encoding="utf-8") as fh:
        entries = json.load(fh)
    return {e["graph6"]: e["reason"] for e in entries}


# -- per-graph work --------------------------------------------------------


def _base_record(g: Graph, line: str) -> dict:
    rec = {"graph6": line, "n": g.n}
    if g.n >= 1:
        rec["alpha"], _ = independence_number(g)
        rec["kappa"], _ = connectivity(g)
    rec["toughness"] = format_toughness(toughness(g)[0]) if 1 <= g.n <= TOUGHNESS_MAX_N else None
    return rec


def _theorem3(g: Graph, rec: dict):
    if g.n < 2:
        rec["status"] = "skipped"
        return
    cert = prism_ham_certificate(g)
    rec["kind"] = cert.kind
    rec["trace"] = list(cert.trace)
    rec["verified"] = verify_certificate(g, cert)
    if cert.kind == "refuted_hypothesis":
        rec["status"] = "no_claim" if rec["verified"] else "fail"
        return
    rec["status"] = "ok" if rec["verified"] else "fail"
    if cert.gaps:
        rec["gaps"] = list(cert.gaps)
        if rec["verified"]:
            rec["status"] = "gap"


def _prop9(g: Graph, rec: dict, t: int):
    res = cyclic_product_certificate(g, t)
    if res is None:
        rec.update(kind="not_applicable", trace=["Product.hypothesis_fails"], status="no_claim", verified=False)
        return
    rec["kind"] = "product_cycle"
    rec["trace"] = ["Product.t_tree", "Product.leaf_induction"]
    rec["verified"] = verify_product_cycle(g, t, res.sequence)
    rec["status"] = "ok" if rec["verified"] else "fail"


def _prop10(g: Graph, rec: dict):
    if g.n < 3:
        rec["status"] = "skipped"
        return
    rep = toughness_hamilton_check(g)
    rec["prop10"] = rep.to_json()
    tags = []
    if rep.hamilton_bound:
        tags.append("Toughness.hamilton_bound")
    if rep.prism_bound:
        tags.append("Toughness.prism_bound")
    rec["trace"] = tags
    rec["kind"] = "toughness_report"
    rec["verified"] = not rep.violation
    if not tags:
        rec["status"] = "no_claim" if rec["verified"] else "fail"
    else:
        rec["status"] = "ok" if rec["verified"] else "fail"


def process_line(job) -> dict:
    """Evaluate one graph6 line; safe to run in a worker process."""
    index, lineno, line, mode, t, timings = job
    start = time.perf_counter()
    rec: dict = {"index": index, "line": lineno}
    try:
        g = parse_graph6(line)
    except GraphFormatError as exc:
        rec.update(graph6=line, status="input_error", error=str(exc))
        return rec
    try:
        rec.update(_base_record(g, line))
        if mode in ("theorem3", "audit"):
            _theorem3(g, rec)
        elif mode == "prop9":
            _prop9(g, rec, t)
        elif mode == "prop10":
            _prop10(g, rec)
        else:
            raise ValueError(f"unknown mode {mode!r}")
    except BudgetExhausted as exc:
        rec.update(status="budget", error=str(exc))
    except TheoremViolation as exc:
        rec.update(status="fail", verified=False, error=str(exc))
    if timings:
        rec["runtime"] = round(time.perf_counter() - start, 6)
    return rec


# -- campaigns ----------------------------------------------------------------


@dataclass
class CampaignReport:
    mode: str
    records: list[dict] = field(default_factory=list)
    allow: dict[str, str] = field(default_factory=dict)

    def status_counts(self) -> Counter:
        return Counter(r["status"] for r in self.records)

    def branch_counts(self) -> Counter:
        c = Counter()
        for r in self.records:
            c.update(r.get("trace", ()))
        return c

    def gap_reports(self) -> list[dict]:
        return [gap for r in self.records for gap in r.get("gaps", ())]

    def summary(self) -> dict:
        counts = self.status_counts()
        out = {
            "summary": True,
            "mode": self.mode,
            "records": len(self.records),
            "status": {s: counts.get(s, 0) for s in STATUSES},
            "branches": dict(sorted(self.branch_counts().items())),
            "gap_reports": self.gap_reports(),
        }
        if self.mode == "audit":
            fired = self.branch_counts()
            out["never_exercised"] = [tag for tag in BRANCH_TAGS if not fired.get(tag)]
        return out

    def exit_code(self) -> int:
        counts = self.status_counts()
        if counts["fail"] or counts["gap"]:
            return EXIT_FAIL
        if counts["budget"]:
            return EXIT_BUDGET
        if counts["input_error"]:
            return EXIT_INPUT
        return EXIT_OK

    def lines(self) -> Iterator[str]:
        for r in self.records:
            yield json.dumps(r, sort_keys=True, separators=(",", ":"))
        yield json.dumps(self.summary(), sort_keys=True, separators=(",", ":"))


def run_campaign(
    lines: Iterable[str],
    mode: str,
    t: int = 3,
    jobs: int = 1,
    allow: dict[str, str] | None = None,
    timings: bool = False,
) -> CampaignReport:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "prop9" and t < 3:
        raise ValueError("prop9 needs t >= 3")
    work = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line and not line.startswith(">>"):
            work.append((len(work), lineno, line, mode, t, timings))
    if jobs > 1 and len(work) > 1:
        with Pool(jobs) as pool:
            records = list(pool.imap(process_line, work, chunksize=16))
    else:
        records = [process_line(j) for j in work]
    report = CampaignReport(mode, records, dict(allow or {}))
    for r in records:
        if r["status"] == "gap" and r["graph6"] in report.allow:
            r["status"] = "gap_allowed"
            r["triage"] = report.allow[r["graph6"]]
    return report


def sweep_fixture_lines(paths: Iterable[str]) -> Iterator[str]:
    for p in paths:
        with open(p, encoding="ascii") as fh:
            for _, line, g in read_graph6_lines(fh):
                yield line


# -- one-off checks ---------------------------------------------------------------


def counterexample_check(k: int, a: int) -> dict:
    """Check K_{k,a}: parameters, and either the non-Hamiltonian prism or a certificate."""
    if k < 1 or a < 1:
        raise ValueError("k and a must be positive")
    if k + a > KAB_MAX_VERTICES:
        raise BudgetExhausted(f"K_{{{k},{a}}} exceeds the {KAB_MAX_VERTICES}-vertex size budget")
    g = complete_bipartite(k, a)
    alpha, _ = independence_number(g)
    kappa, _ = connectivity(g)
    rep = {
        "k": k, "a": a, "n": g.n,
        "alpha": alpha, "kappa": kappa,
        "alpha_ok": alpha == max(k, a), "kappa_ok": kappa == min(k, a),
    }
    if a > 2 * k:
        pg = prism(g)
        rep["prism_hamiltonian"] = hamilton_cycle(pg) is not None
        # the k vertices of degree a in G become 2k vertices of degree a + 1 in the prism
        high = [v for v in range(pg.n) if pg.degree(v) == a + 1]
        alive = (1 << pg.n) - 1
        for v in high:
            alive &= ~(1 << v)
        rep["cut_size"] = len(high)
        rep["cut_components"] = kernels.count_components(pg.adj, alive)
        rep["confirmed"] = (rep["alpha_ok"] and rep["kappa_ok"] and not rep["prism_hamiltonian"]
                            and rep["cut_size"] == 2 * k and rep["cut_components"] == a)
    else:
        cert = prism_ham_certificate(g)
        rep["certificate_kind"] = cert.kind
        rep["trace"] = list(cert.trace)
        rep["verified"] = verify_certificate(g, cert) and verify_certificate(g, to_prism_cycle_certificate(g, cert))
        rep["confirmed"] = rep["alpha_ok"] and rep["kappa_ok"] and rep["verified"]
    return rep


def emit_certificate(path: str, c: Certificate) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(certificate_json(c))


def read_certificate(path: str) -> Certificate:
    with open(path, encoding="utf-8") as fh:
        return Certificate.from_json(json.load(fh))
