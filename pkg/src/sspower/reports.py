"""Result documents and experiment report serialization.

Result document (JSON)::

    {"instance": {"name", "quota", "weights"}, "method": "dp"|"enum"|"a1"|"a2",
     "players": [{"player", "weight", "value", "fraction"?}], "sum": float,
     "samples"?, "seed"?, "batches"?, "plan"?, "seconds"?}

Players are listed by their 1-based label in the original weight order.

Experiment CSV columns: ``algorithm,player,samples,statistic,value`` with
``statistic`` one of ``mean_abs_error``, ``mse`` (one row per algorithm,
player and M), ``alpha`` (``samples`` empty) and ``alpha_ratio`` (algorithm
``a1/a2``, ``samples`` empty).  Missing fits are written as an empty value.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .experiments import ExperimentReport
from .instances import InstanceFile

CSV_HEADER = ("algorithm", "player", "samples", "statistic", "value")


def result_document(inst: InstanceFile, game, method: str, values, *, samples=None,
                    seed=None, batches=None, plan=None, seconds=None) -> dict:
    """Build a result document from canonical-order ``values``."""
    original = game.to_original(list(values))
    players = []
    for label, (weight, value) in enumerate(zip(inst.weights, original), start=1):
        entry = {"player": label, "weight": weight, "value": float(value)}
        if isinstance(value, Fraction):
            entry["fraction"] = f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
        players.append(entry)
    doc = {
        "instance": {"name": inst.name, "quota": inst.quota, "weights": list(inst.weights)},
        "method": method,
        "players": players,
        "sum": float(sum(values)),
    }
    for key, val in (("samples", samples), ("seed", seed), ("batches", batches)):
        if val is not None:
            doc[key] = val
    if plan is not None:
        doc["plan"] = plan.as_dict()
    if seconds is not None:
        doc["seconds"] = seconds
    return doc


def render_text(doc: dict) -> str:
    inst = doc["instance"]
    label = f"{inst['name']} " if inst["name"] else ""
    lines = [f"# {label}[{inst['quota']}; {', '.join(map(str, inst['weights']))}]  method={doc['method']}"]
    if "plan" in doc:
        p = doc["plan"]
        lines.append(f"# plan: M={p['samples']} ({p['formula']}; eps={p['epsilon']}, delta={p['delta']})")
    if "samples" in doc:
        lines.append(f"# samples={doc['samples']} seed={doc.get('seed')} batches={doc.get('batches')}")
    exact = "fraction" in doc["players"][0]
    lines.append("player\tweight\t" + ("fraction\t" if exact else "") + "value")
    for p in doc["players"]:
        cells = [str(p["player"]), str(p["weight"])]
        if exact:
            cells.append(p["fraction"])
        cells.append(f"{p['value']:.6g}")
        lines.append("\t".join(cells))
    if exact:
        lines.append("# " + " ".join(p["fraction"] for p in doc["players"]))
    if "seconds" in doc:
        lines.append(f"# seconds={doc['seconds']:.3f}")
    return "\n".join(lines) + "\n"


def report_rows(report: ExperimentReport):
    """Yield CSV rows; players use their original 1-based labels."""
    game = report.game
    labels = [label + 1 for label in game.label_map]
    for name, s in report.series.items():
        for k, m in enumerate(report.samples):
            for i, label in sorted(enumerate(labels), key=lambda t: t[1]):
                yield (name, label, m, "mean_abs_error", repr(float(s.mean_abs_error[k, i])))
                yield (name, label, m, "mse", repr(float(s.mse[k, i])))
        for i, label in sorted(enumerate(labels), key=lambda t: t[1]):
            a = s.alpha[i]
            yield (name, label, "", "alpha", "" if a is None else repr(a))
    if {"a1", "a2"} <= set(report.series):
        ratios = report.alpha_ratio()
        for i, label in sorted(enumerate(labels), key=lambda t: t[1]):
            r = ratios[i]
            yield ("a1/a2", label, "", "alpha_ratio", "" if r is None else repr(r))


def report_csv(report: ExperimentReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(report_rows(report))
    return buf.getvalue()


def report_dict(report: ExperimentReport) -> dict:
    game = report.game
    order = sorted(range(game.n), key=lambda k: game.label_map[k])

    def by_label(seq):
        return [seq[k] for k in order]

    doc = {
        "game": {"quota": game.quota, "weights": list(game.original_weights)},
        "samples": list(report.samples),
        "trials": report.trials,
        "seed": report.seed,
        "algorithms": {},
    }
    for name, s in report.series.items():
        doc["algorithms"][name] = {
            "mean_abs_error": [by_label(list(map(float, row))) for row in s.mean_abs_error],
            "mse": [by_label(list(map(float, row))) for row in s.mse],
            "alpha": by_label(s.alpha),
            "seconds": list(map(float, s.seconds)),
        }
    if {"a1", "a2"} <= set(report.series):
        doc["alpha_ratio"] = by_label(report.alpha_ratio())
    return doc


def report_json(report: ExperimentReport) -> str:
    return json.dumps(report_dict(report), indent=2)
