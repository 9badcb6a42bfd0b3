"""Serialisation of energies, maximiser results and survey summaries.

CSV and JSON carry the same fields; the human format is for reading only.
Integers are always written in plain decimal.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, TextIO

from .icg import DivisorClassSpectrum, EnergyRecord
from .search import MaximiserResult, SurveyReport
from .two_prime import DivisorSet

FORMATS = ("human", "csv", "json")

RESULT_COLUMNS = (
    "n", "p", "q", "max_energy", "maximiser_mask",
    "is_unique", "matches_dstar", "kronecker_ok", "formula_ok",
)
ENERGY_COLUMNS = ("n", "divisors", "mask", "energy")
SPECTRUM_COLUMNS = ENERGY_COLUMNS + ("class", "eigenvalue", "multiplicity")
TABLE3_COLUMNS = ("p", "q", "n", "energy_closed_form", "energy_divisor_class", "agree")

# published reference values for the survey summary; compared, never asserted
REFERENCE_SURVEY = {"bound": 10**8, "orders_tested": 618, "distinct_unordered_pairs": 437}


def join_divisors(divs: Iterable[int]) -> str:
    return ",".join(str(d) for d in divs)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def write_csv(rows: list[dict], columns: tuple[str, ...], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row[c]) for c in columns])


def to_csv(rows: list[dict], columns: tuple[str, ...]) -> str:
    buf = io.StringIO()
    write_csv(rows, columns, buf)
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def result_row(res: MaximiserResult) -> dict:
    """One per-order record.  Ties put every maximiser mask, ';'-joined, in
    ``maximiser_mask``."""
    masks = res.maximisers
    return {
        "n": res.n,
        "p": res.pair.p,
        "q": res.pair.q,
        "max_energy": res.max_energy,
        "maximiser_mask": masks[0] if len(masks) == 1 else ";".join(map(str, masks)),
        "is_unique": res.is_unique,
        "matches_dstar": res.matches_dstar,
        "kronecker_ok": res.kronecker_ok,
        "formula_ok": res.formula_ok,
    }


def parse_result_csv(text: str) -> list[dict]:
    """Inverse of ``to_csv(rows, RESULT_COLUMNS)`` up to typing."""
    rows = []
    for raw in csv.DictReader(io.StringIO(text)):
        row: dict = {}
        for k, v in raw.items():
            if v in ("true", "false"):
                row[k] = v == "true"
            elif k == "maximiser_mask" and ";" in v:
                row[k] = v
            else:
                row[k] = int(v)
        rows.append(row)
    return rows


def maximiser_record(res: MaximiserResult) -> dict:
    row = result_row(res)
    row["maximisers"] = [
        {"mask": s.mask, "divisors": join_divisors(s.divisors)} for s in res.maximiser_sets()
    ]
    return row


def format_maximiser(res: MaximiserResult, fmt: str) -> str:
    if fmt == "json":
        return to_json(maximiser_record(res))
    if fmt == "csv":
        return to_csv([result_row(res)], RESULT_COLUMNS)
    lines = [
        f"order n = {res.n} (p = {res.pair.p}, q = {res.pair.q})",
        f"masks evaluated    {res.evaluated}",
        f"maximal energy     {res.max_energy}",
    ]
    for s in res.maximiser_sets():
        lines.append(f"maximiser          {{{join_divisors(s.divisors)}}}  (mask {s.mask})")
    lines += [
        f"unique             {_cell(res.is_unique)}",
        f"equals D*          {_cell(res.matches_dstar)}",
        f"eigenvalue forms   {_cell(res.kronecker_ok)}",
        f"closed-form energy {_cell(res.formula_ok)}",
    ]
    return "\n".join(lines) + "\n"


def energy_row(rec: EnergyRecord, ds: DivisorSet | None = None) -> dict:
    return {
        "n": rec.n,
        "divisors": join_divisors(rec.divisor_set),
        "mask": "" if ds is None else ds.mask,
        "energy": rec.energy,
    }


def format_energy(
    rec: EnergyRecord,
    fmt: str,
    ds: DivisorSet | None = None,
    spec: DivisorClassSpectrum | None = None,
) -> str:
    base = energy_row(rec, ds)
    classes = [] if spec is None else [
        {"class": t.divisor, "eigenvalue": t.eigenvalue, "multiplicity": t.multiplicity}
        for t in spec.entries
    ]
    if fmt == "json":
        if spec is not None:
            base["spectrum"] = classes
        return to_json(base)
    if fmt == "csv":
        if spec is None:
            return to_csv([base], ENERGY_COLUMNS)
        return to_csv([{**base, **c} for c in classes], SPECTRUM_COLUMNS)
    lines = [f"n = {rec.n}", f"D = {{{base['divisors']}}}"]
    if ds is not None:
        lines.append(f"mask = {ds.mask}")
    lines.append(f"energy = {rec.energy}")
    if spec is not None:
        width = max(len(str(c["eigenvalue"])) for c in classes)
        lines.append(f"{'class':>12}  {'eigenvalue':>{max(width, 10)}}  multiplicity")
        for c in classes:
            lines.append(
                f"{c['class']:>12}  {c['eigenvalue']:>{max(width, 10)}}  {c['multiplicity']}"
            )
    return "\n".join(lines) + "\n"


def summary_lines(rep: SurveyReport) -> list[str]:
    cap = "none" if rep.max_prime is None else str(rep.max_prime)
    lines = [
        f"bound                                  {rep.bound}",
        f"prime cap                              {cap}",
        f"orders n = p^2 q^3 tested              {rep.orders_tested}",
        f"distinct prime pairs (unordered)       {rep.distinct_unordered_pairs}",
        f"largest prime appearing                {rep.largest_prime}",
        f"divisor-set comparisons per n          {rep.comparisons_per_order}",
        f"total comparisons                      {rep.comparisons_total}",
        f"cases where maximiser != D*            {rep.dstar_mismatches}",
        f"cases where closed form fails          {rep.formula_failures}",
        f"cases where eigenvalue forms fail      {rep.kronecker_failures}",
        f"running time (s)                       {rep.elapsed_seconds:.3f}",
    ]
    if rep.bound == REFERENCE_SURVEY["bound"]:
        for key in ("orders_tested", "distinct_unordered_pairs"):
            ref, got = REFERENCE_SURVEY[key], getattr(rep, key)
            status = "matches" if ref == got else "DIFFERS from"
            lines.append(f"note: {key} = {got} {status} reference value {ref}")
    return lines


def format_summary(rep: SurveyReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(rep.to_dict())
    if fmt == "csv":
        d = rep.to_dict()
        cols = tuple(d)
        d["max_prime"] = "" if d["max_prime"] is None else d["max_prime"]
        return to_csv([d], cols)
    return "\n".join(summary_lines(rep)) + "\n"


def format_results(results: list[MaximiserResult], fmt: str) -> str:
    rows = [result_row(r) for r in results]
    if fmt == "json":
        return to_json(rows)
    return to_csv(rows, RESULT_COLUMNS)


def format_table3(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return to_json(rows)
    if fmt == "csv":
        return to_csv(rows, TABLE3_COLUMNS)
    head = f"{'p':>4} {'q':>4} {'n':>10} {'E closed form':>14} {'E divisor sum':>14}  agree"
    body = [
        f"{r['p']:>4} {r['q']:>4} {r['n']:>10} {r['energy_closed_form']:>14} "
        f"{r['energy_divisor_class']:>14}  {_cell(r['agree'])}"
        for r in rows
    ]
    return "\n".join([head, *body]) + "\n"
