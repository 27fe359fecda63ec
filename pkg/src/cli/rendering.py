"""
Output formats for command results: JSON (camelCase, fixed field order),
markdown tables, plain text and rich tables.
"""
import io
from enum import Enum
from typing import Sequence

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from src.core.schemas.base import CamelModel, CommandResult
from src.core.schemas.reports import AuditReport, DemoReport, RefutationTrace, VerifyReport

TABLE_WIDTH = 110


class OutputFormat(str, Enum):
    """Enum for the `--format` flag"""
    TEXT = "text"
    JSON = "json"
    MD = "md"
    TABLE = "table"


def _mark(passed: bool) -> str:
    return "yes" if passed else "no"


def _md_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> list[str]:
    lines = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    lines += ["| " + " | ".join(str(c).replace("|", "\\|") for c in row) + " |" for row in rows]
    return lines


AUDIT_HEADERS = ("condition", "trials", "certified", "failed", "inconclusive", "max s-degree", "nontrivial s")


def _audit_rows(report: AuditReport) -> list[tuple]:
    return [
        (c.condition, c.trials, c.certified, c.failed, c.inconclusive, c.max_s_exponent, c.nontrivial_s)
        for c in report.conditions
    ]


def audit_markdown(report: AuditReport) -> str:
    lines = [
        f"## {report.audit} audit",
        "",
        f"Ring `{report.ring}`, S = `{report.sset}`, seed {report.seed}, {report.trials} trials.",
        "",
        *_md_table(AUDIT_HEADERS, _audit_rows(report)),
    ]
    if report.discrepancies:
        lines += ["", "### Discrepancies", ""]
        lines += _md_table(("trial", "condition", "detail"), [(d.trial, d.condition, d.detail) for d in report.discrepancies])
    return "\n".join(lines) + "\n"


def demo_markdown(report: DemoReport) -> str:
    lines = ["## Example demo", "", f"Passed: {_mark(report.passed)}", ""]
    lines += _md_table(("step", "passed", "detail"), [(s.name, _mark(s.passed), s.detail) for s in report.steps])
    for step in report.steps:
        if step.data:
            lines += ["", f"### {step.name}", ""]
            lines += _md_table(("key", "value"), list(step.data.items()))
    return "\n".join(lines) + "\n"


def _obligation_rows(report: VerifyReport | RefutationTrace) -> list[tuple]:
    obligations = report.obligations if isinstance(report, VerifyReport) else report.checks
    return [(o.name, _mark(o.passed), o.detail) for o in obligations]


def verify_markdown(report: VerifyReport) -> str:
    lines = [f"## {report.kind} certificate: {report.status.value}", ""]
    lines += _md_table(("obligation", "passed", "detail"), _obligation_rows(report))
    return "\n".join(lines) + "\n"


def trace_markdown(trace: RefutationTrace) -> str:
    lines = [
        f"## Refutation of {trace.claim}",
        "",
        f"Prong: {trace.prong or '-'}, witness `{trace.witness}`, refuted: {_mark(trace.refuted)}",
        "",
    ]
    lines += _md_table(("check", "passed", "detail"), _obligation_rows(trace))
    return "\n".join(lines) + "\n"


def _text(result: BaseModel) -> str:
    if isinstance(result, CommandResult):
        return f"{result.data}\n" if result.data is not None else f"{result.message}\n"
    if isinstance(result, VerifyReport):
        failed = ", ".join(result.failures)
        return f"{result.kind}: {result.status.value}" + (f" ({failed})" if failed else "") + "\n"
    if isinstance(result, RefutationTrace):
        return f"{'refuted' if result.refuted else 'not refuted'} via {result.prong or 'support bound'}: {result.witness}\n"
    if isinstance(result, AuditReport):
        return "".join(
            f"{c.condition}: {c.certified}/{c.trials} certified, {c.failed} failed, {c.inconclusive} inconclusive\n"
            for c in result.conditions
        )
    if isinstance(result, DemoReport):
        return "".join(f"[{'ok' if s.passed else 'FAIL'}] {s.name}: {s.detail}\n" for s in result.steps)
    raise TypeError(f"No text rendering for {type(result).__name__}")


def _markdown(result: BaseModel) -> str:
    if isinstance(result, AuditReport):
        return audit_markdown(result)
    if isinstance(result, DemoReport):
        return demo_markdown(result)
    if isinstance(result, VerifyReport):
        return verify_markdown(result)
    if isinstance(result, RefutationTrace):
        return trace_markdown(result)
    return _text(result)


def rich_table(result: BaseModel) -> Table:
    if isinstance(result, AuditReport):
        table = Table(title=f"{result.audit} audit over {result.ring}, S = {result.sset}")
        for header in AUDIT_HEADERS:
            table.add_column(header, justify="left" if header == "condition" else "right")
        for row in _audit_rows(result):
            table.add_row(*(str(c) for c in row))
        return table
    if isinstance(result, DemoReport):
        table = Table(title="Example demo")
        for header in ("step", "passed", "detail"):
            table.add_column(header)
        for step in result.steps:
            table.add_row(step.name, _mark(step.passed), step.detail, style=None if step.passed else "red")
        return table
    if isinstance(result, (VerifyReport, RefutationTrace)):
        title = f"{result.kind}: {result.status.value}" if isinstance(result, VerifyReport) else result.claim
        table = Table(title=title)
        for header in ("check", "passed", "detail"):
            table.add_column(header)
        for row in _obligation_rows(result):
            table.add_row(*row)
        return table
    table = Table(show_header=False)
    table.add_column("result")
    table.add_row(_text(result).rstrip("\n"))
    return table


def _table(result: BaseModel) -> str:
    buffer = io.StringIO()
    Console(file=buffer, width=TABLE_WIDTH, color_system=None, force_terminal=False).print(rich_table(result))
    return buffer.getvalue()


def render(result: BaseModel, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        if isinstance(result, CamelModel):
            return result.to_json() + "\n"
        return result.model_dump_json(indent=2) + "\n"
    if fmt == OutputFormat.MD:
        return _markdown(result)
    if fmt == OutputFormat.TABLE:
        return _table(result)
    return _text(result)
