"""
Export Service
输出：JSON（pydantic）、CSV、LaTeX（jinja2 模板）、文本（rich 表格）

所有输出按固定顺序生成，同样的输入得到逐字节相同的输出。
"""
import csv
import io
from collections.abc import Sequence

from pydantic import TypeAdapter
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from app.core.config import settings
from app.core.utils.template_util import render_template
from app.models.conjugacy import ClassRep
from app.models.cyclo import CycloCtx, CycloNum
from app.models.enums import ClassFamily, OutputFormat
from app.models.field import FieldCtx, FieldElement
from app.models.group import GroupElement
from app.models.table import CharacterId, CharacterTable
from app.schemas.report import VerificationReport
from app.schemas.table import (
    CharacterPayload,
    ClassPayload,
    GroupElementPayload,
    SumsReport,
    TableDocument,
    TableMeta,
)
from app.services.chartable_service import character_degree
from app.services.cyclo_service import to_complex, to_payload
from app.services.group_service import group_order

# LaTeX 三段式布局的列分组
_LATEX_PARTS = (
    (ClassFamily.A, ClassFamily.B, ClassFamily.C, ClassFamily.D),
    (ClassFamily.E, ClassFamily.F, ClassFamily.G, ClassFamily.H),
    (ClassFamily.I, ClassFamily.L, ClassFamily.M),
)


# ============ 载荷 ============

def field_vector(e: FieldElement) -> list[int]:
    return list(e.coeffs)


def group_element_payload(g: GroupElement) -> GroupElementPayload:
    return GroupElementPayload(
        s=[[field_vector(x) for x in row] for row in g.s.rows()],
        w=[field_vector(g.w[0]), field_vector(g.w[1])],
        z=field_vector(g.z),
    )


def class_payload(rep: ClassRep) -> ClassPayload:
    params = {
        name: field_vector(value) if isinstance(value, FieldElement) else value
        for name, value in rep.params.items()
    }
    return ClassPayload(
        family=rep.family.value,
        label=rep.label,
        params=params,
        size=rep.size,
        centralizer_order=rep.centralizer_order,
        rep=group_element_payload(rep.rep),
    )


def character_payload(cid: CharacterId, q: int) -> CharacterPayload:
    return CharacterPayload(
        family=cid.family.value,
        label=cid.label,
        index=cid.index,
        u=None if cid.u is None else field_vector(cid.u),
        u_exponent=cid.u_exponent,
        degree=character_degree(cid, q),
    )


def approx(cyclo: CycloCtx, value: CycloNum) -> list[float]:
    z = to_complex(cyclo, value, settings.OUTPUT_DIGITS)
    return [z.real, z.imag]


def table_document(table: CharacterTable) -> TableDocument:
    conv = table.convention
    ctx = conv.field
    meta = TableMeta(
        q=ctx.q,
        p=ctx.p,
        f=ctx.f,
        modulus=list(ctx.modulus),
        nu=list(ctx.nu_coeffs),
        conductor=conv.cyclo.N,
        delta=conv.delta,
        lambda_def=conv.lambda_def,
        sqrt_branch=conv.sqrt_branch,
    )
    return TableDocument(
        meta=meta,
        classes=[class_payload(rep) for rep in table.classes],
        characters=[character_payload(cid, table.q) for cid in table.chars],
        values=[[to_payload(v) for v in row] for row in table.values],
        approx=[[approx(conv.cyclo, v) for v in row] for row in table.values],
    )


# ============ 单元格格式 ============

def _complex_cell(cyclo: CycloCtx, value: CycloNum, digits: int) -> str:
    z = to_complex(cyclo, value)
    re, im = z.real + 0.0, z.imag + 0.0
    if abs(im) < 10 ** -digits:
        return f"{re:.{digits}g}"
    return f"{re:.{digits}g}{im:+.{digits}g}j"


def _latex_value(cyclo: CycloCtx, value: CycloNum) -> str:
    if value.is_rational:
        frac = value.to_fraction()
        if frac.denominator == 1:
            return f"${frac.numerator}$"
        sign = "-" if frac < 0 else ""
        return f"${sign}\\frac{{{abs(frac.numerator)}}}{{{frac.denominator}}}$"
    z = to_complex(cyclo, value, 4)
    return f"${z.real:.4f}{z.imag:+.4f}\\imath$"


def _latex_class_label(rep: ClassRep) -> str:
    name = f"\\mathcal{{{rep.family.value}}}"
    sub = rep.k if rep.k is not None else rep.m
    if sub is not None:
        name += f"_{{{sub}}}"
    if rep.z is not None:
        name += f"({rep.z_index})"
    return f"${name}$"


def _latex_char_label(cid: CharacterId) -> str:
    label = cid.label.replace("_", "\\_").replace("^", "\\textasciicircum{}")
    return f"\\texttt{{{label}}}"


def _render_rich(table: Table, width: int) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=width, color_system=None, force_terminal=False, highlight=False)
    console.print(table)
    return buffer.getvalue()


# ============ 特征标表 ============

def table_to_json(table: CharacterTable) -> str:
    return table_document(table).model_dump_json(indent=2, by_alias=True) + "\n"


def table_to_csv(table: CharacterTable) -> str:
    """复数近似保留 12 位有效数字"""
    cyclo = table.convention.cyclo
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["character"] + [rep.label for rep in table.classes])
    for cid, row in zip(table.chars, table.values):
        writer.writerow([cid.label] + [_complex_cell(cyclo, v, 12) for v in row])
    return buffer.getvalue()


def table_to_latex(table: CharacterTable) -> str:
    """三段式布局；中心族只列 z = 0 与 A(z) 列"""
    cyclo = table.convention.cyclo
    parts = []
    for families in _LATEX_PARTS:
        columns = [
            c for c, rep in enumerate(table.classes)
            if rep.family in families and (rep.family == ClassFamily.A or rep.z_index == 0)
        ]
        parts.append({
            "labels": [_latex_class_label(table.classes[c]) for c in columns],
            "rows": [
                {"label": _latex_char_label(cid), "cells": [_latex_value(cyclo, row[c]) for c in columns]}
                for cid, row in zip(table.chars, table.values)
            ],
        })
    conv = table.convention
    return render_template(
        "character_table.tex.j2",
        q=table.q,
        parts=parts,
        lambda_def=conv.lambda_def,
        sqrt_branch=conv.sqrt_branch,
        delta=conv.delta,
    )


def table_to_text(table: CharacterTable) -> str:
    cyclo = table.convention.cyclo
    grid = Table(title=f"Character table of H1({table.q}) x| Sp(2,{table.q})")
    grid.add_column("character", no_wrap=True)
    for rep in table.classes:
        grid.add_column(rep.label, justify="right", no_wrap=True)
    for cid, row in zip(table.chars, table.values):
        grid.add_row(escape(cid.label), *(_complex_cell(cyclo, v, 4) for v in row))
    return _render_rich(grid, width=max(120, 24 * (table.size + 1)))


def render_table(table: CharacterTable, fmt: OutputFormat) -> str:
    match fmt:
        case OutputFormat.JSON:
            return table_to_json(table)
        case OutputFormat.CSV:
            return table_to_csv(table)
        case OutputFormat.LATEX:
            return table_to_latex(table)
    return table_to_text(table)


# ============ 共轭类 ============

def render_classes(ctx: FieldCtx, classes: Sequence[ClassRep], fmt: OutputFormat) -> str:
    match fmt:
        case OutputFormat.JSON:
            payload = [class_payload(rep) for rep in classes]
            return TypeAdapter(list[ClassPayload]).dump_json(payload, indent=2).decode() + "\n"
        case OutputFormat.CSV:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["family", "label", "size", "centralizer_order"])
            for rep in classes:
                writer.writerow([rep.family.value, rep.label, rep.size, rep.centralizer_order])
            return buffer.getvalue()
        case OutputFormat.LATEX:
            rows = [
                {
                    "label": _latex_class_label(rep),
                    "size": rep.size,
                    "centralizer_order": rep.centralizer_order,
                    "params": ", ".join(
                        f"{k}={v.index if isinstance(v, FieldElement) else v}" for k, v in rep.params.items()
                    ),
                }
                for rep in classes
            ]
            return render_template("classes.tex.j2", q=ctx.q, classes=rows, order=group_order(ctx.q))
    grid = Table(title=f"Conjugacy classes of H1({ctx.q}) x| Sp(2,{ctx.q}), |G| = {group_order(ctx.q)}")
    for name in ("class", "s", "w", "z", "size", "|C_G(g)|"):
        grid.add_column(name, no_wrap=True)
    for rep in classes:
        g = rep.rep
        grid.add_row(
            rep.label,
            escape(f"[[{g.s.a},{g.s.b}],[{g.s.c},{g.s.d}]]"),
            escape(f"({g.w[0]},{g.w[1]})"),
            escape(str(g.z)),
            str(rep.size),
            str(rep.centralizer_order),
        )
    return _render_rich(grid, width=120)


# ============ 指数和 / 校验报告 ============

def render_sums(report: SumsReport, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return report.model_dump_json(indent=2) + "\n"
    grid = Table(title=f"Character sums over GF({report.field.q})")
    grid.add_column("quantity", no_wrap=True)
    grid.add_column("value")
    g_re, g_im = report.gauss_sum_approx
    s_re, s_im = report.sqrt_delta_q_approx
    grid.add_row("conductor N", str(report.conductor))
    grid.add_row("delta", str(report.delta))
    grid.add_row("Q(lambda)", f"{g_re:+.6f}{g_im:+.6f}i")
    grid.add_row("sqrt(delta q)", f"{s_re:+.6f}{s_im:+.6f}i")
    for entry in report.legendre:
        grid.add_row(escape(f"(u/F), u={entry.u}"), str(entry.legendre))
    return _render_rich(grid, width=100)


def render_reports(reports: Sequence[VerificationReport], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return TypeAdapter(list[VerificationReport]).dump_json(list(reports), indent=2).decode() + "\n"
    grid = Table(title="Verification")
    for name in ("suite", "q", "passed", "checks", "elapsed (s)"):
        grid.add_column(name, no_wrap=True)
    for report in reports:
        grid.add_row(
            report.suite, str(report.q), "PASS" if report.passed else "FAIL",
            str(len(report.checks)), f"{report.elapsed_seconds:.3f}",
        )
    text = _render_rich(grid, width=100)
    for report in reports:
        for check in report.failures:
            text += f"FAIL {report.suite}: {check.identifier} expected={check.expected} got={check.got}\n"
    return text
