"""Formatters for report output."""

import json
import math
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional

import numpy as np
from pydantic import BaseModel
from rich.table import Table

from ..types.models import CompletenessReport, FamilyCertificate, GeodesicReport, VerifyReport
from .exceptions import ReportFormatError

SIGNIFICANT_DIGITS = 17


def format_float(value: float) -> str:
    """
    Format a float for JSON with 17 significant digits.

    Non-finite values use the NaN / Infinity tokens Python's json module reads.

    Examples:
        >>> format_float(0.5)
        '0.5'
        >>> format_float(float("inf"))
        'Infinity'
        >>> format_float(0.1)
        '0.10000000000000001'
    """
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return format(value, f".{SIGNIFICANT_DIGITS}g")


def _default(value: Any) -> Any:
    """json.dumps hook for models, enums and numpy values."""
    if isinstance(value, BaseModel):
        return value.model_dump(mode="python", by_alias=True)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"cannot encode {type(value).__name__} as JSON")


class ReportEncoder(json.JSONEncoder):
    """JSONEncoder that prints floats through format_float."""

    def iterencode(self, o: Any, _one_shot: bool = False) -> Iterator[str]:
        markers: Optional[Dict[int, Any]] = {} if self.check_circular else None
        encode_string = (
            json.encoder.encode_basestring_ascii
            if self.ensure_ascii
            else json.encoder.encode_basestring
        )
        chunks = json.encoder._make_iterencode(  # type: ignore[attr-defined]
            markers,
            self.default,
            encode_string,
            self.indent,
            format_float,
            self.key_separator,
            self.item_separator,
            self.sort_keys,
            self.skipkeys,
            _one_shot,
        )
        return chunks(o, 0)


def to_json_text(data: Any) -> str:
    """
    Deterministic JSON: sorted keys, two-space indent, 17 significant digits.

    Args:
        data: Model, dict or list

    Returns:
        JSON text ending with a newline

    Raises:
        ReportFormatError: If a value has no JSON form
    """
    try:
        text = json.dumps(
            data,
            cls=ReportEncoder,
            default=_default,
            sort_keys=True,
            indent=2,
            ensure_ascii=False,
        )
    except (TypeError, ValueError) as e:
        raise ReportFormatError(f"report is not JSON-encodable: {e}") from e
    return text + "\n"


def format_verify_lines(report: VerifyReport) -> List[str]:
    """Console summary of a verification."""
    lines = []
    lines.append("=" * 60)
    lines.append(f"검증 결과: {report.source}")
    lines.append("=" * 60)
    lines.append(f"차원 n={report.n}, 차수 k={report.k}, lambda={report.lambda_}")
    if report.expected_lambda is not None:
        lines.append(f"기대 lambda (정확값): {report.expected_lambda}")
    lines.append(f"최대 잔차: {report.max_residual:.3e} ({report.points}개 점)")
    if report.grid is not None:
        lines.append(f"축약 방정식 잔차: {report.grid.get('max_abs', float('nan')):.3e}")
    if report.sign_variant_used is not None:
        ledger = report.sign_variant_used
        marker = "인쇄된 형태" if ledger.matches_written else "수정된 형태"
        lines.append(f"사용된 부호: {ledger.used} ({marker})")
    lines.append(f"판정: {'통과' if report.passed else '실패'} (허용 오차 {report.tolerance:.1e})")
    return lines


def format_certificate_lines(certificate: FamilyCertificate) -> List[str]:
    """Console summary of a family certificate."""
    lines = [f"--- {certificate.tag} ---"]
    lines.append(f"인증 잔차: {certificate.certified_residual:.3e}")
    if certificate.round_trip_error is not None:
        lines.append(f"왕복 오차: {certificate.round_trip_error:.3e}")
    if certificate.table_file:
        lines.append(f"표 파일: {certificate.table_file}")
    lines.append(f"인증: {'예' if certificate.certified else '아니오'}")
    return lines


def format_geodesic_lines(report: GeodesicReport) -> List[str]:
    """Console summary of one geodesic."""
    lines = [f"--- 측지선: {report.source} ---"]
    lines.append(f"종료 사유: {report.termination} (t={report.t_final:.6g}, {report.steps} 스텝)")
    lines.append(f"속도 보존 오차: {report.speed_drift:.3e}")
    if report.invariant_drift is not None:
        lines.append(f"보존량 오차: {report.invariant_drift.max_drift:.3e}")
    return lines


def verdict_table(report: CompletenessReport) -> Table:
    """Per initial condition verdicts of a completeness probe."""
    table = Table(title=f"완비성 탐색 (t_max={report.t_max:g}): {report.aggregate}")
    table.add_column("#", justify="right")
    table.add_column("정방향")
    table.add_column("역방향")
    table.add_column("판정")
    for verdict in report.verdicts:
        table.add_row(str(verdict.index), verdict.forward, verdict.backward, verdict.verdict)
    return table


def catalog_table(entries: List[Dict[str, Any]]) -> Table:
    """Catalog ids, descriptions and default parameters."""
    table = Table(title="카탈로그")
    table.add_column("id", style="bold")
    table.add_column("설명")
    table.add_column("기본 매개변수")
    for entry in entries:
        defaults = ", ".join(f"{key}={value:g}" for key, value in entry["defaults"].items())
        table.add_row(entry["id"], entry["description"], defaults)
    return table
