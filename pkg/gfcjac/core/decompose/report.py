"""
Report formatting for decompositions and certificates.

JSON output is deterministic: keys are sorted and no timestamps are
written, so identical exact inputs give byte-identical reports.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from gfcjac.core.models import Certificate, Decomposition
from gfcjac.core.scalars import format_scalar


def decomposition_to_dict(dec: Decomposition, classes: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Output structure:
    {
        "type": {"p": 2, "n": 4},
        "genus": 5,
        "parameters": ["inf", "0", "1", "2", "7"],
        "factors": [{"label", "equation", "genus", "multiplicity", "j"}, ...],
        "certificate": {"passed", "pairwise_zero", "genus_sum", "total_genus"},
        "mode": "THEOREM"
    }
    """
    data: Dict[str, Any] = {
        "type": {"p": dec.gfc_type.k, "n": dec.gfc_type.n},
        "genus": dec.genus_total,
        "parameters": [format_scalar(b) for b in dec.parameters],
        "factors": [f.to_dict() for f in dec.factors],
        "certificate": dec.certificate.to_dict(),
        "mode": dec.mode.value,
    }
    if dec.notes:
        data["notes"] = list(dec.notes)
    if classes is not None:
        data["isogeny_classes"] = classes
    return data


def format_json(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def format_certificate_text(cert: Certificate) -> List[str]:
    lines = [
        f"certificate: {'PASS' if cert.passed else 'FAIL'}",
        f"  pairwise quotients of genus 0: {'yes' if cert.pairwise_zero else 'no'}",
    ]
    if cert.weights:
        lines.append(f"  genus by weight sign: {cert.genus_sum} negative / {cert.total_genus} positive")
    else:
        lines.append(f"  genus sum: {cert.genus_sum} / {cert.total_genus}")
    if cert.labels:
        lines.append("  quotient genera: " + ", ".join(f"{l}={g}" for l, g in zip(cert.labels, cert.quotient_genera)))
    if not cert.passed:
        lines.append(f"  reason: {cert.reason()}")
    if cert.isogeny:
        lines.append(f"  isogeny: {cert.isogeny}")
    return lines


def format_decomposition_text(dec: Decomposition, classes: Optional[Dict[str, Any]] = None) -> str:
    census = ", ".join(f"{count} of genus {g}" for g, count in dec.genus_census().items())
    lines = [
        f"GFC type {dec.gfc_type}, genus {dec.genus_total} [{dec.mode.value}]",
        f"branch set: {dec.parameters}",
        f"factors: {census}",
    ]
    width = max((len(f.subgroup_label) for f in dec.factors), default=0)
    for f in dec.factors:
        j = f"  j = {format_scalar(f.j_value)}" if f.j_value is not None else ""
        mult = f" (x{f.multiplicity})" if f.multiplicity > 1 else ""
        lines.append(f"  {f.subgroup_label:<{width}}  g={f.genus}  {f.equation}{mult}{j}")
    lines.extend(format_certificate_text(dec.certificate))
    if classes is not None:
        lines.append(f"j classes: {classes['statement']} ({classes['note']})")
    for note in dec.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def format_mapping_text(title: str, data: Dict[str, Any], indent: int = 0) -> str:
    """Generic "key: value" listing for the smaller commands."""
    pad = "  " * indent
    lines = [f"{pad}{title}"] if title else []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(format_mapping_text(f"{key}:", value, indent + 1).rstrip("\n"))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}  {key}:")
            for item in value:
                lines.append(f"{pad}    - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, list):
            lines.append(f"{pad}  {key}: " + ", ".join(str(v) for v in value))
        else:
            lines.append(f"{pad}  {key}: {value}")
    return "\n".join(lines) + "\n"
