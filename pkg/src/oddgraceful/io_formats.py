"""Text formats: edge lists in, JSON reports and DOT out.

Edge-list format (read and write)
    optional first line    graph <vertex_count>
    body lines             <a> <b>        one edge per line, 0-based ids
    '#' starts a comment running to end of line; blank lines are ignored.
    Without the header, vertex_count defaults to 1 + the largest id used.

Report format (write, parse for labeling documents)
    JSON object with a fixed envelope and a kind-specific payload:
        report_version   schema revision, currently 1
        tool_version     package version that produced the report
        input_digest     "sha256:..." over the source text when the caller
                         provides one, otherwise over the canonical payload
        kind             "labeling" | "verify-report" | "search-outcome"
    kind "labeling": family (null or {cycle_order, path_order}), edge_count,
        labels (vertex-id order), weights (edge order), ok.
    kind "verify-report": ok, violations (list of {kind, ...} objects using
        the tags from labeling.VIOLATION_KINDS).
    kind "search-outcome": verdict, nodes_explored, solutions_found, labels
        (null unless a labeling was found), odd_cycle_witness, deterministic.
    Keys are sorted and the encoder is deterministic, so equal inputs give
    byte-identical reports.

DOT (write): undirected graph; node text is the vertex label when a labeling
is supplied (bare ids otherwise) and edge text is the induced weight.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass

from ._version import __version__
from .errors import IncompleteLabelingError, ParseError
from .graph import Graph
from .labeling import (
    VIOLATION_KINDS,
    Labeling,
    VerifyReport,
    edge_weights,
)
from .search import SearchOutcome

REPORT_VERSION = 1


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; malformed lines raise ParseError with the
    line number, structural problems (self-loops, duplicates, ids beyond the
    declared vertex count) raise ValidationError."""
    vertex_count: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if vertex_count is not None or edges:
                raise ParseError("header must be the first content line", line_no)
            if len(parts) != 2:
                raise ParseError("header form is 'graph <vertex_count>'", line_no)
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", line_no) from None
            continue
        if len(parts) != 2:
            raise ParseError(f"expected two endpoints, got {line!r}", line_no)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"endpoints must be integers, got {line!r}", line_no) from None
        edges.append((a, b))
    if vertex_count is None:
        vertex_count = 1 + max((max(a, b) for a, b in edges), default=-1)
    return Graph(vertex_count, tuple(edges))


def emit_edge_list(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LabelingDocument:
    """Self-describing record of one labeling: which family it came from (if
    any), the labels in vertex-id order, the induced weights in edge order,
    and the verifier verdict."""

    family: tuple[int, int] | None
    edge_count: int
    labels: tuple[int, ...]
    weights: tuple[int, ...]
    ok: bool


def build_labeling_document(
    g: Graph,
    labeling: Labeling,
    ok: bool,
    family: tuple[int, int] | None = None,
) -> LabelingDocument:
    weights = tuple(w for _, w in edge_weights(g, labeling))
    return LabelingDocument(family, g.edge_count, tuple(labeling.labels), weights, ok)


def parse_labeling_document(text: str) -> LabelingDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or doc.get("kind") != "labeling":
        raise ParseError("expected a report of kind 'labeling'")
    try:
        raw_family = doc["family"]
        family = None
        if raw_family is not None:
            family = (int(raw_family["cycle_order"]), int(raw_family["path_order"]))
        return LabelingDocument(
            family,
            int(doc["edge_count"]),
            tuple(int(x) for x in doc["labels"]),
            tuple(int(w) for w in doc["weights"]),
            bool(doc["ok"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed labeling document: {exc}") from None


def emit_report(
    payload: VerifyReport | SearchOutcome | LabelingDocument,
    source_text: str | None = None,
) -> str:
    """Serialize a report; byte-stable for equal inputs within a release."""
    body = _payload_body(payload)
    canonical = json.dumps(body, sort_keys=True, separators=(",", ":"))
    digest_input = canonical if source_text is None else source_text
    digest = hashlib.sha256(digest_input.encode()).hexdigest()
    doc = {
        "report_version": REPORT_VERSION,
        "tool_version": __version__,
        "input_digest": f"sha256:{digest}",
        **body,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def emit_dot(g: Graph, labeling: Labeling | None = None) -> str:
    """Render the graph in DOT, with labels on nodes and weights on edges when
    a labeling is given."""
    if labeling is not None and len(labeling.labels) != g.vertex_count:
        raise IncompleteLabelingError(
            f"labeling covers {len(labeling.labels)} vertices, graph has {g.vertex_count}"
        )
    lines = ["graph G {"]
    for v in range(g.vertex_count):
        if labeling is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{labeling.labels[v]}"];')
    for a, b in g.edges:
        if labeling is None:
            lines.append(f"  {a} -- {b};")
        else:
            lines.append(f'  {a} -- {b} [label="{abs(labeling.labels[a] - labeling.labels[b])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _payload_body(payload) -> dict:
    if isinstance(payload, LabelingDocument):
        family = None
        if payload.family is not None:
            family = {"cycle_order": payload.family[0], "path_order": payload.family[1]}
        return {
            "kind": "labeling",
            "family": family,
            "edge_count": payload.edge_count,
            "labels": list(payload.labels),
            "weights": list(payload.weights),
            "ok": payload.ok,
        }
    if isinstance(payload, VerifyReport):
        violations = []
        for violation in payload.violations:
            entry = {"kind": VIOLATION_KINDS[type(violation)]}
            entry.update(_jsonable(dataclasses.asdict(violation)))
            violations.append(entry)
        return {"kind": "verify-report", "ok": payload.ok, "violations": violations}
    if isinstance(payload, SearchOutcome):
        return {
            "kind": "search-outcome",
            "verdict": payload.verdict.value,
            "nodes_explored": payload.nodes_explored,
            "solutions_found": payload.solutions_found,
            "labels": list(payload.labeling.labels) if payload.labeling else None,
            "odd_cycle_witness": list(payload.odd_cycle_witness)
            if payload.odd_cycle_witness
            else None,
            "deterministic": payload.deterministic,
        }
    raise TypeError(f"cannot serialize {type(payload).__name__} as a report")


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value
