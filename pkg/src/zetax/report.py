"""Verification reports: claims compared against printed values, with JSON/CSV/text output."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from mpmath import mp, mpf

from .numerics import CertifiedReal

CONFIRMED = "CONFIRMED"
DISCREPANT = "DISCREPANT"
UNVERIFIED = "UNVERIFIED"
STATUSES = (CONFIRMED, DISCREPANT, UNVERIFIED)

# approx: |computed - printed| <= tol over the whole enclosure
# le / ge / lt / gt: the enclosure satisfies the printed inequality (with tol slack for le/ge)
# trunc4: the whole enclosure truncated to 4 decimals is within tol of the printed one
RELATIONS = ("approx", "le", "ge", "lt", "gt", "trunc4", "none")

CSV_COLUMNS = ("section", "id", "paper_location", "paper_value", "computed_value", "radius",
               "status", "relation", "tolerance", "audit", "note")


@dataclass
class Claim:
    id: str
    paper_location: str
    paper_value: str
    computed_value: str
    radius: str
    status: str
    relation: str = "approx"
    tolerance: str = "0"
    note: str = ""
    audit: bool = False

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")


def _fmt(x, digits: int) -> str:
    return mp.nstr(mpf(x), digits, strip_zeros=False) if x is not None else ""


def _truncate4(x):
    x = mpf(x)
    return mp.sign(x) * mp.floor(abs(x) * 10000) / 10000


def judge(relation: str, printed, computed: CertifiedReal, tol) -> str:
    p, tol = mpf(printed), mpf(tol)
    c = computed
    if relation == "approx":
        ok = abs(c.value - p) + c.radius <= tol
    elif relation == "le":
        ok = c.upper <= p + tol
    elif relation == "ge":
        ok = c.lower >= p - tol
    elif relation == "lt":
        ok = c.upper < p
    elif relation == "gt":
        ok = c.lower > p
    elif relation == "trunc4":
        slack = tol * (1 + mpf("1e-9"))
        ok = all(abs(_truncate4(x) - p) <= slack for x in (c.lower, c.value, c.upper))
    else:
        raise ValueError(f"cannot judge relation {relation!r}")
    return CONFIRMED if ok else DISCREPANT


def make_claim(id: str, location: str, printed, computed: CertifiedReal, relation: str = "approx",
               tol="1e-5", note: str = "", audit: bool = False, digits: int = 20) -> Claim:
    """Build a claim and decide its status from the certified value."""
    return Claim(
        id=id,
        paper_location=location,
        paper_value=str(printed),
        computed_value=_fmt(computed.value, digits),
        radius=mp.nstr(computed.radius, 3),
        status=judge(relation, printed, computed, tol),
        relation=relation,
        tolerance=str(tol),
        note=note,
        audit=audit,
    )


def open_claim(id: str, location: str, statement: str, note: str) -> Claim:
    return Claim(id=id, paper_location=location, paper_value=statement, computed_value="",
                 radius="", status=UNVERIFIED, relation="none", note=note)


@dataclass
class Section:
    name: str
    claims: list = field(default_factory=list)
    values: dict = field(default_factory=dict)
    table: list = field(default_factory=list)


@dataclass
class ReportDocument:
    sections: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def all_claims(self):
        for s in self.sections:
            yield from ((s.name, c) for c in s.claims)

    def validate(self):
        seen = set()
        for _, c in self.all_claims():
            if c.id in seen:
                raise ValueError(f"duplicate claim id {c.id!r}")
            seen.add(c.id)

    def sort(self):
        for s in self.sections:
            s.claims.sort(key=lambda c: c.id)

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for _, c in self.all_claims():
            out[c.status] += 1
        return out

    def exit_code(self, allow_open: bool = False) -> int:
        """0 when nothing blocks: audited errata and (optionally) open claims are tolerated."""
        for _, c in self.all_claims():
            if c.status == DISCREPANT and not c.audit:
                return 1
            if c.status == UNVERIFIED and not allow_open:
                return 1
        return 0

    def to_dict(self) -> dict:
        return {"meta": self.meta, "sections": [asdict(s) for s in self.sections]}

    @classmethod
    def from_dict(cls, doc: dict) -> "ReportDocument":
        sections = [Section(name=s["name"], claims=[Claim(**c) for c in s["claims"]],
                            values=s.get("values", {}), table=s.get("table", []))
                    for s in doc["sections"]]
        return cls(sections=sections, meta=doc.get("meta", {}))


def to_json(doc: ReportDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> ReportDocument:
    return ReportDocument.from_dict(json.loads(text))


def to_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(CSV_COLUMNS)
    for name, c in doc.all_claims():
        w.writerow([name, c.id, c.paper_location, c.paper_value, c.computed_value, c.radius,
                    c.status, c.relation, c.tolerance, str(c.audit).lower(), c.note])
    return buf.getvalue()


def table_csv(section: Section) -> str:
    buf = io.StringIO()
    if not section.table:
        return ""
    cols = list(section.table[0].keys())
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\r\n")
    w.writeheader()
    w.writerows(section.table)
    return buf.getvalue()


def to_text(doc: ReportDocument) -> str:
    lines = []
    for s in doc.sections:
        lines.append(f"== {s.name} ==")
        for k, v in s.values.items():
            lines.append(f"  {k}: {v}")
        if s.table:
            cols = list(s.table[0].keys())
            widths = [max(len(c), *(len(str(r[c])) for r in s.table)) for c in cols]
            lines.append("  " + "  ".join(c.ljust(wd) for c, wd in zip(cols, widths)))
            for r in s.table:
                lines.append("  " + "  ".join(str(r[c]).ljust(wd) for c, wd in zip(cols, widths)))
        for c in s.claims:
            mark = c.status + (" (audit)" if c.audit else "")
            shown = c.computed_value or "-"
            lines.append(f"  [{mark}] {c.id}: printed {c.paper_value} ({c.relation}), "
                         f"computed {shown} +- {c.radius or '-'}")
            if c.note:
                lines.append(f"      note: {c.note}")
    counts = doc.counts()
    lines.append("summary: " + ", ".join(f"{k} {v}" for k, v in counts.items()))
    return "\n".join(lines) + "\n"
