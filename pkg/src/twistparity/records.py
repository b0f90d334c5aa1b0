"""JSON-lines classification records and rank fixture files."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_rational, power_free_representative
from .errors import InvalidInput, TableParseError
from .parity import LocalTerm, ParityBreakdown
from .residues import DEGREE, PlaceClassKey


@dataclass(frozen=True)
class ClassificationRecord:
    family: str
    input: str
    breakdown: ParityBreakdown | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        if self.breakdown is None:
            return {"family": self.family, "input": self.input, "error": self.error}
        b = self.breakdown
        return {
            "family": self.family,
            "input": self.input,
            "numerator": b.d.numerator,
            "denominator": b.d.denominator,
            "representative": b.representative,
            "terms": [
                {
                    "name": t.name,
                    "place": t.key.place,
                    "ord_residue": t.key.ord_residue,
                    "unit_or_sign": t.key.unit,
                    "bit": t.bit,
                }
                for t in b.terms
            ],
            "character": b.character,
            "support": list(b.support),
            "character_bit": b.character_bit,
            "base_parity": b.base_parity,
            "total": b.total,
            "parity": b.parity,
            "conjectural": b.conjectural,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "ClassificationRecord":
        if "error" in obj:
            return cls(obj["family"], obj["input"], None, obj["error"])
        terms = tuple(
            LocalTerm(t["name"], PlaceClassKey(t["place"], t["ord_residue"], t["unit_or_sign"]), t["bit"])
            for t in obj["terms"]
        )
        b = ParityBreakdown(
            family=obj["family"],
            d=Fraction(obj["numerator"], obj["denominator"]),
            representative=obj["representative"],
            terms=terms,
            character=obj["character"],
            support=tuple(obj["support"]),
            character_bit=obj["character_bit"],
            base_parity=obj["base_parity"],
            conjectural=obj["conjectural"],
        )
        if b.total != obj["total"] or b.parity != obj["parity"]:
            raise InvalidInput("record total does not match its own terms")
        return cls(obj["family"], obj["input"], b)

    @classmethod
    def from_json(cls, line: str) -> "ClassificationRecord":
        return cls.from_dict(json.loads(line))


def record_for(breakdown: ParityBreakdown, text: str | None = None) -> ClassificationRecord:
    return ClassificationRecord(breakdown.family, text or format_rational(breakdown.d), breakdown)


def crosscheck_row_dict(row) -> dict:
    r = row.report
    return {
        "d": row.d,
        "formula": row.formula,
        "oracle": row.oracle,
        "agree": row.agree,
        "phi_selmer_rank": r.phi_selmer_rank,
        "phihat_selmer_rank": r.phihat_selmer_rank,
        "surviving": list(r.surviving),
        "surviving_dual": list(r.surviving_dual),
    }


@dataclass(frozen=True)
class RankFixture:
    family: str
    provenance: str
    rows: tuple[tuple[int, int], ...]


def parse_rank_fixture(text: str, family: str) -> RankFixture:
    """Lines ``d rank``; a ``# provenance: ...`` comment line is mandatory."""
    n = DEGREE.get(family)
    if n is None:
        raise InvalidInput(f"unknown family {family!r}")
    provenance, rows, seen = None, [], set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.lower().startswith("provenance:") and provenance is None:
                provenance = body.split(":", 1)[1].strip()
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise TableParseError("expected 'd rank'", lineno)
        try:
            d, rank = int(parts[0]), int(parts[1])
        except ValueError:
            raise TableParseError("d and rank must be integers", lineno) from None
        if d == 0 or rank < 0:
            raise TableParseError("need d != 0 and rank >= 0", lineno)
        if power_free_representative(d, n) != d:
            raise TableParseError(f"{d} is not {n}th-power-free", lineno)
        if d in seen:
            raise TableParseError(f"duplicate d = {d}", lineno)
        seen.add(d)
        rows.append((d, rank))
    if provenance is None:
        raise TableParseError("missing '# provenance:' line")
    return RankFixture(family, provenance, tuple(rows))

