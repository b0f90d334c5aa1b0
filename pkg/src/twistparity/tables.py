"""Local invariant tables and their plain-text format.

One entry per line::

    family place ord_residue unit_or_sign bit

``place`` is a prime or ``inf``; at ``inf`` the ord field is ``-`` and the
last key field is ``+`` or ``-``.  ``#`` starts a comment.  A quadratic
fixture may carry one extra ``quadratic base - - <bit>`` line holding the
parity of the untwisted curve.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import IncompleteFixture, InvalidInput, TableParseError
from .residues import DEGREE, INF, PlaceClassKey, all_keys, unit_class_table

_SIGNS = {"+": 1, "-": -1, "−": -1}


@dataclass(frozen=True)
class LocalInvariantTable:
    family: str
    entries: dict = field(hash=False)  # PlaceClassKey -> bit
    base_parity: int | None = None

    @property
    def places(self) -> tuple:
        ps = {k.place for k in self.entries}
        return tuple(sorted(p for p in ps if p != INF)) + ((INF,) if INF in ps else ())

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, key: PlaceClassKey) -> int:
        try:
            return self.entries[key]
        except KeyError:
            raise IncompleteFixture(f"no {self.family} entry for {format_key(key)}") from None

    def lookup(self, key: PlaceClassKey) -> int:
        return self[key]


def format_key(key: PlaceClassKey) -> str:
    if key.is_real:
        return f"inf - {'+' if key.unit > 0 else '-'}"
    return f"{key.place} {key.ord_residue} {key.unit}"


def _parse_line(fields, lineno):
    if len(fields) != 5:
        raise TableParseError(f"expected 5 fields, got {len(fields)}", lineno)
    family, place, ordr, unit, bit = fields
    if family not in DEGREE:
        raise TableParseError(f"unknown family {family!r}", lineno)
    if bit not in ("0", "1"):
        raise TableParseError(f"bit must be 0 or 1, got {bit!r}", lineno)
    if place == "base":
        if family != "quadratic" or ordr != "-" or unit != "-":
            raise TableParseError("base line must read 'quadratic base - - <bit>'", lineno)
        return family, None, int(bit)
    if place == INF:
        if ordr != "-" or unit not in _SIGNS:
            raise TableParseError("real place needs '- +' or '- -'", lineno)
        return family, PlaceClassKey(INF, None, _SIGNS[unit]), int(bit)
    try:
        p, o, u = int(place), int(ordr), int(unit)
    except ValueError:
        raise TableParseError("place, ord_residue and unit must be integers", lineno) from None
    try:
        reps = unit_class_table(p, family).representatives
    except InvalidInput as exc:
        raise TableParseError(str(exc), lineno) from None
    if not 0 <= o < DEGREE[family]:
        raise TableParseError(f"ord_residue {o} out of range for {family}", lineno)
    if u not in reps:
        raise TableParseError(f"{u} is not a listed unit representative at {p}", lineno)
    return family, PlaceClassKey(p, o, u), int(bit)


def load_table(source: str) -> LocalInvariantTable:
    """Parse table text; the result is total at every place it mentions."""
    entries, family, base = {}, None, None
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fam, key, bit = _parse_line(line.split(), lineno)
        if family is None:
            family = fam
        elif fam != family:
            raise TableParseError(f"mixed families {family} and {fam}", lineno)
        if key is None:
            if base is not None:
                raise TableParseError("duplicate base line", lineno)
            base = bit
            continue
        if key in entries:
            raise TableParseError(f"duplicate key {format_key(key)}", lineno)
        entries[key] = bit
    if not entries:
        raise IncompleteFixture("table has no entries")
    table = LocalInvariantTable(family, entries, base)
    missing = [format_key(k) for v in table.places for k in all_keys(v, family) if k not in entries]
    if missing:
        raise IncompleteFixture(f"{family} table is missing keys: {', '.join(missing)}")
    return table


def dump_table(table: LocalInvariantTable) -> str:
    lines = []
    if table.base_parity is not None:
        lines.append(f"{table.family} base - - {table.base_parity}")
    for v in table.places:
        for key in all_keys(v, table.family):
            lines.append(f"{table.family} {format_key(key)} {table.entries[key]}")
    return "\n".join(lines) + "\n"


def _row_bits(table, place, ordr):
    return [table.entries[k] for k in all_keys(place, table.family) if k.ord_residue == ordr]


def _check_structure(table):
    # whole rows of the printed tables that must be constant
    if table.family == "quartic":
        rows = {(2, 1): 0, (2, 3): 1}
        size = 4 * 8 + 2
    else:
        rows = {(2, 1): 1, (2, 3): 1, (2, 4): 1, (2, 5): 1}
        size = 6 * 4 + 6 * 6 + 2
    if len(table) != size:
        raise AssertionError(f"built-in {table.family} table has {len(table)} entries, expected {size}")
    for (place, ordr), bit in rows.items():
        if set(_row_bits(table, place, ordr)) != {bit}:
            raise AssertionError(f"{table.family} row ord {ordr} at {place} is not constantly {bit}")


@lru_cache(maxsize=None)
def builtin_table(family: str) -> LocalInvariantTable:
    if family not in ("quartic", "sextic"):
        raise InvalidInput(f"no built-in table for family {family!r}")
    text = resources.files(__package__).joinpath("data", f"{family}.txt").read_text()
    table = load_table(text)
    _check_structure(table)
    return table


def diff_tables(expected: LocalInvariantTable, actual: LocalInvariantTable) -> list[str]:
    """One line per key whose bit differs (or that only one side has)."""
    out = []
    for key in sorted(set(expected.entries) | set(actual.entries), key=_sort_key):
        a, b = expected.entries.get(key), actual.entries.get(key)
        if a != b:
            out.append(f"{expected.family} {format_key(key)}: expected {a} got {b}")
    if expected.base_parity != actual.base_parity:
        out.append(f"base parity: expected {expected.base_parity} got {actual.base_parity}")
    return out


def _sort_key(k):
    return (k.is_real, 0 if k.is_real else k.place, -1 if k.ord_residue is None else k.ord_residue, -k.unit if k.is_real else k.unit)
