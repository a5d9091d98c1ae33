"""A small text-file store of verified hop-set solutions, keyed by (d, m).

Records carry measured metrics, never transcribed ones: every metric is
recomputed from the hop list on ingest, and `verify` can recheck the
whole store at any time.  The file format is line-oriented and diffable
so the seed set can live in version control.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import constructions
from .bisection import bisection_fwht
from .ecc import code_to_hops, load_code
from .errors import DomainError, FormatError
from .graph import GeneratorSet, distance_profile, hex_width

MIN_D, MAX_D = 3, 24
MAX_M = 256

REFERENCE_EXAMPLES = (
    (
        "reference example 1",
        GeneratorSet(5, (0x1, 0x2, 0x4, 0x8, 0x10, 0xE, 0xF, 0x14, 0x19)),
    ),
    (
        "reference example 2",
        GeneratorSet(
            8,
            (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80,
             0x1A, 0x2D, 0x47, 0x78, 0x7E, 0x8E, 0x9D, 0xB2, 0xD1, 0xFB),
        ),
    ),
    (
        "reference example 3",
        GeneratorSet(
            16,
            tuple(1 << j for j in range(16))
            + (0x06F2, 0x1BD0, 0x1F3D, 0x3D72, 0x6B64, 0x775C, 0x893A,
               0x8B81, 0x9914, 0xA4C2, 0xA750, 0xB70E, 0xBFF1, 0xC57D,
               0xD0A6, 0xD1CA, 0xE6B5, 0xEAB9, 0xF2E8, 0xF313, 0xF9BF,
               0xFC31),
        ),
    ),
)


@dataclass(frozen=True)
class SolutionRecord:
    """One verified solution: a hop set plus its measured metrics."""

    gens: GeneratorSet
    b: int
    diameter: int
    total: int
    provenance: str

    @property
    def d(self) -> int:
        return self.gens.d

    @property
    def m(self) -> int:
        return self.gens.m

    @property
    def n(self) -> int:
        return self.gens.n

    @property
    def avg(self) -> Fraction:
        """Average hop distance over all n nodes, root included."""
        return Fraction(self.total, self.n)


def make_record(gens: GeneratorSet, provenance: str) -> SolutionRecord:
    """Measure a hop set and wrap it as a record."""
    report = bisection_fwht(gens)
    prof = distance_profile(gens)
    return SolutionRecord(
        gens=gens,
        b=report.b,
        diameter=prof.diameter,
        total=prof.total,
        provenance=provenance,
    )


class SolutionDB:
    """In-memory (d, m) -> SolutionRecord map with text persistence."""

    def __init__(self):
        self._records: dict[tuple[int, int], SolutionRecord] = {}

    def __len__(self) -> int:
        return len(self._records)

    def add(self, rec: SolutionRecord, replace: bool = False) -> None:
        if not MIN_D <= rec.d <= MAX_D:
            raise DomainError(f"d={rec.d} outside store bounds [{MIN_D}, {MAX_D}]")
        if not rec.d <= rec.m <= MAX_M:
            raise DomainError(f"m={rec.m} outside store bounds [d, {MAX_M}]")
        key = (rec.d, rec.m)
        if key in self._records and not replace:
            raise DomainError(f"record (d={rec.d}, m={rec.m}) already present")
        self._records[key] = rec

    def query(self, d: int, m: int) -> SolutionRecord | None:
        """Exact-key lookup; absence is a normal outcome."""
        return self._records.get((d, m))

    def records(self) -> list[SolutionRecord]:
        """All records, ordered by (d, m)."""
        return [self._records[k] for k in sorted(self._records)]

    def verify(self) -> list[str]:
        """Recompute every record's metrics; return mismatch descriptions."""
        problems = []
        for rec in self.records():
            fresh = make_record(rec.gens, rec.provenance)
            for name in ("b", "diameter", "total"):
                got, want = getattr(rec, name), getattr(fresh, name)
                if got != want:
                    problems.append(
                        f"(d={rec.d}, m={rec.m}) {name}: stored {got}, "
                        f"recomputed {want}"
                    )
        return problems


def ingest_code_file(db: SolutionDB, path, provenance: str | None = None,
                     replace: bool = False) -> SolutionRecord:
    """Translate a generator-matrix file into a measured record and store it."""
    code = load_code(path)
    gens = code_to_hops(code)
    if provenance is None:
        provenance = f"code translation: {Path(path).name}"
    rec = make_record(gens, provenance)
    db.add(rec, replace=replace)
    return rec


def seed_reference_examples(db: SolutionDB) -> int:
    """Insert the three reference designs, metrics recomputed."""
    added = 0
    for provenance, gens in REFERENCE_EXAMPLES:
        if db.query(gens.d, gens.m) is None:
            db.add(make_record(gens, provenance))
            added += 1
    return added


def seed_defaults(db: SolutionDB) -> int:
    """Reference examples plus construction families for d up to 12.

    Construction rungs whose m exceeds the store bound are skipped, as
    is any (d, m) key already present (reference records win ties).
    """
    added = seed_reference_examples(db)
    families = []
    for d in range(3, 13):
        families.append(("hypercube", constructions.hypercube(d)))
        families.append(("folded cube", constructions.folded_cube(d)))
    for d in range(3, 13):
        for m in constructions.hd_ladder(d):
            if m <= MAX_M:
                families.append(("half-distance ladder", constructions.lh_hd(d, m)))
    for d in range(3, 13):
        families.append(("low-density b=3", constructions.low_density_b3(d)))
    for provenance, gens in families:
        if db.query(gens.d, gens.m) is None:
            db.add(make_record(gens, provenance))
            added += 1
    return added


def dumps(db: SolutionDB) -> str:
    """Render the whole store in the record-block text format."""
    blocks = []
    for rec in db.records():
        w = hex_width(rec.d)
        lines = [
            f"record d={rec.d} m={rec.m} b={rec.b} diam={rec.diameter} "
            f"avg={rec.total}/{rec.n} prov={rec.provenance}"
        ]
        lines.extend(f"{h:0{w}X}" for h in rec.gens.hops)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def loads(text: str) -> SolutionDB:
    """Parse the record-block format; structural checks only.

    Metric consistency is a verify() concern; here we only insist the
    stored average has the node count as its denominator.
    """
    db = SolutionDB()
    blocks = [blk for blk in text.split("\n\n") if blk.strip()]
    for blk in blocks:
        lines = [ln for ln in blk.splitlines() if ln.strip()]
        head = lines[0]
        if not head.startswith("record "):
            raise FormatError(f"expected a record header, got {head!r}")
        body, sep, prov = head[len("record "):].partition(" prov=")
        if not sep:
            raise FormatError(f"record header lacks prov=: {head!r}")
        fields = {}
        for token in body.split():
            key, eq, value = token.partition("=")
            if not eq:
                raise FormatError(f"bad header token {token!r}")
            fields[key] = value
        try:
            d = int(fields["d"])
            m = int(fields["m"])
            b = int(fields["b"])
            diam = int(fields["diam"])
            num, den = fields["avg"].split("/")
            total, n = int(num), int(den)
        except (KeyError, ValueError):
            raise FormatError(f"bad record header: {head!r}") from None
        if n != 1 << d:
            raise FormatError(f"avg denominator {n} is not 2^{d}")
        try:
            hops = tuple(int(ln.strip(), 16) for ln in lines[1:])
        except ValueError:
            raise FormatError(f"bad hop line in record (d={d}, m={m})") from None
        if len(hops) != m:
            raise FormatError(f"record (d={d}, m={m}) lists {len(hops)} hops")
        try:
            gens = GeneratorSet(d, hops)
        except DomainError as exc:
            raise FormatError(str(exc)) from None
        rec = SolutionRecord(
            gens=gens, b=b, diameter=diam, total=total, provenance=prov
        )
        db.add(rec)
    return db


def save(db: SolutionDB, path) -> None:
    Path(path).write_text(dumps(db))


def load(path) -> SolutionDB:
    return loads(Path(path).read_text())
