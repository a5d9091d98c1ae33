"""Requirement matching and deployment wiring tables.

A requirement names the external port count P, the switch radix R, and
the tolerable oversubscription phi.  Against a solution store, every
record (d, m) offers E = R - m free ports per switch, hence P' = 2^d E
external ports at phi' = E/b; the designer scores records by weighted
relative error against the request and emits the per-switch wiring for
the winner.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import IO

from .errors import DomainError
from .graph import GeneratorSet, hex_width, neighbors
from .soldb import SolutionDB, SolutionRecord

DEFAULT_WEIGHTS = (Fraction(7, 10), Fraction(3, 10))


def oversubscription(E: int, b: int) -> Fraction:
    """phi = E/b: free ports per switch over per-node bisection."""
    if b <= 0:
        raise DomainError("oversubscription needs b > 0")
    return Fraction(E, b)


@dataclass(frozen=True)
class DesignChoice:
    """A scored match between a requirement and a stored record."""

    record: SolutionRecord
    radix: int
    free_ports: int
    ports: int
    phi: Fraction
    score: Fraction

    @property
    def d(self) -> int:
        return self.record.d

    @property
    def m(self) -> int:
        return self.record.m


def find_solution(
    db: SolutionDB,
    ports: int,
    radix: int,
    phi: Fraction = Fraction(1),
    at_least_ports: bool = False,
    weights: tuple[Fraction, Fraction] = DEFAULT_WEIGHTS,
) -> DesignChoice:
    """Best stored record for (ports, radix, phi), by weighted error.

    Scores wP * |P'-P|/P + wPhi * |phi'-phi|/phi over all records with
    m < radix; at_least_ports additionally drops records below the
    requested port count.  Ties go to the smaller network, then to the
    smaller hop count (scan order makes that the first minimum seen).
    """
    if ports < 1:
        raise DomainError("target port count must be at least 1")
    if radix < 2:
        raise DomainError("radix must be at least 2")
    if phi <= 0:
        raise DomainError("target oversubscription must be positive")
    w_ports, w_phi = (Fraction(w) for w in weights)
    if w_ports < 0 or w_phi < 0 or w_ports + w_phi != 1:
        raise DomainError("weights must be nonnegative and sum to 1")
    if len(db) == 0:
        raise DomainError("solution store is empty")

    best: DesignChoice | None = None
    for rec in db.records():
        E = radix - rec.m
        if E <= 0 or rec.b < 1:
            continue
        achieved_ports = rec.n * E
        if at_least_ports and achieved_ports < ports:
            continue
        achieved_phi = oversubscription(E, rec.b)
        err_ports = Fraction(abs(achieved_ports - ports), ports)
        err_phi = abs(achieved_phi - phi) / phi
        score = w_ports * err_ports + w_phi * err_phi
        if best is None or score < best.score:
            best = DesignChoice(
                record=rec,
                radix=radix,
                free_ports=E,
                ports=achieved_ports,
                phi=achieved_phi,
                score=score,
            )
    if best is None:
        raise DomainError(
            "no stored record is admissible for this requirement"
        )
    return best


class WiringTable:
    """Per-switch port assignments: row v, port s holds peer v XOR h_s.

    Both ends of a cable use the same port number, so row x lists y at
    port s exactly when row y lists x there.  Ports past m are free for
    external attachment and render as `**`.
    """

    def __init__(self, gens: GeneratorSet, radix: int):
        if radix <= gens.m:
            raise DomainError(
                f"radix {radix} leaves no free ports over m={gens.m} hops"
            )
        self.gens = gens
        self.radix = radix

    @property
    def n(self) -> int:
        return self.gens.n

    def row(self, v: int) -> list[int]:
        """Peer labels of node v in port order."""
        return neighbors(self.gens, v)

    def header(self) -> str:
        return "Sw/Pt:\t" + "\t".join(f"#{s}" for s in range(1, self.radix + 1))

    def line(self, v: int) -> str:
        w = hex_width(self.gens.d)
        cells = [f"{p:0{w}X}" for p in self.row(v)]
        cells.extend("**" for _ in range(self.radix - self.gens.m))
        return f"{v:X}:\t" + "\t".join(cells)

    def write(self, stream: IO[str], lo: int = 0, hi: int | None = None) -> None:
        """Stream header plus rows lo..hi (inclusive) in label order."""
        hi = self.n - 1 if hi is None else hi
        if not 0 <= lo <= hi < self.n:
            raise DomainError(f"row range {lo}..{hi} out of [0, {self.n - 1}]")
        stream.write(self.header() + "\n")
        for v in range(lo, hi + 1):
            stream.write(self.line(v) + "\n")


def wiring_table(rec: SolutionRecord, radix: int) -> WiringTable:
    """Wiring for a stored record at the given radix."""
    return WiringTable(rec.gens, radix)
