"""DIMACS CNF import and export of 3-SAT instances."""

import logging
from pathlib import Path

import numpy as np

from ..utils.errors import InvalidParameterError
from .maxsat import CLAUSE_WIDTH, SatInstance

logger = logging.getLogger(__name__)


def to_dimacs(instance: SatInstance, comment: str | None = None) -> str:
    """Render `instance` as DIMACS CNF text.

    Variables are written 1-based, negated literals with a minus sign, and each
    clause is terminated by 0.
    """
    literals = (instance.clause_vars + 1) * np.where(instance.clause_signs, 1, -1)
    lines = []
    if comment:
        lines.extend(f"c {line}" for line in comment.splitlines())
    lines.append(f"p cnf {instance.n} {instance.m}")
    lines.extend(" ".join(str(int(lit)) for lit in row) + " 0" for row in literals)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> SatInstance:
    """Parse DIMACS CNF text holding a 3-CNF formula.

    Clauses may span lines; every clause must have exactly three literals.

    Raises:
        InvalidParameterError: On a missing or malformed header, a clause that
            is not 3 literals wide, an out-of-range variable, or a clause count
            that disagrees with the header.
    """
    header: tuple[int, int] | None = None
    tokens: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InvalidParameterError(f"Malformed DIMACS header: {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError as e:
                raise InvalidParameterError(
                    f"Malformed DIMACS header: {line!r}"
                ) from e
            continue
        if header is None:
            raise InvalidParameterError("Clause data before the 'p cnf' header")
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError as e:
            raise InvalidParameterError(
                f"Non-integer literal in DIMACS line: {line!r}"
            ) from e
    if header is None:
        raise InvalidParameterError("Missing 'p cnf' header")

    n, m = header
    rows: list[list[int]] = []
    clause: list[int] = []
    for lit in tokens:
        if lit == 0:
            if len(clause) != CLAUSE_WIDTH:
                raise InvalidParameterError(
                    f"Clause {len(rows) + 1} has {len(clause)} literals, expected 3"
                )
            rows.append(clause)
            clause = []
        elif abs(lit) > n:
            raise InvalidParameterError(f"Literal {lit} exceeds variable count {n}")
        else:
            clause.append(lit)
    if clause:
        raise InvalidParameterError("Last clause is not terminated by 0")
    if len(rows) != m:
        raise InvalidParameterError(f"Header declares {m} clauses, found {len(rows)}")

    literals = np.array(rows, dtype=np.int64).reshape(-1, CLAUSE_WIDTH)
    instance = SatInstance(n, np.abs(literals) - 1, literals > 0)
    if not instance.is_planted():
        logger.warning("Loaded formula is not satisfied by the all-ones assignment")
    return instance


def write_dimacs(instance: SatInstance, path: Path, comment: str | None = None) -> None:
    """Write `instance` to `path` in DIMACS CNF format."""
    with path.open("w", encoding="utf-8") as f:
        f.write(to_dimacs(instance, comment))


def read_dimacs(path: Path) -> SatInstance:
    """Read a 3-CNF formula from a DIMACS file."""
    with path.open(encoding="utf-8") as f:
        return parse_dimacs(f.read())
