"""Aggregation of run records into summary rows."""

import math
from collections import defaultdict

from ..models.run_record import RunRecord, SummaryRow


def summarize(records: list[RunRecord]) -> list[SummaryRow]:
    """Group records by (algorithm, problem, n) and aggregate each group.

    The mean of evaluations/n is the integer sum of evaluations divided once,
    and the standard deviation is the sample one (divisor runs - 1), computed
    from exact integer moments. A group with a single run has deviation 0.

    Args:
        records: Run records in any order.

    Returns:
        One SummaryRow per group, sorted by (algorithm, problem, n).
    """
    groups: dict[tuple[str, str, int], list[RunRecord]] = defaultdict(list)
    for record in records:
        groups[(record.algorithm, record.problem, record.n)].append(record)

    rows: list[SummaryRow] = []
    for (algorithm, problem, n), group in sorted(groups.items()):
        runs = len(group)
        total = sum(r.evaluations for r in group)
        squares = sum(r.evaluations * r.evaluations for r in group)
        if runs > 1:
            spread = runs * squares - total * total
            std = math.sqrt(spread / (runs * (runs - 1) * n * n))
        else:
            std = 0.0
        rows.append(
            SummaryRow(
                algorithm=algorithm,
                problem=problem,
                n=n,
                runs=runs,
                mean_evals_per_n=total / (runs * n),
                std_evals_per_n=std,
                mean_iterations=sum(r.iterations for r in group) / runs,
            )
        )
    return rows
