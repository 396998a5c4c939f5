"""fastga-bench package.

This package provides:
- The (1+(lambda,lambda)) GA with static, fitness-dependent, one-fifth and
  heavy-tailed population sizes, plus RLS and the (1+1) EA
- OneMax and planted MAX-3SAT with incremental patch evaluation
- Executable forms of the progress and runtime bounds
- A seeded experiment harness with CSV output
"""

__version__ = "0.3.0"
