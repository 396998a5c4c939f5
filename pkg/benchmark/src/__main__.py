"""Enable running the benchmark as a module via python -m src."""

import sys

from .main import main

if __name__ == "__main__":
    sys.exit(main())
