"""Allow ``python -m hurwitznum`` as an alias for the ``hurwitz`` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
