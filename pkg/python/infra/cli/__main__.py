"""Allow running the CLI as a module: python -m python.infra.cli"""

import sys

from python.infra.cli.cli import main

if __name__ == "__main__":
    sys.exit(main())
