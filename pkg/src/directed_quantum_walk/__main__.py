"""Entry point for `python -m directed_quantum_walk`."""
import sys

from directed_quantum_walk.cli.command_line import main

if __name__ == "__main__":
    sys.exit(main())
