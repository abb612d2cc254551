"""Main entry point for the verification harness."""

import sys
from typing import List

from harness.cli import main as cli_main


def main(argv: List[str]) -> int:
    """Point d'entrée principal. Retourne un code de sortie."""
    return cli_main(argv[1:])


if __name__ == "__main__":
    sys.exit(main(sys.argv))
