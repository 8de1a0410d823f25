"""

Certify weak modularity of Coxeter complex skeleta and A~3 buildings on finite balls.

Usage: python verify.py verify --model lattice --n 4 --radius 3 --checks triangle,quadrangle

"""

import sys

from verifier_cli import main


if __name__ == "__main__":
    sys.exit(main())
