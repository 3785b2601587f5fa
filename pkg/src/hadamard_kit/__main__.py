import sys

from hadamard_kit.cli import main

sys.exit(main())
