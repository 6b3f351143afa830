import sys

from groundkernel.cli import main

sys.exit(main())
