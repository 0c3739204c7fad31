import sys

from lie_sdit.cli import main

sys.exit(main())
