import sys

from fubini.cli import main

sys.exit(main())
