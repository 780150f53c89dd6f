import sys

from kpell.cli import main

sys.exit(main())
