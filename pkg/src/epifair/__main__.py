import sys

from epifair.cli import main

sys.exit(main())
