import sys

from kr_crystals.cli import main

sys.exit(main())
