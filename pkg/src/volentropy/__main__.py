"""Allow `python -m volentropy`."""

import sys

from .cli import main

sys.exit(main())
