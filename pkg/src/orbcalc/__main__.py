"""Allow ``python -m orbcalc`` to behave like the ``orbcalc`` script."""

import sys

from .cli import main

sys.exit(main())
