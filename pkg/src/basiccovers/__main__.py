import sys

from basiccovers.cli import main

sys.exit(main())
