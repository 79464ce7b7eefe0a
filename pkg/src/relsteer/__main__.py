import sys

from relsteer.cli import main

sys.exit(main())
