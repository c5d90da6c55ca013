import sys

from patternmap.cli.main import main

sys.exit(main())
