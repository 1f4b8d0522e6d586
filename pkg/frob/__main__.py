import sys

from frob.cli.main import main

sys.exit(main())
