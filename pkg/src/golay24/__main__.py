import sys

from golay24.cli import main

sys.exit(main())
