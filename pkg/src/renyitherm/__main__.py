from renyitherm.cli import main
import sys

sys.exit(main())
