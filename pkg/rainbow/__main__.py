"""Allow ``python -m rainbow``."""

from rainbow.cli.main import main

raise SystemExit(main())
