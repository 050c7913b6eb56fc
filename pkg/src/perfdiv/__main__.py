from perfdiv.cli import main

raise SystemExit(main())
