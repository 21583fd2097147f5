from flagdesigns.cli import main

raise SystemExit(main())
