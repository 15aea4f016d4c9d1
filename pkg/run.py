import sys

from modbraid.controllers.cli_controller import main


if __name__ == "__main__":
    # Application Entry Point
    # -----------------------
    # 1. Load settings from the environment and .env
    # 2. Load the message catalog
    # 3. Parse argv and dispatch to the services; the exit code is the verdict
    sys.exit(main())
