import sys

from modbraid.controllers.cli_controller import main

if __name__ == "__main__":
    sys.exit(main())
