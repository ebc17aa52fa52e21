import sys

from .apis import main


if __name__ == "__main__":
    sys.exit(main())
