"""Run every acceptance criterion and print one PASS/FAIL line each.

    python3 scripts/reproduce_acceptance.py [--only 3 8 10]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
import test_acceptance  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    args = ap.parse_args()
    checks = sorted((name, fn) for name, fn in vars(test_acceptance).items() if name.startswith("test_c"))
    failed = 0
    for name, fn in checks:
        if args.only and int(name[6:8]) not in args.only:
            continue
        try:
            fn()
        except AssertionError:
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
