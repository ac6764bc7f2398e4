"""Print every worked-example check with its expected and computed value."""

import sys
import time

from permcheck.verify import verify_paper


def main() -> int:
    t0 = time.perf_counter()
    res = verify_paper(sweep_max_order=int(sys.argv[1]) if len(sys.argv) > 1 else 16)
    width = max(len(c.id) for c in res.checks)
    for c in res.checks:
        print(f"{'ok  ' if c.passed else 'FAIL'} {c.id:<{width}}  {c.actual}")
    s = res.summary
    print(f"\n{s['passed']}/{s['total']} in {time.perf_counter() - t0:.1f}s")
    return 0 if res.ok else 3


if __name__ == "__main__":
    raise SystemExit(main())
