#!/usr/bin/env python3
"""Run the full verification battery and print a one-line summary per claim.

Covers every certificate family: the symbolic minor identity for orders
2..8, the reduced-case and lemma suites, the specialization values, the
rank-one equality (exact and float), the accretive suite, and the complex
diagnostic.  Exits nonzero if any claim fails.
"""

import sys

from minorcert import cli


def main() -> int:
    batches = [
        *(
            ["verify", "johnson", "--mode", "symbolic", "--n", str(n)]
            for n in range(2, 9)
        ),
        ["verify", "johnson", "--mode", "numeric", "--n", "12", "--trials", "100"],
        ["verify", "lemmas", "--n", "8", "--trials", "50"],
        *(["verify", "specialization", "--m", str(m)] for m in range(2, 8)),
        ["verify", "bt", "--dim", "6", "--trials", "50", "--scalar", "rat"],
        ["verify", "bt", "--dim", "10", "--trials", "100", "--scalar", "real"],
        ["verify", "accretive", "--dim", "8", "--trials", "200"],
        ["repro", "remark45"],
    ]
    worst = 0
    for argv in batches:
        print(f"$ minorcert {' '.join(argv)}")
        rc = cli.main(argv + ["--format", "text-summary"])
        worst = max(worst, rc)
        print()
    print("overall:", "all claims verified" if worst == 0 else f"failures (exit {worst})")
    return worst


if __name__ == "__main__":
    sys.exit(main())
