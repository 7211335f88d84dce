"""Sweep the construction over a parameter grid and tabulate verify reports.

Shows where the guarantees hold and where they break: for k >= 2 the
mixed double runs start appearing at n >= 2 even though the length,
repeat, and multiplicity claims still hold.
"""

import argparse

from wordpat.construction import verify
from wordpat.guards import GuardExceeded


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--guard", type=int, default=100_000)
    args = ap.parse_args()

    print(f"{'n':>2} {'k':>2} {'length':>7} {'repeats':>7} {'ok':>5}  failing")
    for n in range(1, args.max_n + 1):
        for k in range(1, args.max_k + 1):
            try:
                rep = verify(n, k, guard=args.guard)
            except GuardExceeded:
                print(f"{n:>2} {k:>2} {'-':>7} {'-':>7} {'skip':>5}  over guard")
                continue
            failing = ",".join(name for name, ok in rep.avoided.items() if not ok)
            print(
                f"{n:>2} {k:>2} {rep.length:>7} {rep.repeats:>7} "
                f"{str(rep.ok):>5}  {failing or '-'}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
