"""Probe how tight the repeat threshold is at desk-scale parameters.

Reports, for small n and k: the best repeat count an avoider achieves
in exhaustive search (a lower bound on the true extremal value), the
construction's repeat count, and the forcing threshold.  Bounds, never
answers: the gap between them is the open part.
"""

import argparse

from wordpat.construction import build
from wordpat.guards import GuardExceeded
from wordpat.oracle import check_unavoidability_balanced, max_repeats_avoiding
from wordpat.words import format_word, repeats


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--max-values", type=int, default=3)
    args = ap.parse_args()

    print("n=1 searches (exhaustive over few-valued avoiders):")
    for k in range(1, args.max_k + 1):
        best, w = max_repeats_avoiding(1, k, args.max_values)
        built = repeats(build(1, k).s)
        threshold = k + 1  # k * 1^6 + 1
        shown = format_word(w) if w is not None else "none"
        print(
            f"  k={k}: searched max {best} (witness {shown}), "
            f"construction {built}, forcing threshold {threshold}"
        )

    print("balanced-word exhaustion at n=1:")
    for k in range(1, args.max_k + 1):
        try:
            ok = check_unavoidability_balanced(1, k)
        except GuardExceeded:
            print(f"  k={k}: over guard")
            continue
        print(f"  k={k}: every balanced word contains a family member: {ok}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
