"""Generate a random word over the repeat threshold and walk the extraction.

Prints the word, the family member found, the occurrence, the branch
the extraction took, and the replay verdict.
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from wordgen import word_with_repeats  # noqa: E402

from wordpat.witness import extract_witness, validate_trace  # noqa: E402
from wordpat.words import format_word, repeats  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--extra", type=int, default=0, help="repeats beyond the threshold")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    target = args.k * args.n**6 + 1 + args.extra
    w = word_with_repeats(rng, target, args.k)
    print(f"word ({len(w)} letters, {repeats(w)} repeats): {format_word(w)}")

    fid, occ, trace = extract_witness(w, args.n, args.k)
    print(f"found:  {fid}")
    print(f"where:  {list(occ)}")
    print(f"branch: {trace.branch}")
    print(f"replay: {'ok' if validate_trace(w, trace) else 'BROKEN'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
