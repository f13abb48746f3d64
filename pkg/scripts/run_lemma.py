"""Checkpointed run of the deletion-vertex check; rerun the same command to resume.

    python scripts/run_lemma.py 11 6 7 --checkpoint runs/lemma-11-6-7 --output runs/lemma-11-6-7.report
"""

import argparse
import sys
import time
from pathlib import Path

from minorbench.verify import default_jobs, parse_report, validate_report, verify_deletion_lemma


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("n", type=int)
    ap.add_argument("d", type=int)
    ap.add_argument("t", type=int)
    ap.add_argument("--checkpoint", required=True)
    ap.add_argument("--output", required=True)
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--failures-only", action="store_true", help="omit per-graph certificate lines")
    args = ap.parse_args(argv)
    start = time.time()

    def progress(done, total, res):
        print(f"[{time.time() - start:9.1f}s] subtree {res.index} done ({done}/{total}), "
              f"{res.scanned} graphs, {res.timing.total:.1f}s search", file=sys.stderr, flush=True)

    rep = verify_deletion_lemma(args.n, args.d, args.t, jobs=args.jobs or default_jobs(),
                                checkpoint=args.checkpoint, with_certificates=not args.failures_only,
                                progress=progress)
    out = Path(args.output)
    out.write_text(rep.to_text())
    Path(str(out) + ".timing").write_text(rep.timing.text())
    problems = validate_report(parse_report(out.read_text()))
    print(f"scanned {rep.scanned}, counterexamples {len(rep.counterexamples)}, "
          f"validation problems {len(problems)}", file=sys.stderr)
    for p in problems[:20]:
        print("  " + p, file=sys.stderr)
    return 0 if rep.holds and not problems else 1


if __name__ == "__main__":
    sys.exit(main())
