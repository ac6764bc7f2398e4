"""Tabulate PT and Sq4T membership across the corpus, with counterexample chains.

Shows how often each transitivity property fails and the smallest chain
that breaks it.
"""

import sys

from permcheck.catalog import build, survey_corpus
from permcheck.classify import classify


def main() -> None:
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 24
    print(f"{'group':<16}{'order':>6}{'subs':>6}  pt     sq4t   chain")
    for spec in survey_corpus(max_order):
        r = classify(build(spec), spec.name)
        f = r.flags
        chain = "; ".join(f"{w['claim']}: {w['note']}" for w in r.witnesses)
        print(f"{spec.name:<16}{r.order:>6}{r.num_subgroups:>6}  "
              f"{str(f['pt']).lower():<7}{str(f['sq4t']).lower():<7}{chain}")


if __name__ == "__main__":
    main()
