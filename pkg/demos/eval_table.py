"""Print the category table for the bundled 50-case corpus, both directions.

Run: python3 demos/eval_table.py [profiles]
"""

import sys
from pathlib import Path

from transguard import MockTranslator, PipelineConfig, ingest, run_eval
from transguard.harness import fixtures_from_corpus, format_table

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "corpus"


def main(profiles: str = "all") -> None:
    cases = ingest(CORPUS)
    reports = []
    for direction in ("j2p", "p2j"):
        mock = MockTranslator(direction, fixtures_from_corpus(cases, direction), profiles)
        reports.append(run_eval(cases, direction, PipelineConfig(), mock))
    print(format_table(reports))


if __name__ == "__main__":
    main(*sys.argv[1:2])
