"""Walk one Python method through the pipeline with a mock translator.

The mock adds a redundant loop clause; R4 prunes it back out.
Run: python3 demos/motivating.py
"""

from pathlib import Path

from transguard import MockTranslator, PipelineConfig, run_pipeline
from transguard.translators import fixture_key

GOLDENS = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "goldens"


def main() -> None:
    src = (GOLDENS / "motivating.source.py").read_text()
    clean = (GOLDENS / "motivating.expected.java").read_text()
    mock = MockTranslator("p2j", {fixture_key(src, "p2j"): clean}, "extra_constraints")
    result = run_pipeline(src, "f_gold", "p2j", PipelineConfig(), mock)
    for stage, text in result.stages.items():
        print(f"--- {stage}")
        print(text)
    print("--- records")
    for rec in result.records:
        flag = "applied" if rec.applied else "skipped"
        print(f"{rec.rule.value:<16} {flag:<8} {rec.notes}")
    print("--- verdict:", ", ".join(result.verdict.names()) or "clean")


if __name__ == "__main__":
    main()
