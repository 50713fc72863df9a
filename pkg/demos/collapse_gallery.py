"""Classify each collapse fixture and a clean method."""

from pathlib import Path

from transguard import classify

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

for path in sorted((FIXTURES / "collapse").iterdir()) + [FIXTURES / "clean" / "c01.py"]:
    lang = "java" if path.suffix == ".java" else "python"
    verdict = classify(path.read_text(), lang)
    print(f"{path.name:<22} {', '.join(verdict.names()) or 'clean'}")
