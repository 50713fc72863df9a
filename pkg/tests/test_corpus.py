import json

import corpus_gen
from conftest import CORPUS


def test_regeneration_matches_committed_corpus(tmp_path):
    corpus_gen.build(tmp_path)
    for path in sorted(CORPUS.rglob("*.*")):
        rel = path.relative_to(CORPUS)
        assert (tmp_path / rel).read_text() == path.read_text(), rel
    assert sorted(p.relative_to(tmp_path) for p in tmp_path.rglob("*.*")) == \
        sorted(p.relative_to(CORPUS) for p in CORPUS.rglob("*.*"))


def test_label_counts():
    labels = json.loads((CORPUS / "labels.json").read_text())
    assert corpus_gen.counts(labels, "j2p") == corpus_gen.J2P_COUNTS
    assert corpus_gen.counts(labels, "p2j") == corpus_gen.P2J_COUNTS
    assert len(labels) == 50


def test_features_back_the_labels():
    progs = corpus_gen.programs()
    labels = corpus_gen.assign_labels(progs)
    for k, prog in enumerate(progs):
        j2p = set(labels[f"case_{k:02d}"]["j2p"])
        assert ("TypeSensitivity" in j2p) == prog.array
        assert ("LoopConversion" in j2p) == prog.complex_for
        if "TypeSensitivity" in labels[f"case_{k:02d}"]["p2j"]:
            assert prog.arr_pair
