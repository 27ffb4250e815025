import json
import math

import pytest

spfk = pytest.importorskip("spfk")


def test_breakpoints_and_word():
    assert spfk.breakpoints(2) == [0.0]
    assert spfk.breakpoints(4)[2] == pytest.approx(0.6745, abs=1e-4)
    assert spfk.sax_word([3.0, 3.0, -3.0, -3.0], 2, 4) == "da"
    assert len(spfk.sax_document([0, 1, 2, 3, 10], 4, 2, 2)) == 2


def test_znormalize_and_paa():
    z = spfk.znormalize([1.0, 2.0, 3.0])
    assert sum(z) == pytest.approx(0.0, abs=1e-12)
    assert spfk.paa([0.0, 3.0, 6.0], 2) == pytest.approx([1.0, 5.0])


def test_vectorizers():
    vocab, rows = spfk.bow_matrix([["ab", "ab", "ba"], ["ba"]])
    assert vocab == ["ab", "ba"]
    assert rows == [[2.0, 1.0], [0.0, 1.0]]
    _, tfidf = spfk.tfidf_matrix([["ab", "ab", "ba"], ["ba"]])
    assert tfidf[0][1] == 0.0
    assert tfidf[0][0] == pytest.approx(2 / 3 * math.log(2), abs=1e-12)


def test_silhouette():
    per_point, mean = spfk.silhouette([[0.0], [0.1], [10.0], [10.1]], [0, 0, 1, 1])
    assert len(per_point) == 4
    assert mean > 0.95


def test_cluster_and_select():
    series, labels = spfk.generate_synthetic(classes=3, per_class=10, seed=4)
    assert len(series) == 30 and len(series[0]) == 128
    predicted = spfk.spf_cluster(series, 3, window=30, word_length=5, alphabet=5, trees=50, seed=1)
    assert len(set(predicted)) == 3
    assert spfk.adjusted_rand_index(labels, labels) == pytest.approx(1.0)

    kwargs = dict(mode="bow", windows=[20, 30], alphabets=[4, 5], k_max=5, trees=30, seed=7)
    report = spfk.select_k(series, labels, **kwargs)
    assert report["true_k"] == 3
    assert 2 <= report["predicted_k"] <= 5
    assert spfk.select_k_json(series, labels, threads=2, **kwargs) == spfk.select_k_json(series, labels, **kwargs)


def test_fixtures_and_verdict():
    assert spfk.verdict(3, 3) == "Correct"
    assert spfk.verdict(4, 3) == "Close"
    assert len(spfk.fixture_csv("III").strip().splitlines()) == 31


def test_errors():
    with pytest.raises(spfk.ConfigError):
        spfk.breakpoints(1)
    with pytest.raises(spfk.IngestError):
        spfk.load_ucr("/nonexistent/file.tsv")
    assert issubclass(spfk.ConfigError, ValueError)
