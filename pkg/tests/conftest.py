"""Shared fixtures: the corpus of matroids used across the test modules."""

import pytest

from matroid_zeta import Matroid, named_matroid


def build_corpus():
    """All corpus matroids by name.

    Proper uniforms with at most 6 elements, Boolean matroids up to rank 4,
    the graphic matroid of the complete graph on four vertices, the seven
    catalog matroids, and two matroids with loops (so that the loopless
    qualifiers in the identities are actually exercised).
    """
    corpus = {}
    for n in range(2, 7):
        for r in range(1, n):
            corpus[f"u{r}{n}"] = Matroid.uniform(r, n)
    for n in range(1, 5):
        corpus[f"u{n}{n}"] = Matroid.uniform(n, n)
    for name in ("k4", "fano", "nonfano", "M1", "M2", "N1", "N2"):
        corpus[name] = named_matroid(name)
    loop = Matroid(1, [[]])
    corpus["loop"] = loop
    corpus["looppair"] = Matroid.uniform(1, 2).direct_sum(loop)
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def u23():
    return Matroid.uniform(2, 3)


@pytest.fixture(scope="session")
def k4():
    return named_matroid("k4")
