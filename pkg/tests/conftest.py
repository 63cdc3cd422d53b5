"""Shared fixtures: the named instances plus a sweep corpus of small ones."""

from __future__ import annotations

import pytest

from wdlat import (
    builtin,
    corpus,
    enumerate_dicomplementations,
    enumerate_lattices,
    trivial_dicomplementation,
)


@pytest.fixture(scope="session")
def L6():
    return builtin("L6")


@pytest.fixture(scope="session")
def L7():
    return builtin("L7")


@pytest.fixture(scope="session")
def named_corpus():
    return corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """Every weak complementation on every lattice with at most 5 elements,
    plus the trivial two-sided instance on each lattice."""
    out = []
    for n in range(1, 6):
        for i, lat in enumerate(enumerate_lattices(n)):
            out.append((f"size{n}.{i}-trivial", trivial_dicomplementation(lat)))
            for k, D in enumerate(enumerate_dicomplementations(lat, side="delta")):
                out.append((f"size{n}.{i}-wc{k}", D))
    return out


@pytest.fixture(scope="session")
def full_corpus(named_corpus, small_corpus):
    return list(named_corpus) + list(small_corpus)
