from __future__ import annotations

import os

os.environ.setdefault('ONEFACED_LOG_FILE', '')  # No log files from test runs

import pytest

from onefaced import atlas
from onefaced import graphs
from onefaced.pattern import CanonicalClass
from onefaced.pattern import GluingPattern

TORUS_TEXT = "1 2 -1 -2"
DOUBLE_TORUS_TEXT = "1 2 -1 3 -2 -3 4 5 -4 6 -5 -6"
TRIPLE_TORUS_WORD = (1, 2, -1, 3, 4, -2, -4, 5, 6, -5, 7, -6, -7, -3, 8, 9, -8, 10, -9, -10)


@pytest.fixture
def double_torus() -> GluingPattern:
    return GluingPattern(int(label) for label in DOUBLE_TORUS_TEXT.split())


@pytest.fixture
def triple_torus() -> GluingPattern:
    return GluingPattern(TRIPLE_TORUS_WORD)


@pytest.fixture(scope='session')
def genus2_classes() -> list[CanonicalClass]:
    return atlas.enumerate_class_list(2)


@pytest.fixture(scope='session')
def genus3_classes() -> list[CanonicalClass]:
    return atlas.enumerate_class_list(3)


@pytest.fixture(scope='session')
def surgery_graph_2() -> graphs.SurgeryGraph:
    return graphs.build_surgery_graph(2)


@pytest.fixture(scope='session')
def surgery_graph_3() -> graphs.SurgeryGraph:
    return graphs.build_surgery_graph(3)
