import pytest

from treelabel import SchemeParams, parse_parent_array

# Worked example used across modules: root 0 with children {1, 2},
# node 1 with children {3, 4}.
E5_TEXT = "5\n-1 0 0 1 1"


@pytest.fixture
def e5():
    return parse_parent_array(E5_TEXT)


@pytest.fixture
def params8():
    return SchemeParams.for_family_size(8)


@pytest.fixture
def params16():
    return SchemeParams.for_family_size(16)
