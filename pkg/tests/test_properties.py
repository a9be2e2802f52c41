import pytest

from properties import PROPERTIES, make_test


@pytest.mark.parametrize("name", sorted(PROPERTIES))
def test_property(name):
    make_test(name)()
