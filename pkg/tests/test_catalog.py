import json

import pytest

from cosetduality import catalog


@pytest.mark.parametrize("name", list(catalog.CATALOG))
def test_json_round_trip(name, tmp_path):
    G = catalog.get(name)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(catalog.group_to_json(G)))
    H = catalog.load_group(str(path))
    assert H.elements == G.elements


def test_cycle_string_generators():
    G = catalog.group_from_json({"degree": 4, "generators": ["(0 1 2 3)", "(0 2)"]})
    assert G.order == 8


def test_unknown_name():
    with pytest.raises(KeyError):
        catalog.get("Z5")
    with pytest.raises(KeyError):
        catalog.load_group("/nonexistent/group.json")


def test_large_is_gated():
    assert "S4" in catalog.LARGE
    assert "S4" not in catalog.DEFAULT_NAMES


def test_dihedral_and_quaternion_structure():
    D4 = catalog.get("D4")
    Q8 = catalog.get("Q8")
    assert sorted(D4.element_order(i) for i in range(8)) == [1, 2, 2, 2, 2, 2, 4, 4]
    assert sorted(Q8.element_order(i) for i in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert not D4.is_abelian() and not Q8.is_abelian()
