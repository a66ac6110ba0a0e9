import pytest

import mlpa


def test_positions():
    assert mlpa.build_positions([2, 3, 5], [5, 2, 3]) == [0, 2, 3, 4, 5, 6, 9, 12]
    assert mlpa.total_elements([2, 3, 5]) == 8
    assert mlpa.aperture([2, 3, 5], [5, 2, 3]) == 12


def test_validation():
    assert mlpa.validate_config([2, 3, 5], [5, 2, 3]) == []
    assert mlpa.validate_config([2, 4, 5], [5, 2, 4]) != []
    with pytest.raises(ValueError):
        mlpa.build_positions([2, 4], [4, 2])


def test_coarray():
    report = mlpa.difference_coarray([0, 2, 3, 4, 5, 6, 9, 12])
    assert report["l_ug"] == 23
    assert report["l_cg"] == 21
    assert report["v_delta"] == 4
    assert report["hole_count"] == 1
    assert report["weights"][0] == 8
    assert mlpa.unit_spacing_count([0, 1, 2, 3]) == 3


def test_enumeration():
    assert mlpa.enumerate_coprime_partitions(8, 3) == [[2, 3, 5]]
    assert mlpa.enumerate_coprime_partitions(11, 3) == []
    assert mlpa.enumerate_spacing_orders([2, 3, 5]) == [[3, 5, 2], [5, 2, 3]]


def test_optimize():
    result = mlpa.optimize(23, 3, "unique")
    assert result["max_unique"] == 155
    assert result["unique_optima"][0]["spacing"] == [11, 5, 9]
    assert not result["is_joint"]

    result = mlpa.optimize(14, 4, "joint")
    assert [c["spacing"] for c in result["joint_optima"]] == [
        [3, 2, 7, 5],
        [7, 2, 3, 5],
        [3, 7, 2, 5],
    ]

    with pytest.raises(ValueError):
        mlpa.optimize(11, 3, "unique")


def test_sweep():
    rows = mlpa.sweep(3, 8, 12)
    assert [row["feasible"] for row in rows] == [True, False, True, False, True]
    assert rows[0]["result"]["joint_optima"][0]["spacing"] == [5, 2, 3]


def test_references():
    assert mlpa.nested_positions(3, 3) == [0, 1, 2, 3, 7, 11]
    assert mlpa.coprime_positions(2, 3) == [0, 2, 3, 4, 6, 9]
    assert mlpa.unit_spacing_count(mlpa.coprime_positions(2, 3)) == 2
