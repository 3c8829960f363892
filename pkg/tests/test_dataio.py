import numpy as np
import pytest

from pabidot import (
    DataFormatError,
    Dataset,
    ParameterError,
    drop_constant_columns,
    load_csv,
    write_csv,
)


def test_round_trip_bit_identical(tmp_path, rng):
    matrix = rng.normal(size=(200, 3)) * np.array([1e-7, 1.0, 1e9])
    labels = rng.integers(0, 2, size=200).astype(str)
    path = tmp_path / "data.csv"
    write_csv(path, Dataset(matrix=matrix, column_names=["x", "y", "z"],
                            class_values=labels, class_name="cls", class_index=0))
    loaded = load_csv(path, class_column="cls")
    assert np.array_equal(loaded.matrix, matrix)
    assert np.array_equal(loaded.class_values, labels)
    assert loaded.column_names == ["x", "y", "z"]
    assert loaded.class_index == 0  # class written back at its original spot
    assert loaded.class_name == "cls"


def test_round_trip_extreme_values(tmp_path):
    matrix = np.array([
        [1e300, -1e-300],
        [np.pi, -0.0],
        [1.0 / 3.0, 123456789.123456789],
    ])
    path = tmp_path / "extreme.csv"
    write_csv(path, Dataset(matrix=matrix, column_names=["a", "b"]))
    assert np.array_equal(load_csv(path).matrix, matrix)


def test_headerless_round_trip(tmp_path, rng):
    matrix = rng.normal(size=(40, 4))
    path = tmp_path / "plain.csv"
    write_csv(path, Dataset(matrix=matrix, column_names=[f"col{i+1}" for i in range(4)],
                            has_header=False))
    loaded = load_csv(path, has_header=False)
    assert np.array_equal(loaded.matrix, matrix)
    assert loaded.column_names == ["col1", "col2", "col3", "col4"]


def test_headerless_class_by_index(tmp_path):
    path = tmp_path / "labeled.csv"
    path.write_text("1.5,a,2.5\n3.5,b,4.5\n")
    loaded = load_csv(path, has_header=False, class_column=1)
    assert np.array_equal(loaded.matrix, [[1.5, 2.5], [3.5, 4.5]])
    assert loaded.class_values.tolist() == ["a", "b"]
    assert loaded.class_index == 1


def test_class_selector_errors(tmp_path):
    path = tmp_path / "named.csv"
    path.write_text("u,v\n1,2\n3,4\n")
    with pytest.raises(ParameterError):
        load_csv(path, class_column="missing")
    with pytest.raises(ParameterError):
        load_csv(path, has_header=False, class_column="u")
    with pytest.raises(ParameterError):
        load_csv(path, has_header=False, class_column=7)


def test_bad_cell_cites_row_and_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("p,q\n1.0,2.0\nabc,4.0\n5.0,6.0\n")
    with pytest.raises(DataFormatError) as excinfo:
        load_csv(path)
    message = str(excinfo.value)
    assert "row 2" in message and "column 1" in message and "'p'" in message


def test_missing_cell_cites_location(tmp_path):
    path = tmp_path / "hole.csv"
    path.write_text("p,q\n1.0,\n3.0,4.0\n")
    with pytest.raises(DataFormatError) as excinfo:
        load_csv(path)
    assert "row 1" in str(excinfo.value) and "column 2" in str(excinfo.value)


def test_on_missing_drop(tmp_path, caplog):
    path = tmp_path / "part.csv"
    path.write_text("p,q\n1.0,2.0\nxx,4.0\n5.0,6.0\n")
    with caplog.at_level("WARNING"):
        loaded = load_csv(path, on_missing="drop")
    assert np.array_equal(loaded.matrix, [[1.0, 2.0], [5.0, 6.0]])
    assert any("dropped 1" in r.getMessage() for r in caplog.records)


def test_on_missing_drop_everything_fails(tmp_path):
    path = tmp_path / "allbad.csv"
    path.write_text("p,q\nx,y\nz,w\n")
    with pytest.raises(DataFormatError):
        load_csv(path, on_missing="drop")


def test_on_missing_validated(tmp_path):
    path = tmp_path / "f.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(ParameterError):
        load_csv(path, on_missing="maybe")


def test_empty_file_rejected(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(DataFormatError):
        load_csv(path)


def test_missing_file_raises_file_not_found(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_csv(tmp_path / "nope.csv")


def test_class_only_file_rejected(tmp_path):
    path = tmp_path / "labels.csv"
    path.write_text("cls\na\nb\n")
    with pytest.raises(DataFormatError):
        load_csv(path, class_column="cls")


def test_write_creates_parent_directories(tmp_path, rng):
    target = tmp_path / "deep" / "nested" / "out.csv"
    write_csv(target, Dataset(matrix=rng.normal(size=(5, 2)), column_names=["a", "b"]))
    assert target.exists()


def test_drop_constant_columns(rng):
    matrix = np.column_stack([rng.normal(size=30), np.full(30, 4.0), rng.normal(size=30)])
    dataset = Dataset(matrix=matrix, column_names=["a", "const", "b"])
    trimmed, dropped = drop_constant_columns(dataset)
    assert dropped == ["const"]
    assert trimmed.column_names == ["a", "b"]
    assert trimmed.matrix.shape == (30, 2)
    untouched, dropped2 = drop_constant_columns(trimmed)
    assert dropped2 == [] and untouched is trimmed


def test_million_row_round_trip(tmp_path, rng):
    matrix = rng.normal(size=(1_000_000, 3))
    path = tmp_path / "big.csv"
    write_csv(path, Dataset(matrix=matrix, column_names=["a", "b", "c"]))
    assert np.array_equal(load_csv(path).matrix, matrix)
