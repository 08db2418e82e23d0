"""Command-line behaviour: exit codes, outputs, determinism."""

from __future__ import annotations

import json

import pytest

from softscale.cli import main


def doc_args(ontology_path, collection_path, dataset_path):
    return ["--ontology", str(ontology_path),
            "--collection", str(collection_path),
            "--data", str(dataset_path)]


def test_validate_ok(capsys, ontology_path, collection_path, dataset_path):
    code = main(["validate"] + doc_args(ontology_path, collection_path,
                                        dataset_path))
    assert code == 0
    out = capsys.readouterr().out
    assert "ok: ontology 'Person'" in out
    assert "1 scale(s)" in out
    assert "5 binding(s)" in out
    assert "8 object(s)" in out


def test_validate_swapped_queries_fails(capsys, tmp_path, ontology_path,
                                        collection_path, dataset_path):
    text = collection_path.read_text()
    swapped = (text.replace('ORDER="less-equal"', 'ORDER="@LE@"')
               .replace('ORDER="greater-equal"', 'ORDER="less-equal"')
               .replace('ORDER="@LE@"', 'ORDER="greater-equal"'))
    bad = tmp_path / "swapped.ckml.xml"
    bad.write_text(swapped)
    code = main(["validate"] + doc_args(ontology_path, bad, dataset_path))
    assert code == 1
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_missing_file_exits_one(capsys, ontology_path, collection_path):
    code = main(["validate", "--ontology", str(ontology_path),
                 "--collection", str(collection_path),
                 "--data", "/nonexistent/people.csv"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_no_arguments_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_unknown_valuation_exits_two(ontology_path, collection_path,
                                     dataset_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scale", "--valuation", "complex"]
             + doc_args(ontology_path, collection_path, dataset_path))
    assert exc.value.code == 2


def test_bad_reference_date(capsys, ontology_path, collection_path,
                            dataset_path):
    code = main(["validate", "--reference-date", "tomorrow"]
                + doc_args(ontology_path, collection_path, dataset_path))
    assert code == 1
    assert "reference date" in capsys.readouterr().err


def test_scale_output(tmp_path, ontology_path, collection_path,
                      dataset_path):
    out = tmp_path / "facets.json"
    code = main(["scale", "--out", str(out)]
                + doc_args(ontology_path, collection_path, dataset_path))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["valuation"] == "boolean"
    facet = doc["facets"][0]
    assert facet["objects"][0] == "Adam"
    assert set(facet["attributes"]) == {"Minor", "Young", "Working",
                                        "Retired", "Old"}
    # a second run produces byte-identical output
    again = tmp_path / "facets2.json"
    main(["scale", "--out", str(again)]
         + doc_args(ontology_path, collection_path, dataset_path))
    assert again.read_bytes() == out.read_bytes()


def test_scale_stdout_real(capsys, ontology_path, collection_path,
                           dataset_path):
    code = main(["scale", "--valuation", "real"]
                + doc_args(ontology_path, collection_path, dataset_path))
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["valuation"] == "real"
    assert "inf" in {x for row in doc["facets"][0]["matrix"] for x in row}


def test_lattice_json_stdout(capsys, ontology_path, collection_path,
                             dataset_path):
    code = main(["lattice"] + doc_args(ontology_path, collection_path,
                                       dataset_path))
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["concepts"]) == 7
    assert doc["attributeLabels"]["Working"] \
        == doc["objectLabels"]["Betty"]


def test_lattice_dot_by_extension(tmp_path, ontology_path,
                                  collection_path, dataset_path):
    out = tmp_path / "lattice.dot"
    code = main(["lattice", "--out", str(out)]
                + doc_args(ontology_path, collection_path, dataset_path))
    assert code == 0
    text = out.read_text()
    assert text.startswith("digraph lattice {")
    assert text.count("n") >= 7
    # explicit format wins over the extension
    out2 = tmp_path / "lattice2.dot"
    main(["lattice", "--format", "json", "--out", str(out2)]
         + doc_args(ontology_path, collection_path, dataset_path))
    json.loads(out2.read_text())


def test_lattice_runs_deterministically(capsys, ontology_path,
                                        collection_path, dataset_path):
    args = ["lattice"] + doc_args(ontology_path, collection_path,
                                  dataset_path)
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first
