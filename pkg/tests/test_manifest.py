import pytest

from hopfcyc.catalog import sweedler_h4
from hopfcyc.manifest import (SCHEMA, ManifestError, catalog_manifest, dumps, from_dict, load, loads,
                              manifests_equal, to_dict)


def minimal(mult):
    return {"schema": SCHEMA, "field": {"kind": "rationals"}, "hopf": {"Z2": {
        "basis": ["e", "g"], "mult": mult, "unit": [[0, "1"]],
        "comult": [[0, 0, 0, "1"], [1, 1, 1, "1"]], "counit": [[0, "1"], [1, "1"]],
        "antipode": [[0, 0, "1"], [1, 1, "1"]]}}}


GOOD_MULT = [[0, 0, 0, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"], [0, 1, 1, "1"]]


@pytest.mark.parametrize("fld", ["rationals", "cyclotomic3"])
def test_catalog_round_trip(fld):
    man = catalog_manifest(fld)
    again = loads(dumps(man))
    assert manifests_equal(man, again)
    assert dumps(again) == dumps(man)


def test_h4_fixture_bit_exact(tmp_path):
    p = tmp_path / "cat.json"
    p.write_text(dumps(catalog_manifest()))
    assert load(p).hopf["H4"].same_structure(sweedler_h4())


def test_minimal_loads():
    man = from_dict(minimal(GOOD_MULT))
    assert man.hopf["Z2"].dim == 2


def test_dimension_error_names_entry():
    bad = GOOD_MULT + [[3, 1, 1, "1"]]
    with pytest.raises(ManifestError) as e:
        from_dict(minimal(bad))
    assert e.value.kind == "dimension"
    assert "hopf.Z2.mult[4]" in str(e.value) and "[3, 1, 1, '1']" in str(e.value)


def test_fraction_normalizes():
    doc = minimal(GOOD_MULT)
    doc["hopf"]["Z2"]["characters"] = {"half": [[0, "2/4"]]}
    out = to_dict(from_dict(doc))
    assert out["hopf"]["Z2"]["characters"]["half"] == [[0, "1/2"]]


def test_parse_error_has_position():
    with pytest.raises(ManifestError) as e:
        loads('{"schema": "hopfcyc-manifest/1",\n "hopf": {,}}')
    assert e.value.kind == "parse" and "line 2 column" in str(e.value)


def test_dangling_reference():
    doc = minimal(GOOD_MULT)
    doc["hopf"]["Z2"]["pairs"] = {"p": {"delta": "nope", "sigma": [[0, "1"]]}}
    with pytest.raises(ManifestError) as e:
        from_dict(doc)
    assert e.value.kind == "reference" and "nope" in str(e.value)


def test_bad_scalar():
    doc = minimal([[0, 0, 0, "1/0"]])
    with pytest.raises(ManifestError) as e:
        from_dict(doc)
    assert e.value.kind == "scalar" and "mult[0]" in str(e.value)


def test_float_scalar_rejected():
    with pytest.raises(ManifestError):
        from_dict(minimal([[0, 0, 0, 0.5]]))


def test_schema_checked():
    with pytest.raises(ManifestError) as e:
        from_dict({"schema": "other/2"})
    assert e.value.kind == "schema"
