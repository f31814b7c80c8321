import json
import os
from pathlib import Path

import pytest

import casson

jsonschema = pytest.importorskip("jsonschema")
referencing = pytest.importorskip("referencing")

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"
FIXTURES = Path(os.environ.get("CASSON_FIXTURE_DIR", ROOT / "fixtures"))

COMMAND_OF = {
    "trefoil.json": "knot",
    "poincare.json": "sphere",
    "s3.json": "sphere",
    "cork.json": "mapping-torus",
    "sigma235_double_cover.json": "mapping-torus",
    "free_trefoil.json": "mapping-torus",
    "cork_floer.json": "floer",
    "sigma235_floer.json": "floer",
    "odd_floer.json": "floer",
    "t4.json": "torus4",
    "t4_w01.json": "torus4",
    "whitehead_bundle.json": "circle-bundle",
}


def validator(name):
    resources = []
    for path in SCHEMAS.glob("*.json"):
        schema = json.loads(path.read_text())
        resources.append((path.name, referencing.Resource.from_contents(schema)))
    registry = referencing.Registry().with_resources(resources)
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


def test_every_fixture_is_covered():
    assert {p.name for p in FIXTURES.glob("*.json")} == set(COMMAND_OF)


@pytest.mark.parametrize("fixture", sorted(COMMAND_OF))
def test_fixture_and_report_conform(fixture):
    command = COMMAND_OF[fixture]
    validator(command + ".json").validate(json.loads((FIXTURES / fixture).read_text()))
    code, out, err = casson.run_cli([command, "--input", str(FIXTURES / fixture), "--format", "json"])
    assert code in (0, 1, 2), err
    validator("report.json").validate(json.loads(out))


def test_sweep_conforms():
    code, out, _ = casson.run_cli(["sweep", "--family", "torus-branched", "--range", "q=3,5", "--format", "json"])
    assert code == 0
    validator("sweep.json").validate(json.loads(out))
