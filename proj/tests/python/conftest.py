import os
import pathlib

import pytest

SOURCE_DIR = pathlib.Path(os.environ.get("QLOGIC_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


@pytest.fixture
def inputs():
    return SOURCE_DIR / "tests" / "golden" / "inputs"


@pytest.fixture
def schema():
    import json

    return json.loads((SOURCE_DIR / "schemas" / "report.schema.json").read_text())
