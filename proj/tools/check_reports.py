# Copyright 2026 The uccc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Runs the CLI on the bundled fixtures and validates each report.

Usage: check_reports.py <uccc binary> <fixtures dir> <schema> <scratch dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema


def walk_numbers(schema, path="$"):
    """Yields schema paths of numeric leaves that lack a unit annotation."""
    if isinstance(schema, dict):
        if schema.get("type") in ("number", "integer") and "x-unit" not in schema:
            yield path
        for key, value in schema.items():
            yield from walk_numbers(value, path + "." + key)
    elif isinstance(schema, list):
        for i, value in enumerate(schema):
            yield from walk_numbers(value, "%s[%d]" % (path, i))


def main():
    uccc, fixtures, schema_path, scratch = sys.argv[1:5]
    fixtures = pathlib.Path(fixtures)
    scratch = pathlib.Path(scratch)
    scratch.mkdir(parents=True, exist_ok=True)
    schema = json.loads(pathlib.Path(schema_path).read_text())
    missing = list(walk_numbers(schema))
    if missing:
        print("numeric fields without units:", missing)
        return 1
    runs = {
        "vqe": ["vqe", "--model", str(fixtures / "h2.json")],
        "fcidump": ["vqe", "--model", str(fixtures / "h2.fcidump"), "--point-group", "D2h"],
        "estimate": ["estimate", "--model", str(fixtures / "ch4.json"), "--shots", "2000",
                     "--mitigation", "pmsv2", "--noise-p2", "0.01", "--seed", "3"],
        "mmsv": ["estimate", "--model", str(fixtures / "h2.json"), "--shots", "2000", "--mitigation", "mmsv"],
        "qse": ["qse", "--model", str(fixtures / "ch4.json"), "--spectrum-out", str(scratch / "spectrum.csv"),
                "--stick-out", str(scratch / "sticks.csv")],
        "qse_shots": ["qse", "--model", str(fixtures / "h2.json"), "--estimator", "shots", "--shots", "2000",
                      "--mitigation", "pmsv1"],
        "compare": ["compare-strategies", "--model", str(fixtures / "ch3.json")],
        "config": ["experiment", "--config", str(fixtures / "ch4_estimate.toml"), "--shots", "1000"],
        "estimate_config": ["estimate", "--config", str(fixtures / "ch4_estimate.toml"), "--shots", "1000"],
        "prune": ["vqe", "--model", str(fixtures / "ch3.json"), "--prune-tol", "1e-3"],
    }
    failures = 0
    for name, args in runs.items():
        out = subprocess.run([uccc] + args, capture_output=True, text=True)
        if out.returncode != 0:
            print("%s: exit %d %s" % (name, out.returncode, out.stderr.strip()))
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(out.stdout), schema)
            print("%s: valid" % name)
        except jsonschema.ValidationError as e:
            print("%s: %s" % (name, e.message))
            failures += 1
    bad = subprocess.run([uccc, "vqe", "--model", str(fixtures / "missing.json")], capture_output=True, text=True)
    err = json.loads(bad.stderr)
    if bad.returncode == 0 or "error" not in err:
        print("error path: expected nonzero exit with error JSON")
        failures += 1
    else:
        print("error path: valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
