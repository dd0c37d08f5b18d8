#!/usr/bin/env python3
"""Validates CLI output against docs/schema.json."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
jsonschema.Draft202012Validator.check_schema(schema)
envelope = jsonschema.Draft202012Validator(schema)


def payload_validator(name):
    return jsonschema.Draft202012Validator({"$defs": schema["$defs"], "$ref": f"#/$defs/{name}"})


commands = [
    ["eval", "psi", "--p", "4", "--x", "0.25"],
    ["eval", "tau", "--grid", "x=0:0.5:3", "--grid", "y=0:0.5:3"],
    ["kraw", "--n", "10", "--s", "3"],
    ["kraw", "roots", "--n", "10", "--s", "3"],
    ["kraw", "moments", "--n", "10", "--s", "3", "--p", "4"],
    ["kraw", "concentration", "--n", "256", "--s", "64", "--p", "4"],
    ["kraw", "intervals", "--n", "20", "--s", "4"],
    ["bound", "moment", "--n", "8", "--s", "2", "--p", "4", "--raw"],
    ["bound", "tail", "--n", "256", "--s", "64", "--i", "20"],
    ["bound", "edge-iso", "--n", "40", "--s", "10", "--i", "4"],
    ["bound", "hc", "--n", "16", "--s", "4", "--eps", "0.15"],
    ["bound", "moment", "--n", "16", "--p", "4", "--grid", "s=1,2,3"],
    ["induction", "--n", "64", "--s", "16", "--p", "4"],
    ["ue", "--R", "0.5", "--eps", "0.1", "--n", "100"],
    ["iso", "--n", "40", "--sigma", "0.25", "--i", "4", "--s", "10"],
    ["verify", "--suite", "tail"],
    ["verify", "--suite", "main-inequality", "--budget", "2"],
]

failed = 0
with tempfile.TemporaryDirectory() as tmp:
    for k, args in enumerate(commands):
        out = Path(tmp) / f"p{k}.json"
        proc = subprocess.run([binary, *args, "--out", str(out)], capture_output=True, text=True)
        label = " ".join(args)
        try:
            doc = json.loads(proc.stdout)
            envelope.validate(doc)
            if doc["kind"] == "suite-report":
                payload_validator("SuiteReport").validate(json.loads(out.read_text()))
                assert "wall_seconds" in doc and "wall_seconds" not in doc["payload"]
            assert json.loads(out.read_text()) == doc["payload"]
            print(f"ok   {label}")
        except Exception as e:  # noqa: BLE001
            failed += 1
            print(f"FAIL {label}: rc={proc.returncode} {e}\n{proc.stderr}")
sys.exit(1 if failed else 0)
