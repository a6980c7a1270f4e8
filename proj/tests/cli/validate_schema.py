"""Validates every json-lines record the tool emits against docs/output_schema.json."""

import json
import subprocess
import sys
import tempfile

import jsonschema


def main(tool: str, schema_path: str) -> int:
    with open(schema_path) as f:
        schema = json.load(f)
    with tempfile.NamedTemporaryFile("w", suffix=".grid", delete=False) as grid:
        grid.write("n 2 z 0\nn 4 z 1\n")
    runs = [
        ["eval", "-n", "4", "-z", "0.3+0.2i"],
        ["eval", "-n", "3", "-z", "-1.5-0.25i", "--method", "all"],
        ["zeta", "-n", "2"],
        ["product", "-n", "3", "-x", "0.2", "-y", "0.6"],
        ["theta", "-n", "1", "-q", "0.1"],
        ["verify", "--grid", "default"],
        ["verify", "--grid", grid.name],
        ["bench", "--grid", "default", "--repeats", "1"],
        ["--max-terms", "50", "eval", "-n", "2", "-z", "1"],
    ]
    count = 0
    for args in runs:
        out = subprocess.run([tool, "--format", "json-lines", *args], capture_output=True, text=True).stdout
        for line in out.splitlines():
            jsonschema.validate(json.loads(line), schema)
            count += 1
    print(f"{count} records valid")
    return 0 if count > 0 else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
