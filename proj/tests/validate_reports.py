"""Runs every golden invocation with --json and validates the report."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

tool = str(Path(sys.argv[1]).resolve())
golden, schema_path = Path(sys.argv[2]), Path(sys.argv[3])
validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))

bad = 0
count = 0
for line in (golden / "cases.txt").read_text().splitlines():
    if not line.strip() or line.startswith("#"):
        continue
    name, _code, *args = line.split()
    if not args or args[0] == "--help":
        continue
    if "--json" not in args:
        args.append("--json")
    out = subprocess.run([tool, *args], cwd=golden / "inputs", capture_output=True, text=True).stdout
    errors = list(validator.iter_errors(json.loads(out)))
    count += 1
    for e in errors:
        bad += 1
        print(f"{name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")

print(f"{count} reports checked, {bad} schema violations")
sys.exit(1 if bad or count == 0 else 0)
