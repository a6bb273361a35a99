"""Validate `dgscert certify --json` output against docs/certificate.schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path, *graphs = sys.argv[1:]
with open(schema_path) as f:
    schema = json.load(f)
for g in graphs:
    out = subprocess.run([cli, "certify", g, "--json"], capture_output=True, text=True)
    if out.returncode not in (0, 2):
        sys.exit(f"{g}: exit {out.returncode}: {out.stderr}")
    jsonschema.validate(json.loads(out.stdout), schema)
    print(f"{g}: ok")
