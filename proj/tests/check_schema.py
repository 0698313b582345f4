"""Validate CLI json output for every model up to dimension 10 against the schema."""
import json
import subprocess
import sys

import jsonschema

almab, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

count = 0
for dim in (4, 6, 8, 10):
    listing = subprocess.run([almab, "enumerate", "--dim", str(dim)], check=True, capture_output=True, text=True)
    for row in listing.stdout.splitlines()[1:]:
        fields = row.split()
        q, j = fields[1].strip("[]"), fields[2]
        for cmd in (["invariants", "--format", "json"], ["invariants", "--format", "json", "--oracle"],
                    ["export", "--format", "json"]):
            out = subprocess.run([almab, cmd[0], "--q", q, "--j", j, *cmd[1:]], check=True, capture_output=True,
                                 text=True)
            jsonschema.validate(json.loads(out.stdout), schema)
            count += 1

print(f"{count} records valid")
if count == 0:
    sys.exit(1)
