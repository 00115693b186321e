import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

runs = [
    ["verify", "--n", "2", "--suite", "qbg", "--json"],
    ["verify", "--n", "2", "--suite", "relations", "--json", "--timing"],
    ["verify", "--n", "1", "--suite", "all", "--mode", "exact", "--json"],
]
for args in runs:
    p = subprocess.run([exe] + args, capture_output=True, text=True)
    if p.returncode != 0:
        sys.exit(f"{args}: exit {p.returncode}\n{p.stderr}")
    doc = json.loads(p.stdout)
    reports = doc if isinstance(doc, list) else [doc]
    for r in reports:
        jsonschema.validate(r, schema)
        timed = "--timing" in args
        for c in r["checks"]:
            if ("seconds" in c) != timed:
                sys.exit(f"{args}: seconds field presence wrong in {c['id']}")
    print(f"ok {' '.join(args)}: {len(reports)} report(s)")
