#!/usr/bin/env python3
"""Runs the CLI with --format json and checks the report round-trips through
a JSON parser unchanged."""
import json
import subprocess
import sys

binary = sys.argv[1]
args = sys.argv[2:]
out = subprocess.run([binary, "--format", "json"] + args, capture_output=True, text=True)
if out.returncode not in (0, 1):
    sys.exit(f"unexpected exit code {out.returncode}: {out.stderr}")
doc = json.loads(out.stdout)
again = json.loads(json.dumps(doc))
if doc != again:
    sys.exit("JSON report does not round-trip")
for key in ("command", "overall", "results"):
    if key not in doc:
        sys.exit(f"missing key {key}")
for result in doc["results"]:
    for key in ("name", "status", "elapsed_seconds", "checks"):
        if key not in result:
            sys.exit(f"missing result key {key}")
print("json round-trip ok:", doc["command"], doc["overall"])
