import json
import subprocess
import sys

import jsonschema

exe, schemas, data = sys.argv[1:4]

with open(f"{schemas}/verdict_report.schema.json") as f:
    report_schema = json.load(f)
with open(f"{schemas}/exceptional_orbits.schema.json") as f:
    orbit_schema = json.load(f)
with open(f"{data}/exceptional_orbits.json") as f:
    jsonschema.validate(json.load(f), orbit_schema)

run = subprocess.run([exe, "verify-paper", "--json", "--timing", "--jobs", "2"], capture_output=True, text=True)
if run.returncode != 0:
    sys.exit(f"verify-paper exited {run.returncode}\n{run.stderr}")
report = json.loads(run.stdout)
jsonschema.validate(report, report_schema)

# a failing report without a witness must be rejected by the schema
bad = dict(report)
bad["reports"] = [dict(report["reports"][0], status="fail", witness=None)]
try:
    jsonschema.validate(bad, report_schema)
except jsonschema.ValidationError:
    pass
else:
    sys.exit("schema accepted a failure without a witness")
print(f"{len(report['reports'])} reports valid")
