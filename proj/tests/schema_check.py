"""Validate every canonical config printed by the CLI against the printed PantsConfig schema."""
import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(0)

cli = sys.argv[1]


def run(*args):
    p = subprocess.run([cli, *args], capture_output=True, text=True, check=True)
    return json.loads(p.stdout)


docs = run("schema")
assert docs["payload"]["schema"] == 1, "schema version missing"
schema = docs["payload"]["pants_config"]
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)
result_validator = jsonschema.Draft202012Validator(docs["payload"]["result"])
result_validator.validate(docs)

types = [("A", n) for n in range(1, 9)] + [("B", 2 * n) for n in range(1, 9)]
types += [("Whi", 2 * n) for n in range(2, 9)] + [("WhiPrime", 4 * n) for n in range(2, 9)]
types += [("WhiHat", n) for n in range(2, 9)] + [("WhiPrimeHat", 2 * n) for n in range(1, 9)]
types += [(k, 0) for k in ["T3", "T4", "Bor6", "Mag4", "Tet8", "Pen10", "Oct8", "TetHat2", "PenHat4", "OctHat4", "BInf", "WhiInf"]]

failures = 0
for kind, n in types:
    args = ["canonical", "--type", kind] + (["--n", str(n)] if n else [])
    doc = run(*args)
    result_validator.validate(doc)
    config = doc["payload"]
    errors = sorted(validator.iter_errors(config), key=str)
    if errors:
        failures += 1
        print(f"{kind} {n}: {errors[0].message}")

bad = run("canonical", "--type", "A", "--n", "2")["payload"]
bad["geodesics"][0]["sides"][0] = "X"
if validator.is_valid(bad):
    failures += 1
    print("side label X accepted")

print(f"{len(types)} canonical configs checked, {failures} failures")
sys.exit(1 if failures else 0)
