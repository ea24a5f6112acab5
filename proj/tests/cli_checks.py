"""Exit-code and output checks for the godeaux binary.

usage: cli_checks.py GODEAUX_BINARY SCHEMA DATA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

binary, schema_path, data_dir = sys.argv[1:4]
failures = []


def run(*args, env=None):
    full_env = {k: v for k, v in os.environ.items() if k != "GODEAUX_OUTPUT_DIR"}
    full_env.update(env or {})
    return subprocess.run([binary, *args], capture_output=True, text=True, env=full_env, timeout=300)


def expect(name, ok, detail=""):
    print(("PASS " if ok else "FAIL ") + name + (f": {detail}" if detail and not ok else ""))
    if not ok:
        failures.append(name)


with open(schema_path) as f:
    schema = json.load(f)

# JSON reports validate and are stable apart from the timestamp.
for suite in ["quintic", "v-lattice", "cover", "fibre", "all"]:
    first = run("verify", "--suite", suite, "--format", "json")
    expect(f"verify {suite} exits 0", first.returncode == 0, first.stderr)
    try:
        doc = json.loads(first.stdout)
        jsonschema.validate(doc, schema)
        expect(f"verify {suite} json validates", True)
        expect(f"verify {suite} summary tally",
               doc["summary"]["total"] == len(doc["checks"])
               and doc["summary"]["pass"] == sum(c["status"] == "PASS" for c in doc["checks"]))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        expect(f"verify {suite} json validates", False, str(e)[:300])
        continue
    if suite in ("v-lattice", "fibre"):
        second = run("verify", "--suite", suite, "--format", "json")
        strip = lambda text: "\n".join(l for l in text.splitlines() if '"timestamp"' not in l)
        expect(f"verify {suite} deterministic", strip(first.stdout) == strip(second.stdout))

perturbed = run("verify", "--suite", "quintic", "--perturb", "--format", "json")
expect("perturbed quintic exits 1", perturbed.returncode == 1, str(perturbed.returncode))
jsonschema.validate(json.loads(perturbed.stdout), schema)

expect("unknown suite exits 2", run("verify", "--suite", "bogus").returncode == 2)
expect("unknown format exits 2", run("verify", "--format", "yaml").returncode == 2)
expect("unknown flag exits 2", run("verify", "--frobnicate").returncode == 2)
expect("no subcommand exits 2", run().returncode == 2)

with tempfile.TemporaryDirectory() as tmp:
    cfg = os.path.join(tmp, "run.conf")
    with open(cfg, "w") as f:
        f.write("# config\nsuite = v-lattice\nformat = markdown\n")
    r = run("verify", "--config", cfg)
    expect("config file selects suite and format", r.returncode == 0 and r.stdout.startswith("# Verification report: v-lattice"))
    r = run("verify", "--config", cfg, "--format", "text")
    expect("flags override config", r.returncode == 0 and r.stdout.startswith("v-lattice (godeaux"))
    with open(cfg, "a") as f:
        f.write("colour = blue\n")
    expect("bad config key exits 2", run("verify", "--config", cfg).returncode == 2)

    out = os.path.join(tmp, "reports")
    r = run("verify", "--suite", "fibre", "--format", "json", env={"GODEAUX_OUTPUT_DIR": out})
    expect("GODEAUX_OUTPUT_DIR receives the report",
           r.returncode == 0 and os.path.exists(os.path.join(out, "report.json")) and r.stdout == "")
    flag_out = os.path.join(tmp, "flag")
    r = run("verify", "--suite", "fibre", "--output-dir", flag_out, env={"GODEAUX_OUTPUT_DIR": out})
    expect("--output-dir beats the environment", os.path.exists(os.path.join(flag_out, "report.txt")))

    germ = os.path.join(tmp, "germ.txt")
    with open(germ, "w") as f:
        f.write("# normal form\nz^2 + x^3 + y^6\n")
    expect("certify-germ normal form exits 0", run("certify-germ", "--input", germ).returncode == 0)
    with open(germ, "w") as f:
        f.write("z^2 + x^3\n")
    expect("certify-germ z^2 + x^3 exits 1", run("certify-germ", "--input", germ).returncode == 1)
    with open(germ, "w") as f:
        f.write("z^2 + x^3 +\n")
    expect("certify-germ malformed input exits 2", run("certify-germ", "--input", germ).returncode == 2)

for p in ["a1", "a2", "a3", "a4"]:
    r = run("certify-germ", "--point", p, "--verbose")
    expect(f"certify-germ {p} exits 0", r.returncode == 0 and "PASS" in r.stdout, r.stdout + r.stderr)
expect("certify-germ bad point exits 2", run("certify-germ", "--point", "a5").returncode == 2)
expect("certify-germ without input exits 2", run("certify-germ").returncode == 2)

lat = os.path.join(data_dir, "godeaux.lat")
r = run("lattice", "eval", "(3K-R).(3K-R)", "--decls", lat)
expect("lattice eval (3K-R)^2 prints 0", r.returncode == 0 and r.stdout == "0\n", repr(r.stdout))
r = run("lattice", "eval", "genus(4K - R)")
expect("lattice eval default lattice", r.returncode == 0 and r.stdout == "5\n", repr(r.stdout))
expect("lattice eval parse error exits 2", run("lattice", "eval", "K..K").returncode == 2)

r = run("dump-quintic", "--real", "20")
expect("dump-quintic --real 20", r.returncode == 0 and "\na = u^2    ~ [0.569840290998053265" in r.stdout, r.stdout[:200])
expect("dump-quintic --real 1001 exits 2", run("dump-quintic", "--real", "1001").returncode == 2)
expect("dump-quintic --real 0 exits 2", run("dump-quintic", "--real", "0").returncode == 2)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
