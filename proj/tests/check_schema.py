"""Validate `folia reduce --json` transcripts and replay them."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

ROTATION = "2*y*z - x*z; -y*z - 2*x*z; x^2 + y^2"


def run(binary, *args):
    return subprocess.run([binary, *args], capture_output=True, text=True, check=False)


def check(binary, validator, label, args):
    proc = run(binary, "reduce", "--json", *args)
    if proc.returncode != 0:
        return [f"{label}: reduce exited {proc.returncode}: {proc.stderr.strip()}"]
    doc = json.loads(proc.stdout)
    errors = [f"{label}: {e.message}" for e in validator.iter_errors(doc)]
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as tmp:
        tmp.write(proc.stdout)
    replay = run(binary, "replay", tmp.name)
    pathlib.Path(tmp.name).unlink()
    if replay.returncode != 0:
        errors.append(f"{label}: replay exited {replay.returncode}: {replay.stderr.strip()}")
    return errors


def main():
    binary, schema_path, corpus = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    errors = []
    files = sorted(pathlib.Path(corpus).glob("*.form"))
    for path in files:
        errors += check(binary, validator, path.name, [str(path)])
    errors += check(binary, validator, "cluster", ["-e", ROTATION])
    for e in errors:
        print(e)
    print(f"{len(files) + 1} transcripts, {len(errors)} problems")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
