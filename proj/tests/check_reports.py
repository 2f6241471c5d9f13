#!/usr/bin/env python3
"""Validate CLI JSON reports against the schema and check run-to-run determinism."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema


def run(cli, args):
    out = subprocess.run([cli, *args, "--json"], check=True, capture_output=True, text=True)
    return out.stdout


def without_timing(text):
    report = json.loads(text)
    report.pop("timing")
    return json.dumps(report, sort_keys=True)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--data", required=True)
    parser.add_argument("--schema", required=True)
    args = parser.parse_args()

    schema = json.loads(pathlib.Path(args.schema).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    data = pathlib.Path(args.data)

    runs = [
        ("ksdim", "free.sk"),
        ("ksdim", "x1_kills_y1.sk"),
        ("oracle", "x1_kills_y1.sk"),
        ("onerel", "two_term.sk"),
        ("onerel", "disjoint_triples.sk"),
        ("regular", "square_zero.sk"),
        ("regular", "torsion.sk"),
        ("omega", "square_zero.sk"),
        ("omega", "torsion.sk"),
        ("experiment", "two_term.sk", "--seed", "5", "--trials", "12"),
    ]
    failures = 0
    for command, name, *extra in runs:
        argv = [command, str(data / name), *extra]
        first = run(args.cli, argv)
        second = run(args.cli, argv)
        errors = sorted(validator.iter_errors(json.loads(first)), key=str)
        for error in errors:
            print(f"{' '.join(argv)}: {error.message}")
        if without_timing(first) != without_timing(second):
            print(f"{' '.join(argv)}: output differs between runs")
            errors.append("nondeterministic")
        # Apart from the timing line the printed text itself must match.
        strip = lambda t: [l for l in t.splitlines() if '"seconds"' not in l]
        if strip(first) != strip(second):
            print(f"{' '.join(argv)}: printed JSON differs between runs")
            errors.append("nondeterministic text")
        failures += bool(errors)
        print(f"{'ok' if not errors else 'FAILED'}: {' '.join([command, name, *extra])}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
