#!/usr/bin/env python3
"""Runs the preimage tool with --json and validates every report against the schema.

usage: check_reports.py <preimage binary> <schema.json> <data dir>
"""

import json
import os
import subprocess
import sys

import jsonschema

ANSWER_EXIT = {"yes": 0, "no": 1, "unknown": 2, "unknown-budget": 2}


def main() -> int:
    tool, schema_path, data = sys.argv[1:4]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    def path(name: str) -> str:
        return os.path.join(data, name)

    invocations = []
    for problem in ["extend", "extend-total", "avoid", "resize"]:
        for method in ["auto", "poly", "oracle"]:
            for subset in ["", "0", "1,2", "0,1,2,3"]:
                base = ["check", path("cerny4.aut"), "--subset", subset, "--problem", problem,
                        "--method", method, "--json"]
                invocations.append(base)
                invocations.append(base + ["--witness"])
                invocations.append(base + ["--max-len", "2"])
        invocations.append(["check", path("perm3.aut"), "--subset", "0", "--problem", problem, "--json"])
        invocations.append(["check", path("chain2.aut"), "--subset", "0", "--problem", problem, "--witness",
                            "--json"])
    invocations += [
        ["check", path("cerny4.aut"), "--subset", "1,2", "--problem", "extend", "--method", "poly",
         "--budget", "3", "--json"],
        ["check", path("cerny4.aut"), "--subset", "1", "--problem", "resize", "--method", "oracle",
         "--oracle-cap", "3", "--json"],
        ["check", path("cerny4.aut"), "--subset", "1,2", "--problem", "extend", "--json", "--timing"],
        ["oracle", path("cerny4.aut"), "--subset", "1,2", "--goal", "totally-extending", "--json"],
        ["oracle", path("perm3.aut"), "--subset", "1", "--goal", "avoiding", "--json"],
        ["classify", path("cerny4.aut"), "--json"],
        ["classify", path("chain2.aut"), "--json"],
        ["rank", path("perm3.aut"), "--json"],
        ["rank", path("cerny4.aut"), "--method", "oracle", "--json"],
        ["rank", path("cerny4.aut"), "--method", "oracle", "--oracle-cap", "2", "--json"],
        ["reset", path("cerny4.aut"), "--json"],
        ["reset", path("cerny4.aut"), "--method", "oracle", "--json"],
        ["reset", path("perm3.aut"), "--json"],
    ]

    failures = 0
    for args in invocations:
        first = subprocess.run([tool] + args, capture_output=True, text=True)
        second = subprocess.run([tool] + args, capture_output=True, text=True)
        label = " ".join(args)
        try:
            report = json.loads(first.stdout)
            validator.validate(report)
            if json.loads(json.dumps(report)) != report:
                raise ValueError("report does not round-trip")
            if "--timing" not in args and first.stdout != second.stdout:
                raise ValueError("output differs between identical runs")
            if "answer" in report and args[0] in ("check", "oracle"):
                if first.returncode != ANSWER_EXIT[report["answer"]]:
                    raise ValueError(f"exit {first.returncode} for answer {report['answer']}")
            if report.get("witness_letters") is not None:
                if len(report["witness_letters"]) != report["witness_length"]:
                    raise ValueError("witness length mismatch")
        except (ValueError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL {label}: {e}\n{first.stdout}{first.stderr}")
    print(f"{len(invocations)} reports checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
