#!/usr/bin/env python3
"""End-to-end checks of the qsl3 command-line tool.

Usage: check_cli.py QSL3 SCHEMA_DIR GOLDEN_DIR [--update]
"""
import json
import pathlib
import subprocess
import sys

import jsonschema

QSL3, SCHEMAS, GOLDEN = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
UPDATE = "--update" in sys.argv[4:]

failures = []


def run(*args):
    p = subprocess.run([QSL3, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    if not cond:
        failures.append(what)


def run_json(*args, code=0):
    rc, out, err = run("--format", "json", *args)
    check(rc == code, f"{' '.join(args)}: exit {rc}, want {code}\n{err}")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        failures.append(f"{' '.join(args)}: not JSON ({e})")
        return None
    schema = json.loads((SCHEMAS / f"{doc.get('command', args[0])}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        failures.append(f"{' '.join(args)}: schema: {e.message}")
    return doc


def labels(node):
    """Every value stored under a 'label' key."""
    if isinstance(node, dict):
        for k, v in node.items():
            if k == "label" and isinstance(v, str):
                yield v
            else:
                yield from labels(v)
    elif isinstance(node, list):
        for v in node:
            yield from labels(v)


GOLDEN_CASES = {
    "classify_vacuum": ["classify", "--weight", "[0,0]"],
    "tensor_L3_L8": ["tensor", "--left", "L(3)[1,0]", "--right", "L(8)[1/3,2/5]", "--verify"],
    "tensor_L3_L3": ["tensor", "--left", "L(3)[1,0]", "--right", "L(3)[0,1]", "--verify"],
    "loewy_P24": ["loewy", "--label", "P(24)[1,0]"],
    "kl_to_quantum": ["kl", "to-quantum", "--label", "I3[-1/2,-1/2]"],
    "fuse_L_R": ["fuse", "--left", "A[-1/2,-1/2]", "--right", "R[0,0]"],
    "octuplet_table": ["octuplet", "table"],
    "qchar_8": ["qchar", "--family", "8", "--weight", "[1,1]", "--order", "6"],
}

for name, args in GOLDEN_CASES.items():
    rc, out, err = run(*args)
    check(rc == 0, f"{name}: exit {rc}\n{err}")
    path = GOLDEN / f"{name}.txt"
    if UPDATE:
        path.write_text(out)
    else:
        check(path.exists() and path.read_text() == out, f"{name}: output differs from {path}")

# JSON outputs validate and their labels reparse to themselves
json_cases = [
    ["classify", "--weight", "[1/3,2/5]"],
    ["char", "--label", "P(16)[0,-1/2]"],
    ["verma", "--weight", "[0,1/3]"],
    ["irrep", "--weight", "[-1/2,-1/2]", "--dump"],
    ["tensor", "--left", "L(4)[0,-1/2]", "--right", "L(4)[-1/2,0]"],
    ["loewy", "--label", "M(8)[0,0]"],
    ["loewy", "--label", "Q(9)[0,1]", "--computed"],
    ["kl", "from-quantum", "--label", "L(3)[1,0]"],
    ["kl", "coset-loewy", "--label", "P24[-1/2,-1/2]"],
    ["kl", "affine-loewy", "--label", "PA[0,0]"],
    ["kl", "restrict", "--label", "sf(1,0)*E[-11/10,-1/5]"],
    ["induce", "--coset", "I8[1/5,2/7]", "--fock", "[1/5,2/7]"],
    ["fuse", "--left", "R[1/5,1/3]", "--right", "R[-1/5,-1/3]"],
    ["fuse", "--left", "E[-11/10,-1/5]", "--right", "R[1/7,2/9]", "--level", "grothendieck"],
    ["gfuse-check", "--rule", "3", "--samples", "2"],
    ["octuplet", "fuse", "--left", "W3[-1/2,-1/2]", "--right", "W8[0,0]"],
    ["octuplet", "loewy", "--label", "P48[0,0]"],
    ["octuplet", "orbits"],
    ["qchar", "--family", "fock", "--weight", "[1,0]", "--order", "5"],
    ["selftest", "--suite", "qseries"],
]
seen = set()
for args in json_cases:
    doc = run_json(*args)
    if doc is None:
        continue
    check(doc["ok"] is True, f"{' '.join(args)}: ok is false")
    for lab in labels(doc["result"]):
        seen.add(lab)

for lab in sorted(seen):
    if lab[0] in "LMPKRSQ" and "(" in lab[:3]:
        args = ["char", "--label", lab]
        key = "label"
    elif lab.startswith(("I", "P1", "P2", "P4")) and "(" not in lab:
        args = ["kl", "to-quantum", "--label", lab]
        key = "coset"
    else:
        continue
    doc = run_json(*args)
    if doc is not None and doc["ok"]:
        check(doc["result"].get(key) == lab, f"{lab} does not round-trip: {doc['result'].get(key)}")

# error envelopes and exit codes
for args, code, kind in [
    (["classify", "--weight", "[0,0"], 2, "ParseError"),
    (["char", "--label", "X(3)[0,0]"], 2, "ParseError"),
    (["kl", "to-quantum", "--label", "I3[0,0]"], 2, "InvalidCosetWeight"),
    (["induce", "--coset", "I8[1/5,0]", "--fock", "[0,0]"], 1, "NotLocal"),
]:
    doc = run_json(*args, code=code)
    if doc is not None:
        check(doc["ok"] is False and doc["error"]["kind"] == kind,
              f"{' '.join(args)}: error kind {doc.get('error')}")
rc, _, _ = run("no-such-command")
check(rc == 2, f"unknown subcommand: exit {rc}")
rc, _, _ = run("qchar", "--family", "8", "--weight", "[0,0]", "--order", "x")
check(rc == 2, f"bad order: exit {rc}")

# the DOT output is a digraph
rc, out, _ = run("--format", "dot", "loewy", "--label", "P(16)[0,-1/2]")
check(rc == 0 and out.startswith("digraph"), "dot output")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures; {len(seen)} labels round-tripped")
sys.exit(1 if failures else 0)
