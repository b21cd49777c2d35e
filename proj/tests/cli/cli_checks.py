"""Checks of the ekt command-line tool: schemas, exit codes, determinism."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMAS, MODE = sys.argv[1], sys.argv[2], sys.argv[3]
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("EKT_THREADS", None)
    if env:
        e.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=e)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def schemas():
    cases = [
        ("geodesic", ["--step", "0.5"]),
        ("geodesic", ["--kappa", "-1", "--family", "sl2-elliptic", "--a", "0.5", "--t-end", "3"]),
        ("geodesic", ["--family", "numeric", "--t-end", "2", "--step", "0.5"]),
        ("ball-volume", ["--samples", "5000", "--radii", "1,2,3,4,5,6"]),
        ("ball-volume", ["--samples", "5000", "--radii", "1,2"]),
        ("growth", ["--example", "umbrella", "--radii", "1,2,4"]),
        ("growth", ["--example", "fmp", "--family", "cylinder", "--radii", "2,3,4"]),
        ("collin-krust", ["--radii", "4,8,16"]),
        ("growth-table", ["--rows", "k-noids,zero-boundary-r3", "--quick", "1"]),
    ]
    for cmd, args in cases:
        r = run(cmd, *args, "--format", "json")
        label = cmd + " " + " ".join(args)
        if r.returncode != 0:
            check(False, label + ": exit " + str(r.returncode) + " " + r.stderr.strip())
            continue
        try:
            jsonschema.validate(json.loads(r.stdout), schema(cmd))
            check(True, label + " validates")
        except jsonschema.ValidationError as e:
            check(False, label + ": " + e.message)


def exit_codes():
    with tempfile.TemporaryDirectory() as d:
        bad = os.path.join(d, "bad.cfg")
        with open(bad, "w") as f:
            f.write("tau = 2\nbogus = 1\n")
        good = os.path.join(d, "good.cfg")
        with open(good, "w") as f:
            f.write("# Nil with tau = 2\ntau = 2\nt_end = 1\nstep = 0.5\nformat = json\n")
        out = os.path.join(d, "out.csv")
        cases = [
            (["geodesic", "--phi", "4"], 2),
            (["geodesic", "--family", "sl2-horizontal"], 2),
            (["ball-volume", "--samples", "999"], 2),
            (["growth", "--example", "helicoid"], 2),
            (["growth", "--radii", "1,x"], 2),
            (["geodesic", "--config", bad], 2),
            (["geodesic", "--config", os.path.join(d, "missing.cfg")], 2),
            (["growth", "--no-such-flag", "1"], 2),
            ([], 2),
            (["collin-krust", "--tau", "0", "--example", "poly", "--poly", "1:0:0,1:1:0",
              "--domain", "half-plane"], 3),
            (["collin-krust", "--tau", "0", "--example", "poly", "--poly", "0:0:0",
              "--domain", "half-plane"], 3),
            (["collin-krust", "--tau", "0", "--example", "poly", "--poly", "1:1:0",
              "--domain", "half-plane"], 0),
            (["geodesic", "--config", good], 0),
            (["geodesic", "--out", out], 0),
            (["geodesic", "--help"], 0),
        ]
        for args, code in cases:
            r = run(*args)
            check(r.returncode == code, " ".join(args) + " -> exit " + str(r.returncode) +
                  " (want " + str(code) + ")")
        r = run("geodesic", "--config", good, "--tau", "3")
        doc = json.loads(r.stdout)
        check(doc["config"]["tau"] == 3 and doc["config"]["t_end"] == 1,
              "flags override the config file")
        with open(out) as f:
            text = f.read()
        check(text.startswith("t,x,y,z,a1,a2,a3,speed_drift,residual\n") and "\r" not in text,
              "--out writes LF-terminated CSV with a header")


def determinism():
    cases = [
        ["ball-volume", "--samples", "40000", "--seed", "17"],
        ["ball-volume", "--kappa", "-1", "--tau", "0", "--samples", "20000", "--radii", "1,2"],
        ["growth", "--example", "umbrella", "--radii", "1,2,3,4"],
        ["growth", "--example", "fmp", "--family", "intrinsic", "--radii", "1,1.5,2", "--cells", "32",
         "--max-cells", "64"],
        ["collin-krust", "--radii", "4,8"],
    ]
    for args in cases:
        for fmt in ("csv", "json"):
            outs = [run(*args, "--format", fmt, "--threads", "1").stdout,
                    run(*args, "--format", fmt, "--threads", "3").stdout,
                    run(*args, "--format", fmt, env={"EKT_THREADS": "2"}).stdout,
                    run(*args, "--format", fmt, "--threads", "1").stdout]
            check(outs[0] != "" and all(o == outs[0] for o in outs),
                  " ".join(args) + " [" + fmt + "] identical across thread counts")
    a = run("ball-volume", "--samples", "40000", "--seed", "17").stdout
    b = run("ball-volume", "--samples", "40000", "--seed", "18").stdout
    check(a != b, "different seeds give different volumes")


{"schemas": schemas, "exit_codes": exit_codes, "determinism": determinism}[MODE]()
sys.exit(1 if failures else 0)
