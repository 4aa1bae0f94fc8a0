#!/usr/bin/env python3
# Copyright 2026 The gadepth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/demo: three Eagle-like device tables, a corpus of
compiled-circuit versions and its manifest.

    python3 tools/gen_demo.py data/demo

weights.json is produced separately with `gadepth weights`.
"""

import argparse
import json
import pathlib
import random

WIDTH = 16
ECR_S = 5.33e-7
SX_S = 5.02e-8
COMPILERS = ["opt0", "opt1", "opt2", "opt3"]


def coupling(rng):
    """Directed ecr edges: a line plus a few chords, one direction each."""
    edges = [(q, q + 1) for q in range(WIDTH - 1)]
    edges += [(q, q + 4) for q in range(0, WIDTH - 4, 4)]
    return [e if rng.random() < 0.5 else (e[1], e[0]) for e in edges]


def device(rng, name, edges):
    entries = []
    for a, b in edges:
        entries.append({"gate": "ecr", "qubits": [a, b],
                        "duration_s": ECR_S * rng.uniform(0.75, 1.25)})
    for q in range(WIDTH):
        sx = SX_S * rng.uniform(0.95, 1.05)
        entries.append({"gate": "sx", "qubits": [q], "duration_s": sx})
        entries.append({"gate": "x", "qubits": [q], "duration_s": sx})
        entries.append({"gate": "rz", "qubits": [q], "duration_s": 0.0})
    return {"device": name, "architecture": "eagle", "entries": entries}


def single(rng, q, rz_share):
    if rng.random() < rz_share:
        return f"rz({rng.uniform(-3.14, 3.14):.6f}) q[{q}];"
    return f"{'sx' if rng.random() < 0.8 else 'x'} q[{q}];"


def version(rng, n, interactions, edges):
    """One compiled version: the base's interactions with a random amount
    of single-qubit dressing and two-qubit overhead."""
    dressing = rng.uniform(0.5, 4.0)
    rz_share = rng.uniform(0.3, 0.9)
    overhead = rng.uniform(0.0, 0.4)
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{n}];"]
    for a, b in interactions:
        a, b = (a, b) if (a, b) in edges else (b, a)
        for q in (a, b):
            for _ in range(int(rng.expovariate(1.0 / dressing))):
                lines.append(single(rng, q, rz_share))
        repeats = 1 + (1 if rng.random() < overhead else 0)
        for _ in range(repeats):
            lines.append(f"ecr q[{a}],q[{b}];")
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("out", type=pathlib.Path)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--bases", type=int, default=15)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    edges = coupling(rng)
    (args.out / "devices").mkdir(parents=True, exist_ok=True)
    (args.out / "circuits").mkdir(parents=True, exist_ok=True)
    for name in ["eagle_a", "eagle_b", "eagle_c"]:
        table = device(rng, name, edges)
        (args.out / "devices" / f"{name}.json").write_text(json.dumps(table, indent=1) + "\n")

    manifest = {"bases": []}
    for b in range(args.bases):
        n = rng.randint(4, 12)
        local = [e for e in edges if max(e) < n]
        interactions = [rng.choice(local) for _ in range(rng.randint(8, 30))]
        base = f"base{b:02d}"
        versions = []
        for compiler in COMPILERS:
            rel = f"circuits/{base}_{compiler}.qasm"
            (args.out / rel).write_text(version(rng, n, interactions, set(edges)))
            versions.append({"compiler": compiler, "file": rel})
        manifest["bases"].append({"name": base, "versions": versions})
    (args.out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
