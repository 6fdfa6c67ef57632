#!/usr/bin/env python3
# Copyright 2026 The Authors.
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
"""End-to-end checks of the bcckit command line: exit codes and JSON shape."""

import json
import os
import subprocess
import sys
import unittest

import jsonschema

BIN = None
DATA = None

INT_LIST = {"type": "array", "items": {"type": "integer"}}
SET_LIST = {"type": "array", "items": INT_LIST}

MATROID = {
    "type": "object",
    "required": ["type"],
    "properties": {"type": {"enum": ["uniform", "graphic", "linear", "circuits"]}},
}

TREE = {
    "type": "object",
    "required": ["kind"],
    "properties": {"kind": {"enum": ["uniform_circuit", "coloop", "parallel"]}},
}

REPORT = {
    "type": "object",
    "required": ["matroid", "h", "h_full", "s", "dehn_sommerville", "last_two",
                 "decomposable", "components", "ci_order", "verdict"],
    "properties": {
        "matroid": MATROID,
        "h": INT_LIST,
        "h_full": INT_LIST,
        "s": {"type": "integer"},
        "dehn_sommerville": {"type": "boolean"},
        "last_two": {"type": "boolean"},
        "decomposable": {"type": "boolean"},
        "ci_order": {"anyOf": [INT_LIST, {"type": "null"}]},
        "verdict": {"enum": ["complete_intersection", "gorenstein", "neither"]},
    },
}

ANALYZE = {
    "type": "object",
    "required": ["circuits", "rank", "beta", "order", "panel", "minimal_broken_circuits"],
    "properties": {
        "circuits": SET_LIST,
        "minimal_broken_circuits": SET_LIST,
        "order": INT_LIST,
        "panel": {"type": "object", "required": ["agree"]},
    },
}

VERIFY = {
    "type": "object",
    "required": ["passed", "checks", "corpus"],
    "properties": {
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["criterion", "name", "instances", "checks", "failure_count",
                             "failures", "passed"],
            },
        },
    },
}

OT = {
    "type": "object",
    "required": ["order", "relations", "lead_term_check", "report", "explanation"],
    "properties": {
        "relations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["circuit", "coeffs", "lead_monomial"],
                "properties": {"coeffs": {"type": "array", "items": {"type": "string"}}},
            },
        },
        "lead_term_check": {"const": True},
        "report": REPORT,
    },
}


def run(*args):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def data(name):
    return os.path.join(DATA, name)


class AnalyzeTest(unittest.TestCase):

    def test_triangle(self):
        code, out, _ = run("analyze", "U(2,3)", "--json")
        self.assertEqual(code, 0)
        j = json.loads(out)
        jsonschema.validate(j, REPORT)
        jsonschema.validate(j, ANALYZE)
        self.assertEqual(j["h"], [1, 1])
        self.assertEqual(j["verdict"], "complete_intersection")

    def test_k4_all_orders(self):
        code, out, _ = run("analyze", data("graphic-K4.json"), "--all-orders", "--json")
        self.assertEqual(code, 0)
        j = json.loads(out)
        jsonschema.validate(j, REPORT)
        self.assertEqual(j["h"], [1, 3, 2])
        self.assertEqual(j["orders"]["total"], 720)
        self.assertEqual(j["orders"]["complete_intersection"], 0)
        self.assertIsNone(j["ci_order"])

    def test_parallel_expression(self):
        code, out, _ = run("analyze", "P(U(2,3),U(2,3);3)", "--json")
        self.assertEqual(code, 0)
        j = json.loads(out)
        self.assertEqual(j["h"], [1, 2, 1])
        self.assertIsNotNone(j["ci_order"])
        tree = j["decomposition"][0]
        jsonschema.validate(tree, TREE)
        self.assertEqual(tree["kind"], "parallel")

    def test_text_output(self):
        code, out, _ = run("analyze", data("two-triangles.json"), "--order", "1,4,2,3,5")
        self.assertEqual(code, 0)
        self.assertIn("(F,F,F,F,F,F)", out)
        self.assertIn("verdict: complete_intersection", out)

    def test_errors(self):
        self.assertEqual(run("analyze", "U(2,3)", "--order", "1,2")[0], 2)
        self.assertEqual(run("analyze", "U(2,3)", "--order", "1,x,3")[0], 2)
        self.assertEqual(run("analyze", "U(3,8)", "--all-orders")[0], 3)
        self.assertEqual(run("analyze", "U(2,30)")[0], 3)
        self.assertEqual(run("analyze", "U(4,3)")[0], 4)
        self.assertEqual(run("analyze", "Q(1)")[0], 2)
        self.assertEqual(run("analyze", data("bad-circuits.json"))[0], 2)
        self.assertEqual(run("analyze")[0], 2)
        self.assertEqual(run("frobnicate")[0], 2)


class DecomposeAndOrderTest(unittest.TestCase):

    def test_decompose(self):
        code, out, _ = run("decompose", data("two-triangles.json"), "--json")
        self.assertEqual(code, 0)
        j = json.loads(out)
        self.assertTrue(j["decomposable"])
        jsonschema.validate(j["components"][0]["decomposition"], TREE)
        code, out, _ = run("decompose", data("graphic-K4.json"), "--json")
        self.assertFalse(json.loads(out)["decomposable"])

    def test_order(self):
        code, out, _ = run("order", "P(U(2,3),U(3,4);3)", "--json")
        self.assertEqual(code, 0)
        j = json.loads(out)
        self.assertEqual(sorted(j["ci_order"]), list(range(1, 7)))
        mbc = j["minimal_broken_circuits"]
        for a in range(len(mbc)):
            for b in range(a + 1, len(mbc)):
                self.assertFalse(set(mbc[a]) & set(mbc[b]))
        code, out, _ = run("order", data("graphic-K4.json"), "--json")
        self.assertIsNone(json.loads(out)["ci_order"])


class ConstructTest(unittest.TestCase):

    def test_round_trip(self):
        code, out, _ = run("construct", "S(U(1,2),U(1,2);1)")
        self.assertEqual(code, 0)
        j = json.loads(out)
        jsonschema.validate(j, MATROID)
        path = os.path.join(os.environ.get("TMPDIR", "/tmp"), "bcckit_cli_test_matroid.json")
        with open(path, "w") as f:
            json.dump(j, f)
        code, out, _ = run("analyze", path, "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["circuits"], [[1, 2, 3]])


class OtTest(unittest.TestCase):

    def test_verdicts(self):
        for name, verdict, h in [("u23-matrix.json", "complete_intersection", [1, 1]),
                                 ("generic-2x4.json", "neither", [1, 2]),
                                 ("k4-matrix.json", "neither", [1, 3, 2]),
                                 ("two-triangles-matrix.json", "complete_intersection",
                                  [1, 2, 1])]:
            code, out, _ = run("ot", data(name), "--json")
            self.assertEqual(code, 0, name)
            j = json.loads(out)
            jsonschema.validate(j, OT)
            self.assertEqual(j["report"]["verdict"], verdict, name)
            self.assertEqual(j["report"]["h"], h, name)

    def test_triangle_relation(self):
        code, out, _ = run("ot", data("u23-matrix.json"), "--json")
        rel = json.loads(out)["relations"][0]
        self.assertEqual(rel["coeffs"], ["1", "1", "-1"])
        self.assertEqual(rel["lead_monomial"], [2, 3])

    def test_text_mentions_scope(self):
        code, out, _ = run("ot", data("generic-2x4.json"))
        self.assertEqual(code, 0)
        self.assertIn("consistent with", out)

    def test_rank_deficient(self):
        self.assertEqual(run("ot", data("rank-deficient.json"))[0], 4)


class VerifyTest(unittest.TestCase):

    def test_uniform_corpus(self):
        code, out, _ = run("verify", data("corpus-uniform6.json"), "--json")
        self.assertEqual(code, 0)
        j = json.loads(out)
        jsonschema.validate(j, VERIFY)
        self.assertTrue(j["passed"])

    def test_deterministic(self):
        a = run("verify", data("corpus-uniform6.json"), "--json", "--jobs", "1")[1]
        b = run("verify", data("corpus-uniform6.json"), "--json", "--jobs", "3")[1]
        self.assertEqual(a, b)

    def test_injected_fault(self):
        code, out, _ = run("verify", data("corpus-uniform6.json"), "--inject-fault",
                           "--only", "2", "--json")
        self.assertEqual(code, 1)
        j = json.loads(out)
        check = j["checks"][0]
        self.assertFalse(check["passed"])
        jsonschema.validate(check["failures"][0]["instance"]["matroid"], MATROID)

    def test_errors(self):
        self.assertEqual(run("verify", data("corpus-over-cap.json"))[0], 3)
        self.assertEqual(run("verify", data("graphic-K4.json"))[0], 2)
        self.assertEqual(run("verify", data("missing.json"))[0], 2)


if __name__ == "__main__":
    BIN, DATA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
