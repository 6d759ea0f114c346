"""End-to-end checks of the catx binary: exit codes, report schema, file round trips.

Usage: test_cli.py <catx binary> <report schema>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CATX = None
SCHEMA = None


def run(*args, stdin=None):
    return subprocess.run([CATX, *args], capture_output=True, text=True, input=stdin, timeout=240)


class ExitCodes(unittest.TestCase):
    def test_help_and_version(self):
        self.assertEqual(run("--help").returncode, 0)
        self.assertEqual(run("--version").returncode, 0)

    def test_unknown_type_is_an_input_error(self):
        r = run("roots", "--type", "Z9")
        self.assertEqual(r.returncode, 2)
        self.assertIn("Z9", r.stderr)

    def test_bad_flag_is_an_input_error(self):
        self.assertEqual(run("roots", "--frobnicate").returncode, 2)

    def test_rank_guard(self):
        self.assertEqual(run("verify", "--type", "A5", "--checks", "biclosed").returncode, 2)

    def test_j_outside_itheta(self):
        self.assertEqual(run("char", "--type", "A2", "--itheta", "1", "--j", "2", "--kind", "E").returncode, 2)


class Report(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(cls.schema)

    def verify(self, *args, out=None):
        with tempfile.TemporaryDirectory() as d:
            out = out or os.path.join(d, "report.json")
            r = run("verify", *args, "--out", out)
            with open(out) as f:
                report = json.load(f)
        jsonschema.validate(report, self.schema)
        return r.returncode, report

    def test_a2_passes_and_matches_schema(self):
        code, report = self.verify("--type", "A2", "--n", "2")
        self.assertEqual(code, 0)
        self.assertEqual(report["status"], "pass")
        self.assertEqual(report["summary"]["failed"], 0)
        biclosed = [r for r in report["records"] if r["check"] == "biclosed"]
        self.assertEqual(biclosed[0]["details"]["biclosed_sets"], 6)

    def test_rejected_convention_exits_one_with_counterexample(self):
        code, report = self.verify("--type", "A2", "--checks", "filtration", "--jprime-convention", "i-minus-j")
        self.assertEqual(code, 1)
        self.assertEqual(report["status"], "fail")
        failing = [r for r in report["records"] if not r["pass"]]
        self.assertTrue(failing)
        counting = [r for r in failing if "counting" in r["counterexample"]]
        self.assertTrue(counting)

    def test_reports_agree_apart_from_timing(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "report.json")
            _, a = self.verify("--type", "B2", "--seed", "3", "--n", "1", out=out)
            _, b = self.verify("--type", "B2", "--seed", "3", "--n", "1", out=out)
        a.pop("timing")
        b.pop("timing")
        self.assertEqual(json.dumps(a), json.dumps(b))

    def test_config_file(self):
        with tempfile.TemporaryDirectory() as d:
            cfg = os.path.join(d, "cfg.json")
            with open(cfg, "w") as f:
                json.dump({"types": ["G2"], "checks": ["biclosed", "order-axioms"], "itheta": [[1], [1, 2]]}, f)
            code, report = self.verify("--config", cfg)
        self.assertEqual(code, 0)
        self.assertEqual(report["config"]["itheta"], [[1], [1, 2]])
        self.assertEqual(len(report["records"]), 3)

    def test_malformed_config(self):
        with tempfile.TemporaryDirectory() as d:
            cfg = os.path.join(d, "cfg.json")
            with open(cfg, "w") as f:
                f.write("{types: A2")
            self.assertEqual(run("verify", "--config", cfg).returncode, 2)


class Characters(unittest.TestCase):
    def char(self, *args):
        r = run("char", *args)
        self.assertEqual(r.returncode, 0, r.stderr)
        return r.stdout

    def decompose(self, text, *args):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "c.json")
            with open(path, "w") as f:
                f.write(text)
            return run("decompose", path, *args)

    def test_projective_pattern_through_files(self):
        text = self.char("--type", "B2", "--itheta", "[1,2]", "--j", "[1]", "--kind", "M")
        r = self.decompose(text, "--json")
        self.assertEqual(r.returncode, 0)
        out = json.loads(r.stdout)
        self.assertTrue(out["complete"])
        self.assertEqual(sorted(tuple(f["J"]) for f in out["factors"]), [(1,), (1, 2)])

    def test_simple_round_trip_under_all_tie_breaks(self):
        text = self.char("--type", "A3", "--itheta", "[1,3]", "--j", "[3]", "--kind", "E")
        results = []
        for args in (["--tie-break", "default"], ["--tie-break", "reversed"], ["--tie-break", "seeded", "--seed", "5"]):
            r = self.decompose(text, "--json", *args)
            self.assertEqual(r.returncode, 0, r.stderr)
            results.append(json.loads(r.stdout)["factors"])
        self.assertEqual(results[0], [{"label": "theta", "itheta": [1, 3], "J": [3], "mult": 1}])
        self.assertTrue(all(x == results[0] for x in results))

    def test_invalid_files(self):
        bad = '{"type":"A2","itheta":[],"label":"t","weights":[{"coset_rep":[],"v":[],"mult":0}]}'
        r = self.decompose(bad)
        self.assertEqual(r.returncode, 2)
        self.assertIn("nonpositive multiplicity", r.stderr)
        self.assertEqual(self.decompose("{oops").returncode, 2)

    def test_strict_coset_rep(self):
        text = '{"type":"A2","itheta":[1],"label":"t","weights":[{"coset_rep":[1],"v":[],"mult":1}]}'
        self.assertEqual(self.decompose(text, "--strict").returncode, 2)
        r = self.decompose(text)
        self.assertNotEqual(r.returncode, 2)
        self.assertIn("canonical", r.stderr)

    def test_incomplete_decomposition_exits_one(self):
        text = '{"type":"A2","itheta":[],"label":"t","weights":[{"coset_rep":[],"v":[1],"mult":1}]}'
        self.assertEqual(self.decompose(text).returncode, 1)

    def test_csv(self):
        out = self.char("--type", "A1", "--itheta", "[]", "--j", "[]", "--kind", "M", "--csv")
        self.assertEqual(out.splitlines()[0], "label,itheta,coset_rep,v,mult")
        r = run("roots", "--type", "G2", "--csv")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.splitlines()[0], ",a1,a2")


class Algebra(unittest.TestCase):
    def test_summary(self):
        r = run("algebra", "--n", "2", "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        out = json.loads(r.stdout)
        self.assertEqual(out["dim"], 9)

    def test_module_decomposition(self):
        module = {"n": 1, "dims": {"[]": 1, "[1]": 2}, "maps": {"[]->[1]": [[1, 0]]}}
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "m.json")
            with open(path, "w") as f:
                json.dump(module, f)
            r = run("algebra", "--module", path, "--json")
        self.assertEqual(r.returncode, 0, r.stderr)
        out = json.loads(r.stdout)
        summands = out["summands"]
        self.assertEqual(sum(s["multiplicity"] for s in summands), 2)
        self.assertTrue(all(s["certified_local"] for s in summands))


if __name__ == "__main__":
    CATX, SCHEMA = sys.argv[1], sys.argv[2]
    del sys.argv[1:3]
    unittest.main(verbosity=2)
