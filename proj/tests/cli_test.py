"""Command-line behaviour and report schema checks.

Run as `cli_test.py <triconic binary> <schema> [unittest args]`.
"""

import json
import os
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = ""
SCHEMA = ""


def run(*args, check=None):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    if check is not None and p.returncode != check:
        raise AssertionError(f"{args}: exit {p.returncode}, stderr {p.stderr}")
    return p


def write(path, doc):
    with open(path, "w") as f:
        f.write(doc if isinstance(doc, str) else json.dumps(doc))
    return path


class Workdir(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = cls.tmp.name
        run("catalog", "fixtures", "--out-dir", cls.dir, check=0)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def fixture(self, name):
        return os.path.join(self.dir, name + ".conics.json")

    def path(self, name):
        return os.path.join(self.dir, name)


class ExitCodes(Workdir):
    def test_ok(self):
        self.assertEqual(run("analyze", self.fixture("persson")).returncode, 0)

    def test_parse_errors(self):
        cases = {
            "notjson": "{",
            "badliteral": {"field": {"D": 1}, "conics": [["1", "2/4", "0", "0", "0", "0"]] * 3},
            "missingfield": {"conics": []},
            "numbers": {"field": {"D": 1}, "conics": [[1, 0, 0, 0, 0, 0]] * 3},
        }
        for name, doc in cases.items():
            with self.subTest(name):
                p = run("analyze", write(self.path(name + ".json"), doc))
                self.assertEqual(p.returncode, 2, p.stderr)
        self.assertEqual(run("analyze", self.path("nonexistent.json")).returncode, 2)
        self.assertEqual(run("plot", self.fixture("persson"), "-o", self.path("x.svg"), "--slice", "Z=").returncode, 2)

    def test_validation_errors(self):
        cases = {
            "singular": {"field": {"D": 1}, "conics": [["1", "0", "0", "0", "0", "0"], ["1", "1", "-1", "0", "0", "0"],
                                                       ["1", "2", "-1", "0", "0", "0"]]},
            "duplicate": {"field": {"D": 1}, "conics": [["1", "1", "-1", "0", "0", "0"]] * 3},
            "two": {"field": {"D": 1}, "conics": [["1", "1", "-1", "0", "0", "0"], ["1", "2", "-1", "0", "0", "0"]]},
            "squareD": {"field": {"D": 4}, "conics": [["1", "1", "-1", "0", "0", "0"]] * 3},
            "sqrtOverQ": {"field": {"D": 1}, "conics": [[{"r": "1", "s": "1"}, "1", "-1", "0", "0", "0"],
                                                        ["1", "2", "-1", "0", "0", "0"], ["1", "3", "-1", "0", "0", "0"]]},
        }
        for name, doc in cases.items():
            with self.subTest(name):
                p = run("analyze", write(self.path(name + ".json"), doc))
                self.assertEqual(p.returncode, 3, p.stderr)

    def test_unsupported(self):
        doc = {"field": {"D": 1}, "conics": [["1", "1", "0", "0", "1", "0"], ["1", "1", "0", "1", "1", "0"],
                                             ["1", "2", "0", "0", "1", "0"]]}
        p = run("analyze", write(self.path("unsupported.json"), doc))
        self.assertEqual(p.returncode, 4)
        self.assertIn("outside the taxonomy", p.stderr)

    def test_constraint_clause(self):
        p = run("catalog", "instantiate", "F4", "--params", "p=1,r=1")
        self.assertNotEqual(p.returncode, 0)
        self.assertIn("constraint violated: p != r", p.stderr)
        p = run("catalog", "instantiate", "F3", "--params", "m=1,p=0", "--field", "5")
        self.assertIn("no solution in field", p.stderr)


class Analyze(Workdir):
    def report(self, name, *flags):
        return json.loads(run("analyze", self.fixture(name), "--json", *flags, check=0).stdout)

    def test_fixtures(self):
        self.assertTrue(self.report("persson")["free"])
        self.assertTrue(self.report("pokora")["free"])
        r = self.report("example2")
        self.assertFalse(r["free"])
        self.assertEqual(r["weak_combinatorics"], [2, 3, 0, 0, 0, 1, 0, 0, 0])
        self.assertEqual(r["tau_global"], 18)
        self.assertIsNone(r["catalog_match"])
        self.assertEqual(self.report("persson")["catalog_match"]["family"], "F4")

    def test_json_is_one_line(self):
        out = run("analyze", self.fixture("pokora"), "--json", check=0).stdout
        self.assertEqual(out.count("\n"), 1)

    def test_seed_is_recorded(self):
        r = self.report("pokora", "--seed", "17")
        self.assertGreaterEqual(r["frame"]["seed"], 17)
        self.assertEqual(r["weak_combinatorics"], self.report("pokora")["weak_combinatorics"])

    def test_text_and_json_agree(self):
        for name in ("persson", "pokora", "example2"):
            with self.subTest(name):
                r = self.report(name)
                text = run("analyze", self.fixture(name), check=0).stdout
                fields = dict(re.findall(r"^([a-z_0-9]+): (.*)$", text, re.M))
                for key in ("tau_local", "tau_global", "mdr", "d2", "dpw_lhs", "dpw_rhs"):
                    want = r[key]
                    got = fields[key]
                    self.assertEqual(got, str(want) if want is not None else got, key)
                    if want is None:
                        self.assertIn(got, (">2", "-"))
                self.assertEqual(fields["free"], "true" if r["free"] else "false")
                self.assertEqual(fields["hilbert"].split(), [str(h) for h in r["hilbert"]])
                wc = re.search(r"^weak combinatorics: \((.*)\)$", text, re.M).group(1)
                self.assertEqual([int(x) for x in wc.split(",")], r["weak_combinatorics"])


class Enumerate(unittest.TestCase):
    def lines(self, *args):
        p = run("enumerate", *args, check=0)
        return p.stdout.splitlines(), p.stderr

    def test_counts(self):
        self.assertEqual(len(self.lines("--d1", "2")[0]), 25)
        self.assertEqual(len(self.lines("--d1", "1", "--with-j")[0]), 0)
        lines, err = self.lines("--d1", "2", "--with-j", "--feasibility")
        self.assertEqual(len(lines), 31)
        self.assertTrue(all("feasible" in l for l in lines))
        self.assertEqual(err.count("notice:"), 2)
        self.assertIn("(0, 1, 0, 0, 0, 1, 0, 0, 1)", err)
        self.assertIn("(2, 0, 0, 0, 1, 0, 0, 0, 1)", err)

    def test_golden_format(self):
        lines, _ = self.lines("--d1", "2")
        golden = os.path.join(os.path.dirname(SCHEMA), "..", "data", "ade_d1_2.tuples.txt")
        with open(golden) as f:
            want = [l.strip() for l in f if l.strip() and not l.startswith("#")]
        self.assertEqual(lines, want)
        self.assertEqual(lines, sorted(lines, key=lambda l: [int(x) for x in l.split()]))

    def test_bad_d1(self):
        self.assertNotEqual(run("enumerate", "--d1", "3").returncode, 0)


class Catalog(Workdir):
    def test_list(self):
        m = json.loads(run("catalog", "list", "--json", check=0).stdout)
        self.assertEqual(len(m["families"]), 6)
        self.assertEqual(len(m["fixtures"]), 3)
        text = run("catalog", "list", check=0).stdout.splitlines()
        self.assertEqual(len(text), 9)

    def test_auto_solve(self):
        p = run("catalog", "instantiate", "F3", "--params", "m=1,p=0", check=0)
        doc = json.loads(p.stdout)
        self.assertEqual(doc["roots"], [{"r": "0", "s": "1"}, {"r": "0", "s": "-1"}])
        self.assertEqual(doc["field"]["D"], -3)
        self.assertIn("solved a", p.stderr)
        other = json.loads(run("catalog", "instantiate", "F3", "--params", "m=1,p=0", "--root", "1", check=0).stdout)
        self.assertEqual(other["params"]["a"], {"r": "0", "s": "-1"})

    def test_f2_fallback_logged(self):
        doc = json.loads(run("catalog", "instantiate", "F2", "--params", "b=1,c=1", check=0).stdout)
        self.assertEqual(doc["route"], "constructive")
        self.assertTrue(any("stated equations failed verification" in l for l in doc["log"]))

    def test_round_trip(self):
        m = json.loads(run("catalog", "list", "--json", check=0).stdout)
        for fam in m["families"]:
            self.assertGreaterEqual(len(fam["samples"]), 3)
            for i, s in enumerate(fam["samples"]):
                with self.subTest(family=fam["id"], params=s["params"]):
                    out = self.path(f"{fam['id']}_{i}.conics.json")
                    run("catalog", "instantiate", fam["id"], "--params", s["params"], "--field", str(s["D"]),
                        "-o", out, check=0)
                    r = json.loads(run("analyze", out, "--json", check=0).stdout)
                    self.assertEqual(r["weak_combinatorics"], fam["expected_tuple"])
                    self.assertEqual(sorted(r["pair_decomposition"]), sorted(fam["expected_pairs"]))
                    self.assertEqual(r["tau_global"], 19)
                    self.assertEqual(r["mdr"], 2)
                    self.assertEqual(r["dpw_lhs"], 19)
                    self.assertTrue(r["free"])
                    self.assertEqual(r["catalog_match"]["family"], fam["id"])


class Plot(Workdir):
    def svg(self, src, *flags):
        out = self.path("plot.svg")
        run("plot", src, "-o", out, *flags, check=0)
        with open(out) as f:
            return f.read()

    def test_deterministic_f1(self):
        src = self.path("f1.conics.json")
        run("catalog", "instantiate", "F1", "--params", "u=1/2", "-o", src, check=0)
        a = self.svg(src, "--slice", "Z = X + Y + 1")
        b = self.svg(src, "--slice", "Z = X + Y + 1")
        self.assertEqual(a, b)
        self.assertEqual(a.count('class="singular"'), 3)
        self.assertEqual(a.count('class="Q1"') > 0 and a.count('class="Q3"') > 0, True)
        analyze_svg = self.path("analyze.svg")
        run("analyze", src, "--plot", analyze_svg, "--slice", "Z = X + Y + 1", check=0)
        with open(analyze_svg) as f:
            self.assertEqual(f.read(), a)

    def test_f6_slice(self):
        src = self.path("f6.conics.json")
        run("catalog", "instantiate", "F6", "--params", "p=0,q=1", "-o", src, check=0)
        svg = self.svg(src, "--slice", "Z = Y + 1", "--window", "-3,3,-3,3")
        self.assertIn("chart Z = Y + 1", svg)
        self.assertGreaterEqual(svg.count('class="singular"'), 1)

    def test_empty_real_slice(self):
        doc = {"field": {"D": 1}, "conics": [["1", "1", "1", "0", "0", "0"], ["1", "2", "1", "0", "0", "0"],
                                             ["1", "3", "5", "1", "0", "0"]]}
        svg = self.svg(write(self.path("empty.conics.json"), doc))
        self.assertIn("empty real slice", svg)
        self.assertEqual(svg.count('class="singular"'), 0)
        self.assertIn("complex", svg)

    def test_bad_slice(self):
        p = run("plot", self.fixture("persson"), "-o", self.path("x.svg"), "--slice", "Z = X + Y")
        self.assertEqual(p.returncode, 1)
        self.assertIn("constant term", p.stderr)


class VerifyAll(Workdir):
    def test_filter(self):
        p = run("verify-all", "--filter", "enumeration", "--json", check=0)
        r = json.loads(p.stdout)
        self.assertTrue(r["passed"])
        self.assertEqual([c["id"] for c in r["criteria"]], [1, 2, 3, 4])

    def test_corrupted_golden(self):
        bad = write(self.path("bad.tuples.txt"), "0 3 0 2 0 0 0 0 0\n")
        p = run("verify-all", "--filter", "1", "--golden", bad)
        self.assertEqual(p.returncode, 1)
        self.assertIn("FAIL  1 enumeration", p.stdout)
        self.assertIn("golden file has 1 tuples", p.stdout)


class Schema(Workdir):
    def test_reports_validate(self):
        with open(SCHEMA) as f:
            schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(schema)
        validator = jsonschema.Draft202012Validator(schema)
        docs = [self.fixture(n) for n in ("persson", "pokora", "example2")]
        f3 = self.path("f3.conics.json")
        run("catalog", "instantiate", "F3", "--params", "m=1,p=0", "-o", f3, check=0)
        docs.append(f3)
        for path in docs:
            with self.subTest(path):
                report = json.loads(run("analyze", path, "--json", check=0).stdout)
                validator.validate(report)

    def test_schema_rejects_tampering(self):
        with open(SCHEMA) as f:
            validator = jsonschema.Draft202012Validator(json.load(f))
        report = json.loads(run("analyze", self.fixture("pokora"), "--json", check=0).stdout)
        report["weak_combinatorics"] = report["weak_combinatorics"][:8]
        self.assertFalse(validator.is_valid(report))


if __name__ == "__main__":
    BIN, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], *sys.argv[3:]], verbosity=1)
