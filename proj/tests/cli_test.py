"""End-to-end checks of the incolor executable: exit codes, pipelines and schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = sys.argv.pop(1)
SCHEMAS = pathlib.Path(sys.argv.pop(1))


def run(args, stdin=""):
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, timeout=600)


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


def gen(*args):
    r = run(["gen", *map(str, args)])
    assert r.returncode == 0, r.stderr
    return r.stdout


class Pipeline(unittest.TestCase):
    def test_cycle_pipeline(self):
        colored = run(["color", "--d", "1"], gen("cycle", 7))
        self.assertEqual(colored.returncode, 0, colored.stderr)
        checked = run(["verify", "--d", "1"], colored.stdout)
        self.assertEqual(checked.returncode, 0, checked.stderr)
        self.assertTrue(json.loads(checked.stdout)["valid"])

    def test_round_trip_every_kind(self):
        kinds = [
            ("path", 9), ("cycle", 8), ("star", 5), ("complete", 4), ("complete", 7),
            ("complete-bipartite", 3, 5), ("tree", 40), ("fan", 8),
            ("maximal-outerplanar", 20), ("outerplanar", 25), ("obstruction",),
        ]
        for kind in kinds:
            for d in (1, 2):
                with self.subTest(kind=kind, d=d):
                    graph = gen(*kind, "--seed", "3")
                    colored = run(["color", "--d", str(d)], graph)
                    self.assertEqual(colored.returncode, 0, colored.stderr)
                    doc = json.loads(colored.stdout)
                    jsonschema.validate(doc, schema("coloring.schema.json"))
                    checked = run(["verify", "--d", str(d)], colored.stdout)
                    self.assertEqual(checked.returncode, 0, checked.stdout)
                    jsonschema.validate(json.loads(checked.stdout), schema("report.schema.json"))

    def test_one_based_round_trip(self):
        colored = run(["color", "--one-based"], gen("fan", 6))
        doc = json.loads(colored.stdout)
        self.assertEqual(min(i["c"] for i in doc["incidences"]), 1)
        self.assertEqual(run(["verify", "--d", "1"], colored.stdout).returncode, 0)

    def test_external_graph_and_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            g = pathlib.Path(tmp) / "g.txt"
            c = pathlib.Path(tmp) / "c.json"
            g.write_text(gen("tree", 30, "--seed", "8"))
            self.assertEqual(run(["color", "--in", str(g), "--out", str(c)]).returncode, 0)
            r = run(["verify", "--graph", str(g), "--in", str(c)])
            self.assertEqual(r.returncode, 0, r.stdout)

    def test_dot(self):
        r = run(["color", "--dot"], gen("path", 3))
        self.assertEqual(r.returncode, 0)
        self.assertIn("graph", r.stdout)


class ExitCodes(unittest.TestCase):
    def test_invalid_coloring(self):
        bad = {"k": 2, "graph": {"n": 2, "edges": [[1, 2]]},
               "incidences": [{"v": 1, "e": [1, 2], "c": 0}, {"v": 2, "e": [1, 2], "c": 0}]}
        r = run(["verify", "--d", "1"], json.dumps(bad))
        self.assertEqual(r.returncode, 1)
        report = json.loads(r.stdout)
        jsonschema.validate(report, schema("report.schema.json"))
        self.assertEqual(report["violations"][0]["condition"], "b")

    def test_conditional_mode(self):
        colored = run(["color"], gen("maximal-outerplanar", 12, "--seed", "5", "--max-degree", "4"))
        self.assertEqual(colored.returncode, 0, colored.stderr)
        doc = json.loads(colored.stdout)
        self.assertEqual(doc["method"], "outerplanar-conditional")
        r = run(["verify", "--conditional", str(doc["k"])], colored.stdout)
        self.assertEqual(r.returncode, 0, r.stdout)
        jsonschema.validate(json.loads(r.stdout), schema("report.schema.json"))

    def test_unsupported(self):
        r = run(["color"], gen("petersen"))
        self.assertEqual(r.returncode, 2)
        self.assertTrue(r.stderr)
        self.assertEqual(run(["color"], gen("complete-bipartite", 2, 3)).returncode, 0)

    def test_bad_input(self):
        self.assertEqual(run(["color"], "3 2\n1 2\n").returncode, 3)
        self.assertEqual(run(["color"], "2 1\n1 1\n").returncode, 3)
        self.assertEqual(run(["color", "--bogus"]).returncode, 3)
        self.assertEqual(run(["color", "--d", "0"], gen("path", 3)).returncode, 3)
        self.assertEqual(run(["verify"], "not json").returncode, 3)
        self.assertEqual(run(["gen", "hypercube", "3"]).returncode, 3)
        self.assertEqual(run(["gen", "complete-bipartite", "3"]).returncode, 3)
        self.assertEqual(run(["inspect", "t3"]).returncode, 3)
        self.assertEqual(run(["color", "--in", "/nonexistent/graph.txt"]).returncode, 3)

    def test_flags_checked_before_input(self):
        r = run(["color", "--d", "x", "--in", "/nonexistent/graph.txt"])
        self.assertEqual(r.returncode, 3)
        self.assertNotIn("cannot open", r.stderr)

    def test_budget(self):
        r = run(["chromatic", "--d", "1", "--kmax", "7", "--budget", "10"], gen("complete", 7))
        self.assertEqual(r.returncode, 4)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("chromatic.schema.json"))
        self.assertEqual(doc["stats"]["outcome"], "budget-exceeded")


class Outputs(unittest.TestCase):
    def test_chromatic(self):
        r = run(["chromatic", "--d", "1", "--kmax", "5"], gen("complete", 4))
        self.assertEqual(r.returncode, 0)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("chromatic.schema.json"))
        self.assertEqual(doc["value"], 4)
        r = run(["chromatic", "--d", "1", "--kmax", "3"], gen("complete", 4))
        self.assertIsNone(json.loads(r.stdout)["value"])

    def test_latin(self):
        r = run(["latin", "6"])
        self.assertEqual(r.returncode, 0)
        rows = [list(map(int, line.split())) for line in r.stdout.splitlines()]
        self.assertEqual(len(rows), 6)
        self.assertTrue(all(rows[i][i] == 0 for i in range(6)))
        with tempfile.TemporaryDirectory() as tmp:
            f = pathlib.Path(tmp) / "l.txt"
            f.write_text(r.stdout)
            c = run(["latin", "--check", str(f)])
            self.assertEqual(c.returncode, 0)
            doc = json.loads(c.stdout)
            jsonschema.validate(doc, schema("latin-check.schema.json"))
            self.assertEqual(doc["principal_intercalates"], 0)
            f.write_text("0 1\n0 1\n")
            self.assertEqual(run(["latin", "--check", str(f)]).returncode, 3)

    def test_latin_four(self):
        r = run(["latin", "4"])
        self.assertEqual(r.returncode, 3)
        self.assertIn("order 4", r.stderr)
        self.assertEqual(run(["latin"]).returncode, 3)

    def test_inspect(self):
        r = run(["inspect", "t1", "--jobs", "2"])
        self.assertEqual(r.returncode, 0)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("inspection.schema.json"))
        self.assertEqual(doc["residual"], [])
        self.assertEqual(doc["enumerated"], 4096)
        t2 = run(["inspect", "t2"])
        self.assertEqual(t2.returncode, 0)
        doc = json.loads(t2.stdout)
        jsonschema.validate(doc, schema("t2.schema.json"))
        self.assertEqual(len(doc["cases"]), 12)

    def test_gen_degree_trim(self):
        text = gen("maximal-outerplanar", 30, "--seed", "2", "--max-degree", "4")
        n, m = map(int, text.splitlines()[0].split())
        degree = [0] * (n + 1)
        for line in text.splitlines()[1:]:
            if line.strip():
                u, v = map(int, line.split())
                degree[u] += 1
                degree[v] += 1
        self.assertLessEqual(max(degree), 4)


if __name__ == "__main__":
    unittest.main(verbosity=2)
