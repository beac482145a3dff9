"""Tests for table serialization"""

import io
import json
import tempfile
import unittest
from pathlib import Path

from phasewalk.output import AMPLITUDE_COLUMNS, Table, amplitude_row, read_csv, write_csv, write_json


def sample_table():
    table = Table(columns=list(AMPLITUDE_COLUMNS), config={"command": "simulate", "tau1": "1/2"})
    table.rows.append(amplitude_row(-1, (1 + 1j) / 2, 0j))
    table.rows.append(amplitude_row(1, 0j, (-1 + 1j) / 2))
    table.summary["total_probability"] = 1.0
    return table


class TestTable(unittest.TestCase):

    def test_add_checks_width(self):
        table = Table(columns=["n", "prob"])
        table.add(0, 1.0)
        with self.assertRaises(ValueError):
            table.add(0)
        self.assertEqual(table.column("prob"), [1.0])

    def test_amplitude_row(self):
        row = amplitude_row(3, 0.6 + 0.0j, 0.8j, [True])
        self.assertEqual(row[:5], [3, 0.6, 0.0, 0.0, 0.8])
        self.assertAlmostEqual(row[5], 1.0, places=15)
        self.assertIs(row[6], True)


class TestCsv(unittest.TestCase):

    def test_header_lines_carry_config(self):
        stream = io.StringIO()
        write_csv(sample_table(), stream)
        lines = stream.getvalue().splitlines()
        self.assertTrue(lines[0].startswith("# phasewalk"))
        self.assertIn("# command=simulate", lines)
        self.assertIn("# tau1=1/2", lines)
        self.assertIn("# summary total_probability=1.0", lines)
        self.assertEqual(lines[4], ",".join(AMPLITUDE_COLUMNS))

    def test_round_trip_is_exact(self):
        table = sample_table()
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "walk.csv"
            write_csv(table, path)
            back = read_csv(path)
        self.assertEqual(back.columns, table.columns)
        self.assertEqual(back.rows, table.rows)
        self.assertEqual(back.config["tau1"], "1/2")
        self.assertEqual(back.summary["total_probability"], 1.0)

    def test_booleans_written_as_flags(self):
        table = Table(columns=["n", "decay"], rows=[[5, True], [3, False]])
        stream = io.StringIO()
        write_csv(table, stream)
        self.assertTrue(stream.getvalue().endswith("5,1\n3,0\n"))


class TestJson(unittest.TestCase):

    def test_document_layout(self):
        stream = io.StringIO()
        write_json(sample_table(), stream)
        document = json.loads(stream.getvalue())
        self.assertEqual(document["config"]["command"], "simulate")
        self.assertEqual(document["columns"], AMPLITUDE_COLUMNS)
        self.assertEqual(len(document["rows"]), 2)
        self.assertEqual(document["rows"][0][1], 0.5)
        self.assertEqual(document["summary"]["total_probability"], 1.0)


if __name__ == "__main__":
    unittest.main()
