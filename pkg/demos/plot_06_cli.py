"""
Fixtures and reports from the command line
==========================================

``schauderkit fixtures`` writes the canonical families and sets as JSON; the
checkers read them back and emit self-contained reports.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from schauderkit.verify import recheck_report

cli = [sys.executable, "-m", "schauderkit.cli"]
with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "fixtures"
    subprocess.run(cli + ["fixtures", "--out", str(out)], check=True, capture_output=True)
    for path in sorted(out.glob("*.json")):
        doc = json.loads(path.read_text())
        proc = subprocess.run(cli + [doc["command"], str(path)], capture_output=True, text=True)
        report = json.loads(proc.stdout)
        problems = recheck_report(report, doc)
        print(f"{path.stem:15s} exit {proc.returncode}  {report['verdict']:15s}"
              f" rechecked: {'ok' if not problems else problems}")
