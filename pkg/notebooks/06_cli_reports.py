# # Reports from the command line
#
# The `hk` command reads a TOML or JSON problem spec and writes a JSON
# report.  This script drives it in-process.

import json
import os
import tempfile
from pathlib import Path

from hilbertkunz.cli import main

work = Path(tempfile.mkdtemp())
os.environ["HK_CACHE_DIR"] = str(work / "cache")
spec = work / "regcone2.toml"
spec.write_text(
    'name = "regcone2"\n'
    "generators = [[1, 0], [1, 1], [1, 2]]\n"
    "prime = 3\n"
    "e_max = 3\n"
    'tasks = ["count", "bg", "interpolate"]\n'
)

# A run prints the report; `--out` keeps a copy.

main(["run", "--spec", str(spec), "--out", str(work / "report.json"), "--format", "table"])
report = json.loads((work / "report.json").read_text())
print(report["results"]["bg"]["consistent"])

# A second run is served from the cache and is byte-identical.

main(["run", "--spec", str(spec), "--out", str(work / "again.json"), "--format", "table"])
print((work / "report.json").read_bytes() == (work / "again.json").read_bytes())

# Validation errors exit with status 2 and point at the offending field.

bad = work / "bad.toml"
bad.write_text("generators = [[1, 0], [-1, 0], [0, 1]]\n")
print("exit", main(["count", "--spec", str(bad)]))
