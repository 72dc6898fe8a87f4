"""The command-line surface, driven end to end through a temp directory.

    python3 demos/06_command_line.py
"""

import subprocess
import sys
import tempfile
from pathlib import Path

BOWTIE = "# two triangles sharing vertex 0\n5 6\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n"


def show(argv, cwd):
    print(f"$ mixedmetric {' '.join(argv)}")
    proc = subprocess.run([sys.executable, "-m", "mixedmetric", *argv],
                          capture_output=True, text=True, cwd=cwd)
    for stream in (proc.stdout, proc.stderr):
        if stream:
            print(stream, end="")
    print(f"(exit {proc.returncode})\n")


with tempfile.TemporaryDirectory() as scratch:
    graph = Path(scratch) / "bowtie.txt"
    graph.write_text(BOWTIE)

    show(["classify", "bowtie.txt"], scratch)
    show(["dim", "bowtie.txt"], scratch)
    show(["dim", "bowtie.txt", "--json"], scratch)
    show(["generator", "bowtie.txt", "--json"], scratch)
    show(["verify", "bowtie.txt", "--set", "1,2,3,4"], scratch)
    show(["verify", "bowtie.txt", "--set", "0,1"], scratch)
    show(["oracle", "bowtie.txt"], scratch)
    show(["bounds", "bowtie.txt"], scratch)
    show(["conjecture", "--count", "10", "--seed", "1",
          "--out", "campaign.jsonl", "--n-range", "4..8"], scratch)
