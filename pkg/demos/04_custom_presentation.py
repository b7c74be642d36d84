"""Walkthrough: writing a presentation file and using the command line."""

# %% A presentation file: nonsymmetric, two operations, one mixed relation
import subprocess
import sys
import tempfile

from operadpbw import check_pbw, parse

TEXT = """\
operad two-assoc
flavor nonsymmetric
generator a arity 2
generator b arity 2
order lex
precedence a < b
relation a(a(1,2),3) = a(1,a(2,3))
relation b(b(1,2),3) = b(1,b(2,3))
relation a(b(1,2),3) = b(1,a(2,3))
"""
p = parse(TEXT, source="two-assoc.op")
print(check_pbw(p, 4, 5).to_text())

# %% Parse errors carry a line and a column
try:
    parse(TEXT.replace("a(1,a(2,3))", "a(1,a(2,2))"), source="two-assoc.op")
except Exception as e:
    print(e)

# %% The same from the shell
with tempfile.NamedTemporaryFile("w", suffix=".op", delete=False) as fh:
    fh.write(TEXT)
for cmd in (["check", fh.name, "--max-weight", "3", "--max-arity", "4"],
            ["dual", fh.name],
            ["nf", fh.name, "--expr", "a(1,a(2,a(3,4)))"],
            ["shuffles", "3", "2", "2"]):
    res = subprocess.run([sys.executable, "-m", "operadpbw"] + cmd, capture_output=True, text=True)
    print("$ operadpbw", " ".join(cmd), "  (exit %d)" % res.returncode)
    print(res.stdout)
