"""A scripted command-line session.

Every capability is reachable through one-line text requests; the same
lines work on a shell via the `cwbrauer` entry point, here they are fed
through `run_line` so the session is reproducible as a Python script.
Exit codes: 0 ok, 1 reproduce-suite failure, 2 parse error, 3 semantic
error, 4 honest refusal (the computation is not supported, as opposed
to wrong).
"""

import io
import json

from cwbrauer.cli import run_line

SESSION = (
    "homology moore3(6) 2",
    "cohomology moore3(6) 3",
    "uct lens(5, 3) 2",
    "brauer moore3(6)",
    "brauer k(Z/5, 2)",
    "bockstein moore3(4) 2 mod 4",
    "phantom telescope(Z, x6) 2",
    "certify wedge(moore3(6), sphere(4))",
    "lim1 tower block [Z/4 -(x2)-> Z/8, Z/8 -(x1)-> Z/4]",
    "profile-brauer (Z/2)^w + (Z/4)^2",
    "non-brauer-check (Z/3)^w with rule i>=1: J=(i, 2i]",
    "catalog bpgl(5)",
)

print("$ cwbrauer <request>   # one line per request")
for line in SESSION:
    print(f"\n> {line}")
    buf = io.StringIO()
    code = run_line(line, as_json=False, trace=False, out=buf)
    for row in buf.getvalue().rstrip().splitlines():
        print(f"  {row}")
    assert code == 0, f"unexpected exit code {code}"

# The same request as machine-readable JSON (stable key order, so the
# bytes are identical across runs -- diffable in CI).
print("\n> cwbrauer --json brauer 'moore3(6)'")
buf = io.StringIO()
run_line("brauer moore3(6)", as_json=True, trace=False, out=buf)
report = json.loads(buf.getvalue())
print(f"  keys: {sorted(report)}")
print(f"  result.br = {report['result']['br']['group']!r}, "
      f"equality = {report['result']['equality']['verdict']!r}")

# Error handling: parse errors carry positions, semantic errors explain,
# refusals name what is missing.  All go to stderr in text mode.
print("\n> cwbrauer --json homology 'moore3(6' 2   # exit 2, parse error")
buf = io.StringIO()
code = run_line("homology moore3(6 2", as_json=True, trace=False, out=buf)
err = json.loads(buf.getvalue())["error"]
print(f"  exit {code}: [{err['type']}] {err['message']}")

print("\n> cwbrauer 'homology k(Z/2, 2) 3'   # exit 4, honest refusal")
buf = io.StringIO()
code = run_line("homology k(Z/2, 2) 3", as_json=True, trace=False, out=buf)
err = json.loads(buf.getvalue())["error"]
print(f"  exit {code}: [{err['type']}] {err['message']}")

# `cwbrauer reproduce` re-derives a frozen suite of published values and
# exits 1 on the first mismatch; `--batch FILE` runs a request per line.
