"""Driving the command-line front end from Python.

The same calls work from a shell as ``matroidfix fix --named fano`` and so on.
"""

import io
import json

from matroidfix.cli import run_command


def call(*argv):
    out = io.StringIO()
    code = run_command(list(argv), out)
    return code, out.getvalue()


code, text = call("fix", "--named", "fano", "--no-timing")
print(text)
code, text = call("chain", "--named", "vamos", "--elements", "a,b,c,d", "--format", "json", "--no-timing")
print("V8 chain:", json.loads(text)["chain"])
code, text = call("theorems", "--only", "samefix", "--named", "complete:5")
print(text, "exit code", code)
