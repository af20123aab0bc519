"""
The same analysis from the shell
================================

Writes the courtyard case to an OBJ file and drives the ``weathervg``
command on it: one full run, then a point query. Every command printed
here can be pasted into a terminal.
"""
import json
import os
import shlex
import subprocess
import sys

from weathervg.geometry import write_obj
from weathervg.scenes import courtyard

work = os.path.join(os.path.dirname(os.path.abspath(__file__)), "output", "cli")
os.makedirs(work, exist_ok=True)
scene = courtyard()
mesh = os.path.join(work, "courtyard.obj")
write_obj(scene.mesh, mesh, header="courtyard case, 50 x 50 m, 10 m wings")


def weathervg(*args):
    cmd = [sys.executable, "-m", "weathervg", *args]
    print("$ weathervg " + " ".join(shlex.quote(a) for a in args))
    done = subprocess.run(cmd, capture_output=True, text=True)
    if done.returncode:
        print(done.stderr)
        raise SystemExit(done.returncode)
    return json.loads(done.stdout)


summary = weathervg("run", "--mesh", mesh, "--out", os.path.join(work, "run"),
                    "--condition", "clear", "--condition", "rain:8",
                    "--condition", "snow-dry:4", "--shared-scale")
print(json.dumps(summary, indent=2))
print(sorted(os.listdir(summary["output"])))

x, y = scene.points["courtyard"]
ranking = weathervg("query", "--mesh", mesh, "--condition", "clear", "--condition", "snow-dry:4",
                    "--point", f"{x},{y}", "--name", "courtyard",
                    "--point", "25.5,5.5", "--name", "street")
for label, rows in ranking["ranking"].items():
    print(label, " > ".join(f"{r['point']} ({r['S_S']:.0f})" for r in rows))

# asking for no weather at all is a configuration error (exit code 2)
print("exit code without --condition:",
      subprocess.run([sys.executable, "-m", "weathervg", "run", "--mesh", mesh,
                      "--out", os.path.join(work, "never")], capture_output=True).returncode)
