"""Regenerate the diagram fixtures from the builders in tamecodes.samples."""
import sys
from pathlib import Path

from tamecodes.diagram import diagram_to_json
from tamecodes.io import dumps
from tamecodes.samples import ALL

out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
for name, build in ALL.items():
    (out / f"{name}.json").write_text(dumps(diagram_to_json(build())))
    print(out / f"{name}.json")
