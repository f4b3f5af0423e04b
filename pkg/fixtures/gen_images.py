#!/usr/bin/env python3
"""Generate synthetic PGM captures for the demo part so the review
service can serve image crops.  Writes fixtures/images/DEMO-01/...

    python fixtures/gen_images.py
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from castinspect.imageio import write_pnm

HERE = Path(__file__).parent


def main() -> None:
    fixture = json.loads((HERE / "replay_demo.json").read_text(encoding="utf-8"))
    header = fixture["header"]
    w, h = int(header["image_w"]), int(header["image_h"])
    rng = np.random.default_rng(2024)
    for image_id, per_model in fixture["images"].items():
        pixels = rng.integers(95, 115, size=(h, w), dtype=np.uint8)
        for entries in per_model.values():
            for entry in entries:
                x, y, bw, bh = entry["bbox"]
                x0, y0 = int(x), int(y)
                x1, y1 = int(x + bw), int(y + bh)
                pixels[y0:y1, x0:x1] = rng.integers(20, 45)
        path = HERE / "images" / f"{image_id}.pgm"
        path.parent.mkdir(parents=True, exist_ok=True)
        write_pnm(path, pixels)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
