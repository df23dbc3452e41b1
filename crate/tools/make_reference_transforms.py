"""Writes crates/core/tests/fixtures/reference_transforms.json from PyWavelets."""

import json
from pathlib import Path

import numpy as np
import pywt

OUT = Path(__file__).resolve().parent.parent / "crates/core/tests/fixtures/reference_transforms.json"
FAMILIES = ["haar", "db2", "db4", "sym8", "coif3", "bior3.3", "bior4.4", "bior6.8", "rbio3.3"]
LABELS = {
    "aaa": "LLL", "aad": "LLH", "ada": "LHL", "add": "LHH",
    "daa": "HLL", "dad": "HLH", "dda": "HHL", "ddd": "HHH",
}


def main():
    x = [float(np.sin(0.7 * n) + 0.1 * n) for n in range(16)]
    out = {"signal": x, "dwt1d": {}}
    for name in FAMILIES:
        a, d = pywt.dwt(np.array(x), name, mode="periodization")
        out["dwt1d"][name] = {"ca": a.tolist(), "cd": d.tolist()}
    t = np.array([np.cos(0.3 * i) + 0.05 * i * i - 0.2 * (i % 3) for i in range(64)]).reshape(4, 4, 4)
    out["tensor"] = t.ravel().tolist()
    bands = pywt.dwtn(t, "db2", mode="periodization")
    out["dwt3d_db2"] = {LABELS[k]: v.ravel().tolist() for k, v in bands.items()}
    with open(OUT, "w") as f:
        json.dump(out, f, indent=1)


if __name__ == "__main__":
    main()
