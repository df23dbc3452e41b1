"""Writes the toy BERT-like container fixture and its expected transfers.

The container is encoded with `struct` directly from FORMAT.md. Expected
resized tensors are computed per axis with PyWavelets (periodization mode),
so neither output shares code with the Rust implementation.

    python3 tools/make_toy_fixture.py crates/core/tests/fixtures
"""

import json
import struct
import sys
import warnings
from pathlib import Path

import numpy as np
import pywt

warnings.simplefilter("ignore")

LAYERS, HIDDEN, FFN, VOCAB, POS, TYPES = 2, 8, 32, 16, 8, 2

LAYER_TENSORS = [
    ("attention.self.query.weight", ("hidden", "hidden")),
    ("attention.self.key.weight", ("hidden", "hidden")),
    ("attention.self.value.weight", ("hidden", "hidden")),
    ("attention.output.dense.weight", ("hidden", "hidden")),
    ("intermediate.dense.weight", ("hidden", "ffn")),
    ("output.dense.weight", ("ffn", "hidden")),
    ("attention.self.query.bias", ("hidden",)),
    ("attention.self.key.bias", ("hidden",)),
    ("attention.self.value.bias", ("hidden",)),
    ("attention.output.dense.bias", ("hidden",)),
    ("attention.output.LayerNorm.weight", ("hidden",)),
    ("attention.output.LayerNorm.bias", ("hidden",)),
    ("intermediate.dense.bias", ("ffn",)),
    ("output.dense.bias", ("hidden",)),
    ("output.LayerNorm.weight", ("hidden",)),
    ("output.LayerNorm.bias", ("hidden",)),
]

STANDALONE = [
    ("embeddings.word_embeddings.weight", ("vocab", "hidden"), "f32"),
    ("embeddings.position_embeddings.weight", ("pos", "hidden"), "f32"),
    ("embeddings.token_type_embeddings.weight", ("types", "hidden"), "f32"),
    ("embeddings.LayerNorm.weight", ("hidden",), "f32"),
    ("embeddings.LayerNorm.bias", ("hidden",), "f32"),
    ("pooler.dense.weight", ("hidden", "hidden"), "f32"),
    ("pooler.dense.bias", ("hidden",), "f64"),
    ("cls.predictions.bias", ("vocab",), "f32"),
]


def sizes(hidden, ffn):
    return {"hidden": hidden, "ffn": ffn, "vocab": VOCAB, "pos": POS, "types": TYPES}


def source_model():
    rng = np.random.default_rng(20240611)
    size = sizes(HIDDEN, FFN)
    tensors = {}
    for suffix, roles in LAYER_TENSORS:
        for layer in range(LAYERS):
            shape = tuple(size[r] for r in roles)
            tensors[f"encoder.layer.{layer}.{suffix}"] = (
                "f32",
                rng.standard_normal(shape).astype(np.float32).astype(np.float64),
            )
    for name, roles, dtype in STANDALONE:
        shape = tuple(size[r] for r in roles)
        data = rng.standard_normal(shape)
        if dtype == "f32":
            data = data.astype(np.float32).astype(np.float64)
        tensors[name] = (dtype, data)
    return tensors


def encode(tensors):
    names = sorted(tensors, key=lambda n: n.encode())
    index_len = 12
    for n in names:
        index_len += 4 + len(n.encode()) + 2 + 8 * tensors[n][1].ndim + 16
    cursor = index_len
    layout = []
    for n in names:
        dtype, arr = tensors[n]
        cursor = (cursor + 7) // 8 * 8
        nbytes = arr.size * (4 if dtype == "f32" else 8)
        layout.append((cursor, nbytes))
        cursor += nbytes
    out = bytearray(b"WGT1" + struct.pack("<II", 1, len(names)))
    for n, (offset, nbytes) in zip(names, layout):
        dtype, arr = tensors[n]
        raw = n.encode()
        out += struct.pack("<I", len(raw)) + raw
        out += struct.pack("<BB", 0 if dtype == "f32" else 1, arr.ndim)
        out += struct.pack(f"<{arr.ndim}Q", *arr.shape)
        out += struct.pack("<QQ", offset, nbytes)
    for n, (offset, nbytes) in zip(names, layout):
        dtype, arr = tensors[n]
        out += b"\0" * (offset - len(out))
        out += arr.astype("<f4" if dtype == "f32" else "<f8").tobytes()
    return bytes(out)


def resize_axis(x, axis, old, new, wavelet):
    """Multi-level analysis (keep approx) or zero-detail synthesis on one axis."""
    if old == new:
        return x
    if old > new:
        level = int(np.log2(old // new))
        return pywt.wavedec(x, wavelet, mode="periodization", level=level, axis=axis)[0]
    level = int(np.log2(new // old))
    y = x
    for _ in range(level):
        y = pywt.idwt(y, np.zeros_like(y), wavelet, mode="periodization", axis=axis)
    return y


def transfer(tensors, tgt, wavelet):
    src_size = sizes(HIDDEN, FFN)
    tgt_size = sizes(tgt[1], tgt[2])
    out = {}
    for suffix, roles in LAYER_TENSORS:
        stack = np.stack(
            [tensors[f"encoder.layer.{l}.{suffix}"][1] for l in range(LAYERS)]
        )
        stack = resize_axis(stack, 0, LAYERS, tgt[0], wavelet)
        for i, r in enumerate(roles):
            stack = resize_axis(stack, i + 1, src_size[r], tgt_size[r], wavelet)
        for l in range(tgt[0]):
            out[f"encoder.layer.{l}.{suffix}"] = ("f32", stack[l])
    for name, roles, dtype in STANDALONE:
        arr = tensors[name][1]
        if name != "cls.predictions.bias":
            for i, r in enumerate(roles):
                arr = resize_axis(arr, i, src_size[r], tgt_size[r], wavelet)
        out[name] = (dtype, arr)
    return {
        n: {"dtype": d, "shape": list(a.shape), "values": a.ravel().tolist()}
        for n, (d, a) in sorted(out.items())
    }


def main():
    dest = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    tensors = source_model()
    (dest / "toy_bert.wgt").write_bytes(encode(tensors))
    expected = {
        "source": {
            n: {"dtype": d, "shape": list(a.shape), "values": a.ravel().tolist()}
            for n, (d, a) in sorted(tensors.items())
        },
        "transfers": [],
    }
    for wavelet in ["haar", "db2"]:
        for tgt in [(1, 4, 16), (4, 16, 64)]:
            expected["transfers"].append(
                {
                    "wavelet": wavelet,
                    "layers": tgt[0],
                    "hidden": tgt[1],
                    "ffn": tgt[2],
                    "tensors": transfer(tensors, tgt, wavelet),
                }
            )
    (dest / "toy_bert_expected.json").write_text(json.dumps(expected))


if __name__ == "__main__":
    main()
