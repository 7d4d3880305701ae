#!/usr/bin/env python3
"""Regenerates the offline b-file fixtures under fixtures/.

Sequences with a short OEIS definition are generated here from that
definition, independently of the C++ library. Sequences without one
(the newly contributed entries and the ones only identified through a
caption shift) are exported by the `schreier` binary itself and recorded as
self-referential in manifest.json. Replace any fixture with real OEIS data
via `schreier oeis fetch --id Annnnnn`.
"""

import argparse
import json
import pathlib
import subprocess

TERMS = 100


def linear(initial, coeffs, count):
    """a(n) = sum coeffs[i] * a(n-1-i) after the initial block."""
    out = list(initial)
    while len(out) < count:
        out.append(sum(c * out[-1 - i] for i, c in enumerate(coeffs)))
    return out[:count]


def series_inverse(denominator, numerator, count):
    """Power series coefficients of numerator / denominator, denominator[0] = 1."""
    out = []
    for n in range(count):
        v = numerator[n] if n < len(numerator) else 0
        for i in range(1, min(n, len(denominator) - 1) + 1):
            v -= denominator[i] * out[n - i]
        out.append(v)
    return out


DEFINITIONS = {
    "A000045": ("a(n) = a(n-1) + a(n-2), a(0) = 0, a(1) = 1",
                lambda c: linear([0, 1], [1, 1], c)),
    "A005314": ("a(n) = 2a(n-1) - a(n-2) + a(n-3), a(n) = n for n < 3",
                lambda c: linear([0, 1, 2], [2, -1, 1], c)),
    "A212804": ("expansion of (1 - x)/(1 - x - x^2)",
                lambda c: series_inverse([1, -1, -1], [1, -1], c)),
    "A005251": ("a(n) = a(n-1) + a(n-2) + a(n-4), a(0) = 0, a(1) = a(2) = a(3) = 1",
                lambda c: linear([0, 1, 1, 1], [1, 1, 0, 1], c)),
    "A000931": ("a(n) = a(n-2) + a(n-3), a(0) = 1, a(1) = a(2) = 0",
                lambda c: linear([1, 0, 0], [0, 1, 1], c)),
    "A017817": ("expansion of 1/(1 - x^3 - x^4)",
                lambda c: series_inverse([1, 0, 0, -1, -1], [1], c)),
    "A017827": ("expansion of 1/(1 - x^4 - x^5)",
                lambda c: series_inverse([1, 0, 0, 0, -1, -1], [1], c)),
}

# Exported through the caption relation of the named rule.
SELF_REFERENTIAL = {
    "A385106": "s3_vs_A385106",
    "A385107": "s4_vs_A385107",
    "A375169": "sm3_vs_A375169",
    "A385142": "sm4_vs_A385142",
    "A079398": "a3_vs_A079398",
    "A103372": "a4_vs_A103372",
}


def fixture_path(out_dir, seq_id):
    return out_dir / f"b{seq_id[1:]}.txt"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cli", default="build/tools/schreier")
    parser.add_argument("--out", default="fixtures")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = {}

    for seq_id, (definition, gen) in DEFINITIONS.items():
        lines = [f"{n} {v}" for n, v in enumerate(gen(TERMS))]
        fixture_path(out_dir, seq_id).write_text("\n".join(lines) + "\n")
        manifest[seq_id] = {"source": "definition", "definition": definition}

    for seq_id, rule in SELF_REFERENTIAL.items():
        text = subprocess.run(
            [args.cli, "oeis", "export", "--rule", rule, "--count", str(TERMS)],
            check=True, capture_output=True, text=True).stdout
        fixture_path(out_dir, seq_id).write_text(text)
        manifest[seq_id] = {"source": "self-referential", "rule": rule}

    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
