"""Lelong number against Hilbert-Samuel multiplicity on the cusps (t^a, t^b).

For each coprime pair a < b the curve y^a = x^b is parameterized by
(t^a, t^b); both sides should equal a.
"""

import argparse
import json
import math
import time
from dataclasses import asdict, dataclass

from hsmult import BranchSeries, CurveGerm, IdealPresentation, verify_curve_lelong


@dataclass(frozen=True)
class Config:
    max_exponent: int = 7
    truncation: int = 24
    json_out: str | None = None


def parse_args():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-exponent", type=int, default=Config.max_exponent)
    p.add_argument("--truncation", type=int, default=Config.truncation)
    p.add_argument("--json-out")
    a = p.parse_args()
    return Config(a.max_exponent, a.truncation, a.json_out)


def run(cfg: Config):
    rows = []
    m = IdealPresentation.from_strings(["x", "y"], ["x", "y"])
    for a in range(2, cfg.max_exponent + 1):
        for b in range(a + 1, cfg.max_exponent + 1):
            if math.gcd(a, b) != 1:
                continue
            germ = CurveGerm([BranchSeries.from_strings([f"t^{a}", f"t^{b}"], cfg.truncation)],
                             ["x", "y"])
            J = IdealPresentation.from_strings([f"y^{a} - x^{b}"], ["x", "y"])
            start = time.perf_counter()
            check = verify_curve_lelong(germ, J, m)
            rows.append({"a": a, "b": b, "lelong": check.lelong, "hs": check.hs,
                         "equal": check.equal, "seconds": round(time.perf_counter() - start, 4)})
    return rows


def main():
    cfg = parse_args()
    rows = run(cfg)
    print(f"{'a':>3} {'b':>3} {'lelong':>7} {'e(m)':>5} {'ok':>4} {'sec':>8}")
    for r in rows:
        print(f"{r['a']:>3} {r['b']:>3} {r['lelong']:>7} {r['hs']:>5} "
              f"{'yes' if r['equal'] and r['hs'] == r['a'] else 'NO':>4} {r['seconds']:>8.4f}")
    if cfg.json_out:
        with open(cfg.json_out, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
