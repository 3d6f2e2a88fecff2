"""Polarization and log-convexity checks on random monomial ideal pairs."""

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass

from hsmult import (IdealPresentation, MonomialIdeal, polarization_check, rees_sharp_check)


@dataclass(frozen=True)
class Config:
    pairs: int = 20
    max_power: int = 3
    top: int = 4
    seed: int = 0
    json_out: str | None = None


def parse_args():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--pairs", type=int, default=Config.pairs)
    p.add_argument("--max-power", type=int, default=Config.max_power)
    p.add_argument("--top", type=int, default=Config.top, help="largest pure power")
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--json-out")
    a = p.parse_args()
    return Config(a.pairs, a.max_power, a.top, a.seed, a.json_out)


def random_ideal(rng, top):
    pts = [(rng.randint(1, top), 0), (0, rng.randint(1, top))]
    pts += [(rng.randint(0, top - 1), rng.randint(0, top - 1)) for _ in range(rng.randint(0, 2))]
    points = MonomialIdeal([q for q in pts if any(q)]).points
    gens = ["*".join(f"{v}^{e}" for v, e in zip("xy", q) if e) for q in points]
    return IdealPresentation.from_strings(gens, ["x", "y"])


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    rows = []
    for _ in range(cfg.pairs):
        U, V = random_ideal(rng, cfg.top), random_ideal(rng, cfg.top)
        start = time.perf_counter()
        chain = rees_sharp_check(U, V)
        polar = [polarization_check([U, V], [p1, p2])
                 for p1 in range(1, cfg.max_power + 1) for p2 in range(1, cfg.max_power + 1)]
        rows.append({"U": str(U), "V": str(V), "chain": chain.chain,
                     "log_convex": chain.passed,
                     "polarization_ok": all(r.equal for r in polar),
                     "largest_lhs": max(r.lhs for r in polar),
                     "seconds": round(time.perf_counter() - start, 3)})
    return rows


def main():
    cfg = parse_args()
    rows = run(cfg)
    for r in rows:
        flag = "ok" if r["log_convex"] and r["polarization_ok"] else "FAIL"
        print(f"{flag:4} chain={r['chain']!s:14} max e={r['largest_lhs']:<5} "
              f"{r['seconds']:6.3f}s  U={r['U']}  V={r['V']}")
    bad = sum(1 for r in rows if not (r["log_convex"] and r["polarization_ok"]))
    print(f"{len(rows) - bad}/{len(rows)} pairs consistent")
    if cfg.json_out:
        with open(cfg.json_out, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
