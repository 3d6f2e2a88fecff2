"""Time the three routes to e(I) for random monomial ideals in the plane.

The Newton polygon area is compared with finite differences of colengths,
counted once by staircases and once through Groebner bases.
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from hsmult import IdealPresentation, MonomialIdeal, hs_multiplicity, newton_multiplicity_2d


@dataclass(frozen=True)
class Config:
    ideals: int = 100
    top: int = 6
    extra: int = 3
    seed: int = 0


def parse_args():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for field in ("ideals", "top", "extra", "seed"):
        p.add_argument(f"--{field}", type=int, default=getattr(Config, field))
    a = p.parse_args()
    return Config(a.ideals, a.top, a.extra, a.seed)


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - start


def main():
    cfg = parse_args()
    rng = random.Random(cfg.seed)
    times = {"newton": [], "monomial": [], "general": []}
    mismatches = 0
    for _ in range(cfg.ideals):
        pts = [(rng.randint(1, cfg.top), 0), (0, rng.randint(1, cfg.top))]
        pts += [(rng.randint(0, cfg.top - 1), rng.randint(0, cfg.top - 1))
                for _ in range(rng.randint(0, cfg.extra))]
        I = MonomialIdeal([q for q in pts if any(q)])
        gens = ["*".join(f"{v}^{e}" for v, e in zip("xy", q) if e) for q in I.points]
        U = IdealPresentation.from_strings(gens, ["x", "y"])
        e_newton, dt = timed(newton_multiplicity_2d, I)
        times["newton"].append(dt)
        values = {e_newton}
        for backend in ("monomial", "general"):
            rep, dt = timed(hs_multiplicity, U, backend=backend)
            times[backend].append(dt)
            values.add(rep.value)
        if len(values) != 1:
            mismatches += 1
            print("mismatch", I.points, values)
    for name, ts in times.items():
        print(f"{name:9} median {statistics.median(ts) * 1e3:8.3f} ms   max {max(ts) * 1e3:8.3f} ms")
    print(f"{cfg.ideals - mismatches}/{cfg.ideals} ideals agree on all routes")


if __name__ == "__main__":
    main()
