"""Blow-down multiplicities of L_P over all Weierstrass-type semigroups of small genus.

Every numerical semigroup whose gaps lie in 1..N is enumerated; the
multiplicity computed from its base-point datum is compared with the
first nongap.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from hsmult import Semigroup, first_nongap, rs_blowdown_multiplicity
from hsmult.blowdown import line_bundle_of_point
from hsmult.errors import InvalidInput


@dataclass(frozen=True)
class Config:
    max_gap: int = 9
    show: bool = False


def semigroups(max_gap):
    for mask in range(1 << max_gap):
        gaps = [i + 1 for i in range(max_gap) if mask >> i & 1]
        try:
            yield Semigroup(gaps)
        except InvalidInput:
            continue


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-gap", type=int, default=Config.max_gap)
    p.add_argument("--show", action="store_true", help="print every semigroup")
    a = p.parse_args()
    cfg = Config(a.max_gap, a.show)

    by_genus = Counter()
    agree = total = 0
    for S in semigroups(cfg.max_gap):
        kappa = first_nongap(S)
        mult = rs_blowdown_multiplicity(line_bundle_of_point(S))
        total += 1
        agree += mult == kappa
        by_genus[S.genus] += 1
        if cfg.show:
            print(f"gaps={sorted(S.gaps)!s:30} g={S.genus} first nongap={kappa} mult={mult}")
    for g in sorted(by_genus):
        print(f"genus {g}: {by_genus[g]} semigroups")
    print(f"{agree}/{total} semigroups give multiplicity = first nongap")


if __name__ == "__main__":
    main()
