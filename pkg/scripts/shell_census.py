"""Enumerate the short shells of a lattice and classify each by coordinate type.

    python3 scripts/shell_census.py --lattice LambdaQ8sq --max-norm 3/2 --out results/lambda.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from quatweyl import lattice as L
from quatweyl.exact import parse_rational


@dataclass
class CensusConfig:
    lattice: str = "LambdaQ8sq"
    max_norm: str = "3/2"
    merge_signs: tuple = ("1/4",)
    scale: int = 4
    cap: int = 10**7
    out: str | None = None


def run(cfg: CensusConfig) -> dict:
    m = L.load_lattice(cfg.lattice)
    t = time.perf_counter()
    shells = L.shortest_vectors(m, parse_rational(cfg.max_norm), cap=cfg.cap)
    merge = [parse_rational(x) for x in cfg.merge_signs]
    result = {
        "config": asdict(cfg),
        "det": str(L.det_lattice(m)) if m.is_square else None,
        "shells": [L.shell_to_json(n, v, merge, cfg.scale) for n, v in shells.items()],
        "seconds": round(time.perf_counter() - t, 2),
    }
    return result


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--lattice", default=CensusConfig.lattice)
    p.add_argument("--max-norm", default=CensusConfig.max_norm)
    p.add_argument("--merge", action="append", help="absolute values whose signs are pooled")
    p.add_argument("--cap", type=int, default=CensusConfig.cap)
    p.add_argument("--out")
    a = p.parse_args()
    cfg = CensusConfig(a.lattice, a.max_norm, tuple(a.merge or CensusConfig.merge_signs),
                       cap=a.cap, out=a.out)
    res = run(cfg)
    for sh in res["shells"]:
        print(f"norm {sh['norm']}: {sh['count']}")
        for t in sh["types"]:
            print(f"  {t['count']:8d}  {t['signature']}")
    print(f"({res['seconds']}s)")
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps(res, indent=2) + "\n")


if __name__ == "__main__":
    main()
