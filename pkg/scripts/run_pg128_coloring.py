"""Search for a (k,2)-coloring of the PG(128) surface built with the transversal X^7.

Writes the surface, the coloring witness (if any) and a run-log record into --out.
The default k=6 run took about ten minutes on one core.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from chromsurf import io
from chromsurf.coloring import ColoringProblem, search_coloring
from chromsurf.gf2d import eval_permutation_polynomial, make_field
from chromsurf.steiner import is_transversal, projective_sts, quasigroup_of, steiner_surface


@dataclass
class Config:
    k: int = 6
    exponent: int = 7
    degree: int = 7
    node_limit: int | None = None
    backjump: bool = True
    out: Path = Path("runs/pg128")


def run(cfg: Config) -> str:
    cfg.out.mkdir(parents=True, exist_ok=True)
    F = make_field(cfg.degree)
    mu = quasigroup_of(projective_sts(F))
    T = eval_permutation_polynomial(F, cfg.exponent)
    rep = is_transversal(mu, T, orientation=False)
    print(f"X^{cfg.exponent} transversal on PG({F.order}): {rep.is_transversal}")
    K = steiner_surface(mu, T, name=f"pg_{F.order}_x{cfg.exponent}")
    text = io.format_complex(K, [f"transversal X^{cfg.exponent}", f"modulus {F.modulus_text()}"])
    (cfg.out / "surface.txt").write_text(text)
    t0 = time.perf_counter()
    res = search_coloring(ColoringProblem(K, cfg.k), node_limit=cfg.node_limit, backjump=cfg.backjump)
    wall = time.perf_counter() - t0
    print(f"k={cfg.k}: {res.status}, {res.stats.nodes} nodes, {wall:.1f} s")
    if res.witness is not None:
        (cfg.out / f"coloring_k{cfg.k}.txt").write_text(io.format_coloring(res.witness, 2, K.name))
    params = ",".join(f"{k}={v}" for k, v in asdict(cfg).items() if k != "out")
    io.append_run(io.RunRecord(io.now_stamp(), "run_pg128_coloring", io.digest(text), params, res.status,
                               res.stats.nodes, wall), cfg.out / "runs.log")
    return res.status


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--exponent", type=int, default=Config.exponent)
    p.add_argument("--degree", type=int, default=Config.degree)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--chronological", action="store_true", help="plain backtracking instead of backjumping")
    p.add_argument("--out", type=Path, default=Config.out)
    a = p.parse_args()
    run(Config(a.k, a.exponent, a.degree, a.node_limit, not a.chronological, a.out))


if __name__ == "__main__":
    main()
