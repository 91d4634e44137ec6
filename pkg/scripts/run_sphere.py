"""Build the 167-vertex sphere, check it, and run the (5,2) and (4,2) searches."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from chromsurf import io
from chromsurf.coloring import ColoringProblem, search_coloring
from chromsurf.complex import classify_closed_manifold, f_vector
from chromsurf.sphere import K5_VERTICES, build_sphere, verify_k5_obstruction


@dataclass
class Config:
    out: Path = Path("runs/sphere")
    use_priority: bool = True
    node_limit: int | None = None


def run(cfg: Config) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    build = build_sphere()
    K = build.complex
    text = io.format_complex(K, [f"f-vector {f_vector(K)}"])
    (cfg.out / "non_4_2_colorable.txt").write_text(text)
    c = classify_closed_manifold(K)
    print(f"f-vector {f_vector(K)}, closed manifold {c.is_closed_manifold}, orientable {c.orientable}, "
          f"euler {c.euler}")
    rep = verify_k5_obstruction(K, ball_vertex_sets=build.ball_vertex_sets())
    print(f"K5 obstruction holds on all {len(rep.edges)} edges: {rep.holds}")

    five = search_coloring(ColoringProblem(K, 5))
    (cfg.out / "coloring_k5.txt").write_text(io.format_coloring(five.witness, 2, K.name))
    print(f"k=5: {five.status} ({five.stats.nodes} nodes)")

    kw = dict(start=K5_VERTICES[:3], priority=K5_VERTICES) if cfg.use_priority else {}
    t0 = time.perf_counter()
    four = search_coloring(ColoringProblem(K, 4, **kw), node_limit=cfg.node_limit)
    wall = time.perf_counter() - t0
    print(f"k=4: {four.status} ({four.stats.nodes} nodes, {wall:.1f} s)")
    io.append_run(io.RunRecord(io.now_stamp(), "run_sphere k=4", io.digest(text),
                               f"priority={cfg.use_priority}", four.status, four.stats.nodes, wall),
                  cfg.out / "runs.log")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Config.out)
    p.add_argument("--no-priority", action="store_true",
                   help="use the default branching order for k=4 (a long run)")
    p.add_argument("--node-limit", type=int)
    a = p.parse_args()
    run(Config(a.out, not a.no_priority, a.node_limit))


if __name__ == "__main__":
    main()
