"""Command-line interface.

Exit codes: 0 success / colorable, 1 negative answer (not colorable, not a
manifold, not transversal, not isomorphic), 2 usage or input error,
3 node budget exhausted (rerun with --allow-long).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import io
from .census import enumerate_transversal_cosets_d3, singer_normalizer_search
from .coloring import BUDGET_EXCEEDED, ColoringProblem, search_coloring, verify_coloring
from .complex import (ComplexError, SimplicialComplex, classify_closed_manifold, cyclic_polytope_boundary,
                      f_vector, find_isomorphism)
from .embedding import collar_coloring, complete_to_triangulation, embed_max_genus
from .gf2d import FieldError, eval_permutation_polynomial, make_field, parse_polynomial
from .library import FANO_TRIPLES, rp2_6, torus7
from .sphere import MissingStructure, build_sphere, verify_k5_obstruction
from .steiner import (SteinerError, affine_sts, bose, bose_transversal, is_transversal, projective_sts,
                      quasigroup_of, steiner_surface, sts_from_triples)

DEFAULT_NODE_LIMIT = 20_000_000
LONG_EMBED_POINTS = 200


class UsageError(Exception):
    pass


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "y"):
        return True
    if t in ("0", "false", "no", "n"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _triple(text: str) -> tuple[int, ...]:
    try:
        vs = tuple(sorted(int(x) for x in text.replace(" ", ",").split(",") if x))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from exc
    if not vs:
        raise argparse.ArgumentTypeError("empty vertex list")
    return vs


def _read_input(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "stdin"
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    return p.read_text(), p.stem


def _load_complex(path: str) -> tuple[SimplicialComplex, str]:
    text, stem = _read_input(path)
    return io.read_complex_text(text, name=stem), text


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# ---- gen -------------------------------------------------------------------

def _pg_surface(d: int, poly: str | None):
    F = make_field(d)
    sts = projective_sts(F)
    if poly is None:
        return sts.as_complex(), [f"PG({F.order}) modulus {F.modulus_text()}"]
    P = int(poly) if poly.isdigit() else parse_polynomial(poly, F)
    T = eval_permutation_polynomial(F, P)
    K = steiner_surface(quasigroup_of(sts), T, name=f"pg_{F.order}_surface")
    return K, [f"PG({F.order}) modulus {F.modulus_text()}", f"transversal {poly}"]


def cmd_gen(a) -> int:
    comments: list[str] = []
    kind = a.kind
    if kind == "torus7":
        K = torus7()
    elif kind == "rp2-6":
        K = rp2_6()
    elif kind == "cp":
        K = cyclic_polytope_boundary(a.m, a.dim)
    elif kind == "bose":
        sts = bose(a.s)
        comments.append("labels (x, y) -> 1 + x + (2s+1) y")
        if a.transversal:
            T = bose_transversal(a.s, a.transversal)
            K = steiner_surface(quasigroup_of(sts), T, name=f"bose_{a.s}_{a.transversal}")
        else:
            K = sts.as_complex()
    elif kind == "pg":
        K, comments = _pg_surface(a.d, a.poly)
    elif kind == "ag":
        K = affine_sts(a.k).as_complex()
        comments.append("labels: base-3 value of the vector + 1")
    elif kind == "sts7-embedding":
        state = embed_max_genus(sts_from_triples(FANO_TRIPLES, name="fano"), orientable=not a.nonorientable)
        K = complete_to_triangulation(state)
        comments.append(f"boundary walk {state.word_text()}")
    elif kind == "sphere167":
        K = build_sphere().complex
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    comments.append(f"f-vector {f_vector(K)}")
    _emit(io.format_complex(K, comments), a.output)
    return 0


# ---- color / chi -------------------------------------------------------------

def _log(a, command: str, text: str, params: str, outcome: str, nodes: int, wall: float) -> None:
    rec = io.RunRecord(io.now_stamp(), command, io.digest(text), params, outcome, nodes, wall)
    io.append_run(rec, a.run_log)


def cmd_color(a) -> int:
    K, text = _load_complex(a.file)
    problem = ColoringProblem(K, a.k, a.s, removed_facets=frozenset(a.remove_facet or ()),
                              start=a.start_facet, priority=a.priority or ())
    limit = None if a.allow_long else a.node_limit
    out = search_coloring(problem, threads=a.threads, node_limit=limit if a.threads <= 1 else None)
    params = f"k={a.k};s={a.s};threads={a.threads};removed={len(a.remove_facet or ())};long={int(a.allow_long)}"
    _log(a, " ".join(["color"] + a.argv), text, params, out.status, out.stats.nodes, out.stats.wall_time)
    print(f"# {out.status} nodes={out.stats.nodes} wall={out.stats.wall_time:.3f}s", file=sys.stderr)
    if out.status == BUDGET_EXCEEDED:
        print("node budget exhausted; rerun with --allow-long", file=sys.stderr)
        return 3
    if out.colorable:
        _emit(io.format_coloring(out.witness, a.s, K.name), a.output)
        return 0
    return 1


def cmd_chi(a) -> int:
    K, text = _load_complex(a.file)
    t0 = time.perf_counter()
    nodes = 0
    for k in range(2, a.max_k + 1):
        out = search_coloring(ColoringProblem(K, k, a.s), threads=a.threads,
                              node_limit=None if a.allow_long else a.node_limit)
        nodes += out.stats.nodes
        if out.status == BUDGET_EXCEEDED:
            _log(a, " ".join(["chi"] + a.argv), text, f"s={a.s};max_k={a.max_k}", f"budget@{k}",
                 nodes, time.perf_counter() - t0)
            print(f"node budget exhausted at k={k}; rerun with --allow-long", file=sys.stderr)
            return 3
        if out.colorable:
            _log(a, " ".join(["chi"] + a.argv), text, f"s={a.s};max_k={a.max_k}", f"chi={k}",
                 nodes, time.perf_counter() - t0)
            print(k)
            return 0
    _log(a, " ".join(["chi"] + a.argv), text, f"s={a.s};max_k={a.max_k}", f"exceeds={a.max_k}",
         nodes, time.perf_counter() - t0)
    print(f">{a.max_k}")
    return 1


# ---- verify ----------------------------------------------------------------

def cmd_verify(a) -> int:
    what = a.what
    if what in ("manifold", "coloring", "sts") and not a.file:
        a.file = "-"
    if what == "manifold":
        K, _ = _load_complex(a.file)
        try:
            r = classify_closed_manifold(K)
        except ComplexError as exc:
            print(f"not a closed manifold: {exc}")
            return 1
        print(f"f={f_vector(K)} euler={r.euler} orientable={r.orientable}"
              + (f" genus={r.genus}" if K.dim == 2 else " links=2-spheres"))
        return 0
    if what == "coloring":
        if not a.coloring:
            raise UsageError("verify coloring needs --coloring FILE")
        K, _ = _load_complex(a.file)
        c = io.parse_coloring(Path(a.coloring).read_text())
        v = verify_coloring(ColoringProblem(K, max(c.k, 2), a.s), c)
        print("valid" if v is None else f"monochromatic {list(v.triple)} in color {v.color}")
        return 0 if v is None else 1
    if what == "sts":
        K, _ = _load_complex(a.file)
        try:
            sts = sts_from_triples(K.facets)
        except SteinerError as exc:
            print(f"not a Steiner triple system: {exc}")
            return 1
        print(f"STS({sts.n}) with {len(sts.triples)} triples")
        return 0
    if what == "transversal":
        if a.pg is not None:
            F = make_field(a.pg)
            mu = quasigroup_of(projective_sts(F))
            if a.poly is None:
                raise UsageError("verify transversal --pg needs --poly")
            P = int(a.poly) if a.poly.isdigit() else parse_polynomial(a.poly, F)
            T = eval_permutation_polynomial(F, P)
        elif a.bose is not None:
            mu = quasigroup_of(bose(a.bose))
            T = bose_transversal(a.bose, a.kind)
        elif a.perm:
            if not a.file:
                raise UsageError("verify transversal --perm needs the triple system FILE")
            K, _ = _load_complex(a.file)
            mu = quasigroup_of(sts_from_triples(K.facets))
            T = io.parse_permutation(Path(a.perm).read_text())
        else:
            raise UsageError("give --pg D --poly P, --bose S --kind K, or --perm FILE with an STS file")
        rep = is_transversal(mu, T)
        if not rep.is_transversal:
            print("not transversal")
            return 1
        print("transversal, " + ("orientable" if rep.orientable else "nonorientable"))
        return 0
    if what == "obstruction":
        if a.file:
            K, _ = _load_complex(a.file)
            sets = None
        else:
            b = build_sphere()
            K, sets = b.complex, b.ball_vertex_sets()
        try:
            rep = verify_k5_obstruction(K, ball_vertex_sets=sets)
        except MissingStructure as exc:
            print(f"obstruction missing: {exc}")
            return 1
        for e in rep.edges:
            print(f"edge {e.edge}: ball {e.ball_vertices[0]}..{e.ball_vertices[-1]} not (3,2)-colorable "
                  f"({e.nodes} nodes)")
        return 0
    raise UsageError(what)


# ---- embed / census / compare -------------------------------------------------

def cmd_embed(a) -> int:
    K, _ = _load_complex(a.sts)
    sts = sts_from_triples(K.facets, name=K.name)
    if sts.n > LONG_EMBED_POINTS and not a.allow_long:
        raise UsageError(f"embedding {sts.n} points is a long run; pass --allow-long")
    state = embed_max_genus(sts, orientable=a.orientable, selector=a.selector)
    S = complete_to_triangulation(state)
    comments = [f"source {sts.name or a.sts}", f"orientable {a.orientable}", f"selector {a.selector}",
                f"boundary walk {state.word_text()}", f"f-vector {f_vector(S)}"]
    _emit(io.format_complex(S, comments), a.output)
    if a.coloring:
        base = search_coloring(ColoringProblem(K, a.colors))
        if not base.colorable:
            print(f"triple system has no ({a.colors},2)-coloring", file=sys.stderr)
            return 1
        Path(a.coloring).write_text(io.format_coloring(collar_coloring(state, base.witness), 2, S.name))
    return 0


def cmd_census(a) -> int:
    if a.which == "pg8-cosets":
        c = enumerate_transversal_cosets_d3()
        print(f"# double cosets of GL(3,2) (order {c.group_order}) in the 0-fixing permutations of F_8")
    else:
        c = singer_normalizer_search(make_field(a.d))
        print(f"# Singer normalizer classes for PG({c.field_order})")
    print("representative\tsize\ttransversal\torientable")
    for cl in c.classes:
        rep = cl.label or "[" + ",".join(map(str, cl.representative.images)) + "]"
        ori = "-" if cl.orientable is None else str(cl.orientable).lower()
        print(f"{rep}\t{cl.size}\t{str(cl.is_transversal).lower()}\t{ori}")
    print(f"# {len(c.classes)} classes, {len(c.transversal)} transversal")
    return 0


def cmd_compare(a) -> int:
    K1, _ = _load_complex(a.first)
    K2, _ = _load_complex(a.second)
    if f_vector(K1) != f_vector(K2):
        print(f"different f-vectors {f_vector(K1)} vs {f_vector(K2)}")
        return 1
    iso = find_isomorphism(K1, K2)
    if iso is None:
        print("not isomorphic")
        return 1
    print("isomorphic")
    if a.verbose:
        for v in sorted(iso):
            print(f"{v}\t{iso[v]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chromsurf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a complex as a facet file")
    g.add_argument("kind", choices=["bose", "pg", "ag", "cp", "torus7", "rp2-6", "sts7-embedding", "sphere167"])
    g.add_argument("--s", type=int, default=1)
    g.add_argument("--transversal", choices=["orientable", "nonorientable"])
    g.add_argument("--d", type=int, default=3)
    g.add_argument("--poly", help="transversal polynomial, e.g. 'a*X^11 + X^6 + X' or an exponent")
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--m", type=int, default=7)
    g.add_argument("--dim", type=int, default=4)
    g.add_argument("--nonorientable", action="store_true")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    def search_opts(q):
        q.add_argument("--threads", type=int, default=1)
        q.add_argument("--allow-long", action="store_true")
        q.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
        q.add_argument("--run-log")

    c = sub.add_parser("color", help="search for a (k,s)-coloring")
    c.add_argument("file", nargs="?", default="-")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--s", type=int, default=2)
    c.add_argument("--remove-facet", type=_triple, action="append")
    c.add_argument("--start-facet", type=_triple)
    c.add_argument("--priority", type=lambda t: tuple(int(x) for x in t.split(",") if x),
                   help="comma-separated vertices to branch on first, in order")
    c.add_argument("-o", "--output")
    search_opts(c)
    c.set_defaults(func=cmd_color)

    ch = sub.add_parser("chi", help="s-chromatic number up to a cap")
    ch.add_argument("file", nargs="?", default="-")
    ch.add_argument("--s", type=int, default=2)
    ch.add_argument("--max-k", type=int, default=8)
    search_opts(ch)
    ch.set_defaults(func=cmd_chi)

    v = sub.add_parser("verify", help="check a property")
    v.add_argument("what", choices=["manifold", "coloring", "sts", "transversal", "obstruction"])
    v.add_argument("file", nargs="?")
    v.add_argument("--coloring")
    v.add_argument("--s", type=int, default=2)
    v.add_argument("--pg", type=int)
    v.add_argument("--poly")
    v.add_argument("--bose", type=int)
    v.add_argument("--kind", choices=["orientable", "nonorientable"], default="orientable")
    v.add_argument("--perm")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("embed", help="maximum-genus embedding of a triple system")
    e.add_argument("--sts", required=True)
    e.add_argument("--orientable", type=_bool, default=True)
    e.add_argument("--selector", choices=["scan", "ordered"], default="scan")
    e.add_argument("--coloring", help="also write a collar coloring to this file")
    e.add_argument("--colors", type=int, default=3)
    e.add_argument("--allow-long", action="store_true")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_embed)

    cs = sub.add_parser("census", help="transversal searches up to symmetry")
    cs.add_argument("which", choices=["pg8-cosets", "singer"])
    cs.add_argument("--d", type=int, default=5)
    cs.set_defaults(func=cmd_census)

    cmp_ = sub.add_parser("compare", help="isomorphism test between two facet files")
    cmp_.add_argument("first")
    cmp_.add_argument("second")
    cmp_.add_argument("-v", "--verbose", action="store_true")
    cmp_.set_defaults(func=cmd_compare)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    a.argv = argv[1:]
    try:
        return a.func(a)
    except (UsageError, io.ParseError, ComplexError, SteinerError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
