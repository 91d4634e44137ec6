"""Download a published triangulation library file and split it into facet files.

Not used by the test suite. Pass the URL of a library text file whose entries
look like ``name=[[1,2,3],...]``; each entry is written to OUT/<name>.txt and
checked to parse. The files can then be fed to ``chromsurf color`` or
``chromsurf compare``.

    python scripts/fetch_external.py URL --out external/ [--only manifold_cyc_d2_n19_#47]
"""

from __future__ import annotations

import argparse
import re
import urllib.request
from pathlib import Path

from chromsurf import io


def fetch(url: str, timeout: float = 60.0) -> str:
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read().decode("utf-8", errors="replace")


def safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", name)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("source", help="URL, or a local path to an already downloaded file")
    p.add_argument("--out", type=Path, default=Path("external"))
    p.add_argument("--only", action="append", help="keep only these entry names")
    a = p.parse_args()
    local = Path(a.source)
    text = local.read_text() if local.exists() else fetch(a.source)
    a.out.mkdir(parents=True, exist_ok=True)
    kept = 0
    for chunk in io.split_library(text):
        K = io.read_complex_text(chunk)
        if a.only and K.name not in a.only:
            continue
        path = a.out / f"{safe_name(K.name)}.txt"
        io.write_complex(K, path, [f"source {a.source}"])
        print(f"{K.name}: {len(K.vertices)} vertices, {len(K.facets)} facets -> {path}")
        kept += 1
    print(f"{kept} entries written")


if __name__ == "__main__":
    main()
