"""Command-line tabulation of polar multiplicities and link invariants.

Subcommands: ``polar``, ``euler``, ``betti``, ``ring``, ``cache``.  Numeric
flags accept either a single value or an inclusive range ``a..b``.  Output
formats: ``csv`` (long form, LF line endings, integers only), ``md``
(tables laid out like the published ones: k across, sizes down) and
``json`` (big integers as decimal strings).  Rendering is deterministic:
the same request produces byte-identical output no matter what the cache
holds.

Exit codes: 0 success, 2 usage, 3 domain error (for example a non-smooth
link), 4 internal consistency failure (sign pattern, duality, or a cache
entry that fails verification).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import links as links_mod
from . import polar as polar_mod
from .cache import CacheFile, cache_load, cache_path, cache_store
from .errors import ConsistencyError, DomainError
from .grass_ring import GrassSpec, grassmann_relations, poincare
from .links import DetSpec, betti_smooth_complex_link, euler_complex_link
from .polar import PolarProfile, compute_polar_profile

FORMATS = ("csv", "md", "json")


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number or a..b range: {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return range(lo, hi + 1)


class _UsageError(Exception):
    """Flag combinations argparse cannot express declaratively."""


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _md_table(header: list, rows: list) -> str:
    lines = ["| " + " | ".join(str(h) for h in header) + " |"]
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    for row in rows:
        lines.append("| " + " | ".join(str(x) for x in row) + " |")
    return "\n".join(lines) + "\n"


def _csv(header: list, rows: list) -> str:
    lines = [",".join(str(h) for h in header)]
    lines.extend(",".join(str(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# profile gathering through the persistent cache
# ---------------------------------------------------------------------------

def _compute_cell(cell) -> PolarProfile:
    m, n, r = cell
    return compute_polar_profile(m, n, r)


def _gather_profiles(cells, verify: bool, jobs: int) -> dict:
    """Fetch profiles for the requested cells, consulting and updating the
    persistent cache.  With verify=True every cached cell is recomputed and
    compared; a mismatch is a consistency failure."""
    cells = list(dict.fromkeys(cells))
    cache = cache_load()
    need = [c for c in cells if verify or cache.get(*c) is None]
    computed = {}
    if need:
        if jobs > 1 and len(need) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for cell, prof in zip(need, pool.map(_compute_cell, need)):
                    computed[cell] = prof
        else:
            for cell in need:
                computed[cell] = _compute_cell(cell)
    out = {}
    dirty = False
    for cell in cells:
        cached = cache.get(*cell)
        if cell in computed:
            prof = computed[cell]
            if verify and cached is not None and (
                cached.values != prof.values or cached.raw_signs != prof.raw_signs
            ):
                raise ConsistencyError(
                    f"cache entry {CacheFile.key(*cell)} does not match "
                    f"recomputation: cached {cached.values}, got {prof.values}"
                )
            if cached is None:
                cache.put(prof)
                dirty = True
            out[cell] = prof
        else:
            out[cell] = cached
    if dirty:
        cache_store(cache)
    for prof in out.values():
        polar_mod.seed_profile(prof)
    return out


# ---------------------------------------------------------------------------
# polar
# ---------------------------------------------------------------------------

def _nonzero_width(profiles) -> int:
    width = 1
    for prof in profiles:
        nz = [k for k, v in enumerate(prof.values) if v]
        if nz:
            width = max(width, nz[-1] + 1)
    return width


def cmd_polar(args) -> int:
    cells = [
        (m, n, r)
        for r in args.r
        for m in args.m
        for n in args.n
    ]
    for m, n, r in cells:
        if not 0 <= r <= m <= n:
            raise DomainError(f"need 0 <= r <= m <= n, got m={m}, n={n}, r={r}")
    order = sorted(cells)
    profiles = _gather_profiles(order, args.verify, args.jobs)
    if args.format == "csv":
        rows = []
        for m, n, r in order:
            prof = profiles[(m, n, r)]
            rows.extend((m, n, r, k, v) for k, v in enumerate(prof.values))
        _emit(_csv(["m", "n", "r", "k", "e"], rows))
    elif args.format == "json":
        payload = [
            {
                "m": m,
                "n": n,
                "r": r,
                "e": [str(v) for v in profiles[(m, n, r)].values],
            }
            for m, n, r in order
        ]
        _emit(json.dumps({"kind": "polar", "entries": payload}, indent=1))
    else:
        chunks = []
        for r in sorted({c[2] for c in order}):
            group = [c for c in order if c[2] == r]
            width = _nonzero_width(profiles[c] for c in group)
            header = [f"size \\ k (r={r})"] + list(range(width))
            rows = []
            for m, n, _ in group:
                prof = profiles[(m, n, r)]
                rows.append([f"{m} x {n}"] + [prof.value(k) for k in range(width)])
            chunks.append(_md_table(header, rows))
        _emit("\n".join(chunks))
    return 0


# ---------------------------------------------------------------------------
# euler
# ---------------------------------------------------------------------------

def _seed_strata(m: int, n: int, s: int, verify: bool, jobs: int):
    cells = [(m, n, rank) for rank in range(1, s)]
    if cells:
        _gather_profiles(cells, verify, jobs)


def cmd_euler(args) -> int:
    if args.hilbert_burch:
        if args.max_m is None:
            raise _UsageError("--hilbert-burch needs --max-m")
        for m in range(2, args.max_m + 1):
            _seed_strata(m, m + 1, m, args.verify, args.jobs)
        rows = links_mod.hilbert_burch_chi_table(args.max_m)
        ms = list(range(1, args.max_m + 1))
        if args.format == "csv":
            flat = [(d, m, rows[d][m - 1]) for d in range(4) for m in ms]
            _emit(_csv(["d", "m", "chi"], flat))
        elif args.format == "json":
            payload = {"kind": "euler-hilbert-burch", "columns_m": ms, "rows_d": rows}
            _emit(json.dumps(payload, indent=1))
        else:
            table_rows = [[d] + rows[d] for d in range(4)]
            _emit(_md_table(["d \\ m"] + ms, table_rows))
        return 0
    if args.m is None or args.n is None or args.s is None or args.codim is None:
        raise _UsageError("euler needs --m, --n, --s and --codim (or --hilbert-burch)")
    spec = DetSpec(args.m, args.n, args.s)
    _seed_strata(spec.m, spec.n, spec.s, args.verify, args.jobs)
    values = [(i, euler_complex_link(spec, i)) for i in args.codim]
    if args.format == "csv":
        rows = [(spec.m, spec.n, spec.s, i, chi) for i, chi in values]
        _emit(_csv(["m", "n", "s", "i", "chi"], rows))
    elif args.format == "json":
        payload = {
            "kind": "euler",
            "m": spec.m,
            "n": spec.n,
            "s": spec.s,
            "chi": {str(i): chi for i, chi in values},
        }
        _emit(json.dumps(payload, indent=1))
    else:
        _emit(_md_table(["i", "chi"], [list(v) for v in values]))
    return 0


# ---------------------------------------------------------------------------
# betti
# ---------------------------------------------------------------------------

def cmd_betti(args) -> int:
    spec = DetSpec(args.m, args.n, args.s)
    _seed_strata(spec.m, spec.n, spec.s, args.verify, args.jobs)
    profiles = [betti_smooth_complex_link(spec, i) for i in args.codim]
    if args.format == "csv":
        rows = []
        for prof in profiles:
            rows.extend(
                (spec.m, spec.n, spec.s, prof.codim, k, b)
                for k, b in enumerate(prof.betti)
            )
        _emit(_csv(["m", "n", "s", "i", "k", "b"], rows))
    elif args.format == "json":
        payload = {
            "kind": "betti",
            "m": spec.m,
            "n": spec.n,
            "s": spec.s,
            "links": [
                {
                    "i": prof.codim,
                    "chi": prof.chi,
                    "middle": prof.middle,
                    "betti": [str(b) for b in prof.betti],
                    "torsion_status": prof.torsion_status,
                }
                for prof in profiles
            ],
        }
        _emit(json.dumps(payload, indent=1))
    else:
        width = max(len(p.betti) for p in profiles)
        header = ["i \\ b_k"] + list(range(width))
        rows = []
        for prof in profiles:
            padded = list(prof.betti) + [""] * (width - len(prof.betti))
            rows.append([prof.codim] + padded)
        _emit(_md_table(header, rows))
    return 0


# ---------------------------------------------------------------------------
# ring
# ---------------------------------------------------------------------------

def cmd_ring(args) -> int:
    spec = GrassSpec(args.r, args.m)
    poly = poincare(spec)
    basis = spec.basis()
    relations = grassmann_relations(spec)
    if args.format == "csv":
        ranks = {}
        for lam in basis:
            deg = 2 * sum(lam)
            ranks[deg] = ranks.get(deg, 0) + 1
        rows = [(d, ranks.get(d, 0)) for d in range(2 * spec.dim + 1)]
        _emit(_csv(["degree", "rank"], rows))
    elif args.format == "json":
        payload = {
            "kind": "ring",
            "r": spec.r,
            "m": spec.m,
            "dimension": spec.dim,
            "rank": spec.rank,
            "poincare": [str(c) for c in poly.coefficients_list()],
            "basis": [list(lam) for lam in basis],
            "relations": [str(g) for g in relations],
        }
        _emit(json.dumps(payload, indent=1))
    else:
        lines = [
            f"### Grassmannian of {spec.r}-planes in dimension {spec.m}",
            "",
            f"- complex dimension: {spec.dim}",
            f"- module rank: {spec.rank}",
            f"- Poincare polynomial: {poly}",
            "",
        ]
        rows = [
            [2 * sum(lam), "(" + ",".join(str(p) for p in lam) + ")" if lam else "()"]
            for lam in basis
        ]
        lines.append(_md_table(["degree", "basis class"], rows))
        if relations:
            lines.append("relations:")
            lines.extend(f"- {g}" for g in relations)
        _emit("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def cmd_cache(args) -> int:
    path = cache_path()
    if args.action == "path":
        _emit(str(path))
        return 0
    if args.action == "clear":
        if path.exists():
            path.unlink()
        _emit(f"cleared {path}")
        return 0
    cache = cache_load()
    rows = [
        (key, len(prof.values), str(prof.values[0]))
        for key, prof in sorted(cache.entries.items())
    ]
    _emit(_md_table(["entry (m,n,r)", "length", "multiplicity"], rows))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detlinks",
        description="exact polar multiplicities and link invariants of "
        "generic determinantal varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="md")
        p.add_argument("--verify", action="store_true",
                       help="recompute every cached profile this command touches")
        p.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="worker processes for independent table cells")

    p_polar = sub.add_parser("polar", help="polar multiplicity tables")
    p_polar.add_argument("--m", type=_parse_range, required=True)
    p_polar.add_argument("--n", type=_parse_range, required=True)
    p_polar.add_argument("--r", type=_parse_range, required=True)
    common(p_polar)
    p_polar.set_defaults(func=cmd_polar)

    p_euler = sub.add_parser("euler", help="Euler characteristics of complex links")
    p_euler.add_argument("--m", type=int)
    p_euler.add_argument("--n", type=int)
    p_euler.add_argument("--s", type=int)
    p_euler.add_argument("--codim", type=_parse_range)
    p_euler.add_argument("--hilbert-burch", action="store_true",
                         help="table for the (m, m+1, m) family")
    p_euler.add_argument("--max-m", type=int)
    common(p_euler)
    p_euler.set_defaults(func=cmd_euler)

    p_betti = sub.add_parser("betti", help="Betti vectors of smooth complex links")
    p_betti.add_argument("--m", type=int, required=True)
    p_betti.add_argument("--n", type=int, required=True)
    p_betti.add_argument("--s", type=int, required=True)
    p_betti.add_argument("--codim", type=_parse_range, required=True)
    common(p_betti)
    p_betti.set_defaults(func=cmd_betti)

    p_ring = sub.add_parser("ring", help="basis, Poincare polynomial and "
                            "presentation of one Grassmannian")
    p_ring.add_argument("--m", type=int, required=True)
    p_ring.add_argument("--r", type=int, required=True)
    common(p_ring)
    p_ring.set_defaults(func=cmd_ring)

    p_cache = sub.add_parser("cache", help="inspect or clear the profile cache")
    p_cache.add_argument("action", nargs="?", default="show",
                         choices=("show", "clear", "path"))
    p_cache.set_defaults(func=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"detlinks: usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"detlinks: error: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"detlinks: consistency failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
