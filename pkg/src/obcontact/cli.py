"""
Command line interface.  Every subcommand prints one JSON object.

Exit codes: 0 ok, 2 input error, 3 engine limitation.  Results of the
slow subcommands are cached in an append-only JSON-lines ledger in
$OBCONTACT_CACHE_DIR (default ~/.cache/obcontact); --no-cache skips it.
"""

import argparse
import fcntl
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__

CACHED = {"pair", "hfhat"}


class InputError(ValueError):
    pass


class EngineLimit(RuntimeError):
    pass


def _ints(text, count=None, name="value"):
    try:
        vals = [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError("%s must be comma separated integers, got %r" % (name, text))
    if count is not None and len(vals) != count:
        raise InputError("%s needs %d integers, got %d" % (name, count, len(vals)))
    return vals


# ------------------------------------------------------------ subcommands


def cmd_cfrac(a):
    from .farey import convergents, farey_path, fmt, neg_cfrac, parity_class

    c = neg_cfrac(a.p, a.q)
    path = farey_path(a.p, a.q)
    tag, report = parity_class(c)
    return {
        "slope": fmt(Fraction(-a.p, a.q)),
        "cfrac": c,
        "path": [[str(x), str(y)] for x, y in path.pairs],
        "N": path.length,
        "convergents": [[str(x), str(y)] for x, y in convergents(c)],
        "parity": tag,
        "parity_report": report,
    }


def cmd_mcg(a):
    from .mcg import Psl2z, fdtc_covered, in_pure_subgroup, normalize_conjugacy, parse_word, project_word

    if a.action == "project":
        word = parse_word(a.word)
        M = project_word(word)
        fd = fdtc_covered(word)
        return {"matrix": M.rows(), "pure": in_pure_subgroup(M),
                "fdtc": None if fd is None else list(fd)}
    M = Psl2z(*_ints(a.matrix, 4, "--matrix"))
    N, C, excluded = normalize_conjugacy(M)
    return {"matrix": N.rows(), "conjugator": C.rows(), "excluded": excluded}


def cmd_classify(a):
    from .classify import classify_pa, classify_reducible
    from .mcg import Psl2z

    if a.kind == "reducible":
        if a.ngamma is None:
            raise InputError("--ngamma is required")
        v = classify_reducible(_ints(a.n, 4, "--n"), a.ngamma)
    else:
        if a.matrix is None:
            raise InputError("--matrix is required")
        v = classify_pa(Psl2z(*_ints(a.matrix, 4, "--matrix")), _ints(a.fdtc, 4, "--fdtc"))
    return v.to_json()


def cmd_foliation(a):
    from .foliation import is_transverse_ot_disk

    with open(a.file) as fh:
        data = json.load(fh)
    ok, report = is_transverse_ot_disk(data)
    return {"transverse_ot_disk": ok, "checks": report}


def cmd_library(a):
    from .algebra import validate_structures
    from .library import identify_distinguished_pair, library_graph

    g = library_graph(a.n, a.m, a.framing, a.flavor)
    out = {"graph": g.to_json(), "valid": validate_structures(g)["ok"]}
    if a.flavor == "D":
        out["distinguished_pair"] = list(identify_distinguished_pair(g, a.framing))
    return out


def cmd_pair(a):
    from .pairing import PairingSpec, UnsupportedTwist, pair_summary, vanishing_witness

    n = _ints(a.n, 4, "--n")
    try:
        spec = PairingSpec(*n, a.nb)
    except UnsupportedTwist as e:
        raise EngineLimit(str(e))
    out = pair_summary(spec)
    if a.witness:
        w = vanishing_witness(spec)
        out["witness"] = None if w is None else sorted(repr(g) for g in w)
    return out


def cmd_regionlist(a):
    from .heegaard import region_list

    return region_list(a.r, a.s, a.p, a.q)


def cmd_hfhat(a):
    from .heegaard import hat_summary, region_list

    if (a.matrix is None) == (a.regions is None):
        raise InputError("give exactly one of --matrix and --regions")
    if a.matrix is not None:
        rl = region_list(*_ints(a.matrix, 4, "--matrix"))
    else:
        with open(a.regions) as fh:
            rl = json.load(fh)
        if isinstance(rl, dict):
            rl = rl.get("regions")
        if not isinstance(rl, list):
            raise InputError("region file must hold a JSON array of arrays")
    return hat_summary(rl, limit=a.limit)


COMMANDS = {
    "cfrac": cmd_cfrac, "mcg": cmd_mcg, "classify": cmd_classify,
    "foliation": cmd_foliation, "library": cmd_library, "pair": cmd_pair,
    "regionlist": cmd_regionlist, "hfhat": cmd_hfhat,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="obcontact", description=__doc__.strip().splitlines()[0])
    ap.add_argument("--batch", metavar="JOBS", help="JSON-lines file, one argv list per line")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--no-cache", action="store_true")
    sub = ap.add_subparsers(dest="cmd")

    p = sub.add_parser("cfrac", help="negative continued fraction and Farey chain of -p/q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("mcg", help="project a twist word or normalise a matrix")
    p.add_argument("action", choices=["project", "normalize"])
    p.add_argument("--word", default="")
    p.add_argument("--matrix")

    p = sub.add_parser("classify", help="tight / overtwisted / Stein verdicts")
    p.add_argument("kind", choices=["reducible", "pa"])
    p.add_argument("--n", default="1,1,1,1")
    p.add_argument("--ngamma", type=int)
    p.add_argument("--matrix")
    p.add_argument("--fdtc", default="1,1,1,1")

    p = sub.add_parser("foliation", help="check an open book foliation for a transverse OT disk")
    p.add_argument("action", choices=["validate"])
    p.add_argument("file")

    p = sub.add_parser("library", help="dump a library module graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--framing", choices=["I_III", "II_IV"], default="I_III")
    p.add_argument("--flavor", choices=["A", "D"], default="A")

    p = sub.add_parser("pair", help="contact invariant of a reducible monodromy by pairing")
    p.add_argument("--n", required=True)
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("regionlist", help="region list of the genus 3 diagram")
    for k in "rspq":
        p.add_argument(k, type=int)

    p = sub.add_parser("hfhat", help="hat homology and contact class from a nice diagram")
    p.add_argument("--matrix")
    p.add_argument("--regions")
    p.add_argument("--limit", type=int, default=None, help="cap on component size")
    return ap


# ------------------------------------------------------------ cache


def cache_dir():
    return os.environ.get("OBCONTACT_CACHE_DIR") or os.path.join(os.path.expanduser("~"), ".cache", "obcontact")


def job_key(cmd, args):
    payload = json.dumps({"cmd": cmd, "args": args, "version": __version__},
                         sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def _ledger_path():
    return os.path.join(cache_dir(), "jobs.jsonl")


def cache_lookup(key):
    path = _ledger_path()
    if not os.path.exists(path):
        return None
    hit = None
    with open(path) as fh:
        for line in fh:
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue
            if rec.get("key") == key:
                hit = rec["output"]
    return hit


def cache_store(key, cmd, args, output, wall):
    os.makedirs(cache_dir(), exist_ok=True)
    rec = {"key": key, "cmd": cmd, "input": args, "output": output,
           "version": __version__, "wall_seconds": str(round(wall, 3))}
    with open(_ledger_path(), "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        fh.write(json.dumps(rec, sort_keys=True) + "\n")
        fcntl.flock(fh, fcntl.LOCK_UN)


# ------------------------------------------------------------ running


def _canonical_args(ns):
    d = dict(vars(ns))
    for k in ("batch", "workers", "no_cache", "cmd"):
        d.pop(k, None)
    return d


def run_args(ns):
    """(exit code, output object) for parsed arguments."""
    try:
        return 0, COMMANDS[ns.cmd](ns)
    except EngineLimit as e:
        return 3, {"error": {"type": "engine_limitation", "message": str(e)}}
    except (InputError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as e:
        return 2, {"error": {"type": type(e).__name__, "message": str(e)}}


def run_cached(ns, use_cache=True):
    args = _canonical_args(ns)
    if ns.cmd in ("foliation", "hfhat") and (getattr(ns, "file", None) or getattr(ns, "regions", None)):
        path = getattr(ns, "file", None) or ns.regions
        try:
            with open(path, "rb") as fh:
                args["file_sha256"] = hashlib.sha256(fh.read()).hexdigest()
        except OSError:
            pass
    key = job_key(ns.cmd, args)
    if use_cache and ns.cmd in CACHED:
        hit = cache_lookup(key)
        if hit is not None:
            return 0, hit
    t = time.perf_counter()
    code, out = run_args(ns)
    if use_cache and ns.cmd in CACHED and code == 0:
        cache_store(key, ns.cmd, args, out, time.perf_counter() - t)
    return code, out


def _batch_job(argv):
    ns = build_parser().parse_args(argv)
    return run_args(ns)


def run_batch(path, workers, use_cache):
    parser = build_parser()
    jobs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                argv = json.loads(line)
                if isinstance(argv, dict):
                    argv = argv["argv"]
                jobs.append([str(x) for x in argv])
    results = [None] * len(jobs)
    todo = []
    for i, argv in enumerate(jobs):
        ns = parser.parse_args(argv)
        key = job_key(ns.cmd, _canonical_args(ns))
        hit = cache_lookup(key) if use_cache and ns.cmd in CACHED else None
        if hit is not None:
            results[i] = (0, hit)
        else:
            todo.append((i, ns, key))
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = list(pool.map(_batch_job, [jobs[i] for i, _, _ in todo]))
    else:
        done = [run_args(ns) for _, ns, _ in todo]
    for (i, ns, key), res in zip(todo, done):
        results[i] = res
        if use_cache and ns.cmd in CACHED and res[0] == 0:
            cache_store(key, ns.cmd, _canonical_args(ns), res[1], 0.0)
    worst = 0
    for argv, (code, out) in zip(jobs, results):
        print(json.dumps({"argv": argv, "exit": code, "output": out}, sort_keys=True))
        worst = max(worst, code)
    return worst


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.batch:
        return run_batch(ns.batch, ns.workers, not ns.no_cache)
    if ns.cmd is None:
        parser.print_help()
        return 2
    code, out = run_cached(ns, use_cache=not ns.no_cache)
    print(json.dumps(out, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
