"""Command line front end: ``ringgroups <subcommand> ...``.

Exit codes: 0 success, 1 negative answer (with --expect-* flags, failed
relator checks, linked pairs), 2 input error, 3 inconclusive (coset
enumeration overflow, degenerate geometry).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import braids, free_autos, geometry, quotients
from .presentations import RelatorSet, relators, tau_normal_form, verify_relators
from .representations import (
    NAMES, RepresentationUndefined, faithful_representation, get_representation, is_trivial,
)
from .words import (
    FAMILIES, GroupId, WordError, format_word, invert, parse_word,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


class Inconclusive(Exception):
    pass


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _group(args) -> GroupId:
    return GroupId(args.group, args.n)


def _lower(b: bool) -> str:
    return "true" if b else "false"


def cmd_solve(args) -> int:
    g = _group(args)
    w = parse_word(args.word, g)
    ok = is_trivial(w)
    _emit(args, _lower(ok), {"group": str(g), "word": format_word(w), "trivial": ok})
    return EXIT_NEGATIVE if args.expect_trivial and not ok else EXIT_OK


def cmd_eq(args) -> int:
    g = _group(args)
    w1, w2 = parse_word(args.word1, g), parse_word(args.word2, g)
    ok = is_trivial(w1 * invert(w2))
    _emit(args, _lower(ok), {"group": str(g), "word1": format_word(w1),
                             "word2": format_word(w2), "equal": ok})
    return EXIT_NEGATIVE if args.expect_equal and not ok else EXIT_OK


def cmd_image(args) -> int:
    g = _group(args)
    w = parse_word(args.word, g)
    rep_name = args.rep or faithful_representation(g)
    rep = get_representation(rep_name)
    rep.check_group(g)
    img = rep.image(w)
    if isinstance(img, free_autos.SymAuto):
        text = img.to_text()
        data = [free_autos.format_free(x) for x in img.images]
    elif isinstance(img, tuple):
        text = quotients.cycle_notation(img)
        data = list(img)
    elif isinstance(img, quotients.SignedPerm):
        text = str(img)
        data = {"perm": list(img.perm), "signs": list(img.signs)}
    elif isinstance(img, quotients.TwistPerm):
        text = str(img)
        data = {"perm": list(img.perm), "twist": list(img.twist)}
    else:
        text = str(img)
        data = str(img)
    _emit(args, text, {"group": str(g), "word": format_word(w), "representation": rep_name,
                       "image": data, "trivial": rep.is_trivial(w)})
    return EXIT_OK


def cmd_relators(args) -> int:
    rs = relators(_group(args))
    _emit(args, rs.to_text() if len(rs) else "", {
        "group": str(rs.group),
        "relators": [{"relator": format_word(w), "family": lab}
                     for w, lab in zip(rs.relators, rs.labels)]})
    return EXIT_OK


def cmd_relcheck(args) -> int:
    g = _group(args)
    report = verify_relators(g, args.rep or faithful_representation(g))
    _emit(args, report.to_text(), report.to_json())
    return EXIT_OK if report.all_pass else EXIT_NEGATIVE


def cmd_nf(args) -> int:
    g = _group(args)
    if g.family not in ("W", "VR", "R"):
        raise InputError("nf needs a twisted group: W, VR or R")
    w = parse_word(args.word, g)
    u, t = tau_normal_form(w)
    _emit(args, f"u: {format_word(u)}\nt: {format_word(t)}",
          {"group": str(g), "word": format_word(w), "u": format_word(u), "t": format_word(t)})
    return EXIT_OK


def cmd_alpha(args) -> int:
    n, i, j = args.n, args.i, args.j
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InputError(f"alpha needs distinct indices in 1..{n}")
    w = free_autos.alpha_word(i, j, n)
    a = free_autos.mccool(i, j, n)
    _emit(args, f"word: {format_word(w)}\n{a.to_text()}",
          {"i": i, "j": j, "n": n, "word": format_word(w),
           "automorphism": [free_autos.format_free(x) for x in a.images]})
    return EXIT_OK


def cmd_tc(args) -> int:
    g = _group(args)
    rs = relators(g)
    gens = None
    if args.only:
        kinds = {{"r": "rho", "s": "sigma", "t": "tau", "a": "alpha"}[k] for k in args.only}
        keep = tuple((w, lab) for w, lab in zip(rs.relators, rs.labels)
                     if all(x.kind in kinds for x in w))
        rs = RelatorSet(g, tuple(w for w, _ in keep), tuple(lab for _, lab in keep))
        from .words import alphabet
        gens = [x for x in alphabet(g) if x.kind in kinds]
    extra = [parse_word(x, g) for x in args.extra]
    sub = [parse_word(x, g) for x in args.subgroup]
    limit = args.limit if args.limit is not None else quotients.default_limit()
    table = quotients.todd_coxeter(rs, extra, sub, limit=limit, generators=gens)
    if not table.complete:
        _emit(args, f"overflow: more than {limit} cosets",
              {"group": str(g), "status": "overflow", "limit": limit})
        return EXIT_INCONCLUSIVE
    text = f"cosets: {table.count}"
    if args.table:
        text += "\n" + table.to_csv()
    payload = {"group": str(g), "status": "complete", "cosets": table.count}
    if args.table:
        payload["table"] = table.to_csv()
    _emit(args, text, payload)
    return EXIT_OK


def cmd_pin(args) -> int:
    d = braids.pin_dictionary(args.n)
    fmt = lambda k: f"rho{k[0]} sigma{k[1]} tau({k[2]})"  # noqa: E731
    lines = [f"winners: {len(d.winners)}"] + [f"  {fmt(k)}" for k in d.winners]
    lines.append(f"pinned: {fmt(d.key)}")
    lines.append(d.to_text().rstrip("\n"))
    _emit(args, "\n".join(lines), {
        "n": args.n, "winners": [list(map(list, k[:2])) + [k[2]] for k in d.winners],
        "pinned": list(map(list, d.key[:2])) + [d.key[2]],
        "dictionary": [{"generator": gname, "braid": str(b)} for gname, b in d.table()]})
    return EXIT_OK


def _read_config(args) -> geometry.RingConfig:
    try:
        with open(args.file) as fh:
            return geometry.parse_config(fh.read(), exact=args.exact)
    except OSError as exc:
        raise InputError(str(exc)) from None


def cmd_geom(args) -> int:
    cfg = _read_config(args)
    action = args.action
    if action == "validate":
        try:
            geometry.validate(cfg)
        except geometry.PairLinked as exc:
            _emit(args, f"linked {exc.pair[0]} {exc.pair[1]}",
                  {"valid": False, "reason": "linked", "pair": list(exc.pair)})
            return EXIT_NEGATIVE
        except geometry.PairDegenerate as exc:
            _emit(args, f"degenerate {exc.pair[0]} {exc.pair[1]}",
                  {"valid": False, "reason": "degenerate", "pair": list(exc.pair)})
            return EXIT_INCONCLUSIVE
        _emit(args, "valid", {"valid": True, "circles": len(cfg)})
        return EXIT_OK
    if action == "link":
        rows, code = [], EXIT_OK
        cs = cfg.circles
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                v = geometry.linked(cs[i], cs[j])
                rows.append((i + 1, j + 1, v))
                if v == geometry.DEGENERATE:
                    code = EXIT_INCONCLUSIVE
        _emit(args, "\n".join(f"{i} {j} {v}" for i, j, v in rows),
              {"pairs": [{"i": i, "j": j, "verdict": v} for i, j, v in rows]})
        return code
    if action == "complexity":
        c = geometry.complexity(cfg)
        _emit(args, geometry._fmt(c), {"complexity": geometry._fmt(c)})
        return EXIT_OK
    if action == "shrink":
        if args.u is None:
            raise InputError("shrink needs --u")
        out = geometry.canonical_shrink(cfg, args.u)
        _emit(args, geometry.format_config(out),
              {"u": args.u, "config": geometry.format_config(out)})
        return EXIT_OK
    # certify
    try:
        cert = geometry.generic_unlink_certificate(cfg, grid=args.grid)
    except geometry.PairLinked as exc:
        _emit(args, f"linked {exc.pair[0]} {exc.pair[1]}", {"certified": False, "reason": "linked"})
        return EXIT_NEGATIVE
    except (geometry.PairDegenerate, geometry.NotGeneric) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INCONCLUSIVE
    ok = cert.disks_disjoint()
    text = geometry.format_trajectory(cert.trajectory)
    text += f"final\n{geometry.format_config(cert.final)}disks_disjoint {_lower(ok)}"
    _emit(args, text, {"certified": ok,
                       "trajectory": [{"u": u, "config": geometry.format_config(c)}
                                      for u, c in cert.trajectory],
                       "final": geometry.format_config(cert.final),
                       "frozen_radii": cert.frozen_radii})
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured output")
    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("--group", required=True, choices=FAMILIES)
    grp.add_argument("--n", type=int, required=True)

    p = argparse.ArgumentParser(prog="ringgroups", parents=[common],
                                description="Motion groups of rings and wickets.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common, grp], help="decide whether a word is trivial")
    s.add_argument("word")
    s.add_argument("--expect-trivial", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("eq", parents=[common, grp], help="decide whether two words are equal")
    s.add_argument("word1")
    s.add_argument("word2")
    s.add_argument("--expect-equal", action="store_true")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("image", parents=[common, grp], help="image under a representation")
    s.add_argument("word")
    s.add_argument("--rep", choices=NAMES)
    s.set_defaults(func=cmd_image)

    s = sub.add_parser("relators", parents=[common, grp], help="print the relator set")
    s.set_defaults(func=cmd_relators)

    s = sub.add_parser("relcheck", parents=[common, grp], help="verify relators map to 1")
    s.add_argument("--rep", choices=NAMES)
    s.set_defaults(func=cmd_relcheck)

    s = sub.add_parser("nf", parents=[common, grp], help="ut normal form")
    s.add_argument("word")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("alpha", parents=[common], help="McCool generator alpha_ij")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("tc", parents=[common, grp], help="Todd-Coxeter coset enumeration")
    s.add_argument("--extra", action="append", default=[], help="additional relator")
    s.add_argument("--subgroup", action="append", default=[], help="subgroup generator")
    s.add_argument("--only", default="", help="restrict to letter kinds, e.g. 's' or 'rs'")
    s.add_argument("--limit", type=int, help="coset limit (default MG_TC_LIMIT or 10^6)")
    s.add_argument("--table", action="store_true", help="also print the table as CSV")
    s.set_defaults(func=cmd_tc)

    s = sub.add_parser("pin", parents=[common], help="pin the endpoint braid dictionary")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_pin)

    s = sub.add_parser("geom", parents=[common], help="ring configurations")
    s.add_argument("action", choices=("validate", "link", "complexity", "shrink", "certify"))
    s.add_argument("file")
    s.add_argument("--u", type=float)
    s.add_argument("--grid", type=float, nargs="*", default=[])
    s.add_argument("--exact", action="store_true", help="read numbers as exact rationals")
    s.set_defaults(func=cmd_geom)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except (InputError, WordError, RepresentationUndefined, geometry.GeometryError,
            ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
