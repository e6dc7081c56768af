"""
Command-line front end.

JSON (via --json) is the machine interface; the default human output is a
thin formatter over the same data.  Exit codes: 0 success, 1 user/parse
error, 2 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .conjugacy import (
    BudgetExceededError,
    are_conjugate,
    sss_enumerate,
    sss_representative,
)
from .factors import (
    CanonicalFactor,
    enumerate_factors,
    factor_to_word,
    precedes,
    tau,
)
from .fdtc import fdtc_bounds
from .normal_form import lcf, lcf_to_word
from .positivity import is_conj_strictly_asqp, is_sqp, nb_conjugacy_report, nb_report
from .render import render_svg
from .words import ParseError, parse_word


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandforge",
        description="Band-generator braid calculus: normal forms, conjugacy, "
        "positivity, twist bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, words: int = 0) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", type=int, required=True, help="strand count")
        p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
        p.add_argument("-o", metavar="FILE", help="write output to FILE")
        if words == 1:
            p.add_argument("word")
        elif words == 2:
            p.add_argument("word1")
            p.add_argument("word2")
        return p

    add("lcf", "left canonical form of a word", words=1)

    p = add("sss", "super summit representative (and optionally the full set)", words=1)
    p.add_argument("--enumerate", action="store_true", help="enumerate the whole set")
    p.add_argument("--budget", type=int, help="element budget for enumeration")

    p = add("conjugate", "decide conjugacy of two words", words=2)
    p.add_argument("--budget", type=int)

    p = add("classify", "positivity classification report", words=1)
    p.add_argument("--budget", type=int)

    p = add("nb", "negative band number bounds", words=1)
    p.add_argument("--budget", type=int)

    p = add("fdtc", "fractional Dehn twist coefficient interval", words=1)
    p.add_argument("--budget", type=int)

    p = add("catalog", "list the canonical factors with their order structure")
    p.add_argument("--count", action="store_true", help="print only the count")

    p = add("tables", "classify all ordered factor pairs by left-weightedness")
    p.add_argument("--collapse", action="store_true", help="one row per rotation class")

    p = add("render", "SVG of a factor (partition text) or of a word's normal form")
    p.add_argument("target", help='partition like "{1,2,3}" or a braid word')
    return parser


def _word(args, attr: str = "word"):
    return parse_word(getattr(args, attr), args.n)


def _cmd_lcf(args) -> tuple[dict, str]:
    form = lcf(_word(args))
    payload = form.to_json()
    human = f"{form.text()}\nword: {lcf_to_word(form).render() or 'e'}"
    return payload, human


def _cmd_sss(args) -> tuple[dict, str]:
    data = sss_representative(_word(args))
    payload = {
        "representative": data.representative.to_json(),
        "inf_conj": data.inf_conj,
        "sup_conj": data.sup_conj,
        "witness": data.witness.render(),
    }
    lines = [
        f"representative: {data.representative.text()}",
        f"inf[b]={data.inf_conj} sup[b]={data.sup_conj}",
    ]
    if args.enumerate:
        elements = sss_enumerate(data, args.budget)
        payload["size"] = len(elements)
        payload["elements"] = sorted(e.to_json()["word"] for e in elements)
        lines.append(f"size: {len(elements)}")
    return payload, "\n".join(lines)


def _cmd_conjugate(args) -> tuple[dict, str]:
    result = are_conjugate(_word(args, "word1"), _word(args, "word2"), args.budget)
    payload = {
        "conjugate": result.conjugate,
        "witness": result.witness.render() if result.witness is not None else None,
        "sss_size_a": result.sss_size_a,
        "sss_size_b": result.sss_size_b,
    }
    human = "conjugate" if result.conjugate else "not conjugate"
    if result.witness is not None:
        human += f"\nwitness: {result.witness.render() or 'e'}"
    return payload, human


def _cmd_classify(args) -> tuple[dict, str]:
    w = _word(args)
    verdict = is_conj_strictly_asqp(w, args.budget)
    form = lcf(w)
    payload = {
        "sqp": is_sqp(w),
        "conj_sqp": sss_representative(w).inf_conj >= 0,
        "asqp_necessary": form.inf >= -1,
        "conj_strictly_asqp": verdict.holds,
        "conj_strictly_asqp_definitive": verdict.definitive,
        "nb": nb_report(w).to_json(),
        "nb_class": nb_conjugacy_report(w).to_json(),
    }
    human = "\n".join(f"{k}: {v}" for k, v in payload.items())
    return payload, human


def _cmd_nb(args) -> tuple[dict, str]:
    w = _word(args)
    payload = {
        "word_level": nb_report(w).to_json(),
        "class_level": nb_conjugacy_report(w).to_json(),
    }
    human = "\n".join(
        f"{scope}: lower={rep['lower']} upper={rep['upper']} exact={rep['exact']}"
        for scope, rep in payload.items()
    )
    return payload, human


def _cmd_fdtc(args) -> tuple[dict, str]:
    interval = fdtc_bounds(_word(args))
    payload = interval.to_json()
    human = f"c(b) in [{payload['lower']}, {payload['upper']}]"
    if payload["exact"] is not None:
        human += f" (exact: {payload['exact']})"
    return payload, human


def _cmd_catalog(args) -> tuple[dict, str]:
    factors = enumerate_factors(args.n)
    if args.count:
        return {"count": len(factors)}, str(len(factors))
    index = {f: i for i, f in enumerate(factors)}
    hasse = [
        [index[a], index[b]]
        for a in factors
        for b in factors
        if b.word_length == a.word_length + 1 and precedes(a, b)
    ]
    payload = {
        "n": args.n,
        "count": len(factors),
        "factors": [
            {
                "id": i,
                "partition": f.text(),
                "blocks": f.json_blocks(),
                "word": factor_to_word(f).render(),
                "word_length": f.word_length,
            }
            for i, f in enumerate(factors)
        ],
        "hasse_edges": hasse,
    }
    lines = [f"{row['id']:3d}  {row['partition']:<24} {row['word']}" for row in payload["factors"]]
    lines.append(f"count: {len(factors)}; cover relations: {len(hasse)}")
    return payload, "\n".join(lines)


def pair_rows(n: int) -> list[dict]:
    """Left-weighting classification of every ordered factor pair."""
    from .normal_form import left_weight_pair

    rows = []
    for a in enumerate_factors(n):
        for b in enumerate_factors(n):
            increasable = bool(a.right_set & b.starting_set)
            wa, wb = left_weight_pair(a, b)
            rows.append(
                {
                    "left": a.text(),
                    "right": b.text(),
                    "increasable": increasable,
                    "weighted": [wa.text(), wb.text()],
                }
            )
    return rows


def _rotation_class_key(n: int, a: CanonicalFactor, b: CanonicalFactor) -> tuple[str, str]:
    return min((tau(a, k).text(), tau(b, k).text()) for k in range(n))


def collapse_rows(n: int) -> list[dict]:
    """One row per rotation class of ordered pairs, with the orbit size."""
    classes: dict[tuple[str, str], dict] = {}
    factors = enumerate_factors(n)
    by_text = {f.text(): f for f in factors}
    for row in pair_rows(n):
        a, b = by_text[row["left"]], by_text[row["right"]]
        key = _rotation_class_key(n, a, b)
        entry = classes.setdefault(
            key, {"left": key[0], "right": key[1], "increasable": row["increasable"], "orbit": 0}
        )
        entry["orbit"] += 1
        if (row["left"], row["right"]) == key:
            entry["weighted"] = row["weighted"]
    return [classes[k] for k in sorted(classes)]


def _cmd_tables(args) -> tuple[dict, str]:
    rows = collapse_rows(args.n) if args.collapse else pair_rows(args.n)
    increasable = [r for r in rows if r["increasable"]]
    payload = {
        "n": args.n,
        "collapsed": bool(args.collapse),
        "rows": rows,
        "increasable_count": len(increasable),
        "non_increasing_count": len(rows) - len(increasable),
    }
    lines = []
    for r in rows:
        mark = "=>" if r["increasable"] else "||"
        target = f" {mark} ({r['weighted'][0]})({r['weighted'][1]})" if r["increasable"] else f" {mark}"
        orbit = f"  x{r['orbit']}" if "orbit" in r else ""
        lines.append(f"({r['left']})({r['right']}){target}{orbit}")
    lines.append(
        f"increasable: {payload['increasable_count']}; "
        f"non-increasing: {payload['non_increasing_count']}"
    )
    return payload, "\n".join(lines)


def _cmd_render(args) -> tuple[Optional[dict], str]:
    from .factors import parse_partition_text

    target = args.target.strip()
    if target.startswith("{") or target == "e":
        svg = render_svg(parse_partition_text(target, args.n))
    else:
        svg = render_svg(lcf(parse_word(target, args.n)))
    return None, svg


_COMMANDS = {
    "lcf": _cmd_lcf,
    "sss": _cmd_sss,
    "conjugate": _cmd_conjugate,
    "classify": _cmd_classify,
    "nb": _cmd_nb,
    "fdtc": _cmd_fdtc,
    "catalog": _cmd_catalog,
    "tables": _cmd_tables,
    "render": _cmd_render,
}


def run(argv: list[str], out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        payload, human = _COMMANDS[args.command](args)
        use_json = payload is not None and getattr(args, "json", False)
        text = json.dumps(payload, indent=2, sort_keys=True) if use_json else human
        if args.o:
            with open(args.o, "w", encoding="utf-8") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")
        else:
            out.write(text if text.endswith("\n") else text + "\n")
        return 0
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
