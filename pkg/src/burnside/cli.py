"""Command-line front end.

    burnside marks symmetric:3 --format csv
    burnside mul symmetric:3 "1*[c1_o2]" "1*[c1_o2]" --check
    burnside inimage cyclic:2 "[1,0]"
    burnside family o2 mul "x2" "x3"
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .cache import default_cache_dir, load_lattice
from .congruence import in_image, order_check
from .families import elementary as fam_el
from .families import o2 as fam_o2
from .families.abelian import CompactAbelianDescriptor, abelian_mul, compact_abelian_reduce
from .groups import GroupError, GroupSpecError, is_prime, parse_group_spec, prime_divisors
from .lattice import SubgroupLattice, invert_marks, mark_vector
from .maps import (alpha_map, embed, induction, product_lattice, product_map, restriction,
                   restriction_normal)
from .ring import (ElementSyntaxError, known_presentation, mul, mul_oracle, mul_orbits,
                   parse_element, verify_presentation)
from .spectrum import DEFAULT_MAX_CLASSES, idempotents, p_perfection_pair, spectrum_partition, units

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def _print_message(self, message, file=None):
        # help and version text become the command's output instead of going to stdout
        if message:
            raise _HelpExit(message)

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "")
        raise _HelpExit(message or "")


class _HelpExit(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--format", choices=("text", "json", "csv"), default=S)
    p.add_argument("--cache-dir", default=S)
    p.add_argument("--no-cache", action="store_true", default=S)
    p.add_argument("--max-order", type=int, default=S)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="burnside", parents=[common],
                     description="Burnside rings, tables of marks and ghost-ring computations.")
    parser.add_argument("--version", action="version", version=f"burnside {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def cmd(name, *args, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    cmd("lattice", help="conjugacy classes of subgroups").add_argument("spec")
    cmd("marks", help="table of marks").add_argument("spec")
    p = cmd("mul", help="product of two elements")
    p.add_argument("spec")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--check", action="store_true", help="cross-check with the coset routes")
    p = cmd("ghost", help="mark vector of an element")
    p.add_argument("spec")
    p.add_argument("element")
    p = cmd("inimage", help="is a ghost vector in the image of the mark map")
    p.add_argument("spec")
    p.add_argument("ghost")
    for name in ("idempotents", "units"):
        p = cmd(name)
        p.add_argument("spec")
        p.add_argument("--max-classes", type=int, default=DEFAULT_MAX_CLASSES)
    p = cmd("spectrum", help="p-perfection and maximal ideals")
    p.add_argument("spec")
    p.add_argument("-p", "--prime", type=int, action="append")
    p = cmd("order", help="lcm of Weyl orders and the |G| C(G) inclusion")
    p.add_argument("spec")

    m = cmd("map", help="maps between Burnside rings").add_subparsers(dest="map_kind",
                                                                      parser_class=_Parser)
    m.required = True
    for kind in ("ind", "res"):
        p = m.add_parser(kind, parents=[common])
        p.add_argument("spec")
        p.add_argument("subgroup", help="ambient class label of the subgroup")
        p.add_argument("element")
    p = m.add_parser("prod", parents=[common])
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.add_argument("x")
    p.add_argument("y")
    p = m.add_parser("alpha", parents=[common])
    p.add_argument("spec")
    p.add_argument("element", help="element over cyclic:|G|")

    f = cmd("family", help="closed-form families").add_subparsers(dest="family",
                                                                   parser_class=_Parser)
    f.required = True
    o2 = f.add_parser("o2", parents=[common])
    o2.add_argument("action", choices=("mul", "mark", "perfection"))
    o2.add_argument("args", nargs="+")
    ab = f.add_parser("abelian", parents=[common])
    ab.add_argument("action", choices=("mul", "reduce"))
    ab.add_argument("args", nargs="+")
    el = f.add_parser("elementary", parents=[common])
    el.add_argument("action", choices=("nf", "intersect"))
    el.add_argument("p", type=int)
    el.add_argument("n", type=int)
    el.add_argument("gens", nargs="+", help="JSON lists of vectors")

    cmd("verify", help="check the listed ring presentations").add_argument("target")
    return parser


# ---------------------------------------------------------------------------

class Context:
    def __init__(self, args):
        self.format = getattr(args, "format", "text")
        self.max_order = getattr(args, "max_order", None)
        if getattr(args, "no_cache", False):
            self.cache_dir = None
        else:
            cd = getattr(args, "cache_dir", None)
            self.cache_dir = Path(cd) if cd else default_cache_dir()

    def lattice(self, spec: str) -> SubgroupLattice:
        G = parse_group_spec(spec, max_order=self.max_order)
        return load_lattice(G, self.cache_dir, max_order=self.max_order)


def _group_info(L: SubgroupLattice | None):
    if L is None:
        return None, []
    G = L.group
    group = {"spec": G.source_spec, "order": G.order, "hash": G.digest}
    classes = [{"label": L.labels[i], "order": c.order, "conjugates": c.conjugates_count,
                "weyl": c.weyl_order} for i, c in enumerate(L.classes)]
    return group, classes


def _elt(x) -> dict:
    return {"literal": str(x), "coeffs": x.dense()}


class Output:
    def __init__(self, L, result, text: str, csv_rows: list | None = None):
        self.L, self.result, self.text, self.csv_rows = L, result, text, csv_rows

    def render(self, fmt: str) -> str:
        if fmt == "json":
            group, classes = _group_info(self.L)
            doc = {"group": group, "classes": classes, "result": self.result}
            return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
        if fmt == "csv":
            if self.csv_rows is None:
                raise UsageError("csv output is not available for this command")
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(self.csv_rows)
            return buf.getvalue()
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _cmd_lattice(ctx, a):
    L = ctx.lattice(a.spec)
    lines = [f"{'label':<10} {'order':>5} {'conj':>5} {'weyl':>5}  members"]
    rows = [["label", "order", "conjugates", "weyl"]]
    for i, c in enumerate(L.classes):
        members = " ".join(map(str, c.representative.members))
        lines.append(f"{L.labels[i]:<10} {c.order:>5} {c.conjugates_count:>5} {c.weyl_order:>5}  {members}")
        rows.append([L.labels[i], c.order, c.conjugates_count, c.weyl_order])
    result = {"subconjugacy": [[int(v) for v in r] for r in L.subconjugacy],
              "representatives": [list(c.representative.members) for c in L.classes]}
    return Output(L, result, "\n".join(lines), rows)


def _cmd_marks(ctx, a):
    L = ctx.lattice(a.spec)
    M = L.marks
    width = max(len(str(v)) for r in M.entries for v in r) + 1
    lines = [" ".join(f"{v:>{width}}" for v in r) + f"   {L.labels[h]}" for h, r in enumerate(M.entries)]
    return Output(L, M.to_json(), "\n".join(lines), [list(L.labels)] + M.to_json())


def _cmd_mul(ctx, a):
    L = ctx.lattice(a.spec)
    x, y = parse_element(L, a.x), parse_element(L, a.y)
    z = mul(x, y)
    result = {"product": _elt(z), "ghost": list(mark_vector(z).values)}
    text = str(z)
    if a.check:
        agree = z == mul_oracle(x, y) == mul_orbits(x, y)
        result["routes_agree"] = agree
        text += f"\nroutes agree: {str(agree).lower()}"
    return Output(L, result, text, [list(L.labels), z.dense()])


def _cmd_ghost(ctx, a):
    L = ctx.lattice(a.spec)
    f = mark_vector(parse_element(L, a.element))
    return Output(L, list(f.values), json.dumps(list(f.values)), [list(L.labels), list(f.values)])


def _parse_ghost(L, text):
    try:
        vals = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ElementSyntaxError(f"ghost vector is not valid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(vals, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
        raise ElementSyntaxError("ghost vector must be a JSON array of integers", 0)
    return L.ghost(vals)


def _cmd_inimage(ctx, a):
    L = ctx.lattice(a.spec)
    f = _parse_ghost(L, a.ghost)
    ok, rel = in_image(f)
    failing = rel.describe(L.labels) if rel else None
    result = {"in_image": ok, "failing_relation": failing}
    if ok:
        coeffs, _ = invert_marks(f)
        result["element"] = [int(c) for c in coeffs]
    text = "true" if ok else f"false\nfailing relation: {failing}"
    return Output(L, result, text)


def _cmd_idem(ctx, a, units_mode=False):
    L = ctx.lattice(a.spec)
    found = (units if units_mode else idempotents)(L, max_classes=a.max_classes)
    result = [{"element": _elt(e), "ghost": list(mark_vector(e).values)} for e in found]
    text = "\n".join(str(e) for e in found) + f"\ncount: {len(found)}"
    return Output(L, result, text)


def _cmd_spectrum(ctx, a):
    L = ctx.lattice(a.spec)
    primes = a.prime or prime_divisors(L.group.order) or [2]
    for p in primes:
        if not is_prime(p):
            raise GroupError(f"{p} is not prime")
    result = []
    lines = []
    for p in primes:
        pairs = []
        for h in range(len(L)):
            pp = p_perfection_pair(L, h, p)
            pairs.append({"class": L.labels[h], "h_sub": L.labels[pp.h_sub], "h_sup": L.labels[pp.h_sup]})
            lines.append(f"p={p} {L.labels[h]}: H_p={L.labels[pp.h_sub]} H^p={L.labels[pp.h_sup]}")
        part = [[L.labels[h] for h in grp] for grp in spectrum_partition(L, p)]
        lines.append(f"p={p} maximal ideals: " + " | ".join(" ".join(g) for g in part))
        result.append({"p": p, "classes": pairs, "partition": part})
    return Output(L, result, "\n".join(lines))


def _cmd_order(ctx, a):
    L = ctx.lattice(a.spec)
    order, ok = order_check(L)
    return Output(L, {"order": order, "inclusion_holds": ok},
                  f"order {order}\ninclusion holds: {str(ok).lower()}")


def _cmd_map(ctx, a):
    kind = a.map_kind
    if kind in ("ind", "res"):
        L = ctx.lattice(a.spec)
        E = embed(L, L.rep(L.resolve(a.subgroup)))
        if kind == "ind":
            z = induction(E, parse_element(E.sub, a.element))
            return Output(L, {"element": _elt(z)}, str(z))
        x = parse_element(L, a.element)
        z = restriction(E, x)
        result = {"element": _elt(z), "sub_classes": list(E.sub.labels)}
        text = str(z)
        try:
            result["normal_formula_agrees"] = restriction_normal(E, x) == z
            text += f"\nnormal formula agrees: {str(result['normal_formula_agrees']).lower()}"
        except GroupError:
            pass
        return Output(L, result, text)
    if kind == "prod":
        L1, L2 = ctx.lattice(a.spec1), ctx.lattice(a.spec2)
        P = product_lattice(L1, L2)
        z = product_map(parse_element(L1, a.x), parse_element(L2, a.y), P)
        return Output(P.lattice, {"element": _elt(z)}, str(z))
    L = ctx.lattice(a.spec)
    C = ctx.lattice(f"cyclic:{L.group.order}")
    z = alpha_map(L, parse_element(C, a.element))
    return Output(L, {"element": _elt(z), "ghost": list(mark_vector(z).values)}, str(z))


def _cmd_family(ctx, a):
    if a.family == "o2":
        args = a.args
        if a.action == "mul":
            if len(args) != 2:
                raise UsageError("family o2 mul takes two elements")
            z = fam_o2.o2_mul(fam_o2.parse_o2_element(args[0]), fam_o2.parse_o2_element(args[1]))
            return Output(None, {"element": str(z)}, str(z))
        if a.action == "mark":
            if len(args) != 2:
                raise UsageError("family o2 mark takes an element and a subgroup")
            v = fam_o2.o2_mark(fam_o2.parse_o2_element(args[0]), fam_o2.parse_o2_subgroup(args[1]))
            return Output(None, {"mark": v}, str(v))
        if len(args) != 2:
            raise UsageError("family o2 perfection takes a subgroup and a prime")
        sub_, sup_ = fam_o2.o2_p_perfection(fam_o2.parse_o2_subgroup(args[0]), _int(args[1]))
        return Output(None, {"h_sub": str(sub_), "h_sup": str(sup_)}, f"H_p={sub_} H^p={sup_}")
    if a.family == "abelian":
        if a.action == "mul":
            if len(a.args) != 3:
                raise UsageError("family abelian mul takes a spec and two class labels")
            L = ctx.lattice(a.args[0])
            z = abelian_mul(L, L.resolve(a.args[1]), L.resolve(a.args[2]))
            return Output(L, {"element": _elt(z)}, str(z))
        rank = _int(a.args[0])
        factors = tuple(_int(s) for s in a.args[1].split(",")) if len(a.args) > 1 and a.args[1] else ()
        G = compact_abelian_reduce(CompactAbelianDescriptor(rank, factors))
        L = load_lattice(G, ctx.cache_dir)
        return Output(L, {"spec": G.source_spec, "order": G.order},
                      f"{G.source_spec} (order {G.order})")
    gens = [_json_vectors(s) for s in a.gens]
    if a.action == "nf":
        nf = fam_el.nf_from_generators(a.p, a.n, gens[0])
        return Output(None, _nf_json(nf), _nf_text(nf))
    if len(gens) != 2:
        raise UsageError("family elementary intersect takes two generator lists")
    A = fam_el.nf_from_generators(a.p, a.n, gens[0])
    B = fam_el.nf_from_generators(a.p, a.n, gens[1])
    lin, rule, agree = fam_el.nf_intersect(A, B)
    result = {"linear": _nf_json(lin), "tuple_rule": _nf_json(rule), "agree": agree}
    text = f"linear: {_nf_text(lin)}\ntuple rule: {_nf_text(rule)}\nagree: {str(agree).lower()}"
    return Output(None, result, text)


def _int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise UsageError(f"expected an integer, got {s!r}") from None


def _json_vectors(s: str):
    try:
        v = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ElementSyntaxError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(v, list) or not all(isinstance(r, list) for r in v):
        raise ElementSyntaxError("expected a JSON list of vectors", 0)
    return v


def _nf_json(nf):
    return {"pivots": list(nf.pivots), "rows": [list(r) for r in nf.rows]}


def _nf_text(nf):
    if not nf.rows:
        return "trivial"
    return ", ".join(f"{i}:{''.join(map(str, r))}" for i, r in zip(nf.pivots, nf.rows))


def _cmd_verify(ctx, a):
    if a.target.lower() == "o2":
        return _verify_o2()
    L = ctx.lattice(a.target)
    try:
        name, R = known_presentation(L)
    except GroupError:
        return _verify_routes(L)
    rep = verify_presentation(L, R, name)
    lines = [f"presentation: {name}"]
    rels = []
    for r in rep.results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.relation}"
                     + ("" if r.passed else f"   lhs={r.lhs}  rhs={r.rhs}"))
        rels.append({"relation": r.relation, "passed": r.passed, "lhs": str(r.lhs), "rhs": str(r.rhs)})
    lines.append(f"{sum(r.passed for r in rep.results)}/{len(rep.results)} relations pass")
    out = Output(L, {"presentation": name, "relations": rels, "all_passed": rep.all_passed},
                 "\n".join(lines))
    out.failed = not rep.all_passed
    return out


def _verify_routes(L):
    n = len(L)
    bad = []
    for i in range(n):
        for j in range(i, n):
            x, y = L.basis(i), L.basis(j)
            if not (mul(x, y) == mul_oracle(x, y) == mul_orbits(x, y)):
                bad.append(f"{L.labels[i]}*{L.labels[j]}")
    ok = not bad
    text = (f"no listed presentation; checked ghost/double-coset/orbit products on "
            f"{n * (n + 1) // 2} basis pairs: {'all agree' if ok else 'disagree at ' + ', '.join(bad)}")
    out = Output(L, {"presentation": None, "basis_pairs": n * (n + 1) // 2, "disagreements": bad,
                     "all_passed": ok}, text)
    out.failed = not ok
    return out


def _verify_o2(kmax: int = 60):
    subs = [fam_o2.FULL, fam_o2.SO2] + [fam_o2.dihedral(k) for k in range(1, kmax + 1)]
    rels = [("y*y = 2*y", fam_o2.Y, fam_o2.Y, 2 * fam_o2.Y)]
    for n in range(1, 13):
        for m in range(n, 13):
            rels.append((f"x{n}*x{m} = 2*x{math.gcd(n, m)}", fam_o2.x(n), fam_o2.x(m),
                         2 * fam_o2.x(math.gcd(n, m))))
        rels.append((f"x{n}*y = 0", fam_o2.x(n), fam_o2.Y, fam_o2.O2Element()))
    results = []
    for text, u, v, rhs in rels:
        ok = fam_o2.o2_mul(u, v) == rhs and all(
            fam_o2.o2_mark(u, S) * fam_o2.o2_mark(v, S) == fam_o2.o2_mark(rhs, S) for S in subs)
        results.append({"relation": text, "passed": ok})
    passed = sum(r["passed"] for r in results)
    lines = [f"presentation: O(2), marks checked at O2, SO2, Dihedral(1..{kmax})",
             f"{passed}/{len(results)} relations pass"]
    out = Output(None, {"presentation": "O(2)", "relations": results,
                        "all_passed": passed == len(results)}, "\n".join(lines))
    out.failed = passed != len(results)
    return out


COMMANDS = {
    "lattice": _cmd_lattice, "marks": _cmd_marks, "mul": _cmd_mul, "ghost": _cmd_ghost,
    "inimage": _cmd_inimage, "idempotents": _cmd_idem,
    "units": lambda ctx, a: _cmd_idem(ctx, a, units_mode=True),
    "spectrum": _cmd_spectrum, "order": _cmd_order, "map": _cmd_map, "family": _cmd_family,
    "verify": _cmd_verify,
}


def _error(fmt: str, kind: str, message: str, position: int | None = None) -> bytes:
    if fmt == "json":
        err: dict[str, Any] = {"type": kind, "message": message}
        if position is not None:
            err["position"] = position
        return (json.dumps({"error": err}, ensure_ascii=False) + "\n").encode()
    pos = f" (position {position})" if position is not None and kind != "spec" else ""
    return f"error: {message}{pos}\n".encode()


def run_command(argv: list[str]) -> tuple[int, bytes]:
    fmt = "json" if "--format=json" in argv or _after(argv, "--format") == "json" else "text"
    try:
        args = build_parser().parse_args(argv)
    except _HelpExit as exc:
        return EXIT_OK, str(exc).encode()
    except UsageError as exc:
        return EXIT_USAGE, _error(fmt, "usage", str(exc))
    ctx = Context(args)
    try:
        out = COMMANDS[args.command](ctx, args)
        text = out.render(ctx.format)
    except UsageError as exc:
        return EXIT_USAGE, _error(ctx.format, "usage", str(exc))
    except GroupSpecError as exc:
        return EXIT_USAGE, _error(ctx.format, "spec", str(exc), exc.position)
    except ElementSyntaxError as exc:
        return EXIT_USAGE, _error(ctx.format, "syntax", str(exc), exc.position)
    except (GroupError, ValueError, ArithmeticError) as exc:
        return EXIT_DOMAIN, _error(ctx.format, type(exc).__name__, str(exc))
    code = EXIT_DOMAIN if getattr(out, "failed", False) else EXIT_OK
    return code, text.encode()


def _after(argv, flag):
    try:
        return argv[argv.index(flag) + 1]
    except (ValueError, IndexError):
        return None


def main(argv: list[str] | None = None) -> int:
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout.buffer if code == EXIT_OK else sys.stderr.buffer
    if code == EXIT_DOMAIN and not out.startswith((b"error", b'{"error')):
        stream = sys.stdout.buffer
    stream.write(out)
    stream.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
