"""Command-line interface.

Exit status: 0 on success, 2 when a verifier found a counterexample or
witness (or a division certified non-specialness), 1 on bad invocation.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .bigpoly import MultiPoly, NonIntegralDivision, PolySyntaxError, format_poly, parse_poly
from .lab import ExtensionModel, enumerate_classes, lab_report
from .rings import FreePsiRing, IntegerPsiRing, SphereKRing, is_special, lambda_structure
from .spheres import (
    adams_scan,
    big_G,
    big_G_bruteforce,
    extalg_lambda,
    extalg_psi,
    format_stable_table,
    gpj_bruteforce,
    gpj_closed,
    odd_hopf_feasible,
    primes_upto,
    stable_table,
)
from .symmetric import universal_P, universal_Pij

OK, USAGE, FOUND = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


@dataclass
class OutputEnvelope:
    command: list
    payload: object
    status: int = OK
    text: str = ""
    as_json: bool = False

    def render(self) -> str:
        if self.as_json:
            return json.dumps(self.payload, indent=2, ensure_ascii=False)
        return self.text


def _int_list(text: str) -> list:
    """'0,1,2' or '-1:3' (half-open) into a list of ints."""
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi)))
    return [int(t) for t in text.split(",") if t.strip()]


def _ring(spec: str):
    if spec == "z":
        return IntegerPsiRing()
    if spec == "free":
        return FreePsiRing("a")
    m = re.fullmatch(r"sphere:(\d+)", spec)
    if m:
        return SphereKRing(int(m.group(1)))
    m = re.fullmatch(r"free:([a-z]+)", spec)
    if m:
        return FreePsiRing(m.group(1))
    raise UsageError(f"unknown ring {spec!r}; use z, free, free:<letters> or sphere:N")


def _sphere_element(ring: SphereKRing, text: str):
    if "," in text:
        u, b = (int(t) for t in text.split(","))
        return ring.element(u, b)
    poly = parse_poly(re.sub(r"y(?!\d)", "y1", text))
    y = MultiPoly.var("y", 1)
    if poly.degree() > 1 or set(poly.variables()) - set(y.variables()):
        raise UsageError("sphere elements are u + b*y (or 'u,b')")
    b = sum(c for mono, c in poly.terms.items() if mono)
    return ring.element(poly.constant_term(), b)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="psiring", description="lambda-rings, Adams operations and Extalg of spheres")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    ext = sub.add_parser("extalg", help="Extalg groups of K(S^2n) by K~(S^2n')")
    ext.add_argument("kind", choices=["psi", "lambda"])
    ext.add_argument("--n", type=int, required=True)
    ext.add_argument("--nprime", type=int, required=True)
    common(ext)

    gn = common(sub.add_parser("gn", help="G(n, n') = gcd{l^n - l^n'}"))
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--nprime", type=int, required=True)
    gn.add_argument("--brute", action="store_true")
    gn.add_argument("--lmax", type=int, default=500)

    gpj = common(sub.add_parser("gpj", help="p-adic valuation of gcd{k^j - 1}"))
    gpj.add_argument("--p", type=int, required=True)
    gpj.add_argument("--j", type=int, required=True)
    gpj.add_argument("--brute", action="store_true")
    gpj.add_argument("--window", type=int, default=16)

    st = common(sub.add_parser("stable", help="stable Extalg groups"))
    st.add_argument("--kmax", type=int, required=True)

    hopf = sub.add_parser("hopf", help="odd Hopf invariant")
    hsub = hopf.add_subparsers(dest="action", required=True, parser_class=_Parser)
    hf = common(hsub.add_parser("feasible"))
    hf.add_argument("--n", type=int, required=True)
    hf.add_argument("--nprime", type=int, required=True)
    ha = common(hsub.add_parser("adams"))
    ha.add_argument("--a", type=int, required=True)
    ha.add_argument("--nmax", type=int, required=True)

    poly = sub.add_parser("poly", help="universal polynomials")
    psub = poly.add_subparsers(dest="action", required=True, parser_class=_Parser)
    up = common(psub.add_parser("universal-p"))
    up.add_argument("--i", type=int, required=True)
    upij = common(psub.add_parser("universal-pij"))
    upij.add_argument("--i", type=int, required=True)
    upij.add_argument("--j", type=int, required=True)

    ring = sub.add_parser("ring", help="Psi-ring operations")
    rsub = ring.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ap = common(rsub.add_parser("apply-psi"))
    ap.add_argument("--k", type=int, required=True)
    ap.add_argument("--expr", required=True)
    cs = common(rsub.add_parser("check-special"))
    cs.add_argument("--ring", required=True)
    cs.add_argument("--primes", default="2,3,5,7,11,13")

    newton = sub.add_parser("newton", help="Newton's formula")
    nsub = newton.add_subparsers(dest="action", required=True, parser_class=_Parser)
    lp = common(nsub.add_parser("lambda-from-psi"))
    lp.add_argument("--i", type=int, required=True)
    lp.add_argument("--ring", required=True)
    lp.add_argument("--elem", required=True)

    lab = sub.add_parser("lab", help="extension lab")
    lsub = lab.add_subparsers(dest="action", required=True, parser_class=_Parser)
    lv = common(lsub.add_parser("verify"))
    le = common(lsub.add_parser("enumerate"))
    for sp in (lv, le):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--nprime", type=int, required=True)
        sp.add_argument("--kmax", type=int, default=12)
        sp.add_argument("--special", action="store_true")
    lv.add_argument("--h", type=int, required=True)
    lv.add_argument("--nu2", type=int, required=True)
    le.add_argument("--h", default="0,1", help="comma list or lo:hi range")
    return p


def _describe(found) -> str:
    if found is None:
        return "ok"
    if "axiom" in found:
        return f"{found['axiom']} fails at {tuple(found['where'])}: {found['lhs']} != {found['rhs']}"
    return f"Psi^{found['p']}({found['element']}) - ({found['element']})^{found['p']} = {found['difference']}"


def _positive(*values):
    if any(v < 1 for v in values):
        raise UsageError("arguments must be positive integers")


def run(argv) -> OutputEnvelope:
    args = build_parser().parse_args(argv)
    env = _dispatch(args, list(argv))
    env.as_json = args.json
    return env


def _dispatch(args, cmd) -> OutputEnvelope:
    c = args.command

    if c == "extalg":
        _positive(args.n, args.nprime)
        group = (extalg_psi if args.kind == "psi" else extalg_lambda)(args.n, args.nprime)
        text = f"Extalg_{args.kind}(K(S^{2 * args.n}), K~(S^{2 * args.nprime})) = {group}"
        return OutputEnvelope(cmd, group.to_json(), OK, text)

    if c == "gn":
        _positive(args.n, args.nprime)
        prof = big_G(args.n, args.nprime)
        payload = prof.to_json()
        text = f"G({args.n}, {args.nprime}) = {prof.value}"
        if prof.factorization:
            text += " = " + " * ".join(f"{p}^{e}" for p, e in sorted(prof.factorization.items()))
        if args.brute:
            if args.n == args.nprime:
                raise UsageError("the brute-force gcd is degenerate for n = n'")
            brute = big_G_bruteforce(args.n, args.nprime, args.lmax)
            payload["brute"] = brute
            text += f"\nbrute force (l <= {args.lmax}): {brute}"
        return OutputEnvelope(cmd, payload, OK, text)

    if c == "gpj":
        _positive(args.j, args.window)
        res = gpj_bruteforce(args.p, args.j, args.window) if args.brute else gpj_closed(args.p, args.j)
        payload = {"p": res.p, "j": res.j, "value": res.value, "method": "brute" if args.brute else "closed"}
        return OutputEnvelope(cmd, payload, OK, f"g({res.p}, {res.j}) = {res.value}")

    if c == "stable":
        _positive(args.kmax)
        rows = stable_table(args.kmax)
        return OutputEnvelope(cmd, [r.to_json() for r in rows], OK, format_stable_table(rows))

    if c == "hopf":
        if args.action == "feasible":
            _positive(args.n, args.nprime)
            rep = odd_hopf_feasible(args.n, args.nprime)
            verdict = "feasible" if rep.feasible else "infeasible"
            text = f"{verdict}: {rep.reason}; theorem case {rep.theorem_case}"
            return OutputEnvelope(cmd, rep.to_json(), OK, text)
        _positive(args.nmax)
        found = adams_scan(args.a, args.nmax)
        return OutputEnvelope(cmd, found, OK, " ".join(map(str, found)))

    if c == "poly":
        _positive(args.i)
        if args.action == "universal-p":
            poly = universal_P(args.i)
        else:
            _positive(args.j)
            poly = universal_Pij(args.i, args.j)
        return OutputEnvelope(cmd, {"poly": format_poly(poly)}, OK, format_poly(poly))

    if c == "ring":
        if args.action == "apply-psi":
            _positive(args.k)
            expr = parse_poly(args.expr)
            ring = FreePsiRing(expr.families() or "a")
            out = ring.psi(args.k, expr)
            return OutputEnvelope(cmd, {"result": format_poly(out)}, OK, format_poly(out))
        ring = _ring(args.ring)
        witness = is_special(ring, _int_list(args.primes))
        if witness is None:
            return OutputEnvelope(cmd, {"special": True, "witness": None}, OK, "special on all samples")
        text = f"not special: Psi^{witness.p}({witness.element}) - ({witness.element})^{witness.p} = {witness.difference}"
        return OutputEnvelope(cmd, {"special": False, "witness": witness.to_json()}, FOUND, text)

    if c == "newton":
        _positive(args.i)
        ring = _ring(args.ring)
        if isinstance(ring, SphereKRing):
            elem = _sphere_element(ring, args.elem)
        elif isinstance(ring, IntegerPsiRing):
            elem = ring.element(int(args.elem))
        else:
            elem = ring.element(parse_poly(args.elem))
        try:
            value = lambda_structure(ring, elem, args.i)
        except NonIntegralDivision as exc:
            payload = {"lambda": None, "non_integral": {"element": str(exc.element), "divisor": exc.divisor}}
            return OutputEnvelope(cmd, payload, FOUND, f"not divisible: ({exc.element}) / {exc.divisor}")
        return OutputEnvelope(cmd, {"lambda": str(value)}, OK, f"lambda^{args.i}({elem}) = {value}")

    if c == "lab":
        _positive(args.n, args.nprime, args.kmax)
        if args.n == args.nprime:
            raise UsageError("the lab needs n != n'")
        primes = primes_upto(args.kmax)
        if args.action == "verify":
            try:
                model = ExtensionModel.from_nu2(args.n, args.nprime, args.h, args.nu2, args.kmax)
            except NonIntegralDivision as exc:
                payload = {"ok": False, "admissible": False, "reason": str(exc)}
                return OutputEnvelope(cmd, payload, FOUND, f"nu_2 = {args.nu2} is not admissible: {exc}")
            report = lab_report(model, primes=primes, special=args.special)
            lines = [f"{key}: {_describe(report[key])}"
                     for key in ("commutation", "ring_homomorphism", "special") if key in report]
            lines.append(f"class (h, z mod G): {report['class']}")
            return OutputEnvelope(cmd, report, OK if report["ok"] else FOUND, "\n".join(lines))
        labels = enumerate_classes(
            args.n, args.nprime, _int_list(args.h), args.kmax, args.special, primes
        )
        G = big_G(args.n, args.nprime).value
        text = f"{len(labels)} classes (G = {G}): " + " ".join(f"({h},{z})" for h, z in labels)
        return OutputEnvelope(cmd, {"G": G, "classes": [list(x) for x in labels]}, OK, text)

    raise UsageError(f"unknown command {c!r}")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        env = run(argv)
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return USAGE
    except (ValueError, PolySyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    print(env.render())
    return env.status


if __name__ == "__main__":
    sys.exit(main())
