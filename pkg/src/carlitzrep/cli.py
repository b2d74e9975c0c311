"""Command-line front end.

    carlitzrep [flags] verify
    carlitzrep [flags] run CHECK [--w W --m M --sigma S --rep R --n N --D D --param key=value ...]
    carlitzrep [flags] lfunc {omega,L,euler,taelman,det} [--sigma S --n N]
    carlitzrep [flags] rep {hom,irr,iso,bn,depth} [--rep R --rep2 R2 --l L]
    carlitzrep [flags] mf {E,G,rank,ulimit} [--w W --m M --sigma S --point K]
    carlitzrep [flags] amalgam {decompose,phi,essdim} [--matrix "a;b;c;d" --rep R]

Flags may appear before or after the subcommand.  ``--config FILE`` reads a
JSON object with the same keys as the flags (q, p, e, modulus, s, prec, guard,
cutoff, sample_degree, seed, out, format); explicit flags override it.
Exit status: 0 iff no check fails; 1 if a check fails; 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import CHECKS, RunConfig, report_document, run_single, verify_all
from .errors import CarlitzRepError, ConfigError, UnknownCheck
from .fields import FieldConfig
from .serialize import dumps, jsonable
from .series import Precision

CONFIG_KEYS = ("q", "p", "e", "modulus", "s", "prec", "guard", "cutoff", "sample_degree", "seed", "out", "format")


def _common(parser: argparse.ArgumentParser, defaults: bool):
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    g = parser.add_argument_group("configuration")
    g.add_argument("--config", default=d(None), help="JSON file with configuration keys")
    g.add_argument("--q", type=int, default=d(None), help="field size (default 3)")
    g.add_argument("--p", type=int, default=d(None), help="characteristic (with --e)")
    g.add_argument("--e", type=int, default=d(None), help="extension degree (with --p)")
    g.add_argument("--modulus", default=d(None),
                   help="monic modulus over F_p: coefficients low->high ('1,1,1') or a polynomial in x")
    g.add_argument("--s", type=int, default=d(None), help="number of variables / semi-character length")
    g.add_argument("--prec", type=int, default=d(None), help="target valuation (default 60)")
    g.add_argument("--guard", type=int, default=d(None), help="guard digits (default 8)")
    g.add_argument("--cutoff", type=int, default=d(None), help="degree cutoff D (default 6)")
    g.add_argument("--sample-degree", dest="sample_degree", type=int, default=d(None),
                   help="degree bound K of the sample family (default 4)")
    g.add_argument("--seed", type=int, default=d(None), help="random seed (default 0)")
    g.add_argument("--out", default=d(None), help="write the output to this file")
    g.add_argument("--format", choices=["json", "text"], default=d(None))


def _modulus(text, p):
    if text is None:
        return None
    if isinstance(text, (list, tuple)):
        return tuple(int(c) for c in text)
    text = str(text).strip()
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        pass
    import sympy

    try:
        x = sympy.Symbol("x")
        P = sympy.Poly(sympy.sympify(text.replace("^", "**"), locals={"x": x}), x)
        return tuple(int(c) % p for c in reversed(P.all_coeffs()))
    except (sympy.SympifyError, sympy.PolynomialError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed modulus {text!r}") from exc


def build_config(ns: argparse.Namespace) -> RunConfig:
    values = {}
    path = getattr(ns, "config", None)
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        unknown = set(data) - set(CONFIG_KEYS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        values.update(data)
    for k in CONFIG_KEYS:
        v = getattr(ns, k, None)
        if v is not None:
            values[k] = v
    q, p, e = values.get("q"), values.get("p"), values.get("e")
    if p is not None or e is not None:
        if p is None:
            raise ConfigError("--e needs --p")
        e = e or 1
        if q is not None and q != p ** e:
            raise ConfigError(f"q={q} does not equal p^e={p ** e}")
        q = p ** e
    q = q or 3
    if q < 2:
        raise ConfigError(f"q={q} is not a prime power")
    try:
        pp = min(d for d in range(2, q + 1) if q % d == 0)
        mod = _modulus(values.get("modulus"), pp)
        field = FieldConfig.from_q(q, mod)
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc
    try:
        prec = Precision(int(values.get("prec", 60)), int(values.get("guard", 8)))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    cfg = RunConfig(field=field, s=int(values.get("s", 1)), precision=prec, cutoff=int(values.get("cutoff", 6)),
                    sample_degree=int(values.get("sample_degree", 4)), seed=int(values.get("seed", 0)),
                    out=values.get("out"), format=values.get("format", "json"))
    return cfg.validate()


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="carlitzrep", description=__doc__.split("\n\n")[0],
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    _common(ap, True)
    ap.add_argument("--runtime", action="store_true", help="include wall-clock runtimes in reports")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        _common(p, False)
        return p

    add("verify", help="run the whole verification suite")
    p = add("run", help="run one named check")
    p.add_argument("check", help="one of: " + ", ".join(CHECKS))
    for flag in ("--w", "--m", "--n", "--D"):
        p.add_argument(flag, type=int)
    p.add_argument("--sigma")
    p.add_argument("--rep")
    p.add_argument("--param", action="append", default=[], help="extra parameter key=value (JSON value)")

    p = add("lfunc", help="omega-values, L-values and Taelman matrices")
    p.add_argument("what", choices=["omega", "L", "euler", "taelman", "det"])
    p.add_argument("--sigma", default="chi", help="family: chi, or a companion polynomial such as x^2-t")
    p.add_argument("--n", type=int, default=1)

    p = add("rep", help="representations of GL_2(A)")
    p.add_argument("what", choices=["hom", "irr", "iso", "bn", "depth"])
    p.add_argument("--rep", default="rho_sigma:chi")
    p.add_argument("--rep2", default=None)
    p.add_argument("--l", type=int, default=1)

    p = add("mf", help="truncated vectorial Eisenstein series")
    p.add_argument("what", choices=["E", "G", "rank", "ulimit"])
    p.add_argument("--w", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--sigma", default="chi")
    p.add_argument("--point", type=int, default=1, help="z = theta^(k/2), k odd")

    p = add("amalgam", help="Nagao normal form, Phi^infinity, essential dimension")
    p.add_argument("what", choices=["decompose", "phi", "essdim"])
    p.add_argument("--matrix", default="1;theta;0;1", help="entries a;b;c;d as polynomials in theta")
    p.add_argument("--rep", default="tautological")
    return ap


def _check_params(ns):
    params = {}
    for k in ("w", "m", "n", "D", "sigma", "rep"):
        v = getattr(ns, k, None)
        if v is not None:
            params[k] = v
    if getattr(ns, "q", None) is not None:
        params["q"] = ns.q
    if getattr(ns, "s", None) is not None:
        params["s"] = ns.s
    for item in getattr(ns, "param", []):
        key, eq, val = item.partition("=")
        if not eq:
            raise ConfigError(f"--param needs key=value, got {item!r}")
        try:
            params[key] = json.loads(val)
        except json.JSONDecodeError:
            params[key] = val
    return params


def _emit(cfg: RunConfig, payload, text: str):
    out = dumps(payload) if cfg.format == "json" else text
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _series_matrix_text(M):
    return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in M)


def _cmd_lfunc(cfg, ns):
    from .lfunc import (L_value, SemiCharacter, chi_semicharacter, det_L_check, euler_product, family,
                        omega_value, taelman_S)

    F = cfg.gf()
    if ns.what == "omega":
        om = omega_value(family(F, ns.sigma), cfg.precision)
        M = om.matrix
        return {"omega": M, "prec": om.prec}, _series_matrix_text(M)
    if ns.what in ("L", "euler"):
        sc = SemiCharacter(F, [family(F, ns.sigma)] * cfg.s)
        fn = L_value if ns.what == "L" else euler_product
        M = fn(sc, ns.n, cfg.cutoff)
        return {ns.what: M, "n": ns.n, "D": cfg.cutoff}, _series_matrix_text(M)
    if ns.what == "taelman":
        r = taelman_S(chi_semicharacter(F, cfg.s), min(cfg.cutoff, 6))
        keep = {k: v for k, v in r.items() if k not in ("S", "B")}
        return keep, "\n".join(f"{k}: {jsonable(v)}" for k, v in keep.items())
    r = det_L_check(F, cfg.s, ns.n, cfg.cutoff)
    keep = {"residual_valuation": r["residual_valuation"], "bound": r["bound"]}
    return keep, f"residual {jsonable(keep['residual_valuation'])} (bound {jsonable(keep['bound'])})"


def _cmd_rep(cfg, ns):
    from .checks import parse_rep
    from .gamma_reps import generic_irreducible, intertwiner, rho_bar_irreducible
    from .modular_forms import infer_depth

    F = cfg.gf()
    if ns.what == "bn":
        v = rho_bar_irreducible(cfg.q, ns.l, cfg.seed)
        return {"q'": cfg.q, "l": ns.l, "verdict": v}, f"rho^I_{ns.l} over F_{cfg.q}: {v.status}"
    rep = parse_rep(F, ns.rep)
    if ns.what == "hom":
        r = rep.check_homomorphism(cfg.seed, 50)
        return r, f"{ns.rep}: {'homomorphism' if r['ok'] else 'NOT a homomorphism'} ({r['pairs']} pairs)"
    if ns.what == "irr":
        v = generic_irreducible(rep, cfg.seed, K=cfg.sample_degree)
        return {"rep": ns.rep, "verdict": v}, f"{ns.rep}: {v.status}"
    if ns.what == "depth":
        L = infer_depth(rep, cfg.sample_degree)
        return {"rep": ns.rep, "depth": L}, f"{ns.rep}: normal depth {L}"
    if not ns.rep2:
        raise ConfigError("rep iso needs --rep2")
    r = intertwiner(rep, parse_rep(F, ns.rep2), cfg.seed)
    r = {k: v for k, v in r.items() if k != "M"} | ({"M": r["M"]} if "M" in r else {})
    return r, f"{ns.rep} vs {ns.rep2}: {r['status']}"


def _cmd_mf(cfg, ns):
    from .checks import rank_points
    from .gamma_reps import rho_sigma
    from .lfunc import family
    from .modular_forms import G_equals_LE, OmegaPoint, eisenstein_E, rank_and_independence, ulimit_check

    F = cfg.gf()
    sigma = family(F, ns.sigma)
    pt = OmegaPoint.theta_half(F, ns.point)
    D = min(cfg.cutoff, 3)
    if ns.what == "E":
        r = eisenstein_E(ns.w, ns.m, rho_sigma(sigma), pt, D)
        return r.to_json(), _series_matrix_text(r.value) + f"\n(known to valuation {r.guaranteed_valuation})"
    if ns.what == "G":
        r = G_equals_LE(ns.w, [sigma], pt, D)
        keep = {"residual_valuation": r["residual_valuation"], "bound": r["bound"], "ok": r["ok"]}
        return keep, f"G - L E: residual {jsonable(r['residual_valuation'])} (bound {jsonable(r['bound'])})"
    if ns.what == "rank":
        r = rank_and_independence(ns.w, ns.m, rho_sigma(sigma), rank_points(F), min(D, 2))
        return r, f"rank >= {r['rank_lower_bound']} ({r['status']})"
    r = ulimit_check(ns.w, rho_sigma(sigma), pt, D)
    return r, f"E - kappa (0|I): residual {jsonable(r['residual_valuation'])}, kappa = {r['kappa']}"


def _parse_matrix(F, text):
    from .parse import parse_apoly

    parts = [x.strip() for x in text.replace(",", ";").split(";")]
    if len(parts) != 4:
        raise ConfigError("--matrix needs four entries a;b;c;d")
    a, b, c, d = (parse_apoly(x, F) for x in parts)
    return [[a, b], [c, d]]


def _cmd_amalgam(cfg, ns):
    from .amalgam import essential_dimension_diag, nagao_decompose, phi_infty, sample_entries
    from .checks import parse_rep

    F = cfg.gf()
    if ns.what == "essdim":
        rep = parse_rep(F, ns.rep)
        nv = rep.nvars if rep.coeff == "K" else 1
        lo, hi = essential_dimension_diag(sample_entries(rep, K=2), nv)
        return {"rep": ns.rep, "lower": lo, "upper": hi}, f"{ns.rep}: essential dimension in [{lo}, {hi}]"
    g = _parse_matrix(F, ns.matrix)
    if ns.what == "decompose":
        w = nagao_decompose(g)
        lines = [f"{p}: {f}" for p, f in zip(w.pieces, w.factors)]
        return {"factors": w.to_json()}, "\n".join(lines)
    M = phi_infty(g)
    # Phi^infinity lands in k[x_1, x_2, ...]; the polynomial type prints its variables as t_i
    return {"phi": M, "variables": "x_i stored as t_i"}, _series_matrix_text(M).replace("t", "x")


def main(argv=None) -> int:
    ap = make_parser()
    ns = ap.parse_args(argv)
    try:
        cfg = build_config(ns)
        if ns.command == "verify":
            reports = verify_all(cfg)
            doc = report_document(cfg, reports, ns.runtime)
            _emit(cfg, doc, "\n".join(r.text() for r in reports))
            return 1 if any(r.failed for r in reports) else 0
        if ns.command == "run":
            r = run_single(ns.check, _check_params(ns), cfg)
            _emit(cfg, report_document(cfg, [r], ns.runtime), r.text())
            return 1 if r.failed else 0
        handler = {"lfunc": _cmd_lfunc, "rep": _cmd_rep, "mf": _cmd_mf, "amalgam": _cmd_amalgam}[ns.command]
        payload, text = handler(cfg, ns)
        _emit(cfg, payload, text)
        return 0
    except UnknownCheck as exc:
        print(f"error: unknown check {exc.args[0]!r}; known: {', '.join(CHECKS)}", file=sys.stderr)
        return 2
    except (ConfigError, CarlitzRepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
