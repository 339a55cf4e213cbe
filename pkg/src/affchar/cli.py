"""Command-line verification harness.

Each named check runs one character-level identity and reports PASS, FAIL or
SKIPPED (resource cap hit), with the first discrepancy in canonical order for
failures.  Reports are emitted as aligned text or as byte-stable JSON; the
elapsed_ms field is excluded from the determinism contract.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .affine import (AffineCoroot, AffineRoot, affine_coroot, curve_data,
                     fixed_point_support)
from .charring import first_discrepancy
from .demazure import (demazure_character, finite_support,
                       fixed_support_image, restriction_domination_check,
                       smooth_locus_profile, tensor_product_check)
from .fock import LatticeCoset, lattice_character
from .kacweyl import DEFAULT_ELEMENT_CAP, AffineDominantWeight, weyl_kac_character
from .rootsys import DEFAULT_ORBIT_CAP, OrbitCapExceeded, build_root_system

ENV_PREFIX = "AFFCHAR_"

CHECK_IDENTITY = {
    "fks": "Frenkel-Kac-Segal: irreducible level-one character vs lattice coset character",
    "tensor": "tensor factorization of Demazure characters under addition of coweights",
    "borel-weil": "stabilization of Demazure characters to the irreducible character",
    "smooth-locus": "multiplicity-one exactly on the extreme fixed points",
    "fixed-support": "finite support of the Demazure character vs torus-fixed locus",
    "minuscule": "minuscule Schubert strata carry a single finite irreducible layer",
    "coroots": "affine coroot formula and its Weyl equivariance",
    "curves": "degrees and endpoints of invariant rational curves",
    "domination": "coefficientwise domination under dominance order",
}


@dataclass
class VerificationReport:
    check: str
    params: dict
    status: str
    first_discrepancy: dict | None = None
    elapsed_ms: int = 0
    truncation_flags: list = field(default_factory=list)
    skip_reason: str | None = None

    def to_json(self) -> str:
        obj = {
            "check": self.check,
            "identity": CHECK_IDENTITY.get(self.check, ""),
            "params": self.params,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
            "engine_version": __version__,
            "truncation_flags": self.truncation_flags,
        }
        if self.first_discrepancy is not None:
            obj["first_discrepancy"] = self.first_discrepancy
        if self.skip_reason is not None:
            obj["skip_reason"] = self.skip_reason
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        cols = [
            ("check", self.check),
            ("status", self.status),
            ("params", _params_str(self.params)),
        ]
        if self.first_discrepancy is not None:
            cols.append(("first_discrepancy", json.dumps(self.first_discrepancy,
                                                         sort_keys=True)))
        if self.skip_reason is not None:
            cols.append(("reason", self.skip_reason))
        cols.append(("elapsed_ms", str(self.elapsed_ms)))
        return "  ".join("%s=%s" % kv for kv in cols) + "\n"


def _params_str(params: dict) -> str:
    return ",".join("%s:%s" % (k, params[k]) for k in sorted(params))


def _coords_str(coords) -> list:
    return [str(c) for c in coords]


def _discrepancy(rs, fd) -> dict:
    wt, q, lhs, rhs = fd
    return {
        "weight": _coords_str(rs.weight_fundamental_coords(wt)),
        "q": "%d/%d" % (q.numerator, q.denominator),
        "lhs": lhs,
        "rhs": rhs,
    }


def _finite_discrepancy(rs, lhs: dict, rhs: dict) -> dict | None:
    keys = sorted(set(lhs) | set(rhs), key=lambda w: w.coords)
    for w in keys:
        a, b = lhs.get(w, 0), rhs.get(w, 0)
        if a != b:
            return {"weight": _coords_str(rs.weight_fundamental_coords(w)),
                    "q": None, "lhs": a, "rhs": b}
    return None


# -- individual checks ---------------------------------------------------------


def _check_fks(rs, params):
    depth = params["depth"]
    coset = rs.coweight_from_fundamental(params["coset"])
    reps = rs.minuscule_reps()
    key = rs.coset_key(coset)
    if key not in reps:
        raise ValueError("no minuscule representative for the given coset")
    om = reps[key]
    lhs = weyl_kac_character(rs, AffineDominantWeight(params["level"], rs.iota(om)),
                             depth, cap_elements=params["cap_elements"])
    rhs = lattice_character(LatticeCoset(rs, om), depth, cap=params["cap_orbit"])
    if params.get("dump"):
        base = str(params["dump"])
        for side, chi in (("lhs", lhs), ("rhs", rhs)):
            with open("%s.%s.txt" % (base, side), "w", encoding="utf-8") as fh:
                fh.write(chi.to_text())
    fd = first_discrepancy(lhs, rhs)
    flags = ["lhs:truncated", "rhs:truncated"]
    if fd is None:
        return "PASS", None, flags
    return "FAIL", _discrepancy(rs, fd), flags


def _check_tensor(rs, params):
    lam = rs.coweight_from_fundamental(params["lam"])
    mu = rs.coweight_from_fundamental(params["mu"])
    res = tensor_product_check(rs, lam, mu, params["level"])
    if res.holds:
        return "PASS", None, []
    return "FAIL", _finite_discrepancy(rs, res.lhs, res.rhs), []


def _check_borel_weil(rs, params):
    depth = params["depth"]
    k = params["level"]
    target = weyl_kac_character(rs, AffineDominantWeight(k, rs.iota(
        rs.coweight_from_fundamental([0] * rs.rank))), depth,
        cap_elements=params["cap_elements"])
    theta = rs.highest_root_coroot
    prev = None
    for n in range(1, int(depth) + 4):
        dc = demazure_character(rs, n * theta, k)
        cur = dc.char.truncate(depth)
        if prev is not None:
            for wt, q, c in prev.terms():
                if cur.coeff(wt, q) < c:
                    return "FAIL", _discrepancy(rs, (wt, q, cur.coeff(wt, q), c)), []
        prev = cur
        if n >= int(depth) + 1:
            fd = first_discrepancy(cur, target)
            if fd is not None:
                return "FAIL", _discrepancy(rs, fd), []
    return "PASS", None, ["target:truncated"]


def _check_smooth_locus(rs, params):
    lam = rs.coweight_from_fundamental(params["lam"])
    profile = smooth_locus_profile(rs, lam, params["level"])
    for mu, mult in sorted(profile.items(), key=lambda kv: kv[0].coords):
        expected_one = (mu == lam)
        if expected_one and mult != 1:
            return "FAIL", {"weight": _coords_str(
                rs.coweight_fundamental_coords(mu)), "q": None,
                "lhs": mult, "rhs": 1}, []
        if not expected_one and mult <= 1:
            return "FAIL", {"weight": _coords_str(
                rs.coweight_fundamental_coords(mu)), "q": None,
                "lhs": mult, "rhs": 2}, []
    return "PASS", None, []


def _check_fixed_support(rs, params):
    lam = rs.coweight_from_fundamental(params["lam"])
    supp = finite_support(demazure_character(rs, lam, params["level"]))
    img = fixed_support_image(rs, lam)
    if supp == img:
        return "PASS", None, []
    diff = sorted(supp ^ img, key=lambda w: w.coords)
    w = diff[0]
    return "FAIL", {"weight": _coords_str(rs.weight_fundamental_coords(w)),
                    "q": None, "lhs": int(w in supp), "rhs": int(w in img)}, []


def _check_minuscule(rs, params):
    for key, om in sorted(rs.minuscule_reps().items()):
        if om.is_zero():
            continue
        dc = demazure_character(rs, om, 1)
        single_layer = dc.char.max_q() == 0
        expected = rs.finite_weyl_character(rs.iota(om))
        actual = dc.char.layer(Fraction(0))
        orbit = rs.weyl_orbit(om, cap=params["cap_orbit"])
        if not single_layer or actual != expected or dc.char.total() != len(orbit):
            fd = _finite_discrepancy(rs, actual, expected)
            if fd is None:
                fd = {"weight": _coords_str(rs.coweight_fundamental_coords(om)),
                      "q": None, "lhs": dc.char.total(), "rhs": len(orbit)}
            return "FAIL", fd, []
    return "PASS", None, []


def _reflect_affine_root_r0(rs, psi: AffineRoot) -> AffineRoot:
    m = rs.pair(rs.highest_root_coroot, psi.finite)
    return AffineRoot(psi.n + int(m), psi.finite - m * rs.highest_root)


def _reflect_affine_coroot_r0(rs, ac: AffineCoroot) -> AffineCoroot:
    m = rs.pair(ac.finite, rs.highest_root)
    return AffineCoroot(ac.k_coeff + m, ac.finite - m * rs.highest_root_coroot)


def _check_coroots(rs, params):
    a0 = affine_coroot(rs, AffineRoot(1, -rs.highest_root))
    if not (a0.k_coeff == 1 and a0.finite == -rs.highest_root_coroot):
        return "FAIL", {"weight": _coords_str(a0.finite.coords), "q": None,
                        "lhs": str(a0.k_coeff), "rhs": "1"}, []
    roots = list(rs.positive_roots) + [-a for a in rs.positive_roots]
    for alpha in roots:
        for n in (0, 1, 2):
            psi = AffineRoot(n, alpha)
            ac = affine_coroot(rs, psi)
            want = 2 * Fraction(n) / rs.root_norm(alpha)
            if ac.k_coeff != want or ac.finite != rs.coroot_of(alpha):
                return "FAIL", {"weight": _coords_str(alpha.coords), "q": None,
                                "lhs": str(ac.k_coeff), "rhs": str(want)}, []
            for i in range(1, rs.rank + 1):
                lhs = affine_coroot(rs, AffineRoot(n, rs.reflect_weight(i, alpha)))
                rhs = AffineCoroot(ac.k_coeff, rs.reflect_coweight(i, ac.finite))
                if lhs != rhs:
                    return "FAIL", {"weight": _coords_str(alpha.coords),
                                    "q": None, "lhs": "node %d" % i,
                                    "rhs": "equivariance"}, []
            refl = _reflect_affine_root_r0(rs, psi)
            if not refl.finite.is_zero():
                if affine_coroot(rs, refl) != _reflect_affine_coroot_r0(rs, ac):
                    return "FAIL", {"weight": _coords_str(alpha.coords),
                                    "q": None, "lhs": "node 0",
                                    "rhs": "equivariance"}, []
    return "PASS", None, []


def _check_curves(rs, params):
    lam = rs.coweight_from_fundamental(params["lam"])
    dom = rs.dominant_part(lam)
    support = fixed_point_support(rs, dom, cap=params["cap_orbit"])
    for alpha in rs.positive_roots:
        top = rs.pair(lam, alpha)
        n = 0
        while n < top:
            cd = curve_data(rs, lam, AffineRoot(n, alpha))
            want = 2 * (top - n) / rs.root_norm(alpha)
            ok = cd.degree == want
            if rs.root_norm(alpha) == 2 and top - n == 1:
                ok = ok and cd.degree == 1
            a, b = cd.endpoints
            ok = ok and a in support and b in support
            diff = a - b
            ok = ok and diff == (top - n) * rs.coroot_of(alpha)
            if not ok:
                return "FAIL", {"weight": _coords_str(alpha.coords),
                                "q": str(n), "lhs": str(cd.degree),
                                "rhs": str(want)}, []
            n += 1
    return "PASS", None, []


def _check_domination(rs, params):
    lam = rs.coweight_from_fundamental(params["lam"])
    mu = rs.coweight_from_fundamental(params["mu"])
    if restriction_domination_check(rs, lam, mu, params["level"]):
        return "PASS", None, []
    return "FAIL", {"weight": None, "q": None, "lhs": 0, "rhs": 1}, []


_CHECKS = {
    "fks": _check_fks,
    "tensor": _check_tensor,
    "borel-weil": _check_borel_weil,
    "smooth-locus": _check_smooth_locus,
    "fixed-support": _check_fixed_support,
    "minuscule": _check_minuscule,
    "coroots": _check_coroots,
    "curves": _check_curves,
    "domination": _check_domination,
}


def run_verification(check_name: str, params: dict) -> VerificationReport:
    """Run one named check; deterministic report, PASS/FAIL/SKIPPED status."""
    if check_name not in _CHECKS:
        raise ValueError("unknown check %r; available: %s"
                         % (check_name, ", ".join(sorted(_CHECKS))))
    params = dict(params)
    params.setdefault("level", 1)
    params.setdefault("depth", 6)
    params.setdefault("cap_orbit", _env_cap("CAP_ORBIT", DEFAULT_ORBIT_CAP))
    params.setdefault("cap_elements", _env_cap("CAP_ELEMENTS", DEFAULT_ELEMENT_CAP))
    rs = build_root_system(params["type"], params["rank"])
    t0 = time.monotonic()
    try:
        status, fd, flags = _CHECKS[check_name](rs, params)
        reason = None
    except OrbitCapExceeded as exc:
        status, fd, flags, reason = "SKIPPED", None, [], str(exc)
    elapsed = int((time.monotonic() - t0) * 1000)
    return VerificationReport(check_name, _public_params(params), status, fd,
                              elapsed, flags, reason)


def _plain(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


def _public_params(params: dict) -> dict:
    out = {}
    for key in ("type", "rank", "lam", "mu", "coset", "level", "depth"):
        if key in params and params[key] is not None:
            v = params[key]
            if isinstance(v, (list, tuple)):
                v = [_plain(x) for x in v]
            else:
                v = _plain(v)
            out[key] = v
    return out


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    return int(raw)


def emit_report(report: VerificationReport, fmt: str = "text", path=None) -> str:
    """Render a report; write-through to ``path`` when given (atomically)."""
    if fmt == "json":
        payload = report.to_json()
    elif fmt == "text":
        payload = report.to_text()
    else:
        raise ValueError("format must be 'text' or 'json'")
    if path is not None:
        tmp = str(path) + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    return payload


# -- the built-in identity battery ---------------------------------------------


def identity_check_suite(depth: int = 8, heavy: bool = False):
    """(check, params, expected status) triples covering the identity battery.

    The non-simply-laced Frenkel-Kac-Segal comparisons are negative controls:
    the expected status is FAIL with lhs > rhs.
    """
    suite = []
    for t, l in [("A", 1), ("A", 2), ("A", 3), ("D", 4)]:
        rs = build_root_system(t, l)
        for key, om in sorted(rs.minuscule_reps().items()):
            coset = [int(c) for c in rs.coweight_fundamental_coords(om)]
            suite.append(("fks", {"type": t, "rank": l, "coset": coset,
                                  "depth": depth}, "PASS"))
    for t, l in [("C", 2), ("G", 2)]:
        suite.append(("fks", {"type": t, "rank": l, "coset": [0] * l,
                              "depth": depth}, "FAIL"))
    theta = {"A1": [2], "A2": [1, 1], "D4": [0, 1, 0, 0], "C2": [1, 0]}
    suite += [
        ("tensor", {"type": "A", "rank": 1, "lam": theta["A1"], "mu": theta["A1"]}, "PASS"),
        ("tensor", {"type": "A", "rank": 2, "lam": theta["A2"], "mu": theta["A2"]}, "PASS"),
        ("tensor", {"type": "D", "rank": 4, "lam": theta["D4"], "mu": theta["D4"]}, "PASS"),
        ("tensor", {"type": "C", "rank": 2, "lam": theta["C2"], "mu": theta["C2"]}, "PASS"),
        ("tensor", {"type": "A", "rank": 1, "lam": theta["A1"], "mu": theta["A1"],
                    "level": 2}, "PASS"),
        ("borel-weil", {"type": "A", "rank": 1, "depth": 3}, "PASS"),
        ("borel-weil", {"type": "A", "rank": 2, "depth": 3}, "PASS"),
    ]
    for t, l in [("A", 2), ("A", 3), ("D", 4)]:
        for lam in _small_dominant(l, 3):
            suite.append(("fixed-support", {"type": t, "rank": l, "lam": lam}, "PASS"))
            suite.append(("smooth-locus", {"type": t, "rank": l, "lam": lam}, "PASS"))
    suite += [
        ("minuscule", {"type": "A", "rank": 2}, "PASS"),
        ("minuscule", {"type": "A", "rank": 3}, "PASS"),
        ("minuscule", {"type": "D", "rank": 4}, "PASS"),
        ("coroots", {"type": "A", "rank": 2}, "PASS"),
        ("coroots", {"type": "C", "rank": 2}, "PASS"),
        ("coroots", {"type": "D", "rank": 4}, "PASS"),
        ("curves", {"type": "A", "rank": 1, "lam": [2]}, "PASS"),
        ("curves", {"type": "A", "rank": 2, "lam": [1, 1]}, "PASS"),
        ("curves", {"type": "C", "rank": 2, "lam": [1, 0]}, "PASS"),
        ("domination", {"type": "A", "rank": 1, "lam": [2], "mu": [0]}, "PASS"),
        ("domination", {"type": "A", "rank": 2, "lam": [2, 2], "mu": [1, 1]}, "PASS"),
    ]
    if heavy:
        suite.append(("minuscule", {"type": "E", "rank": 6}, "PASS"))
        suite.append(("smooth-locus", {"type": "E", "rank": 6,
                                       "lam": [0, 0, 1, 0, 0, 0]}, "PASS"))
    return suite


def _small_dominant(rank: int, total: int):
    """Dominant fundamental-coordinate vectors with coefficient sum <= total,
    the zero vector excluded."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == rank:
            if any(prefix):
                out.append(list(prefix))
            return
        for c in range(remaining + 1):
            rec(prefix + [c], remaining - c)

    rec([], total)
    out.sort()
    return out


def run_all_checks(fmt: str = "text", out=None, depth: int = 8,
                         heavy: bool = False, stream=None):
    stream = stream or sys.stdout
    results = []
    all_ok = True
    for check, params, expect in identity_check_suite(depth=depth, heavy=heavy):
        rep = run_verification(check, params)
        ok = rep.status == expect
        if rep.status == "SKIPPED":
            ok = True
        all_ok = all_ok and ok
        marker = "ok" if ok else "UNEXPECTED"
        if expect == "FAIL" and rep.status == "FAIL":
            marker += " (negative control)"
        stream.write(emit_report(rep, "text").rstrip("\n")
                     + "  expect=%s [%s]\n" % (expect, marker))
        results.append((rep, expect, ok))
    if out is not None:
        payload = "".join(r.to_json() for r, _, _ in results)
        tmp = str(out) + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, out)
    stream.write("identity-battery: %s (%d checks)\n"
                 % ("PASS" if all_ok else "FAIL", len(results)))
    return 0 if all_ok else 1


# -- argument parsing ------------------------------------------------------------


def _coords(text):
    return [Fraction(x) for x in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="affchar",
        description="verify character identities for affine Kac-Moody modules")
    p.add_argument("check", nargs="?", choices=sorted(_CHECKS),
                   help="named check to run")
    p.add_argument("--all-checks", action="store_true",
                   help="run the whole identity battery with expected outcomes")
    p.add_argument("--heavy", action="store_true",
                   help="include the larger E-type spot checks in the battery")
    p.add_argument("--type", dest="type_label", default=None,
                   help="simple type A..G")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--lambda", dest="lam", type=_coords, default=None,
                   help="comma-separated fundamental-coweight coefficients")
    p.add_argument("--mu", type=_coords, default=None)
    p.add_argument("--coset", type=_coords, default=None,
                   help="fundamental-coweight coefficients of a coset representative")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--depth", type=Fraction, default=Fraction(6))
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--cap-orbit", type=int, default=None)
    p.add_argument("--cap-elements", type=int, default=None)
    p.add_argument("--dump", default=None,
                   help="basename for golden character files (fks check)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.all_checks:
        return run_all_checks(fmt=args.fmt, out=args.out,
                                    heavy=args.heavy)
    if not args.check:
        build_parser().print_usage()
        return 2
    if args.type_label is None or args.rank is None:
        print("error: --type and --rank are required for single checks",
              file=sys.stderr)
        return 2
    params = {"type": args.type_label.upper(), "rank": args.rank,
              "level": args.level, "depth": args.depth}
    if args.lam is not None:
        params["lam"] = args.lam
    if args.mu is not None:
        params["mu"] = args.mu
    if args.coset is not None:
        params["coset"] = args.coset
    if args.cap_orbit is not None:
        params["cap_orbit"] = args.cap_orbit
    if args.cap_elements is not None:
        params["cap_elements"] = args.cap_elements
    if args.dump is not None:
        params["dump"] = args.dump
    try:
        report = run_verification(args.check, params)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(report, args.fmt, args.out))
    return 0 if report.status == "PASS" else 1


if __name__ == "__main__":
    raise SystemExit(main())
