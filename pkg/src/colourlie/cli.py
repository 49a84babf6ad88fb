"""Command-line front end. Exit status: 0 all pass, 1 any FAIL, 2 input error."""

from __future__ import annotations

import argparse
import sys
import time

from .altmaps import check_alternating, default_threads
from .catalog import PRESETS, preset
from .colour_lie import cla_validate, quad_validate
from .covariants import IDENTITY_ARITY, covariant_checks, mathews_verify
from .curvature import is_special
from .document import (DocumentError, altmap_json, document_from_rep, document_json, dumps,
                       load_document)
from .extensions import extend, extend_sl2, heisenberg_grading, phi_validate
from .graded_linalg import form_validate
from .representations import moment_identity, rep_validate
from .scalars import FieldError
from .verdict import Verdict


class Report:
    def __init__(self, out):
        self.out = out
        self.failed = False

    def record(self, verdict: Verdict, ms: float, prefix="CHECK"):
        self.failed |= not verdict.ok
        body = verdict.describe()
        name = verdict.name.replace(" ", "_")
        rest = body[len(verdict.name):]
        if prefix == "MATHEWS":
            line = f"{verdict.name}{rest} {ms:.0f}ms"
        else:
            line = f"{prefix} {name}{rest} {ms:.0f}ms"
        print(line, file=self.out)

    def timed(self, name, fn, prefix="CHECK"):
        t0 = time.perf_counter()
        v = fn()
        v.name = name
        self.record(v, (time.perf_counter() - t0) * 1000, prefix)
        return v

    @property
    def status(self) -> int:
        return 1 if self.failed else 0


def cmd_check(args, rep: Report):
    doc = load_document(args.file)
    rep.timed("grading", doc.cf.validate)
    for n, (_, b) in doc.forms.items():
        rep.timed(f"form:{n}", lambda b=b: form_validate(b))
    for n, g in doc.algebras.items():
        rep.timed(f"algebra:{n}", lambda g=g: cla_validate(g))
        if g.form is not None:
            rep.timed(f"quadratic:{n}", lambda g=g: quad_validate(g))
    for n, (_, _, _, r) in doc.reps.items():
        rep.timed(f"rep:{n}", lambda r=r: rep_validate(r, min_dim=1))
    for n, (rn, phi, ev) in doc.phis.items():
        r = doc.rep(rn)
        rep.timed(f"phi_alternating:{n}", lambda r=r, ev=ev: check_alternating(r.space, 2, ev))
        rep.timed(f"phi:{n}", lambda r=r, phi=phi: phi_validate(r, phi))


def _rep(args):
    return load_document(args.file).rep(args.rep)


def cmd_moment(args, rep: Report):
    r = _rep(args)
    mu = r.moment
    if args.verify:
        rep.timed("moment_identity", lambda: moment_identity(r, mu))
    print(dumps(altmap_json(mu)), end="", file=rep.out)


def cmd_special(args, rep: Report):
    r = _rep(args)
    rep.timed("special", lambda: is_special(r))


def cmd_extend(args, rep: Report):
    doc = load_document(args.file)
    r = doc.rep(args.rep)
    phi = None
    if args.phi:
        rn, phi, ev = doc.phi(args.phi)
        if rn != args.rep:
            raise DocumentError(f"phi {args.phi!r} belongs to {rn!r}")
        v = phi_validate(r, phi)
        if not v.ok:
            v.name = "phi"
            rep.record(v, 0)
            return
    t0 = time.perf_counter()
    _, tv = extend(r, phi, check_phi=False)
    ms = (time.perf_counter() - t0) * 1000
    for v in tv.records():
        rep.record(v, ms)


def cmd_extend_sl2(args, rep: Report):
    r = _rep(args)
    t0 = time.perf_counter()
    alg, v = extend_sl2(r, [int(x) for x in args.gamma.split(",")])
    rep.record(v, (time.perf_counter() - t0) * 1000)
    if v.ok and args.heisenberg:
        H = alg.space.basis_vector(alg.sl2_triple[1])
        rep.timed("heisenberg", lambda: heisenberg_grading(alg, H)[0])


def cmd_covariants(args, rep: Report):
    r = _rep(args)
    t0 = time.perf_counter()
    verdicts, cs = covariant_checks(r)
    ms = (time.perf_counter() - t0) * 1000
    for v in verdicts:
        rep.record(v, ms)
    if args.emit:
        print(dumps({"psi": altmap_json(cs.psi), "Q": altmap_json(cs.Q)}), end="", file=rep.out)


def cmd_mathews(args, rep: Report):
    r = _rep(args)
    ids = list(IDENTITY_ARITY) if args.identity == "all" else [args.identity]
    for ident in ids:
        sample = args.sample if args.sample and IDENTITY_ARITY[ident] >= 9 else None
        if args.sample and args.sample_all:
            sample = args.sample
        t0 = time.perf_counter()
        v = mathews_verify(r, ident, sample=sample, seed=args.seed, budget=args.budget, threads=args.threads)
        rep.record(v, (time.perf_counter() - t0) * 1000, prefix="MATHEWS")


def cmd_catalog(args, rep: Report):
    if args.list or not args.family:
        for fam, names in PRESETS.items():
            print(f"{fam}: {' '.join(names)}", file=rep.out)
        return
    entry = preset(args.family, args.preset or PRESETS.get(args.family, [""])[0])
    print(dumps(document_json(document_from_rep(entry.rep))), end="", file=rep.out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes for tuple comparisons (0 = one per core)")
    common.add_argument("--sample", type=int, default=None,
                        help="check N random canonical tuples for identities of arity >= 9")
    common.add_argument("--seed", type=int, default=0)
    p = argparse.ArgumentParser(prog="colourlie", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    s = add_parser("check", help="validate every object in a document")
    s.add_argument("file")
    s.set_defaults(fn=cmd_check)

    for name, fn, helptext in (("moment", cmd_moment, "emit the moment map"),
                               ("special", cmd_special, "decide specialness"),
                               ("covariants", cmd_covariants, "check the psi and Q formulas")):
        s = add_parser(name, help=helptext)
        s.add_argument("file")
        s.add_argument("rep")
        s.set_defaults(fn=fn)
        if name == "moment":
            s.add_argument("--verify", action="store_true", help="also check the defining identity")
        if name == "covariants":
            s.add_argument("--emit", action="store_true", help="print psi and Q as JSON")

    s = add_parser("extend", help="assemble g + V and run the three equivalent checks")
    s.add_argument("file")
    s.add_argument("rep")
    s.add_argument("--phi", default=None)
    s.set_defaults(fn=cmd_extend)

    s = add_parser("extend-sl2", help="build g + sl2 + V (x) k^2 and check Jacobi")
    s.add_argument("file")
    s.add_argument("rep")
    s.add_argument("--gamma", default="1", help="degree of p as comma-separated integers")
    s.add_argument("--heisenberg", action="store_true", help="also report the ad(H) eigenspaces")
    s.set_defaults(fn=cmd_extend_sl2)

    s = add_parser("mathews", help="verify a Mathews identity")
    s.add_argument("file")
    s.add_argument("rep")
    s.add_argument("identity", choices=["a", "b", "c", "d", "all"])
    s.add_argument("--budget", type=int, default=500, help="largest tuple count allowed in full mode")
    s.add_argument("--sample-all", action="store_true", help="apply --sample to every identity")
    s.set_defaults(fn=cmd_mathews)

    s = add_parser("catalog", help="emit a built-in example as a document")
    s.add_argument("family", nargs="?", choices=sorted(PRESETS))
    s.add_argument("--preset", default=None)
    s.add_argument("--list", action="store_true")
    s.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.threads == 0:
        args.threads = default_threads()
    rep = Report(out)
    try:
        args.fn(args, rep)
    except (DocumentError, FieldError, KeyError, OSError, ValueError) as e:
        print(f"ERROR {e}", file=sys.stderr)
        return 2
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
