"""Command-line interface.

Subcommands: seq (Fibonacci-divisor tables), eval (special functions at a
point), field (sampled flow fields to CSV/JSON), simulate (vortex dynamics to
trajectory CSV), verify (invariant suites).

Exit codes: 0 success, 1 usage or parse error, 2 runtime physics event
(vortex collision or boundary escape), 3 verification failure.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import re
import sys

import numpy as np

from goldcalc import dynamics, hydro, verify
from goldcalc.functions import SeriesTruncation, TruncationError, E_phi, e_phi, \
    e_phi_product, golden_exp, golden_trig, ln_phi, phi_number
from goldcalc.ring import fib_divisor

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PHYSICS = 2
EXIT_VERIFY = 3

_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)"
    r"(?:(?P<im>[+-]\d*(?:\.\d*)?(?:[eE][+-]?\d+)?)i)?$")


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' (no spaces), or a bare real."""
    m = _COMPLEX_RE.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse complex value {text!r}")
    re_part = float(m.group("re"))
    im_text = m.group("im")
    if im_text is None:
        return complex(re_part, 0.0)
    if im_text in ("+", "-"):
        im_text += "1"
    return complex(re_part, float(im_text))


def parse_grid(text: str) -> tuple[int, int]:
    m = re.match(r"^(\d+)x(\d+)$", text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"grid must look like 50x50, got {text!r}")
    return int(m.group(1)), int(m.group(2))


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here says 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="goldcalc",
                description="Golden-ratio calculus and golden-annulus vortex flows")
    sub = p.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="print Fibonacci-divisor sequences")
    seq.add_argument("--k", type=int, required=True, help="hierarchy level (nonzero)")
    seq.add_argument("--n-max", type=int, required=True, help="largest index to print")

    ev = sub.add_parser("eval", help="evaluate a special function at a point")
    ev.add_argument("--fn", required=True,
                    choices=["golden-exp", "golden-cos", "golden-sin", "e-phi",
                             "E-phi", "e-phi-product", "ln-phi", "phi-number",
                             "wm", "wm-modulation", "pure-flow"])
    ev.add_argument("--x", type=parse_complex, default=None,
                    help="argument, as a+bi or a bare real")
    ev.add_argument("--k", type=int, default=1)
    ev.add_argument("--n", type=int, default=None, help="index for phi-number")
    ev.add_argument("--variant", choices=["e", "E"], default="e")
    ev.add_argument("--form", choices=["series", "pole_sum"], default="pole_sum")
    ev.add_argument("--d", type=float, default=0.5, help="fractal parameter in (0,1)")
    ev.add_argument("--trunc", type=int, default=60)
    ev.add_argument("--max-terms", type=int, default=200)
    ev.add_argument("--tail-tol", type=float, default=1e-15)

    fl = sub.add_parser("field", help="sample a vortex flow field onto a grid file")
    fl.add_argument("--z0", type=parse_complex, required=True, help="vortex position a+bi")
    fl.add_argument("--gamma", type=float, required=True, help="circulation")
    fl.add_argument("--k", type=int, default=1, help="annulus level (positive)")
    fl.add_argument("--trunc", type=int, default=80, help="image-ladder truncation")
    fl.add_argument("--grid", type=parse_grid, required=True, help="resolution WxH")
    fl.add_argument("--out", required=True, help="output path (.csv or .json)")
    fl.add_argument("--exclusion", type=float, default=1e-6,
                    help="drop grid points within this distance of an image")

    sim = sub.add_parser("simulate", help="integrate vortex motion")
    sim.add_argument("--init", required=True,
                     help="JSON file: array of {x, y, gamma} records")
    sim.add_argument("--dt", type=float, required=True)
    sim.add_argument("--steps", type=int, required=True)
    sim.add_argument("--out", required=True, help="trajectory CSV path")
    sim.add_argument("--trunc", type=int, default=100)
    sim.add_argument("--record-every", type=int, default=1,
                     help="write every r-th step to the trajectory file")

    ver = sub.add_parser("verify", help="run invariant suites")
    ver.add_argument("--suite", default="all",
                     choices=list(verify.SUITE_NAMES) + ["all"])
    ver.add_argument("--tol", type=float, default=1.0,
                     help="scale factor applied to every stated tolerance")
    ver.add_argument("--seed", type=int, default=12345,
                     help="seed for randomized checks")
    return p


def _fmt_complex(z: complex) -> str:
    return f"{z.real!r}{z.imag:+}i"


def run_seq(args) -> int:
    if args.k == 0:
        print("goldcalc seq: error: --k must be nonzero", file=sys.stderr)
        return EXIT_USAGE
    if args.n_max < 1:
        print("goldcalc seq: error: --n-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    for n in range(1, args.n_max + 1):
        print(fib_divisor(n, args.k))
    return EXIT_OK


def run_eval(args) -> int:
    t = SeriesTruncation(args.max_terms, args.tail_tol)
    try:
        if args.fn == "phi-number":
            if args.n is None or args.n < 1:
                print("goldcalc eval: error: phi-number needs --n >= 1", file=sys.stderr)
                return EXIT_USAGE
            val = phi_number(args.n, args.k)
            print(f"{val}  (= {val.to_real()!r})")
            return EXIT_OK
        if args.x is None:
            print("goldcalc eval: error: this function needs --x", file=sys.stderr)
            return EXIT_USAGE
        x = args.x
        if args.fn == "golden-exp":
            out = golden_exp(x, args.k, args.variant, t)
        elif args.fn == "golden-cos":
            out = golden_trig(x.real, args.k, "cos", t)
        elif args.fn == "golden-sin":
            out = golden_trig(x.real, args.k, "sin", t)
        elif args.fn == "e-phi":
            out = e_phi(x, t)
        elif args.fn == "E-phi":
            out = E_phi(x, t)
        elif args.fn == "e-phi-product":
            out = e_phi_product(x, t)
        elif args.fn == "ln-phi":
            out = ln_phi(x, args.k, args.form, t)
        elif args.fn == "wm":
            out = hydro.wm_fractal(x.real, args.d, args.trunc)
        elif args.fn == "wm-modulation":
            out = hydro.wm_modulation(x.real, args.d, args.trunc)
        elif args.fn == "pure-flow":
            f, psi, v = hydro.pure_golden_flow(x)
            print(f"F   = {_fmt_complex(f)}")
            print(f"psi = {psi!r}")
            print(f"V   = {_fmt_complex(v)}")
            return EXIT_OK
        else:  # pragma: no cover
            raise AssertionError(args.fn)
    except (ValueError, TruncationError) as exc:
        print(f"goldcalc eval: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(out, complex):
        print(_fmt_complex(out))
    else:
        print(repr(out))
    return EXIT_OK


def _grid_workers() -> int:
    raw = os.environ.get("GOLDCALC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_field(args) -> int:
    try:
        annulus = hydro.AnnulusSpec(args.k, args.trunc)
        grid = hydro.field_grid(annulus, [(args.z0, args.gamma)], args.grid,
                                exclusion=args.exclusion,
                                workers=_grid_workers())
    except ValueError as exc:
        print(f"goldcalc field: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.out.endswith(".json"):
            grid.to_json(args.out)
        else:
            grid.to_csv(args.out)
    except OSError as exc:
        print(f"goldcalc field: error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    psis = [r[2] for r in grid.rows]
    lo = min(psis) if psis else 0.0
    hi = max(psis) if psis else 0.0
    print(f"wrote {len(grid.rows)} samples to {args.out}  "
          f"psi in [{lo:.6g}, {hi:.6g}]")
    # boundary diagnostic: psi should be constant on each wall
    if args.gamma != 0:
        sys_ = hydro.ImageSystem(args.z0, args.gamma, annulus)
        for name, radius in (("inner", 1.0), ("outer", annulus.outer_radius)):
            vals = [hydro.stream_function(sys_, radius * cmath.exp(1j * th))
                    for th in np.linspace(0, 2 * math.pi, 64, endpoint=False)]
            print(f"boundary psi std ({name}): {float(np.std(vals)):.3e}")
    return EXIT_OK


def run_simulate(args) -> int:
    try:
        state = dynamics.load_initial_conditions(args.init)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"goldcalc simulate: error: cannot load {args.init}: {exc}",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = dynamics.IntegratorConfig(args.dt, args.steps,
                                        image_truncation=args.trunc)
    except ValueError as exc:
        print(f"goldcalc simulate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        traj = dynamics.integrate(state, cfg)
    except (dynamics.VortexEscapeError, dynamics.VortexCollisionError) as exc:
        print(f"goldcalc simulate: aborted: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except ValueError as exc:
        print(f"goldcalc simulate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    recorded = dynamics.Trajectory(traj.states[:: max(1, args.record_every)])
    if recorded.states[-1] is not traj.states[-1]:
        recorded.states.append(traj.states[-1])
    recorded.to_csv(args.out)
    total_t = traj.states[-1].time - traj.states[0].time
    print(f"integrated {state.n} vortices for {args.steps} steps "
          f"(t = {total_t!r}); wrote {args.out}")
    # measured mean rotation rate per vortex (angle unwrapped along the path)
    for i in range(state.n):
        angles = np.unwrap([cmath.phase(s.positions[i]) for s in traj.states])
        omega = (angles[-1] - angles[0]) / total_t if total_t else 0.0
        print(f"vortex {i}: measured omega = {omega:.8f}")
    return EXIT_OK


def run_verify(args) -> int:
    results = verify.run_suite(args.suite, seed=args.seed, tol_scale=args.tol)
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if not r.passed:
            failures += 1
        line = f"[{status}] {r.name:<{width}}"
        if r.detail:
            line += f"  {r.detail}"
        print(line)
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "seq": run_seq,
        "eval": run_eval,
        "field": run_field,
        "simulate": run_simulate,
        "verify": run_verify,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
