"""Command-line frontend.

Subcommands: convert, compose, donkin, integrate, figure, check.
Angles are radians unless --degrees is given; numbers print with 12
significant digits unless --precision overrides.  Exit codes: 0 ok,
1 check failure, 2 parse/bad args, 3 half-turn has no Rodrigues vector,
4 parallel axes, 5 non-monotonic time, 6 step too large, 7 io failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from rodvec import checks, geometry, kinematics, svg
from rodvec._backend import backend_name
from rodvec.cayley import rodrigues_from_matrix
from rodvec.composition import RotationResult, compose_general
from rodvec.core import (
    AxisAngle,
    HalfTurn,
    Matrix3,
    RodriguesVector,
    RotationMatrix,
    UnitVector,
    Vec3,
    axis_angle_from_rodrigues,
    matrix_from_half_turn,
    matrix_from_rodrigues,
    rodrigues_from_axis_angle,
)
from rodvec.errors import (
    HalfTurnUndefined,
    MissingInput,
    NonMonotonicTime,
    NotARotation,
    ParallelAxes,
    SpecFormatError,
    StepTooLarge,
)

__all__ = ["main"]


def _fmt(v: float, digits: int) -> str:
    if v == 0.0:
        v = 0.0  # fold -0.0
    return f"{v:.{digits}g}"


def _fmt_list(values, digits: int) -> str:
    return ",".join(_fmt(v, digits) for v in values)


def _parse_floats(text: str, count: int, what: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise SpecFormatError(f"{what} needs {count} comma-separated numbers, got {len(parts)}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise SpecFormatError(f"bad number in {what}: {exc}") from None


def parse_rotation_spec(text: str, degrees: bool = False) -> RotationResult:
    """Parse ``aa:...``, ``rod:...``, ``mat:...`` or ``half:...`` to a rotation."""
    kind, sep, payload = text.partition(":")
    if not sep:
        raise SpecFormatError(f"rotation spec needs a 'kind:' prefix: {text!r}")
    try:
        if kind == "rod":
            return RodriguesVector(*_parse_floats(payload, 3, "rod spec"))
        if kind == "half":
            x, y, z = _parse_floats(payload, 3, "half spec")
            return HalfTurn(UnitVector.from_vec(Vec3(x, y, z)))
        if kind == "aa":
            nx, ny, nz, theta = _parse_floats(payload, 4, "aa spec")
            if degrees:
                theta = math.radians(theta)
            aa = AxisAngle(UnitVector.from_vec(Vec3(nx, ny, nz)), theta)
            try:
                return rodrigues_from_axis_angle(aa)
            except HalfTurnUndefined:
                return HalfTurn(aa.axis)
        if kind == "mat":
            elements = _parse_floats(payload, 9, "mat spec")
            return rodrigues_from_matrix(RotationMatrix(Matrix3(elements)))
    except (ValueError, NotARotation) as exc:
        raise SpecFormatError(f"invalid {kind} spec: {exc}") from None
    raise SpecFormatError(f"unknown rotation kind {kind!r} (use aa, rod, mat or half)")


def _result_matrix(r: RotationResult) -> RotationMatrix:
    if isinstance(r, HalfTurn):
        return matrix_from_half_turn(r)
    return matrix_from_rodrigues(r)


def _spec_rod(r: RotationResult, digits: int) -> str:
    if isinstance(r, HalfTurn):
        raise HalfTurnUndefined(
            "this rotation's angle is pi: tan(theta/2) has a pole there and no "
            "Rodrigues vector exists; convert to aa, mat or half instead"
        )
    return "rod:" + _fmt_list(r.as_tuple(), digits)


def _spec_aa(r: RotationResult, digits: int, degrees: bool) -> str:
    if isinstance(r, HalfTurn):
        axis, angle = r.axis, math.pi
    else:
        aa = axis_angle_from_rodrigues(r)
        axis, angle = aa.axis, aa.angle
    if degrees:
        angle = math.degrees(angle)
    return "aa:" + _fmt_list((*axis.as_tuple(), angle), digits)


def _spec_mat(r: RotationResult, digits: int) -> str:
    return "mat:" + _fmt_list(_result_matrix(r).elements, digits)


def _spec_half(r: RotationResult, digits: int) -> str:
    if isinstance(r, HalfTurn):
        return "half:" + _fmt_list(r.axis.as_tuple(), digits)
    raise HalfTurnUndefined("rotation angle is not pi; no half-turn form exists")


def _print_result_block(r: RotationResult, digits: int, degrees: bool) -> None:
    if isinstance(r, HalfTurn):
        print(_spec_half(r, digits))
    else:
        print(_spec_rod(r, digits))
    print(_spec_aa(r, digits, degrees))
    print(_spec_mat(r, digits))


def _cmd_convert(args: argparse.Namespace) -> int:
    r = parse_rotation_spec(args.spec, args.degrees)
    if args.to == "rod":
        print(_spec_rod(r, args.precision))
    elif args.to == "aa":
        print(_spec_aa(r, args.precision, args.degrees))
    elif args.to == "mat":
        print(_spec_mat(r, args.precision))
    else:
        print(_spec_half(r, args.precision))
    return 0


def _cmd_compose(args: argparse.Namespace) -> int:
    if len(args.specs) < 2:
        raise SpecFormatError("compose needs at least two rotation specs")
    rotations = [parse_rotation_spec(s, args.degrees) for s in args.specs]
    acc = rotations[0]
    for i, nxt in enumerate(rotations[1:], start=1):
        if isinstance(acc, RodriguesVector) and isinstance(nxt, RodriguesVector):
            lam = 1.0 - (nxt.x * acc.x + nxt.y * acc.y + nxt.z * acc.z)
            print(f"lambda[{i}] = {_fmt(lam, args.precision)}")
        else:
            print(f"lambda[{i}] = n/a (half-turn operand)")
        acc = compose_general(nxt, acc)
    _print_result_block(acc, args.precision, args.degrees)
    return 0


def _cmd_donkin(args: argparse.Namespace) -> int:
    r1 = parse_rotation_spec(args.q1, args.degrees)
    r2 = parse_rotation_spec(args.q2, args.degrees)
    if isinstance(r1, HalfTurn) or isinstance(r2, HalfTurn):
        raise SpecFormatError("donkin needs two regular (non-half-turn) rotations")
    tri = geometry.donkin_triangle(r1, r2)
    d = args.precision
    conv = math.degrees if args.degrees else (lambda a: a)
    print("A:" + _fmt_list(tri.a.as_tuple(), d))
    print("B:" + _fmt_list(tri.b.as_tuple(), d))
    print("C:" + _fmt_list(tri.c.as_tuple(), d))
    print(f"arc(A,B) = {_fmt(conv(geometry.arc_angle(tri.a, tri.b)), d)}")
    print(f"arc(B,C) = {_fmt(conv(geometry.arc_angle(tri.b, tri.c)), d)}")
    print(f"arc(A,C) = {_fmt(conv(geometry.arc_angle(tri.a, tri.c)), d)}")
    print(f"residual = {_fmt(geometry.donkin_verify(tri), 3)}")
    return 0


def _parse_omega_file(path: str) -> list[kinematics.AngularVelocitySample]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise SpecFormatError(f"cannot read omega file: {exc}") from None
    samples = []
    for lineno, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 4:
            raise SpecFormatError(f"{path}:{lineno}: expected 't wx wy wz', got {len(parts)} fields")
        try:
            t, wx, wy, wz = (float(p) for p in parts)
        except ValueError as exc:
            raise SpecFormatError(f"{path}:{lineno}: {exc}") from None
        samples.append(
            kinematics.AngularVelocitySample(t, kinematics.AngularVelocity(wx, wy, wz))
        )
    if len(samples) < 2:
        raise SpecFormatError(f"{path}: need at least 2 samples, got {len(samples)}")
    return samples


def _trajectory_lines(
    traj: kinematics.AttitudeTrajectory, digits: int, matrix_cols: bool
) -> list[str]:
    header = "# t qx qy qz" + (" r11 r21 r31 r12 r22 r32" if matrix_cols else "")
    out = [header]
    for t, orient in traj:
        if isinstance(orient, HalfTurn):
            cols = [t, math.nan, math.nan, math.nan]
        else:
            cols = [t, orient.x, orient.y, orient.z]
        if matrix_cols:
            e = _result_matrix(orient).elements
            cols += [e[0], e[3], e[6], e[1], e[4], e[7]]
        out.append(" ".join(_fmt(c, digits) if c == c else "nan" for c in cols))
    return out


def _cmd_integrate(args: argparse.Namespace) -> int:
    samples = _parse_omega_file(args.file)
    initial = parse_rotation_spec(args.initial, args.degrees) if args.initial else None
    traj = kinematics.integrate_attitude(
        samples, scheme=args.scheme, initial=initial, substeps=args.substeps
    )
    if args.out or args.trajectory:
        lines = _trajectory_lines(traj, args.precision, args.matrix_cols)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write("\n".join(lines) + "\n")
        if args.trajectory:
            for line in lines:
                print(line)
    final = traj.final
    if isinstance(final, HalfTurn):
        print("final " + _spec_half(final, args.precision))
    else:
        print("final " + _spec_rod(final, args.precision))
    print("final " + _spec_aa(final, args.precision, args.degrees))
    print("final " + _spec_mat(final, args.precision))
    return 0


def _parse_vec(text: str, what: str) -> Vec3:
    return Vec3(*_parse_floats(text, 3, what))


def _cmd_figure(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("fig1a", "fig1b", "fig1c", "fig2"):
        if args.q is None:
            raise MissingInput(f"{kind} needs --q")
        if args.x is None:
            raise MissingInput(f"{kind} needs --x")
        q = RodriguesVector(*_parse_floats(args.q, 3, "--q"))
        scene = geometry.figure_scene(kind, q, x=_parse_vec(args.x, "--x"))
    else:
        if args.q1 is None or args.q2 is None:
            raise MissingInput(f"{kind} needs --q1 and --q2")
        q1 = RodriguesVector(*_parse_floats(args.q1, 3, "--q1"))
        q2 = RodriguesVector(*_parse_floats(args.q2, 3, "--q2"))
        scene = geometry.figure_scene(kind, q1, q2=q2)
    view = None
    if args.view:
        view = UnitVector.from_vec(_parse_vec(args.view, "--view"))
    svg.write_scene(scene, args.out, view_axis=view)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise SpecFormatError("--n must be >= 1")
    print(f"backend: {backend_name()}")
    results = checks.run_diagnostics(args.n, args.seed)
    failed = False
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(
            f"{r.name}: n={r.samples} max_residual={r.max_residual:.3e} "
            f"tol={r.tolerance:.0e} {status}"
        )
        failed = failed or not r.ok
    return 1 if failed else 0


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rodvec",
        description="Rotation algebra on Rodrigues vectors: convert, compose, "
        "inspect the spherical-triangle construction, integrate attitude, "
        "emit figures, self-check.",
    )
    parser.add_argument("--degrees", action="store_true", help="angles in degrees at the CLI boundary")
    parser.add_argument("--precision", type=_positive_int, default=12, metavar="DIGITS",
                        help="significant digits in output (default 12)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between rotation representations")
    p.add_argument("spec", help="aa:nx,ny,nz,theta | rod:qx,qy,qz | mat:r11,...,r33 | half:nx,ny,nz")
    p.add_argument("--to", required=True, choices=("aa", "rod", "mat", "half"))
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser(
        "compose",
        help="compose rotations; the FIRST listed spec is applied FIRST "
        "(chronological order, the reverse of matrix-product notation)",
    )
    p.add_argument("specs", nargs="+", help="two or more rotation specs, application order")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("donkin", help="spherical triangle realizing a composition")
    p.add_argument("q1", help="first rotation (applied first)")
    p.add_argument("q2", help="second rotation")
    p.set_defaults(func=_cmd_donkin)

    p = sub.add_parser("integrate", help="propagate attitude from sampled angular velocity")
    p.add_argument("file", help="text file: 't wx wy wz' per line, '#' comments")
    p.add_argument("--scheme", choices=kinematics.SCHEMES, default=kinematics.EXACT_STEP)
    p.add_argument("--substeps", type=_positive_int, default=1, metavar="N",
                   help="integration steps per sample interval (default 1)")
    p.add_argument("--initial", default=None, metavar="SPEC", help="initial orientation spec")
    p.add_argument("--out", default=None, metavar="PATH", help="write trajectory to file")
    p.add_argument("--trajectory", action="store_true", help="print the full trajectory")
    p.add_argument("--matrix-cols", action="store_true",
                   help="append the first two rotation-matrix columns to trajectory rows")
    p.set_defaults(func=_cmd_integrate)

    p = sub.add_parser("figure", help="emit an SVG of a geometric construction")
    p.add_argument("--kind", required=True, choices=geometry.FIGURE_KINDS)
    p.add_argument("--q", default=None, metavar="QX,QY,QZ", help="rotation (fig1a/fig1b/fig1c/fig2)")
    p.add_argument("--x", default=None, metavar="X,Y,Z", help="tracked point (fig1a/fig1b/fig1c/fig2)")
    p.add_argument("--q1", default=None, metavar="QX,QY,QZ", help="first rotation (fig4/fig5)")
    p.add_argument("--q2", default=None, metavar="QX,QY,QZ", help="second rotation (fig4/fig5)")
    p.add_argument("--view", default=None, metavar="X,Y,Z", help="override the projection axis")
    p.add_argument("--out", required=True, metavar="PATH", help="output SVG path")
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("check", help="run the seeded residual diagnostics")
    p.add_argument("--n", type=int, default=1000, help="samples per diagnostic (default 1000)")
    p.add_argument("--seed", type=int, default=42, help="RNG seed (default 42)")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (SpecFormatError, MissingInput, NotARotation, ValueError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HalfTurnUndefined as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ParallelAxes as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except NonMonotonicTime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except StepTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 7


if __name__ == "__main__":
    raise SystemExit(main())
