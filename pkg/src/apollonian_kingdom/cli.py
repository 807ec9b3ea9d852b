"""Command-line driver: generate packings, render them, run invariant suites.

Settings resolve as command-line flag, then ``--config`` file (``key=value``
lines, keys spelled like the long flags), then built-in default.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .circles import Circle
from .explorer import (
    ExplorationConfig,
    Mode,
    Window,
    coset_packing,
    enumerate_superpacking,
    explore_palace,
    strip_packing,
)
from .gaussian import GaussMatrix2
from .minkowski import BASE_QUADRUPLE, PedoeVector
from .render import Labels, RenderSpec, emit_svg, write_jsonl
from .verify import SUITES

log = logging.getLogger("apollonian_kingdom")

DEFAULTS: dict[str, dict[str, Any]] = {
    "strip": {"max_curvature": 20, "window": "-2,-1/2,2,3/2"},
    "coset": {"max_curvature": 20, "window": "-2,-2,2,2", "coset_matrix": "i,0,1,i"},
    "palace": {"max_curvature": 20, "window": "-2,-2,2,2", "seed": "base"},
    "superpacking": {"max_curvature": 40, "window": "0,0,1,1", "margin": 4},
    "verify": {"samples": 1000, "seed_rng": 1, "depth": 6, "from": "strip", "max_curvature": 40},
}
COMMON_DEFAULTS: dict[str, Any] = {"labels": "none", "scale": 400, "stroke": 1.0}


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _window(text: str) -> Window:
    try:
        return Window.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _matrix(text: str) -> GaussMatrix2:
    try:
        return GaussMatrix2.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}")
    try:
        return Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed_quadruple(text: str) -> tuple[PedoeVector, ...]:
    if text == "base":
        return BASE_QUADRUPLE
    try:
        vecs = tuple(PedoeVector(*(int(x) for x in part.split(","))) for part in text.split(";"))
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"seed must be 'base' or four b,bp,re,im groups separated by ';'") from None
    if len(vecs) != 4:
        raise argparse.ArgumentTypeError("seed needs four circles")
    return vecs


CONVERTERS = {
    "max_curvature": _positive_int,
    "max_depth": _nonnegative_int,
    "window": _window,
    "coset_matrix": _matrix,
    "labels": Labels,
    "scale": _positive_int,
    "stroke": float,
    "seed": _seed_quadruple,
    "margin": _positive_int,
    "samples": _positive_int,
    "seed_rng": int,
    "depth": _nonnegative_int,
    "from": str,
    "center": _point,
    "out": Path,
    "svg": Path,
}


def read_config(path: Path) -> dict[str, str]:
    settings = {}
    for n, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in CONVERTERS:
            raise UsageError(f"{path}:{n}: unknown setting {key!r}")
        settings[key] = value
    return settings


def resolve(args: argparse.Namespace) -> dict[str, Any]:
    """Merge flags over the config file over defaults, converting strings."""
    merged: dict[str, Any] = dict(COMMON_DEFAULTS)
    merged.update(DEFAULTS[args.command])
    if args.config is not None:
        merged.update(read_config(args.config))
    for key, value in vars(args).items():
        if value is not None and key in CONVERTERS:
            merged[key] = value
    out = {}
    for key, value in merged.items():
        if isinstance(value, str) and key in CONVERTERS and CONVERTERS[key] is not str:
            try:
                value = CONVERTERS[key](value)
            except (argparse.ArgumentTypeError, ValueError) as exc:
                raise UsageError(f"bad value for {key}: {exc}") from None
        out[key] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apollonian-kingdom",
        description="Generate, verify and render Apollonian packings of Gaussian circles.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", type=Path, help="key=value settings file (flags take precedence)")
        p.add_argument("--max-curvature", type=_positive_int, help="curvature bound")

    def generation(p: argparse.ArgumentParser) -> None:
        common(p)
        p.add_argument("--max-depth", type=_nonnegative_int, help="BFS depth bound")
        p.add_argument("--window", type=_window, help="x0,y0,x1,y1 with rational entries such as 1/2")
        p.add_argument("--out", type=Path, help="JSON-Lines output (default: standard output)")
        p.add_argument("--svg", type=Path, help="SVG output")
        p.add_argument("--labels", choices=[x.value for x in Labels], help="circle labels in the SVG")
        p.add_argument("--scale", type=_positive_int, help="SVG pixels per unit")
        p.add_argument("--stroke", type=float, help="SVG stroke width")
        p.add_argument("--seed-rng", type=int, help="accepted for uniformity; generation is deterministic")

    generation(sub.add_parser("strip", help="the strip packing, as the orbit of the real line"))
    p = sub.add_parser("coset", help="the packing of a coset of the strip group")
    generation(p)
    p.add_argument("--coset-matrix", type=_matrix, help="a,b,c,d Gaussian integers, e.g. i,0,1,i")
    p = sub.add_parser("palace", help="the packing of a Descartes quadruple, by swaps")
    generation(p)
    p.add_argument("--seed", type=_seed_quadruple, help="'base' or b,bp,re,im;... four circles")
    p = sub.add_parser("superpacking", help="all Gaussian circles in a window")
    generation(p)
    p.add_argument("--center", type=_point, help="re-centre the window at x,y")
    p.add_argument("--margin", type=_positive_int, help="pruning margin on the curvature bound")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=sorted(SUITES))
    common(p)
    p.add_argument("--samples", type=_positive_int, help="random samples for sampled suites")
    p.add_argument("--seed-rng", "--seed", dest="seed_rng", type=int, help="random seed")
    p.add_argument("--depth", type=_nonnegative_int, help="lockstep depth (at most 8)")
    p.add_argument("--from", dest="from", choices=["strip", "coset"], help="packing to check")
    return parser


def _generate(command: str, s: dict[str, Any]) -> tuple[list[Circle], Window]:
    window: Window = s["window"]
    if command == "superpacking" and s.get("center") is not None:
        cx, cy = s["center"]
        hw, hh = (window.x1 - window.x0) / 2, (window.y1 - window.y0) / 2
        window = Window(cx - hw, cy - hh, cx + hw, cy + hh)
    k = s["max_curvature"]
    mode = Mode.SUPERPACKING if command == "superpacking" else Mode.PALACE
    cfg = ExplorationConfig(max_curvature=k, max_depth=s.get("max_depth"), window=window, mode=mode)
    if command == "strip":
        graph = strip_packing(cfg)
    elif command == "coset":
        graph = coset_packing(s["coset_matrix"], cfg)
    elif command == "palace":
        graph = explore_palace(s["seed"], cfg)
    else:
        return enumerate_superpacking(cfg, s["margin"]), window
    log.info("%d chambers, %d circles generated", len(graph.chambers), len(graph.vertices))
    return graph.circles_within(k, window), window


def _run_verify(s: dict[str, Any]) -> int:
    name = s["suite"]
    kwargs: dict[str, Any] = {}
    if name in ("hermitian", "parity", "spinor"):
        kwargs = {"samples": s["samples"], "seed": s["seed_rng"]}
    elif name == "relate":
        kwargs = {"pairs": s["samples"], "seed": s["seed_rng"]}
    elif name == "lockstep":
        if s["depth"] > 8:
            raise UsageError("lockstep depth must be at most 8")
        kwargs = {"depth": s["depth"]}
    elif name in ("descartes", "primitivity"):
        kwargs = {"source": s["from"], "max_curvature": s["max_curvature"]}
    elif name in ("duality", "superpacking"):
        kwargs = {"max_curvature": s["max_curvature"]}
    result = SUITES[name](**kwargs)
    print(result.summary())
    for failure in result.failures:
        print(f"  {failure}")
    return 0 if result.ok else 1


VALUE_FLAGS = ("--window", "--center", "--coset-matrix", "--seed")


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Join value flags to values that start with '-' (e.g. ``--window -1,0,1,1``),
    which argparse would otherwise read as another option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_values(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        settings = resolve(args)
        if args.command == "verify":
            settings["suite"] = args.suite
            return _run_verify(settings)
        circles, window = _generate(args.command, settings)
    except (UsageError, ValueError) as exc:
        parser.error(str(exc))
    if settings.get("out") is not None:
        with open(settings["out"], "w") as fh:
            write_jsonl(circles, fh)
    else:
        write_jsonl(circles, sys.stdout)
    if settings.get("svg") is not None:
        spec = RenderSpec(window, settings["scale"], settings["stroke"], settings["labels"])
        Path(settings["svg"]).write_text(emit_svg(circles, spec))
    log.info("%d circles written", len(circles))
    return 0


if __name__ == "__main__":
    sys.exit(main())
