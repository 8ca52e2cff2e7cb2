"""Run configuration: a flat dataclass with a key=value text form."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .cyclotomic import DEFAULT_DIGITS

DIGITS_ENV = "ARTIFACT_DIGITS"


def default_digits() -> int:
    """Working precision: $ARTIFACT_DIGITS if set, else the library default."""
    raw = os.environ.get(DIGITS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_DIGITS
    try:
        d = int(raw)
    except ValueError as exc:
        raise ValueError(f"{DIGITS_ENV} must be an integer, got {raw!r}") from exc
    if d < 16:
        raise ValueError(f"{DIGITS_ENV} must be at least 16")
    return d


def parse_interval(text: str) -> tuple[float, float]:
    """'a:b' -> (a, b); negative numbers are fine ('-2:-1')."""
    a, sep, b = text.partition(":")
    if not sep:
        raise ValueError(f"interval must look like a:b, got {text!r}")
    lo, hi = float(a), float(b)
    if lo == hi:
        raise ValueError("empty interval")
    return lo, hi


def parse_crop(text: str) -> tuple[float, float, float, float] | None:
    if text in ("", "default"):
        return None
    parts = [float(t) for t in text.split(",")]
    if len(parts) != 4:
        raise ValueError("crop needs xmin,xmax,ymin,ymax")
    return tuple(parts)


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce a web run."""

    command: str = "web"
    n: int = 14
    map: str = "dkhoy"
    depth: int = 5000
    samples: int = 1000
    digits: int = DEFAULT_DIGITS
    interval: str = "-2:-1"
    crop: str = "default"
    augment: bool = True
    segments: bool = False
    level: int = 10
    point_size: float = 1.0
    grid_bits: int = 40
    out: str = ""
    svg: str = ""
    csv: str = ""

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("N must be at least 3")
        if self.map not in ("tau", "df", "dkhoy"):
            raise ValueError(f"unknown map {self.map!r}")
        if self.depth < 0 or self.level < 0:
            raise ValueError("depth and level must be non-negative")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        parse_interval(self.interval)
        parse_crop(self.crop)

    def dumps(self) -> str:
        lines = []
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool):
                v = "true" if v else "false"
            elif isinstance(v, float):
                v = repr(v)
            lines.append(f"{f.name}={v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "RunConfig":
        types = {f.name: f.type for f in fields(cls)}
        kw = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if not sep or key not in types:
                raise ValueError(f"line {lineno}: bad entry {line!r}")
            kw[key] = _convert(types[key], val)
        return cls(**kw)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        return cls.loads(Path(path).read_text())

    def with_(self, **kw) -> "RunConfig":
        return replace(self, **kw)


def _convert(tp: str, val: str):
    if tp == "bool":
        if val.lower() in ("true", "1", "yes"):
            return True
        if val.lower() in ("false", "0", "no"):
            return False
        raise ValueError(f"not a boolean: {val!r}")
    if tp == "int":
        return int(val)
    if tp == "float":
        return float(val)
    return val


def polygon_in_frame(n: int, frame: str):
    """The regular n-gon at the origin with unit radius, unit apothem or unit side."""
    from .cyclotomic import context_for_polygon, trig_exact
    from .geometry import regular_polygon

    if frame == "radius":
        return regular_polygon(n, radius=1)
    if frame == "apothem":
        return regular_polygon(n)
    if frame == "side":
        ctx = context_for_polygon(n)
        return regular_polygon(n, apothem=trig_exact("cot", 1, n, ctx) / 2, ctx=ctx)
    raise ValueError(f"unknown frame {frame!r}")


def run_web(cfg: RunConfig):
    """Build the web a config describes; returns (cloud or segment web, polygon or None)."""
    from .maps import DfSystem, DualCenterSystem, OuterBilliardsSystem
    from .web import SeedInterval, augment_symmetry, crop, default_crop, segment_web, web_points

    if cfg.segments:
        if cfg.map != "tau":
            raise ValueError("segment webs need the tau map")
        P = polygon_in_frame(cfg.n, "radius")
        return segment_web(OuterBilliardsSystem(P, digits=cfg.digits), cfg.level), P
    lo, hi = parse_interval(cfg.interval)
    if cfg.map == "tau":
        P = polygon_in_frame(cfg.n, "radius")
        sysm = OuterBilliardsSystem(P, digits=cfg.digits)
        yb = float(P.center.y - P.apothem)
        seeds = [SeedInterval((lo, yb), (hi, yb), cfg.samples)]
    else:
        P = polygon_in_frame(cfg.n, "side") if cfg.map == "dkhoy" else None
        sysm = DfSystem(cfg.n, digits=cfg.digits) if cfg.map == "df" else DualCenterSystem(cfg.n, digits=cfg.digits)
        seeds = [SeedInterval.real(lo, hi, cfg.samples)]
    cloud = web_points(sysm, seeds, cfg.depth, cfg.grid_bits)
    if cfg.augment:
        cloud = augment_symmetry(cloud, P if cfg.map == "tau" else None)
    rect = parse_crop(cfg.crop) or default_crop(cfg.map, cfg.n, P if cfg.map == "tau" else None)
    return crop(cloud, rect), P
