"""``photonqm <scenario> [--config path.json] [--out dir] [--override key=value ...]``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .scenarios import SCENARIOS, RunConfig, apply_overrides

SCHEMA_VERSION = 1
log = logging.getLogger("photonqm")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photonqm",
        description="Run a photon wave-function verification scenario and write CSV/JSON artifacts.",
    )
    parser.add_argument("scenario", help=f"one of: {', '.join(SCENARIOS)}")
    parser.add_argument("--config", help="JSON run configuration")
    parser.add_argument("--out", help="output directory (overrides the config value)")
    parser.add_argument("--override", action="append", default=[], metavar="KEY=VALUE",
                        help="dotted config override, value parsed as JSON; repeatable")
    parser.add_argument("--no-plots", action="store_true", help="skip PNG figures")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def load_config(path: str | None, overrides: list[str]) -> RunConfig:
    data = {}
    if path:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    data = apply_overrides(data, overrides)
    cfg = RunConfig.from_dict(data)
    cfg.validate()
    return cfg


def write_tables(out: Path, tables: dict) -> list[Path]:
    paths = []
    for name, table in tables.items():
        path = out / f"{name}.csv"
        with path.open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(table.header)
            w.writerows(table.rows)
        paths.append(path)
    return paths


def run_scenario(name: str, cfg: RunConfig, plots: bool = True) -> int:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    result = SCENARIOS[name](cfg)
    wall = time.perf_counter() - start
    artifacts = [p.name for p in write_tables(out, result.tables)]
    if plots:
        from . import plotting

        artifacts += [p.name for p in plotting.render(name, result.tables, out)]
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "scenario": name,
        "library_version": __version__,
        "config": cfg.to_dict(),
        "wall_time_s": wall,
        "passed": result.passed,
        "checks": [c.as_dict() for c in result.checks],
        "info": result.info,
        "artifacts": sorted(artifacts),
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")

    for c in result.checks:
        status = "pass" if c.passed else "FAIL"
        print(f"{status}  {c.name}: {c.value:.3e} {c.comparison} {c.threshold:.3e}")
    failed = [c.name for c in result.checks if not c.passed]
    if failed:
        print(f"{name}: {len(failed)} check(s) failed: {'; '.join(failed)}", file=sys.stderr)
        return 1
    print(f"{name}: all {len(result.checks)} checks passed ({wall:.1f} s)")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.scenario not in SCENARIOS:
        print(f"unknown scenario {args.scenario!r}; valid scenarios: {', '.join(SCENARIOS)}", file=sys.stderr)
        return 2
    try:
        overrides = list(args.override)
        if args.out:
            overrides.append(f"out={json.dumps(args.out)}")
        cfg = load_config(args.config, overrides)
    except (OSError, ValueError, TypeError) as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    log.debug("config: %s", cfg.to_dict())
    return run_scenario(args.scenario, cfg, plots=not args.no_plots)


if __name__ == "__main__":
    sys.exit(main())
