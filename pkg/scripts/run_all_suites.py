"""Run every verification suite over a grid of (n, max_deg) and print a summary table.

    python3 scripts/run_all_suites.py --n 1 2 3 --max-deg 4 --json out.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from ospkit.verify import PIPELINE, run_suite


@dataclass
class Config:
    ns: list[int] = field(default_factory=lambda: [1, 2, 3])
    max_deg: int = 4
    suites: list[str] = field(default_factory=lambda: list(PIPELINE))
    json_path: str | None = None


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--suite", nargs="+", default=list(PIPELINE))
    p.add_argument("--json")
    a = p.parse_args()
    cfg = Config(a.n, a.max_deg, a.suite, a.json)

    rows, dumps = [], []
    for n in cfg.ns:
        for name in cfg.suites:
            t = time.perf_counter()
            try:
                reports = run_suite(name, n, cfg.max_deg)
            except ValueError as exc:
                rows.append((name, n, "n/a", 0, 0, 0.0, str(exc)))
                continue
            dt = time.perf_counter() - t
            for r in reports:
                status = "SKIP" if r.skipped else ("PASS" if r.passed else "FAIL")
                rows.append((r.name, n, status, r.checks, len(r.failures), dt, ""))
                dumps.append(r.to_json())

    print(f"{'suite':18} {'n':>2} {'status':6} {'checks':>8} {'fail':>5} {'time':>7}")
    for name, n, status, checks, fails, dt, note in rows:
        print(f"{name:18} {n:>2} {status:6} {checks:>8} {fails:>5} {dt:>6.2f}s {note}")
    if cfg.json_path:
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "reports": dumps}, fh, ensure_ascii=False, indent=2)


if __name__ == "__main__":
    main()
