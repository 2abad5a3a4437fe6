"""Thin command-line client for the verification service.

By default the service app runs in-process over an ASGI transport; pass
--server to talk to a live instance instead.  Exit codes: 0 all pass,
1 any failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import httpx

from .schemas import RunReport


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    # in-process: the test client wraps the ASGI app behind the same
    # sync httpx interface
    from fastapi.testclient import TestClient
    from .service import app
    return TestClient(app)


def render_text(report: RunReport) -> str:
    lines = []
    width = max((len(c.check_id) for c in report.checks), default=10)
    for c in report.checks:
        mark = {"pass": "ok  ", "fail": "FAIL", "skipped": "skip"}[c.status]
        lines.append(f"[{mark}] {c.check_id.ljust(width)}  {c.elapsed:7.2f}s  {c.ref}")
        if c.status == "fail":
            lines.append(f"       computed: {c.computed}")
            lines.append(f"       expected: {c.expected}  ideal: {c.ideal}")
    s = report.summary
    lines.append(f"{s.passed}/{s.total} passed, {s.failed} failed, {s.skipped} skipped")
    return "\n".join(lines)


def render_window_table(label: str, t_window: int, s_max: int, b: int) -> str:
    """Plain-text chart in (t - s, s) coordinates.

    Labels c2, c6, q8, v, a4, g24 render cohomology windows; bss-q8 and
    bss-v render the filtration-graded tables (entries are total graded
    dimensions per column).
    """
    if label.startswith("bss-"):
        from .bockstein import run_bss
        st = run_bss(label[4:], s_max=s_max, t_min=-t_window - s_max,
                     t_max=t_window + s_max, b=b)
        dim = st.column_sum
    else:
        from .grpcoh import cohomology_dims
        win = cohomology_dims(label, s_max=s_max, t_min=-t_window - s_max,
                              t_max=t_window + s_max, b=b)
        dim = win.dim
    cols = list(range(-t_window, t_window + 1))
    lines = [f"{label}: entries are dim at (t-s, s); u1-cap {b}"]
    for s in range(s_max, -1, -1):
        row = [f"s={s:2d} "]
        for x in cols:
            t = x + s
            d = dim(s, t) if t % 2 == 0 else 0
            row.append("  ." if d == 0 else f"{d:3d}")
        lines.append(" ".join(row))
    axis = ["     "] + [f"{x:3d}" for x in cols]
    lines.append(" ".join(axis))
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="verify",
        description="run verification suites for the supersingular-curve "
                    "deformation calculus")
    ap.add_argument("suite", choices=["fgl", "stabilizer", "action", "cohomology",
                                      "bockstein", "adrss", "all", "table"])
    ap.add_argument("--two-adic-prec", type=int, default=6)
    ap.add_argument("--u1-cap", type=int, default=14)
    ap.add_argument("--z-cap", type=int, default=64)
    ap.add_argument("--t-window", type=int, default=48)
    ap.add_argument("--s-max", type=int, default=8)
    ap.add_argument("--digits", type=str, default=None,
                    help="digit triple for the action suite, e.g. w,0,1")
    ap.add_argument("--json", type=str, default=None, metavar="PATH")
    ap.add_argument("--server", type=str, default=None,
                    help="base URL of a running service; in-process if absent")
    ap.add_argument("--group", type=str, default="g24",
                    help="group label for the table renderer")
    try:
        args = ap.parse_args(argv)
    except SystemExit:
        return 2

    if args.suite == "table":
        print(render_window_table(args.group, min(args.t_window, 24),
                                  min(args.s_max, 8), args.u1_cap))
        return 0

    payload = {
        "suites": [args.suite],
        "config": {
            "two_adic_prec": args.two_adic_prec,
            "u1_cap": args.u1_cap,
            "z_cap": args.z_cap,
            "t_window": args.t_window,
            "s_max": args.s_max,
            "digits": args.digits,
        },
    }
    with make_client(args.server) as client:
        resp = client.post("/run", json=payload)
        if resp.status_code == 422:
            print(resp.text, file=sys.stderr)
            return 2
        resp.raise_for_status()
        report = RunReport.model_validate(resp.json())

    print(render_text(report))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_stable_json())
    return 0 if report.summary.failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
