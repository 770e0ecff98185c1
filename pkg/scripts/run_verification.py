"""Run every claim and write the JSON report plus per-claim details."""

import argparse
import json
from pathlib import Path

from quatweyl import claims as CL


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--filter")
    p.add_argument("--outdir", default="results")
    a = p.parse_args()
    report = CL.verify(a.filter)
    out = Path(a.outdir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(report.dumps())
    details = {r.id: {"seconds": round(r.seconds, 2), **_plain(r.details)} for r in report.results}
    (out / "details.json").write_text(json.dumps(details, indent=2, sort_keys=True) + "\n")
    for r in sorted(report.results, key=lambda r: r.id):
        print(f"{r.status:29s} {r.id:26s} {r.seconds:6.2f}s")
    print(report.summary)


if __name__ == "__main__":
    main()
