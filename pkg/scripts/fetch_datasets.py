#!/usr/bin/env python3
"""Download the UCI Wholesale customers dataset used by the acceptance tests.

The package never downloads anything on its own; this helper exists so the
dataset-dependent tests can be run after a one-time fetch:

    python3 scripts/fetch_datasets.py

writes data/wholesale_customers.csv (440 rows x 8 columns).  If this machine
has no route to archive.ics.uci.edu, fetch the file manually from either URL
below and place it at that path (or point PABIDOT_WCDS at it):

    https://archive.ics.uci.edu/ml/machine-learning-databases/00292/Wholesale%20customers%20data.csv
    https://archive.ics.uci.edu/static/public/292/wholesale+customers.zip
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

CSV_URL = (
    "https://archive.ics.uci.edu/ml/machine-learning-databases/00292/"
    "Wholesale%20customers%20data.csv"
)
ZIP_URL = "https://archive.ics.uci.edu/static/public/292/wholesale+customers.zip"
EXPECTED_COLUMNS = [
    "Channel", "Region", "Fresh", "Milk", "Grocery", "Frozen",
    "Detergents_Paper", "Delicassen",
]
EXPECTED_ROWS = 440
DEFAULT_DEST = Path(__file__).resolve().parent.parent / "data" / "wholesale_customers.csv"


def download(url: str, timeout: float) -> bytes:
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read()


def extract_csv(payload: bytes) -> bytes:
    """Return CSV bytes from either a raw CSV or a zip archive containing one."""
    if payload[:4] == b"PK\x03\x04":
        with zipfile.ZipFile(io.BytesIO(payload)) as archive:
            names = [n for n in archive.namelist() if n.lower().endswith(".csv")]
            if not names:
                raise ValueError("zip archive contains no .csv member")
            return archive.read(names[0])
    return payload


def validate(payload: bytes) -> None:
    rows = list(csv.reader(io.StringIO(payload.decode("utf-8-sig"))))
    rows = [row for row in rows if row]
    header = [cell.strip() for cell in rows[0]]
    if header != EXPECTED_COLUMNS:
        raise ValueError(f"unexpected header {header!r}")
    body = rows[1:]
    if len(body) != EXPECTED_ROWS:
        raise ValueError(f"expected {EXPECTED_ROWS} data rows, got {len(body)}")
    for i, row in enumerate(body, start=2):
        if len(row) != len(EXPECTED_COLUMNS):
            raise ValueError(f"row {i} has {len(row)} fields")
        for cell in row:
            int(cell)  # every value in this dataset is an integer


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", type=Path, default=DEFAULT_DEST,
                        help=f"output path (default: {DEFAULT_DEST})")
    parser.add_argument("--timeout", type=float, default=30.0,
                        help="per-request timeout in seconds")
    parser.add_argument("--force", action="store_true",
                        help="overwrite an existing file")
    args = parser.parse_args(argv)

    if args.dest.exists() and not args.force:
        print(f"{args.dest} already exists; use --force to re-download")
        return 0

    errors = []
    for url in (CSV_URL, ZIP_URL):
        print(f"fetching {url}")
        try:
            payload = extract_csv(download(url, args.timeout))
            validate(payload)
        except Exception as exc:  # noqa: BLE001 - report and try the next URL
            errors.append(f"  {url}\n    {type(exc).__name__}: {exc}")
            continue
        args.dest.parent.mkdir(parents=True, exist_ok=True)
        tmp = args.dest.with_suffix(".tmp")
        tmp.write_bytes(payload)
        tmp.replace(args.dest)
        print(f"wrote {args.dest} ({EXPECTED_ROWS} rows x {len(EXPECTED_COLUMNS)} columns)")
        return 0

    print("could not fetch the Wholesale customers dataset:", file=sys.stderr)
    for line in errors:
        print(line, file=sys.stderr)
    print(
        "\nIf this machine has no access to archive.ics.uci.edu, download the\n"
        f"file elsewhere and place it at {args.dest}\n"
        "(or set PABIDOT_WCDS to its location).  The dataset-dependent tests\n"
        "skip cleanly until the file exists.",
        file=sys.stderr,
    )
    return 1


if __name__ == "__main__":
    sys.exit(main())
