#!/usr/bin/env python3
"""Extract the public datasets used by `tbc table4` into plain CSV files.

The raw files ship inside a few Python packages. Point --wheels at a
directory holding the downloaded wheels:

    pip download --no-deps dalex==1.8.0 responsibly==0.1.2 mlxtend==0.24.0 -d wheels/
    python3 tools/prepare_public_datasets.py --wheels wheels/ --out data/public

Outputs adult.csv, titanic.csv and iris.csv with a header row matching
data/schemas/<name>.schema. Cells holding '?' become empty, which the
loader reads as missing. There is no packaged copy of the Dress sales
data; place it at data/public/dress.csv by hand if you have it.
"""

import argparse
import csv
import gzip
import io
import pathlib
import sys
import zipfile

ADULT_COLUMNS = [
    "age", "workclass", "fnlwgt", "education", "education_num", "marital_status",
    "occupation", "relationship", "race", "sex", "capital_gain", "capital_loss",
    "hours_per_week", "native_country", "income",
]
IRIS_COLUMNS = ["sepal_length", "sepal_width", "petal_length", "petal_width", "species"]
IRIS_NAMES = {"0": "Iris-setosa", "1": "Iris-versicolor", "2": "Iris-virginica"}


def find_member(wheels: pathlib.Path, pattern: str, member: str) -> bytes:
    for wheel in sorted(wheels.glob(pattern)):
        with zipfile.ZipFile(wheel) as z:
            if member in z.namelist():
                return z.read(member)
    sys.exit(f"error: no wheel matching {pattern} in {wheels} contains {member}")


def write_rows(path: pathlib.Path, header, rows) -> int:
    with path.open("w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        n = 0
        for row in rows:
            w.writerow(row)
            n += 1
    return n


def clean(cell: str) -> str:
    cell = cell.strip()
    return "" if cell == "?" else cell


def adult(wheels: pathlib.Path):
    # Only the training file: the test file labels carry a trailing '.'
    # and a different header line.
    raw = find_member(wheels, "responsibly-*.whl", "responsibly/dataset/adult/adult.data").decode()
    for record in csv.reader(io.StringIO(raw)):
        if len(record) != len(ADULT_COLUMNS):
            continue
        yield [clean(c) for c in record]


def titanic(wheels: pathlib.Path):
    raw = find_member(wheels, "dalex-*.whl", "dalex/datasets/data/titanic.csv").decode()
    reader = csv.reader(io.StringIO(raw))
    header = next(reader)
    yield header
    for record in reader:
        yield [clean(c) for c in record]


def iris(wheels: pathlib.Path):
    raw = gzip.decompress(find_member(wheels, "mlxtend-*.whl", "mlxtend/data/data/iris.csv.gz")).decode()
    for record in csv.reader(io.StringIO(raw)):
        if len(record) == 5:
            yield record[:4] + [IRIS_NAMES[record[4].strip()]]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--wheels", type=pathlib.Path, required=True)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("data/public"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    n = write_rows(args.out / "adult.csv", ADULT_COLUMNS, adult(args.wheels))
    print(f"adult.csv: {n} rows")

    rows = titanic(args.wheels)
    header = next(rows)
    n = write_rows(args.out / "titanic.csv", header, rows)
    print(f"titanic.csv: {n} rows")

    n = write_rows(args.out / "iris.csv", IRIS_COLUMNS, iris(args.wheels))
    print(f"iris.csv: {n} rows")


if __name__ == "__main__":
    main()
