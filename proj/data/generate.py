#!/usr/bin/env python3
"""Regenerates the bundled example datasets.

manufactured/  T(y, t) = 700 + 2 (t - 0.5), constant in height. With unit
               material properties the fraction solid is fs(t) = 2 (t - 0.5)
               and reaches 1 at t = 1.0.
cooling/       smooth synthetic cooling field, increasing with height, for
               calibrate runs.
"""
import math
from pathlib import Path

HERE = Path(__file__).resolve().parent


def write(path, positions, times, temp):
    with open(path, "w", newline="\n") as f:
        f.write("time," + ",".join(repr(y) for y in positions) + "\n")
        for t in times:
            f.write(repr(t) + "," + ",".join(repr(temp(y, t)) for y in positions) + "\n")


def main():
    times = [round(0.01 * k, 10) for k in range(201)]
    write(HERE / "manufactured" / "data.csv", [0.0, 0.05, 0.1], times,
          lambda y, t: 700.0 + 2.0 * (t - 0.5))

    times = [0.5 * k for k in range(301)]
    positions = [0.0, 0.02, 0.04, 0.07, 0.1, 0.14]
    write(HERE / "cooling" / "data.csv", positions, times,
          lambda y, t: round(600.0 + 500.0 * y + 800.0 * y * y
                             + 90.0 * math.exp(-t / 50.0) - 0.4 * t, 3))


if __name__ == "__main__":
    main()
