#!/usr/bin/env python3
"""Evaluate the three reference scanner designs (850/600/500 um beams at
50 V) and print tilt, maximum deflection, and actuation force."""

from piezoscanner import table1


def main():
    print(f"{'beam (um)':>10} {'tilt (deg)':>11} {'y_max (um)':>11} {'|F| (uN)':>9}")
    for rec in table1():
        print(
            f"{rec.param_value * 1e6:>10.0f} {rec.tilt_deg:>11.4f} "
            f"{rec.y_max_m * 1e6:>11.4f} {abs(rec.force_N) * 1e6:>9.3f}"
        )


if __name__ == "__main__":
    main()
