#!/usr/bin/env python3
"""Export the full-device deflection profile of each reference design to
CSV (x_um,y_um), directly plottable with any plotting tool."""

import argparse
import dataclasses

from piezoscanner import reference_config, solve_scanner


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--voltage", type=float, default=50.0)
    parser.add_argument("--samples", type=int, default=401)
    parser.add_argument("--prefix", default="profile")
    args = parser.parse_args()

    base = reference_config()
    for length_um in (850, 600, 500):
        cfg = dataclasses.replace(
            base, beam_length=length_um * 1e-6, voltage=args.voltage
        )
        sol = solve_scanner(cfg.geometry(), cfg.voltage, samples=args.samples)
        path = f"{args.prefix}_{length_um}um.csv"
        with open(path, "w") as handle:
            handle.write("x_um,y_um\n")
            for u, y in sol.profile:
                handle.write(f"{u * 1e6:.9g},{y * 1e6:.9g}\n")
        print(f"{path}: tilt {sol.tilt * 57.29577951308232:.4f} deg, "
              f"y_max {sol.y_max * 1e6:.4f} um")


if __name__ == "__main__":
    main()
