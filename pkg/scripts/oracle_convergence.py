#!/usr/bin/env python3
"""Grid-refinement study of the finite-difference beam solver against the
closed-form profile of the reference design."""

from piezoscanner import equivalent_force, equivalent_section, reference_config
from piezoscanner.oracle import BeamProblem, convergence_orders, convergence_study


def main():
    cfg = reference_config()
    geometry = cfg.geometry()
    problem = BeamProblem(
        span=geometry.half_span,
        a=geometry.a,
        force=equivalent_force(geometry.stack, cfg.voltage),
        rigidity=equivalent_section(geometry.stack).rigidity,
    )
    counts = [101, 201, 401, 801, 1601]
    errors = convergence_study(problem, counts)
    orders = [None] + convergence_orders(counts, errors)
    print(f"{'nodes':>6} {'max-norm rel error':>19} {'order':>6}")
    for n, err, order in zip(counts, errors, orders):
        print(f"{n:>6} {err:>19.3e} {'' if order is None else f'{order:>6.3f}'}")


if __name__ == "__main__":
    main()
