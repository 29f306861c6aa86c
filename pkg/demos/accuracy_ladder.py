"""Refine the advected sine and watch each order hit its design slope.

The run uses the accuracy-capped step size so the time integrator never
limits the spatial order, which is exactly how the headline convergence
tables are produced.  Expect fifth, seventh and ninth order slopes down
to the first few levels; the finest ninth-order errors sit near the
double-precision floor, so the last slope there is not meaningful.

    python3 demos/accuracy_ladder.py
"""
import time

from asedf import build, make_field, make_solver, l1_density_error, observed_orders

LEVELS = (20, 40, 80)


def refine(order):
    errors = []
    for n in LEVELS:
        setup = build("sine1d", nx=n)
        solver = make_solver(setup, order=order)
        field = make_field(setup)
        solver.advance(field, setup.t_end)
        errors.append(l1_density_error(field, setup.exact_rho))
    return errors


def main():
    print(f"{'N':>6s} " + " ".join(f"{f'order {k}':>14s}" for k in (5, 7, 9)))
    t0 = time.perf_counter()
    table = {k: refine(k) for k in (5, 7, 9)}
    for i, n in enumerate(LEVELS):
        print(f"{n:6d} " + " ".join(f"{table[k][i]:14.4e}" for k in (5, 7, 9)))
    print("slopes " + " ".join(
        f"{', '.join(f'{s:.2f}' for s in observed_orders(table[k])):>14s}"
        for k in (5, 7, 9)))
    print(f"({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
