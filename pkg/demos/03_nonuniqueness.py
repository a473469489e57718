# Two different solutions with identical data on {t1 = t2 = 0}.
import numpy as np

from multitime import make_grid, nonuniqueness_witness

grid = make_grid(16, 2 * np.pi)
w = nonuniqueness_witness(grid, (1, 1, 1, 1))
rep = w.report()
print("value and first derivatives on the shared slice:", rep.shared_data_deviation)
print("sup |phi_b - phi_a|:", rep.sup_difference)

for h in [0.1, 0.05, 0.025, 0.0125]:
    print(f"h={h:<7} residual={w.equation_residual(h):.3e}")
