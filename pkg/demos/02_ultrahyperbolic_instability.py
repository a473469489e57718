# Two timelike directions: evolving in t1 from data on {t1 = 0}.
import numpy as np

from multitime import UltrahyperbolicData, classify_mode, craig_weinstein_filter, make_grid
from multitime.lattice import ComplexField, l2_norm
from multitime.mtd import growth_report, oscillatory_norm_bound
from multitime.probes import complex_normal

grid = make_grid(8, 2 * np.pi)
grids = (grid, grid, grid)  # (t2, x1, x2)

for mode in [(1, 0, 0), (2, 1, 1), (1, 3, 0), (1, 1, 0)]:
    mc = classify_mode(mode, 0.0)
    print(f"mode {mode}: {mc.kind.value}, rate {mc.rate:.4f}")

# a single growing mode e-folds at rate 1
data = UltrahyperbolicData.from_modes(grids, {(1, 0, 0): (1.0, 0.0)})
for t, n in growth_report(data, [0, 2, 4, 6, 8, 10]):
    print(f"t1={t:4.1f}  log norm={np.log(n):8.4f}")

# random data blow up; with timelike modes removed they stay bounded
rnd = UltrahyperbolicData(
    ComplexField(grids, complex_normal(1, (8, 8, 8), 0)),
    ComplexField(grids, complex_normal(1, (8, 8, 8), 1)),
)
calm = craig_weinstein_filter(rnd)
print("unfiltered ratio at t1=10:", growth_report(rnd, [10.0])[0][1] / l2_norm(rnd.value))
print("filtered ratio at t1=10:", growth_report(calm, [10.0])[0][1] / l2_norm(calm.value))
print("filtered bound:", oscillatory_norm_bound(calm) / l2_norm(calm.value))
