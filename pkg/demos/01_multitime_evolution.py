# Two free Dirac particles, each with its own time variable.
import numpy as np

from multitime import ParticleKind, evolve_to, initial_state, make_grid
from multitime.lattice import l2_norm
from multitime.mts import diagonal_restriction, gaussian_packet, product_field, single_time_evolve

grid = make_grid(128, 40.0)
kinds = (ParticleKind.dirac(1.0), ParticleKind.dirac(2.0))

f1 = gaussian_packet(grid, -4.0, 1.5, 1.0, [1.0, 0.0])
f2 = gaussian_packet(grid, 4.0, 1.5, -1.0, [0.0, 1.0])
state = initial_state(product_field((grid, grid), [f1, f2]), kinds)

# unequal times: particle 1 at t=2, particle 2 at t=-1
later = evolve_to(state, (2.0, -1.0))
print("norm after evolution:", l2_norm(later.field))

# order of the two partial evolutions does not matter
a = evolve_to(state, (2.0, -1.0), order=[0, 1])
b = evolve_to(state, (2.0, -1.0), order=[1, 0])
print("path difference:", l2_norm(a.field - b.field))

# equal times reproduce ordinary single-time evolution with H1 + H2
t = 3.0
diff = diagonal_restriction(state, t).values - single_time_evolve(state.field, kinds, t).values
print("equal-time vs single-time max difference:", np.max(np.abs(diff)))
