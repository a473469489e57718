# Joint detection density on flat and tilted spacelike lines.
from multitime import Hypersurface, ParticleKind, hypersurface_density, initial_state, make_grid, total_probability
from multitime.mts import gaussian_packet, product_field

grid = make_grid(128, 60.0)
kind = ParticleKind.dirac(1.0)
f1 = gaussian_packet(grid, -2.0, 1.5, 0.5, [1.0, 0.3j])
f2 = gaussian_packet(grid, 3.0, 1.5, -0.4, [0.2, 1.0])
state = initial_state(product_field((grid, grid), [f1, f2]), (kind, kind))

for v in [-0.5, -0.25, 0.0, 0.25, 0.5]:
    s = Hypersurface(0.0, v)
    rho = hypersurface_density(state, s)
    print(f"v={v:+.2f}  total probability={total_probability(rho, s, s):.12f}  min density={rho.values.min():.2e}")
