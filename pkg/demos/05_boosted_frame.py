# The same two-particle state seen from a moving frame.
from multitime import Boost, ParticleKind, covariance_residual, initial_state, make_grid
from multitime.lorentz import intertwining_residual
from multitime.mts import convergence_order, gaussian_packet, product_field

b = Boost.from_velocity(0.3)
print("boost matrix:\n", b.matrix)
print("spinor intertwining residual:", intertwining_residual(b))

grid = make_grid(64, 40.0)
kind = ParticleKind.dirac(1.0)
f1 = gaussian_packet(grid, -2.0, 1.5, 0.5, [1.0, 0.3j])
f2 = gaussian_packet(grid, 3.0, 1.5, -0.4, [0.2, 1.0])
state = initial_state(product_field((grid, grid), [f1, f2]), (kind, kind))

# the transformed state solves the same equations in primed coordinates;
# the leftover is the O(h^2) error of the time difference quotient
hs = [0.04, 0.02, 0.01]
res = [covariance_residual(state, b, (0.2, -0.1), h) for h in hs]
for h, r in zip(hs, res):
    print(f"h={h:<5} residual={r:.3e}")
print("observed orders:", convergence_order(hs, res))
