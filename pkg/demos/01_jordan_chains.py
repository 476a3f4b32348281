"""Inspect the defective eigenstructure of the three built-in systems.

Each Jacobian has a single eigenvalue u with a one-dimensional eigenspace,
so the usual eigenvector decomposition is unavailable. This demo detects the
Jordan block size by rank stabilization and builds the generalized
eigenvector chain, then verifies A P = P J directly.
"""

import numpy as np

from weakfvm import (
    block_size,
    build_chain,
    chain_defect,
    chain_determinant,
    get_model,
    jordan_matrix,
)

np.set_printoptions(precision=6, suppress=True)

states = {
    "pressureless": np.array([1.0, 2.0]),        # rho=1, u=2
    "modburgers": np.array([1.0, 1.0]),
    "further-modburgers": np.array([1.0, 1.0, 1.0, 1.0]),
}

for name, U in states.items():
    model = get_model(name)
    A = model.jacobian(U)
    lam = float(model.eigenvalue(U))
    s = block_size(A, lam)
    chain = build_chain(A, lam, s)
    P = chain.matrix()
    print(f"== {name} at U = {U}")
    print(f"   eigenvalue {lam}, Jordan block size {s}")
    print(f"   chain matrix P =\n{P}")
    print(f"   det P = {chain_determinant(chain):.6g}")
    print(f"   ||A P - P J||_inf = {chain_defect(A, chain):.2e}")
    print()

# The 4x4 chain leaves three components free; the determinant does not
# depend on them.
model = get_model("further-modburgers")
U = np.array([1.0, 1.0, 1.0, 1.0])
A, lam = model.jacobian(U), 1.0
rng = np.random.default_rng(7)
dets = [
    chain_determinant(build_chain(A, lam, 4, free_params=rng.uniform(-2, 2, 3)))
    for _ in range(5)
]
print("det P with random free parameters:", np.round(dets, 12))
print("closed form 1/(108 v^6) at v=1:   ", 1.0 / 108.0)
print("J =\n", jordan_matrix(lam, 4))
