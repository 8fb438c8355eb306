#!/usr/bin/env python3
"""Compare the two rational substrates on a fixed inverse workload.

The hot kernels run on gmpy2.mpq by default and on fractions.Fraction when
GINV_PURE_PYTHON=1.  This script runs the same deterministic workload in a
subprocess per substrate and prints both timings.
"""

import os
import subprocess
import sys
import textwrap

WORKLOAD = textwrap.dedent(
    """
    import random, time
    from fractions import Fraction as F
    from ginv import (Matrix, hgroup_inverse, mp_inverse, solve_ax_system,
                      weak_hgroup_paths, build_bc_pair, bc_inverse,
                      NotBcInvertibleError)
    from ginv.scalar import GaussianRational as GR, SUBSTRATE

    pool = [GR(0), GR(1), GR(-1), GR(2), GR(-2), GR(F(1, 2)), GR(F(-1, 2)),
            GR(1, 1), GR(1, -1)]
    rng = random.Random(4242)
    mats = []
    for _ in range(40):
        n = rng.randint(3, 5)
        mats.append(Matrix([[rng.choice(pool) for _ in range(n)] for _ in range(n)]))

    t0 = time.perf_counter()
    for a in mats:
        mp_inverse(a)
        hgroup_inverse(a)
        solve_ax_system(a)
        weak_hgroup_paths(a)
        try:
            bc_inverse(a, build_bc_pair(a))
        except NotBcInvertibleError:
            pass
    elapsed = time.perf_counter() - t0
    print(f"{SUBSTRATE}: {elapsed:.3f} s for {len(mats)} matrices")
    """
)


def run(pure: bool) -> None:
    env = dict(os.environ)
    if pure:
        env["GINV_PURE_PYTHON"] = "1"
    else:
        env.pop("GINV_PURE_PYTHON", None)
    subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True)


if __name__ == "__main__":
    run(pure=False)
    run(pure=True)
