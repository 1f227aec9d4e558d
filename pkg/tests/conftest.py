from fractions import Fraction

import pytest

from orbifold_hkr import generate

F = Fraction


def m(rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


# the four sweep groups plus extras with rational (non-integer) entries
SIGN_1D = (m([[-1]]),)
MINUS_I2 = (m([[-1, 0], [0, -1]]),)
ROT4 = (m([[0, -1], [1, 0]]),)
S3_PERM = (m([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
           m([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
C3_RAT = (m([[0, -1], [1, -1]]),)
C6_RAT = (m([[1, -1], [1, 0]]),)
D4 = (m([[0, -1], [1, 0]]), m([[1, 0], [0, -1]]))
C4_SCALED = (m([[0, -2], [F(1, 2), 0]]),)

SWEEP = {
    "C2 sign on A1": SIGN_1D,
    "minus I on A2": MINUS_I2,
    "C4 rotation on A2": ROT4,
    "S3 permutation on A3": S3_PERM,
}

ZOO = dict(SWEEP)
ZOO.update({
    "C3 rational on A2": C3_RAT,
    "C6 rational on A2": C6_RAT,
    "D4 on A2": D4,
    "C4 scaled on A2": C4_SCALED,
})


@pytest.fixture(scope="session")
def sweep_groups():
    return {name: generate(gens, 100000) for name, gens in SWEEP.items()}


@pytest.fixture(scope="session")
def zoo_groups():
    return {name: generate(gens, 100000) for name, gens in ZOO.items()}
