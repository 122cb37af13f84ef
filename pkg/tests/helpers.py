import random

from cgoppa import Poly, PolyMatrix


def random_poly(rng: random.Random, F, max_deg: int) -> Poly:
    return Poly(F, [F.element(rng.randrange(F.q)) for _ in range(rng.randint(0, max_deg + 1))])


def random_matrix(rng: random.Random, F, k: int, n: int, max_deg: int) -> PolyMatrix:
    return PolyMatrix(F, [[random_poly(rng, F, max_deg) for _ in range(n)] for _ in range(k)])
