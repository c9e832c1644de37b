"""Random rational Lagrangians, built independently of any decomposition."""

import random

from pantsloop.symplectic import lagrangian_from_vectors, psi


def transvection(v, k):
    """Symplectic map x -> x + k psi(x, v) v on coordinate vectors."""
    return lambda x: tuple(a + k * psi(x, v) * b for a, b in zip(x, v))


def random_lagrangian(g, rng, moves=6):
    """Image of span(a_1..a_g) under a random product of integer transvections."""
    vecs = [tuple(int(i == j) for j in range(2 * g)) for i in range(g)]
    for _ in range(moves):
        v = tuple(rng.randint(-2, 2) for _ in range(2 * g))
        if not any(v):
            continue
        f = transvection(v, rng.choice((-1, 1)))
        vecs = [f(x) for x in vecs]
    return lagrangian_from_vectors(g, vecs)


def lagrangians(g, count, seed):
    rng = random.Random(seed)
    return [random_lagrangian(g, rng) for _ in range(count)]
