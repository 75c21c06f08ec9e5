"""
    Emulated projective measurement of a single qubit.

"""

from math import ceil, sqrt

from ..errors import SpecError


def shots_for_epsilon(epsilon):
    """Worst-case shot count for additive error epsilon on a +-1 observable: ceil(1/eps^2)."""
    if not 0 < epsilon < 1:
        raise SpecError("epsilon must lie in (0, 1), got %r" % (epsilon,))
    # round first so 1/0.05**2 = 399.99999999999994 maps to 400
    return int(ceil(round(1.0 / epsilon ** 2, 9)))


class BernoulliShots:
    """
    Draws +-1 measurement outcomes with P(+1) = probability.
        Args required:
            probability: (Float in [0, 1]) probability of outcome +1 e.g. 0.75
            shots: (Integer). Number of repetitions e.g. 10000
            rng: Xoshiro256StarStar stream (anything with binomial(n, p))
    """

    def __init__(self, probability, shots, rng):
        if shots < 1:
            raise SpecError("shots must be >= 1, got %r" % (shots,))
        self.probability = min(max(float(probability), 0.0), 1.0)
        self.shots = int(shots)
        self.rng = rng
        self._hits = None

    @property
    def hits(self):
        if self._hits is None:
            self._hits = int(self.rng.binomial(self.shots, self.probability))
        return self._hits

    @property
    def p_hat(self):
        return self.hits / self.shots

    def estimate(self):
        return 2.0 * self.p_hat - 1.0

    def stderr(self):
        return 2.0 * sqrt(self.p_hat * (1.0 - self.p_hat) / self.shots)

