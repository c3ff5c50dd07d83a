class BoundResult():

    def __init__(self, value, minimizer_sigma=None, maximizer_alpha=None):
        assert value >= 0
        assert minimizer_sigma is None or minimizer_sigma >= 0
        assert maximizer_alpha is None or maximizer_alpha > 0

        self.value = value
        self.minimizer_sigma = minimizer_sigma
        self.maximizer_alpha = maximizer_alpha

    def __eq__(self, other):
        return isinstance(other, BoundResult) and \
            self.value == other.value and \
            self.minimizer_sigma == other.minimizer_sigma and \
            self.maximizer_alpha == other.maximizer_alpha

    def __hash__(self):
        return hash((self.value, self.minimizer_sigma, self.maximizer_alpha))

    def __repr__(self):
        return "<BoundResult> {} [sigma={}, alpha={}]".format(self.value, self.minimizer_sigma, self.maximizer_alpha)


class ThresholdResult():

    class Regime():
        # Threshold in P
        CLOSED_FORM = 'closed_form'  # P*(R, Rc) with R, Rc in (0, inf)
        NO_GAP = 'no_gap'  # R or Rc at 0 or inf: the improved bound never differs

        # Threshold in R
        PERCEPTION_ABOVE_VARIANCE = 'perception_above_variance'  # P >= sigma_X^2
        LINEAR = 'linear'  # Rc = log 2, single root zeta_3 / zeta_2
        QUADRATIC = 'quadratic'  # smaller root of zeta_1 z^2 - zeta_2 z + zeta_3

        ALL = {
            CLOSED_FORM,
            NO_GAP,
            PERCEPTION_ABOVE_VARIANCE,
            LINEAR,
            QUADRATIC,
        }

    def __init__(self, threshold, regime):
        assert threshold >= 0
        assert regime in ThresholdResult.Regime.ALL

        self.threshold = threshold
        self.regime = regime

    def __eq__(self, other):
        return isinstance(other, ThresholdResult) and \
            self.threshold == other.threshold and \
            self.regime == other.regime

    def __hash__(self):
        return hash((self.threshold, self.regime))

    def __repr__(self):
        return "<ThresholdResult> {} ({})".format(self.threshold, self.regime)
