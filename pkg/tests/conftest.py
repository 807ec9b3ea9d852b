import random

from hypothesis import strategies as st

from apollonian_kingdom.gaussian import GaussInt
from apollonian_kingdom.verify import random_unit_det_matrix

gauss_ints = st.builds(GaussInt, st.integers(-30, 30), st.integers(-30, 30))
nonzero_gauss = gauss_ints.filter(bool)
# unit-determinant matrices drawn through the same sampler the suites use
unit_det_matrices = st.integers(0, 2**32).map(lambda s: random_unit_det_matrix(random.Random(s), 12))
