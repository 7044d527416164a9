#pragma once

// Spectral (generalized Gini) inequality measures for univariate and
// multivariate empirical distributions, exact planar representative
// endowments, and uniform Gini dominance tests.

#include "specgini/directions.hpp"
#include "specgini/distortion.hpp"
#include "specgini/dominance.hpp"
#include "specgini/endowment.hpp"
#include "specgini/experiment.hpp"
#include "specgini/geometry.hpp"
#include "specgini/io.hpp"
#include "specgini/mre.hpp"
#include "specgini/sample.hpp"
#include "specgini/stochastic_dominance.hpp"
#include "specgini/svg.hpp"
