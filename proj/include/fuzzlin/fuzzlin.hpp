#pragma once

// Umbrella header for the fuzzlin library: triangular/trapezoidal fuzzy
// numbers, centroid defuzzification and ranking, linguistic-grade group
// assessment, a dense-tableau simplex solver with duality, and the
// rank-solve-refuzzify pipeline for fuzzy linear programs.

#include "fuzzlin/errors.hpp"
#include "fuzzlin/fuzzy_number.hpp"
#include "fuzzlin/assessment.hpp"
#include "fuzzlin/simplex.hpp"
#include "fuzzlin/flp.hpp"
#include "fuzzlin/json_io.hpp"
#include "fuzzlin/cli.hpp"
