#pragma once

// Umbrella header: exact-arithmetic tools for products of n-cycles in the
// symmetric group (cycle-count polynomials, factorization counts, same-cycle
// probabilities, root location) plus the brute-force oracle and the
// invariant sweeps tying them together.

#include "rational.hpp"
#include "polynomial.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "stirling.hpp"
#include "cycle_polynomials.hpp"
#include "factorization.hpp"
#include "oracle.hpp"
#include "root_analysis.hpp"
#include "serialization.hpp"
#include "verify.hpp"
