#pragma once

// Umbrella header: exact combinatorics, samplers, the z-model, special
// functions, and the verification suites for random cyclations.

#include "cyclation/big.hpp"
#include "cyclation/chi_square.hpp"
#include "cyclation/constants.hpp"
#include "cyclation/counting.hpp"
#include "cyclation/cycle_type.hpp"
#include "cyclation/errors.hpp"
#include "cyclation/exact_dist.hpp"
#include "cyclation/experiment.hpp"
#include "cyclation/expint.hpp"
#include "cyclation/oracle.hpp"
#include "cyclation/pairing.hpp"
#include "cyclation/partitions.hpp"
#include "cyclation/quadrature.hpp"
#include "cyclation/rng.hpp"
#include "cyclation/sample.hpp"
#include "cyclation/stats.hpp"
#include "cyclation/verify.hpp"
#include "cyclation/zmodel.hpp"
