#pragma once

// Umbrella header: exact arithmetic in the real tower Q(2cos(pi/2^(k+1))),
// Chebyshev machinery, Galois groups of the tower levels, recursive DCT
// factorization plans, exact/floating execution and verification, and
// kernel/graph/JSON emission.

#include "algdct/config.hpp"
#include "algdct/rational.hpp"
#include "algdct/dyadic.hpp"
#include "algdct/poly.hpp"
#include "algdct/tower.hpp"
#include "algdct/chebyshev.hpp"
#include "algdct/galois.hpp"
#include "algdct/plan.hpp"
#include "algdct/executor.hpp"
#include "algdct/codegen.hpp"
