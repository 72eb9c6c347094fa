#pragma once

// Exact symbolic calculus for generalized partial-slice monogenic functions:
// Clifford algebra R_{p+q}, slice pairs, CK / generalized CK extensions, the
// Fueter-Sce map, the dual Radon transform, and the numeric oracles that
// cross-check them.

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/expr.hpp"
#include "gsm/extensions.hpp"
#include "gsm/numeric.hpp"
#include "gsm/polynomial.hpp"
#include "gsm/radon.hpp"
#include "gsm/rational.hpp"
#include "gsm/serialize.hpp"
#include "gsm/slice.hpp"
#include "gsm/verify.hpp"
