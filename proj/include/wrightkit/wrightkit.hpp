#pragma once

// Umbrella header for the Wright function toolkit.

#include "wrightkit/errors.hpp"
#include "wrightkit/rational.hpp"
#include "wrightkit/kernel.hpp"
#include "wrightkit/series.hpp"
#include "wrightkit/pfq.hpp"
#include "wrightkit/polynomial.hpp"
#include "wrightkit/poly_reduce.hpp"
#include "wrightkit/decompose.hpp"
#include "wrightkit/calculus.hpp"
#include "wrightkit/reference.hpp"
#include "wrightkit/io.hpp"
#include "wrightkit/verify.hpp"
