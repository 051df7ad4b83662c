#pragma once

/// Umbrella header for the hypervel library.
///
/// hypervel implements bounded "velocity style" arithmetic on scalars,
/// normed balls, 3D velocity space, chained-coordinate spaces, and
/// weighted mean pairs, together with a property-verification engine
/// that checks the algebraic laws each structure claims (and exhibits
/// witnesses for the laws it deliberately lacks).

#include "ball.hpp"
#include "errors.hpp"
#include "extended_real.hpp"
#include "gyro.hpp"
#include "meanlike.hpp"
#include "multidim.hpp"
#include "params.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "scalar.hpp"
#include "verify.hpp"
