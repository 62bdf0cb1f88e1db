#pragma once

#include "fhardy/errors.hpp"
#include "fhardy/params.hpp"
#include "fhardy/special.hpp"
#include "fhardy/gauss_legendre.hpp"
#include "fhardy/quadrature.hpp"
#include "fhardy/monte_carlo.hpp"
#include "fhardy/constants.hpp"
#include "fhardy/profiles.hpp"
#include "fhardy/energies.hpp"
#include "fhardy/verify.hpp"
