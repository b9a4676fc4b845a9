#pragma once

#include "fracwos/errors.hpp"
#include "fracwos/examples.hpp"
#include "fracwos/geometry.hpp"
#include "fracwos/kernels.hpp"
#include "fracwos/quadrature.hpp"
#include "fracwos/sampling.hpp"
#include "fracwos/specfun.hpp"
#include "fracwos/theory.hpp"
#include "fracwos/wos.hpp"
