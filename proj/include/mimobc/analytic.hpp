// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ANALYTIC_HPP
#define MIMOBC_ANALYTIC_HPP

#include "mimobc/analytic/curve.hpp"
#include "mimobc/analytic/gamma_bounds.hpp"
#include "mimobc/analytic/scaling.hpp"
#include "mimobc/analytic/semiorth.hpp"
#include "mimobc/analytic/special.hpp"
#include "mimobc/analytic/wishart.hpp"

#endif  // MIMOBC_ANALYTIC_HPP
