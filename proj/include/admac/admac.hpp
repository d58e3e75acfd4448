#pragma once

// Umbrella header for the angel-daemon macroeconomic uncertainty engine.

#include "admac/analysis.hpp"
#include "admac/dynamics.hpp"
#include "admac/errors.hpp"
#include "admac/fiscal.hpp"
#include "admac/game.hpp"
#include "admac/linear.hpp"
#include "admac/models.hpp"
#include "admac/perturbation.hpp"
#include "admac/profile.hpp"
#include "admac/rational.hpp"
#include "admac/report.hpp"
#include "admac/scenario.hpp"
#include "admac/schema.hpp"
#include "admac/utility_expr.hpp"
#include "admac/valuation.hpp"
