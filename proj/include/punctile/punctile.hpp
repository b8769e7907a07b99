#pragma once

// Umbrella header.

#include "punctile/constructions.hpp"
#include "punctile/document.hpp"
#include "punctile/lattice.hpp"
#include "punctile/render.hpp"
#include "punctile/schedules.hpp"
#include "punctile/solver.hpp"
#include "punctile/torus_strings.hpp"
