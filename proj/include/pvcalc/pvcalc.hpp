#pragma once

/// Everything: ring, configurations, invariant, blow-ups, builders, residues, JSON.

#include "birational.hpp"
#include "hodge_poly.hpp"
#include "io.hpp"
#include "models.hpp"
#include "numeric.hpp"
#include "pvint.hpp"
#include "random.hpp"
#include "ring_elem.hpp"
#include "root_field.hpp"
#include "surface.hpp"
#include "wpoly.hpp"
#include "zeta.hpp"
