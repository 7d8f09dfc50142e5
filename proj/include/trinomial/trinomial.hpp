#pragma once

// Umbrella header for the trinomial transform library.

#include "trinomial/catalog.hpp"
#include "trinomial/exact_int.hpp"
#include "trinomial/multi_poly.hpp"
#include "trinomial/ring.hpp"
#include "trinomial/symbolic.hpp"
#include "trinomial/ternary_json.hpp"
#include "trinomial/ternary.hpp"
#include "trinomial/transform_triangle.hpp"
#include "trinomial/trinomial_coefficients.hpp"
#include "trinomial/uni_poly.hpp"
#include "trinomial/verification.hpp"
