#pragma once

// Umbrella header for the exact (Z_2)^k fixed-point data engine.

#include "z2k/bitvec.hpp"
#include "z2k/constructions.hpp"
#include "z2k/counting.hpp"
#include "z2k/errors.hpp"
#include "z2k/fixed_points.hpp"
#include "z2k/indecomp.hpp"
#include "z2k/monomial.hpp"
#include "z2k/poly.hpp"
#include "z2k/poly_text.hpp"
#include "z2k/serialize.hpp"
#include "z2k/subspace.hpp"
