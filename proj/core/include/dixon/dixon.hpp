#pragma once

#include "dixon/bigint.hpp"
#include "dixon/bivar_poly.hpp"
#include "dixon/errors.hpp"
#include "dixon/families.hpp"
#include "dixon/identities.hpp"
#include "dixon/poly_matrix.hpp"
#include "dixon/rng.hpp"
#include "dixon/seq_eval.hpp"
