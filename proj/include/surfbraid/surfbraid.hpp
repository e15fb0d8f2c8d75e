#ifndef SURFBRAID_SURFBRAID_HPP_
#define SURFBRAID_SURFBRAID_HPP_

// Umbrella header.

#include "abelianization.hpp"
#include "arith.hpp"
#include "braid.hpp"
#include "config.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "group_algebra.hpp"
#include "ideal.hpp"
#include "linalg.hpp"
#include "permutation.hpp"
#include "surface.hpp"
#include "symplectic.hpp"
#include "verifier.hpp"

#endif  // SURFBRAID_SURFBRAID_HPP_
