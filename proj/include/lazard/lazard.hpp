#pragma once

// Umbrella header: exact cylindrical algebraic decomposition with the Lazard
// projection and valuation-invariant lifting.

#include "lazard/algebraic.hpp"
#include "lazard/cad.hpp"
#include "lazard/cli.hpp"
#include "lazard/evaluator.hpp"
#include "lazard/gcd.hpp"
#include "lazard/interval.hpp"
#include "lazard/monomial.hpp"
#include "lazard/polynomial.hpp"
#include "lazard/projection.hpp"
#include "lazard/rational.hpp"
#include "lazard/real_roots.hpp"
#include "lazard/resultant.hpp"
#include "lazard/tower.hpp"
#include "lazard/unipoly.hpp"
#include "lazard/valuation.hpp"
