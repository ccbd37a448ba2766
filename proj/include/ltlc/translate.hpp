// Translation from LTL into the extended language: U becomes an indexed F
// whose witness bounds a Ghat guard, F becomes an indexed F, and everything
// else maps homomorphically.
#pragma once

#include "ltlc/formula.hpp"

namespace ltlc {

// `at` is the term standing for the point the formula is evaluated at. Ghat
// guards produced for U use it as their lower bound; X advances it with S.
// Bound variables are drawn from `supply`, so they are pairwise distinct.
// The input must be desugared (throws std::invalid_argument otherwise).
PrimePtr tau(const LtlPtr& f, const TermPtr& at, VarSupply& supply);

// Convenience entry point: translates at the evaluation point with a fresh
// supply that has the formula's atom names reserved.
PrimePtr tau(const LtlPtr& f);

} // namespace ltlc
