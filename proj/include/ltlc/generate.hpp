// Seeded, grammar-directed random formula generators for the empirical test
// corpora. All draws go through the passed-in engine, so a fixed seed yields
// the same formulas on every platform.
#pragma once

#include <cstdint>
#include <random>

#include "ltlc/formula.hpp"

namespace ltlc {

struct GenOptions {
  uint32_t max_depth = 4;
  uint32_t atoms = 2; // drawn from {p, q, r}, clamped to 1..3
};

// Arbitrary surface-syntax formula, including implication and equivalence.
LtlPtr random_ltl(std::mt19937_64& rng, const GenOptions& opts);

// Member of the untied fragment: boxed or negative leaves, conjunction, and
// until whose left argument is boxed or negative (F counts as true U _).
LtlPtr random_untied_ltl(std::mt19937_64& rng, const GenOptions& opts);

// Conjunction of one to three negated untied formulas.
LtlPtr random_sahlqvist(std::mt19937_64& rng, const GenOptions& opts);

// Closed negation-free formula of the extended language.
PrimePtr random_positive_prime(std::mt19937_64& rng, const GenOptions& opts);

// Closed formula from the antitone fragment: true, negated positive, or a
// G / bounded-G tower over one of those.
PrimePtr random_negative_prime(std::mt19937_64& rng, const GenOptions& opts);

// Closed untied formula of the extended language: boxed or negative leaves,
// conjunction, and point-binding existentials.
PrimePtr random_untied_prime(std::mt19937_64& rng, const GenOptions& opts);

// First-order formula over <=, <, =, S and up to `atoms` unary predicates,
// with w as the only free variable.
FoPtr random_fo(std::mt19937_64& rng, const GenOptions& opts);

// Every boxed formula of the extended language with prefix length <= max_len
// over the atom q and the operator alphabet {G, X, Gh[@,S(@)], Gh[@,S(S(@))],
// Gh[S(@),@]}: (5^(max_len+1) - 1) / 4 formulas.
std::vector<PrimePtr> enumerate_boxed_prime(uint32_t max_len);

} // namespace ltlc
