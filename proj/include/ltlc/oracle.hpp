// Brute-force semantic ground truth over small deterministic serial transition
// systems. Every check here enumerates frames, valuations, and states
// exhaustively within the given bounds.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ltlc/formula.hpp"

namespace ltlc {

// Total successor function on {0..n-1}: every state starts exactly one path,
// shaped as a stem that runs into a cycle.
struct LassoFrame {
  uint32_t n = 1;
  std::vector<uint32_t> succ;
};

// Frame with its reachability closure. le(a,b) holds when b lies on the path
// from a (so le is reflexive and transitive but not antisymmetric: distinct
// states on a cycle reach each other). lt is le minus identity.
class PathStructure {
public:
  explicit PathStructure(const LassoFrame& frame);

  uint32_t size() const { return n_; }
  uint32_t succ(uint32_t s) const { return frame_.succ[s]; }
  bool le(uint32_t a, uint32_t b) const { return (reach_[a] >> b) & 1u; }
  bool lt(uint32_t a, uint32_t b) const { return a != b && le(a, b); }
  // All states reachable from s (including s), as a bitmask.
  uint32_t reachable(uint32_t s) const { return reach_[s]; }
  uint32_t all_states() const { return (n_ == 32 ? ~0u : (1u << n_) - 1u); }
  const LassoFrame& frame() const { return frame_; }

private:
  LassoFrame frame_;
  uint32_t n_;
  std::vector<uint32_t> reach_;
};

// Atom name -> bitmask of states where the atom is true.
using Valuation = std::map<std::string, uint32_t>;
// Path variable name -> state.
using VarEnv = std::map<std::string, uint32_t>;
// Predicate name -> bitmask of states.
using PredInterp = std::map<std::string, uint32_t>;

// All frames of every size 1..n_max in a fixed deterministic order (all n^n
// successor functions per size). Throws std::invalid_argument unless
// 1 <= n_max <= 6.
std::vector<LassoFrame> enumerate_lasso_frames(uint32_t n_max);

// All total valuations of `atoms` over n states, 2^(n * |atoms|) of them.
std::vector<Valuation> all_valuations(const std::set<std::string>& atoms, uint32_t n);

// Bitmask of states satisfying f (handles sugar directly).
uint32_t ltl_label(const LtlPtr& f, const PathStructure& ps, const Valuation& val);
bool ltl_holds(const LtlPtr& f, const PathStructure& ps, const Valuation& val, uint32_t state);

// Satisfaction for the extended language. The evaluation point in Ghat bounds
// resolves to `anchor` (defaults to the state the call starts at); G and Ghat
// re-center it at their quantified state while Fx and X leave it alone.
bool ltlprime_holds(const PrimePtr& f, const PathStructure& ps, const Valuation& val,
                    uint32_t state, const VarEnv& env = {},
                    std::optional<uint32_t> anchor = std::nullopt);

// Term and formula evaluation over the path structure. Unresolved variables,
// predicates, or evaluation points throw std::invalid_argument.
uint32_t eval_term(const TermPtr& t, const PathStructure& ps, const VarEnv& env,
                   std::optional<uint32_t> anchor = std::nullopt);
bool fo_eval(const FoPtr& f, const PathStructure& ps, const PredInterp& preds,
             const VarEnv& env, std::optional<uint32_t> anchor = std::nullopt);
// Quantifies the prefix predicates over all 2^n extensions.
bool so_eval(const SoFormula& f, const PathStructure& ps, const PredInterp& preds,
             const VarEnv& env, std::optional<uint32_t> anchor = std::nullopt);

// Truth of f at `state` under every valuation of `atoms`.
bool frame_valid(const LtlPtr& f, const PathStructure& ps, uint32_t state,
                 const std::set<std::string>& atoms);

struct Counterexample {
  LassoFrame frame;
  Valuation valuation; // empty when the failure does not depend on one
  uint32_t state = 0;
  std::string detail;
};

struct CheckReport {
  uint64_t cases = 0;
  std::optional<Counterexample> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

// Frame validity of a Sahlqvist formula coincides with its computed
// correspondent (both the raw and the simplified form) at every state of every
// frame with up to n_max states.
CheckReport check_correspondence(const LtlPtr& f, uint32_t n_max);

// f and its translation agree at every frame/valuation/state.
CheckReport check_tau_equivalence(const LtlPtr& f, uint32_t n_max);

// A boxed formula holds at w exactly when every state its accessibility
// relation reaches from w satisfies the atom.
CheckReport check_boxed_lemma(const PrimePtr& boxed, uint32_t n_max);

// For positive formulas truth survives growing the valuation; for negative
// formulas it survives shrinking it. Returns a violating state if any.
std::optional<uint32_t> monotonicity_violation(const PrimePtr& positive,
                                               const PathStructure& ps, const Valuation& h1,
                                               const Valuation& h2);
std::optional<uint32_t> antitonicity_violation(const PrimePtr& negative,
                                               const PathStructure& ps, const Valuation& h1,
                                               const Valuation& h2);

// Draws `pairs` random valuation pairs h1 <= h2 per frame and scans every
// state for a violation. The counterexample valuation is h1.
CheckReport check_monotonicity(const PrimePtr& positive, uint32_t n_max,
                               std::mt19937_64& rng, uint32_t pairs = 3);
CheckReport check_antitonicity(const PrimePtr& negative, uint32_t n_max,
                               std::mt19937_64& rng, uint32_t pairs = 3);

// For every (frame, state) where some valuation makes the untied formula true:
// a valuation includes some family of minimal witnesses (the existentially
// closed per-leaf inclusion statement) exactly when it makes the formula's
// positive skeleton true there.
CheckReport check_main_lemma(const PrimePtr& untied, uint32_t n_max);

// simplify_fo preserves truth at every frame, predicate interpretation, and
// value of the free variable w. The counterexample valuation is keyed by
// predicate names.
CheckReport check_simplifier_equivalence(const FoPtr& f, uint32_t n_max);

} // namespace ltlc
