#include "ltlc/oracle.hpp"

#include <stdexcept>

#include "ltlc/classify.hpp"
#include "ltlc/correspondence.hpp"
#include "ltlc/printer.hpp"
#include "ltlc/standard_translation.hpp"
#include "ltlc/translate.hpp"

namespace ltlc {

PathStructure::PathStructure(const LassoFrame& frame) : frame_(frame), n_(frame.n) {
  if (frame_.n == 0 || frame_.n > 32 || frame_.succ.size() != frame_.n)
    throw std::invalid_argument("malformed frame");
  for (uint32_t s : frame_.succ)
    if (s >= n_) throw std::invalid_argument("successor out of range");
  reach_.assign(n_, 0);
  for (uint32_t s = 0; s < n_; ++s) {
    // Walk the unique path until it revisits a state.
    uint32_t mask = 0;
    uint32_t cur = s;
    while (!((mask >> cur) & 1u)) {
      mask |= 1u << cur;
      cur = frame_.succ[cur];
    }
    reach_[s] = mask;
  }
}

std::vector<LassoFrame> enumerate_lasso_frames(uint32_t n_max) {
  if (n_max < 1 || n_max > 6)
    throw std::invalid_argument("frame enumeration supports 1 to 6 states");
  std::vector<LassoFrame> out;
  for (uint32_t n = 1; n <= n_max; ++n) {
    std::vector<uint32_t> succ(n, 0);
    while (true) {
      out.push_back(LassoFrame{n, succ});
      uint32_t i = 0;
      while (i < n && succ[i] + 1 == n) succ[i++] = 0;
      if (i == n) break;
      ++succ[i];
    }
  }
  return out;
}

std::vector<Valuation> all_valuations(const std::set<std::string>& atoms, uint32_t n) {
  uint32_t full = (1u << n);
  std::vector<Valuation> out;
  Valuation cur;
  for (const std::string& a : atoms) cur[a] = 0;
  while (true) {
    out.push_back(cur);
    auto it = cur.begin();
    while (it != cur.end() && it->second + 1 == full) (it++)->second = 0;
    if (it == cur.end()) break;
    ++it->second;
  }
  return out;
}

namespace {

uint32_t atom_mask(const Valuation& val, const std::string& name) {
  auto it = val.find(name);
  if (it == val.end()) throw std::invalid_argument("valuation misses atom: " + name);
  return it->second;
}

} // namespace

uint32_t ltl_label(const LtlPtr& f, const PathStructure& ps, const Valuation& val) {
  uint32_t n = ps.size();
  uint32_t full = ps.all_states();
  switch (f->kind) {
    case LtlKind::Atom:
      return atom_mask(val, f->name) & full;
    case LtlKind::True:
      return full;
    case LtlKind::False:
      return 0;
    case LtlKind::Not:
      return full & ~ltl_label(f->lhs, ps, val);
    case LtlKind::And:
      return ltl_label(f->lhs, ps, val) & ltl_label(f->rhs, ps, val);
    case LtlKind::Or:
      return ltl_label(f->lhs, ps, val) | ltl_label(f->rhs, ps, val);
    case LtlKind::Implies:
      return (full & ~ltl_label(f->lhs, ps, val)) | ltl_label(f->rhs, ps, val);
    case LtlKind::Iff: {
      uint32_t a = ltl_label(f->lhs, ps, val);
      uint32_t b = ltl_label(f->rhs, ps, val);
      return full & ~(a ^ b);
    }
    case LtlKind::G: {
      uint32_t a = ltl_label(f->lhs, ps, val);
      uint32_t out = 0;
      for (uint32_t w = 0; w < n; ++w)
        if ((ps.reachable(w) & ~a) == 0) out |= 1u << w;
      return out;
    }
    case LtlKind::F: {
      uint32_t a = ltl_label(f->lhs, ps, val);
      uint32_t out = 0;
      for (uint32_t w = 0; w < n; ++w)
        if (ps.reachable(w) & a) out |= 1u << w;
      return out;
    }
    case LtlKind::X: {
      uint32_t a = ltl_label(f->lhs, ps, val);
      uint32_t out = 0;
      for (uint32_t w = 0; w < n; ++w)
        if ((a >> ps.succ(w)) & 1u) out |= 1u << w;
      return out;
    }
    case LtlKind::Until: {
      uint32_t a = ltl_label(f->lhs, ps, val);
      uint32_t b = ltl_label(f->rhs, ps, val);
      uint32_t out = 0;
      for (uint32_t w = 0; w < n; ++w) {
        for (uint32_t v = 0; v < n; ++v) {
          if (!ps.le(w, v) || !((b >> v) & 1u)) continue;
          // Every state from w up to (strictly before) v must satisfy lhs.
          uint32_t between = 0;
          for (uint32_t u = 0; u < n; ++u)
            if (ps.le(w, u) && ps.lt(u, v)) between |= 1u << u;
          if ((between & ~a) == 0) {
            out |= 1u << w;
            break;
          }
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("unreachable formula kind");
}

bool ltl_holds(const LtlPtr& f, const PathStructure& ps, const Valuation& val,
               uint32_t state) {
  return (ltl_label(f, ps, val) >> state) & 1u;
}

namespace {

// Mutates env in place (bind, recurse, restore) to keep quantifier nesting
// from copying the whole environment at every level.
bool prime_holds_mut(const PrimePtr& f, const PathStructure& ps, const Valuation& val,
                     uint32_t state, VarEnv& env, uint32_t at) {
  switch (f->kind) {
    case PrimeKind::Atom:
      return (atom_mask(val, f->name) >> state) & 1u;
    case PrimeKind::True:
      return true;
    case PrimeKind::False:
      return false;
    case PrimeKind::Not:
      return !prime_holds_mut(f->lhs, ps, val, state, env, at);
    case PrimeKind::And:
      return prime_holds_mut(f->lhs, ps, val, state, env, at) &&
             prime_holds_mut(f->rhs, ps, val, state, env, at);
    case PrimeKind::Or:
      return prime_holds_mut(f->lhs, ps, val, state, env, at) ||
             prime_holds_mut(f->rhs, ps, val, state, env, at);
    case PrimeKind::G:
      for (uint32_t v = 0; v < ps.size(); ++v)
        if (ps.le(state, v) && !prime_holds_mut(f->lhs, ps, val, v, env, v)) return false;
      return true;
    case PrimeKind::Fx: {
      auto it = env.find(f->name);
      bool had = it != env.end();
      uint32_t saved = had ? it->second : 0;
      bool found = false;
      for (uint32_t x = 0; x < ps.size() && !found; ++x) {
        if (!ps.le(state, x)) continue;
        env[f->name] = x;
        found = prime_holds_mut(f->lhs, ps, val, x, env, at);
      }
      if (had)
        env[f->name] = saved;
      else
        env.erase(f->name);
      return found;
    }
    case PrimeKind::Ghat: {
      uint32_t lo = eval_term(f->lo, ps, env, at);
      uint32_t hi = eval_term(f->hi, ps, env, at);
      for (uint32_t u = 0; u < ps.size(); ++u)
        if (ps.le(lo, u) && ps.lt(u, hi) && !prime_holds_mut(f->lhs, ps, val, u, env, u))
          return false;
      return true;
    }
    case PrimeKind::X:
      return prime_holds_mut(f->lhs, ps, val, ps.succ(state), env, at);
  }
  throw std::invalid_argument("unreachable formula kind");
}

} // namespace

bool ltlprime_holds(const PrimePtr& f, const PathStructure& ps, const Valuation& val,
                    uint32_t state, const VarEnv& env, std::optional<uint32_t> anchor) {
  VarEnv scratch = env;
  return prime_holds_mut(f, ps, val, state, scratch, anchor.value_or(state));
}

uint32_t eval_term(const TermPtr& t, const PathStructure& ps, const VarEnv& env,
                   std::optional<uint32_t> anchor) {
  switch (t->kind) {
    case TermKind::EvalPoint:
      if (!anchor) throw std::invalid_argument("unresolved evaluation point");
      return *anchor;
    case TermKind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw std::invalid_argument("unbound path variable: " + t->name);
      return it->second;
    }
    case TermKind::Succ:
      return ps.succ(eval_term(t->sub, ps, env, anchor));
  }
  throw std::invalid_argument("unreachable term kind");
}

namespace {

bool fo_eval_mut(const FoPtr& f, const PathStructure& ps, const PredInterp& preds,
                 VarEnv& env, std::optional<uint32_t> anchor) {
  switch (f->kind) {
    case FoKind::Pred: {
      auto it = preds.find(f->name);
      if (it == preds.end()) throw std::invalid_argument("unbound predicate: " + f->name);
      return (it->second >> eval_term(f->t1, ps, env, anchor)) & 1u;
    }
    case FoKind::Le:
      return ps.le(eval_term(f->t1, ps, env, anchor), eval_term(f->t2, ps, env, anchor));
    case FoKind::Lt:
      return ps.lt(eval_term(f->t1, ps, env, anchor), eval_term(f->t2, ps, env, anchor));
    case FoKind::Eq:
      return eval_term(f->t1, ps, env, anchor) == eval_term(f->t2, ps, env, anchor);
    case FoKind::True:
      return true;
    case FoKind::False:
      return false;
    case FoKind::Not:
      return !fo_eval_mut(f->lhs, ps, preds, env, anchor);
    case FoKind::And:
      return fo_eval_mut(f->lhs, ps, preds, env, anchor) &&
             fo_eval_mut(f->rhs, ps, preds, env, anchor);
    case FoKind::Or:
      return fo_eval_mut(f->lhs, ps, preds, env, anchor) ||
             fo_eval_mut(f->rhs, ps, preds, env, anchor);
    case FoKind::Implies:
      return !fo_eval_mut(f->lhs, ps, preds, env, anchor) ||
             fo_eval_mut(f->rhs, ps, preds, env, anchor);
    case FoKind::Forall:
    case FoKind::Exists: {
      auto it = env.find(f->name);
      bool had = it != env.end();
      uint32_t saved = had ? it->second : 0;
      bool universal = f->kind == FoKind::Forall;
      bool result = universal;
      for (uint32_t v = 0; v < ps.size(); ++v) {
        env[f->name] = v;
        if (fo_eval_mut(f->lhs, ps, preds, env, anchor) != universal) {
          result = !universal;
          break;
        }
      }
      if (had)
        env[f->name] = saved;
      else
        env.erase(f->name);
      return result;
    }
  }
  throw std::invalid_argument("unreachable formula kind");
}

} // namespace

bool fo_eval(const FoPtr& f, const PathStructure& ps, const PredInterp& preds,
             const VarEnv& env, std::optional<uint32_t> anchor) {
  VarEnv scratch = env;
  return fo_eval_mut(f, ps, preds, scratch, anchor);
}

namespace {

bool so_eval_from(const SoFormula& f, size_t i, const PathStructure& ps, PredInterp& preds,
                  const VarEnv& env, std::optional<uint32_t> anchor) {
  if (i == f.prefix.size()) return fo_eval(f.matrix, ps, preds, env, anchor);
  uint32_t count = ps.all_states() + 1;
  const std::string& name = f.prefix[i].name;
  bool had = preds.count(name);
  uint32_t saved = had ? preds[name] : 0;
  bool result = f.quant == SoQuant::Forall;
  for (uint32_t mask = 0; mask < count; ++mask) {
    preds[name] = mask;
    bool inner = so_eval_from(f, i + 1, ps, preds, env, anchor);
    if (f.quant == SoQuant::Forall && !inner) {
      result = false;
      break;
    }
    if (f.quant == SoQuant::Exists && inner) {
      result = true;
      break;
    }
  }
  if (had)
    preds[name] = saved;
  else
    preds.erase(name);
  return result;
}

} // namespace

bool so_eval(const SoFormula& f, const PathStructure& ps, const PredInterp& preds,
             const VarEnv& env, std::optional<uint32_t> anchor) {
  PredInterp scratch = preds;
  return so_eval_from(f, 0, ps, scratch, env, anchor);
}

bool frame_valid(const LtlPtr& f, const PathStructure& ps, uint32_t state,
                 const std::set<std::string>& atoms) {
  for (const Valuation& val : all_valuations(atoms, ps.size()))
    if (!ltl_holds(f, ps, val, state)) return false;
  return true;
}

namespace {

PredInterp predicates_from_valuation(const Valuation& val) {
  PredInterp out;
  for (const auto& [atom, mask] : val) out[PredicateSymbol::for_atom(atom).name] = mask;
  return out;
}

Counterexample make_counterexample(const LassoFrame& frame, Valuation val, uint32_t state,
                                   std::string detail) {
  return Counterexample{frame, std::move(val), state, std::move(detail)};
}

} // namespace

CheckReport check_correspondence(const LtlPtr& f, uint32_t n_max) {
  CorrespondenceResult corr = correspondent(f, PathTerm::var("w"));
  std::set<std::string> atoms = atoms_of(corr.input);
  CheckReport report;
  for (const LassoFrame& frame : enumerate_lasso_frames(n_max)) {
    PathStructure ps(frame);
    std::vector<Valuation> vals = all_valuations(atoms, ps.size());
    for (uint32_t w = 0; w < ps.size(); ++w) {
      ++report.cases;
      bool valid = true;
      const Valuation* witness = nullptr;
      for (const Valuation& val : vals) {
        if (!ltl_holds(corr.input, ps, val, w)) {
          valid = false;
          witness = &val;
          break;
        }
      }
      VarEnv env{{"w", w}};
      bool raw = fo_eval(corr.correspondent, ps, {}, env);
      bool simplified = fo_eval(corr.simplified, ps, {}, env);
      if (raw != valid || simplified != valid) {
        std::string detail =
            raw != valid ? "correspondent disagrees with frame validity"
                         : "simplified correspondent disagrees with frame validity";
        report.counterexample = make_counterexample(
            frame, witness ? *witness : Valuation{}, w, detail);
        return report;
      }
    }
  }
  return report;
}

CheckReport check_tau_equivalence(const LtlPtr& f, uint32_t n_max) {
  LtlPtr input = desugar(f);
  PrimePtr image = tau(input);
  std::set<std::string> atoms = atoms_of(input);
  CheckReport report;
  for (const LassoFrame& frame : enumerate_lasso_frames(n_max)) {
    PathStructure ps(frame);
    for (const Valuation& val : all_valuations(atoms, ps.size())) {
      uint32_t direct = ltl_label(input, ps, val);
      for (uint32_t w = 0; w < ps.size(); ++w) {
        ++report.cases;
        bool translated = ltlprime_holds(image, ps, val, w);
        if (translated != ((direct >> w) & 1u)) {
          report.counterexample = make_counterexample(
              frame, val, w,
              translated ? "translation true, original false"
                         : "translation false, original true");
          return report;
        }
      }
    }
  }
  return report;
}

CheckReport check_boxed_lemma(const PrimePtr& boxed, uint32_t n_max) {
  VarSupply supply;
  supply.reserve("w");
  FoPtr access = boxed_accessibility(boxed, PathTerm::var("w"), "v", supply);
  PrimePtr atom = boxed;
  while (atom->kind != PrimeKind::Atom) atom = atom->lhs;
  std::set<std::string> atoms{atom->name};
  CheckReport report;
  for (const LassoFrame& frame : enumerate_lasso_frames(n_max)) {
    PathStructure ps(frame);
    for (const Valuation& val : all_valuations(atoms, ps.size())) {
      uint32_t mask = atom_mask(val, atom->name);
      for (uint32_t w = 0; w < ps.size(); ++w) {
        ++report.cases;
        bool direct = ltlprime_holds(boxed, ps, val, w);
        bool relational = true;
        for (uint32_t v = 0; v < ps.size() && relational; ++v) {
          VarEnv env{{"w", w}, {"v", v}};
          if (fo_eval(access, ps, {}, env) && !((mask >> v) & 1u)) relational = false;
        }
        if (direct != relational) {
          report.counterexample = make_counterexample(
              frame, val, w,
              direct ? "satisfaction true, accessibility reading false"
                     : "satisfaction false, accessibility reading true");
          return report;
        }
      }
    }
  }
  return report;
}

std::optional<uint32_t> monotonicity_violation(const PrimePtr& positive,
                                               const PathStructure& ps, const Valuation& h1,
                                               const Valuation& h2) {
  for (uint32_t w = 0; w < ps.size(); ++w)
    if (ltlprime_holds(positive, ps, h1, w) && !ltlprime_holds(positive, ps, h2, w))
      return w;
  return std::nullopt;
}

std::optional<uint32_t> antitonicity_violation(const PrimePtr& negative,
                                               const PathStructure& ps, const Valuation& h1,
                                               const Valuation& h2) {
  for (uint32_t w = 0; w < ps.size(); ++w)
    if (ltlprime_holds(negative, ps, h2, w) && !ltlprime_holds(negative, ps, h1, w))
      return w;
  return std::nullopt;
}

namespace {

CheckReport check_tonicity(const PrimePtr& f, uint32_t n_max, std::mt19937_64& rng,
                           uint32_t pairs, bool monotone) {
  std::set<std::string> atoms = atoms_of(f);
  CheckReport report;
  for (const LassoFrame& frame : enumerate_lasso_frames(n_max)) {
    PathStructure ps(frame);
    for (uint32_t p = 0; p < pairs; ++p) {
      Valuation h1, h2;
      for (const std::string& atom : atoms) {
        uint32_t big = static_cast<uint32_t>(rng()) & ps.all_states();
        h2[atom] = big;
        h1[atom] = big & static_cast<uint32_t>(rng());
      }
      ++report.cases;
      std::optional<uint32_t> hit = monotone ? monotonicity_violation(f, ps, h1, h2)
                                             : antitonicity_violation(f, ps, h1, h2);
      if (hit) {
        report.counterexample = make_counterexample(
            frame, h1, *hit,
            monotone ? "true under the smaller valuation but not the larger"
                     : "true under the larger valuation but not the smaller");
        return report;
      }
    }
  }
  return report;
}

} // namespace

CheckReport check_monotonicity(const PrimePtr& positive, uint32_t n_max,
                               std::mt19937_64& rng, uint32_t pairs) {
  return check_tonicity(positive, n_max, rng, pairs, true);
}

CheckReport check_antitonicity(const PrimePtr& negative, uint32_t n_max,
                               std::mt19937_64& rng, uint32_t pairs) {
  return check_tonicity(negative, n_max, rng, pairs, false);
}

CheckReport check_main_lemma(const PrimePtr& untied, uint32_t n_max) {
  auto outcome = classify_ltlprime_untied(untied);
  if (!outcome.untied())
    throw std::invalid_argument("main lemma check requires an untied formula: " +
                                outcome.reason);
  std::set<std::string> atoms = atoms_of(untied);

  VarSupply supply;
  supply.reserve("w");
  for (const std::string& a : atoms) supply.reserve(a);
  std::vector<PrimePtr> stack{untied};
  while (!stack.empty()) {
    PrimePtr cur = stack.back();
    stack.pop_back();
    if (cur->kind == PrimeKind::Fx) supply.reserve(cur->name);
    if (cur->lhs) stack.push_back(cur->lhs);
    if (cur->rhs) stack.push_back(cur->rhs);
  }
  FoPtr inclusion = inclusion_formula(outcome.shape, PathTerm::var("w"), supply);
  PrimePtr skeleton = shape_to_formula(replace_negatives_with_top(outcome.shape));

  CheckReport report;
  for (const LassoFrame& frame : enumerate_lasso_frames(n_max)) {
    PathStructure ps(frame);
    std::vector<Valuation> vals = all_valuations(atoms, ps.size());
    for (uint32_t w = 0; w < ps.size(); ++w) {
      bool witnessed = false;
      for (const Valuation& g : vals)
        if (ltlprime_holds(untied, ps, g, w)) {
          witnessed = true;
          break;
        }
      if (!witnessed) continue; // the lemma presupposes a satisfying valuation
      VarEnv env{{"w", w}};
      for (const Valuation& h : vals) {
        ++report.cases;
        bool covers = fo_eval(inclusion, ps, predicates_from_valuation(h), env);
        bool positive_part = ltlprime_holds(skeleton, ps, h, w);
        if (covers != positive_part) {
          report.counterexample = make_counterexample(
              frame, h, w,
              covers ? "minimal witnesses covered, positive skeleton false"
                     : "positive skeleton true, no covered minimal witnesses");
          return report;
        }
      }
    }
  }
  return report;
}

CheckReport check_simplifier_equivalence(const FoPtr& f, uint32_t n_max) {
  FoPtr reduced = simplify_fo(f);
  std::vector<PredicateSymbol> preds = predicates_of(f);
  CheckReport report;
  for (const LassoFrame& frame : enumerate_lasso_frames(n_max)) {
    PathStructure ps(frame);
    uint32_t combos = 1u << (ps.size() * preds.size());
    for (uint32_t combo = 0; combo < combos; ++combo) {
      PredInterp interp;
      for (size_t i = 0; i < preds.size(); ++i)
        interp[preds[i].name] = (combo >> (i * ps.size())) & ps.all_states();
      for (uint32_t w = 0; w < ps.size(); ++w) {
        ++report.cases;
        VarEnv env{{"w", w}};
        bool before = fo_eval(f, ps, interp, env);
        bool after = fo_eval(reduced, ps, interp, env);
        if (before != after) {
          Valuation as_val(interp.begin(), interp.end());
          report.counterexample = make_counterexample(
              frame, as_val, w,
              before ? "original true, simplified false" : "original false, simplified true");
          return report;
        }
      }
    }
  }
  return report;
}

} // namespace ltlc
