#include "ltlc/generate.hpp"

#include <vector>

namespace ltlc {

namespace {

// Engine output reduced modulo k. std::uniform_int_distribution is not
// reproducible across standard libraries, so we avoid it.
uint32_t pick(std::mt19937_64& rng, uint32_t k) { return static_cast<uint32_t>(rng() % k); }

const char* kAtomPool[] = {"p", "q", "r"};

std::string pick_atom(std::mt19937_64& rng, const GenOptions& opts) {
  uint32_t count = opts.atoms < 1 ? 1 : (opts.atoms > 3 ? 3 : opts.atoms);
  return kAtomPool[pick(rng, count)];
}

// --------------------------- plain LTL ---------------------------

LtlPtr gen_ltl(std::mt19937_64& rng, const GenOptions& opts, uint32_t depth) {
  uint32_t choice = depth == 0 ? pick(rng, 3) : pick(rng, 13);
  switch (choice) {
    case 0:
    case 1: return LtlFormula::Atom(pick_atom(rng, opts));
    case 2: return pick(rng, 2) ? LtlFormula::True() : LtlFormula::False();
    case 3: return LtlFormula::Not(gen_ltl(rng, opts, depth - 1));
    case 4: return LtlFormula::G(gen_ltl(rng, opts, depth - 1));
    case 5: return LtlFormula::F(gen_ltl(rng, opts, depth - 1));
    case 6: return LtlFormula::X(gen_ltl(rng, opts, depth - 1));
    case 7:
    case 8:
      return LtlFormula::And(gen_ltl(rng, opts, depth - 1), gen_ltl(rng, opts, depth - 1));
    case 9:
      return LtlFormula::Or(gen_ltl(rng, opts, depth - 1), gen_ltl(rng, opts, depth - 1));
    case 10:
      return LtlFormula::Implies(gen_ltl(rng, opts, depth - 1), gen_ltl(rng, opts, depth - 1));
    case 11:
      return LtlFormula::Iff(gen_ltl(rng, opts, depth - 1), gen_ltl(rng, opts, depth - 1));
    default:
      return LtlFormula::U(gen_ltl(rng, opts, depth - 1), gen_ltl(rng, opts, depth - 1));
  }
}

LtlPtr gen_ltl_positive(std::mt19937_64& rng, const GenOptions& opts, uint32_t depth) {
  uint32_t choice = depth == 0 ? pick(rng, 3) : pick(rng, 10);
  switch (choice) {
    case 0:
    case 1: return LtlFormula::Atom(pick_atom(rng, opts));
    case 2: return pick(rng, 2) ? LtlFormula::True() : LtlFormula::False();
    case 3:
      return LtlFormula::And(gen_ltl_positive(rng, opts, depth - 1),
                             gen_ltl_positive(rng, opts, depth - 1));
    case 4:
      return LtlFormula::Or(gen_ltl_positive(rng, opts, depth - 1),
                            gen_ltl_positive(rng, opts, depth - 1));
    case 5: return LtlFormula::G(gen_ltl_positive(rng, opts, depth - 1));
    case 6: return LtlFormula::F(gen_ltl_positive(rng, opts, depth - 1));
    case 7: return LtlFormula::X(gen_ltl_positive(rng, opts, depth - 1));
    default:
      return LtlFormula::U(gen_ltl_positive(rng, opts, depth - 1),
                           gen_ltl_positive(rng, opts, depth - 1));
  }
}

LtlPtr gen_ltl_boxed(std::mt19937_64& rng, const GenOptions& opts, uint32_t depth) {
  uint32_t prefix = pick(rng, depth + 1);
  LtlPtr f = LtlFormula::Atom(pick_atom(rng, opts));
  for (uint32_t i = 0; i < prefix; ++i)
    f = pick(rng, 2) ? LtlFormula::G(f) : LtlFormula::X(f);
  return f;
}

LtlPtr gen_ltl_negative(std::mt19937_64& rng, const GenOptions& opts, uint32_t depth) {
  if (depth == 0 || pick(rng, 6) == 0) {
    if (pick(rng, 3) == 0) return LtlFormula::True();
    return LtlFormula::Not(LtlFormula::Atom(pick_atom(rng, opts)));
  }
  return LtlFormula::Not(gen_ltl_positive(rng, opts, depth - 1));
}

LtlPtr gen_ltl_untied(std::mt19937_64& rng, const GenOptions& opts, uint32_t depth) {
  if (depth == 0)
    return pick(rng, 2) ? gen_ltl_boxed(rng, opts, 0) : gen_ltl_negative(rng, opts, 0);
  switch (pick(rng, 6)) {
    case 0: return gen_ltl_boxed(rng, opts, depth);
    case 1: return gen_ltl_negative(rng, opts, depth);
    case 2:
      return LtlFormula::And(gen_ltl_untied(rng, opts, depth - 1),
                             gen_ltl_untied(rng, opts, depth - 1));
    case 3: return LtlFormula::F(gen_ltl_untied(rng, opts, depth - 1));
    default: {
      LtlPtr guard = pick(rng, 2) ? gen_ltl_boxed(rng, opts, depth - 1)
                                  : gen_ltl_negative(rng, opts, depth - 1);
      return LtlFormula::U(guard, gen_ltl_untied(rng, opts, depth - 1));
    }
  }
}

// --------------------------- extended language ---------------------------

struct PrimeCtx {
  std::vector<std::string> scope; // Fx variables currently in scope
  VarSupply supply;
};

TermPtr gen_bound_term(std::mt19937_64& rng, const PrimeCtx& ctx) {
  TermPtr base;
  if (ctx.scope.empty() || pick(rng, 3) == 0)
    base = PathTerm::eval_point();
  else
    base = PathTerm::var(ctx.scope[pick(rng, static_cast<uint32_t>(ctx.scope.size()))]);
  uint32_t succs = pick(rng, 3);
  for (uint32_t i = 0; i < succs; ++i) base = PathTerm::succ(base);
  return base;
}

// Two syntactically distinct bound terms for a Ghat.
std::pair<TermPtr, TermPtr> gen_bounds(std::mt19937_64& rng, const PrimeCtx& ctx) {
  TermPtr lo = gen_bound_term(rng, ctx);
  TermPtr hi = gen_bound_term(rng, ctx);
  if (equal(lo, hi)) hi = PathTerm::succ(hi);
  return {lo, hi};
}

PrimePtr gen_prime_positive(std::mt19937_64& rng, const GenOptions& opts, PrimeCtx& ctx,
                            uint32_t depth) {
  uint32_t choice = depth == 0 ? pick(rng, 3) : pick(rng, 11);
  switch (choice) {
    case 0:
    case 1: return LtlPrimeFormula::Atom(pick_atom(rng, opts));
    case 2: return pick(rng, 2) ? LtlPrimeFormula::True() : LtlPrimeFormula::False();
    case 3:
    case 4:
      return LtlPrimeFormula::And(gen_prime_positive(rng, opts, ctx, depth - 1),
                                  gen_prime_positive(rng, opts, ctx, depth - 1));
    case 5:
      return LtlPrimeFormula::Or(gen_prime_positive(rng, opts, ctx, depth - 1),
                                 gen_prime_positive(rng, opts, ctx, depth - 1));
    case 6: return LtlPrimeFormula::G(gen_prime_positive(rng, opts, ctx, depth - 1));
    case 7: return LtlPrimeFormula::X(gen_prime_positive(rng, opts, ctx, depth - 1));
    case 8: {
      std::string x = ctx.supply.fresh("x");
      ctx.scope.push_back(x);
      PrimePtr body = gen_prime_positive(rng, opts, ctx, depth - 1);
      ctx.scope.pop_back();
      return LtlPrimeFormula::Fx(x, body);
    }
    default: {
      auto [lo, hi] = gen_bounds(rng, ctx);
      return LtlPrimeFormula::Ghat(lo, hi, gen_prime_positive(rng, opts, ctx, depth - 1));
    }
  }
}

PrimePtr gen_prime_negative(std::mt19937_64& rng, const GenOptions& opts, PrimeCtx& ctx,
                            uint32_t depth) {
  uint32_t choice = depth == 0 ? pick(rng, 2) : pick(rng, 6);
  switch (choice) {
    case 0: return LtlPrimeFormula::True();
    case 1:
      return LtlPrimeFormula::Not(depth == 0
                                      ? LtlPrimeFormula::Atom(pick_atom(rng, opts))
                                      : gen_prime_positive(rng, opts, ctx, depth - 1));
    case 2:
    case 3: return LtlPrimeFormula::G(gen_prime_negative(rng, opts, ctx, depth - 1));
    default: {
      auto [lo, hi] = gen_bounds(rng, ctx);
      return LtlPrimeFormula::Ghat(lo, hi, gen_prime_negative(rng, opts, ctx, depth - 1));
    }
  }
}

PrimePtr gen_prime_boxed(std::mt19937_64& rng, const GenOptions& opts, PrimeCtx& ctx,
                         uint32_t depth) {
  uint32_t prefix = pick(rng, depth + 1);
  PrimePtr f = LtlPrimeFormula::Atom(pick_atom(rng, opts));
  for (uint32_t i = 0; i < prefix; ++i) {
    switch (pick(rng, 3)) {
      case 0: f = LtlPrimeFormula::G(f); break;
      case 1: f = LtlPrimeFormula::X(f); break;
      default: {
        auto [lo, hi] = gen_bounds(rng, ctx);
        f = LtlPrimeFormula::Ghat(lo, hi, f);
        break;
      }
    }
  }
  return f;
}

PrimePtr gen_prime_untied(std::mt19937_64& rng, const GenOptions& opts, PrimeCtx& ctx,
                          uint32_t depth) {
  if (depth == 0)
    return pick(rng, 2) ? gen_prime_boxed(rng, opts, ctx, 0)
                        : gen_prime_negative(rng, opts, ctx, 0);
  switch (pick(rng, 6)) {
    case 0:
    case 1: return gen_prime_boxed(rng, opts, ctx, depth);
    case 2: return gen_prime_negative(rng, opts, ctx, depth);
    case 3:
      return LtlPrimeFormula::And(gen_prime_untied(rng, opts, ctx, depth - 1),
                                  gen_prime_untied(rng, opts, ctx, depth - 1));
    default: {
      std::string x = ctx.supply.fresh("x");
      ctx.scope.push_back(x);
      PrimePtr body = gen_prime_untied(rng, opts, ctx, depth - 1);
      ctx.scope.pop_back();
      return LtlPrimeFormula::Fx(x, body);
    }
  }
}

// --------------------------- first-order ---------------------------

struct FoCtx {
  std::vector<std::string> scope{"w"};
  VarSupply supply;
};

TermPtr gen_fo_term(std::mt19937_64& rng, const FoCtx& ctx) {
  TermPtr t = PathTerm::var(ctx.scope[pick(rng, static_cast<uint32_t>(ctx.scope.size()))]);
  uint32_t succs = pick(rng, 3);
  for (uint32_t i = 0; i < succs; ++i) t = PathTerm::succ(t);
  return t;
}

FoPtr gen_fo_atom(std::mt19937_64& rng, const GenOptions& opts, const FoCtx& ctx) {
  switch (pick(rng, 6)) {
    case 0: return FoFormula::Le(gen_fo_term(rng, ctx), gen_fo_term(rng, ctx));
    case 1: return FoFormula::Lt(gen_fo_term(rng, ctx), gen_fo_term(rng, ctx));
    case 2: return FoFormula::Eq(gen_fo_term(rng, ctx), gen_fo_term(rng, ctx));
    case 3: return pick(rng, 2) ? FoFormula::True() : FoFormula::False();
    default:
      return FoFormula::Pred(PredicateSymbol::for_atom(pick_atom(rng, opts)),
                             gen_fo_term(rng, ctx));
  }
}

FoPtr gen_fo(std::mt19937_64& rng, const GenOptions& opts, FoCtx& ctx, uint32_t depth) {
  if (depth == 0) return gen_fo_atom(rng, opts, ctx);
  // Cap quantifier nesting at three so brute-force equivalence checks stay
  // polynomially small.
  uint32_t roll = pick(rng, 9);
  if (roll >= 6 && ctx.scope.size() >= 4) roll = pick(rng, 6);
  switch (roll) {
    case 0:
    case 1: return gen_fo_atom(rng, opts, ctx);
    case 2: return FoFormula::Not(gen_fo(rng, opts, ctx, depth - 1));
    case 3:
      return FoFormula::And(gen_fo(rng, opts, ctx, depth - 1),
                            gen_fo(rng, opts, ctx, depth - 1));
    case 4:
      return FoFormula::Or(gen_fo(rng, opts, ctx, depth - 1),
                           gen_fo(rng, opts, ctx, depth - 1));
    case 5:
      return FoFormula::Implies(gen_fo(rng, opts, ctx, depth - 1),
                                gen_fo(rng, opts, ctx, depth - 1));
    default: {
      std::string v = ctx.supply.fresh("v");
      ctx.scope.push_back(v);
      FoPtr body = gen_fo(rng, opts, ctx, depth - 1);
      ctx.scope.pop_back();
      return pick(rng, 2) ? FoFormula::Forall(v, body) : FoFormula::Exists(v, body);
    }
  }
}

} // namespace

LtlPtr random_ltl(std::mt19937_64& rng, const GenOptions& opts) {
  return gen_ltl(rng, opts, opts.max_depth);
}

LtlPtr random_untied_ltl(std::mt19937_64& rng, const GenOptions& opts) {
  return gen_ltl_untied(rng, opts, opts.max_depth);
}

LtlPtr random_sahlqvist(std::mt19937_64& rng, const GenOptions& opts) {
  uint32_t m = 1 + pick(rng, 3);
  LtlPtr f = LtlFormula::Not(gen_ltl_untied(rng, opts, opts.max_depth));
  for (uint32_t i = 1; i < m; ++i)
    f = LtlFormula::And(f, LtlFormula::Not(gen_ltl_untied(rng, opts, opts.max_depth)));
  return f;
}

PrimePtr random_positive_prime(std::mt19937_64& rng, const GenOptions& opts) {
  PrimeCtx ctx;
  return gen_prime_positive(rng, opts, ctx, opts.max_depth);
}

PrimePtr random_negative_prime(std::mt19937_64& rng, const GenOptions& opts) {
  PrimeCtx ctx;
  return gen_prime_negative(rng, opts, ctx, opts.max_depth);
}

PrimePtr random_untied_prime(std::mt19937_64& rng, const GenOptions& opts) {
  PrimeCtx ctx;
  return gen_prime_untied(rng, opts, ctx, opts.max_depth);
}

FoPtr random_fo(std::mt19937_64& rng, const GenOptions& opts) {
  FoCtx ctx;
  ctx.supply.reserve("w");
  return gen_fo(rng, opts, ctx, opts.max_depth);
}

std::vector<PrimePtr> enumerate_boxed_prime(uint32_t max_len) {
  TermPtr at = PathTerm::eval_point();
  TermPtr s1 = PathTerm::succ(at);
  TermPtr s2 = PathTerm::succ(s1);
  std::vector<PrimePtr> out{LtlPrimeFormula::Atom("q")};
  size_t level_begin = 0;
  for (uint32_t len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      out.push_back(LtlPrimeFormula::G(out[i]));
      out.push_back(LtlPrimeFormula::X(out[i]));
      out.push_back(LtlPrimeFormula::Ghat(at, s1, out[i]));
      out.push_back(LtlPrimeFormula::Ghat(at, s2, out[i]));
      out.push_back(LtlPrimeFormula::Ghat(s1, at, out[i]));
    }
    level_begin = level_end;
  }
  return out;
}

} // namespace ltlc
