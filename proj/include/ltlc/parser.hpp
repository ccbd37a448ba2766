#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ltlc/formula.hpp"

namespace ltlc {

// Byte offsets into the input, [begin, end).
struct SourceSpan {
  size_t begin = 0;
  size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
  SourceSpan span;
  std::vector<std::string> expected;

  ParseError(const std::string& message, SourceSpan where, std::vector<std::string> exp)
      : std::runtime_error(message), span(where), expected(std::move(exp)) {}
};

// Surface LTL: atoms [a-z][a-zA-Z0-9_]*, true/false, ! & | -> <->, G F X U.
// U is right-associative; & and | associate to the left and & binds tighter.
LtlPtr parse_ltl(const std::string& text);

// Debug syntax for LTL': G, X, Fx[x], Gh[t1,t2] with terms @ | var | S(t).
PrimePtr parse_ltlprime(const std::string& text);

} // namespace ltlc
