#ifndef MIXEDTORIC_PARSER_HPP
#define MIXEDTORIC_PARSER_HPP

#include <map>
#include <string>

#include "mixedtoric/mixedpoly.hpp"

namespace mixedtoric {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

/// Parse the expression grammar:
///   expr   := ['-'] term (('+'|'-') term)* ;
///   term   := factor ('*' factor)* ;
///   factor := number | param | var | '(' expr ')' | factor '^' uint ;
///   var    := 'z' uint | '~z' uint ;
///   number := integer | integer '/' integer | decimal ;
/// Free identifiers must appear in `bindings`; the imaginary unit `i` is
/// predefined unless rebound. Ambient dimension is max(var index, min_dim).
MixedPolynomial parse(const std::string& text,
                      const std::map<std::string, ExactComplex>& bindings = {},
                      int min_dim = 2);

/// Exact rational from "a", "a/b", or a decimal literal like "2.5".
Rational parse_rational(const std::string& text);

}  // namespace mixedtoric

#endif
