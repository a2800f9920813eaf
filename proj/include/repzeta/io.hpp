#pragma once

#include <string>

#include "repzeta/ratfun.hpp"

namespace repzeta {

// Rendering: terms in ascending graded-lex order (q < t < X < Y < Z < u),
// decimal integer coefficients, e.g. "(1 - t)/(1 - q*t)".
std::string to_string(const Poly& p);
std::string to_string(const RatFun& f);

// Parser for the same grammar (plus '/' and unary minus), used for fixtures.
RatFun parse_ratfun(const std::string& text);
Poly parse_poly(const std::string& text);

} // namespace repzeta
