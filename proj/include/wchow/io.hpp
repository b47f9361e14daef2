#pragma once

// Canonical polynomial text grammar. The emitter prints terms in descending
// graded-lex order as [+|-]C*v1^e1*...*vn^en with ^1 omitted, zero-exponent
// variables omitted, and a coefficient of 1 printed only for the constant
// term. The parser accepts whitespace and arbitrary term order.

#include <iosfwd>
#include <string>

#include "wchow/ring.hpp"

namespace wchow {

std::string to_string(const GradedPolynomial& p);
std::string to_string(const RationalGradedPolynomial& p);

GradedPolynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace wchow
