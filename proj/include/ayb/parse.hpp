#pragma once

#include <string>

#include "ayb/rings.hpp"

namespace ayb {

// Coefficient-literal grammar shared by fixture files and the CLI:
//
//   expr    := ['-'] term { ('+' | '-') term }
//   term    := factor { '*' factor | '/' posint }
//   factor  := primary [ '^' posint ]
//   primary := integer | identifier | 'i' | '(' expr ')'
//
// Identifiers must be declared indeterminates of the ring. Division is only
// by nonzero integer literals. 'i' is the imaginary unit; unavailable over
// prime fields.
GaussScalar parse_scalar(const std::string& text, const GaussRing& ring);
PolyScalar parse_scalar(const std::string& text, const PolyRing& ring);
FFScalar parse_scalar(const std::string& text, const FFRing& ring);

std::string render_scalar(const GaussScalar& s);
std::string render_scalar(const PolyScalar& s);
std::string render_scalar(const FFScalar& s);

} // namespace ayb
