#pragma once

#include <string>
#include <string_view>

#include "gwa/picard.hpp"

namespace gwa {

std::string to_string(const Rational& r);
std::string to_string(const Coordinate& c);
std::string to_string(const GWAParameters& params);  // "m = 0" | "m = 2" | "m = 1/2" | "m = generic"
std::string to_string(const RootToken& t);
std::string to_string(const RootMultiset& ms);
std::string to_string(Letter l);
std::string to_string(const StructureSequence& p);  // "window = lo..hi ; letters = ..."
std::string to_string(const SimpleModule& s);       // "X<3>", "Z<0>", "Ym<-4>", "M(1/3 + m)"
std::string to_string(const PicardElement& g);      // normal-form expression, "1" for identity

Rational parse_rational(std::string_view text);
GWAParameters parse_params(std::string_view text);        // the "m = ..." payload
RootMultiset parse_multiset(const GWAParameters& params, std::string_view text);
SimpleModule parse_simple(const GWAParameters& params, std::string_view text);

/// Picard expression grammar: terms joined by '*', applied left-to-right to
/// the right operand (leftmost outermost). Terms: S, S^k, w, H, H^k, i{...}
/// (integral m), i0{...} / im{...} (non-congruent), 1, or a bound name.
GeneratorWord parse_picexpr(const GWAParameters& params, std::string_view text);

}  // namespace gwa
