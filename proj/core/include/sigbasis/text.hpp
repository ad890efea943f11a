#ifndef SIGBASIS_TEXT_HPP
#define SIGBASIS_TEXT_HPP

#include <string>
#include <string_view>

#include "sigbasis/element.hpp"

namespace sigbasis {

/// `x^2*y^5`, `x^2*y^5*e_2`, `e_1`, `1`, `0`.
std::string format_monomial(const Monomial& m, const Ring& ring);
/// `b*c + a*d - 1/2*d`, or `0`.
std::string format_element(const Element& f);

/// Parses a monomial of the given space; the module index must fit its rank.
Monomial parse_monomial(std::string_view text, const Space& space);
/// Parses an index-free monomial over the ring's variables.
Monomial parse_multiplier(std::string_view text, const Ring& ring);
Element parse_element(std::string_view text, const SpacePtr& space);

} // namespace sigbasis

#endif
