#ifndef CONJUCODE_DESCRIPTOR_HPP
#define CONJUCODE_DESCRIPTOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "conjucode/acc.hpp"
#include "conjucode/binpoly.hpp"
#include "conjucode/f4.hpp"

namespace conjucode {

/// A code given by its length and either the generator g of its binary
/// image or one generator vector v over F4.
struct Descriptor {
    std::size_t n = 0;
    std::optional<BinPoly> g;
    std::optional<F4Vector> v;
};

/// "n=7 g=(1+x)^2*(1+x+x^3)" or "n=3 v=W,w,0", fields separated by blanks.
/// Throws ParseError (position into `text`) on malformed input, a missing or
/// doubled source, or a vector whose length is not n.
Descriptor parse_descriptor(std::string_view text);
/// Canonical form; g is printed expanded.
std::string format_descriptor(const Descriptor& d);
/// "g=..." or "v=...".
std::string format_source(const Descriptor& d);

/// Throws DivisibilityError when g does not divide x^{2n}+1.
AccCode build_code(const Descriptor& d);

}  // namespace conjucode

#endif  // CONJUCODE_DESCRIPTOR_HPP
