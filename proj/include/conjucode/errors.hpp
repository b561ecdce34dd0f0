#ifndef CONJUCODE_ERRORS_HPP
#define CONJUCODE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conjucode {

/// Malformed textual input. `position()` is the 0-based character offset
/// where parsing stopped.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          message_(what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }
    /// The message without the position suffix.
    const std::string& message() const noexcept { return message_; }

   private:
    std::string message_;
    std::size_t position_;
};

/// A polynomial that was required to divide x^N+1 does not.
class DivisibilityError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A search or enumeration request exceeds the configured caps.
class BoundExceeded : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

}  // namespace conjucode

#endif  // CONJUCODE_ERRORS_HPP
