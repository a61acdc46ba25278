#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cphi {

// Operands carry incompatible precisions, or a request exceeds the known digits.
class precision_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the operation's domain (even inverse, b >= 2^v, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cphi
