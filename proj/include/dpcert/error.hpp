#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpcert {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

// Input violates an operation precondition.
class DomainError : public Error {
  public:
    using Error::Error;
};

} // namespace dpcert
