#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperturan {

/// Malformed input: bad edge arity, repeated vertex, out-of-range index.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters outside the window an operation accepts.
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The instance is larger than the configured exact-computation cap.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A documented hypothesis of an operation does not hold for the input.
class PreconditionError : public std::invalid_argument {
  public:
    PreconditionError(const std::string & message, std::size_t offending_index) :
        std::invalid_argument(message), offending_index_(offending_index)
    {
    }

    [[nodiscard]] auto offending_index() const noexcept -> std::size_t { return offending_index_; }

  private:
    std::size_t offending_index_;
};

} // namespace hyperturan
