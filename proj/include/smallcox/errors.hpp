// Exception types shared by every module.
//
// Validation problems with user input throw ValidationError, violated
// preconditions throw PreconditionError, and enumerations that outgrow their
// element budget throw BudgetExceeded carrying the size reached.

#ifndef SMALLCOX_ERRORS_HPP_
#define SMALLCOX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smallcox {

  class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::size_t cap, std::size_t reached)
        : std::runtime_error("element budget of " + std::to_string(cap)
                             + " exceeded (reached "
                             + std::to_string(reached) + " elements)"),
          _cap(cap),
          _reached(reached) {}

    std::size_t cap() const noexcept {
      return _cap;
    }
    std::size_t reached() const noexcept {
      return _reached;
    }

   private:
    std::size_t _cap;
    std::size_t _reached;
  };

  // Raised when a lattice turns out to carry torsion where a free abelian
  // group is required.
  class TorsionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace smallcox

#endif  // SMALLCOX_ERRORS_HPP_
