// Fixed list of checks reproducing the numeric claims of the library's
// subject matter, grouped into suites.

#ifndef SMALLCOX_VERIFY_HPP_
#define SMALLCOX_VERIFY_HPP_

#include <string>
#include <vector>

namespace smallcox {

  struct Claim {
    std::string id;
    std::string statement;  // what is asserted, with its source formula
    std::string expected;
    std::string computed;
    bool        pass    = false;
    double      seconds = 0.0;
  };

  struct VerificationReport {
    std::string        suite;
    std::vector<Claim> claims;

    bool passed() const;
  };

  std::vector<std::string> suite_names();  // includes "all"
  // Throws PreconditionError for an unknown suite.
  VerificationReport verify(std::string const& suite);

}  // namespace smallcox

#endif  // SMALLCOX_VERIFY_HPP_
