// Command-line front end.  Exit status 0 on success, 1 when a computation
// fails (budget, malformed input, failed claims), 2 on usage errors.

#ifndef SMALLCOX_CLI_HPP_
#define SMALLCOX_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace smallcox {

  // args excludes the program name.
  int dispatch(std::vector<std::string> const& args, std::ostream& out,
               std::ostream& err);

}  // namespace smallcox

#endif  // SMALLCOX_CLI_HPP_
