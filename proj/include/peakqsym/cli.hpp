#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace peakqsym {

// Parse and run one command line (excluding the program name). Normal output
// goes to `out`, diagnostics and timing go to `err`. Returns the process exit
// code: 0 on success, 1 on verification failure, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peakqsym
