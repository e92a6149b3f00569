// Command-line frontend shared by the `twistnf` tool and the tests.
#pragma once

#include <ostream>

namespace twistnf {

// Exit status: 0 success, 1 invalid input or failed validation, 2 resource
// cap exceeded. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twistnf
