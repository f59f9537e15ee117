#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace limitcheeger::cli {

// Runs the limit-cheeger command line. Exit codes: 0 success, 1 a verified
// mathematical identity or inequality failed, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace limitcheeger::cli
