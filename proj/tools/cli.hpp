#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace upho::cli {

// args excludes the program name; returns the process exit code
// 0 ok, 1 verification failure, 2 guard/size, 3 bad input
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upho::cli
