#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"

namespace braidrep::cli {

enum ExitCode : int { Ok = 0, DomainFailure = 1, UsageFailure = 2 };

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3 -1" or the JSON form [[3,1],[1,-1]].
BraidWord parse_word_arg(int strands, const std::string& text);

} // namespace braidrep::cli
