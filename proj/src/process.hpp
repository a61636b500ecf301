#ifndef MRNAOPT_PROCESS_HPP
#define MRNAOPT_PROCESS_HPP

#include <string>

namespace mrnaopt::detail {

struct ProcessResult {
    int exit_code = -1;
    std::string output;
};

/// Run `command` through /bin/sh, feed `input` on stdin, capture stdout.
/// Throws on launch failure; a nonzero exit is reported in the result.
ProcessResult run_with_input(const std::string& command, const std::string& input);

} // namespace mrnaopt::detail

#endif
