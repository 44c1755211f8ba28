#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace laman::cli {

enum ExitCode : int { kLaman = 0, kNotLaman = 1, kInputError = 2, kDisagreement = 3 };

/// Runs one command line (without the program name). Everything the
/// command prints goes to out/err; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker threads for `jobs` independent items: hardware concurrency,
/// capped by LAMAN_THREADS when that is a positive integer.
unsigned worker_count(std::size_t jobs);

}  // namespace laman::cli
