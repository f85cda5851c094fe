#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "covolume/bernoulli.hpp"

namespace covol::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1, ///< selfcheck discrepancy or an unexpected engine error
    kUsage = 2,       ///< bad flags or invalid field / dimension
};

struct Context {
    /// Used by every exact computation the commands perform.
    BernoulliCache const * cache = &BernoulliCache::shared();
    /// Default format is `table` when true, `json` otherwise.
    bool interactive = false;
};

/// Runs one invocation; args[0] is the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err, Context const & ctx = {});

} // namespace covol::cli
