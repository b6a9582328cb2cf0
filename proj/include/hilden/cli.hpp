#pragma once

#include <iosfwd>
#include <string>

namespace hilden::cli {

enum class Subcommand { Eval, Relations, Perm, Member, Motion, Plat, Coset };

std::string subcommand_token(Subcommand sub);

// One fully-specified invocation. The front end fills this from flags; tests
// construct it directly.
struct JobSpec {
    Subcommand subcommand = Subcommand::Eval;
    int genus = 0;
    int arcs = 1;
    std::string word;       // eval, perm, member, motion
    std::string psi;        // plat, coset
    std::string sigma;      // plat, coset
    std::string epsilon;    // coset
    std::string batch_file; // plat: one job per line "G N ; psi ; sigma"
    int probe = 0;          // motion: order-probe bound, 0 skips the probe
    bool json = false;
};

// Runs the job, writing the text or JSON report to `out`.
// Exit status: 0 success, 1 a mathematical check failed, 2 usage error
// (bad flags, unparsable word, out-of-range index, unusable config).
int run(const JobSpec& job, std::ostream& out);

// True when the HILDEN_OUTPUT environment variable selects JSON ("json",
// case-insensitive) as the default output mode.
bool default_json_output();

} // namespace hilden::cli
