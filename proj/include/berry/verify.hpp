#ifndef BERRY_VERIFY_HPP
#define BERRY_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "berry/config.hpp"

namespace berry {

struct VerifyCheck {
    std::string name;
    double tolerance;  // already scaled by the config's tolerance factor
    double defect;

    bool passed() const { return defect <= tolerance; }
};

// Runs the whole identity/consistency suite: rotation-matrix identities,
// eigen-consistency of the model, connection identities, and gauge
// invariance. Random draws come from the config seed.
std::vector<VerifyCheck> verify_suite(const RunConfig& cfg);

// Prints the table and returns the process exit code (0 pass, 3 fail).
int run_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace berry

#endif
