#pragma once

#include <string>
#include <vector>

namespace dsn {

struct VerifyReport {
    std::vector<std::string> lines;
    bool ok = true;

    std::string text() const;
};

// Seed-pinned self-check: quantizer solvers against each other and the
// exhaustive oracle, indexed vs naive matching, and the symmetry closure
// invariants of full simulations. Deterministic report text.
VerifyReport verify();

} // namespace dsn
