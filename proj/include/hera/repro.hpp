#pragma once

#include <string>
#include <vector>

#include "hera/simnet.hpp"

namespace hera {

/// One named check with its outcome.
struct ReproCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct ReproResult {
    std::string title;
    std::vector<ReproCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// The F4 reference configuration (q=2, L=2, T=1): fixed point order,
/// Lagrange bases checked coefficient-for-coefficient against the known
/// closed forms, decode identity on random inputs.
ReproResult repro_f4(size_t random_trials = 1000);

/// The F9 reference configuration (q=3, L=2, T=2): fixed 8-point list,
/// f-basis coefficient check with interpolation-identity fallback, g
/// interpolation identities, and the 2-MDS audit over all 15 subsets.
ReproResult repro_f9();

/// Point assignments used by the reference configurations, exposed for reuse.
std::vector<size_t> f4_reference_order();
std::vector<size_t> f9_reference_order();

} // namespace hera
