#pragma once

#include <string>
#include <vector>

#include "rsl/symfunc.hpp"

namespace rsl {

struct VerifyReport {
    std::string name;
    bool conjecture = false;  // conjecture reports never fail a build
    long instances = 0;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> counterexamples;  // capped
    bool ok() const { return failed == 0; }
};

// Names: leven, thm2k2, thm1, thm3a, thm3b, thm3c, corollary-m3, branch-m3,
// ret-3k, conj-2a1b, conj-rec52, conj-2a1bn, conj-mcol, conj-switchmn,
// conj-hall. Throws UnknownVerifier otherwise.
VerifyReport verify(const std::string& name, int bound, SymEngine& engine);

const std::vector<std::string>& verifier_names();
bool verifier_is_conjecture(const std::string& name);

}  // namespace rsl
