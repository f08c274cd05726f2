#pragma once

#include <string>
#include <vector>

namespace myc {

using Simplex = std::vector<int>; ///< sorted vertex indices

/// Outcome of a verifier. Verifiers never throw; they list what failed.
struct Report {
    struct Violation {
        std::string check;
        std::string detail;
        Simplex witness;
    };
    std::vector<Violation> violations;
    /// Euler characteristic, filled in by verify_sphere_necessary.
    long long euler = 0;

    bool ok() const { return violations.empty(); }
    void fail(std::string check, std::string detail, Simplex witness = {});
    void merge(const Report& other);
    bool has(const std::string& check) const;
    std::string summary() const;
};

} // namespace myc
