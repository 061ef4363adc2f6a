#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lklab {

// Bad (n, r, t, ...) arguments, ground-set overflow, incompatible graphs.
struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally bad data passed to a pure check (partial coloring, improper
// coloring, unverified map, non-independent member set).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds the configured size budget of an exact solver.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Some block of an independent set is not a full star; the set is not a
// maximum independent set (or the degenerate r = 2t case was fed in).
struct NotAStar : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state the theory rules out for valid inputs (empty block of a maximum
// set, a 2-cycle in a center digraph).
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A maximum independent set that no ground-set ordering reproduces. This
// would be a counterexample to the characterization and is reported with
// the ordering that was attempted.
struct CharacterizationViolation : std::runtime_error {
    CharacterizationViolation(const std::string& msg, std::vector<int> sigma)
        : std::runtime_error(msg), attempted_sigma(std::move(sigma))
    {
    }
    std::vector<int> attempted_sigma;
};

// Las Vegas retry cap exhausted without a total coloring.
struct RetriesExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed DIMACS file or label sidecar.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lklab
