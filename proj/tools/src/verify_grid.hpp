#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "lklab/budgets.hpp"

namespace lklab::cli {

struct VerifyOptions {
    int max_n = 7;
    uint64_t seed = 0;
    int sigma_samples = 50;
    int lemma_roundtrips = 20;
    Budgets budgets;
    int threads = 0; // 0 = hardware concurrency
};

// Runs the whole verification grid and returns the "checks" array plus a
// "summary" object. Items run on a worker pool; the output order is the
// deterministic parameter order regardless of scheduling.
nlohmann::json run_verify_grid(const VerifyOptions& opt);

// File-verification mode: reload a DIMACS export and its label sidecar and
// check the adjacency rule vertex pair by vertex pair. SchemaError on
// malformed input.
nlohmann::json run_verify_file(const std::string& graph_path, const std::string& labels_path);

// 0 all-pass, 1 any failure, 3 budget-exceeded skips only
int exit_code_for(const nlohmann::json& checks_and_summary);

} // namespace lklab::cli
