#pragma once

#include <string>
#include <vector>

#include "symfun/symfn.hpp"

namespace symfun {

struct BenchRow {
    std::string method; // "iterated" or "direct"
    long long multiplier;
    double median_seconds;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool outputs_equal = true;

    std::string csv() const;
    double median_for(const std::string& method, long long multiplier) const;
};

/// Times the iterated-coproduct evaluation of s_lambda[n s_nu] against the
/// direct inner-coproduct method for each multiplier, reps runs per point,
/// each run on cold caches. Outputs of the two methods are compared on
/// every run. With parallel = true the two methods run in separate threads
/// on isolated caches.
BenchReport run_bench(const Partition& lambda, const Partition& nu,
                      const std::vector<long long>& multipliers, int reps,
                      bool parallel = false);

} // namespace symfun
