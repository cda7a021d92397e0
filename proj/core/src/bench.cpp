#include "symfun/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "symfun/plethysm.hpp"

namespace symfun {

namespace {

double time_once(const std::function<SymFn()>& run, SymFn& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = run();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    size_t n = xs.size();
    if (n == 0)
        return 0.0;
    return (n % 2 == 1) ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

struct MethodResult {
    std::vector<BenchRow> rows;
    std::vector<SymFn> outputs; // one per multiplier
};

MethodResult run_method(const std::string& name, const Partition& lambda, const Partition& nu,
                        const std::vector<long long>& multipliers, int reps) {
    MethodResult res;
    for (long long n : multipliers) {
        std::vector<double> times;
        SymFn value;
        for (int r = 0; r < reps; ++r) {
            ScopedMemo cold; // fresh tables for every measurement
            SymFn out;
            if (name == "iterated") {
                times.push_back(time_once(
                    [&] { return iterated_pleth_oracle(lambda, static_cast<int>(n), nu); }, out));
            } else {
                times.push_back(time_once(
                    [&] { return alpha_pleth(lambda, Rational(n), nu); }, out));
            }
            value = out;
        }
        res.rows.push_back({name, n, median(times)});
        res.outputs.push_back(value);
    }
    return res;
}

} // namespace

std::string BenchReport::csv() const {
    std::ostringstream os;
    os << "method,n,median_seconds\n";
    for (const auto& r : rows)
        os << r.method << "," << r.multiplier << "," << r.median_seconds << "\n";
    return os.str();
}

double BenchReport::median_for(const std::string& method, long long multiplier) const {
    for (const auto& r : rows)
        if (r.method == method && r.multiplier == multiplier)
            return r.median_seconds;
    throw DomainError("no bench row for " + method + " at n = " + std::to_string(multiplier));
}

BenchReport run_bench(const Partition& lambda, const Partition& nu,
                      const std::vector<long long>& multipliers, int reps, bool parallel) {
    if (reps < 1)
        throw DomainError("bench requires reps >= 1");
    for (long long n : multipliers)
        if (n < 1)
            throw DomainError("bench multipliers must be >= 1");

    MethodResult iterated, direct;
    if (parallel) {
        std::exception_ptr err_a, err_b;
        std::thread ta([&] {
            try {
                iterated = run_method("iterated", lambda, nu, multipliers, reps);
            } catch (...) {
                err_a = std::current_exception();
            }
        });
        std::thread tb([&] {
            try {
                direct = run_method("direct", lambda, nu, multipliers, reps);
            } catch (...) {
                err_b = std::current_exception();
            }
        });
        ta.join();
        tb.join();
        if (err_a)
            std::rethrow_exception(err_a);
        if (err_b)
            std::rethrow_exception(err_b);
    } else {
        iterated = run_method("iterated", lambda, nu, multipliers, reps);
        direct = run_method("direct", lambda, nu, multipliers, reps);
    }

    BenchReport report;
    report.rows = iterated.rows;
    report.rows.insert(report.rows.end(), direct.rows.begin(), direct.rows.end());
    for (size_t i = 0; i < multipliers.size(); ++i)
        if (!(iterated.outputs[i] == direct.outputs[i]))
            report.outputs_equal = false;
    return report;
}

} // namespace symfun
