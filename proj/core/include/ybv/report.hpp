#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ybv {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct CheckReport {
    std::string check_id;
    std::map<std::string, std::string> params;
    Status status = Status::Fail;
    bool exact = true;
    std::optional<double> max_residual;  // float checks only
    std::int64_t elapsed_ms = 0;
    std::optional<std::string> detail;

    bool passed() const { return status == Status::Pass; }
};

inline constexpr std::size_t kDefaultBudgetDim = 4096;

// YBV_BUDGET_DIM if set and valid, otherwise kDefaultBudgetDim.
std::size_t default_budget_dim();

struct CheckOptions {
    std::size_t budget_dim = default_budget_dim();
    // Adds 1 to R_k at every spectral point; negative control only.
    std::optional<int> perturb_k;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ybv
