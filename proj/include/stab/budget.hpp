#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace stab {

// Resource limits for one exact solve. Exhausting a budget raises
// BudgetExceeded; it never degrades into an approximate answer.
struct Budget {
    long max_nodes = 100'000'000;
    double max_seconds = 120.0;
};

struct SolveStats {
    long nodes = 0;
    double seconds = 0.0;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string query, SolveStats stats)
        : std::runtime_error("solver budget exceeded on " + query + " after "
            + std::to_string(stats.nodes) + " nodes")
        , query_(std::move(query))
        , stats_(stats)
    {
    }
    const std::string& query() const { return query_; }
    const SolveStats& stats() const { return stats_; }

private:
    std::string query_;
    SolveStats stats_;
};

// Shared node/time accounting for a single solve.
class BudgetClock {
public:
    explicit BudgetClock(const Budget& b, std::string query)
        : budget_(b)
        , query_(std::move(query))
        , start_(std::chrono::steady_clock::now())
    {
    }

    void tick(long n = 1)
    {
        nodes_ += n;
        if (nodes_ > budget_.max_nodes)
            throw BudgetExceeded(query_, stats());
        if ((nodes_ & 0x3ff) == 0 && elapsed() > budget_.max_seconds)
            throw BudgetExceeded(query_, stats());
    }

    double elapsed() const
    {
        return std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start_)
            .count();
    }

    SolveStats stats() const { return {nodes_, elapsed()}; }

private:
    Budget budget_;
    std::string query_;
    long nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace stab
