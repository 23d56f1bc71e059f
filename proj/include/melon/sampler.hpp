#pragma once

// Exact uniform random generation of watermelons by sequential completion
// counting: at every time step the joint moves are weighted by the exact
// number of continuations (an LGV determinant of ballot counts) and the move
// is drawn with exact integer arithmetic, so the output distribution is
// exactly uniform.
//
// Reproducibility contract: draw number i of a run with seed S is generated
// by a SplitMix64 stream whose initial state is mix64(S + (i+1) * GOLDEN),
// where mix64 is the SplitMix64 finalizer and GOLDEN = 0x9E3779B97F4A7C15.
// Draws are therefore independent of execution order and may run in
// parallel.

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "melon/exact.hpp"

namespace melon {

struct SamplerConfig {
    WatermelonSpec spec;
    std::uint64_t seed = 0;
    long count = 1;
};

struct EmpiricalStats {
    std::map<long, long> histogram;
    double sample_mean = 0.0;
    double sample_var = 0.0; // unbiased (divides by count-1)
    long count = 0;
};

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    std::uint64_t next();

  private:
    std::uint64_t state_;
};

// Number of ways to complete branches at `positions` (time tau) to the
// standard endpoints: det_{i,j} ballot_count(positions_i, 2j, 2n - tau).
Int completions(const std::vector<long>& positions, long tau, const WatermelonSpec& spec);

// Thread-safe memo of completion counts, scoped to a draw batch.
class CompletionCache {
  public:
    const Int& get(const std::vector<long>& positions, long tau, const WatermelonSpec& spec);

  private:
    std::map<std::pair<long, std::vector<long>>, Int> memo_;
    std::mutex mu_;
};

// One exactly-uniform draw, deterministic in (cfg.seed, draw_index).
PathFamily sample_watermelon(const SamplerConfig& cfg, long draw_index, CompletionCache& cache);

// Height histogram over cfg.count independent draws.
EmpiricalStats empirical_height(const SamplerConfig& cfg);

} // namespace melon
