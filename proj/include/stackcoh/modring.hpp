#pragma once

#include <cstdint>
#include <vector>

namespace gcoh {

// Sparse vector over Z/q: sorted (index, value) pairs, values in [1, q).
using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

// Row echelon over Z/q for q = p^e < 2^31 (Howell-complete: shadow rows
// p^{e-s} * pivot are processed too, so span sizes and kernels are exact).
struct HowellResult {
    std::size_t pivots = 0;
    long log_size = 0;              // log_p |row span|
    std::vector<ModRow> kernel;     // combinations of input rows that vanish
};

// When track_kernel is set, the i-th input row carries tag e_i and tags of
// vanished rows are reported; tag dimension = rows.size().
HowellResult howell_process(std::uint64_t q, std::uint64_t p, int e,
                            std::vector<ModRow> rows, bool track_kernel);

// Rank of a sparse integer matrix modulo a prime (rows as sparse integer
// entries reduced mod p internally).
std::size_t rank_mod_p(std::uint64_t p, const std::vector<std::vector<std::pair<std::uint32_t, long>>>& rows);

// Incremental left-looking Gaussian rank mod a small prime (p < 256):
// sparse pivot rows, dense scratch, forward-only candidate queue (pivot rows
// are sorted with their leading column first, so fill lands on later
// columns). Rank is monotone in the rows added, so callers with an upper
// bound can stop streaming as soon as it is reached.
class StreamRankModP {
  public:
    StreamRankModP(std::uint64_t p, std::size_t cols);

    // feed one sparse integer row; returns the rank so far
    std::size_t add_row(const std::vector<std::pair<std::uint32_t, long>>& row);
    std::size_t rank() const { return rank_; }

  private:
    std::uint64_t p_;
    std::size_t cols_, rank_ = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> pivot_;
    std::vector<std::uint8_t> inv_;
    std::vector<std::uint8_t> scratch_;
    std::vector<std::uint32_t> heap_, touched_;
};

}  // namespace gcoh
