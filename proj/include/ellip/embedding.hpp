// Four-dimensional ellipsoid embedding criterion and the capacity staircase.
//
// For positive rationals (a, b) the sequence N_k(a, b) lists all values
// i*a + j*b with integers i, j >= 0, sorted ascending with repetitions;
// N_0 = 0. E(a, b) embeds into E(a', b') exactly when
// N_k(a, b) <= N_k(a', b') for every k.
//
// The stream produces the sequence lazily from a column frontier: column j
// holds the progression j*b, j*b + a, j*b + 2a, ... and column j+1 is
// activated the moment column j's head is emitted. At any time the heap
// holds one node per active column, so memory stays O(sqrt(K)) after K
// emissions. Two elementary bounds make finite verification rigorous:
//
//   t^2/(2ab) <= #{(i,j) : i*a + j*b <= t} <= (t+a)(t+b)/(2ab)
//
// (lattice-point count of a right triangle), which rearranges to
//
//   sqrt(2k*ab) - a - b <= N_k(a, b) <= sqrt(2(k+1)*ab).
//
// When the source and target volumes differ, these bounds yield an explicit
// cutoff k* beyond which no new violation can appear; equal volumes admit no
// finite cutoff and the verdict stays partial.
#pragma once

#include "ellip/rat.hpp"
#include "ellip/progressions.hpp"
#include "ellip/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ellip {

class NkStream {
public:
    // Both parameters must be positive. The sequence is symmetric in (a, b).
    NkStream(Rat a, Rat b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    // Count of values emitted so far; the next call to next() returns
    // N_{emitted()}.
    std::int64_t emitted() const { return emitted_; }

    Rat next();

    // Hot-path variant: writes the next value scaled by common_den().
    void next_scaled(BigInt& value_out);

    const BigInt& common_den() const { return stream_.common_den(); }

    // High-water mark of the column frontier; stays O(sqrt(K)).
    std::size_t max_heap_size() const { return stream_.max_heap_size(); }

private:
    void activate_columns(int column, std::int64_t position);

    Rat a_, b_;
    ProgressionMergeStream stream_;
    std::int64_t emitted_ = 0;
    int columns_ = 0;
};

// [N_0, ..., N_K]; K+1 values.
std::vector<Rat> nk_values(const Rat& a, const Rat& b, std::int64_t K);

// lo <= sqrt(r) <= hi with hi - lo <= 1/scale; r must be >= 0, scale >= 1.
std::pair<Rat, Rat> sqrt_bounds(const Rat& r, const BigInt& scale);

enum class EmbedOutcome { Embeds, Fails, PassUpToK };

struct EmbedVerdict {
    EmbedOutcome outcome;
    // Least k with N_k(source) > N_k(target); set only when outcome == Fails.
    std::optional<std::int64_t> witness_k;
    // Last index actually compared.
    std::int64_t checked_up_to = 0;
    // Finite verification cutoff; absent when the volumes are equal.
    std::optional<BigInt> cutoff_k;
};

// Decides E(source) -> E(target) for 2-dimensional ellipsoids (the 4D
// symplectic case). Scans k = 0..min(K, k*). Outcomes:
//   Fails      a violating index was found (witness_k is the least one);
//   Embeds     no violation and the scan reached the rigorous cutoff k*
//              (requires vol(source) < vol(target));
//   PassUpToK  no violation up to checked_up_to, but that certifies nothing
//              beyond it (equal volumes, or K < k*).
EmbedVerdict embeds_4d(const Ellipsoid& source, const Ellipsoid& target, std::int64_t K);

struct CapacityResult {
    Rat value;              // max over 1 <= k <= K of N_k(1,a) / N_k(1,1)
    std::int64_t argmax_k;  // least k attaining the max
};

// Lower bound for the embedding capacity of E(1, a) into balls. a >= 1, K >= 1.
CapacityResult capacity_c0(const Rat& a, std::int64_t K);

struct StaircaseRow {
    Rat a;
    Rat c0_lower;
    std::int64_t argmax_k;
};

// capacity_c0 sampled at a_min, a_min + step, ..., up to a_max inclusive.
std::vector<StaircaseRow> staircase_table(const Rat& a_min, const Rat& a_max, const Rat& step,
                                          std::int64_t K);

}  // namespace ellip
