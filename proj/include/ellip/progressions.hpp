// Lazy k-way merge of arithmetic progressions with exact rational values.
//
// This is the workhorse behind both the Reeb action spectrum (one progression
// per ellipsoid axis) and the lattice-value stream N_k (one progression per
// column, added on the fly). To keep the inner loop integer-only, every
// progression is rescaled onto a shared denominator once at insertion time;
// heap comparisons then never touch gcd.
#pragma once

#include "ellip/rat.hpp"

#include <cstdint>
#include <queue>
#include <vector>

namespace ellip {

struct ProgressionEntry {
    Rat value;
    int generator;           // index of the progression that produced the value
    std::int64_t position;   // 0-based position within that progression
};

class ProgressionMergeStream {
public:
    ProgressionMergeStream() = default;

    // Registers the progression start, start+step, start+2*step, ...
    // Returns the generator index assigned to it. step must be positive and
    // start nonnegative, otherwise the stream could emit out of order.
    int add_progression(const Rat& start, const Rat& step);

    bool empty() const { return heap_.empty(); }

    // Smallest pending value; ties break by (generator, position).
    ProgressionEntry next();

    // Like next() but skips building the Rat. Returns value * common_den as
    // an integer. Used on hot paths that only count or compare.
    void next_scaled(BigInt& value_out, int& generator_out, std::int64_t& position_out);

    // True when the smallest pending value exceeds bound.
    bool exhausted_above(const Rat& bound) const;

    const BigInt& common_den() const { return den_; }
    std::size_t heap_size() const { return heap_.size(); }
    std::size_t max_heap_size() const { return max_heap_; }

private:
    struct Node {
        BigInt value;  // numerator over den_
        int generator;
        std::int64_t position;
        bool operator>(const Node& o) const {
            if (value != o.value) return value > o.value;
            if (generator != o.generator) return generator > o.generator;
            return position > o.position;
        }
    };

    void rescale(const BigInt& new_den);
    Node pop_node();

    BigInt den_ = 1;
    std::vector<BigInt> steps_;  // scaled, one per generator
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap_;
    std::size_t max_heap_ = 0;
};

// All members of the progressions {m*steps[i] : m >= 1} that are <= bound,
// sorted ascending; ties ordered by (generator, multiplicity). The result
// holds exactly sum_i floor(bound/steps[i]) entries. Generators are numbered
// from 1 in the order given. Steps must be positive.
struct MergedProgressionEntry {
    Rat value;
    int generator;             // 1-based
    std::int64_t multiplicity; // >= 1
};

std::vector<MergedProgressionEntry> merge_progressions(const std::vector<Rat>& steps,
                                                       const Rat& bound);

// Number of entries merge_progressions would produce, computed by running the
// same heap enumeration (not by the closed-form count).
std::int64_t merged_count_below(const std::vector<Rat>& steps, const Rat& bound);

}  // namespace ellip
