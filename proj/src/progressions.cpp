#include "ellip/progressions.hpp"

#include <stdexcept>
#include <utility>

namespace ellip {

int ProgressionMergeStream::add_progression(const Rat& start, const Rat& step) {
    if (step.sign() <= 0) throw std::invalid_argument("progression step must be positive");
    if (start.sign() < 0) throw std::invalid_argument("progression start must be nonnegative");

    BigInt need = boost::multiprecision::lcm(start.den(), step.den());
    BigInt merged = boost::multiprecision::lcm(den_, need);
    if (merged != den_) rescale(merged);

    int id = static_cast<int>(steps_.size());
    steps_.push_back(step.num() * (den_ / step.den()));
    heap_.push(Node{start.num() * (den_ / start.den()), id, 0});
    if (heap_.size() > max_heap_) max_heap_ = heap_.size();
    return id;
}

void ProgressionMergeStream::rescale(const BigInt& new_den) {
    BigInt factor = new_den / den_;
    den_ = new_den;
    for (BigInt& s : steps_) s *= factor;
    if (!heap_.empty()) {
        std::vector<Node> nodes;
        nodes.reserve(heap_.size());
        while (!heap_.empty()) {
            Node n = heap_.top();
            heap_.pop();
            n.value *= factor;
            nodes.push_back(std::move(n));
        }
        for (Node& n : nodes) heap_.push(std::move(n));
    }
}

ProgressionMergeStream::Node ProgressionMergeStream::pop_node() {
    if (heap_.empty()) throw std::logic_error("next() on empty progression stream");
    Node n = heap_.top();
    heap_.pop();
    Node succ{n.value + steps_[static_cast<std::size_t>(n.generator)], n.generator,
              n.position + 1};
    heap_.push(std::move(succ));
    if (heap_.size() > max_heap_) max_heap_ = heap_.size();
    return n;
}

ProgressionEntry ProgressionMergeStream::next() {
    Node n = pop_node();
    return ProgressionEntry{Rat(std::move(n.value), den_), n.generator, n.position};
}

void ProgressionMergeStream::next_scaled(BigInt& value_out, int& generator_out,
                                         std::int64_t& position_out) {
    Node n = pop_node();
    value_out = std::move(n.value);
    generator_out = n.generator;
    position_out = n.position;
}

bool ProgressionMergeStream::exhausted_above(const Rat& bound) const {
    if (heap_.empty()) return true;
    // top/den_ > bound  <=>  top * bound.den > bound.num * den_
    return heap_.top().value * bound.den() > bound.num() * den_;
}

std::vector<MergedProgressionEntry> merge_progressions(const std::vector<Rat>& steps,
                                                       const Rat& bound) {
    ProgressionMergeStream stream;
    for (const Rat& s : steps) {
        if (s.sign() <= 0) throw std::invalid_argument("merge_progressions: nonpositive step");
        stream.add_progression(s, s);
    }
    std::vector<MergedProgressionEntry> out;
    if (steps.empty()) return out;
    while (!stream.exhausted_above(bound)) {
        ProgressionEntry e = stream.next();
        out.push_back(MergedProgressionEntry{std::move(e.value), e.generator + 1,
                                             e.position + 1});
    }
    return out;
}

std::int64_t merged_count_below(const std::vector<Rat>& steps, const Rat& bound) {
    ProgressionMergeStream stream;
    for (const Rat& s : steps) {
        if (s.sign() <= 0) throw std::invalid_argument("merged_count_below: nonpositive step");
        stream.add_progression(s, s);
    }
    std::int64_t count = 0;
    if (steps.empty()) return count;
    BigInt value;
    int gen;
    std::int64_t pos;
    while (!stream.exhausted_above(bound)) {
        stream.next_scaled(value, gen, pos);
        ++count;
    }
    return count;
}

}  // namespace ellip
