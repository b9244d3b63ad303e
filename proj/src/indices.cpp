#include "ellip/indices.hpp"

#include <algorithm>

namespace ellip {

namespace {

void require_same_dim(const Ellipsoid& source, const Ellipsoid& target) {
    if (source.dim() != target.dim())
        throw std::invalid_argument("source and target dimensions differ");
}

void record(HypothesisReport& report, const char* name, int index, const Rat& lhs,
            const Rat& rhs) {
    if (lhs < rhs) return;
    report.satisfied = false;
    report.failures.push_back(HypothesisFailure{name, index, lhs, rhs, lhs == rhs});
}

}  // namespace

HypothesisReport check_main_hypotheses(const Ellipsoid& source, const Ellipsoid& target) {
    require_same_dim(source, target);
    const int n = source.dim();
    HypothesisReport report;
    for (int i = 1; i < n; ++i) {
        record(report, "a_i < b_i", i, source.axis(i), target.axis(i));
        record(report, "b_i < a_{i+1}", i, target.axis(i), source.axis(i + 1));
    }
    record(report, "a_n < b_n", n, source.axis(n), target.axis(n));
    record(report, "b_n < 2a_1", n, target.axis(n), Rat(2) * source.axis(1));
    return report;
}

HypothesisReport check_transversality_hypotheses(const Ellipsoid& source,
                                                 const Ellipsoid& target) {
    require_same_dim(source, target);
    const int n = source.dim();
    HypothesisReport report;
    const Rat twice_a1 = Rat(2) * source.axis(1);
    const Rat twice_b1 = Rat(2) * target.axis(1);
    for (int i = 1; i <= n; ++i) {
        record(report, "a_i < b_i", i, source.axis(i), target.axis(i));
        record(report, "a_i < 2a_1", i, source.axis(i), twice_a1);
        record(report, "b_i < 2b_1", i, target.axis(i), twice_b1);
    }
    return report;
}

std::int64_t fredholm_index(int n, std::int64_t chi, std::int64_t c1,
                            const std::vector<std::int64_t>& cz_plus,
                            const std::vector<std::int64_t>& cz_minus) {
    if (n < 1) throw std::invalid_argument("fredholm_index: n must be >= 1");
    std::int64_t total = static_cast<std::int64_t>(n - 3) * chi + 2 * c1;
    for (std::int64_t cz : cz_plus) total += cz;
    for (std::int64_t cz : cz_minus) total -= cz;
    return total;
}

std::int64_t moduli_dimension(int dimP, const Ellipsoid& source, const Ellipsoid& target,
                              const std::vector<int>& I) {
    if (dimP < 0) throw std::invalid_argument("moduli_dimension: dimP must be >= 0");
    require_same_dim(source, target);
    if (I.empty()) throw std::invalid_argument("moduli_dimension: I must be nonempty");
    std::vector<int> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("moduli_dimension: repeated index in I");
    if (sorted.front() < 1 || sorted.back() > source.dim())
        throw std::invalid_argument("moduli_dimension: index in I out of range");

    HypothesisReport hyp = check_transversality_hypotheses(source, target);
    if (!hyp.satisfied)
        throw HypothesisError("moduli_dimension: transversality hypotheses fail",
                              std::move(hyp));

    std::int64_t total = static_cast<std::int64_t>(dimP) - 1;
    for (int i : sorted)
        total += cz_spec(target, Orbit{i, 1}) - cz_spec(source, Orbit{i, 1});
    return total;
}

std::int64_t cobordism_level_dimension(int dimP, const Ellipsoid& target,
                                       const Ellipsoid& source, const Orbit& gamma_plus,
                                       const std::vector<Orbit>& gamma_minus) {
    if (dimP < 0)
        throw std::invalid_argument("cobordism_level_dimension: dimP must be >= 0");
    require_same_dim(source, target);
    validate_orbit(target, gamma_plus);
    for (const Orbit& eta : gamma_minus) validate_orbit(source, eta);

    const std::int64_t shift = source.dim() - 3;
    std::int64_t total = dimP + shift + cz_spec(target, gamma_plus);
    for (const Orbit& eta : gamma_minus) total -= shift + cz_spec(source, eta);
    return total;
}

}  // namespace ellip
