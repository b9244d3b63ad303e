// Hypothesis checkers and index formulas for holomorphic curves between
// ellipsoid boundaries.
//
// For a pair of n-axis ellipsoids E(a) -> E(b):
//
//   main hypotheses:            a_i < b_i < a_{i+1} for i < n,
//                               a_n < b_n < 2*a_1;
//   transversality hypotheses:  a_i < b_i, a_i < 2*a_1, b_i < 2*b_1 for all i.
//
// The main hypotheses imply the transversality ones. All inequalities are
// strict; an equality is reported as a failure flagged as a boundary case.
#pragma once

#include "ellip/rat.hpp"
#include "ellip/spectrum.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellip {

struct HypothesisFailure {
    std::string name;  // inequality template, e.g. "a_i < 2a_1"
    int index;         // the i at which it failed
    Rat lhs;
    Rat rhs;
    bool boundary;     // true when lhs == rhs
};

struct HypothesisReport {
    bool satisfied = true;  // satisfied iff failures is empty
    std::vector<HypothesisFailure> failures;
};

class HypothesisError : public std::invalid_argument {
public:
    HypothesisError(const std::string& what, HypothesisReport report)
        : std::invalid_argument(what), report_(std::move(report)) {}
    const HypothesisReport& report() const { return report_; }

private:
    HypothesisReport report_;
};

// Both checkers require source.dim() == target.dim().
HypothesisReport check_main_hypotheses(const Ellipsoid& source, const Ellipsoid& target);
HypothesisReport check_transversality_hypotheses(const Ellipsoid& source,
                                                 const Ellipsoid& target);

// Index of the linearized operator for a curve of Euler characteristic chi in
// a 2n-dimensional cobordism, with relative first Chern number c1 and the
// given indices at positive/negative punctures:
//   (n - 3)*chi + 2*c1 + sum(cz_plus) - sum(cz_minus).
std::int64_t fredholm_index(int n, std::int64_t chi, std::int64_t c1,
                            const std::vector<std::int64_t>& cz_plus,
                            const std::vector<std::int64_t>& cz_minus);

// Expected dimension of the parametrized moduli space of cylinder tuples
// indexed by I (distinct axes in 1..n), between source and target boundaries,
// over a dimP-dimensional parameter space:
//   dimP - 1 + sum_{i in I} (cz(target, gamma_i) - cz(source, gamma_i)).
// Under the transversality hypotheses each summand vanishes, so the value is
// dimP - 1. Throws HypothesisError when the hypotheses fail.
std::int64_t moduli_dimension(int dimP, const Ellipsoid& source, const Ellipsoid& target,
                              const std::vector<int>& I);

// Expected dimension of one cobordism-level component with a single positive
// end gamma_plus on the target boundary and negative ends gamma_minus on the
// source boundary:
//   dimP + (n-3) + cz(target, gamma_plus) - sum_eta ((n-3) + cz(source, eta)).
std::int64_t cobordism_level_dimension(int dimP, const Ellipsoid& target,
                                       const Ellipsoid& source, const Orbit& gamma_plus,
                                       const std::vector<Orbit>& gamma_minus);

}  // namespace ellip
