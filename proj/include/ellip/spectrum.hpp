// Ellipsoids, their closed Reeb orbits, and the action spectrum.
//
// An ellipsoid is determined by a nondecreasing vector of positive rationals
// (a_1, ..., a_n). The simple closed orbits gamma_i sit one per axis with
// action a_i; the m-fold cover gamma_i^m has action m * a_i. The spectrum is
// the merged multiset of all such actions.
//
// Two independent routes compute the Conley-Zehnder index of gamma_i^m:
//
//   cz_floor: the closed form  sum_{j != i} (2*floor(m*a_i/a_j) + 1) + 2m.
//   cz_spec:  n - 1 + 2 * #{spectrum entries with action <= m*a_i},
//             counted with multiplicity by enumerating the merged spectrum.
//
// Both extend determinately to degenerate tuples (entries with rational
// ratios): the spectrum count is taken with multiplicity, ties included, the
// orbit's own action included. Keep the two implementations separate; their
// agreement is a checked invariant, not a shortcut.
#pragma once

#include "ellip/progressions.hpp"
#include "ellip/rat.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ellip {

class Ellipsoid {
public:
    // Requires every entry positive and the sequence nondecreasing.
    explicit Ellipsoid(std::vector<Rat> sizes);

    int dim() const { return static_cast<int>(sizes_.size()); }

    // 1-based axis accessor: axis(1) = a_1.
    const Rat& axis(int i) const;

    const std::vector<Rat>& sizes() const { return sizes_; }

    Ellipsoid scaled(const Rat& factor) const;

    // Comma-separated canonical rationals, e.g. "1,8/5".
    std::string to_string() const;
    static Ellipsoid parse(std::string_view csv);

    friend bool operator==(const Ellipsoid& a, const Ellipsoid& b) {
        return a.sizes_ == b.sizes_;
    }

private:
    std::vector<Rat> sizes_;
};

struct Orbit {
    int axis;                  // 1-based, in 1..n
    std::int64_t multiplicity; // >= 1
    friend bool operator==(const Orbit&, const Orbit&) = default;
    friend auto operator<=>(const Orbit&, const Orbit&) = default;
};

// Throws std::invalid_argument unless 1 <= orbit.axis <= E.dim() and
// orbit.multiplicity >= 1.
void validate_orbit(const Ellipsoid& E, const Orbit& orbit);

Rat orbit_action(const Ellipsoid& E, const Orbit& orbit);

struct SpectrumEntry {
    Rat action;
    Orbit orbit;
};

// All orbit actions <= bound, ascending; ties ordered by (axis, multiplicity).
std::vector<SpectrumEntry> spectrum(const Ellipsoid& E, const Rat& bound);

// #{orbits with action <= bound}, with multiplicity, via heap enumeration.
std::int64_t spectrum_count(const Ellipsoid& E, const Rat& bound);

// Closed-form Conley-Zehnder index.
std::int64_t cz_floor(const Ellipsoid& E, const Orbit& orbit);

// Spectrum-counting Conley-Zehnder index (independent route).
std::int64_t cz_spec(const Ellipsoid& E, const Orbit& orbit);

// A pair of distinct orbits sharing one action: m*a_i = m'*a_j, i < j.
struct Coincidence {
    int axis_i;
    std::int64_t mult_i;
    int axis_j;
    std::int64_t mult_j;
    Rat action;
};

// Every coincidence with action <= bound, sorted by (action, i, j, m).
// Empty result certifies the spectrum is simple below the bound.
std::vector<Coincidence> degeneracy_check(const Ellipsoid& E, const Rat& bound);

}  // namespace ellip
