// Combinatorial enumeration of candidate limit buildings for a one-cylinder
// moduli problem between ellipsoid boundaries E(a) -> E(b).
//
// A building is an ordered stack of levels: some symplectization levels in
// the target boundary, exactly one cobordism level, then some symplectization
// levels in the source boundary. Its top asymptotics are {gamma_l^b}, its
// bottom asymptotics {gamma_l^a}, and adjacent levels match exactly.
//
// Admissibility is decided combinatorially:
//
//  - every interface collection has total action inside the window
//    [a_l, b_l] (action is nonincreasing down the stack and pinned at both
//    ends);
//  - each level splits into components carrying exactly one positive end
//    apiece (a component with no positive end would have negative energy,
//    and one positive end per component is exactly what lets the levels glue
//    to a single genus-0 cylinder); a component may have no negative ends;
//  - every component has nonnegative energy: the action of its positive end
//    covers the total action of its negative ends (Stokes positivity applies
//    curve by curve, not just level by level);
//  - symplectization levels have strictly positive energy (a zero-energy
//    level is a stack of trivial cylinders and is not a level at all);
//  - cobordism components must have nonnegative expected dimension, via
//    cobordism_level_dimension. No index filter is applied to
//    symplectization levels: in regimes where the known index bound
//    disagrees with the transcribed formula, candidates are reported rather
//    than suppressed.
//
// The trivial building (one cobordism level, gamma_l^b -> gamma_l^a) is
// always part of the output.
#pragma once

#include "ellip/indices.hpp"
#include "ellip/rat.hpp"
#include "ellip/spectrum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ellip {

struct OrbitCollection {
    std::vector<Orbit> orbits;  // sorted by (axis, multiplicity)
    Rat total_action;
    friend bool operator==(const OrbitCollection&, const OrbitCollection&) = default;
};

// Builds a collection over E, sorting the orbits and summing their actions.
OrbitCollection make_collection(const Ellipsoid& E, std::vector<Orbit> orbits);

// All nonempty multisets of at most max_orbits orbits of E whose total action
// lies in [lower, upper], sorted by (total_action, orbit count, orbit list).
// Note ((i,2)) and ((i,1),(i,1)) are distinct collections. Requires
// lower >= 0 and max_orbits >= 1.
std::vector<OrbitCollection> enumerate_collections(const Ellipsoid& E, const Rat& lower,
                                                   const Rat& upper, int max_orbits);

enum class LevelKind { SympTop, Cobordism, SympBottom };

struct Level {
    LevelKind kind;
    OrbitCollection gamma_plus;
    OrbitCollection gamma_minus;
    friend bool operator==(const Level&, const Level&) = default;
};

// A[gamma_plus] - A[gamma_minus]; negative means the level is inadmissible.
Rat level_energy(const Level& level);

// Nonnegative energy, strictly positive for symplectization levels.
bool level_admissible(const Level& level);

struct Building {
    std::vector<Level> levels;  // top to bottom

    const OrbitCollection& top_asymptotics() const { return levels.front().gamma_plus; }
    const OrbitCollection& bottom_asymptotics() const { return levels.back().gamma_minus; }

    friend bool operator==(const Building&, const Building&) = default;
};

// True iff total action is nonincreasing from the top asymptotics down to the
// bottom ones across every level. Assumes adjacent levels match.
bool check_action_monotonicity(const Building& building);

struct EnumerationBudgets {
    int max_orbits = 0;  // per-collection orbit cap; 0 derives it from the window
    int max_levels = 4;
};

struct BuildingEnumeration {
    std::vector<Building> buildings;  // canonical order, trivial building first
    bool truncated = false;           // a budget cut off unexplored extensions
};

// All admissible buildings for the axis-l cylinder problem from E(source) to
// E(target), over a dimP-dimensional parameter space. Requires matching
// dimensions, 1 <= l <= n, dimP >= 0, max_levels >= 1.
BuildingEnumeration enumerate_buildings(const Ellipsoid& source, const Ellipsoid& target,
                                        int l, int dimP,
                                        const EnumerationBudgets& budgets = {});

enum class CompactnessVerdict { UniqueTrivial, Candidates };

struct CompactnessEntry {
    int l;
    CompactnessVerdict verdict;       // UniqueTrivial needs an untruncated search
    std::vector<Building> buildings;
    bool truncated;
};

struct CompactnessReport {
    std::vector<CompactnessEntry> per_l;
    HypothesisReport main_hypotheses;
    HypothesisReport transversality_hypotheses;

    bool all_unique_trivial() const;
};

// Runs enumerate_buildings for every l in 1..n and attaches both hypothesis
// reports. The reports are informational; the verdicts come from enumeration.
CompactnessReport verify_compactness(const Ellipsoid& source, const Ellipsoid& target,
                                     int dimP, const EnumerationBudgets& budgets = {});

enum class ParityConclusion { BothOdd, Unknown };

struct ParityReport {
    bool seed_certified;      // the glued one-cylinder count was certified to be 1
    std::string identity;     // the mod-2 identity the conclusion rests on
    ParityConclusion conclusion;
};

// Mod-2 bookkeeping: a compact 1-manifold has an even number of boundary
// points, so count(glued) + count(upper)*count(lower) = 0 (mod 2). When the
// caller certifies count(glued) = 1, both factors must be odd. No curve
// counts are computed here.
ParityReport parity_ledger(bool symp_count_is_one);

struct CzScaleCheck {
    int axis;
    std::int64_t cz_target;  // cz_spec(target, gamma_i)
    std::int64_t cz_scaled;  // cz_spec(epsilon * target, gamma_i)
};

struct NeckStretchSetup {
    Rat epsilon;
    Ellipsoid scaled_target;  // epsilon * target, the inner copy
    std::vector<CzScaleCheck> cz_table;
    bool cz_equal;
};

// Largest rational epsilon = p/q with q <= 1000 and epsilon*b_i < a_i for all
// i, plus the scale-invariance check of the CZ indices. Requires a_i < b_i
// for every i (otherwise there is no room for the inner copy).
NeckStretchSetup neck_stretch_setup(const Ellipsoid& source, const Ellipsoid& target);

}  // namespace ellip
