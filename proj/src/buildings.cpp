#include "ellip/buildings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace ellip {

namespace {

bool orbit_list_less(const std::vector<Orbit>& a, const std::vector<Orbit>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool collection_less(const OrbitCollection& a, const OrbitCollection& b) {
    if (a.total_action != b.total_action) return a.total_action < b.total_action;
    if (a.orbits.size() != b.orbits.size()) return a.orbits.size() < b.orbits.size();
    return orbit_list_less(a.orbits, b.orbits);
}

bool building_less(const Building& a, const Building& b) {
    if (a.levels.size() != b.levels.size()) return a.levels.size() < b.levels.size();
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        const Level &la = a.levels[i], &lb = b.levels[i];
        if (la.kind != lb.kind) return static_cast<int>(la.kind) < static_cast<int>(lb.kind);
        if (la.gamma_plus.orbits != lb.gamma_plus.orbits)
            return orbit_list_less(la.gamma_plus.orbits, lb.gamma_plus.orbits);
        if (la.gamma_minus.orbits != lb.gamma_minus.orbits)
            return orbit_list_less(la.gamma_minus.orbits, lb.gamma_minus.orbits);
    }
    return false;
}

}  // namespace

OrbitCollection make_collection(const Ellipsoid& E, std::vector<Orbit> orbits) {
    Rat total(0);
    for (const Orbit& o : orbits) total += orbit_action(E, o);
    std::sort(orbits.begin(), orbits.end());
    return OrbitCollection{std::move(orbits), std::move(total)};
}

std::vector<OrbitCollection> enumerate_collections(const Ellipsoid& E, const Rat& lower,
                                                   const Rat& upper, int max_orbits) {
    if (lower.sign() < 0) throw std::invalid_argument("enumerate_collections: lower < 0");
    if (max_orbits < 1) throw std::invalid_argument("enumerate_collections: max_orbits < 1");

    // Candidate orbits, cheapest first; multiplicity is capped by the window
    // itself since every extra cover adds at least a_i of action.
    struct Candidate {
        Rat action;
        Orbit orbit;
    };
    std::vector<Candidate> candidates;
    for (int i = 1; i <= E.dim(); ++i) {
        BigInt cap = floor_div(upper, E.axis(i));
        if (cap > 1000000)
            throw std::invalid_argument("enumerate_collections: action window too wide");
        for (std::int64_t m = 1; m <= cap.convert_to<std::int64_t>(); ++m)
            candidates.push_back(Candidate{E.axis(i) * Rat(m), Orbit{i, m}});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.action != b.action) return a.action < b.action;
        return a.orbit < b.orbit;
    });

    std::vector<OrbitCollection> out;
    std::vector<Orbit> chosen;
    Rat running(0);
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t j = from; j < candidates.size(); ++j) {
            if (running + candidates[j].action > upper) break;  // sorted, so done
            chosen.push_back(candidates[j].orbit);
            running += candidates[j].action;
            if (running >= lower) out.push_back(make_collection(E, chosen));
            if (static_cast<int>(chosen.size()) < max_orbits) self(self, j);
            running -= candidates[j].action;
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);

    std::sort(out.begin(), out.end(), collection_less);
    return out;
}

Rat level_energy(const Level& level) {
    return level.gamma_plus.total_action - level.gamma_minus.total_action;
}

bool level_admissible(const Level& level) {
    Rat energy = level_energy(level);
    if (energy.sign() < 0) return false;
    if (level.kind != LevelKind::Cobordism && energy.sign() == 0) return false;
    return true;
}

bool check_action_monotonicity(const Building& building) {
    for (const Level& level : building.levels)
        if (level_energy(level).sign() < 0) return false;
    return true;
}

namespace {

// Depth-first search over level stacks. Collections are precomputed per side;
// CZ indices are cached per orbit. The search is single-threaded over an
// explicit recursion; results are sorted canonically afterwards.
class BuildingSearch {
public:
    BuildingSearch(const Ellipsoid& source, const Ellipsoid& target, int l, int dimP,
                   const EnumerationBudgets& budgets)
        : src_(source), tgt_(target), dimP_(dimP), max_levels_(budgets.max_levels) {
        const Rat& lo = source.axis(l);
        const Rat& hi = target.axis(l);
        if (lo <= hi) {
            int cap_src = window_cap(hi, source.axis(1), budgets.max_orbits);
            int cap_tgt = window_cap(hi, target.axis(1), budgets.max_orbits);
            source_side_ = enumerate_collections(source, lo, hi, cap_src);
            target_side_ = enumerate_collections(target, lo, hi, cap_tgt);
        }
        top_ = make_collection(target, {Orbit{l, 1}});
        bottom_ = make_collection(source, {Orbit{l, 1}});
    }

    BuildingEnumeration run() {
        dfs_top(top_);

        Building trivial{{Level{LevelKind::Cobordism, top_, bottom_}}};
        if (std::find(found_.begin(), found_.end(), trivial) == found_.end())
            found_.push_back(trivial);

        std::sort(found_.begin(), found_.end(), building_less);
        return BuildingEnumeration{std::move(found_), truncated_};
    }

private:
    // Orbit-count cap for one side. The window itself needs at most
    // floor(upper / min_action) orbits per collection; whenever the cap in
    // force is below that, exhaustiveness is lost and the result says so.
    int window_cap(const Rat& upper, const Rat& min_action, int explicit_cap) {
        BigInt need = floor_div(upper, min_action);
        if (need < 1) need = 1;
        if (explicit_cap > 0) {
            if (need > explicit_cap) truncated_ = true;
            return explicit_cap;
        }
        if (need > 64) {
            truncated_ = true;
            return 64;
        }
        return need.convert_to<int>();
    }

    std::int64_t cz(const Ellipsoid& E, bool target_side, const Orbit& o) {
        auto& cache = target_side ? cz_tgt_ : cz_src_;
        auto key = std::make_pair(o.axis, o.multiplicity);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::int64_t value = cz_spec(E, o);
        cache.emplace(key, value);
        return value;
    }

    // Can gamma_minus be distributed over the positive ends so that every
    // component keeps nonnegative energy (and, across the cobordism,
    // nonnegative expected dimension)? Positive ends with no share are plane
    // components and are fine.
    bool splittable(const OrbitCollection& plus, const Ellipsoid& plus_ambient,
                    bool plus_is_target, const OrbitCollection& minus,
                    const Ellipsoid& minus_ambient, bool across_cobordism) {
        const std::size_t parts = plus.orbits.size();
        std::vector<Rat> energy_left;
        std::vector<std::int64_t> dim_left;
        energy_left.reserve(parts);
        for (const Orbit& p : plus.orbits) {
            energy_left.push_back(orbit_action(plus_ambient, p));
            if (across_cobordism)
                dim_left.push_back(dimP_ + (src_.dim() - 3) + cz(plus_ambient, plus_is_target, p));
        }

        std::vector<Rat> cost_energy;
        std::vector<std::int64_t> cost_dim;
        for (const Orbit& m : minus.orbits) {
            cost_energy.push_back(orbit_action(minus_ambient, m));
            if (across_cobordism)
                cost_dim.push_back((src_.dim() - 3) + cz(minus_ambient, false, m));
        }

        // Heaviest negatives first makes infeasible branches die early.
        std::vector<std::size_t> order(minus.orbits.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (cost_energy[a] != cost_energy[b]) return cost_energy[b] < cost_energy[a];
            return minus.orbits[a] < minus.orbits[b];
        });

        auto place = [&](auto&& self, std::size_t idx) -> bool {
            if (idx == order.size()) return true;
            const std::size_t item = order[idx];
            for (std::size_t t = 0; t < parts; ++t) {
                // Identical ends with identical remaining budgets are
                // interchangeable; trying one of them suffices.
                bool duplicate = false;
                for (std::size_t u = 0; u < t; ++u) {
                    if (plus.orbits[u] == plus.orbits[t] && energy_left[u] == energy_left[t] &&
                        (!across_cobordism || dim_left[u] == dim_left[t])) {
                        duplicate = true;
                        break;
                    }
                }
                if (duplicate) continue;
                if (energy_left[t] < cost_energy[item]) continue;
                if (across_cobordism && dim_left[t] < cost_dim[item]) continue;
                energy_left[t] -= cost_energy[item];
                if (across_cobordism) dim_left[t] -= cost_dim[item];
                if (self(self, idx + 1)) {
                    energy_left[t] += cost_energy[item];
                    if (across_cobordism) dim_left[t] += cost_dim[item];
                    return true;
                }
                energy_left[t] += cost_energy[item];
                if (across_cobordism) dim_left[t] += cost_dim[item];
            }
            return false;
        };
        return place(place, 0);
    }

    bool depth_full() { return static_cast<int>(path_.size()) >= max_levels_; }

    void dfs_top(const OrbitCollection& cur) {
        for (const OrbitCollection& D : source_side_) {
            if (D.total_action > cur.total_action) continue;
            if (!splittable(cur, tgt_, true, D, src_, true)) continue;
            if (depth_full()) {
                truncated_ = true;
                continue;
            }
            path_.push_back(Level{LevelKind::Cobordism, cur, D});
            dfs_bottom(D);
            path_.pop_back();
        }
        for (const OrbitCollection& D : target_side_) {
            if (!(D.total_action < cur.total_action)) continue;  // no zero-energy level
            if (!splittable(cur, tgt_, true, D, tgt_, false)) continue;
            if (depth_full()) {
                truncated_ = true;
                continue;
            }
            path_.push_back(Level{LevelKind::SympTop, cur, D});
            dfs_top(D);
            path_.pop_back();
        }
    }

    void dfs_bottom(const OrbitCollection& cur) {
        if (cur == bottom_) {
            found_.push_back(Building{path_});
            return;  // actions only decrease below; the bottom cannot recur
        }
        for (const OrbitCollection& D : source_side_) {
            if (!(D.total_action < cur.total_action)) continue;
            if (!splittable(cur, src_, false, D, src_, false)) continue;
            if (depth_full()) {
                truncated_ = true;
                continue;
            }
            path_.push_back(Level{LevelKind::SympBottom, cur, D});
            dfs_bottom(D);
            path_.pop_back();
        }
    }

    const Ellipsoid& src_;
    const Ellipsoid& tgt_;
    int dimP_;
    int max_levels_;
    std::vector<OrbitCollection> source_side_;
    std::vector<OrbitCollection> target_side_;
    OrbitCollection top_;
    OrbitCollection bottom_;
    std::map<std::pair<int, std::int64_t>, std::int64_t> cz_src_;
    std::map<std::pair<int, std::int64_t>, std::int64_t> cz_tgt_;
    std::vector<Level> path_;
    std::vector<Building> found_;
    bool truncated_ = false;
};

}  // namespace

BuildingEnumeration enumerate_buildings(const Ellipsoid& source, const Ellipsoid& target,
                                        int l, int dimP, const EnumerationBudgets& budgets) {
    if (source.dim() != target.dim())
        throw std::invalid_argument("enumerate_buildings: dimensions differ");
    if (l < 1 || l > source.dim())
        throw std::invalid_argument("enumerate_buildings: l out of range");
    if (dimP < 0) throw std::invalid_argument("enumerate_buildings: dimP must be >= 0");
    if (budgets.max_levels < 1)
        throw std::invalid_argument("enumerate_buildings: max_levels must be >= 1");
    if (budgets.max_orbits < 0)
        throw std::invalid_argument("enumerate_buildings: max_orbits must be >= 0");

    BuildingSearch search(source, target, l, dimP, budgets);
    return search.run();
}

bool CompactnessReport::all_unique_trivial() const {
    for (const CompactnessEntry& e : per_l)
        if (e.verdict != CompactnessVerdict::UniqueTrivial) return false;
    return !per_l.empty();
}

CompactnessReport verify_compactness(const Ellipsoid& source, const Ellipsoid& target,
                                     int dimP, const EnumerationBudgets& budgets) {
    CompactnessReport report;
    for (int l = 1; l <= source.dim(); ++l) {
        BuildingEnumeration result = enumerate_buildings(source, target, l, dimP, budgets);
        bool unique = !result.truncated && result.buildings.size() == 1 &&
                      result.buildings.front().levels.size() == 1;
        report.per_l.push_back(CompactnessEntry{
            l, unique ? CompactnessVerdict::UniqueTrivial : CompactnessVerdict::Candidates,
            std::move(result.buildings), result.truncated});
    }
    report.main_hypotheses = check_main_hypotheses(source, target);
    report.transversality_hypotheses = check_transversality_hypotheses(source, target);
    return report;
}

ParityReport parity_ledger(bool symp_count_is_one) {
    ParityReport report;
    report.seed_certified = symp_count_is_one;
    report.identity = "count(glued) + count(upper)*count(lower) = 0 (mod 2)";
    // A compact 1-manifold has evenly many boundary points; the glued count
    // and the product of the two level counts sit on the two sides of that
    // boundary. Odd glued count forces both factors odd.
    report.conclusion =
        symp_count_is_one ? ParityConclusion::BothOdd : ParityConclusion::Unknown;
    return report;
}

NeckStretchSetup neck_stretch_setup(const Ellipsoid& source, const Ellipsoid& target) {
    if (source.dim() != target.dim())
        throw std::invalid_argument("neck_stretch_setup: dimensions differ");
    for (int i = 1; i <= source.dim(); ++i) {
        if (!(source.axis(i) < target.axis(i)))
            throw std::invalid_argument(
                "neck_stretch_setup: no admissible epsilon (a_" + std::to_string(i) +
                " >= b_" + std::to_string(i) + ")");
    }

    Rat ratio = source.axis(1) / target.axis(1);
    for (int i = 2; i <= source.dim(); ++i) {
        Rat r = source.axis(i) / target.axis(i);
        if (r < ratio) ratio = r;
    }

    // Largest p/q < ratio with q <= 1000: exhaustive over q, optimal p per q.
    Rat best(0);
    for (BigInt q = 1; q <= 1000; ++q) {
        BigInt p = (q * ratio.num() - 1) / ratio.den();
        if (p < 1) continue;
        Rat candidate{p, q};
        if (candidate > best) best = candidate;
    }
    if (best.sign() <= 0)
        throw std::invalid_argument("neck_stretch_setup: no positive epsilon with denominator <= 1000");

    NeckStretchSetup setup{best, target.scaled(best), {}, true};
    for (int i = 1; i <= target.dim(); ++i) {
        std::int64_t on_target = cz_spec(target, Orbit{i, 1});
        std::int64_t on_scaled = cz_spec(setup.scaled_target, Orbit{i, 1});
        setup.cz_table.push_back(CzScaleCheck{i, on_target, on_scaled});
        if (on_target != on_scaled) setup.cz_equal = false;
    }
    return setup;
}

}  // namespace ellip
