#include "ellip/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ellip {

Ellipsoid::Ellipsoid(std::vector<Rat> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("ellipsoid needs at least one axis");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i].sign() <= 0)
            throw std::invalid_argument("ellipsoid axis " + std::to_string(i + 1) +
                                        " must be positive");
        if (i > 0 && sizes_[i] < sizes_[i - 1])
            throw std::invalid_argument("ellipsoid axes must be nondecreasing (axis " +
                                        std::to_string(i + 1) + " decreases)");
    }
}

const Rat& Ellipsoid::axis(int i) const {
    if (i < 1 || i > dim()) throw std::invalid_argument("axis index out of range");
    return sizes_[static_cast<std::size_t>(i - 1)];
}

Ellipsoid Ellipsoid::scaled(const Rat& factor) const {
    if (factor.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<Rat> scaled;
    scaled.reserve(sizes_.size());
    for (const Rat& s : sizes_) scaled.push_back(s * factor);
    return Ellipsoid(std::move(scaled));
}

std::string Ellipsoid::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out += ',';
        out += sizes_[i].to_string();
    }
    return out;
}

Ellipsoid Ellipsoid::parse(std::string_view csv) {
    std::vector<Rat> sizes;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = csv.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? csv.substr(start) : csv.substr(start, comma - start);
        sizes.push_back(Rat::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Ellipsoid(std::move(sizes));
}

void validate_orbit(const Ellipsoid& E, const Orbit& orbit) {
    if (orbit.axis < 1 || orbit.axis > E.dim())
        throw std::invalid_argument("orbit axis " + std::to_string(orbit.axis) +
                                    " out of range 1.." + std::to_string(E.dim()));
    if (orbit.multiplicity < 1)
        throw std::invalid_argument("orbit multiplicity must be >= 1");
}

Rat orbit_action(const Ellipsoid& E, const Orbit& orbit) {
    validate_orbit(E, orbit);
    return E.axis(orbit.axis) * Rat(orbit.multiplicity);
}

std::vector<SpectrumEntry> spectrum(const Ellipsoid& E, const Rat& bound) {
    std::vector<SpectrumEntry> out;
    for (const MergedProgressionEntry& e : merge_progressions(E.sizes(), bound))
        out.push_back(SpectrumEntry{e.value, Orbit{e.generator, e.multiplicity}});
    return out;
}

std::int64_t spectrum_count(const Ellipsoid& E, const Rat& bound) {
    return merged_count_below(E.sizes(), bound);
}

std::int64_t cz_floor(const Ellipsoid& E, const Orbit& orbit) {
    validate_orbit(E, orbit);
    const Rat action = E.axis(orbit.axis) * Rat(orbit.multiplicity);
    BigInt total = 0;
    for (int j = 1; j <= E.dim(); ++j) {
        if (j == orbit.axis) continue;
        total += 2 * floor_div(action, E.axis(j)) + 1;
    }
    total += 2 * orbit.multiplicity;
    return total.convert_to<std::int64_t>();
}

std::int64_t cz_spec(const Ellipsoid& E, const Orbit& orbit) {
    validate_orbit(E, orbit);
    const Rat action = E.axis(orbit.axis) * Rat(orbit.multiplicity);
    return static_cast<std::int64_t>(E.dim()) - 1 + 2 * spectrum_count(E, action);
}

std::vector<Coincidence> degeneracy_check(const Ellipsoid& E, const Rat& bound) {
    std::vector<Coincidence> out;
    for (int i = 1; i <= E.dim(); ++i) {
        for (int j = i + 1; j <= E.dim(); ++j) {
            // m*a_i = m'*a_j forces m/m' = a_j/a_i = P/Q in lowest terms,
            // so the coincidences along (i, j) are (m, m') = (tP, tQ), t >= 1.
            Rat ratio = E.axis(j) / E.axis(i);
            const BigInt& P = ratio.num();
            const BigInt& Q = ratio.den();
            Rat step = Rat(P) * E.axis(i);  // action of the t-th coincidence is t*step
            for (BigInt t = 1; Rat(t) * step <= bound; ++t) {
                out.push_back(Coincidence{i, (t * P).convert_to<std::int64_t>(), j,
                                          (t * Q).convert_to<std::int64_t>(), Rat(t) * step});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Coincidence& x, const Coincidence& y) {
        if (x.action != y.action) return x.action < y.action;
        if (x.axis_i != y.axis_i) return x.axis_i < y.axis_i;
        if (x.axis_j != y.axis_j) return x.axis_j < y.axis_j;
        return x.mult_i < y.mult_i;
    });
    return out;
}

}  // namespace ellip
