#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ellip/progressions.hpp>
#include <ellip/rat.hpp>

#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

using ellip::BigInt;
using ellip::MergedProgressionEntry;
using ellip::ProgressionMergeStream;
using ellip::Rat;

namespace {
Rat q(long long n, long long d) { return Rat(BigInt(n), BigInt(d)); }

std::vector<std::tuple<Rat, int, std::int64_t>> as_tuples(const std::vector<MergedProgressionEntry>& v) {
    std::vector<std::tuple<Rat, int, std::int64_t>> out;
    for (const auto& e : v) out.emplace_back(e.value, e.generator, e.multiplicity);
    return out;
}
}  // namespace

TEST_CASE("merged multiples of 1 and 8/5 up to 3") {
    auto got = as_tuples(ellip::merge_progressions({Rat(1), q(8, 5)}, Rat(3)));
    std::vector<std::tuple<Rat, int, std::int64_t>> want{
        {Rat(1), 1, 1}, {q(8, 5), 2, 1}, {Rat(2), 1, 2}, {Rat(3), 1, 3}};
    CHECK(got == want);
}

TEST_CASE("single progression cut at a non-multiple bound") {
    auto got = as_tuples(ellip::merge_progressions({Rat(1)}, q(5, 2)));
    std::vector<std::tuple<Rat, int, std::int64_t>> want{{Rat(1), 1, 1}, {Rat(2), 1, 2}};
    CHECK(got == want);
}

TEST_CASE("identical progressions tie-break by generator then multiplicity") {
    auto got = as_tuples(ellip::merge_progressions({Rat(1), Rat(1)}, Rat(2)));
    std::vector<std::tuple<Rat, int, std::int64_t>> want{
        {Rat(1), 1, 1}, {Rat(1), 2, 1}, {Rat(2), 1, 2}, {Rat(2), 2, 2}};
    CHECK(got == want);
}

TEST_CASE("nonpositive steps are rejected") {
    CHECK_THROWS_AS(ellip::merge_progressions({Rat(0)}, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(ellip::merge_progressions({Rat(1), Rat(-1)}, Rat(1)), std::invalid_argument);
    ProgressionMergeStream s;
    CHECK_THROWS_AS(s.add_progression(Rat(1), Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(s.add_progression(Rat(-1), Rat(1)), std::invalid_argument);
}

TEST_CASE("negative bound yields nothing") {
    CHECK(ellip::merge_progressions({Rat(1)}, Rat(-1)).empty());
    CHECK(ellip::merged_count_below({Rat(1), q(1, 2)}, Rat(0)) == 0);
}

TEST_CASE("stream interleaves and survives adding a progression mid-flight") {
    ProgressionMergeStream s;
    int g0 = s.add_progression(q(1, 2), q(1, 2));
    int g1 = s.add_progression(q(1, 3), q(1, 3));
    CHECK(g0 == 0);
    CHECK(g1 == 1);

    auto e = s.next();
    CHECK(e.value == q(1, 3));
    CHECK(e.generator == 1);
    CHECK(e.position == 0);
    e = s.next();
    CHECK(e.value == q(1, 2));
    CHECK(e.generator == 0);

    // New denominator forces the pending heap to rescale from 6ths to 30ths.
    s.add_progression(q(1, 5), q(1, 5));
    CHECK(s.common_den() == 30);
    e = s.next();
    CHECK(e.value == q(1, 5));
    CHECK(e.generator == 2);

    // Subsequent pulls stay sorted.
    Rat prev = e.value;
    for (int i = 0; i < 20; ++i) {
        auto cur = s.next();
        CHECK(prev <= cur.value);
        prev = cur.value;
    }
    CHECK(s.max_heap_size() <= 3);
}

TEST_CASE("scaled pulls agree with rational pulls") {
    ProgressionMergeStream a, b;
    a.add_progression(q(2, 3), q(2, 3));
    a.add_progression(q(3, 4), q(3, 4));
    b.add_progression(q(2, 3), q(2, 3));
    b.add_progression(q(3, 4), q(3, 4));
    for (int i = 0; i < 30; ++i) {
        auto e = a.next();
        BigInt scaled;
        int gen;
        std::int64_t pos;
        b.next_scaled(scaled, gen, pos);
        CHECK(e.value == Rat(scaled, b.common_den()));
        CHECK(e.generator == gen);
        CHECK(e.position == pos);
    }
}

TEST_CASE("exhausted_above tracks the pending head") {
    ProgressionMergeStream s;
    s.add_progression(Rat(2), Rat(2));
    CHECK(s.exhausted_above(Rat(1)));
    CHECK_FALSE(s.exhausted_above(Rat(2)));
    (void)s.next();
    CHECK(s.exhausted_above(Rat(3)));
    CHECK_FALSE(s.exhausted_above(Rat(4)));
}

TEST_CASE("random merges: exhaustive, sorted, exact count") {
    std::mt19937_64 eng(77031u);
    std::uniform_int_distribution<long long> cnt(1, 4);
    std::uniform_int_distribution<long long> num(1, 12);
    std::uniform_int_distribution<long long> den(1, 9);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Rat> steps;
        long long k = cnt(eng);
        for (long long i = 0; i < k; ++i) steps.push_back(q(num(eng), den(eng)));
        Rat bound = q(num(eng), den(eng)) * Rat(4);

        auto got = ellip::merge_progressions(steps, bound);

        BigInt expected = 0;
        for (const Rat& st : steps) expected += ellip::floor_div(bound, st);
        CHECK(BigInt(static_cast<long long>(got.size())) == expected);
        CHECK(ellip::merged_count_below(steps, bound) == static_cast<std::int64_t>(got.size()));

        for (std::size_t i = 0; i + 1 < got.size(); ++i) {
            auto lhs = std::make_tuple(got[i].value, got[i].generator, got[i].multiplicity);
            auto rhs = std::make_tuple(got[i + 1].value, got[i + 1].generator, got[i + 1].multiplicity);
            CHECK(lhs < rhs);
        }
        for (const auto& e : got) {
            CHECK(e.value == Rat(e.multiplicity) * steps[static_cast<std::size_t>(e.generator - 1)]);
            CHECK(e.value <= bound);
        }
    }
}
