#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "suzuki/cyclotomic.hpp"
#include "suzuki/linalg.hpp"

using namespace suzuki;

namespace {

std::vector<std::vector<Rational>> rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long v : r) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

TEST_CASE("rank of small rational matrices") {
    CHECK(rank_bareiss(rat_matrix({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_bareiss(rat_matrix({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_bareiss(rat_matrix({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_bareiss(rat_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank_bareiss(rat_matrix({{2, 1, 1}, {1, 3, 2}, {1, 0, 0}})) == 3);
    // wide and tall shapes
    CHECK(rank_bareiss(rat_matrix({{1, 2, 3, 4}})) == 1);
    CHECK(rank_bareiss(rat_matrix({{1}, {2}, {3}})) == 1);
}

TEST_CASE("rank over a cyclotomic field") {
    CycField f(4);
    CycNumber i = f.root_of_unity(4);
    std::vector<std::vector<CycNumber>> m = {
        {f.one(), i},
        {i, -f.one()},  // second row = i * first row
    };
    CHECK(rank_bareiss(m) == 1);
    m[1][1] = f.one();
    CHECK(rank_bareiss(m) == 2);
}

TEST_CASE("echelon span membership") {
    Echelon<Rational> e;
    auto row = [](std::initializer_list<std::pair<long, long>> entries) {
        Echelon<Rational>::Row r;
        for (auto [c, v] : entries) r.emplace(c, Rational(v));
        return r;
    };
    CHECK(e.insert(row({{0, 1}, {1, 2}})));
    CHECK(e.insert(row({{1, 1}, {2, 1}})));
    CHECK_FALSE(e.insert(row({{0, 2}, {1, 2}, {2, -2}})));  // combination of the first two
    CHECK(e.rank() == 2);
    CHECK(e.contains(row({{0, 3}, {1, 6}})));
    CHECK(e.contains(row({{0, 1}, {1, 1}, {2, -1}})));
    CHECK_FALSE(e.contains(row({{2, 1}})));
    CHECK_FALSE(e.contains(row({{3, 1}})));
}

TEST_CASE("echelon agrees with bareiss rank on random matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> val(-3, 3);
    for (int iter = 0; iter < 50; ++iter) {
        size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
        Echelon<Rational> e;
        for (size_t r = 0; r < rows; ++r) {
            Echelon<Rational>::Row sparse;
            for (size_t c = 0; c < cols; ++c) {
                long v = val(rng);
                m[r][c] = Rational(v);
                if (v != 0) sparse.emplace(static_cast<long>(c), Rational(v));
            }
            e.insert(std::move(sparse));
        }
        CHECK(e.rank() == rank_bareiss(m));
    }
}
