#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kstab/flag_degree.hpp"
#include "oracles.hpp"

#include <map>

using namespace kstab;

namespace {

const std::vector<BigRational> kF4Scale{BigRational(1, 2)};

RootSystem f4() { return RootSystem::build(DynkinDiagram::parse("F4"), kF4Scale); }

WeightPencil pencil(const Weight& constant, const Weight& slope) { return {constant, slope}; }

// x omega_1 + (8 - x) omega_3
WeightPencil f4_pencil() {
    return pencil(BigRational(8) * Weight::fundamental(4, 3), Weight::fundamental(4, 1) - Weight::fundamental(4, 3));
}

UniPoly power_of_linear(int root, unsigned k) { return UniPoly::linear(-root, 1).pow(k); }

}  // namespace

TEST_CASE("complementary roots") {
    const auto rs = f4();
    const Marking s13({1, 3}, 4);
    const auto c = complementary_roots(rs, s13);
    CHECK(c.size() == 22);
    for (const auto& g : c) {
        CHECK_FALSE(g == Root{Eigen::Vector4i(0, 1, 0, 0)});
        CHECK_FALSE(g == Root{Eigen::Vector4i(0, 0, 0, 1)});
    }
    const auto ag = RootSystem::build(DynkinDiagram::parse("A1xG2"));
    CHECK(complementary_roots(ag, Marking({1, 2, 3}, 3)).size() == 7);
    CHECK(complementary_roots(rs, Marking({1, 2, 3, 4}, 4)).size() == 24);
    // dim G/P_{omega_1} for F4
    CHECK(complementary_roots(rs, Marking({1}, 4)).size() == 15);
}

TEST_CASE("marking validation") {
    CHECK_THROWS_AS(Marking({}, 4), InputError);
    CHECK_THROWS_AS(Marking({0}, 4), InputError);
    CHECK_THROWS_AS(Marking({5}, 4), InputError);
    CHECK(Marking({3, 1, 3}, 4).nodes() == std::vector<int>{1, 3});
}

TEST_CASE("complementary set grows with the marking") {
    const auto rs = RootSystem::build(DynkinDiagram::parse("E6"));
    std::size_t previous = 0;
    std::vector<int> nodes;
    for (int i = 1; i <= 6; ++i) {
        nodes.push_back(i);
        const auto size = complementary_roots(rs, Marking(nodes, 6)).size();
        CHECK(size >= previous);
        previous = size;
    }
    CHECK(previous == 36);
}

TEST_CASE("degrees of projective spaces and Grassmannians against tableaux counts") {
    const auto a1 = RootSystem::build(DynkinDiagram::parse("A1"));
    CHECK(degree(a1, Marking({1}, 1), Weight::fundamental(1, 1)) == BigRational(1));
    for (int n = 1; n <= 8; ++n) {
        const auto rs = RootSystem::build(DynkinDiagram({{'A', n}}));
        CHECK(degree(rs, Marking({1}, n), Weight::fundamental(n, 1)) == BigRational(1));
        CHECK(degree(rs, Marking({n}, n), Weight::fundamental(n, n)) == BigRational(1));
    }
    // Gr(k, n) sits in A_{n-1} at node k; its Pluecker degree counts SYT of a k x (n-k) box.
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {2, 8}}) {
        CAPTURE(k);
        CAPTURE(n);
        const auto rs = RootSystem::build(DynkinDiagram({{'A', n - 1}}));
        const auto expected = oracle::count_rectangular_syt(k, n - k);
        CHECK(degree(rs, Marking({k}, n - 1), Weight::fundamental(n - 1, k)) == BigRational(BigInt(expected)));
    }
    CHECK(oracle::count_rectangular_syt(2, 2) == 2);
    CHECK(oracle::count_rectangular_syt(2, 3) == 5);
}

TEST_CASE("degree preconditions") {
    const auto rs = RootSystem::build(DynkinDiagram::parse("A3"));
    const Marking s2({2}, 3);
    CHECK_THROWS_AS(degree(rs, s2, Weight::fundamental(3, 1)), PreconditionError);
    CHECK_THROWS_AS(degree(rs, s2, BigRational(-1) * Weight::fundamental(3, 2)), PreconditionError);
    CHECK_THROWS_AS(degree(rs, s2, Weight::fundamental(2, 2)), InputError);
    // nef boundary: omega_2 on the full flag variety is not ample, degree 0
    CHECK(degree(rs, Marking({1, 2, 3}, 3), Weight::fundamental(3, 2)).is_zero());
}

TEST_CASE("F4 pencil products match the displayed factorizations") {
    const auto rs = f4();
    const Marking s13({1, 3}, 4);
    CHECK(rho_product(rs, s13) == BigRational(BigInt(16) * 2187 * 625 * 49 * 11));
    const UniPoly expected = BigRational(-16384) * UniPoly::x().pow(2) * power_of_linear(8, 7) *
                             power_of_linear(-8, 2) * power_of_linear(24, 2) * power_of_linear(16, 2);
    CHECK(pencil_numerator_product(rs, s13, f4_pencil()) == expected);
    const UniPoly deg = degree_pencil(rs, s13, f4_pencil());
    CHECK(deg == expected * (BigRational(factorial(22)) / rho_product(rs, s13)));
}

TEST_CASE("F4 per-root table") {
    const auto rows = pencil_table(f4(), Marking({1, 3}, 4), f4_pencil());
    const std::map<std::string, std::pair<std::string, std::string>> expected{
        {"(1,0,0,0)", {"x", "1"}},           {"(0,0,1,0)", {"(8-x)/2", "1/2"}}, {"(1,1,0,0)", {"x", "2"}},
        {"(0,1,1,0)", {"(8-x)/2", "3/2"}},   {"(0,0,1,1)", {"(8-x)/2", "1"}},   {"(1,1,1,0)", {"(8+x)/2", "5/2"}},
        {"(0,1,1,1)", {"(8-x)/2", "2"}},     {"(1,1,1,1)", {"(8+x)/2", "3"}},   {"(0,1,2,0)", {"8-x", "2"}},
        {"(1,1,2,0)", {"8", "3"}},           {"(0,1,2,1)", {"8-x", "5/2"}},     {"(1,2,2,0)", {"8", "4"}},
        {"(1,1,2,1)", {"8", "7/2"}},         {"(0,1,2,2)", {"8-x", "3"}},       {"(1,2,2,1)", {"8", "9/2"}},
        {"(1,1,2,2)", {"8", "4"}},           {"(1,2,3,1)", {"(24-x)/2", "5"}},  {"(1,2,2,2)", {"8", "5"}},
        {"(1,2,3,2)", {"(24-x)/2", "11/2"}}, {"(1,2,4,2)", {"16-x", "6"}},      {"(1,3,4,2)", {"16-x", "7"}},
        {"(2,3,4,2)", {"16", "8"}},
    };
    REQUIRE(rows.size() == expected.size());
    for (const auto& row : rows) {
        const auto it = expected.find(row.root.to_string());
        REQUIRE(it != expected.end());
        CHECK(row.numerator.to_string() == it->second.first);
        CHECK(row.denominator.to_string() == it->second.second);
    }
}

TEST_CASE("A1xG2 pencil") {
    const auto rs = RootSystem::build(DynkinDiagram::parse("A1xG2"));
    const Marking all({1, 2, 3}, 3);
    const Weight wy = Weight::fundamental(3, 3);
    const Weight wz = Weight::fundamental(3, 1) + Weight::fundamental(3, 2);
    // x omega_Y + (6 - 2x) omega_Z
    const WeightPencil p{BigRational(6) * wz, wy - BigRational(2) * wz};
    CHECK(rho_product(rs, all) == BigRational(8 * 81 * 5));
    const UniPoly expected = BigRational(8 * 81) * UniPoly::x() * power_of_linear(3, 2) * power_of_linear(6, 1) *
                             power_of_linear(-6, 1) * power_of_linear(12, 1);
    CHECK(pencil_numerator_product(rs, all, p) == expected);
    CHECK(degree_pencil(rs, all, p) == expected * (BigRational(5040) / BigRational(8 * 81 * 5)));
    const auto rows = pencil_table(rs, all, p);
    const auto it = std::find_if(rows.begin(), rows.end(), [](const PencilRow& r) { return r.root.to_string() == "(0,1,1)"; });
    REQUIRE(it != rows.end());
    CHECK(it->numerator.to_string() == "6+x");
    CHECK(it->denominator == BigRational(4));
}

TEST_CASE("zero pencil has zero degree polynomial") {
    const auto rs = f4();
    CHECK(degree_pencil(rs, Marking({1, 3}, 4), pencil(Weight::zero(4), Weight::zero(4))).is_zero());
}

TEST_CASE("pencil support must lie in the marking") {
    const auto rs = f4();
    CHECK_THROWS_AS(degree_pencil(rs, Marking({1}, 4), f4_pencil()), PreconditionError);
    CHECK_THROWS_AS(degree_bivariate(rs, Marking({1}, 4), Weight::fundamental(4, 1), Weight::fundamental(4, 3)),
                    PreconditionError);
}

TEST_CASE("bivariate degree polynomial") {
    const auto rs = f4();
    const Marking s13({1, 3}, 4);
    const BiPoly p = degree_bivariate(rs, s13, Weight::fundamental(4, 1), Weight::fundamental(4, 3));
    CHECK(p.homogeneous_degree() == 22);
    CHECK(specialize(p, 8, 1) == degree_pencil(rs, s13, f4_pencil()));
    CHECK(coefficient(p, 0, 22).is_zero());

    // collapse: w_b = 0 leaves s^d deg(w_a) on the same flag variety
    const auto a3 = RootSystem::build(DynkinDiagram::parse("A3"));
    const BiPoly q = degree_bivariate(a3, Marking({2}, 3), Weight::fundamental(3, 2), Weight::zero(3));
    REQUIRE(q.terms().size() == 1);
    CHECK(coefficient(q, 4, 0) == degree(a3, Marking({2}, 3), Weight::fundamental(3, 2)));

    // scalar degree at an interior point agrees with the pencil: x = 4 gives 4 (omega_1 + omega_3)
    const BigRational at_point = degree(rs, s13, Weight::fundamental(4, 1) + Weight::fundamental(4, 3));
    CHECK(degree_pencil(rs, s13, f4_pencil()).evaluate(4) == at_point * pow(BigRational(4), 22));
    const auto mixed = mixed_degrees(p, 22);
    CHECK(mixed.size() == 23);
    CHECK(mixed[0].is_zero());
}

TEST_CASE("degrees are invariant under per-component symmetrizer scaling") {
    const std::vector<BigRational> doubled{BigRational(1)};
    const auto a = RootSystem::build(DynkinDiagram::parse("F4"), kF4Scale);
    const auto b = RootSystem::build(DynkinDiagram::parse("F4"), doubled);
    const std::vector<BigRational> weird{BigRational(7, 3), BigRational(2)};
    const auto c = RootSystem::build(DynkinDiagram::parse("A1xG2"));
    const auto d = RootSystem::build(DynkinDiagram::parse("A1xG2"), weird);
    const Marking s13({1, 3}, 4);
    CHECK(degree_pencil(a, s13, f4_pencil()) == degree_pencil(b, s13, f4_pencil()));
    CHECK(degree_bivariate(a, s13, Weight::fundamental(4, 1), Weight::fundamental(4, 3)) ==
          degree_bivariate(b, s13, Weight::fundamental(4, 1), Weight::fundamental(4, 3)));
    const Marking all({1, 2, 3}, 3);
    const Weight w = Weight::fundamental(3, 1) + BigRational(2) * Weight::fundamental(3, 3) + Weight::fundamental(3, 2);
    CHECK(degree(c, all, w) == degree(d, all, w));
}

TEST_CASE("linear form rendering") {
    CHECK(LinearForm{0, 1}.to_string() == "x");
    CHECK(LinearForm{0, 3}.to_string() == "3x");
    CHECK(LinearForm{0, -1}.to_string() == "-x");
    CHECK(LinearForm{16, 0}.to_string() == "16");
    CHECK(LinearForm{0, 0}.to_string() == "0");
    CHECK(LinearForm{6, -2}.to_string() == "6-2x");
    CHECK(LinearForm{-3, 1}.to_string() == "x-3");
    CHECK(LinearForm{BigRational(1, 2), 0}.to_string() == "1/2");
    CHECK(LinearForm{0, BigRational(1, 2)}.to_string() == "x/2");
    CHECK(LinearForm{12, BigRational(-1, 2)}.to_string() == "(24-x)/2");
}
