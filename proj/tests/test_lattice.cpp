#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nashgate/catalog.hpp"
#include "nashgate/lattice.hpp"
#include "support/generators.hpp"

using nashgate::big_int;
using nashgate::big_rat;
using nashgate::catalog_lookup;
using nashgate::document_graph;
using nashgate::dual_graph;
using nashgate::intersection_matrix;
using nashgate::matrix;

namespace {

dual_graph catalog_graph(const char* name) {
    return std::get<dual_graph>(catalog_lookup(name));
}

// Brute-force positive-semidefinite witness: some nonzero x with entries in
// [-3, 3] and x^T M x >= 0.
bool quadratic_form_witness(const matrix<big_int>& m) {
    const std::size_t n = m.rows();
    std::vector<long long> x(n, -3);
    while (true) {
        bool nonzero = false;
        for (long long v : x)
            if (v != 0) nonzero = true;
        if (nonzero) {
            big_int q(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) q += m(i, j) * x[i] * x[j];
            if (q >= 0) return true;
        }
        std::size_t k = 0;
        while (k < n && x[k] == 3) x[k++] = -3;
        if (k == n) return false;
        ++x[k];
    }
}

}  // namespace

TEST_CASE("A2 is negative definite with minors 2 and 3") {
    auto r = nashgate::is_negative_definite(intersection_matrix(catalog_graph("A2")));
    CHECK(r.negative_definite);
    CHECK_FALSE(r.witness_order.has_value());
}

TEST_CASE("the zero 1x1 matrix is not negative definite") {
    matrix<big_int> m(1, 1);
    auto r = nashgate::is_negative_definite(m);
    CHECK_FALSE(r.negative_definite);
    REQUIRE(r.witness_order.has_value());
    CHECK(*r.witness_order == 1);
    CHECK(r.witness_minor == 0);
}

TEST_CASE("E8 is negative definite and unimodular") {
    auto m = intersection_matrix(catalog_graph("E8"));
    CHECK(nashgate::is_negative_definite(m).negative_definite);
    matrix<big_int> neg(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) neg(i, j) = -m(i, j);
    CHECK(nashgate::determinant(neg) == 1);
}

TEST_CASE("E8 intersection matrix has the expected shape") {
    auto m = intersection_matrix(catalog_graph("E8"));
    for (std::size_t i = 0; i < 8; ++i) CHECK(m(i, i) == -2);
    // chain E1..E7 plus E8 on the trivalent component E5
    const std::pair<std::size_t, std::size_t> edges[] = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    long long off_diagonal_total = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            off_diagonal_total += m(i, j).convert_to<long long>();
    CHECK(off_diagonal_total == 7);
    for (const auto& [i, j] : edges) CHECK(m(i, j) == 1);
    CHECK(m.is_symmetric());
}

TEST_CASE("catalog determinants of -M") {
    const std::pair<const char*, int> expected[] = {
        {"A1", 2}, {"A2", 3}, {"A8", 9}, {"D4", 4}, {"D8", 4},
        {"E6", 3}, {"E7", 2}, {"E8", 1},
    };
    for (const auto& [name, det] : expected) {
        auto m = intersection_matrix(catalog_graph(name));
        matrix<big_int> neg(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) neg(i, j) = -m(i, j);
        INFO(name);
        CHECK(nashgate::determinant(neg) == det);
    }
}

TEST_CASE("sign report for A2") {
    auto report = nashgate::inverse_sign_report(intersection_matrix(catalog_graph("A2")));
    CHECK(report.all_nonpositive);
    CHECK(report.offending.empty());
    CHECK(report.inverse(0, 0) == big_rat(-2, 3));
    CHECK(report.inverse(0, 1) == big_rat(-1, 3));
    CHECK(report.inverse(1, 1) == big_rat(-2, 3));
}

TEST_CASE("sign report for a single (-3)-curve") {
    matrix<big_int> m(1, 1);
    m(0, 0) = -3;
    auto report = nashgate::inverse_sign_report(m);
    CHECK(report.inverse(0, 0) == big_rat(-1, 3));
    CHECK(report.all_nonpositive);
}

TEST_CASE("E8 inverse entries are strictly negative integers") {
    auto m = intersection_matrix(catalog_graph("E8"));
    auto report = nashgate::inverse_sign_report(m);
    CHECK(report.all_nonpositive);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(report.inverse(i, j) < 0);
            CHECK(nashgate::is_integer(report.inverse(i, j)));
        }
    // the deepest entry sits on the trivalent component
    CHECK(report.inverse(4, 4) == -30);
    CHECK(report.inverse * nashgate::to_rational(m) == matrix<big_rat>::identity(8));
}

TEST_CASE("sign report rejects unsuitable matrices") {
    matrix<big_int> zero(1, 1);
    CHECK_THROWS_MATCHES(nashgate::inverse_sign_report(zero), nashgate::error,
                         Catch::Matchers::Predicate<nashgate::error>([](const auto& e) {
                             return e.code() == nashgate::errc::singular;
                         }));
    matrix<big_int> pos(1, 1);
    pos(0, 0) = 2;
    CHECK_THROWS_MATCHES(nashgate::inverse_sign_report(pos), nashgate::error,
                         Catch::Matchers::Predicate<nashgate::error>([](const auto& e) {
                             return e.code() == nashgate::errc::not_negative_definite;
                         }));
}

TEST_CASE("minimality audit") {
    CHECK(nashgate::minimality_audit(catalog_graph("E8")).empty());
    auto bad = nashgate::make_graph("demo", {{"E1", -1, 0, 0, 0, 0}}, {});
    CHECK(nashgate::minimality_audit(bad) == std::vector<std::size_t>{0});
    auto genus_one = nashgate::make_graph("demo", {{"E1", -1, 1, 0, 0, 0}}, {});
    CHECK(nashgate::minimality_audit(genus_one).empty());
    auto singular_curve = nashgate::make_graph("demo", {{"E1", -1, 0, 2, 0, 0}}, {});
    CHECK(nashgate::minimality_audit(singular_curve).empty());
}

TEST_CASE("inverse of a negative definite graph matrix is entrywise non-positive") {
    // structural property of connected resolution lattices, exercised over
    // random graphs; the acceptance suite runs the full 200-sample version
    std::mt19937_64 rng(1234);
    testgen::graph_options opt;
    opt.max_components = 8;
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testgen::random_negative_definite_graph(rng, opt);
        auto report = nashgate::inverse_sign_report(intersection_matrix(g));
        INFO(nashgate::serialize(g));
        CHECK(report.all_nonpositive);
        CHECK(report.offending.empty());
    }
}

TEST_CASE("quadratic-form oracle agrees one-sidedly with the Sylvester test") {
    std::mt19937_64 rng(999);
    testgen::graph_options opt;
    opt.max_components = 4;
    opt.self_min = -3;
    opt.self_max = -1;
    for (int trial = 0; trial < 80; ++trial) {
        auto g = testgen::random_connected_graph(rng, opt);
        auto m = intersection_matrix(g);
        if (quadratic_form_witness(m))
            CHECK_FALSE(nashgate::is_negative_definite(m).negative_definite);
    }
}
