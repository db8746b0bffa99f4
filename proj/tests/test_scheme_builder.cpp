#include <doctest.h>

#include <set>

#include "wedgelab/selfcheck.hpp"

using namespace wedgelab;

namespace {

const Variable X = Variable::plain("x");
const Variable Y = Variable::plain("y");
const Variable Z = Variable::plain("z");

Polynomial parse_in(const std::string& text, const std::vector<Variable>& vars) {
    return parse_polynomial(text, VariableTable(vars));
}

Polynomial parse_wedge(const std::string& text) {
    VariableTable table;
    for (const char* base : {"x", "y", "z"})
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) table.add(Variable::wedge(base, i, j));
    return parse_polynomial(text, table);
}

}  // namespace

TEST_CASE("wedge ideal of xy at order 1") {
    const auto input = AffineIdealInput::create({X, Y}, {parse_in("x*y", {X, Y})});
    const WedgeIdeal w = build_wedge_ideal(input, 1);
    CHECK(w.variables.size() == 6);
    CHECK(w.generators.size() == 3);
    CHECK(w.generators.at({1, 0, 0}) == parse_wedge("x_(0,0)*y_(0,0)"));
    CHECK(w.generators.at({1, 1, 0}) == parse_wedge("x_(0,0)*y_(1,0) + x_(1,0)*y_(0,0)"));
    CHECK(w.generators.at({1, 0, 1}) == parse_wedge("x_(0,0)*y_(0,1) + x_(0,1)*y_(0,0)"));
}

TEST_CASE("wedge ideal edge cases") {
    SUBCASE("order zero is the base change") {
        const auto input = AffineIdealInput::create({X}, {parse_in("x^2", {X})});
        const WedgeIdeal w = build_wedge_ideal(input, 0);
        CHECK(w.generators.size() == 1);
        CHECK(w.generators.at({1, 0, 0}) == parse_wedge("x_(0,0)^2"));
    }
    SUBCASE("a linear generator produces the coordinate list") {
        const auto input = AffineIdealInput::create({X}, {parse_in("x", {X})});
        const WedgeIdeal w = build_wedge_ideal(input, 2);
        CHECK(w.generators.size() == 6);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j)
                CHECK(w.generators.at({1, i, j}) ==
                      Polynomial::variable(Variable::wedge("x", i, j)));
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(AffineIdealInput::create({X, X}, {parse_in("x", {X})}),
                        std::invalid_argument);
        CHECK_THROWS_AS(AffineIdealInput::create({X}, {Polynomial::zero()}),
                        std::invalid_argument);
        CHECK_THROWS_AS(AffineIdealInput::create({X}, {parse_in("y", {X, Y})}),
                        std::invalid_argument);
        const auto input = AffineIdealInput::create({X}, {parse_in("x", {X})});
        CHECK_THROWS_AS(build_wedge_ideal(input, -1), std::invalid_argument);
    }
}

TEST_CASE("variable and generator counts follow the triangular formula") {
    Rng rng(5);
    const std::vector<Variable> all = {X, Y, Z};
    for (int nvars = 1; nvars <= 3; ++nvars) {
        const std::vector<Variable> vars(all.begin(), all.begin() + nvars);
        for (int m = 0; m <= 4; ++m) {
            const auto input =
                AffineIdealInput::create(vars, {random_polynomial(rng, vars, 3, 3),
                                                random_polynomial(rng, vars, 2, 2)});
            const WedgeIdeal w = build_wedge_ideal(input, m);
            CHECK(static_cast<int>(w.variables.size()) == nvars * (m + 1) * (m + 2) / 2);
            CHECK(static_cast<int>(w.generators.size()) == 2 * (m + 1) * (m + 2) / 2);
            const JetIdeal jet = build_jet_ideal(input, m);
            CHECK(static_cast<int>(jet.variables.size()) == nvars * (m + 1));
        }
    }
}

TEST_CASE("jet ideal examples") {
    const auto input = AffineIdealInput::create({X, Y}, {parse_in("x*y", {X, Y})});
    const JetIdeal jet = build_jet_ideal(input, 1);
    VariableTable table;
    for (const char* base : {"x", "y"})
        for (int n = 0; n <= 1; ++n) table.add(Variable::jet(base, n));
    CHECK(jet.generators.at({1, 0}) == parse_polynomial("x_(0)*y_(0)", table));
    CHECK(jet.generators.at({1, 1}) == parse_polynomial("x_(0)*y_(1) + x_(1)*y_(0)", table));

    const auto linear = AffineIdealInput::create({X}, {parse_in("x", {X})});
    const JetIdeal jl = build_jet_ideal(linear, 1);
    CHECK(jl.flattened().size() == 2);

    const auto square = AffineIdealInput::create({X}, {parse_in("x^2", {X})});
    const JetIdeal js = build_jet_ideal(square, 1);
    VariableTable xt;
    xt.add(Variable::jet("x", 0));
    xt.add(Variable::jet("x", 1));
    CHECK(js.generators.at({1, 0}) == parse_polynomial("x_(0)^2", xt));
    CHECK(js.generators.at({1, 1}) == parse_polynomial("2*x_(0)*x_(1)", xt));
}

TEST_CASE("monomial generators have the expected term shape") {
    // every term of g_ij carries a_k factors per base variable and the
    // superscripts sum to (i,j)
    Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const int r = 1 + static_cast<int>(rng.below(3));
        std::vector<int> exps;
        for (int k = 0; k < r; ++k) exps.push_back(1 + static_cast<int>(rng.below(2)));
        const int m = static_cast<int>(rng.below(4));
        const MonomialHypersurface surface = MonomialHypersurface::create(exps);
        const WedgeIdeal w = hypersurface_wedge_ideal(surface, m);
        for (auto& [key, g] : w.generators) {
            for (auto& [mono, coeff] : g.terms()) {
                std::map<std::string, int> per_base;
                int sum_i = 0, sum_j = 0;
                for (auto& [v, e] : mono.factors()) {
                    per_base[v.base()] += e;
                    sum_i += v.sup_i() * e;
                    sum_j += v.sup_j() * e;
                }
                CHECK(sum_i == key.i);
                CHECK(sum_j == key.j);
                for (int k = 0; k < r; ++k)
                    CHECK(per_base[surface.names[k]] == exps[k]);
            }
        }
    }
}

TEST_CASE("specializing s to t collapses wedge generators onto jet generators") {
    const auto xy = AffineIdealInput::create({X, Y}, {parse_in("x*y", {X, Y})});
    CHECK(diagonal_check(xy, 1));
    const auto linear = AffineIdealInput::create({X}, {parse_in("x", {X})});
    for (int m = 0; m <= 3; ++m) CHECK(diagonal_check(linear, m));

    Rng rng(17);
    const std::vector<Variable> vars = {X, Y};
    for (int s = 0; s < 5; ++s) {
        const auto input = AffineIdealInput::create(vars, {random_polynomial(rng, vars, 3, 4)});
        CHECK(diagonal_check(input, 3));
    }
}

TEST_CASE("order-1 wedge generators equal two renamed jet copies") {
    const auto xy = AffineIdealInput::create({X, Y}, {parse_in("x*y", {X, Y})});
    CHECK(w1_product_check(xy));
    const auto smooth = AffineIdealInput::create({X}, {parse_in("x", {X})});
    CHECK(w1_product_check(smooth));
    const auto cusp =
        AffineIdealInput::create({X, Y, Z}, {parse_in("x^2*y - z^3", {X, Y, Z})});
    CHECK(w1_product_check(cusp));
    CHECK(diagonal_check(cusp, 3));
}

TEST_CASE("structural identities hold on random inputs") {
    const CheckResult r = check_structural(15, 123);
    CHECK(r.ok);
    CHECK(r.cases >= 17);
}
