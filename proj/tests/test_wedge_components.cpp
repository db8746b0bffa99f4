#include <doctest.h>

#include <map>

#include "wedgelab/oracle.hpp"
#include "wedgelab/report.hpp"
#include "wedgelab/selfcheck.hpp"

using namespace wedgelab;

namespace {

std::vector<std::vector<int>> tuples(const std::vector<StaircasePrime>& primes) {
    std::vector<std::vector<int>> out;
    for (auto& p : primes) out.push_back(p.t);
    return out;
}

}  // namespace

TEST_CASE("minimal prime enumeration for small hypersurfaces") {
    const auto xy = MonomialHypersurface::create({1, 1});
    CHECK(tuples(enumerate_minimal_primes(xy, 1)) ==
          std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});

    const auto xy2 = MonomialHypersurface::create({1, 2});
    CHECK(tuples(enumerate_minimal_primes(xy2, 2)) ==
          std::vector<std::vector<int>>{{0, 2}, {1, 1}, {3, 0}});

    const auto xyz = MonomialHypersurface::create({1, 1, 1});
    CHECK(enumerate_minimal_primes(xyz, 2).size() == 10);  // compositions of 3 into 3 parts

    const auto fat = MonomialHypersurface::create({2});
    CHECK(tuples(enumerate_minimal_primes(fat, 1)) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("staircase primes expand to the right coordinate sets") {
    const auto xy = MonomialHypersurface::create({1, 1});
    const StaircasePrime p = StaircasePrime::create(1, {2, 0});
    CHECK(p.height() == 3);
    const VariablePrime expanded = p.expand(xy);
    CHECK(expanded.vars == std::vector<Variable>{Variable::wedge("x", 0, 0),
                                                 Variable::wedge("x", 0, 1),
                                                 Variable::wedge("x", 1, 0)});
    // expansion size matches the triangular-number height
    for (int t1 = 0; t1 <= 3; ++t1)
        for (int t2 = 0; t2 <= 3; ++t2) {
            const StaircasePrime q = StaircasePrime::create(2, {t1, t2});
            CHECK(static_cast<int>(q.expand(xy).size()) == q.height());
        }
    CHECK_THROWS_AS(StaircasePrime::create(1, {3, 0}), std::invalid_argument);
}

TEST_CASE("radical generators of hypersurface wedge ideals") {
    const auto xy = MonomialHypersurface::create({1, 1});
    CHECK(radical_generators(xy, 1).size() == 5);

    const auto fat = MonomialHypersurface::create({2});
    const MonomialIdeal fat_rad = radical_generators(fat, 1);
    CHECK(fat_rad == MonomialIdeal::from({Monomial::variable(Variable::wedge("x", 0, 0))}));

    const auto line = MonomialHypersurface::create({1});
    const MonomialIdeal line_rad = radical_generators(line, 2);
    CHECK(line_rad.size() == 6);
    for (auto& g : line_rad.generators()) CHECK(g.total_degree() == 1);
}

TEST_CASE("radical of a monomial scheme sums the per-generator radicals") {
    // single generator reduces to the hypersurface case
    const auto xy = MonomialHypersurface::create({1, 1});
    CHECK(radical_monomial_scheme({{1, 1}}, 1) == radical_generators(xy, 1));

    // (xy, yz) at order 0
    const MonomialIdeal rad = radical_monomial_scheme({{1, 1, 0}, {0, 1, 1}}, 0);
    const Monomial xy00 = Monomial::from(
        {{Variable::wedge("x", 0, 0), 1}, {Variable::wedge("y", 0, 0), 1}});
    const Monomial yz00 = Monomial::from(
        {{Variable::wedge("y", 0, 0), 1}, {Variable::wedge("z", 0, 0), 1}});
    CHECK(rad == MonomialIdeal::from({xy00, yz00}));

    // two linear generators give all six coordinates at order 1
    const MonomialIdeal lin = radical_monomial_scheme({{1, 0}, {0, 1}}, 1);
    CHECK(lin.size() == 6);
    for (auto& g : lin.generators()) CHECK(g.total_degree() == 1);
}

TEST_CASE("component heights and dimensions") {
    const auto xyz = MonomialHypersurface::create({1, 1, 1});
    CHECK(component_report(StaircasePrime::create(2, {3, 0, 0}), xyz, 2).height == 6);
    CHECK(component_report(StaircasePrime::create(2, {2, 1, 0}), xyz, 2).height == 4);
    const ComponentReport r = component_report(StaircasePrime::create(2, {1, 1, 1}), xyz, 2);
    CHECK(r.height == 3);
    CHECK(r.dim == 15);  // ambient 18 minus height 3
    CHECK(xyz.ambient_wedge_dimension(2) == 18);
    CHECK_THROWS_AS(component_report(StaircasePrime::create(2, {1, 0, 0}), xyz, 2),
                    std::invalid_argument);
}

TEST_CASE("hypersurface verdicts") {
    SUBCASE("xy at order 1 is neither pure nor irreducible") {
        const LciVerdict v = lci_verdict(MonomialHypersurface::create({1, 1}), 1);
        CHECK(v.dim == 4);
        CHECK(v.expected_dim == 3);
        CHECK_FALSE(v.pure_dimensional);
        CHECK_FALSE(v.dim_matches_expected);
        CHECK_FALSE(v.irreducible);
    }
    SUBCASE("a line in the line is a point of the expected dimension") {
        const LciVerdict v = lci_verdict(MonomialHypersurface::create({1}), 2);
        CHECK(v.dim == 0);
        CHECK(v.expected_dim == 0);
        CHECK(v.pure_dimensional);
        CHECK(v.dim_matches_expected);
        CHECK(v.irreducible);
    }
    SUBCASE("the double line at order 0 is the surface itself") {
        // single prime (x00) of height 1 in a 2-dimensional ambient
        const auto fat = MonomialHypersurface::create({2}, 2);
        const auto primes = enumerate_minimal_primes(fat, 0);
        REQUIRE(primes.size() == 1);
        CHECK(primes.front().t == std::vector<int>{1});
        CHECK(brute_force_minimal_primes({2}, 0) ==
              std::vector<std::vector<int>>{{1}});
        const LciVerdict v = lci_verdict(fat, 0);
        CHECK(v.dim == 1);
        CHECK(v.expected_dim == 1);
        CHECK(v.pure_dimensional);
        CHECK(v.dim_matches_expected);
        CHECK(v.irreducible);
    }
    SUBCASE("the double line at order 1 overshoots the expected dimension") {
        const LciVerdict v = lci_verdict(MonomialHypersurface::create({2}, 2), 1);
        CHECK(v.dim == 5);
        CHECK(v.expected_dim == 3);
        CHECK(v.pure_dimensional);  // a single component
        CHECK_FALSE(v.dim_matches_expected);
        CHECK(v.irreducible);
    }
}

TEST_CASE("order profiles of wedge points") {
    const auto xy = MonomialHypersurface::create({1, 1});
    const int m = 2;

    std::map<Variable, Rational> zero_point;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i <= m; ++i)
            for (int j = 0; i + j <= m; ++j) zero_point.emplace(xy.wedge(k, i, j), Rational(0));
    CHECK(order_profile(zero_point, xy, m) == std::vector<int>{3, 3});

    std::map<Variable, Rational> point = zero_point;
    point[xy.wedge(0, 1, 0)] = 1;  // x vanishes to order exactly 1
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) point[xy.wedge(1, i, j)] = 5;
    CHECK(order_profile(point, xy, m) == std::vector<int>{1, 0});

    // the 0/1 witness of a staircase prime has profile exactly t
    for (auto& prime : enumerate_minimal_primes(xy, m)) {
        std::map<Variable, Rational> witness;
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i <= m; ++i)
                for (int j = 0; i + j <= m; ++j)
                    witness.emplace(xy.wedge(k, i, j),
                                    Rational(i + j < prime.t[k] ? 0 : 1));
        CHECK(order_profile(witness, xy, m) == prime.t);
    }

    std::map<Variable, Rational> partial;
    CHECK_THROWS_AS(order_profile(partial, xy, m), std::invalid_argument);
}

TEST_CASE("order profile decides membership in the wedge scheme") {
    // a point kills every generator exactly when its profile satisfies
    // sum a_k t_k >= m+1, checked here by exact rational evaluation
    Rng rng(47);
    for (auto& exps : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}}) {
        const MonomialHypersurface surface = MonomialHypersurface::create(exps);
        for (int m = 1; m <= 3; ++m) {
            const WedgeIdeal wedge = hypersurface_wedge_ideal(surface, m);
            for (int trial = 0; trial < 10; ++trial) {
                std::map<Variable, Rational> point;
                for (auto& v : wedge.variables)
                    point.emplace(v, Rational(static_cast<long>(rng.below(3)) - 1));
                const std::vector<int> profile = order_profile(point, surface, m);
                long weight = 0;
                for (int k = 0; k < surface.r(); ++k)
                    weight += static_cast<long>(exps[k]) * profile[k];
                bool all_zero = true;
                for (auto& [key, g] : wedge.generators)
                    if (g.evaluate(point) != 0) all_zero = false;
                CHECK(all_zero == (weight >= m + 1));
            }
        }
    }
}

TEST_CASE("ambient dimension beyond the equation variables") {
    // xy inside A^3: heights are unchanged, dimensions grow with the ambient
    const auto surface = MonomialHypersurface::create({1, 1}, 3);
    const ComponentReport r = component_report(StaircasePrime::create(1, {1, 1}), surface, 1);
    CHECK(r.height == 2);
    CHECK(r.dim == 9 - 2);
    const LciVerdict v = lci_verdict(surface, 1);
    CHECK(v.expected_dim == 6);
    CHECK(v.dim == 7);
    CHECK_FALSE(v.pure_dimensional);
    CHECK_THROWS_AS(MonomialHypersurface::create({1, 1}, 1), std::invalid_argument);
}

TEST_CASE("radical equals the intersection of the expanded minimal primes") {
    const CheckResult r = check_radical_identity(3, 2, 3);
    CHECK(r.ok);
    CHECK(r.cases == 56);
}

TEST_CASE("staircase enumeration matches the brute-force filter") {
    const CheckResult r = check_prime_enumeration(3, 3, 3);
    CHECK(r.ok);
}

TEST_CASE("generic cover engine agrees with the staircase description") {
    const CheckResult r = check_generic_prime_oracle(3, 2, 3);
    CHECK(r.ok);
}

TEST_CASE("reduced hypersurfaces: tuple sums and counts") {
    const CheckResult r = check_reduced_counts(4, 5);
    CHECK(r.ok);
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(11, 4) == 330);
}

TEST_CASE("generators lie in every component prime and vanish at its points") {
    CHECK(check_containment(3, 2, 3).ok);
    CHECK(check_vanishing(3, 2, 3, 65521, 3, 1).ok);
}

TEST_CASE("report JSON carries the fixed field names") {
    const std::string json =
        HypersurfaceReport::compute(MonomialHypersurface::create({1, 1}), 1).to_json();
    for (const char* key : {"\"m\":", "\"a\":", "\"primes\":", "\"t\":", "\"height\":",
                            "\"dim\":", "\"radical_gens\":", "\"verdict\":",
                            "\"expected_dim\":", "\"pure_dimensional\":",
                            "\"dim_matches_expected\":", "\"irreducible\":"})
        CHECK(json.find(key) != std::string::npos);
}
