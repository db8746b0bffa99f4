#include <doctest.h>

#include "wedgelab/monomial_ideal.hpp"
#include "wedgelab/rng.hpp"
#include "wedgelab/selfcheck.hpp"
#include "wedgelab/wedge_components.hpp"

using namespace wedgelab;

namespace {

const Variable X = Variable::plain("x");
const Variable Y = Variable::plain("y");
const Variable Z = Variable::plain("z");

Monomial mono(std::vector<std::pair<Variable, int>> factors) {
    return Monomial::from(std::move(factors));
}

MonomialIdeal ideal(std::vector<Monomial> gens) { return MonomialIdeal::from(std::move(gens)); }

}  // namespace

TEST_CASE("radical of a monomial ideal is the square-free support") {
    CHECK(radical_monomial(ideal({mono({{X, 2}, {Y, 1}})})) == ideal({mono({{X, 1}, {Y, 1}})}));
    CHECK(radical_monomial(ideal({mono({{X, 2}}), mono({{X, 1}, {Y, 1}})})) ==
          ideal({Monomial::variable(X)}));
    // idempotent on an already-square-free ideal
    const MonomialIdeal sf = ideal({mono({{X, 1}, {Y, 1}}), mono({{Y, 1}, {Z, 1}})});
    CHECK(radical_monomial(sf) == minimalize(sf));
    CHECK(radical_monomial(radical_monomial(sf)) == radical_monomial(sf));
    CHECK(radical_monomial(MonomialIdeal{}) == MonomialIdeal{});  // zero ideal
}

TEST_CASE("minimalize removes divisible generators") {
    CHECK(minimalize(ideal({mono({{X, 1}, {Y, 1}}), mono({{X, 1}, {Y, 1}, {Z, 1}})})) ==
          ideal({mono({{X, 1}, {Y, 1}})}));
    CHECK(minimalize(ideal({Monomial::variable(X), Monomial::variable(Y),
                            Monomial::variable(X)})) ==
          ideal({Monomial::variable(X), Monomial::variable(Y)}));
    // the order-1 radical generators of xy are already minimal
    const MonomialIdeal rad = radical_generators(MonomialHypersurface::create({1, 1}), 1);
    CHECK(rad.size() == 5);
    CHECK(minimalize(rad) == rad);
    for (auto& u : rad.generators())
        for (auto& v : rad.generators())
            if (u != v) CHECK_FALSE(u.divides(v));
}

TEST_CASE("intersection of monomial ideals by lcm tables") {
    CHECK(intersect(ideal({Monomial::variable(X)}), ideal({Monomial::variable(Y)})) ==
          ideal({mono({{X, 1}, {Y, 1}})}));
    CHECK(intersect(ideal({Monomial::variable(X), Monomial::variable(Y)}),
                    ideal({Monomial::variable(X)})) == ideal({Monomial::variable(X)}));

    // the three coordinate primes of W_1(xy) meet in its radical
    auto wv = [](const char* base, int i, int j) { return Variable::wedge(base, i, j); };
    const MonomialIdeal p0 =
        VariablePrime::from({wv("x", 0, 0), wv("y", 0, 0)}).to_ideal();
    const MonomialIdeal p1 =
        VariablePrime::from({wv("x", 0, 0), wv("x", 1, 0), wv("x", 0, 1)}).to_ideal();
    const MonomialIdeal p2 =
        VariablePrime::from({wv("y", 0, 0), wv("y", 1, 0), wv("y", 0, 1)}).to_ideal();
    const MonomialIdeal meet = intersect(intersect(p0, p1), p2);
    CHECK(meet == ideal({mono({{wv("x", 0, 0), 1}, {wv("y", 0, 0), 1}}),
                         mono({{wv("x", 0, 0), 1}, {wv("y", 1, 0), 1}}),
                         mono({{wv("x", 0, 0), 1}, {wv("y", 0, 1), 1}}),
                         mono({{wv("x", 1, 0), 1}, {wv("y", 0, 0), 1}}),
                         mono({{wv("x", 0, 1), 1}, {wv("y", 0, 0), 1}})}));
    CHECK(meet == radical_generators(MonomialHypersurface::create({1, 1}), 1));

    // commutative and associative up to minimalize
    CHECK(intersect(p0, p1) == intersect(p1, p0));
    CHECK(intersect(intersect(p0, p1), p2) == intersect(p0, intersect(p1, p2)));
}

TEST_CASE("per-term prime membership") {
    const VariablePrime p = VariablePrime::from({Variable::wedge("x", 0, 0), Variable::wedge("y", 0, 0)});
    VariableTable table;
    for (const char* base : {"x", "y"})
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; i + j <= 1; ++j) table.add(Variable::wedge(base, i, j));
    CHECK(prime_contains(p, parse_polynomial("x_(0,0)*y_(1,0) + x_(1,0)*y_(0,0)", table)));
    CHECK_FALSE(prime_contains(VariablePrime::from({Variable::wedge("x", 0, 0)}),
                               parse_polynomial("y_(0,0)", table)));
    CHECK(prime_contains(p, Polynomial::zero()));
    CHECK(prime_contains(p, parse_polynomial("x_(0,0)^2 - x_(0,0)*y_(0,0)", table)));
    CHECK_FALSE(prime_contains(p, parse_polynomial("x_(0,0) + 1", table)));
}

TEST_CASE("minimal primes of square-free ideals by branching covers") {
    CHECK(minimal_primes_squarefree(ideal({mono({{X, 1}, {Y, 1}})})) ==
          std::vector<VariablePrime>{VariablePrime::from({X}), VariablePrime::from({Y})});
    CHECK(minimal_primes_squarefree(
              ideal({mono({{X, 1}, {Y, 1}}), mono({{Y, 1}, {Z, 1}}), mono({{X, 1}, {Z, 1}})})) ==
          std::vector<VariablePrime>{VariablePrime::from({X, Y}), VariablePrime::from({X, Z}),
                                     VariablePrime::from({Y, Z})});

    SUBCASE("the order-1 radical of xy has the three known primes") {
        const MonomialIdeal rad = radical_generators(MonomialHypersurface::create({1, 1}), 1);
        auto wv = [](const char* base, int i, int j) { return Variable::wedge(base, i, j); };
        const std::vector<VariablePrime> expected = {
            VariablePrime::from({wv("x", 0, 0), wv("x", 0, 1), wv("x", 1, 0)}),
            VariablePrime::from({wv("x", 0, 0), wv("y", 0, 0)}),
            VariablePrime::from({wv("y", 0, 0), wv("y", 0, 1), wv("y", 1, 0)})};
        CHECK(minimal_primes_squarefree(rad) == expected);
    }
    SUBCASE("edge cases are total") {
        CHECK(minimal_primes_squarefree(MonomialIdeal{}) ==
              std::vector<VariablePrime>{VariablePrime{}});
        CHECK(minimal_primes_squarefree(ideal({Monomial::one()})).empty());
        CHECK_THROWS_AS(minimal_primes_squarefree(ideal({mono({{X, 2}})})),
                        std::invalid_argument);
    }
}

TEST_CASE("sum of radicals is the radical of the sum") {
    CHECK(sum_radical({ideal({mono({{X, 2}})}), ideal({mono({{Y, 2}})})}) ==
          ideal({Monomial::variable(X), Monomial::variable(Y)}));
    const MonomialIdeal one = ideal({mono({{X, 2}, {Y, 1}})});
    CHECK(sum_radical({one}) == radical_monomial(one));
}

TEST_CASE("prime decomposition of random monomial ideals") {
    // intersecting the minimal primes of the radical recovers the radical
    Rng rng(31);
    const std::vector<Variable> universe = {Variable::plain("u"), Variable::plain("v"),
                                            Variable::plain("w"), X, Y, Z};
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng.below(5));
        for (int g = 0; g < count; ++g) {
            std::vector<Monomial::Factor> factors;
            for (auto& v : universe)
                if (rng.below(3) == 0)
                    factors.emplace_back(v, 1 + static_cast<int>(rng.below(3)));
            if (factors.empty()) factors.emplace_back(universe[rng.below(6)], 1);
            gens.push_back(Monomial::from(std::move(factors)));
        }
        const MonomialIdeal radical = radical_monomial(ideal(gens));
        const auto primes = minimal_primes_squarefree(radical);
        REQUIRE(!primes.empty());
        MonomialIdeal meet = primes.front().to_ideal();
        for (std::size_t k = 1; k < primes.size(); ++k)
            meet = intersect(meet, primes[k].to_ideal());
        CHECK(meet == radical);

        // the per-term criterion matches ideal containment for every prime
        for (auto& p : primes)
            for (auto& g : radical.generators())
                CHECK(prime_contains(p, Polynomial::term(g, 1)));
    }

    // and the criterion refuses a prime that misses a generator entirely
    const MonomialIdeal I = ideal({mono({{X, 1}, {Y, 1}}), mono({{Z, 1}})});
    const VariablePrime missing = VariablePrime::from({X, Y});
    bool all_contained = true;
    for (auto& g : I.generators())
        all_contained = all_contained && prime_contains(missing, Polynomial::term(g, 1));
    CHECK_FALSE(all_contained);
}
