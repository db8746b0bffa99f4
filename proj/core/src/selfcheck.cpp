#include "wedgelab/selfcheck.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace wedgelab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe_case(const std::vector<int>& a, int m) {
    std::string s = "a=(";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(a[k]);
    }
    return s + ") m=" + std::to_string(m);
}

// every exponent vector with r <= r_max and entries in 1..a_max, every
// m <= m_max
void for_each_case(int r_max, int a_max, int m_max,
                   const std::function<bool(const std::vector<int>&, int)>& body, bool& ok,
                   long& cases, std::string& detail) {
    for (int r = 1; r <= r_max && ok; ++r) {
        std::vector<int> a(r, 1);
        while (ok) {
            for (int m = 0; m <= m_max; ++m) {
                ++cases;
                if (!body(a, m)) {
                    ok = false;
                    detail = "first failure at " + describe_case(a, m);
                    break;
                }
            }
            int k = r - 1;
            while (k >= 0 && a[k] == a_max) a[k--] = 1;
            if (k < 0) break;
            ++a[k];
        }
    }
}

}  // namespace

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

Polynomial random_polynomial(Rng& rng, const std::vector<Variable>& vars, int max_degree,
                             int max_terms) {
    for (;;) {
        Polynomial p;
        const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
        for (int t = 0; t < terms; ++t) {
            std::vector<Monomial::Factor> factors;
            int budget = max_degree;
            for (auto& v : vars) {
                const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget + 1)));
                if (e > 0) factors.emplace_back(v, e);
                budget -= e;
            }
            long coeff = rng.range(1, 3) * (rng.below(2) ? 1 : -1);
            p += Polynomial::term(Monomial::from(std::move(factors)), Rational(coeff));
        }
        if (!p.is_zero()) return p;
    }
}

CheckResult check_prime_enumeration(int r_max, int a_max, int m_max) {
    CheckResult result;
    result.name = "prime enumeration vs brute force";
    const auto start = Clock::now();
    result.ok = true;
    for_each_case(
        r_max, a_max, m_max,
        [](const std::vector<int>& a, int m) {
            const MonomialHypersurface surface = MonomialHypersurface::create(a);
            const auto primes = enumerate_minimal_primes(surface, m);
            const auto brute = brute_force_minimal_primes(a, m);
            if (primes.size() != brute.size()) return false;
            for (std::size_t k = 0; k < primes.size(); ++k)
                if (primes[k].t != brute[k]) return false;
            return true;
        },
        result.ok, result.cases, result.detail);
    result.seconds = since(start);
    return result;
}

CheckResult check_radical_identity(int r_max, int a_max, int m_max) {
    CheckResult result;
    result.name = "radical generators vs prime intersection";
    const auto start = Clock::now();
    result.ok = true;
    for_each_case(
        r_max, a_max, m_max,
        [](const std::vector<int>& a, int m) {
            const MonomialHypersurface surface = MonomialHypersurface::create(a);
            const auto primes = enumerate_minimal_primes(surface, m);
            MonomialIdeal meet = primes.front().expand(surface).to_ideal();
            for (std::size_t k = 1; k < primes.size(); ++k)
                meet = intersect(meet, primes[k].expand(surface).to_ideal());
            return meet == radical_generators(surface, m);
        },
        result.ok, result.cases, result.detail);
    result.seconds = since(start);
    return result;
}

CheckResult check_generic_prime_oracle(int r_max, int a_max, int m_max) {
    CheckResult result;
    result.name = "staircase primes vs generic cover engine";
    const auto start = Clock::now();
    result.ok = true;
    for_each_case(
        r_max, a_max, m_max,
        [](const std::vector<int>& a, int m) {
            const MonomialHypersurface surface = MonomialHypersurface::create(a);
            std::vector<VariablePrime> expected;
            for (auto& prime : enumerate_minimal_primes(surface, m))
                expected.push_back(prime.expand(surface));
            std::sort(expected.begin(), expected.end());
            const auto generic = minimal_primes_squarefree(radical_generators(surface, m));
            return generic == expected;
        },
        result.ok, result.cases, result.detail);
    result.seconds = since(start);
    return result;
}

CheckResult check_containment(int r_max, int a_max, int m_max) {
    CheckResult result;
    result.name = "generator containment in every component prime";
    const auto start = Clock::now();
    result.ok = true;
    for_each_case(
        r_max, a_max, m_max,
        [](const std::vector<int>& a, int m) {
            const MonomialHypersurface surface = MonomialHypersurface::create(a);
            const WedgeIdeal wedge = hypersurface_wedge_ideal(surface, m);
            for (auto& prime : enumerate_minimal_primes(surface, m)) {
                const VariablePrime expanded = prime.expand(surface);
                for (auto& [key, g] : wedge.generators)
                    if (!prime_contains(expanded, g)) return false;
            }
            return true;
        },
        result.ok, result.cases, result.detail);
    result.seconds = since(start);
    return result;
}

CheckResult check_vanishing(int r_max, int a_max, int m_max, std::uint32_t q, int trials,
                            std::uint64_t seed) {
    CheckResult result;
    result.name = "component points kill every generator over F_q";
    const auto start = Clock::now();
    result.ok = true;
    for_each_case(
        r_max, a_max, m_max,
        [&](const std::vector<int>& a, int m) {
            const MonomialHypersurface surface = MonomialHypersurface::create(a);
            for (auto& prime : enumerate_minimal_primes(surface, m))
                if (!sample_vanishing(surface, prime, m, q, trials, seed)) return false;
            return true;
        },
        result.ok, result.cases, result.detail);
    result.seconds = since(start);
    return result;
}

CheckResult check_reduced_counts(int r_max, int m_max) {
    CheckResult result;
    result.name = "reduced case: tuple sums and composition counts";
    const auto start = Clock::now();
    result.ok = true;
    for (int r = 1; r <= r_max && result.ok; ++r) {
        for (int m = 0; m <= m_max && result.ok; ++m) {
            ++result.cases;
            const MonomialHypersurface surface =
                MonomialHypersurface::create(std::vector<int>(r, 1));
            const auto primes = enumerate_minimal_primes(surface, m);
            bool good = static_cast<long>(primes.size()) == binomial(m + r, r - 1);
            for (auto& prime : primes) {
                int sum = 0;
                for (int tk : prime.t) sum += tk;
                if (sum != m + 1) good = false;
            }
            if (!good) {
                result.ok = false;
                result.detail =
                    "first failure at " + describe_case(std::vector<int>(r, 1), m);
            }
        }
    }
    result.seconds = since(start);
    return result;
}

CheckResult check_structural(int samples, std::uint64_t seed) {
    CheckResult result;
    result.name = "diagonal and W1-product identities";
    const auto start = Clock::now();
    result.ok = true;

    const Variable x = Variable::plain("x");
    const Variable y = Variable::plain("y");
    const Variable z = Variable::plain("z");
    const std::vector<Variable> xyz = {x, y, z};

    auto run = [&](const AffineIdealInput& input, int m, const std::string& label) {
        ++result.cases;
        if (!diagonal_check(input, m) || !w1_product_check(input)) {
            result.ok = false;
            result.detail = "first failure at " + label;
            return false;
        }
        return true;
    };

    // the two fixed inputs
    const Polynomial fx = Polynomial::variable(x);
    const Polynomial fy = Polynomial::variable(y);
    const Polynomial fz = Polynomial::variable(z);
    run(AffineIdealInput::create({x, y}, {fx * fy}), 1, "xy");
    if (result.ok)
        run(AffineIdealInput::create({x, y, z}, {fx * fx * fy - fz * fz * fz}), 3, "x^2*y-z^3");

    Rng rng(seed);
    for (int s = 0; s < samples && result.ok; ++s) {
        const int nvars = 1 + static_cast<int>(rng.below(3));
        const std::vector<Variable> vars(xyz.begin(), xyz.begin() + nvars);
        const int ngens = 1 + static_cast<int>(rng.below(2));
        std::vector<Polynomial> gens;
        for (int g = 0; g < ngens; ++g) gens.push_back(random_polynomial(rng, vars, 3, 4));
        const int m = static_cast<int>(rng.below(4));
        run(AffineIdealInput::create(vars, gens), m, "random sample " + std::to_string(s));
    }
    result.seconds = since(start);
    return result;
}

CheckResult check_membership_closure(std::uint64_t seed) {
    CheckResult result;
    result.name = "ideal closure and normal-form ring map";
    const auto start = Clock::now();
    result.ok = true;

    const Variable x = Variable::plain("x");
    const Variable y = Variable::plain("y");
    const AffineIdealInput input = AffineIdealInput::create(
        {x, y}, {Polynomial::variable(x) * Polynomial::variable(y)});
    const WedgeIdeal wedge = build_wedge_ideal(input, 1);
    const std::vector<Polynomial> gens = wedge.flattened();
    const GroebnerBasis gb = GroebnerBasis::compute(gens);

    Rng rng(seed);
    for (int s = 0; s < 5 && result.ok; ++s) {
        const Polynomial h = random_polynomial(rng, wedge.variables, 2, 3);
        for (auto& g : gens) {
            ++result.cases;
            if (!gb.contains(g * h)) {
                result.ok = false;
                result.detail = "product of a generator left the ideal";
            }
        }
    }
    for (int s = 0; s < 10 && result.ok; ++s) {
        ++result.cases;
        const Polynomial f = random_polynomial(rng, wedge.variables, 3, 4);
        const Polynomial g = random_polynomial(rng, wedge.variables, 3, 4);
        if (gb.normal_form(f + g) != gb.normal_form(gb.normal_form(f) + gb.normal_form(g))) {
            result.ok = false;
            result.detail = "normal form is not additive modulo the ideal";
        }
    }
    result.seconds = since(start);
    return result;
}

CheckResult check_embedded_prime_quotient(std::string* witness, GroebnerOptions options) {
    CheckResult result;
    result.name = "embedded prime of W_1(xy) as an ideal quotient";
    const auto start = Clock::now();

    const Variable x = Variable::plain("x");
    const Variable y = Variable::plain("y");
    const AffineIdealInput input = AffineIdealInput::create(
        {x, y}, {Polynomial::variable(x) * Polynomial::variable(y)});
    const WedgeIdeal wedge = build_wedge_ideal(input, 1);
    const std::vector<Polynomial> gens = wedge.flattened();

    auto wv = [](const char* base, int i, int j) {
        return Polynomial::variable(Variable::wedge(base, i, j));
    };
    const std::vector<Polynomial> target = {
        wv("x", 0, 0), wv("y", 0, 0),
        wv("x", 0, 1) * wv("y", 1, 0) - wv("x", 1, 0) * wv("y", 0, 1)};
    const GroebnerBasis target_gb = GroebnerBasis::compute(target, MonomialOrder::grevlex(), options);

    // candidate monomials over the six wedge coordinates, by degree
    std::vector<Monomial> candidates;
    std::function<void(std::size_t, int, std::vector<Monomial::Factor>&)> build =
        [&](std::size_t from, int left, std::vector<Monomial::Factor>& factors) {
            if (left == 0) {
                candidates.push_back(Monomial::from(factors));
                return;
            }
            for (std::size_t k = from; k < wedge.variables.size(); ++k) {
                factors.emplace_back(wedge.variables[k], 1);
                build(k, left - 1, factors);
                factors.pop_back();
            }
        };
    for (int degree = 1; degree <= 3; ++degree) {
        std::vector<Monomial::Factor> factors;
        build(0, degree, factors);
    }

    for (auto& h : candidates) {
        ++result.cases;
        const Polynomial hp = Polynomial::term(h, 1);
        const std::vector<Polynomial> quotient = ideal_quotient(gens, hp, options);
        bool equal = !quotient.empty();
        for (auto& u : quotient)
            if (equal && !target_gb.contains(u)) equal = false;
        if (equal) {
            const GroebnerBasis quotient_gb =
                GroebnerBasis::compute(quotient, MonomialOrder::grevlex(), options);
            for (auto& v : target)
                if (!quotient_gb.contains(v)) equal = false;
        }
        if (equal) {
            result.ok = true;
            result.detail = "h = " + h.to_string();
            if (witness) *witness = h.to_string();
            break;
        }
    }
    if (!result.ok)
        result.detail = "no monomial of degree <= 3 realizes the embedded prime as a quotient";
    result.seconds = since(start);
    return result;
}

}  // namespace wedgelab
