#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedgelab/groebner.hpp"
#include "wedgelab/oracle.hpp"
#include "wedgelab/rng.hpp"

namespace wedgelab {

/// Cross-validation suites run by the CLI `verify` command and the
/// acceptance tests.  Every suite pits an independent route against the
/// implementation it checks.
struct CheckResult {
    std::string name;
    bool ok = false;
    long cases = 0;
    double seconds = 0;
    std::string detail;  // first failure, or a short summary
};

/// enumerate_minimal_primes against the brute-force tuple filter, for every
/// exponent vector with r <= r_max, entries <= a_max, and every m <= m_max
CheckResult check_prime_enumeration(int r_max, int a_max, int m_max);

/// radical_generators against the intersection of the expanded minimal primes
CheckResult check_radical_identity(int r_max, int a_max, int m_max);

/// minimal_primes_squarefree(radical_generators) against the expanded
/// staircase primes
CheckResult check_generic_prime_oracle(int r_max, int a_max, int m_max);

/// every wedge generator lies in every enumerated prime (per-term test)
CheckResult check_containment(int r_max, int a_max, int m_max);

/// random points of every component kill every wedge generator over F_q
CheckResult check_vanishing(int r_max, int a_max, int m_max, std::uint32_t q, int trials,
                            std::uint64_t seed);

/// all-ones exponents: order tuples sum to m+1 and the component count is
/// binomial(m+r, r-1)
CheckResult check_reduced_counts(int r_max, int m_max);

/// diagonal_check and w1_product_check on `samples` random inputs (<= 3
/// variables, degree <= 3, m <= 3) plus the fixed inputs xy and x^2 y - z^3
CheckResult check_structural(int samples, std::uint64_t seed);

/// Gröbner sanity: products of generators with random polynomials stay in
/// the ideal; the normal form is a ring map modulo the ideal
CheckResult check_membership_closure(std::uint64_t seed);

/// Search for a monomial h with (W_1(xy) : h) equal to the coordinate-plus-
/// minor prime (x00, y00, x01*y10 - x10*y01); the found witness is reported
/// through `witness`.
CheckResult check_embedded_prime_quotient(std::string* witness = nullptr,
                                          GroebnerOptions options = {});

/// random nonzero polynomial: up to max_terms terms of total degree <=
/// max_degree over vars, small integer coefficients
Polynomial random_polynomial(Rng& rng, const std::vector<Variable>& vars, int max_degree,
                             int max_terms);

long binomial(int n, int k);

}  // namespace wedgelab
