#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "wedgelab/variable.hpp"

namespace wedgelab {

/// A power product of variables with positive exponents, kept sorted by the
/// variable order.  The empty product is 1.
class Monomial {
  public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;  // 1

    static Monomial one() { return {}; }
    static Monomial variable(const Variable& v, int exp = 1);
    /// accumulates duplicate variables and drops zero exponents
    static Monomial from(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int total_degree() const { return degree_; }
    int exponent(const Variable& v) const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    /// exact division; throws std::domain_error if not divisible
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    bool is_squarefree() const;
    /// the support: every exponent lowered to 1
    Monomial squarefree_part() const;
    bool contains(const Variable& v) const { return exponent(v) > 0; }

    std::string to_string() const;  // "x^2*y", "1" for the empty product

    /// graded-lex with earlier (smaller) variables more significant
    static std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);
    /// graded reverse lexicographic over the same variable sequence
    static std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    /// canonical order (grlex); makes Monomial usable as an ordered map key
    bool operator<(const Monomial& o) const { return grlex_compare(*this, o) < 0; }

  private:
    std::vector<Factor> factors_;  // sorted by Variable, exponents > 0
    int degree_ = 0;
};

}  // namespace wedgelab
