#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wedgelab/monomial.hpp"
#include "wedgelab/rational.hpp"

namespace wedgelab {

/// Exact multivariate polynomial with rational coefficients.  Terms are kept
/// in canonical form (graded-lex descending, no zero coefficients), so
/// equality is structural and printing is bit-stable.
class Polynomial {
  public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;  // zero

    static Polynomial zero() { return {}; }
    static Polynomial constant(const Rational& c);
    static Polynomial constant(long c) { return constant(Rational(c)); }
    static Polynomial variable(const Variable& v);
    static Polynomial term(const Monomial& m, const Rational& c);
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    /// total degree; -1 for the zero polynomial
    int total_degree() const;
    /// leading term in the canonical (grlex) order
    const Term& leading_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const;

    /// all distinct variables, sorted
    std::vector<Variable> variables() const;

    /// ring-hom substitution; variables absent from the map are untouched
    Polynomial substitute(const std::map<Variable, Polynomial>& images) const;
    /// variable renaming (a special case of substitute, but cheaper)
    Polynomial rename(const std::map<Variable, Variable>& names) const;

    /// exact evaluation; every variable must be assigned
    Rational evaluate(const std::map<Variable, Rational>& point) const;
    /// evaluation in F_q, q prime; every variable must be assigned
    std::uint32_t evaluate_mod(const std::map<Variable, std::uint32_t>& point,
                               std::uint32_t q) const;

    std::string to_string() const;  // canonical; "0" for zero

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    /// a total order on canonical forms, for use in ordered containers
    bool operator<(const Polynomial& o) const;

  private:
    std::vector<Term> terms_;  // grlex descending, nonzero coefficients

    static Polynomial from_map(std::map<Monomial, Rational>&& acc);
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace wedgelab
