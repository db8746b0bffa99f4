#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wedgelab/polynomial.hpp"

namespace wedgelab {

/// Raised when a Gröbner computation exceeds its S-pair budget.  A budget
/// failure is an explicit error, never a wrong answer.
class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Term order for the Gröbner engine: graded reverse lexicographic over the
/// canonical variable order, optionally preceded by the exponent of a single
/// eliminated variable (block order for elimination ideals).
class MonomialOrder {
  public:
    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder eliminate(const Variable& v) {
        MonomialOrder o;
        o.eliminated_ = v;
        return o;
    }

    bool less(const Monomial& a, const Monomial& b) const;
    bool has_elimination() const { return eliminated_.has_value(); }
    const Variable& eliminated() const { return *eliminated_; }

  private:
    std::optional<Variable> eliminated_;
};

struct GroebnerOptions {
    long spair_budget = 50'000;  // S-pairs reduced before giving up
};

/// Buchberger's algorithm with the product and chain criteria; exact rational
/// arithmetic; auto-reduced, monic, deterministic output.  Built for
/// desk-scale verification, not performance.
class GroebnerBasis {
  public:
    static GroebnerBasis compute(std::vector<Polynomial> generators,
                                 MonomialOrder order = MonomialOrder::grevlex(),
                                 GroebnerOptions options = {});

    const std::vector<Polynomial>& basis() const { return basis_; }
    const MonomialOrder& order() const { return order_; }

    /// fully reduced normal form of f modulo the basis
    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  private:
    MonomialOrder order_;
    std::vector<Polynomial> basis_;
};

/// true iff f lies in the ideal generated by gens
bool groebner_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                         GroebnerOptions options = {});

/// Generators of the ideal quotient (I : f), computed from the intersection
/// with the principal ideal (f) via a one-variable elimination.
std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                                       GroebnerOptions options = {});

}  // namespace wedgelab
