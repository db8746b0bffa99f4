#pragma once

#include <vector>

#include "wedgelab/polynomial.hpp"

namespace wedgelab {

/// A monomial ideal, stored as a sorted, deduplicated generator list.  The
/// list is not automatically divisibility-minimal; call minimalize().
class MonomialIdeal {
  public:
    MonomialIdeal() = default;  // the zero ideal
    static MonomialIdeal from(std::vector<Monomial> gens);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    std::size_t size() const { return gens_.size(); }
    bool all_squarefree() const;

    bool contains_monomial(const Monomial& m) const;  // some generator divides m

    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

  private:
    std::vector<Monomial> gens_;
};

/// A coordinate prime: the ideal generated by a finite set of variables.
/// The empty set represents the zero prime.
struct VariablePrime {
    std::vector<Variable> vars;  // sorted, distinct

    static VariablePrime from(std::vector<Variable> vars);
    bool contains_variable(const Variable& v) const;
    MonomialIdeal to_ideal() const;
    std::size_t size() const { return vars.size(); }

    bool operator==(const VariablePrime& o) const = default;
    bool operator<(const VariablePrime& o) const { return vars < o.vars; }
};

/// divisibility-minimal generating set; unique
MonomialIdeal minimalize(const MonomialIdeal& ideal);
MonomialIdeal minimalize(std::vector<Monomial> gens);

/// radical of a monomial ideal: square-free parts, minimalized
MonomialIdeal radical_monomial(const MonomialIdeal& ideal);

/// intersection of two monomial ideals: minimalize of the pairwise lcm table
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// radical of a sum: union of the radicals, minimalized
MonomialIdeal sum_radical(const std::vector<MonomialIdeal>& ideals);

/// true iff every term of f is divisible by some variable of P (so f lies in
/// the coordinate prime); the zero polynomial is in every prime
bool prime_contains(const VariablePrime& prime, const Polynomial& f);

/// The inclusion-minimal coordinate primes containing a square-free monomial
/// ideal, computed by branching on a shortest generator with memoization on
/// the surviving generator set.  Deterministic output, independent of
/// branching order.  Throws std::invalid_argument on non-square-free input.
/// Zero ideal -> { zero prime }; unit ideal -> {}.
std::vector<VariablePrime> minimal_primes_squarefree(const MonomialIdeal& ideal);

}  // namespace wedgelab
