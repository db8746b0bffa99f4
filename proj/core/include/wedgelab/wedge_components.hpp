#pragma once

#include <string>
#include <vector>

#include "wedgelab/monomial_ideal.hpp"
#include "wedgelab/scheme_builder.hpp"

namespace wedgelab {

/// "x","y","z","w" for n <= 4, otherwise "x1".."xn"
std::vector<std::string> default_variable_names(int n);

/// A monomial hypersurface x_1^{a_1} ... x_r^{a_r} = 0 inside A^N (the
/// variables beyond index r do not appear in the equation).
struct MonomialHypersurface {
    int ambient_count = 0;          // N
    std::vector<int> exponents;     // a_1..a_r, each >= 1, r <= N
    std::vector<std::string> names; // N ambient base names

    /// ambient < 0 means N = r; empty names means the defaults
    static MonomialHypersurface create(std::vector<int> exponents, int ambient = -1,
                                       std::vector<std::string> names = {});

    int r() const { return static_cast<int>(exponents.size()); }
    Variable ambient_variable(int k) const;           // 0-based
    Variable wedge(int k, int i, int j) const;
    /// sum over all ambient variables of the wedge coordinate count
    int ambient_wedge_dimension(int order) const;
    AffineIdealInput defining_input() const;
    std::string equation_string() const;
};

/// The coordinate prime cut out by an order tuple t: for each equation
/// variable x_k, the wedge coordinates x_k^(i,j) with i+j < t_k.
struct StaircasePrime {
    int order = 0;       // m
    std::vector<int> t;  // one entry per equation variable, 0 <= t_k <= m+1

    static StaircasePrime create(int order, std::vector<int> t);

    int height() const;  // sum of t_k(t_k+1)/2
    /// sum a_k t_k >= m+1
    bool feasible(const MonomialHypersurface& surface) const;
    VariablePrime expand(const MonomialHypersurface& surface) const;

    bool operator==(const StaircasePrime& o) const = default;
    bool operator<(const StaircasePrime& o) const { return t < o.t; }
};

struct ComponentReport {
    StaircasePrime prime;
    int height = 0;
    int dim = 0;
};

struct LciVerdict {
    int dim = 0;           // largest component dimension
    int expected_dim = 0;  // (N-1)(m+1)(m+2)/2
    bool pure_dimensional = false;   // all component dimensions equal
    bool dim_matches_expected = false;
    bool irreducible = false;        // exactly one minimal prime
};

/// The minimal primes of the order-m wedge scheme of the hypersurface:
/// exactly the tuples t in {0..m+1}^r with sum a_k t_k >= m+1 that are
/// minimal under componentwise <=.  Sorted lexicographically.
std::vector<StaircasePrime> enumerate_minimal_primes(const MonomialHypersurface& surface,
                                                     int order);

/// Square-free generators of the radical of the wedge ideal: supports of all
/// products choosing a_k wedge coordinates per equation variable with total
/// superscript sum <= m, minimalized.
MonomialIdeal radical_generators(const MonomialHypersurface& surface, int order);

/// Radical for a monomial scheme given by several exponent vectors over a
/// shared ambient: the minimalized union of the per-hypersurface radicals.
MonomialIdeal radical_monomial_scheme(const std::vector<std::vector<int>>& generator_exponents,
                                      int order, std::vector<std::string> names = {});

ComponentReport component_report(const StaircasePrime& prime, const MonomialHypersurface& surface,
                                 int order);

/// Hypersurface pure-dimensionality / irreducibility report (n = N-1).
LciVerdict lci_verdict(const MonomialHypersurface& surface, int order);

/// Per-variable vanishing orders of a point of the wedge coordinate ring:
/// t_k = least i+j with x_k^(i,j) nonzero, capped at m+1.  The point lies on
/// the wedge scheme iff sum a_k t_k >= m+1.
std::vector<int> order_profile(const std::map<Variable, Rational>& point,
                               const MonomialHypersurface& surface, int order);

/// convenience: the wedge ideal of the defining monomial
WedgeIdeal hypersurface_wedge_ideal(const MonomialHypersurface& surface, int order);

}  // namespace wedgelab
