#pragma once

#include <compare>
#include <map>
#include <vector>

#include "wedgelab/parser.hpp"
#include "wedgelab/series.hpp"

namespace wedgelab {

/// An affine scheme presented as Spec k[x_1..x_N]/(f_1..f_d): the declared
/// ambient variables (all plain) and the generator list.
struct AffineIdealInput {
    std::vector<Variable> ambient;
    std::vector<Polynomial> generators;

    /// validates: distinct plain ambient variables, nonzero generators that
    /// only mention ambient variables
    static AffineIdealInput create(std::vector<Variable> ambient,
                                   std::vector<Polynomial> generators);
};

/// Index of one coefficient generator: source generator k (1-based) and the
/// (i,j) or n it multiplies.
struct GenKey {
    int source;
    int i;
    int j;
    std::strong_ordering operator<=>(const GenKey& o) const {
        if (auto c = source <=> o.source; c != 0) return c;
        if (auto c = (i + j) <=> (o.i + o.j); c != 0) return c;
        return i <=> o.i;
    }
    bool operator==(const GenKey& o) const = default;
};

/// The defining ideal of the order-m wedge scheme: for each source generator
/// f_k, the coefficient of s^i t^j in phi(f_k) over the wedge coordinates
/// x^(i,j), 0 <= i+j <= m.
struct WedgeIdeal {
    int order = 0;
    AffineIdealInput source;
    std::map<GenKey, Polynomial> generators;  // all (k,i,j), including any zero ones
    std::vector<Variable> variables;          // the full wedge coordinate ring

    /// deduplicated nonzero generators in canonical order
    std::vector<Polynomial> flattened() const;
};

/// The defining ideal of the order-m jet scheme: coefficients of t^n over the
/// jet coordinates x^(n), 0 <= n <= m.
struct JetIdeal {
    int order = 0;
    AffineIdealInput source;
    std::map<std::pair<int, int>, Polynomial> generators;  // (k, n)
    std::vector<Variable> variables;

    std::vector<Polynomial> flattened() const;
};

Variable wedge_variable(const Variable& plain, int i, int j);
Variable jet_variable(const Variable& plain, int n);

/// the generic image x -> sum over i+j<=m of x^(i,j) s^i t^j
TruncatedSeries generic_wedge_image(const Variable& plain, int order);
/// the generic image x -> sum over n<=m of x^(n) t^n
TruncatedSeries generic_jet_image(const Variable& plain, int order);

WedgeIdeal build_wedge_ideal(const AffineIdealInput& input, int order);
JetIdeal build_jet_ideal(const AffineIdealInput& input, int order);

/// Specializing s -> t turns the wedge family into the jet family: for every
/// source generator and every n <= m, substituting x^(n) -> sum_{i+j=n}
/// x^(i,j) into the jet generator G_n must give sum_{i+j=n} g_ij.  A false
/// return signals a builder bug.
bool diagonal_check(const AffineIdealInput& input, int order);

/// Generator-level form of W_1 = J_1 x_X J_1: the order-1 wedge generators
/// must equal the union of two renamed copies of the order-1 jet generators
/// (x^(1) -> x^(1,0) in the s-copy, x^(1) -> x^(0,1) in the t-copy, x^(0) ->
/// x^(0,0) shared), as sets of canonical polynomials.
bool w1_product_check(const AffineIdealInput& input);

}  // namespace wedgelab
