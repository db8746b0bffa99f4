#pragma once

#include <map>
#include <utility>

#include "wedgelab/polynomial.hpp"

namespace wedgelab {

/// An element of (polynomial ring)[s,t]/(s,t)^{m+1}: a finite family of
/// polynomial coefficients indexed by (i,j) with i+j <= m.  Truncation is
/// applied eagerly inside multiplication, so pairs above the order never
/// materialize.
class TruncatedSeries {
  public:
    using Key = std::pair<int, int>;  // (i, j) = exponent of s^i t^j

    explicit TruncatedSeries(int order);

    static TruncatedSeries constant(int order, Polynomial value);

    int order() const { return order_; }
    const std::map<Key, Polynomial>& coefficients() const { return coeffs_; }
    /// coefficient of s^i t^j (zero if absent); throws if i+j > order
    Polynomial coefficient(int i, int j) const;
    void set_coefficient(int i, int j, Polynomial value);
    bool is_zero() const { return coeffs_.empty(); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    /// truncated product; throws std::invalid_argument on mismatched orders
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scale(const Rational& c) const;
    TruncatedSeries pow(int e) const;

    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    std::string to_string() const;

  private:
    int order_;
    std::map<Key, Polynomial> coeffs_;  // only nonzero entries, i+j <= order_
};

/// phi(f): substitute a truncated series for every plain variable of f, with
/// truncation applied during expansion.  Every variable of f must have an
/// image and all images must share the truncation order.
TruncatedSeries substitute_truncated(const Polynomial& f,
                                     const std::map<Variable, TruncatedSeries>& images,
                                     int order);

}  // namespace wedgelab
