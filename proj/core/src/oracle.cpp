#include "wedgelab/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wedgelab/linalg.hpp"

namespace wedgelab {

std::vector<std::vector<int>> brute_force_minimal_primes(const std::vector<int>& exponents,
                                                         int order) {
    if (exponents.empty()) throw std::invalid_argument("empty exponent vector");
    for (int a : exponents)
        if (a < 1) throw std::invalid_argument("exponents must be positive");
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    const int r = static_cast<int>(exponents.size());

    double slots = 1;
    for (int k = 0; k < r; ++k) slots *= order + 2;
    if (slots > 1e7) throw std::invalid_argument("brute force scale bound exceeded");

    // every feasible tuple, in lexicographic order
    std::vector<std::vector<int>> feasible;
    std::vector<int> t(r, 0);
    const long target = order + 1;
    while (true) {
        long weight = 0;
        for (int k = 0; k < r; ++k) weight += static_cast<long>(exponents[k]) * t[k];
        if (weight >= target) feasible.push_back(t);
        int k = r - 1;
        while (k >= 0 && t[k] == order + 1) t[k--] = 0;
        if (k < 0) break;
        ++t[k];
    }

    // pairwise componentwise-dominance prune
    std::vector<std::vector<int>> minimal;
    for (std::size_t i = 0; i < feasible.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < feasible.size() && !dominated; ++j) {
            if (i == j) continue;
            bool le = true, strict = false;
            for (int k = 0; k < r; ++k) {
                if (feasible[j][k] > feasible[i][k]) {
                    le = false;
                    break;
                }
                if (feasible[j][k] < feasible[i][k]) strict = true;
            }
            if (le && strict) dominated = true;
        }
        if (!dominated) minimal.push_back(feasible[i]);
    }
    return minimal;
}

FieldPoint component_sample(const MonomialHypersurface& surface, const StaircasePrime& prime,
                            int order, std::uint32_t q, Rng& rng) {
    if (q <= 2) throw std::invalid_argument("field size must be a prime > 2");
    if (static_cast<int>(prime.t.size()) != surface.r())
        throw std::invalid_argument("order tuple length differs from equation variable count");
    FieldPoint point;
    point.q = q;
    for (int k = 0; k < surface.r(); ++k) {
        for (int i = 0; i <= order; ++i) {
            for (int j = 0; i + j <= order; ++j) {
                const bool zero = i + j < prime.t[k];
                const std::uint32_t value =
                    zero ? 0u : 1u + static_cast<std::uint32_t>(rng.below(q - 1));
                point.assignment.emplace(surface.wedge(k, i, j), value);
            }
        }
    }
    return point;
}

namespace {

// dense triangular array of the coefficients of an element of
// F_q[s,t]/(s,t)^{m+1}
using Layer = std::vector<std::vector<std::uint32_t>>;

Layer layer_one(int order) {
    Layer a(order + 1, std::vector<std::uint32_t>(order + 1, 0));
    a[0][0] = 1;
    return a;
}

Layer layer_mul(const Layer& a, const Layer& b, int order, const PrimeField& field) {
    Layer c(order + 1, std::vector<std::uint32_t>(order + 1, 0));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            if (a[i][j] == 0) continue;
            for (int p = 0; i + p <= order; ++p)
                for (int q = 0; i + p + j + q <= order; ++q) {
                    if (b[p][q] == 0) continue;
                    c[i + p][j + q] =
                        field.add(c[i + p][j + q], field.mul(a[i][j], b[p][q]));
                }
        }
    return c;
}

}  // namespace

bool wedge_generators_vanish(const MonomialHypersurface& surface, int order,
                             const FieldPoint& point) {
    const PrimeField field(point.q);
    Layer product = layer_one(order);
    for (int k = 0; k < surface.r(); ++k) {
        Layer series(order + 1, std::vector<std::uint32_t>(order + 1, 0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) {
                auto it = point.assignment.find(surface.wedge(k, i, j));
                if (it == point.assignment.end())
                    throw std::invalid_argument("point does not assign " +
                                                surface.wedge(k, i, j).name());
                series[i][j] = it->second % point.q;
            }
        for (int e = 0; e < surface.exponents[k]; ++e)
            product = layer_mul(product, series, order, field);
    }
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            if (product[i][j] != 0) return false;
    return true;
}

bool sample_vanishing(const MonomialHypersurface& surface, const StaircasePrime& prime, int order,
                      std::uint32_t q, int trials, std::uint64_t seed) {
    std::uint64_t mixed = Rng::mix(seed, static_cast<std::uint64_t>(order) + 1);
    for (int tk : prime.t) mixed = Rng::mix(mixed, static_cast<std::uint64_t>(tk) + 0x9dull);
    Rng rng(mixed);
    for (int trial = 0; trial < trials; ++trial) {
        const FieldPoint point = component_sample(surface, prime, order, q, rng);
        if (!wedge_generators_vanish(surface, order, point)) return false;
    }
    return true;
}

}  // namespace wedgelab
