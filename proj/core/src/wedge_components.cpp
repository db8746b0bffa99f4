#include "wedgelab/wedge_components.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wedgelab {

std::vector<std::string> default_variable_names(int n) {
    if (n <= 4) {
        static const char* few[] = {"x", "y", "z", "w"};
        return {few, few + n};
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    return names;
}

MonomialHypersurface MonomialHypersurface::create(std::vector<int> exponents, int ambient,
                                                  std::vector<std::string> names) {
    if (exponents.empty()) throw std::invalid_argument("empty exponent vector");
    for (int a : exponents)
        if (a < 1) throw std::invalid_argument("exponents must be positive");
    const int r = static_cast<int>(exponents.size());
    if (ambient < 0) ambient = r;
    if (ambient < r) throw std::invalid_argument("ambient dimension smaller than variable count");
    if (names.empty()) names = default_variable_names(ambient);
    if (static_cast<int>(names.size()) != ambient)
        throw std::invalid_argument("expected one name per ambient variable");
    return MonomialHypersurface{ambient, std::move(exponents), std::move(names)};
}

Variable MonomialHypersurface::ambient_variable(int k) const {
    return Variable::plain(names.at(k));
}

Variable MonomialHypersurface::wedge(int k, int i, int j) const {
    return Variable::wedge(names.at(k), i, j);
}

int MonomialHypersurface::ambient_wedge_dimension(int order) const {
    return ambient_count * (order + 1) * (order + 2) / 2;
}

AffineIdealInput MonomialHypersurface::defining_input() const {
    std::vector<Variable> ambient;
    ambient.reserve(ambient_count);
    for (int k = 0; k < ambient_count; ++k) ambient.push_back(ambient_variable(k));
    std::vector<Monomial::Factor> factors;
    for (int k = 0; k < r(); ++k) factors.emplace_back(ambient_variable(k), exponents[k]);
    return AffineIdealInput::create(std::move(ambient),
                                    {Polynomial::term(Monomial::from(std::move(factors)), 1)});
}

std::string MonomialHypersurface::equation_string() const {
    std::vector<Monomial::Factor> factors;
    for (int k = 0; k < r(); ++k) factors.emplace_back(ambient_variable(k), exponents[k]);
    return Monomial::from(std::move(factors)).to_string();
}

WedgeIdeal hypersurface_wedge_ideal(const MonomialHypersurface& surface, int order) {
    return build_wedge_ideal(surface.defining_input(), order);
}

StaircasePrime StaircasePrime::create(int order, std::vector<int> t) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    for (int tk : t)
        if (tk < 0 || tk > order + 1)
            throw std::invalid_argument("order tuple entries must lie in 0..m+1");
    return StaircasePrime{order, std::move(t)};
}

int StaircasePrime::height() const {
    int h = 0;
    for (int tk : t) h += tk * (tk + 1) / 2;
    return h;
}

bool StaircasePrime::feasible(const MonomialHypersurface& surface) const {
    if (static_cast<int>(t.size()) != surface.r())
        throw std::invalid_argument("order tuple length differs from equation variable count");
    long weight = 0;
    for (int k = 0; k < surface.r(); ++k) weight += static_cast<long>(surface.exponents[k]) * t[k];
    return weight >= order + 1;
}

VariablePrime StaircasePrime::expand(const MonomialHypersurface& surface) const {
    if (static_cast<int>(t.size()) != surface.r())
        throw std::invalid_argument("order tuple length differs from equation variable count");
    std::vector<Variable> vars;
    for (int k = 0; k < surface.r(); ++k)
        for (int i = 0; i < t[k]; ++i)
            for (int j = 0; i + j < t[k]; ++j) vars.push_back(surface.wedge(k, i, j));
    return VariablePrime::from(std::move(vars));
}

namespace {

// weak compositions of total into parts entries, lexicographically ascending
void compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        current.push_back(first);
        compositions(total - first, parts - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<StaircasePrime> enumerate_minimal_primes(const MonomialHypersurface& surface,
                                                     int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    const int r = surface.r();
    const long target = order + 1;
    std::vector<std::vector<int>> tuples;

    const bool reduced = std::all_of(surface.exponents.begin(), surface.exponents.end(),
                                     [](int a) { return a == 1; });
    if (reduced) {
        // minimal tuples are exactly the weak compositions of m+1
        std::vector<int> current;
        compositions(order + 1, r, current, tuples);
    } else {
        // feasibility is upward closed, so a feasible tuple is minimal iff
        // every single decrement leaves the staircase
        std::vector<int> t(r, 0);
        std::function<void(int, long)> scan = [&](int k, long weight) {
            if (k == r) {
                if (weight < target) return;
                for (int l = 0; l < r; ++l)
                    if (t[l] > 0 && weight - surface.exponents[l] >= target) return;
                tuples.push_back(t);
                return;
            }
            for (int v = 0; v <= order + 1; ++v) {
                t[k] = v;
                scan(k + 1, weight + static_cast<long>(surface.exponents[k]) * v);
            }
            t[k] = 0;
        };
        scan(0, 0);
        std::sort(tuples.begin(), tuples.end());
    }

    std::vector<StaircasePrime> primes;
    primes.reserve(tuples.size());
    for (auto& t : tuples) primes.push_back(StaircasePrime::create(order, std::move(t)));
    return primes;
}

namespace {

// supports of all products choosing `count` wedge coordinates (with
// multiplicity) for each listed variable, total superscript sum <= budget
void enumerate_supports(const MonomialHypersurface& surface,
                        const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::pair<int, int>>& var_counts,  // (k, a_k)
                        std::size_t var_pos, int slot_start, int slots_left, int budget,
                        std::vector<Monomial::Factor>& factors, std::vector<Monomial>& out) {
    if (slots_left == 0) {
        if (var_pos + 1 == var_counts.size()) {
            out.push_back(Monomial::from(factors).squarefree_part());
            return;
        }
        enumerate_supports(surface, pairs, var_counts, var_pos + 1, 0,
                           var_counts[var_pos + 1].second, budget, factors, out);
        return;
    }
    for (std::size_t p = static_cast<std::size_t>(slot_start); p < pairs.size(); ++p) {
        const int weight = pairs[p].first + pairs[p].second;
        if (weight > budget) continue;
        const int k = var_counts[var_pos].first;
        factors.emplace_back(surface.wedge(k, pairs[p].first, pairs[p].second), 1);
        enumerate_supports(surface, pairs, var_counts, var_pos, static_cast<int>(p),
                           slots_left - 1, budget - weight, factors, out);
        factors.pop_back();
    }
}

MonomialIdeal radical_generators_impl(const MonomialHypersurface& surface, int order,
                                      const std::vector<std::pair<int, int>>& var_counts) {
    std::vector<std::pair<int, int>> pairs;  // (i,j), i+j <= m, grade ascending
    for (int grade = 0; grade <= order; ++grade)
        for (int i = 0; i <= grade; ++i) pairs.emplace_back(i, grade - i);
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> factors;
    enumerate_supports(surface, pairs, var_counts, 0, 0, var_counts[0].second, order, factors,
                       out);
    return minimalize(std::move(out));
}

}  // namespace

MonomialIdeal radical_generators(const MonomialHypersurface& surface, int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    std::vector<std::pair<int, int>> var_counts;
    for (int k = 0; k < surface.r(); ++k) var_counts.emplace_back(k, surface.exponents[k]);
    return radical_generators_impl(surface, order, var_counts);
}

MonomialIdeal radical_monomial_scheme(const std::vector<std::vector<int>>& generator_exponents,
                                      int order, std::vector<std::string> names) {
    if (generator_exponents.empty()) throw std::invalid_argument("no generators");
    const std::size_t n = generator_exponents.front().size();
    for (auto& e : generator_exponents)
        if (e.size() != n)
            throw std::invalid_argument("generator exponent vectors must share one length");
    if (names.empty()) names = default_variable_names(static_cast<int>(n));

    std::vector<MonomialIdeal> radicals;
    for (auto& exps : generator_exponents) {
        std::vector<std::pair<int, int>> var_counts;
        for (std::size_t k = 0; k < n; ++k) {
            if (exps[k] < 0) throw std::invalid_argument("negative exponent");
            if (exps[k] > 0) var_counts.emplace_back(static_cast<int>(k), exps[k]);
        }
        if (var_counts.empty()) throw std::invalid_argument("zero generator");
        // a throwaway hypersurface over the shared names, used for naming only
        std::vector<int> all_exps(exps.begin(), exps.end());
        std::replace(all_exps.begin(), all_exps.end(), 0, 1);
        MonomialHypersurface shared =
            MonomialHypersurface::create(all_exps, static_cast<int>(n), names);
        radicals.push_back(radical_generators_impl(shared, order, var_counts));
    }
    return sum_radical(radicals);
}

ComponentReport component_report(const StaircasePrime& prime, const MonomialHypersurface& surface,
                                 int order) {
    if (prime.order != order) throw std::invalid_argument("prime order differs from query order");
    if (!prime.feasible(surface)) throw std::invalid_argument("infeasible order tuple");
    const int height = prime.height();
    return ComponentReport{prime, height, surface.ambient_wedge_dimension(order) - height};
}

LciVerdict lci_verdict(const MonomialHypersurface& surface, int order) {
    const auto primes = enumerate_minimal_primes(surface, order);
    LciVerdict v;
    v.expected_dim = (surface.ambient_count - 1) * (order + 1) * (order + 2) / 2;
    bool all_equal = true;
    int first_dim = -1;
    for (auto& p : primes) {
        const int dim = component_report(p, surface, order).dim;
        if (first_dim < 0) first_dim = dim;
        if (dim != first_dim) all_equal = false;
        v.dim = std::max(v.dim, dim);
    }
    v.pure_dimensional = all_equal;
    v.dim_matches_expected = v.dim == v.expected_dim;
    v.irreducible = primes.size() == 1;
    return v;
}

std::vector<int> order_profile(const std::map<Variable, Rational>& point,
                               const MonomialHypersurface& surface, int order) {
    std::vector<int> t;
    t.reserve(surface.r());
    for (int k = 0; k < surface.r(); ++k) {
        int found = order + 1;
        for (int grade = 0; grade <= order && found > order; ++grade) {
            for (int i = 0; i <= grade; ++i) {
                auto it = point.find(surface.wedge(k, i, grade - i));
                if (it == point.end())
                    throw std::invalid_argument("point does not assign " +
                                                surface.wedge(k, i, grade - i).name());
                if (it->second != 0) {
                    found = grade;
                    break;
                }
            }
        }
        t.push_back(found);
    }
    return t;
}

}  // namespace wedgelab
