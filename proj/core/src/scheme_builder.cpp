#include "wedgelab/scheme_builder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wedgelab {

AffineIdealInput AffineIdealInput::create(std::vector<Variable> ambient,
                                          std::vector<Polynomial> generators) {
    if (ambient.empty()) throw std::invalid_argument("empty ambient variable list");
    std::set<Variable> seen;
    for (auto& v : ambient) {
        if (v.kind() != Variable::Kind::plain)
            throw std::invalid_argument("ambient variables must be plain: " + v.name());
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate ambient variable: " + v.name());
    }
    for (auto& f : generators) {
        if (f.is_zero()) throw std::invalid_argument("zero generator");
        for (auto& v : f.variables())
            if (!seen.count(v))
                throw std::invalid_argument("generator mentions non-ambient variable " + v.name());
    }
    return AffineIdealInput{std::move(ambient), std::move(generators)};
}

Variable wedge_variable(const Variable& plain, int i, int j) {
    return Variable::wedge(plain.base(), i, j);
}

Variable jet_variable(const Variable& plain, int n) { return Variable::jet(plain.base(), n); }

TruncatedSeries generic_wedge_image(const Variable& plain, int order) {
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            s.set_coefficient(i, j, Polynomial::variable(wedge_variable(plain, i, j)));
    return s;
}

TruncatedSeries generic_jet_image(const Variable& plain, int order) {
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n)
        s.set_coefficient(0, n, Polynomial::variable(jet_variable(plain, n)));
    return s;
}

std::vector<Polynomial> WedgeIdeal::flattened() const {
    std::set<Polynomial> out;
    for (auto& [key, g] : generators)
        if (!g.is_zero()) out.insert(g);
    return {out.begin(), out.end()};
}

std::vector<Polynomial> JetIdeal::flattened() const {
    std::set<Polynomial> out;
    for (auto& [key, g] : generators)
        if (!g.is_zero()) out.insert(g);
    return {out.begin(), out.end()};
}

WedgeIdeal build_wedge_ideal(const AffineIdealInput& input, int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    WedgeIdeal w;
    w.order = order;
    w.source = input;
    std::map<Variable, TruncatedSeries> images;
    for (auto& v : input.ambient) {
        images.emplace(v, generic_wedge_image(v, order));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) w.variables.push_back(wedge_variable(v, i, j));
    }
    std::sort(w.variables.begin(), w.variables.end());
    for (std::size_t k = 0; k < input.generators.size(); ++k) {
        TruncatedSeries phi = substitute_truncated(input.generators[k], images, order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                w.generators.emplace(GenKey{static_cast<int>(k) + 1, i, j}, phi.coefficient(i, j));
    }
    return w;
}

JetIdeal build_jet_ideal(const AffineIdealInput& input, int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    JetIdeal jet;
    jet.order = order;
    jet.source = input;
    std::map<Variable, TruncatedSeries> images;
    for (auto& v : input.ambient) {
        images.emplace(v, generic_jet_image(v, order));
        for (int n = 0; n <= order; ++n) jet.variables.push_back(jet_variable(v, n));
    }
    std::sort(jet.variables.begin(), jet.variables.end());
    for (std::size_t k = 0; k < input.generators.size(); ++k) {
        TruncatedSeries phi = substitute_truncated(input.generators[k], images, order);
        for (int n = 0; n <= order; ++n)
            jet.generators.emplace(std::pair{static_cast<int>(k) + 1, n}, phi.coefficient(0, n));
    }
    return jet;
}

bool diagonal_check(const AffineIdealInput& input, int order) {
    const WedgeIdeal wedge = build_wedge_ideal(input, order);
    const JetIdeal jet = build_jet_ideal(input, order);
    std::map<Variable, Polynomial> collapse;  // x^(n) -> sum_{i+j=n} x^(i,j)
    for (auto& v : input.ambient) {
        for (int n = 0; n <= order; ++n) {
            Polynomial sum;
            for (int i = 0; i <= n; ++i)
                sum += Polynomial::variable(wedge_variable(v, i, n - i));
            collapse.emplace(jet_variable(v, n), std::move(sum));
        }
    }
    for (std::size_t k = 1; k <= input.generators.size(); ++k) {
        for (int n = 0; n <= order; ++n) {
            Polynomial lhs = jet.generators.at({static_cast<int>(k), n}).substitute(collapse);
            Polynomial rhs;
            for (int i = 0; i <= n; ++i)
                rhs += wedge.generators.at(GenKey{static_cast<int>(k), i, n - i});
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool w1_product_check(const AffineIdealInput& input) {
    const WedgeIdeal wedge = build_wedge_ideal(input, 1);
    const JetIdeal jet = build_jet_ideal(input, 1);
    std::map<Variable, Variable> s_copy;  // x^(0)->x^(0,0), x^(1)->x^(1,0)
    std::map<Variable, Variable> t_copy;  // x^(0)->x^(0,0), x^(1)->x^(0,1)
    for (auto& v : input.ambient) {
        s_copy.emplace(jet_variable(v, 0), wedge_variable(v, 0, 0));
        t_copy.emplace(jet_variable(v, 0), wedge_variable(v, 0, 0));
        s_copy.emplace(jet_variable(v, 1), wedge_variable(v, 1, 0));
        t_copy.emplace(jet_variable(v, 1), wedge_variable(v, 0, 1));
    }
    std::set<Polynomial> renamed;
    for (auto& [key, g] : jet.generators) {
        if (g.is_zero()) continue;
        renamed.insert(g.rename(s_copy));
        renamed.insert(g.rename(t_copy));
    }
    auto flat = wedge.flattened();
    return renamed == std::set<Polynomial>(flat.begin(), flat.end());
}

}  // namespace wedgelab
