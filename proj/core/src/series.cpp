#include "wedgelab/series.hpp"

#include <stdexcept>

namespace wedgelab {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

TruncatedSeries TruncatedSeries::constant(int order, Polynomial value) {
    TruncatedSeries s(order);
    if (!value.is_zero()) s.coeffs_.emplace(Key{0, 0}, std::move(value));
    return s;
}

Polynomial TruncatedSeries::coefficient(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_)
        throw std::out_of_range("series coefficient index outside truncation");
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Polynomial::zero() : it->second;
}

void TruncatedSeries::set_coefficient(int i, int j, Polynomial value) {
    if (i < 0 || j < 0 || i + j > order_)
        throw std::out_of_range("series coefficient index outside truncation");
    if (value.is_zero())
        coeffs_.erase({i, j});
    else
        coeffs_[{i, j}] = std::move(value);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("mismatched truncation orders");
    TruncatedSeries s(*this);
    for (auto& [key, poly] : o.coeffs_) {
        auto [it, inserted] = s.coeffs_.try_emplace(key, poly);
        if (!inserted) {
            it->second += poly;
            if (it->second.is_zero()) s.coeffs_.erase(it);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("mismatched truncation orders");
    TruncatedSeries s(order_);
    for (auto& [ka, pa] : coeffs_) {
        for (auto& [kb, pb] : o.coeffs_) {
            const int i = ka.first + kb.first;
            const int j = ka.second + kb.second;
            if (i + j > order_) continue;  // eager truncation
            auto [it, inserted] = s.coeffs_.try_emplace(Key{i, j}, Polynomial::zero());
            it->second += pa * pb;
            if (it->second.is_zero()) s.coeffs_.erase(it);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::scale(const Rational& c) const {
    TruncatedSeries s(order_);
    if (c == 0) return s;
    for (auto& [key, poly] : coeffs_) s.coeffs_.emplace(key, poly * c);
    return s;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    TruncatedSeries r = constant(order_, Polynomial::constant(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::string TruncatedSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto& [key, poly] : coeffs_) {
        if (!s.empty()) s += "; ";
        s += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): " +
             poly.to_string();
    }
    return s;
}

TruncatedSeries substitute_truncated(const Polynomial& f,
                                     const std::map<Variable, TruncatedSeries>& images,
                                     int order) {
    for (auto& [v, s] : images)
        if (s.order() != order)
            throw std::invalid_argument("image of " + v.name() + " has a different truncation");
    std::map<Variable, std::vector<TruncatedSeries>> powers;
    TruncatedSeries result(order);
    for (auto& [mono, coeff] : f.terms()) {
        TruncatedSeries t = TruncatedSeries::constant(order, Polynomial::constant(coeff));
        for (auto& [v, e] : mono.factors()) {
            auto img = images.find(v);
            if (img == images.end())
                throw std::invalid_argument("no truncated image for variable " + v.name());
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(img->second);
            while (static_cast<int>(cache.size()) < e) cache.push_back(cache.back() * img->second);
            t = t * cache[e - 1];
        }
        result = result + t;
    }
    return result;
}

}  // namespace wedgelab
