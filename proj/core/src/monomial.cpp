#include "wedgelab/monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wedgelab {

Monomial Monomial::variable(const Variable& v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Monomial m;
    if (exp > 0) {
        m.factors_.emplace_back(v, exp);
        m.degree_ = exp;
    }
    return m;
}

Monomial Monomial::from(std::vector<Factor> factors) {
    std::map<Variable, int> acc;
    for (auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > 0) acc[v] += e;
    }
    Monomial m;
    m.factors_.assign(acc.begin(), acc.end());
    for (auto& [v, e] : m.factors_) m.degree_ += e;
    return m;
}

int Monomial::exponent(const Variable& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Variable& x) { return f.first < x; });
    if (it != factors_.end() && it->first == v) return it->second;
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end()) {
        while (b != other.factors_.end() && b->first < a->first) ++b;
        if (b == other.factors_.end() || !(b->first == a->first) || b->second < a->second)
            return false;
        ++a;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            m.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            m.factors_.push_back(*b++);
        } else {
            m.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    m.degree_ = degree_ + o.degree_;
    return m;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial m;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            m.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            throw std::domain_error("monomial division is not exact");
        } else {
            if (a->second < b->second) throw std::domain_error("monomial division is not exact");
            if (a->second > b->second) m.factors_.emplace_back(a->first, a->second - b->second);
            ++a;
            ++b;
        }
    }
    m.degree_ = degree_ - o.degree_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto p = a.factors_.begin();
    auto q = b.factors_.begin();
    while (p != a.factors_.end() || q != b.factors_.end()) {
        if (q == b.factors_.end() || (p != a.factors_.end() && p->first < q->first)) {
            m.factors_.push_back(*p++);
        } else if (p == a.factors_.end() || q->first < p->first) {
            m.factors_.push_back(*q++);
        } else {
            m.factors_.emplace_back(p->first, std::max(p->second, q->second));
            ++p;
            ++q;
        }
    }
    for (auto& [v, e] : m.factors_) m.degree_ += e;
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto p = a.factors_.begin();
    auto q = b.factors_.begin();
    while (p != a.factors_.end() && q != b.factors_.end()) {
        if (p->first < q->first) {
            ++p;
        } else if (q->first < p->first) {
            ++q;
        } else {
            m.factors_.emplace_back(p->first, std::min(p->second, q->second));
            ++p;
            ++q;
        }
    }
    for (auto& [v, e] : m.factors_) m.degree_ += e;
    return m;
}

bool Monomial::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.second == 1; });
}

Monomial Monomial::squarefree_part() const {
    Monomial m;
    m.factors_.reserve(factors_.size());
    for (auto& [v, e] : factors_) m.factors_.emplace_back(v, 1);
    m.degree_ = static_cast<int>(m.factors_.size());
    return m;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string s;
    for (auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += v.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::strong_ordering Monomial::grlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    // at the smallest variable with differing exponents, the larger exponent wins
    auto p = a.factors_.begin();
    auto q = b.factors_.begin();
    while (p != a.factors_.end() && q != b.factors_.end()) {
        if (p->first < q->first) return std::strong_ordering::greater;
        if (q->first < p->first) return std::strong_ordering::less;
        if (auto c = p->second <=> q->second; c != 0) return c;
        ++p;
        ++q;
    }
    if (p != a.factors_.end()) return std::strong_ordering::greater;
    if (q != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::strong_ordering Monomial::grevlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    // at the largest variable with differing exponents, the smaller exponent wins
    auto p = a.factors_.rbegin();
    auto q = b.factors_.rbegin();
    while (p != a.factors_.rend() && q != b.factors_.rend()) {
        if (q->first < p->first) return std::strong_ordering::less;     // a has the later variable
        if (p->first < q->first) return std::strong_ordering::greater;  // b has the later variable
        if (auto c = q->second <=> p->second; c != 0) return c;
        ++p;
        ++q;
    }
    if (p != a.factors_.rend()) return std::strong_ordering::less;
    if (q != b.factors_.rend()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace wedgelab
