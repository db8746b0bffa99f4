#include "wedgelab/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wedgelab {

namespace {

bool term_before(const Polynomial::Term& a, const Polynomial::Term& b) {
    return Monomial::grlex_compare(a.first, b.first) > 0;  // descending
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t q) {
    std::uint64_t r = 1 % q;
    base %= q;
    while (e > 0) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// residue of an arbitrary rational mod q (q prime, denominator coprime to q)
std::uint32_t rational_mod(const Rational& c, std::uint32_t q) {
    std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), q);
    std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), q);
    if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
    return static_cast<std::uint32_t>(num * mod_pow(den, q - 2, q) % q);
}

}  // namespace

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(const Variable& v) {
    Polynomial p;
    p.terms_.emplace_back(Monomial::variable(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::map<Monomial, Rational> acc;
    for (auto& [m, c] : terms) acc[m] += c;
    return from_map(std::move(acc));
}

Polynomial Polynomial::from_map(std::map<Monomial, Rational>&& acc) {
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.terms_.emplace_back(it->first, it->second);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    // merge two descending term lists
    Polynomial p;
    p.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && term_before(*a, *b))) {
            p.terms_.push_back(*a++);
        } else if (a == terms_.end() || term_before(*b, *a)) {
            p.terms_.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) p.terms_.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::map<Monomial, Rational> acc;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
    return from_map(std::move(acc));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return {};
    Polynomial p(*this);
    for (auto& [m, k] : p.terms_) k *= c;
    return p;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(1);
    for (int k = 0; k < e; ++k) r *= *this;
    return r;
}

std::vector<Variable> Polynomial::variables() const {
    std::set<Variable> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& images) const {
    Polynomial result;
    std::map<Variable, std::vector<Polynomial>> powers;  // v -> [v^1, v^2, ...]
    for (auto& [m, c] : terms_) {
        Polynomial t = constant(c);
        for (auto& [v, e] : m.factors()) {
            auto img = images.find(v);
            if (img == images.end()) {
                t *= Polynomial::term(Monomial::variable(v, e), Rational(1));
                continue;
            }
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(img->second);
            while (static_cast<int>(cache.size()) < e) cache.push_back(cache.back() * img->second);
            t *= cache[e - 1];
        }
        result += t;
    }
    return result;
}

Polynomial Polynomial::rename(const std::map<Variable, Variable>& names) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> factors;
        factors.reserve(m.factors().size());
        for (auto& [v, e] : m.factors()) {
            auto it = names.find(v);
            factors.emplace_back(it == names.end() ? v : it->second, e);
        }
        out.emplace_back(Monomial::from(std::move(factors)), c);
    }
    return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& point) const {
    Rational total(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("evaluate: no value for variable " + v.name());
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

std::uint32_t Polynomial::evaluate_mod(const std::map<Variable, std::uint32_t>& point,
                                       std::uint32_t q) const {
    std::uint64_t total = 0;
    for (auto& [m, c] : terms_) {
        std::uint64_t t = rational_mod(c, q);
        for (auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("evaluate_mod: no value for variable " + v.name());
            t = t * mod_pow(it->second, e, q) % q;
        }
        total = (total + t) % q;
    }
    return static_cast<std::uint32_t>(total);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            s += mag.get_str();
        } else if (mag == 1) {
            s += m.to_string();
        } else {
            s += mag.get_str() + "*" + m.to_string();
        }
    }
    return s;
}

bool Polynomial::operator<(const Polynomial& o) const {
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (auto c = Monomial::grlex_compare(a->first, b->first); c != 0) return c < 0;
        if (int c = cmp(a->second, b->second); c != 0) return c < 0;
        ++a;
        ++b;
    }
    return a == terms_.end() && b != o.terms_.end();
}

}  // namespace wedgelab
