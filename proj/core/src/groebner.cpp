#include "wedgelab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wedgelab {

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (eliminated_) {
        // block order: the eliminated variable dominates everything else
        if (auto c = a.exponent(*eliminated_) <=> b.exponent(*eliminated_); c != 0) return c < 0;
    }
    return Monomial::grevlex_compare(a, b) < 0;
}

namespace {

struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->less(b, a); }
};

// working form: terms sorted descending in the engine order
using WorkPoly = std::map<Monomial, Rational, OrderGreater>;

WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
    WorkPoly w(OrderGreater{&order});
    for (auto& [m, c] : p.terms()) w.emplace(m, c);
    return w;
}

Polynomial to_poly(const WorkPoly& w) {
    std::vector<Polynomial::Term> terms(w.begin(), w.end());
    return Polynomial::from_terms(std::move(terms));
}

// f -= c * mono * g
void subtract_multiple(WorkPoly& f, const Rational& c, const Monomial& mono,
                       const Polynomial& g) {
    for (auto& [m, k] : g.terms()) {
        const Monomial target = mono * m;
        auto it = f.find(target);
        if (it == f.end()) {
            f.emplace(target, -(c * k));
        } else {
            it->second -= c * k;
            if (it->second == 0) f.erase(it);
        }
    }
}

struct Entry {
    Polynomial poly;
    Monomial lead;
    Rational lead_coeff;
};

Entry make_entry(const Polynomial& p, const MonomialOrder& order) {
    const Polynomial::Term* best = nullptr;
    for (auto& term : p.terms())
        if (!best || order.less(best->first, term.first)) best = &term;
    return Entry{p, best->first, best->second};
}

Polynomial normal_form_impl(const Polynomial& f, const std::vector<Entry>& basis,
                            const MonomialOrder& order, const Entry* skip = nullptr) {
    WorkPoly rem = to_work(f, order);
    WorkPoly out(OrderGreater{&order});
    while (!rem.empty()) {
        auto lead = *rem.begin();
        const Entry* reducer = nullptr;
        for (auto& e : basis) {
            if (&e == skip) continue;
            if (e.lead.divides(lead.first)) {
                reducer = &e;
                break;
            }
        }
        if (reducer == nullptr) {
            out.emplace(lead.first, lead.second);
            rem.erase(rem.begin());
        } else {
            subtract_multiple(rem, lead.second / reducer->lead_coeff,
                              lead.first.divided_by(reducer->lead), reducer->poly);
        }
    }
    return to_poly(out);
}

struct PairKey {
    int deg;          // total degree of the lcm
    Monomial lcm;
    int i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (auto c = Monomial::grlex_compare(lcm, o.lcm); c != 0) return c < 0;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(std::vector<Polynomial> generators, MonomialOrder order,
                                     GroebnerOptions options) {
    GroebnerBasis result;
    result.order_ = order;

    std::vector<Entry> basis;
    for (auto& g : generators)
        if (!g.is_zero()) basis.push_back(make_entry(g, order));

    std::set<PairKey> queue;
    std::set<std::pair<int, int>> treated;
    auto push_pairs = [&](int n) {
        for (int i = 0; i < n; ++i) {
            const Monomial lcm = Monomial::lcm(basis[i].lead, basis[n].lead);
            queue.insert(PairKey{lcm.total_degree(), lcm, i, n});
        }
    };
    for (int n = 1; n < static_cast<int>(basis.size()); ++n) push_pairs(n);

    long budget = options.spair_budget;
    while (!queue.empty()) {
        const PairKey pair = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({pair.i, pair.j});

        // product criterion: coprime leading monomials reduce to zero
        if (Monomial::gcd(basis[pair.i].lead, basis[pair.j].lead).is_one()) continue;

        // chain criterion: a third element dividing the lcm whose pairs with
        // both ends were already handled
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].lead.divides(pair.lcm)) continue;
            const auto ik = std::minmax(pair.i, k);
            const auto jk = std::minmax(pair.j, k);
            if (treated.count({ik.first, ik.second}) && treated.count({jk.first, jk.second}))
                skip = true;
        }
        if (skip) continue;

        if (budget-- <= 0)
            throw budget_error("Gröbner S-pair budget exceeded; raise GroebnerOptions::spair_budget");

        const Entry& f = basis[pair.i];
        const Entry& g = basis[pair.j];
        Polynomial spoly =
            Polynomial::term(pair.lcm.divided_by(f.lead), 1 / f.lead_coeff) * f.poly -
            Polynomial::term(pair.lcm.divided_by(g.lead), 1 / g.lead_coeff) * g.poly;
        Polynomial h = normal_form_impl(spoly, basis, order);
        if (!h.is_zero()) {
            basis.push_back(make_entry(h, order));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // auto-reduce: every element reduced against the others, then monic
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Polynomial reduced = normal_form_impl(basis[i].poly, basis, order, &basis[i]);
            if (reduced != basis[i].poly) {
                changed = true;
                if (reduced.is_zero()) {
                    basis.erase(basis.begin() + static_cast<long>(i));
                    --i;
                } else {
                    basis[i] = make_entry(reduced, order);
                }
            }
        }
    }
    for (auto& e : basis)
        if (e.lead_coeff != 1) e = make_entry(e.poly * (1 / e.lead_coeff), order);
    std::sort(basis.begin(), basis.end(),
              [&](const Entry& a, const Entry& b) { return order.less(a.lead, b.lead); });

    result.basis_.reserve(basis.size());
    for (auto& e : basis) result.basis_.push_back(std::move(e.poly));
    return result;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    std::vector<Entry> entries;
    entries.reserve(basis_.size());
    for (auto& g : basis_) entries.push_back(make_entry(g, order_));
    return normal_form_impl(f, entries, order_);
}

bool groebner_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                         GroebnerOptions options) {
    return GroebnerBasis::compute(gens, MonomialOrder::grevlex(), options).contains(f);
}

namespace {

// exact division u / f; throws if the division leaves a remainder
Polynomial divide_exact(const Polynomial& u, const Polynomial& f, const MonomialOrder& order) {
    const Entry divisor = make_entry(f, order);
    WorkPoly rem = to_work(u, order);
    std::vector<Polynomial::Term> quotient;
    while (!rem.empty()) {
        auto lead = *rem.begin();
        if (!divisor.lead.divides(lead.first))
            throw std::logic_error("quotient generator not divisible by f");
        const Monomial mono = lead.first.divided_by(divisor.lead);
        const Rational coeff = lead.second / divisor.lead_coeff;
        quotient.emplace_back(mono, coeff);
        subtract_multiple(rem, coeff, mono, f);
    }
    return Polynomial::from_terms(std::move(quotient));
}

}  // namespace

std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                                       GroebnerOptions options) {
    if (f.is_zero()) return {Polynomial::constant(1)};  // (I : 0) is the unit ideal
    std::vector<Polynomial> nonzero;
    for (auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return {};  // (0 : f) = 0

    const Variable w = Variable::plain("#quot");
    for (auto& g : nonzero)
        for (auto& v : g.variables())
            if (v == w) throw std::invalid_argument("reserved variable #quot in input");

    // I ∩ (f) = (w·I + (1-w)·(f)) ∩ k[x..]; then divide the intersection by f
    const Polynomial wp = Polynomial::variable(w);
    std::vector<Polynomial> mixed;
    for (auto& g : nonzero) mixed.push_back(wp * g);
    mixed.push_back((Polynomial::constant(1) - wp) * f);

    GroebnerBasis gb = GroebnerBasis::compute(mixed, MonomialOrder::eliminate(w), options);
    std::vector<Polynomial> out;
    for (auto& g : gb.basis()) {
        bool uses_w = false;
        for (auto& v : g.variables())
            if (v == w) uses_w = true;
        if (!uses_w) out.push_back(divide_exact(g, f, MonomialOrder::grevlex()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace wedgelab
