#include "wedgelab/monomial_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace wedgelab {

namespace {

// Dense view of a monomial family over its variable universe: exponent
// vectors plus support bitmasks for the fast divisibility prefilter.
struct Compiled {
    std::vector<Variable> vars;               // sorted universe
    std::map<Variable, int> index;
    std::size_t words = 1;
    std::vector<std::vector<std::uint64_t>> masks;
    std::vector<std::vector<int>> exps;
    std::vector<int> degrees;
    bool squarefree = true;

    void set_universe(const std::vector<Monomial>& gens) {
        std::set<Variable> seen;
        for (auto& g : gens)
            for (auto& [v, e] : g.factors()) seen.insert(v);
        vars.assign(seen.begin(), seen.end());
        for (std::size_t k = 0; k < vars.size(); ++k) index.emplace(vars[k], static_cast<int>(k));
        words = vars.size() / 64 + 1;
    }

    void add(const Monomial& m) {
        std::vector<std::uint64_t> mask(words, 0);
        std::vector<int> exp(vars.size(), 0);
        for (auto& [v, e] : m.factors()) {
            const int k = index.at(v);
            mask[k / 64] |= 1ull << (k % 64);
            exp[k] = e;
            if (e > 1) squarefree = false;
        }
        masks.push_back(std::move(mask));
        exps.push_back(std::move(exp));
        degrees.push_back(m.total_degree());
    }

    bool submask(std::size_t a, std::size_t b) const {  // mask[a] subset of mask[b]
        for (std::size_t w = 0; w < words; ++w)
            if (masks[a][w] & ~masks[b][w]) return false;
        return true;
    }

    bool divides(std::size_t a, std::size_t b) const {
        if (!submask(a, b)) return false;
        if (squarefree) return true;
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (exps[a][k] > exps[b][k]) return false;
        return true;
    }

    Monomial monomial(std::size_t a) const {
        std::vector<Monomial::Factor> factors;
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (exps[a][k] > 0) factors.emplace_back(vars[k], exps[a][k]);
        return Monomial::from(std::move(factors));
    }
};

std::vector<Monomial> sorted_unique(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

}  // namespace

MonomialIdeal MonomialIdeal::from(std::vector<Monomial> gens) {
    MonomialIdeal ideal;
    ideal.gens_ = sorted_unique(std::move(gens));
    return ideal;
}

bool MonomialIdeal::is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::all_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains_monomial(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

VariablePrime VariablePrime::from(std::vector<Variable> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return VariablePrime{std::move(vars)};
}

bool VariablePrime::contains_variable(const Variable& v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
}

MonomialIdeal VariablePrime::to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(vars.size());
    for (auto& v : vars) gens.push_back(Monomial::variable(v));
    return MonomialIdeal::from(std::move(gens));
}

MonomialIdeal minimalize(std::vector<Monomial> gens) {
    gens = sorted_unique(std::move(gens));
    if (gens.empty()) return {};
    // degree-ascending scan: a generator survives iff no kept generator
    // divides it; grlex already sorts by degree first
    Compiled c;
    c.set_universe(gens);
    for (auto& g : gens) c.add(g);
    std::vector<std::size_t> kept;
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t k : kept) {
            if (c.degrees[k] > c.degrees[i]) break;  // kept is degree-sorted
            if (c.divides(k, i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(i);
            out.push_back(gens[i]);
        }
    }
    return MonomialIdeal::from(std::move(out));
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) { return minimalize(ideal.generators()); }

MonomialIdeal radical_monomial(const MonomialIdeal& ideal) {
    std::vector<Monomial> parts;
    parts.reserve(ideal.size());
    for (auto& g : ideal.generators()) parts.push_back(g.squarefree_part());
    return minimalize(std::move(parts));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> lcms;
    lcms.reserve(a.size() * b.size());
    for (auto& u : a.generators())
        for (auto& v : b.generators()) lcms.push_back(Monomial::lcm(u, v));
    return minimalize(std::move(lcms));
}

MonomialIdeal sum_radical(const std::vector<MonomialIdeal>& ideals) {
    std::vector<Monomial> parts;
    for (auto& ideal : ideals)
        for (auto& g : ideal.generators()) parts.push_back(g.squarefree_part());
    return minimalize(std::move(parts));
}

bool prime_contains(const VariablePrime& prime, const Polynomial& f) {
    for (auto& [m, c] : f.terms()) {
        bool hit = false;
        for (auto& [v, e] : m.factors()) {
            if (prime.contains_variable(v)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_subset(const Mask& a, const Mask& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

std::vector<Mask> prune_to_minimal(std::vector<Mask> covers) {
    std::vector<Mask> minimal;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < covers.size() && !redundant; ++j)
            if (i != j && mask_subset(covers[j], covers[i]) && covers[j] != covers[i])
                redundant = true;
        if (!redundant) minimal.push_back(covers[i]);
    }
    return minimal;
}

struct CoverSolver {
    std::vector<std::vector<int>> gen_vars;  // variable indexes per generator
    std::size_t words;
    std::map<std::vector<int>, std::vector<Mask>> memo;

    // The inclusion-minimal variable sets hitting every generator listed in
    // todo, built by branching over a smallest surviving generator.  Pruning
    // per subproblem is lossless: a minimal cover C with v in C restricts to
    // C minus v, which is again minimal for the generators v misses.
    const std::vector<Mask>& solve(const std::vector<int>& todo) {
        auto it = memo.find(todo);
        if (it != memo.end()) return it->second;
        std::vector<Mask> result;
        if (todo.empty()) {
            result.push_back(Mask(words, 0));
        } else {
            int pick = todo[0];
            for (int g : todo)
                if (gen_vars[g].size() < gen_vars[pick].size()) pick = g;
            std::set<Mask> seen;
            for (int v : gen_vars[pick]) {
                std::vector<int> rest;
                rest.reserve(todo.size());
                for (int g : todo) {
                    bool hit = std::binary_search(gen_vars[g].begin(), gen_vars[g].end(), v);
                    if (!hit) rest.push_back(g);
                }
                for (const Mask& sub : solve(rest)) {
                    Mask full = sub;
                    full[v / 64] |= 1ull << (v % 64);
                    seen.insert(std::move(full));
                }
            }
            result = prune_to_minimal({seen.begin(), seen.end()});
        }
        return memo.emplace(todo, std::move(result)).first->second;
    }
};

}  // namespace

std::vector<VariablePrime> minimal_primes_squarefree(const MonomialIdeal& ideal) {
    if (!ideal.all_squarefree())
        throw std::invalid_argument("minimal_primes_squarefree: generators must be square-free");
    MonomialIdeal minimal = minimalize(ideal);
    if (minimal.is_zero()) return {VariablePrime{}};  // zero ideal: the zero prime
    if (minimal.is_unit()) return {};                 // unit ideal: no primes

    Compiled c;
    c.set_universe(minimal.generators());
    CoverSolver solver;
    solver.words = c.words;
    for (auto& g : minimal.generators()) {
        std::vector<int> vs;
        for (auto& [v, e] : g.factors()) vs.push_back(c.index.at(v));
        std::sort(vs.begin(), vs.end());
        solver.gen_vars.push_back(std::move(vs));
    }
    std::vector<int> all;
    for (std::size_t k = 0; k < solver.gen_vars.size(); ++k) all.push_back(static_cast<int>(k));
    const std::vector<Mask> minimal_covers = solver.solve(all);

    std::vector<VariablePrime> primes;
    primes.reserve(minimal_covers.size());
    for (const Mask& mask : minimal_covers) {
        std::vector<Variable> vars;
        for (std::size_t k = 0; k < c.vars.size(); ++k)
            if (mask[k / 64] & (1ull << (k % 64))) vars.push_back(c.vars[k]);
        primes.push_back(VariablePrime::from(std::move(vars)));
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

}  // namespace wedgelab
