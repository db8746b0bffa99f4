#include "wedgelab/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "wedgelab/linalg.hpp"
#include "wedgelab/rng.hpp"

namespace wedgelab {

SparseRow linear_part(const Polynomial& g, const VariablePrime& prime) {
    SparseRow row;
    for (auto& [mono, coeff] : g.terms()) {
        int count = 0;
        const Variable* inside = nullptr;
        for (auto& [v, e] : mono.factors()) {
            if (prime.contains_variable(v)) {
                count += e;
                inside = &v;
            }
        }
        if (count == 0)
            throw std::invalid_argument("linear_part: generator has a term outside the prime");
        if (count > 1) continue;  // lands in P^2
        row[*inside] += Polynomial::term(mono.divided_by(Monomial::variable(*inside)), coeff);
    }
    return row;
}

namespace {

void require_reduced(const MonomialHypersurface& surface) {
    for (int a : surface.exponents)
        if (a != 1)
            throw std::invalid_argument("certificates require a reduced hypersurface (all exponents 1)");
}

void require_minimal(const MonomialHypersurface& surface, const StaircasePrime& prime, int order) {
    if (prime.order != order) throw std::invalid_argument("prime has a different order");
    const auto primes = enumerate_minimal_primes(surface, order);
    if (std::find(primes.begin(), primes.end(), prime) == primes.end())
        throw std::invalid_argument("not a minimal prime of the wedge ideal");
}

// pairs (i,j) with i+j < bound, grade ascending, s-exponent descending within
// a grade — the block layout of the closed-form matrix
std::vector<std::pair<int, int>> pairs_below(int bound) {
    std::vector<std::pair<int, int>> out;
    for (int grade = 0; grade < bound; ++grade)
        for (int i = grade; i >= 0; --i) out.emplace_back(i, grade - i);
    return out;
}

// equation variables in role order: ascending order tuple for r = 3 (stable
// on ties), natural order for r = 2
std::vector<int> role_order(const StaircasePrime& prime) {
    std::vector<int> roles(prime.t.size());
    std::iota(roles.begin(), roles.end(), 0);
    if (prime.t.size() == 3)
        std::stable_sort(roles.begin(), roles.end(),
                         [&](int a, int b) { return prime.t[a] < prime.t[b]; });
    return roles;
}

}  // namespace

std::vector<std::pair<int, int>> closed_form_selection(const MonomialHypersurface& surface,
                                                       const StaircasePrime& prime) {
    require_reduced(surface);
    const int r = surface.r();
    if (r != 2 && r != 3)
        throw std::invalid_argument("closed-form selection exists for r = 2 or 3 only");
    const std::vector<int> roles = role_order(prime);
    std::vector<std::pair<int, int>> rows;
    if (r == 2) {
        const int t1 = prime.t[0], t2 = prime.t[1];
        for (auto [i, j] : pairs_below(t1)) rows.emplace_back(i, j + t2);
        for (auto [k, l] : pairs_below(t2)) rows.emplace_back(k + t1, l);
    } else {
        const int s1 = prime.t[roles[0]], s2 = prime.t[roles[1]], s3 = prime.t[roles[2]];
        for (auto [i, j] : pairs_below(s1)) rows.emplace_back(i, j + s2 + s3);
        for (auto [k, l] : pairs_below(s2)) rows.emplace_back(k + s1 + s3, l);
        for (auto [p, q] : pairs_below(s3)) rows.emplace_back(p + s1, q + s2);
    }
    return rows;
}

std::map<Variable, Rational> closed_form_evaluation(const MonomialHypersurface& surface,
                                                    const StaircasePrime& prime) {
    require_reduced(surface);
    const int r = surface.r();
    if (r != 2 && r != 3)
        throw std::invalid_argument("closed-form evaluation exists for r = 2 or 3 only");
    const int m = prime.order;
    const std::vector<int> roles = role_order(prime);
    std::map<Variable, Rational> units;
    auto assign = [&](int var, int i, int j) {
        if (i + j <= m) units.emplace(surface.wedge(var, i, j), Rational(1));
    };
    if (r == 2) {
        assign(0, prime.t[0], 0);
        assign(1, 0, prime.t[1]);
    } else {
        assign(roles[0], prime.t[roles[0]], 0);
        assign(roles[1], 0, prime.t[roles[1]]);
        assign(roles[2], 0, prime.t[roles[2]]);
        assign(roles[2], prime.t[roles[2]], 0);
    }
    return units;
}

ClosedFormSystem closed_form_system(const MonomialHypersurface& surface,
                                    const StaircasePrime& prime, const WedgeIdeal& wedge) {
    ClosedFormSystem sys;
    sys.rows = closed_form_selection(surface, prime);
    const std::vector<int> roles = role_order(prime);
    for (int k : roles)
        for (auto [i, j] : pairs_below(prime.t[k])) sys.columns.push_back(surface.wedge(k, i, j));

    const VariablePrime expanded = prime.expand(surface);
    std::set<Variable> free_vars;
    sys.cofactors.reserve(sys.rows.size());
    for (auto [gi, gj] : sys.rows) {
        const Polynomial& g = wedge.generators.at(GenKey{1, gi, gj});
        SparseRow row = linear_part(g, expanded);
        std::vector<Polynomial> cells;
        cells.reserve(sys.columns.size());
        for (auto& col : sys.columns) {
            auto it = row.find(col);
            cells.push_back(it == row.end() ? Polynomial::zero() : it->second);
            if (it != row.end())
                for (auto& v : it->second.variables()) free_vars.insert(v);
        }
        sys.cofactors.push_back(std::move(cells));
    }

    for (auto& v : free_vars) sys.assignment.emplace(v, Rational(0));
    for (auto& [v, one] : closed_form_evaluation(surface, prime)) sys.assignment[v] = one;

    sys.evaluated.reserve(sys.cofactors.size());
    for (auto& row : sys.cofactors) {
        std::vector<Rational> cells;
        cells.reserve(row.size());
        for (auto& cell : row) cells.push_back(cell.evaluate(sys.assignment));
        sys.evaluated.push_back(std::move(cells));
    }
    return sys;
}

Certificate certify(const WedgeIdeal& wedge, const MonomialHypersurface& surface,
                    const StaircasePrime& prime, CertifyStrategy strategy,
                    const CertifyOptions& options) {
    require_reduced(surface);
    require_minimal(surface, prime, wedge.order);

    Certificate cert;
    cert.prime = prime;
    cert.strategy = strategy;
    cert.height = prime.height();

    if (strategy == CertifyStrategy::closed_form) {
        ClosedFormSystem sys = closed_form_system(surface, prime, wedge);
        if (static_cast<int>(sys.rows.size()) != cert.height)
            throw std::logic_error("closed-form selection size differs from the height");
        cert.selected = sys.rows;
        cert.assignment = closed_form_evaluation(surface, prime);
        cert.det = determinant(sys.evaluated);
        cert.proven = cert.det != 0;
        return cert;
    }

    // randomized: linear parts of every generator, rank over F_q at random
    // points of the free coordinates
    const VariablePrime expanded = prime.expand(surface);
    std::vector<SparseRow> rows;
    std::set<Variable> free_vars;
    for (auto& [key, g] : wedge.generators) {
        if (g.is_zero()) continue;
        SparseRow row = linear_part(g, expanded);
        for (auto& [col, cof] : row)
            for (auto& v : cof.variables()) free_vars.insert(v);
        rows.push_back(std::move(row));
    }
    const std::vector<Variable>& columns = expanded.vars;

    const PrimeField field(options.field_size);
    std::uint64_t mixed = options.seed;
    mixed = Rng::mix(mixed, static_cast<std::uint64_t>(prime.order) + 1);
    for (int tk : prime.t) mixed = Rng::mix(mixed, static_cast<std::uint64_t>(tk) + 0x51ull);
    cert.seed = mixed;
    Rng rng(mixed);

    for (int trial = 0; trial < options.trials; ++trial) {
        std::map<Variable, std::uint32_t> point;
        for (auto& v : free_vars)
            point.emplace(v, static_cast<std::uint32_t>(rng.below(options.field_size)));
        std::vector<std::vector<std::uint32_t>> matrix;
        matrix.reserve(rows.size());
        for (auto& row : rows) {
            std::vector<std::uint32_t> cells;
            cells.reserve(columns.size());
            for (auto& col : columns) {
                auto it = row.find(col);
                cells.push_back(it == row.end() ? 0u
                                                : it->second.evaluate_mod(point, options.field_size));
            }
            matrix.push_back(std::move(cells));
        }
        cert.rank = static_cast<int>(rank_mod(std::move(matrix), field));
        cert.trials_used = trial + 1;
        if (cert.rank == cert.height) {
            cert.proven = true;
            break;
        }
    }
    return cert;
}

Certificate certify(const MonomialHypersurface& surface, const StaircasePrime& prime, int order,
                    CertifyStrategy strategy, const CertifyOptions& options) {
    return certify(hypersurface_wedge_ideal(surface, order), surface, prime, strategy, options);
}

std::vector<Certificate> certificate_sweep(int r, int m_max, CertifyStrategy strategy,
                                           const CertifyOptions& options, int threads) {
    if (r < 2) throw std::invalid_argument("sweep requires r >= 2");
    if (m_max < 0) throw std::invalid_argument("sweep requires m_max >= 0");
    const MonomialHypersurface surface = MonomialHypersurface::create(std::vector<int>(r, 1));

    std::vector<Certificate> results;
    for (int m = 0; m <= m_max; ++m) {
        const WedgeIdeal wedge = hypersurface_wedge_ideal(surface, m);
        const std::vector<StaircasePrime> primes = enumerate_minimal_primes(surface, m);
        std::vector<Certificate> certs(primes.size());
        const int workers = std::max(1, std::min<int>(threads, static_cast<int>(primes.size())));
        if (workers == 1) {
            for (std::size_t k = 0; k < primes.size(); ++k)
                certs[k] = certify(wedge, surface, primes[k], strategy, options);
        } else {
            // static partition; per-certificate seeds derive from (seed, m, t),
            // so the schedule cannot change any result
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w]() {
                    for (std::size_t k = static_cast<std::size_t>(w); k < primes.size();
                         k += static_cast<std::size_t>(workers))
                        certs[k] = certify(wedge, surface, primes[k], strategy, options);
                });
            }
            for (auto& th : pool) th.join();
        }
        for (auto& c : certs) results.push_back(std::move(c));
    }
    return results;
}

}  // namespace wedgelab
