#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wedgelab/wedge_components.hpp"

namespace wedgelab {

/// How to certify that the wedge ideal generates the maximal ideal of the
/// local ring along a component (multiplicity one).
///   closed_form — the explicit generator selection available for r = 2, 3,
///                 checked by an exact determinant at a fixed 0/1 point;
///   randomized  — linear parts of all generators, rank over F_q at random
///                 points; proven is sound, inconclusive claims nothing.
enum class CertifyStrategy { closed_form, randomized };

struct CertifyOptions {
    std::uint32_t field_size = 65521;
    int trials = 5;
    std::uint64_t seed = 0;
};

/// g modulo P^2 as a sparse row over the P-coordinates: for every term of g
/// with exactly one P-coordinate factor (counted with multiplicity), the
/// cofactor lands in that coordinate's column.  Cofactors never mention a
/// P-coordinate.  Throws if some term has no P-factor at all (g not in P).
using SparseRow = std::map<Variable, Polynomial>;
SparseRow linear_part(const Polynomial& g, const VariablePrime& prime);

/// The square system used by the closed-form strategy, exposed for tests.
struct ClosedFormSystem {
    std::vector<Variable> columns;               // P-coordinates in block order
    std::vector<std::pair<int, int>> rows;       // selected generator ids, aligned
    std::vector<std::vector<Polynomial>> cofactors;
    std::map<Variable, Rational> assignment;     // full point (units and zeros)
    std::vector<std::vector<Rational>> evaluated;
};

/// Generator ids picked for a reduced hypersurface with r = 2 or 3, one per
/// P-coordinate, aligned with the block column order.  For r = 3 the roles
/// follow the order tuple sorted ascending.
std::vector<std::pair<int, int>> closed_form_selection(const MonomialHypersurface& surface,
                                                       const StaircasePrime& prime);

/// The 0/1 point certifying invertibility: unit values on the designated
/// coordinates (x^(t1,0)-style entries that exist in the ring), zero on every
/// other free coordinate.  Only the units are listed; absent means zero.
std::map<Variable, Rational> closed_form_evaluation(const MonomialHypersurface& surface,
                                                    const StaircasePrime& prime);

ClosedFormSystem closed_form_system(const MonomialHypersurface& surface,
                                    const StaircasePrime& prime, const WedgeIdeal& wedge);

struct Certificate {
    StaircasePrime prime;
    CertifyStrategy strategy = CertifyStrategy::closed_form;
    int height = 0;
    bool proven = false;
    // closed form
    std::vector<std::pair<int, int>> selected;
    std::map<Variable, Rational> assignment;  // the unit entries; absent means zero
    Rational det;
    // randomized
    std::uint64_t seed = 0;
    int trials_used = 0;
    int rank = 0;
};

/// Certify multiplicity one along the component of `prime`.  Requires a
/// reduced hypersurface and a minimal prime; the closed-form strategy
/// additionally requires r = 2 or 3.  A proven verdict is sound; an
/// inconclusive one asserts nothing.
Certificate certify(const MonomialHypersurface& surface, const StaircasePrime& prime, int order,
                    CertifyStrategy strategy, const CertifyOptions& options = {});

/// same, reusing an already-built wedge ideal
Certificate certify(const WedgeIdeal& wedge, const MonomialHypersurface& surface,
                    const StaircasePrime& prime, CertifyStrategy strategy,
                    const CertifyOptions& options = {});

/// Certificates for every component of x_1...x_r, m = 0..m_max, in
/// deterministic order (m ascending, order tuple lexicographic).  `threads`
/// caps worker threads; results do not depend on the schedule.
std::vector<Certificate> certificate_sweep(int r, int m_max, CertifyStrategy strategy,
                                           const CertifyOptions& options = {}, int threads = 1);

}  // namespace wedgelab
