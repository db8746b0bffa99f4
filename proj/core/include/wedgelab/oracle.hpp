#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wedgelab/rng.hpp"
#include "wedgelab/wedge_components.hpp"

namespace wedgelab {

/// A point of the wedge coordinate ring over F_q.
struct FieldPoint {
    std::uint32_t q = 0;
    std::map<Variable, std::uint32_t> assignment;
};

/// Literal filter over {0..m+1}^r: keep the tuples with sum a_k t_k >= m+1,
/// then prune to componentwise-minimal elements by pairwise comparison.  This
/// is the test-suite oracle for enumerate_minimal_primes and deliberately
/// shares no pruning logic with it.  Throws when (m+2)^r exceeds 10^7.
std::vector<std::vector<int>> brute_force_minimal_primes(const std::vector<int>& exponents,
                                                         int order);

/// A random point of the component: zero on the prime's coordinates, uniform
/// nonzero residues elsewhere.
FieldPoint component_sample(const MonomialHypersurface& surface, const StaircasePrime& prime,
                            int order, std::uint32_t q, Rng& rng);

/// Evaluate the whole wedge generator family at the point (as the truncated
/// product of the substituted series over F_q) and report whether every
/// coefficient vanishes.
bool wedge_generators_vanish(const MonomialHypersurface& surface, int order,
                             const FieldPoint& point);

/// true iff `trials` independent component samples all kill every generator;
/// a false return signals an enumeration or builder bug (for feasible
/// tuples) or witnesses infeasibility.
bool sample_vanishing(const MonomialHypersurface& surface, const StaircasePrime& prime, int order,
                      std::uint32_t q, int trials, std::uint64_t seed);

}  // namespace wedgelab
