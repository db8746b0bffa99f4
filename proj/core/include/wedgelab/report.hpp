#pragma once

#include <string>
#include <vector>

#include "wedgelab/multiplicity.hpp"
#include "wedgelab/wedge_components.hpp"

namespace wedgelab {

/// Everything the component commands report about one hypersurface at one
/// order.  The JSON field names are a fixed interface:
///   {m, a, primes: [{t, height, dim}], radical_gens: [string], verdict: {...}}
struct HypersurfaceReport {
    int order = 0;
    MonomialHypersurface surface;
    std::vector<ComponentReport> components;
    MonomialIdeal radical;
    LciVerdict verdict;

    static HypersurfaceReport compute(const MonomialHypersurface& surface, int order);
    std::string to_json() const;
};

/// external names of the certificate strategies ("paper" / "random")
std::string strategy_name(CertifyStrategy strategy);

/// one row per certificate: m, t-tuple, strategy, verdict, witness seed
std::string certificates_tsv(const std::vector<Certificate>& certificates);

std::string certificates_json(const std::vector<Certificate>& certificates,
                              const MonomialHypersurface& surface);

std::string json_escape(const std::string& raw);

}  // namespace wedgelab
