#include "wedgelab/report.hpp"

#include <sstream>

namespace wedgelab {

std::string json_escape(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

std::string int_list(const std::vector<int>& values) {
    std::string s = "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(values[k]);
    }
    return s + "]";
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

std::string tuple_csv(const std::vector<int>& t) {
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(t[k]);
    }
    return s;
}

}  // namespace

HypersurfaceReport HypersurfaceReport::compute(const MonomialHypersurface& surface, int order) {
    HypersurfaceReport report;
    report.order = order;
    report.surface = surface;
    for (auto& prime : enumerate_minimal_primes(surface, order))
        report.components.push_back(component_report(prime, surface, order));
    report.radical = radical_generators(surface, order);
    report.verdict = lci_verdict(surface, order);
    return report;
}

std::string HypersurfaceReport::to_json() const {
    std::ostringstream out;
    out << "{\"m\":" << order << ",\"a\":" << int_list(surface.exponents) << ",\"primes\":[";
    for (std::size_t k = 0; k < components.size(); ++k) {
        if (k) out << ",";
        out << "{\"t\":" << int_list(components[k].prime.t)
            << ",\"height\":" << components[k].height << ",\"dim\":" << components[k].dim << "}";
    }
    out << "],\"radical_gens\":[";
    for (std::size_t k = 0; k < radical.generators().size(); ++k) {
        if (k) out << ",";
        out << "\"" << json_escape(radical.generators()[k].to_string()) << "\"";
    }
    out << "],\"verdict\":{\"dim\":" << verdict.dim << ",\"expected_dim\":" << verdict.expected_dim
        << ",\"pure_dimensional\":" << bool_word(verdict.pure_dimensional)
        << ",\"dim_matches_expected\":" << bool_word(verdict.dim_matches_expected)
        << ",\"irreducible\":" << bool_word(verdict.irreducible) << "}}";
    return out.str();
}

std::string strategy_name(CertifyStrategy strategy) {
    return strategy == CertifyStrategy::closed_form ? "paper" : "random";
}

std::string certificates_tsv(const std::vector<Certificate>& certificates) {
    std::ostringstream out;
    out << "# m\tt\tstrategy\tverdict\tseed\n";
    for (auto& cert : certificates) {
        out << cert.prime.order << "\t" << tuple_csv(cert.prime.t) << "\t"
            << strategy_name(cert.strategy) << "\t" << (cert.proven ? "proven" : "inconclusive")
            << "\t";
        if (cert.strategy == CertifyStrategy::randomized)
            out << cert.seed;
        else
            out << "-";
        out << "\n";
    }
    return out.str();
}

std::string certificates_json(const std::vector<Certificate>& certificates,
                              const MonomialHypersurface& surface) {
    std::ostringstream out;
    out << "{\"a\":" << int_list(surface.exponents) << ",\"certificates\":[";
    for (std::size_t k = 0; k < certificates.size(); ++k) {
        const Certificate& cert = certificates[k];
        if (k) out << ",";
        out << "{\"m\":" << cert.prime.order << ",\"t\":" << int_list(cert.prime.t)
            << ",\"height\":" << cert.height << ",\"strategy\":\"" << strategy_name(cert.strategy)
            << "\",\"verdict\":\"" << (cert.proven ? "proven" : "inconclusive") << "\"";
        if (cert.strategy == CertifyStrategy::closed_form) {
            out << ",\"det\":\"" << cert.det.get_str() << "\"";
        } else {
            out << ",\"rank\":" << cert.rank << ",\"seed\":" << cert.seed
                << ",\"trials\":" << cert.trials_used;
        }
        out << "}";
    }
    out << "]}";
    return out.str();
}

}  // namespace wedgelab
