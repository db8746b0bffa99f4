// Command-line front end: builders, component reports, certificates, and the
// cross-validation suites.  All output is deterministic for a fixed seed.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "wedgelab/groebner.hpp"
#include "wedgelab/multiplicity.hpp"
#include "wedgelab/oracle.hpp"
#include "wedgelab/report.hpp"
#include "wedgelab/selfcheck.hpp"

namespace {

using namespace wedgelab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitBudget = 3;

int thread_count() {
    int count = static_cast<int>(std::thread::hardware_concurrency());
    if (count < 1) count = 1;
    if (count > 8) count = 8;
    if (const char* env = std::getenv("WEDGELAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < count) count = cap;
    }
    return count;
}

std::vector<int> parse_csv_ints(const std::string& text, const char* what) {
    std::vector<int> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + ": '" + item + "'");
        }
    }
    if (values.empty()) throw std::invalid_argument(std::string("empty ") + what);
    return values;
}

// plain variable names appearing in polynomial text, in first-seen order
std::vector<std::string> scan_names(const std::vector<std::string>& texts) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& text : texts) {
        for (std::size_t k = 0; k < text.size();) {
            if (std::isalpha(static_cast<unsigned char>(text[k]))) {
                std::size_t start = k;
                while (k < text.size() && std::isalnum(static_cast<unsigned char>(text[k]))) ++k;
                std::string name = text.substr(start, k - start);
                if (seen.insert(name).second) names.push_back(name);
            } else {
                ++k;
            }
        }
    }
    return names;
}

struct IdealArgs {
    std::vector<std::string> polys;
    std::string file;
    std::string vars;
    int m = 0;
    std::string format = "text";
};

AffineIdealInput read_ideal(const IdealArgs& args) {
    std::vector<std::string> texts = args.polys;
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) throw std::invalid_argument("cannot open " + args.file);
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            texts.push_back(line);
        }
    }
    if (texts.empty()) throw std::invalid_argument("no generators given (use -f or --file)");

    std::vector<std::string> names;
    if (!args.vars.empty()) {
        std::stringstream in(args.vars);
        std::string item;
        while (std::getline(in, item, ',')) names.push_back(item);
    } else {
        names = scan_names(texts);
        std::sort(names.begin(), names.end());
    }
    std::vector<Variable> ambient;
    for (auto& name : names) ambient.push_back(Variable::plain(name));

    VariableTable table(ambient);
    std::vector<Polynomial> gens;
    for (auto& text : texts) gens.push_back(parse_polynomial(text, table));
    return AffineIdealInput::create(std::move(ambient), std::move(gens));
}

void print_wedge(const WedgeIdeal& wedge, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << "{\"m\":" << wedge.order << ",\"ambient\":[";
        for (std::size_t k = 0; k < wedge.source.ambient.size(); ++k) {
            if (k) out << ",";
            out << "\"" << json_escape(wedge.source.ambient[k].name()) << "\"";
        }
        out << "],\"variables\":[";
        for (std::size_t k = 0; k < wedge.variables.size(); ++k) {
            if (k) out << ",";
            out << "\"" << json_escape(wedge.variables[k].name()) << "\"";
        }
        out << "],\"generators\":[";
        bool first = true;
        for (auto& [key, g] : wedge.generators) {
            if (!first) out << ",";
            first = false;
            out << "{\"source\":" << key.source << ",\"i\":" << key.i << ",\"j\":" << key.j
                << ",\"poly\":\"" << json_escape(g.to_string()) << "\"}";
        }
        out << "]}\n";
        return;
    }
    out << "m = " << wedge.order << "\n";
    out << "wedge variables (" << wedge.variables.size() << "):";
    for (auto& v : wedge.variables) out << " " << v.name();
    out << "\ngenerators (" << wedge.generators.size() << "):\n";
    for (auto& [key, g] : wedge.generators)
        out << "g[" << key.source << "][" << key.i << "," << key.j << "] = " << g.to_string()
            << "\n";
}

void print_jet(const JetIdeal& jet, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << "{\"m\":" << jet.order << ",\"ambient\":[";
        for (std::size_t k = 0; k < jet.source.ambient.size(); ++k) {
            if (k) out << ",";
            out << "\"" << json_escape(jet.source.ambient[k].name()) << "\"";
        }
        out << "],\"variables\":[";
        for (std::size_t k = 0; k < jet.variables.size(); ++k) {
            if (k) out << ",";
            out << "\"" << json_escape(jet.variables[k].name()) << "\"";
        }
        out << "],\"generators\":[";
        bool first = true;
        for (auto& [key, g] : jet.generators) {
            if (!first) out << ",";
            first = false;
            out << "{\"source\":" << key.first << ",\"n\":" << key.second << ",\"poly\":\""
                << json_escape(g.to_string()) << "\"}";
        }
        out << "]}\n";
        return;
    }
    out << "m = " << jet.order << "\n";
    out << "jet variables (" << jet.variables.size() << "):";
    for (auto& v : jet.variables) out << " " << v.name();
    out << "\ngenerators (" << jet.generators.size() << "):\n";
    for (auto& [key, g] : jet.generators)
        out << "g[" << key.first << "][" << key.second << "] = " << g.to_string() << "\n";
}

std::string tuple_text(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(t[k]);
    }
    return s + ")";
}

void print_report_header(const HypersurfaceReport& report, std::ostream& out) {
    out << "m = " << report.order << "  a = " << tuple_text(report.surface.exponents)
        << "  N = " << report.surface.ambient_count << "\n";
}

int run_component_command(const std::string& command, const std::vector<int>& a, int m, int N,
                          const std::string& format, std::ostream& out) {
    const MonomialHypersurface surface = MonomialHypersurface::create(a, N);
    const HypersurfaceReport report = HypersurfaceReport::compute(surface, m);
    if (format == "json") {
        out << report.to_json() << "\n";
        return kExitOk;
    }
    print_report_header(report, out);
    if (command == "minimal-primes" || command == "dimension") {
        if (command == "dimension")
            out << "ambient wedge dimension = " << surface.ambient_wedge_dimension(m) << "\n";
        out << "minimal primes (" << report.components.size() << "):\n";
        for (auto& c : report.components)
            out << "t=" << tuple_text(c.prime.t) << "  height=" << c.height << "  dim=" << c.dim
                << "\n";
    } else if (command == "radical") {
        out << "radical generators (" << report.radical.size() << "):\n";
        for (auto& g : report.radical.generators()) out << g.to_string() << "\n";
    } else {  // lci-verdict
        out << "components = " << report.components.size() << "\n";
        out << "dim = " << report.verdict.dim << "\n";
        out << "expected_dim = " << report.verdict.expected_dim << "\n";
        out << "pure_dimensional = " << (report.verdict.pure_dimensional ? "true" : "false")
            << "\n";
        out << "dim_matches_expected = "
            << (report.verdict.dim_matches_expected ? "true" : "false") << "\n";
        out << "irreducible = " << (report.verdict.irreducible ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& suite, int rmax, int amax, int mmax, int samples,
               std::uint32_t q, int trials, std::uint64_t seed, long budget, std::ostream& out) {
    std::vector<CheckResult> results;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    GroebnerOptions gopts;
    gopts.spair_budget = budget;

    if (want("primes")) results.push_back(check_prime_enumeration(rmax, amax, mmax));
    if (want("radical")) results.push_back(check_radical_identity(rmax, amax, mmax));
    if (want("generic-primes")) results.push_back(check_generic_prime_oracle(rmax, amax, mmax));
    if (want("containment")) results.push_back(check_containment(rmax, amax, mmax));
    if (want("vanishing")) results.push_back(check_vanishing(rmax, amax, mmax, q, trials, seed));
    if (want("reduced")) results.push_back(check_reduced_counts(rmax, mmax));
    if (want("structural")) results.push_back(check_structural(samples, seed));
    if (want("closure")) results.push_back(check_membership_closure(seed));
    if (want("quotient")) results.push_back(check_embedded_prime_quotient(nullptr, gopts));
    if (results.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");

    bool all_ok = true;
    for (auto& r : results) {
        out << (r.ok ? "ok  " : "FAIL") << "  " << r.name << "  (" << r.cases << " cases, "
            << std::fixed << std::setprecision(2) << r.seconds << "s)";
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
        all_ok = all_ok && r.ok;
    }
    out << (all_ok ? "verify: all suites passed" : "verify: FAILURES") << "\n";
    return all_ok ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic toolkit for truncated wedge and jet schemes"};
    app.require_subcommand(1);

    IdealArgs ideal;
    std::vector<int> a;
    int m = 0;
    int N = -1;
    std::string format = "text";
    std::string gens_text;
    std::string strategy_text;
    std::uint32_t q = 65521;
    int trials = 5;
    std::uint64_t seed = 0;
    int sweep_r = 2;
    int sweep_m = 3;
    std::string suite = "all";
    int rmax = 3, amax = 2, mmax = 3, samples = 50;
    long budget = 50'000;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* build_wedge = app.add_subcommand("build-wedge", "wedge defining ideal of an input ideal");
    build_wedge->add_option("-f,--poly", ideal.polys, "generator polynomial (repeatable)");
    build_wedge->add_option("--file", ideal.file, "file with one generator per line");
    build_wedge->add_option("--vars", ideal.vars, "ambient variables, comma separated");
    build_wedge->add_option("-m,--order", ideal.m, "truncation order")->required();
    add_format(build_wedge);

    CLI::App* build_jet = app.add_subcommand("build-jet", "jet defining ideal of an input ideal");
    build_jet->add_option("-f,--poly", ideal.polys, "generator polynomial (repeatable)");
    build_jet->add_option("--file", ideal.file, "file with one generator per line");
    build_jet->add_option("--vars", ideal.vars, "ambient variables, comma separated");
    build_jet->add_option("-m,--order", ideal.m, "truncation order")->required();
    add_format(build_jet);

    std::string a_text;
    auto add_hypersurface = [&](CLI::App* cmd, bool require_N) {
        cmd->add_option("-a,--exponents", a_text, "monomial exponents, e.g. 1,1")->required();
        cmd->add_option("-m,--order", m, "truncation order")->required();
        auto* n_opt = cmd->add_option("-N,--ambient", N, "ambient dimension (default: r)");
        if (require_N) n_opt->required();
        add_format(cmd);
    };

    add_hypersurface(app.add_subcommand("minimal-primes", "components of the wedge scheme"), false);
    CLI::App* radical = app.add_subcommand("radical", "radical of the wedge ideal");
    radical->add_option("-a,--exponents", a_text, "monomial exponents, e.g. 1,1");
    radical->add_option("--gens", gens_text,
                        "monomial scheme: exponent vectors separated by ';', e.g. 1,1,0;0,1,1");
    radical->add_option("-m,--order", m, "truncation order")->required();
    radical->add_option("-N,--ambient", N, "ambient dimension (default: r)");
    add_format(radical);
    add_hypersurface(app.add_subcommand("dimension", "component heights and dimensions"), true);
    add_hypersurface(app.add_subcommand("lci-verdict", "pure-dimensionality and irreducibility"), true);

    CLI::App* cert = app.add_subcommand("mult-cert", "multiplicity-one certificates per component");
    cert->add_option("-a,--exponents", a_text, "monomial exponents (all 1)")->required();
    cert->add_option("-m,--order", m, "truncation order")->required();
    cert->add_option("--strategy", strategy_text, "paper or random")
        ->check(CLI::IsMember({"paper", "random"}));
    cert->add_option("--q", q, "field size for the randomized strategy");
    cert->add_option("--seed", seed, "randomized strategy seed");
    cert->add_option("--trials", trials, "randomized trials per component");
    add_format(cert);

    CLI::App* sweep = app.add_subcommand("sweep", "certificates for all m <= M (TSV)");
    sweep->add_option("-r,--factors", sweep_r, "number of hypersurface factors")->required();
    sweep->add_option("-M,--max-order", sweep_m, "largest truncation order")->required();
    sweep->add_option("--strategy", strategy_text, "paper or random")
        ->check(CLI::IsMember({"paper", "random"}));
    sweep->add_option("--q", q, "field size for the randomized strategy");
    sweep->add_option("--seed", seed, "randomized strategy seed");
    sweep->add_option("--trials", trials, "randomized trials per component");

    CLI::App* verify = app.add_subcommand("verify", "cross-validation suites");
    verify->add_option("suite", suite,
                       "all, primes, radical, generic-primes, containment, vanishing, reduced, "
                       "structural, closure, quotient");
    verify->add_option("--rmax", rmax, "largest factor count");
    verify->add_option("--amax", amax, "largest exponent");
    verify->add_option("--mmax", mmax, "largest truncation order");
    verify->add_option("--samples", samples, "random structural samples");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--q", q, "field size");
    verify->add_option("--trials", trials, "vanishing trials per component");
    verify->add_option("--budget", budget, "Gröbner S-pair budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (build_wedge->parsed() || build_jet->parsed()) {
            const AffineIdealInput input = read_ideal(ideal);
            if (build_wedge->parsed())
                print_wedge(build_wedge_ideal(input, ideal.m), format, std::cout);
            else
                print_jet(build_jet_ideal(input, ideal.m), format, std::cout);
            return kExitOk;
        }

        if (!a_text.empty()) a = parse_csv_ints(a_text, "exponent vector");

        for (const char* name : {"minimal-primes", "dimension", "lci-verdict"})
            if (app.get_subcommand(name)->parsed())
                return run_component_command(name, a, m, N, format, std::cout);

        if (radical->parsed()) {
            if (!gens_text.empty()) {
                std::vector<std::vector<int>> gens;
                std::stringstream in(gens_text);
                std::string item;
                while (std::getline(in, item, ';'))
                    gens.push_back(parse_csv_ints(item, "exponent vector"));
                const MonomialIdeal rad = radical_monomial_scheme(gens, m);
                if (format == "json") {
                    std::cout << "{\"m\":" << m << ",\"gens\":[";
                    for (std::size_t k = 0; k < gens.size(); ++k) {
                        if (k) std::cout << ",";
                        std::cout << "[";
                        for (std::size_t i = 0; i < gens[k].size(); ++i) {
                            if (i) std::cout << ",";
                            std::cout << gens[k][i];
                        }
                        std::cout << "]";
                    }
                    std::cout << "],\"radical_gens\":[";
                    for (std::size_t k = 0; k < rad.generators().size(); ++k) {
                        if (k) std::cout << ",";
                        std::cout << "\"" << json_escape(rad.generators()[k].to_string()) << "\"";
                    }
                    std::cout << "]}\n";
                } else {
                    std::cout << "m = " << m << "\nradical generators (" << rad.size() << "):\n";
                    for (auto& g : rad.generators()) std::cout << g.to_string() << "\n";
                }
                return kExitOk;
            }
            if (a.empty()) throw std::invalid_argument("radical needs -a or --gens");
            return run_component_command("radical", a, m, N, format, std::cout);
        }

        if (cert->parsed() || sweep->parsed()) {
            CertifyOptions options;
            options.field_size = q;
            options.trials = trials;
            options.seed = seed;
            bool inconclusive = false;
            if (cert->parsed()) {
                const MonomialHypersurface surface = MonomialHypersurface::create(a, N);
                CertifyStrategy strategy;
                if (!strategy_text.empty())
                    strategy = strategy_text == "paper" ? CertifyStrategy::closed_form
                                                        : CertifyStrategy::randomized;
                else
                    strategy = (surface.r() == 2 || surface.r() == 3)
                                   ? CertifyStrategy::closed_form
                                   : CertifyStrategy::randomized;
                const WedgeIdeal wedge = hypersurface_wedge_ideal(surface, m);
                std::vector<Certificate> certs;
                for (auto& prime : enumerate_minimal_primes(surface, m))
                    certs.push_back(certify(wedge, surface, prime, strategy, options));
                for (auto& c : certs) inconclusive = inconclusive || !c.proven;
                if (format == "json")
                    std::cout << certificates_json(certs, surface) << "\n";
                else
                    std::cout << certificates_tsv(certs);
            } else {
                const CertifyStrategy strategy =
                    (strategy_text.empty() ? (sweep_r <= 3 ? CertifyStrategy::closed_form
                                                           : CertifyStrategy::randomized)
                     : strategy_text == "paper" ? CertifyStrategy::closed_form
                                                : CertifyStrategy::randomized);
                const auto certs =
                    certificate_sweep(sweep_r, sweep_m, strategy, options, thread_count());
                for (auto& c : certs) inconclusive = inconclusive || !c.proven;
                std::cout << certificates_tsv(certs);
            }
            return inconclusive ? kExitInconclusive : kExitOk;
        }

        if (verify->parsed())
            return run_verify(suite, rmax, amax, mmax, samples, q, trials, seed, budget,
                              std::cout);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
