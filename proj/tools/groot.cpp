#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "groot/cache.hpp"
#include "groot/reproduce.hpp"
#include "groot/serialize.hpp"

namespace {

using namespace groot;

std::string resolve_cache_dir(const std::string& flag_value, const std::string& config_path) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GROOT_CACHE_DIR"); env && *env) return env;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ParseError("cannot open config file " + config_path);
        try {
            Json j = Json::parse(in);
            if (j.contains("cache_dir")) return j["cache_dir"].get<std::string>();
        } catch (const std::exception& e) {
            throw ParseError("bad config file " + config_path + ": " + e.what());
        }
    }
    return "";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

BrieskornTriple require_positive(const BrieskornTriple& t, const std::string& what) {
    if (!t.positive())
        throw InvalidTriple(what + " is computed for positively oriented spheres only");
    return t;
}

LocalClass term_class(const SumTerm& term, bool closed_form, const RootCache& cache) {
    LocalClass c;
    if (closed_form && term.token) {
        c = class_of_subroot(family_subroot(term.token->first, term.token->second));
    } else {
        c = class_of_subroot(extract_monotone(graded_root_cached(term.triple, cache)));
    }
    return term.multiplicity * c;
}

int cmd_root(const std::string& target, const std::string& format, const RootCache& cache) {
    BrieskornTriple t = require_positive(parse_triple(target), "the graded root");
    GradedRoot root = graded_root_cached(t, cache);
    if (format == "json") {
        emit(to_json(root));
    } else if (format == "dot") {
        std::cout << to_dot(root);
    } else {
        std::cout << "sigma=" << root.sigma() << " d=" << d_invariant(root) << " leaves=[";
        for (std::size_t i = 0; i < root.leaves().size(); ++i)
            std::cout << (i ? "," : "") << root.leaves()[i];
        std::cout << "] angles=[";
        for (std::size_t i = 0; i < root.angles().size(); ++i)
            std::cout << (i ? "," : "") << root.angles()[i];
        std::cout << "]\n";
    }
    return 0;
}

int cmd_subroot(const std::string& target, const std::string& format, bool closed_form,
                const RootCache& cache) {
    MonotoneSubroot m = [&] {
        if (closed_form) {
            auto terms = parse_connected_sum(target);
            if (terms.size() != 1 || !terms[0].token || terms[0].multiplicity != 1)
                throw ParseError("--closed-form needs a single family token such as Y1(3)");
            return family_subroot(terms[0].token->first, terms[0].token->second);
        }
        BrieskornTriple t = require_positive(parse_triple(target), "the monotone subroot");
        return extract_monotone(graded_root_cached(t, cache));
    }();
    if (format == "json")
        emit(to_json(m));
    else
        std::cout << m.str() << "\n";
    return 0;
}

int cmd_class(const std::string& target, const std::string& format, bool closed_form,
              const RootCache& cache) {
    auto terms = parse_connected_sum(target);
    if (terms.size() != 1) throw ParseError("class takes a single manifold; use kernel for sums");
    LocalClass c = term_class(terms[0], closed_form, cache);
    if (format == "json")
        emit(to_json(c));
    else
        std::cout << c.str() << "\n";
    return 0;
}

int cmd_kernel(const std::string& expr, const std::string& format, bool closed_form,
               const RootCache& cache) {
    auto terms = parse_connected_sum(expr);
    LocalClass total;
    for (const auto& term : terms) total += term_class(term, closed_form, cache);

    // h(Y_a) = h(Y_b) with two single Seifert spheres: only then does the
    // Seiberg-Witten equivalence apply.
    const bool sw_pair = terms.size() == 2 && total.is_zero() &&
                         ((terms[0].multiplicity == 1 && terms[1].multiplicity == -1) ||
                          (terms[0].multiplicity == -1 && terms[1].multiplicity == 1));
    auto vanishing = vanishing_report(total, sw_pair);

    if (format == "json") {
        emit(Json{{"class", to_json(total)},
                  {"zero", total.is_zero()},
                  {"swEquivalencePair", sw_pair},
                  {"vanishing", vanishing}});
    } else {
        std::cout << "class: " << total.str() << "\n";
        std::cout << "zero: " << (total.is_zero() ? "true" : "false") << "\n";
        if (!vanishing.empty()) {
            std::cout << "vanishing:";
            for (const auto& name : vanishing) std::cout << " " << name;
            std::cout << "\n";
        }
    }
    return total.is_zero() ? 0 : 1;
}

int cmd_independence(const std::string& family, Int n_max, const std::vector<std::string>& members,
                     const std::string& format) {
    std::vector<BrieskornTriple> triples;
    if (!members.empty()) {
        for (const auto& m : members) triples.push_back(parse_triple(m));
    } else if (family == "paper-A") {
        if (n_max < 1) throw ParseError("--n-max must be positive");
        for (Int n = 0; n <= n_max; ++n) triples.push_back(family_triple(Family::B, n));
        for (Int n = 1; n <= n_max; ++n) triples.push_back(family_triple(Family::Y1, n));
        for (Int n = 1; n <= n_max; ++n) triples.push_back(family_triple(Family::Y2, n));
    } else if (family == "paper-B") {
        if (n_max < 1) throw ParseError("--n-max must be positive");
        for (Int n = 0; n <= n_max; ++n) triples.push_back(family_triple(Family::B, 4 * n));
        for (Int n = 1; n <= n_max; ++n) triples.push_back(family_triple(Family::Y3, n));
    } else {
        throw ParseError("specify --family paper-A|paper-B or list members");
    }

    IndependenceCertificate cert = independence_certificate(triples);
    if (format == "json") {
        emit(to_json(cert));
    } else {
        std::cout << "family size: " << cert.family.size() << "\n";
        std::cout << "verdict: " << (cert.verdict ? "true" : "false") << "\n";
    }
    return cert.verdict ? 0 : 1;
}

int cmd_scan(Int n_max, const std::string& format) {
    if (n_max < 1) throw ParseError("--n-max must be positive");
    try {
        FamilyScanReport rep = family_scan(n_max);
        if (format == "json")
            emit(to_json(rep));
        else
            std::cout << "scan n<=" << n_max << ": all checks pass\n";
        return 0;
    } catch (const CounterexampleFound& e) {
        std::cerr << "counterexample: " << e.what() << "\n";
        return 1;
    }
}

int cmd_reproduce(Int n_pipeline, Int n_closed_form) {
    ReproduceOptions opt;
    opt.n_pipeline = n_pipeline;
    opt.n_closed_form = n_closed_form;
    auto claims = reproduce_paper(opt);
    bool all = true;
    for (const auto& c : claims) {
        all = all && c.pass;
        std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.summary;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (all ? "all claims pass" : "some claims FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded roots, local equivalence classes and r0 certificates of Brieskorn spheres"};
    app.require_subcommand(1);

    std::string cache_flag, config_path;
    app.add_option("--cache-dir", cache_flag, "directory for the tau-extrema cache");
    app.add_option("--config", config_path, "JSON config file ({\"cache_dir\": ...})");

    std::string target, format = "text", expr, family;
    bool closed_form = false;
    Int n_max = 100, n_pipeline = 8, n_closed_form = 50;
    std::vector<std::string> members;

    auto* root_cmd = app.add_subcommand("root", "graded root of a Brieskorn sphere");
    root_cmd->add_option("triple", target, "triple 'a,b,c' or family token like B(4)")->required();
    root_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text", "dot"}));

    auto* subroot_cmd = app.add_subcommand("subroot", "monotone graded subroot");
    subroot_cmd->add_option("manifold", target)->required();
    subroot_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    subroot_cmd->add_flag("--closed-form", closed_form, "use the family formulas instead of the tau scan");

    auto* class_cmd = app.add_subcommand("class", "local equivalence class in the {T, X_k} basis");
    class_cmd->add_option("manifold", target)->required();
    class_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    class_cmd->add_flag("--closed-form", closed_form);

    auto* kernel_cmd = app.add_subcommand("kernel", "evaluate a connected sum; exit 0 iff it lies in ker h");
    kernel_cmd->add_option("expression", expr, "e.g. \"Y1(1) # -B(2) # B(1) # -B(0)\"")->required();
    kernel_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    kernel_cmd->add_flag("--closed-form", closed_form);

    auto* indep_cmd = app.add_subcommand("independence", "r0 linear-independence certificate");
    indep_cmd->add_option("--family", family, "paper-A (B,Y1,Y2) or paper-B (B(4n),Y3)");
    indep_cmd->add_option("--n-max", n_max);
    indep_cmd->add_option("members", members, "explicit triples or family tokens");
    indep_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* scan_cmd = app.add_subcommand("scan", "verify the arithmetic facts behind r0 distinctness");
    scan_cmd->add_option("--n-max", n_max);
    scan_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* repro_cmd = app.add_subcommand("reproduce-paper", "run the whole reproduction suite");
    repro_cmd->add_option("--n-pipeline", n_pipeline, "tau-scan range for family laws");
    repro_cmd->add_option("--n-closed-form", n_closed_form, "closed-form range for identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RootCache cache((std::filesystem::path(resolve_cache_dir(cache_flag, config_path))));
        if (root_cmd->parsed()) return cmd_root(target, format, cache);
        if (subroot_cmd->parsed()) return cmd_subroot(target, format, closed_form, cache);
        if (class_cmd->parsed()) return cmd_class(target, format, closed_form, cache);
        if (kernel_cmd->parsed()) return cmd_kernel(expr, format, closed_form, cache);
        if (indep_cmd->parsed()) return cmd_independence(family, n_max, members, format);
        if (scan_cmd->parsed()) return cmd_scan(n_max, format);
        if (repro_cmd->parsed()) return cmd_reproduce(n_pipeline, n_closed_form);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidTriple& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OddGrading& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormulaInapplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
