#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qstirling/bijection.hpp"
#include "qstirling/fs_action.hpp"
#include "qstirling/gamma.hpp"
#include "qstirling/io.hpp"
#include "qstirling/tree.hpp"
#include "qstirling/verify.hpp"
#include "qstirling/word.hpp"

namespace {

using namespace qstirling;

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    f << text;
    if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

nlohmann::json poly_to_json(const Poly3& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponents", {e[0], e[1], e[2]}}, {"coeff", c}});
    return terms;
}

int cmd_enumerate(const std::string& mtext, const std::string& kind,
                  const std::string& format, const std::string& out) {
    const Multiset m = parse_multiset(mtext);
    std::vector<std::string> items;
    if (kind == "words" || kind == "quasi" || kind == "stirling") {
        for_each_word(m, [&](const Word& w) {
            if (kind == "quasi" && !is_quasi_stirling(w)) return;
            if (kind == "stirling" && !is_stirling(w)) return;
            items.push_back(word_to_text(w));
        });
    } else if (kind == "trees" || kind == "itrees") {
        for (const Tree& t : enumerate_trees(m)) {
            if (kind == "itrees" && !is_weakly_increasing(t)) continue;
            items.push_back(tree_to_text(t));
        }
    } else {
        throw std::invalid_argument("unknown kind '" + kind +
                                    "' (words|quasi|stirling|trees|itrees)");
    }
    if (format == "json") {
        nlohmann::json j{{"multiset", m.multiplicities()}, {"kind", kind}, {"items", items}};
        return emit(j.dump() + "\n", out);
    }
    if (format != "text") throw std::invalid_argument("enumerate supports text|json");
    std::string text;
    for (const std::string& s : items) text += s + "\n";
    return emit(text, out);
}

int cmd_poly(const std::string& mtext, const std::string& family, const std::string& format,
             const std::string& out) {
    const Multiset m = parse_multiset(mtext);
    const Family f = parse_family(family);
    const Poly3 p = compute_polynomial(m, f);
    if (format == "json") {
        nlohmann::json j{{"multiset", m.multiplicities()},
                         {"family", family_name(f)},
                         {"vars", {"x", "y", "z"}},
                         {"terms", poly_to_json(p)}};
        return emit(j.dump() + "\n", out);
    }
    if (format != "text") throw std::invalid_argument("poly supports text|json");
    return emit(poly_to_text(p) + "\n", out);
}

int cmd_gamma(const std::string& mtext, const std::string& family, const std::string& format,
              const std::string& out) {
    const Multiset m = parse_multiset(mtext);
    const Family f = parse_family(family);
    GammaTable table;
    if (f == Family::Trees || f == Family::ITrees) {
        table = gamma_from_trees(m, f);
    } else {
        PartialGammaResult pg = partial_gamma(compute_polynomial(m, f), m.K());
        if (!pg.ok) {
            std::cerr << "error: " << pg.failure << "\n";
            return 1;
        }
        table = std::move(pg.table);
        table.multiplicities = m.multiplicities();
        table.family = family_name(f);
    }
    if (format == "json") return emit(gamma_to_json_text(table) + "\n", out);
    if (format == "csv") return emit(gamma_to_csv(table), out);
    if (format != "text") throw std::invalid_argument("gamma supports text|json|csv");
    return emit(gamma_to_text(table), out);
}

int cmd_orbit(const std::string& mtext, const std::string& format, const std::string& out) {
    const Multiset m = parse_multiset(mtext);
    std::set<std::string> assigned;
    std::string text;
    nlohmann::json arr = nlohmann::json::array();
    for (const Tree& t : enumerate_trees(m)) {
        if (assigned.count(tree_to_text(t))) continue;
        const Orbit o = orbit(t);
        for (const Tree& member : o.members) assigned.insert(tree_to_text(member));
        const Tree& rep = o.representative();
        const TreeStats rs = tree_stats(rep);
        const Poly2 poly = orbit_polynomial(o);
        if (format == "json") {
            arr.push_back({{"members", o.members.size()},
                           {"representative", tree_to_text(rep)},
                           {"cdes", rs.cdes},
                           {"eleaf", rs.eleaf},
                           {"poly", poly_to_text(poly)}});
        } else {
            text += "members=" + std::to_string(o.members.size()) +
                    " rep=" + tree_to_text(rep) + " cdes=" + std::to_string(rs.cdes) +
                    " eleaf=" + std::to_string(rs.eleaf) + " poly=" + poly_to_text(poly) +
                    "\n";
        }
    }
    if (format == "json") {
        nlohmann::json j{{"multiset", m.multiplicities()}, {"orbits", arr}};
        return emit(j.dump() + "\n", out);
    }
    if (format != "text") throw std::invalid_argument("orbit supports text|json");
    return emit(text, out);
}

int cmd_verify(const std::string& suite, const std::string& range, int max_k,
               const std::string& format, const std::string& out) {
    const std::vector<VerifyReport> reports = run_verify(suite, range, max_k);
    std::string text;
    bool ok = true;
    for (const VerifyReport& r : reports) {
        ok = ok && r.pass();
        if (format == "json") {
            text += report_to_json_text(r) + "\n";
        } else if (format == "text") {
            text += report_to_text(r);
            std::cerr << "timing: suite=" << r.suite << " millis=" << r.millis << "\n";
        } else {
            throw std::invalid_argument("verify supports text|json");
        }
    }
    const int rc = emit(text, out);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Stirling/quasi-Stirling multiset permutations, their "
                 "companion ordered labeled trees, and partial gamma expansions"};
    app.require_subcommand(1);

    std::string mtext, kind = "words", family = "quasi", format = "text", out;
    std::string suite = "all", range;
    int max_k = qstirling::default_max_k();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list words or trees of a multiset");
    enumerate->add_option("--multiset", mtext, "multiset, e.g. \"1^2 2^2\" or \"2,2\"")
        ->required();
    enumerate->add_option("--kind", kind, "words|quasi|stirling|trees|itrees");
    enumerate->add_option("--format", format, "text|json");
    enumerate->add_option("--out", out, "write to file instead of stdout");

    CLI::App* poly = app.add_subcommand("poly", "trivariate statistic polynomial of a family");
    poly->add_option("--multiset", mtext, "multiset")->required();
    poly->add_option("--family", family, "quasi|stirling|trees|itrees");
    poly->add_option("--format", format, "text|json");
    poly->add_option("--out", out, "write to file instead of stdout");

    CLI::App* gamma = app.add_subcommand("gamma", "partial gamma table of a family");
    gamma->add_option("--multiset", mtext, "multiset")->required();
    gamma->add_option("--family", family, "quasi|stirling|trees|itrees");
    gamma->add_option("--format", format, "text|json|csv");
    gamma->add_option("--out", out, "write to file instead of stdout");

    CLI::App* orbit = app.add_subcommand("orbit", "orbit decomposition of the tree family");
    orbit->add_option("--multiset", mtext, "multiset")->required();
    orbit->add_option("--format", format, "text|json");
    orbit->add_option("--out", out, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite,
                       "stats|bijection|observation|fs|gamma|mprime|equidist|all");
    verify->add_option("--range", range, "K<=B, a multiset literal, or n<=B (equidist)");
    verify->add_option("--max-K", max_k, "ceiling guard for ranges");
    verify->add_option("--format", format, "text|json");
    verify->add_option("--out", out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(mtext, kind, format, out);
        if (poly->parsed()) return cmd_poly(mtext, family, format, out);
        if (gamma->parsed()) return cmd_gamma(mtext, family, format, out);
        if (orbit->parsed()) return cmd_orbit(mtext, format, out);
        if (verify->parsed()) return cmd_verify(suite, range, max_k, format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
