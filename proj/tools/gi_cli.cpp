#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ginertia/classifier.hpp"
#include "ginertia/enumerator.hpp"
#include "ginertia/graph.hpp"
#include "ginertia/graph6.hpp"
#include "ginertia/inertia.hpp"
#include "ginertia/jacobi.hpp"
#include "ginertia/transforms.hpp"
#include "ginertia/verification.hpp"

namespace {

using namespace ginertia;

// graphs are accepted either as graph6 text or as a composition like
// "B5(2,2;2,2;1)"
Graph parse_graph(const std::string& text) {
    if (text.find('(') != std::string::npos) return realize_bk(BkSpec::parse(text));
    return graph6_decode(text);
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

nlohmann::json spectrum_json(const Graph& g) {
    nlohmann::json values = nlohmann::json::array();
    for (double v : eigenvalues_float(g).values) values.push_back(round6(v));
    return {{"order", g.order()}, {"eigenvalues", values}};
}

int run_verify(const std::string& what, int order, int trials, std::uint64_t seed, int max_order) {
    std::vector<std::pair<std::string, CheckResult>> results;
    auto add = [&](std::string name, CheckResult r) {
        results.emplace_back(std::move(name), std::move(r));
    };
    if (what == "table1") {
        add(what, check_table1());
    } else if (what == "appendix-hist") {
        add(what, check_appendix_histogram());
    } else if (what == "b0-empty-14") {
        add(what, check_b0_empty_14());
    } else if (what == "bminus-empty-14") {
        add(what, check_bminus_empty_14());
    } else if (what == "theorem-disconnected") {
        add(what, check_theorem_disconnected_sweep(order));
    } else if (what == "theorem-main") {
        add(what, check_theorem_main_sweep(order));
    } else if (what == "transforms") {
        add(what, check_transform_trials(trials, seed));
    } else if (what == "oracle") {
        add("oracle exhaustive", check_oracle_exhaustive(max_order));
        add("oracle census", check_oracle_bstar());
    } else if (what == "spectra") {
        add(what, check_spectra_examples());
    } else if (what == "gn-chain") {
        add(what, check_gn_chain());
    } else if (what == "bstar-structure") {
        add(what, check_bstar_structure());
    } else if (what == "bminus-patterns") {
        add(what, check_bminus_patterns_n13());
    } else {
        std::cerr << "unknown verify target '" << what << "'\n";
        return 2;
    }
    bool ok = true;
    for (const auto& [name, r] : results) {
        std::printf("[%s] %s: %s\n", r.ok ? "PASS" : "FAIL", name.c_str(), r.detail.c_str());
        ok &= r.ok;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact adjacency-inertia toolkit for small graphs"};
    app.require_subcommand(1);

    std::string arg_graph, arg_class, arg_format = "csv", arg_what;
    bool flag_float = false;
    int arg_k = 0, arg_maxn = 13, arg_order = 6, arg_trials = 1000, arg_max_order = 6;
    std::uint64_t arg_seed = 1;
    std::vector<int> arg_ints;
    int arg_r = 1;
    std::vector<int> arg_attach;

    auto* c_inertia = app.add_subcommand("inertia", "print (p, n_neg, eta) of a graph");
    c_inertia->add_option("graph", arg_graph, "graph6 or B-composition")->required();
    c_inertia->add_flag("--float", flag_float, "also print the float spectrum");

    auto* c_spectrum = app.add_subcommand("spectrum", "print the float spectrum as JSON");
    c_spectrum->add_option("graph", arg_graph)->required();

    auto* c_construct = app.add_subcommand("construct", "build a graph, print graph6");
    c_construct->require_subcommand(1);
    auto* cc_gn = c_construct->add_subcommand("gn", "two-clique chain graph G_n");
    cc_gn->add_option("n", arg_order)->required();
    auto* cc_bk = c_construct->add_subcommand("bk", "clique expansion B_k(n_1..n_k)");
    cc_bk->add_option("k", arg_k)->required();
    cc_bk->add_option("parts", arg_ints, "k positive part sizes")->required()->expected(-1);
    auto* cc_mp = c_construct->add_subcommand("multipartite", "complete multipartite graph");
    cc_mp->add_option("parts", arg_ints)->required()->expected(-1);
    auto* cc_kj = c_construct->add_subcommand("kjoin", "star joined into a graph");
    cc_kj->add_option("r", arg_r, "number of star leaves")->required();
    cc_kj->add_option("graph", arg_graph, "inner graph (graph6 or composition)")->required();
    cc_kj->add_option("attach", arg_attach, "inner vertices joined to the center")
        ->required()
        ->expected(-1);

    auto* c_classify = app.add_subcommand("classify", "full class report as JSON");
    c_classify->add_option("graph", arg_graph)->required();

    auto* c_transform = app.add_subcommand("transform", "apply a congruent vertex addition");
    c_transform->require_subcommand(1);
    auto* ct1 = c_transform->add_subcommand("add-1", "duplicate the neighborhood of v");
    ct1->add_option("graph", arg_graph)->required();
    ct1->add_option("vertices", arg_ints, "v")->required()->expected(1);
    auto* ct2 = c_transform->add_subcommand("add-2", "join N(v) and N(w)");
    ct2->add_option("graph", arg_graph)->required();
    ct2->add_option("vertices", arg_ints, "v w")->required()->expected(2);
    auto* ct3 = c_transform->add_subcommand("add-3", "close a congruent quadrangle over (v,x,y)");
    ct3->add_option("graph", arg_graph)->required();
    ct3->add_option("vertices", arg_ints, "v x y")->required()->expected(3);

    auto* c_enum = app.add_subcommand("enumerate", "census of clique expansions");
    c_enum->add_option("--k", arg_k, "single k (default: all of 4..13)");
    c_enum->add_option("--max-n", arg_maxn, "largest order (default 13)");
    c_enum->add_option("--class", arg_class, "filter: B+, B00, B0, B-");
    c_enum->add_option("--format", arg_format, "csv, json or table1")
        ->check(CLI::IsMember({"csv", "json", "table1"}));

    auto* c_verify = app.add_subcommand("verify", "run a built-in verification");
    c_verify
        ->add_option("what", arg_what,
                     "table1 | appendix-hist | b0-empty-14 | bminus-empty-14 |\n"
                     "theorem-disconnected | theorem-main | transforms | oracle |\n"
                     "spectra | gn-chain | bstar-structure | bminus-patterns")
        ->required();
    c_verify->add_option("--order", arg_order, "sweep order (theorem checks, default 6)");
    c_verify->add_option("--trials", arg_trials, "random trials per kind (default 1000)");
    c_verify->add_option("--seed", arg_seed, "random seed (default 1)");
    c_verify->add_option("--max-order", arg_max_order, "largest exhaustive order (oracle)");

    auto* c_export = app.add_subcommand("export", "export a graph");
    c_export->require_subcommand(1);
    auto* ce_dot = c_export->add_subcommand("dot", "DOT text");
    ce_dot->add_option("graph", arg_graph)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*c_inertia) {
            const Graph g = parse_graph(arg_graph);
            const Inertia in = inertia_exact(g);
            std::printf("p=%d n=%d eta=%d\n", in.p, in.n_neg, in.eta);
            if (flag_float) std::printf("%s\n", spectrum_json(g).dump().c_str());
            return 0;
        }
        if (*c_spectrum) {
            std::printf("%s\n", spectrum_json(parse_graph(arg_graph)).dump().c_str());
            return 0;
        }
        if (*c_construct) {
            Graph g;
            if (*cc_gn) g = gn(arg_order);
            if (*cc_bk) g = realize_bk(BkSpec{arg_k, arg_ints});
            if (*cc_mp) g = complete_multipartite(arg_ints);
            if (*cc_kj) g = k_joining(arg_r, parse_graph(arg_graph), arg_attach);
            std::printf("%s\n", graph6_encode(g).c_str());
            return 0;
        }
        if (*c_classify) {
            std::printf("%s\n", classify_full(parse_graph(arg_graph)).to_json().c_str());
            return 0;
        }
        if (*c_transform) {
            const Graph g = parse_graph(arg_graph);
            std::pair<Graph, TransformCertificate> res;
            if (*ct1) res = add_type1(g, arg_ints[0]);
            if (*ct2) res = add_type2(g, arg_ints[0], arg_ints[1]);
            if (*ct3) res = add_type3(g, arg_ints[0], arg_ints[1], arg_ints[2]);
            std::printf("%s\n%s\n", graph6_encode(res.first).c_str(),
                        res.second.to_json().c_str());
            return 0;
        }
        if (*c_enum) {
            std::vector<CensusRow> rows;
            const int klo = arg_k ? arg_k : 4, khi = arg_k ? arg_k : 13;
            for (int k = klo; k <= khi; ++k)
                for (auto& r : census(k, arg_maxn)) rows.push_back(std::move(r));
            if (!arg_class.empty()) {
                const auto cls = bk_class_from_string(arg_class);
                if (!cls) {
                    std::cerr << "unknown class '" << arg_class << "'\n";
                    return 2;
                }
                std::erase_if(rows, [&](const CensusRow& r) { return r.cls != *cls; });
            }
            if (arg_format == "csv")
                std::fputs(census_csv(rows).c_str(), stdout);
            else if (arg_format == "json")
                std::printf("%s\n", census_json(rows).c_str());
            else
                std::fputs(census_table(rows).c_str(), stdout);
            return 0;
        }
        if (*c_verify) return run_verify(arg_what, arg_order, arg_trials, arg_seed, arg_max_order);
        if (*c_export) {
            std::fputs(to_dot(parse_graph(arg_graph)).c_str(), stdout);
            return 0;
        }
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
