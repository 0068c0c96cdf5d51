// hollow-tw: generators, recognizers, cutsets, exact treewidth and the
// heavy-seagull decomposition pipeline on small graphs.
//
// Exit codes: 0 = success / property true, 1 = property false (witness on
// stdout), 2 = error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hollow/central_bag.hpp"
#include "hollow/corpus.hpp"
#include "hollow/cutsets.hpp"
#include "hollow/recognizers.hpp"
#include "hollow/seagull.hpp"
#include "hollow/tw_oracle.hpp"
#include "hollow/weights.hpp"

using json = nlohmann::json;
using namespace hollow;

namespace {

GraphFormat parse_format(const std::string& name) {
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "edgelist") return GraphFormat::EdgeList;
    throw InvalidArgumentError("unknown format: " + name);
}

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph(const std::string& path, const std::string& format) {
    return parse_graph(slurp(path), parse_format(format));
}

WeightFunction read_weights(const std::string& path, int n) {
    if (path.empty()) return WeightFunction::uniform(n);
    return parse_weights(slurp(path), n);
}

json set_to_json(VertexSet s) { return json(s.to_vector()); }

json pair_to_json(const CliquePair& p) {
    return json{{"k1", p.k1.to_vector()}, {"k2", p.k2.to_vector()}};
}

void print_witness(const ConfigurationWitness& w) {
    std::cout << config_kind_name(w.kind) << ":";
    for (int v : w.vertices.to_vector()) std::cout << ' ' << v;
    std::cout << '\n';
}

json f2_report_to_json(const F2Report& rep) {
    json j;
    j["hypotheses"] = json::array();
    for (const auto& h : rep.hypotheses)
        j["hypotheses"].push_back(
            {{"name", h.name},
             {"state", h.state == HypothesisState::Verified ? "verified"
                       : h.state == HypothesisState::Assumed ? "assumed"
                                                             : "violated"},
             {"detail", h.detail}});
    j["seagulls"] = json::array();
    for (const auto& s : rep.seagulls) j["seagulls"].push_back({s.a, s.v, s.u});
    j["breaking_pairs"] = json::array();
    for (const auto& p : rep.breaking_pairs) j["breaking_pairs"].push_back(pair_to_json(p));
    if (rep.bag) {
        json bag;
        bag["beta"] = set_to_json(rep.bag->beta());
        bag["beta_size"] = rep.bag->beta().size();
        bag["delta"] = rep.bag->delta_bound();
        bag["clique_bound"] = rep.bag->clique_bound();
        bag["pairs"] = json::array();
        for (const auto& bp : rep.bag->active_family()) {
            bag["pairs"].push_back({{"pair", pair_to_json(bp.pair)},
                                    {"a_star", set_to_json(bp.a_star)},
                                    {"a_star_size", bp.a_star.size()},
                                    {"marker", bp.marker},
                                    {"anchor", bp.anchor}});
        }
        j["central_bag"] = bag;
    }
    j["beta_seagull_free"] = rep.beta_seagull_free;
    j["max_delta_on_beta"] = rep.max_delta_on_beta;
    j["delta_bound_ok"] = rep.delta_bound_ok;
    j["breaking_runs_both"] = rep.breaking_runs_both;
    j["breaking_agreement"] = rep.breaking_agreement;
    if (rep.tw_g) j["tw_g"] = *rep.tw_g;
    if (rep.tw_beta) j["tw_beta"] = *rep.tw_beta;
    j["tw_consistent"] = rep.tw_consistent;
    return j;
}

void print_f2_report_text(const F2Report& rep, const std::string& indent) {
    for (const auto& h : rep.hypotheses)
        std::cout << indent << "hypothesis " << h.name << ": "
                  << (h.state == HypothesisState::Verified ? "verified"
                      : h.state == HypothesisState::Assumed ? "assumed"
                                                            : "violated")
                  << (h.detail.empty() ? "" : " (" + h.detail + ")") << '\n';
    std::cout << indent << "heavy seagulls: " << rep.seagulls.size() << '\n';
    for (std::size_t i = 0; i < rep.seagulls.size(); ++i) {
        const auto& s = rep.seagulls[i];
        std::cout << indent << "  " << s.a << '-' << s.v << '-' << s.u << " broken by {";
        const auto& p = rep.breaking_pairs[i];
        for (int v : p.k1.to_vector()) std::cout << ' ' << v;
        std::cout << " },{";
        for (int v : p.k2.to_vector()) std::cout << ' ' << v;
        std::cout << " }\n";
    }
    if (rep.bag) {
        std::cout << indent << "beta: " << rep.bag->beta().size() << " vertices";
        if (rep.tw_beta) std::cout << ", tw " << *rep.tw_beta;
        std::cout << "; Delta = " << rep.bag->delta_bound() << '\n';
        for (const auto& bp : rep.bag->active_family()) {
            std::cout << indent << "  marker";
            for (int v : bp.marker) std::cout << ' ' << v;
            std::cout << " (anchor " << bp.anchor << ", |A*| = " << bp.a_star.size()
                      << ")\n";
        }
    }
    std::cout << indent << "beta seagull-free: " << (rep.beta_seagull_free ? "yes" : "no")
              << "; max |delta| on beta: " << rep.max_delta_on_beta << '\n';
    if (rep.tw_g) std::cout << indent << "tw(G) = " << *rep.tw_g << '\n';
}

int run_gen(const std::string& family, int k, int l1, int l2, int l3, int rows, int cols,
            int spacing, int n, int a, int b, std::uint64_t seed, int attempts,
            int min_len, int max_len, const std::string& cls, const std::string& format,
            const std::string& input) {
    Graph g;
    if (family == "wall") g = gen_wall(k);
    else if (family == "wall-subdivision") g = gen_wall_subdivision(k, seed, min_len, max_len);
    else if (family == "theta") g = gen_theta(l1, l2, l3);
    else if (family == "prism") g = gen_prism(l1, l2, l3);
    else if (family == "pyramid") g = gen_pyramid(l1, l2, l3);
    else if (family == "layered-grid") g = gen_layered_grid(rows, cols, spacing);
    else if (family == "cycle") g = gen_cycle(n);
    else if (family == "path") g = gen_path(n);
    else if (family == "complete") g = gen_complete(n);
    else if (family == "complete-bipartite") g = gen_complete_bipartite(a, b);
    else if (family == "line-graph") g = gen_line_graph(read_graph(input, format));
    else if (family == "sample") {
        GraphClass gc = cls == "sparse"        ? GraphClass::Sparse
                        : cls == "very-sparse" ? GraphClass::VerySparse
                                               : GraphClass::F2;
        auto s = random_class_sample(n, gc, seed, attempts);
        if (!s) {
            std::cout << "no sample found within " << attempts << " attempts\n";
            return 1;
        }
        g = *s;
    } else {
        throw InvalidArgumentError("unknown family: " + family);
    }
    std::cout << emit_graph(g, parse_format(format)) << '\n';
    return 0;
}

int run_check(const std::string& kind, int class_bound, std::uint64_t budget_limit,
              const std::string& format, const std::string& input) {
    Graph g = read_graph(input, format);
    SearchBudget budget{budget_limit};
    if (kind == "sparse" || kind == "very-sparse" || kind == "f2" || kind == "class") {
        auto cm = class_membership(g, class_bound, &budget);
        if (kind == "class") {
            std::cout << "sparse: " << cm.sparse << "\nvery_sparse: " << cm.very_sparse
                      << "\nin_F: " << cm.in_F << "\nin_F_t(t=" << class_bound
                      << "): " << cm.in_F_t << "\nin_F_2: " << cm.in_F_2 << '\n';
            return 0;
        }
        bool ok = kind == "sparse" ? cm.sparse : kind == "very-sparse" ? cm.very_sparse : cm.in_F_2;
        if (ok) {
            std::cout << "true\n";
            return 0;
        }
        if (kind == "sparse") {
            auto res = is_sparse(g);
            if (res.hole) {
                std::cout << "false: vertex " << res.vertex << " against hole";
                for (int v : res.hole->vertices) std::cout << ' ' << v;
                std::cout << '\n';
                return 1;
            }
        }
        std::cout << "false\n";
        return 1;
    }
    ConfigKind ck;
    if (kind == "diamond") ck = ConfigKind::Diamond;
    else if (kind == "theta") ck = ConfigKind::Theta;
    else if (kind == "pyramid") ck = ConfigKind::Pyramid;
    else if (kind == "prism") ck = ConfigKind::Prism;
    else if (kind == "t1-wheel") ck = ConfigKind::T1Wheel;
    else if (kind == "t2-wheel") ck = ConfigKind::T2Wheel;
    else if (kind == "wheel") ck = ConfigKind::Wheel;
    else throw InvalidArgumentError("unknown kind: " + kind);
    auto w = find_configuration(g, ck, &budget);
    if (w) {
        print_witness(*w);
        return 0;
    }
    std::cout << "none\n";
    return 1;
}

int run_cutset(const std::string& type, const std::string& weights_path, int clique_bound,
               const std::string& format, const std::string& input) {
    Graph g = read_graph(input, format);
    if (type == "clique") {
        auto s = find_clique_cutset(g);
        if (!s) {
            std::cout << "none\n";
            return 1;
        }
        std::cout << "C:";
        for (int v : s->c.to_vector()) std::cout << ' ' << v;
        std::cout << "\nA:";
        for (int v : s->a.to_vector()) std::cout << ' ' << v;
        std::cout << "\nB:";
        for (int v : s->b.to_vector()) std::cout << ' ' << v;
        std::cout << '\n';
        return 0;
    }
    if (type == "star") {
        auto s = find_star_cutset(g);
        if (!s) {
            std::cout << "none\n";
            return 1;
        }
        std::cout << "center " << s->center << "\nC:";
        for (int v : s->sep.c.to_vector()) std::cout << ' ' << v;
        std::cout << '\n';
        return 0;
    }
    if (type == "active-pairs") {
        auto w = read_weights(weights_path, g.n());
        auto pairs = active_pairs(g, w, clique_bound);
        for (const auto& p : pairs) {
            std::cout << "{";
            for (int v : p.k1.to_vector()) std::cout << ' ' << v;
            std::cout << " },{";
            for (int v : p.k2.to_vector()) std::cout << ' ' << v;
            std::cout << " }\n";
        }
        if (pairs.empty()) {
            std::cout << "none\n";
            return 1;
        }
        return 0;
    }
    throw InvalidArgumentError("unknown cutset type: " + type);
}

int run_tw(bool with_decomposition, int cap, const std::string& format,
           const std::string& input) {
    Graph g = read_graph(input, format);
    const int width = treewidth_exact(g, cap);
    std::cout << "treewidth " << width << '\n';
    if (with_decomposition) {
        TreeDecomposition td = tree_decomposition(g, cap);
        for (std::size_t i = 0; i < td.bags.size(); ++i) {
            std::cout << i << ':';
            for (int v : td.bags[i].to_vector()) std::cout << ' ' << v;
            std::cout << '\n';
        }
        std::cout << "tree edges:";
        for (auto [x, y] : td.tree_edges) std::cout << ' ' << x << '-' << y;
        std::cout << '\n';
    }
    return 0;
}

int run_decompose(int class_bound, const std::string& weights_path, std::uint64_t budget,
                  const std::string& report, const std::string& format,
                  const std::string& input) {
    Graph g = read_graph(input, format);
    auto w = read_weights(weights_path, g.n());
    PipelineOptions options;
    options.check_budget = budget;
    options.search_budget = budget;
    DecomposeReport rep = decompose(g, class_bound, w, options);
    if (report == "json") {
        json j;
        j["input_class"] = {{"sparse", rep.input_class.sparse},
                            {"very_sparse", rep.input_class.very_sparse},
                            {"in_F_t", rep.input_class.in_F_t},
                            {"in_F_2", rep.input_class.in_F_2}};
        if (rep.tw_g) j["tw_g"] = *rep.tw_g;
        j["clique_cut_tw_consistent"] = rep.clique_cut_tw_consistent;
        j["blocks"] = json::array();
        for (const auto& b : rep.blocks) {
            json jb;
            jb["vertices"] = set_to_json(b.block);
            jb["kind"] = b.kind == BlockKind::Complete   ? "complete"
                         : b.kind == BlockKind::CliqueCut ? "clique-cut"
                                                          : "f2";
            if (b.kind == BlockKind::CliqueCut) {
                jb["cutset"] = set_to_json(b.cutset);
                jb["star_center"] = b.star_center;
            }
            if (b.tw_block) jb["tw"] = *b.tw_block;
            if (b.f2) jb["f2"] = f2_report_to_json(*b.f2);
            if (!b.f2_violation.empty()) jb["f2_hypothesis_violated"] = b.f2_violation;
            j["blocks"].push_back(jb);
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "class: sparse=" << rep.input_class.sparse
              << " very_sparse=" << rep.input_class.very_sparse
              << " F_t=" << rep.input_class.in_F_t << " F_2=" << rep.input_class.in_F_2
              << '\n';
    if (rep.tw_g) std::cout << "tw(G) = " << *rep.tw_g << '\n';
    for (const auto& b : rep.blocks) {
        std::cout << "block {";
        for (int v : b.block.to_vector()) std::cout << ' ' << v;
        std::cout << " } ";
        switch (b.kind) {
            case BlockKind::Complete: std::cout << "complete"; break;
            case BlockKind::CliqueCut: {
                std::cout << "clique cutset {";
                for (int v : b.cutset.to_vector()) std::cout << ' ' << v;
                std::cout << " } via star center " << b.star_center;
                break;
            }
            case BlockKind::F2Block: std::cout << "F_2 pipeline"; break;
        }
        if (b.tw_block) std::cout << "  [tw " << *b.tw_block << "]";
        std::cout << '\n';
        if (b.f2) print_f2_report_text(*b.f2, "  ");
        if (!b.f2_violation.empty())
            std::cout << "  hypothesis violated: " << b.f2_violation << '\n';
    }
    return 0;
}

int run_verify(const std::string& property, int samples, std::uint64_t seed,
               const std::string& format, const std::string& input) {
    Graph g = read_graph(input, format);
    std::mt19937_64 rng(seed);
    if (property == "tw-to-separator") {
        for (int i = 0; i < samples; ++i) {
            auto w = random_weights(g.n(), rng);
            if (!check_tw_to_separator(g, w, Rational(1, 2))) {
                std::cout << "violated on sample " << i << '\n';
                return 1;
            }
        }
        std::cout << "holds on " << samples << " samples\n";
        return 0;
    }
    if (property == "bs-to-tw") {
        const int k = treewidth_exact(g) + 1;
        auto rep = check_bs_to_tw(g, k, Rational(1, 2), samples, seed);
        std::cout << "samples " << rep.samples_total << ", with separator "
                  << rep.samples_with_separator << ", tw " << rep.treewidth << '\n';
        if (rep.violation) {
            std::cout << "violated\n";
            return 1;
        }
        std::cout << "no violation\n";
        return 0;
    }
    if (property == "star-to-cliques") {
        auto star = find_star_cutset(g);
        if (!star) {
            std::cout << "no star cutset\n";
            return 1;
        }
        VertexSet d1 = components(g, star->sep.a)[0];
        VertexSet d2 = components(g, star->sep.b)[0];
        auto cliques = star_to_cliques(g, star->sep, {star->center}, d1, d2);
        VertexSet cut;
        for (const auto& c : cliques) cut |= c;
        for (const VertexSet& comp : components(g, g.vertices() - cut))
            if (comp.intersects(d1) && comp.intersects(d2)) {
                std::cout << "violated: D1 and D2 still connected\n";
                return 1;
            }
        std::cout << "cliques separate D1 from D2\n";
        return 0;
    }
    if (property == "round-trip") {
        std::string s6 = emit_graph(g, GraphFormat::Graph6);
        bool ok = emit_graph(parse_graph(s6, GraphFormat::Graph6), GraphFormat::Graph6) == s6;
        std::cout << (ok ? "round trip exact\n" : "round trip failed\n");
        return ok ? 0 : 1;
    }
    throw InvalidArgumentError("unknown property: " + property);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"central-bag decomposition toolkit for sparse graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand name

    std::string format = "graph6";
    app.add_option("--format", format, "graph I/O format: graph6 | edgelist")
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string family, cls = "f2", gen_input;
    int k = 3, l1 = 2, l2 = 2, l3 = 2, rows = 4, cols = 12, spacing = 3, n = 8, a = 2, b = 3;
    int attempts = 200, min_len = 1, max_len = 3;
    std::uint64_t seed = 1;
    gen->add_option("--family", family,
                    "wall | wall-subdivision | theta | prism | pyramid | layered-grid | "
                    "cycle | path | complete | complete-bipartite | line-graph | sample")
        ->required();
    gen->add_option("--k", k, "wall size");
    gen->add_option("--l1", l1);
    gen->add_option("--l2", l2);
    gen->add_option("--l3", l3);
    gen->add_option("--rows", rows);
    gen->add_option("--cols", cols);
    gen->add_option("--spacing", spacing);
    gen->add_option("--n", n);
    gen->add_option("--a", a);
    gen->add_option("--b", b);
    gen->add_option("--seed", seed);
    gen->add_option("--attempts", attempts);
    gen->add_option("--min-len", min_len);
    gen->add_option("--max-len", max_len);
    gen->add_option("--class", cls, "sample class: sparse | very-sparse | f2");
    gen->add_option("input", gen_input, "input graph for line-graph");

    // check
    auto* check = app.add_subcommand("check", "class membership and configuration search");
    std::string kind, check_input;
    int class_bound = 2;
    std::uint64_t budget = 10'000'000;
    check->add_option("--kind", kind,
                      "sparse | very-sparse | f2 | class | diamond | theta | pyramid | "
                      "prism | t1-wheel | t2-wheel | wheel")
        ->required();
    check->add_option("--class-bound", class_bound);
    check->add_option("--budget", budget);
    check->add_option("input", check_input);

    // cutset
    auto* cutset = app.add_subcommand("cutset", "clique/star cutsets and active pairs");
    std::string cutset_type = "clique", weights_path, cutset_input;
    int clique_bound = 2;
    cutset->add_option("--type", cutset_type, "clique | star | active-pairs");
    cutset->add_option("--weights", weights_path, "weight file (default uniform)");
    cutset->add_option("--clique-bound", clique_bound);
    cutset->add_option("input", cutset_input);

    // tw
    auto* tw = app.add_subcommand("tw", "exact treewidth oracle");
    bool with_decomposition = false;
    int cap = kDefaultTwCap;
    std::string tw_input;
    tw->add_flag("--decomposition", with_decomposition, "print the tree decomposition");
    tw->add_option("--cap", cap, "size cap for the oracle");
    tw->add_option("input", tw_input);

    // decompose
    auto* dec = app.add_subcommand("decompose", "heavy-seagull decomposition pipeline");
    int dec_bound = 2;
    std::string dec_weights, dec_report = "text", dec_input;
    std::uint64_t dec_budget = 10'000'000;
    dec->add_option("--class-bound", dec_bound, "t for F_t membership")->capture_default_str();
    dec->add_option("--weights", dec_weights, "weight file (default uniform)");
    dec->add_option("--budget", dec_budget);
    dec->add_option("--report", dec_report, "text | json");
    dec->add_option("input", dec_input);

    // verify
    auto* verify = app.add_subcommand("verify", "checked properties on an input graph");
    std::string property, verify_input;
    int samples = 20;
    std::uint64_t verify_seed = 1;
    verify->add_option("--property", property,
                       "tw-to-separator | bs-to-tw | star-to-cliques | round-trip")
        ->required();
    verify->add_option("--samples", samples);
    verify->add_option("--seed", verify_seed);
    verify->add_option("input", verify_input);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(family, k, l1, l2, l3, rows, cols, spacing, n, a, b, seed,
                           attempts, min_len, max_len, cls, format, gen_input);
        if (check->parsed()) return run_check(kind, class_bound, budget, format, check_input);
        if (cutset->parsed())
            return run_cutset(cutset_type, weights_path, clique_bound, format, cutset_input);
        if (tw->parsed()) return run_tw(with_decomposition, cap, format, tw_input);
        if (dec->parsed())
            return run_decompose(dec_bound, dec_weights, dec_budget, dec_report, format,
                                 dec_input);
        if (verify->parsed())
            return run_verify(property, samples, verify_seed, format, verify_input);
    } catch (const HypothesisViolatedError& e) {
        std::cerr << "hypothesis violated [" << e.stage << "]: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error at byte " << e.offset << ": " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
