#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sgcc/report_json.hpp"
#include "sgcc/sgcc.hpp"

namespace {

using namespace sgcc;

struct Flags {
    bool json = false;
    bool even_only = false;
    double budget = 0;  // seconds; 0 = unlimited
    std::uint64_t seed = 1;
    int max_n = 26;
    std::string out;
};

SignedGraph read_graph(const std::string& path) {
    if (path == "-") return parse_signed_graph(std::cin);
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::invalid_input, "cannot open " + path);
    return parse_signed_graph(in);
}

std::vector<ParsedMember> read_cover(const SignedGraph& g, const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::invalid_input, "cannot open " + path);
    return parse_members(g, in);
}

Budget budget_of(const Flags& f) { return f.budget > 0 ? Budget::seconds(f.budget) : Budget{}; }

// Output goes to a buffer and is written in one piece at the end.
void emit(const Flags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    const std::string tmp = f.out + ".tmp";
    {
        std::ofstream o(tmp, std::ios::trunc);
        require(static_cast<bool>(o), ErrorKind::invalid_input, "cannot write " + f.out);
        o << text;
    }
    std::filesystem::rename(tmp, f.out);
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void write_report_text(std::ostream& o, const CoverReport& r) {
    o << "valid=" << yn(r.valid) << " length=" << r.length << " m=" << r.m << " bound_23_9=" << yn(r.bound_23_9)
      << " bound_26_9=" << yn(r.bound_26_9) << " branch=" << r.branch << " candidate=" << r.candidate;
    if (r.oracle_gap) o << " oracle_gap=" << *r.oracle_gap;
    o << '\n';
    if (!r.uncovered.empty()) {
        o << "uncovered:";
        for (EdgeId e : r.uncovered) o << ' ' << e;
        o << '\n';
    }
    for (const auto& p : r.invalid_members) o << "invalid member: " << p << '\n';
}

int run_analyze(const std::string& path, const Flags& f) {
    const SignedGraph g = read_graph(path);
    NegativenessOptions opt;
    opt.max_vertices = f.max_n;
    const auto s = negativeness(g, opt);
    const auto gs = signed_girth(g);
    std::ostringstream o;
    if (f.json) {
        nlohmann::ordered_json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["cubic"] = is_cubic(g);
        j["two_edge_connected"] = s.two_edge_connected;
        if (s.exact()) {
            j["eps"] = *s.negativeness;
            j["flow_admissible"] = s.flow_admissible;
        } else {
            j["eps"] = nullptr;
            j["flow_admissible"] = nullptr;
        }
        if (gs) j["gs"] = *gs;
        else j["gs"] = "inf";
        o << j.dump() << '\n';
    } else {
        o << "n=" << g.vertex_count() << " m=" << g.edge_count() << " cubic=" << yn(is_cubic(g))
          << " 2ec=" << yn(s.two_edge_connected) << " eps=" << (s.exact() ? std::to_string(*s.negativeness) : "?")
          << " flow-admissible=" << (s.exact() ? yn(s.flow_admissible) : "?")
          << " gs=" << (gs ? std::to_string(*gs) : "inf") << '\n';
    }
    emit(f, o.str());
    return 0;
}

int run_cover(const std::string& path, const Flags& f) {
    const SignedGraph g = read_graph(path);
    PipelineOptions opt;
    opt.negativeness.max_vertices = f.max_n;
    opt.cycle_count.seed = f.seed;
    if (f.budget > 0) opt.oracle_seconds = f.budget;
    CoverResult r = f.even_only ? cover_even(g, opt) : cover_main(g, opt);
    if (f.budget > 0) add_oracle_gap(r.report, g, budget_of(f));
    std::ostringstream o;
    o << "# seed " << f.seed << '\n';
    for (const auto& t : r.report.trace) o << "# " << t << '\n';
    write_family(o, r.family);
    if (f.json) o << to_json(r.report).dump() << '\n';
    else {
        o << "# ";
        write_report_text(o, r.report);
    }
    emit(f, o.str());
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& cover_path, const Flags& f) {
    const SignedGraph g = read_graph(graph_path);
    const auto members = read_cover(g, cover_path);
    CoverReport r = verify_cover(g, members);
    if (f.budget > 0) add_oracle_gap(r, g, budget_of(f));
    std::ostringstream o;
    o << "# seed " << f.seed << '\n';
    if (f.json) o << to_json(r).dump() << '\n';
    else write_report_text(o, r);
    emit(f, o.str());
    return r.valid ? 0 : static_cast<int>(ErrorKind::invalid_input);
}

int run_oracle_scc(const std::string& path, const Flags& f) {
    const SignedGraph g = read_graph(path);
    const auto r = exact_scc(g, budget_of(f));
    std::ostringstream o;
    o << "# seed " << f.seed << '\n';
    write_family(o, r.witness);
    o << to_json(r).dump() << '\n';
    emit(f, o.str());
    return r.status == SearchStatus::exact ? 0 : static_cast<int>(ErrorKind::budget_exceeded);
}

int run_oracle_cdc(const std::string& path, const Flags& f) {
    const SignedGraph g = read_graph(path);
    const auto r = cdc_exists(g, budget_of(f));
    std::ostringstream o;
    o << "# seed " << f.seed << '\n';
    o << "# cdc=" << to_string(r.exists) << '\n';
    write_family(o, r.witness);
    o << to_json(r).dump() << '\n';
    emit(f, o.str());
    return r.exists == Tristate::unknown ? static_cast<int>(ErrorKind::budget_exceeded) : 0;
}

int run_gen_no_cdc(const std::string& path, const Flags& f) {
    const auto c = gen_no_cdc(read_graph(path));
    std::ostringstream o;
    write_signed_graph(o, c.graph, c.comments);
    emit(f, o.str());
    return 0;
}

int run_gen_random(int n, int negatives, const Flags& f) {
    const auto g = gen_random(n, negatives, f.seed);
    std::ostringstream o;
    write_signed_graph(o, g,
                       {"random cubic graph n=" + std::to_string(n) + " negatives=" + std::to_string(negatives) +
                        " seed=" + std::to_string(f.seed)});
    emit(f, o.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Short circuit covers of signed graphs"};
    app.require_subcommand(1);
    Flags f;
    std::string graph;
    std::string cover;
    int n = 0;
    int negatives = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", f.json, "Emit JSON");
        sub->add_option("--budget", f.budget, "Time budget in seconds for exact searches (0 = unlimited)");
        sub->add_option("--seed", f.seed, "Random seed");
        sub->add_option("--max-n", f.max_n, "Largest vertex count for exact negativeness");
        sub->add_option("--out", f.out, "Write output to this file");
    };
    auto* analyze = app.add_subcommand("analyze", "Print basic invariants of a signed graph");
    analyze->add_option("graph", graph, "Graph file ('-' for stdin)")->required();
    common(analyze);
    auto* cov = app.add_subcommand("cover", "Construct a short circuit cover");
    cov->add_option("graph", graph, "Graph file ('-' for stdin)")->required();
    cov->add_flag("--even-only", f.even_only, "Use the even-negativeness pipeline only");
    common(cov);
    auto* verify = app.add_subcommand("verify", "Check a circuit cover against a graph");
    verify->add_option("graph", graph, "Graph file")->required();
    verify->add_option("cover", cover, "Cover file")->required();
    common(verify);
    auto* oscc = app.add_subcommand("oracle-scc", "Exact shortest circuit cover");
    oscc->add_option("graph", graph, "Graph file ('-' for stdin)")->required();
    common(oscc);
    auto* ocdc = app.add_subcommand("oracle-cdc", "Decide whether a circuit double cover exists");
    ocdc->add_option("graph", graph, "Graph file ('-' for stdin)")->required();
    common(ocdc);
    auto* nocdc = app.add_subcommand("gen-no-cdc", "Sign a cubic graph with a 2-edge-cut so it has no circuit double cover");
    nocdc->add_option("graph", graph, "Graph file ('-' for stdin)")->required();
    common(nocdc);
    auto* rnd = app.add_subcommand("gen-random", "Random 2-edge-connected cubic signed graph");
    rnd->add_option("n", n, "Vertex count (even, at least 4)")->required();
    rnd->add_option("negatives", negatives, "Number of negative edges")->required();
    common(rnd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : static_cast<int>(ErrorKind::invalid_input);
    }

    try {
        if (*analyze) return run_analyze(graph, f);
        if (*cov) return run_cover(graph, f);
        if (*verify) return run_verify(graph, cover, f);
        if (*oscc) return run_oracle_scc(graph, f);
        if (*ocdc) return run_oracle_cdc(graph, f);
        if (*nocdc) return run_gen_no_cdc(graph, f);
        if (*rnd) return run_gen_random(n, negatives, f);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return static_cast<int>(ErrorKind::bound_violation);
    }
    return 0;
}
