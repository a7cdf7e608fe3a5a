#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinerlab/codes.hpp"
#include "steinerlab/design_io.hpp"
#include "steinerlab/designs.hpp"
#include "steinerlab/formulas.hpp"
#include "steinerlab/monomial_oracle.hpp"
#include "steinerlab/simplicial.hpp"

using json = nlohmann::ordered_json;
using namespace steinerlab;

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes: 0 ok, 1 usage/runtime error, 2 formula-vs-oracle mismatch
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct ReportContext {
    std::string command;
    json parameters = json::object();
    json results = json::object();
    json mismatches = json::array();
    bool no_timestamp = false;
    std::string format = "json";
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void add_mismatch(const std::string& quantity, const json& formula, const json& oracle) {
        mismatches.push_back({{"quantity", quantity}, {"formula", formula}, {"oracle", oracle}});
    }

    int emit() {
        json rep;
        rep["tool"] = "steinerlab";
        rep["version"] = kVersion;
        rep["command"] = command;
        rep["parameters"] = parameters;
        if (!no_timestamp) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            rep["wall_ms"] = ms;
        }
        rep["results"] = results;
        rep["mismatches"] = mismatches;
        std::cout << rep.dump(2) << "\n";
        return mismatches.empty() ? 0 : kExitMismatch;
    }
};

json rat_to_json(const Rat& r) {
    return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

json hvector_to_json(const HVector& h) { return json(h.entries); }

json betti_to_json(const BettiTable& t) {
    json arr = json::array();
    for (const auto& [key, val] : t.beta)
        arr.push_back({{"i", key.first}, {"j", key.second}, {"beta", val}});
    return arr;
}

void emit_csv_hvector(const HVector& h) {
    std::cout << "degree,h\n";
    for (std::size_t i = 0; i < h.entries.size(); ++i)
        std::cout << i << "," << h.entries[i] << "\n";
}

void emit_csv_betti(const BettiTable& t) {
    std::cout << "i,j,beta\n";
    for (const auto& [key, val] : t.beta)
        std::cout << key.first << "," << key.second << "," << val << "\n";
}

std::vector<Rat> parse_nodes(const std::string& spec, int v) {
    std::vector<Rat> nodes;
    if (spec.empty()) return default_nodes(v);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto slash = item.find('/');
        if (slash == std::string::npos)
            nodes.push_back(Rat(BigInt(item)));
        else
            nodes.push_back(Rat(BigInt(item.substr(0, slash)), BigInt(item.substr(slash + 1))));
    }
    if (int(nodes.size()) != v)
        throw std::invalid_argument("--nodes: expected " + std::to_string(v) + " values");
    return nodes;
}

int run_design(const std::string& kind, const std::vector<int>& args, const std::string& out) {
    SteinerSystem sys;
    if (kind == "fano") {
        sys = fano();
    } else if (kind == "s2413") {
        sys = s_2_4_13();
    } else if (kind == "sts") {
        if (args.size() != 1) throw std::invalid_argument("design sts: need v");
        sys = construct_sts(args[0]);
    } else if (kind == "search") {
        if (args.size() != 3) throw std::invalid_argument("design search: need t n v");
        SearchResult res = search_design(DesignParams(args[0], args[1], args[2]));
        if (res.status == SearchStatus::BudgetExceeded) {
            std::cerr << "search budget exceeded (no conclusion)\n";
            return kExitError;
        }
        if (res.status == SearchStatus::Exhausted) {
            std::cerr << "search exhausted: no such design exists\n";
            return kExitError;
        }
        sys = *res.system;
    } else {
        throw std::invalid_argument("design: unknown subcommand " + kind);
    }
    std::string text = design_to_json(sys);
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw std::invalid_argument("cannot write " + out);
        f << text << "\n";
    }
    return 0;
}

int run_invariants(const SteinerSystem& sys, const std::string& what, const std::string& mode,
                   int m, bool deep, ReportContext& ctx) {
    const DesignParams& p = sys.params;
    BlockFamily comp = complement(sys);
    bool want_formula = mode == "formula" || mode == "both";
    bool want_oracle = mode == "oracle" || mode == "both";

    if (what == "alpha") {
        json f, o;
        if (want_formula) {
            auto dec = alpha_formula(p, m);
            f = dec.alpha;
            ctx.results["formula"] = {{"alpha", dec.alpha}, {"p", dec.p}, {"q", dec.q}};
        }
        if (want_oracle) {
            int cap = int(alpha_formula(p, m).alpha) + p.v;
            int a = alpha_symbolic(CoverIdealSpec{comp}, m, cap);
            o = a;
            ctx.results["oracle"] = a;
        }
        if (want_formula && want_oracle && f != o) ctx.add_mismatch("alpha", f, o);
    } else if (what == "hvector") {
        HVector formula_h, oracle_h;
        if (want_formula) {
            if (m != 1)
                throw std::invalid_argument("hvector: no closed formula for symbolic powers, use --mode oracle");
            formula_h = h_vector_formula(p);
            ctx.results["formula"] = hvector_to_json(formula_h);
        }
        if (want_oracle) {
            if (m >= 3 && !deep)
                throw std::invalid_argument("hvector oracle with m >= 3 is slow; pass --deep");
            if (deep) std::cerr << "enumerating Hilbert function for m=" << m << "...\n";
            oracle_h = h_vector_oracle(comp, m);
            ctx.results["oracle"] = hvector_to_json(oracle_h);
            if (ctx.format == "csv") emit_csv_hvector(oracle_h);
        }
        if (want_formula && want_oracle && !(formula_h == oracle_h))
            ctx.add_mismatch("hvector", hvector_to_json(formula_h), hvector_to_json(oracle_h));
    } else if (what == "betti") {
        BettiTable formula_t, oracle_t;
        if (want_formula) {
            formula_t = betti_table_formula(p);
            ctx.results["formula"] = betti_to_json(formula_t);
        }
        if (want_oracle) {
            oracle_t = hochster_betti(comp, HomologyField::gf(32003));
            ctx.results["oracle"] = betti_to_json(oracle_t);
            if (ctx.format == "csv") emit_csv_betti(oracle_t);
        }
        if (want_formula && want_oracle && !(formula_t == oracle_t))
            ctx.add_mismatch("betti", betti_to_json(formula_t), betti_to_json(oracle_t));
    } else if (what == "waldschmidt") {
        ctx.results["formula"] = rat_to_json(waldschmidt(p));
    } else if (what == "regularity") {
        ctx.results["formula"] = regularity(p);
    } else if (what == "omega") {
        ctx.results["formula"] = omega(p);
    } else if (what == "resurgence") {
        auto rb = resurgence_bounds(p);
        ctx.results["formula"] = {{"lower", rat_to_json(rb.lower)},
                                  {"upper", rat_to_json(rb.upper)},
                                  {"asymptotic_equality", rb.asymptotic_equality}};
    } else {
        throw std::invalid_argument("invariants: unknown --what " + what);
    }
    return ctx.emit();
}

int run_containment(const SteinerSystem& sys, int m, int d, ReportContext& ctx) {
    const DesignParams& p = sys.params;
    BlockFamily comp = complement(sys);
    Rat thr = noncontainment_threshold(p, m);
    bool predicted = Rat(d) > thr;
    ctx.results["threshold"] = rat_to_json(thr);
    ctx.results["predicted_noncontainment"] = predicted;
    int cap = int(alpha_formula(p, m).alpha) + p.v;
    if (predicted) {
        auto w = containment_witness(CoverIdealSpec{comp}, m, d, cap);
        if (w) {
            ctx.results["witness"] = json(w->exponents);
            ctx.results["witness_degree"] = w->degree();
        } else {
            ctx.results["witness"] = nullptr;
            ctx.add_mismatch("containment_witness", "noncontainment predicted",
                             "no witness up to cap " + std::to_string(cap));
        }
    } else {
        auto w = containment_witness(CoverIdealSpec{comp}, m, d, cap);
        ctx.results["witness"] = w ? json(w->exponents) : json(nullptr);
    }
    return ctx.emit();
}

int run_code(const SteinerSystem& sys, const std::string& which, const std::string& nodes_spec,
             bool with_matrix, ReportContext& ctx) {
    const DesignParams& p = sys.params;
    std::vector<Rat> nodes = parse_nodes(nodes_spec, p.v);
    Arrangement A = vandermonde_arrangement(p.v, p.n, nodes);
    if (!general_position_check(A))
        throw std::invalid_argument("supplied nodes give a degenerate arrangement");
    BlockFamily fam;
    if (which == "steiner")
        fam = sys.blocks;
    else if (which == "complement")
        fam = complement(sys);
    else if (which == "star")
        fam = full_family(p.v, p.n);
    else
        throw std::invalid_argument("code: unknown --which " + which);
    auto pts = configuration_points(A, fam);
    CodeParams cp = code_params(pts);
    bool mds = (cp.dimension == p.n + 1) && (cp.distance == cp.length - p.n);
    ctx.results["code"] = {{"length", cp.length},
                           {"dimension", cp.dimension},
                           {"distance", cp.distance},
                           {"mds", mds}};
    // the brute-force distance must match the closed formula
    BigInt expected;
    if (which == "steiner")
        expected = distance_formulas(p).first;
    else if (which == "complement")
        expected = distance_formulas(p).second;
    else
        expected = binomial(p.v, p.n) - binomial(p.v - 1, p.n - 1);
    if (expected != cp.distance)
        ctx.add_mismatch("distance", expected.str(), cp.distance);
    if (with_matrix) {
        GeneratingMatrix A_X = generating_matrix(pts);
        json cols = json::array();
        for (const auto& c : A_X.columns) {
            json col = json::array();
            for (const auto& x : c) col.push_back(x.str());
            cols.push_back(col);
        }
        ctx.results["generating_matrix_columns"] = cols;
    }
    return ctx.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner systems, complement configurations and their invariants"};
    app.require_subcommand(1);

    // design
    auto* cmd_design = app.add_subcommand("design", "construct or search a design");
    std::string design_kind;
    std::vector<int> design_args;
    std::string design_out;
    cmd_design->add_option("kind", design_kind, "fano|s2413|sts|search")->required();
    cmd_design->add_option("args", design_args, "sts: v; search: t n v");
    cmd_design->add_option("-o,--output", design_out, "output path (default stdout)");

    // shared options
    std::string design_path, what, mode = "both", which = "complement", nodes_spec, format = "json";
    int opt_m = 1, opt_d = 1;
    bool deep = false, no_timestamp = false, with_matrix = false;

    auto* cmd_inv = app.add_subcommand("invariants", "formula and oracle invariants");
    cmd_inv->add_option("--design", design_path, "design JSON path")->required();
    cmd_inv->add_option("--what", what, "alpha|hvector|betti|waldschmidt|regularity|omega|resurgence")
        ->required();
    cmd_inv->add_option("--mode", mode, "formula|oracle|both");
    cmd_inv->add_option("-m", opt_m, "symbolic power (alpha, hvector)");
    cmd_inv->add_flag("--deep", deep, "allow long oracle runs");
    cmd_inv->add_option("--format", format, "json|csv");
    cmd_inv->add_flag("--no-timestamp", no_timestamp, "suppress wall time in the report");

    auto* cmd_cont = app.add_subcommand("containment", "symbolic vs ordinary power containment");
    cmd_cont->add_option("--design", design_path, "design JSON path")->required();
    cmd_cont->add_option("-m", opt_m, "symbolic power")->required();
    cmd_cont->add_option("-d", opt_d, "ordinary power")->required();
    cmd_cont->add_flag("--no-timestamp", no_timestamp, "suppress wall time in the report");

    auto* cmd_code = app.add_subcommand("code", "linear code of a configuration");
    cmd_code->add_option("--design", design_path, "design JSON path")->required();
    cmd_code->add_option("--which", which, "steiner|complement|star");
    cmd_code->add_option("--nodes", nodes_spec,
                         "comma-separated arrangement nodes (default: first v primes)");
    cmd_code->add_flag("--matrix", with_matrix, "include the generating matrix");
    cmd_code->add_flag("--no-timestamp", no_timestamp, "suppress wall time in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_design->parsed()) return run_design(design_kind, design_args, design_out);

        SteinerSystem sys = load_design_file(design_path);
        ReportContext ctx;
        ctx.no_timestamp = no_timestamp;
        ctx.format = format;
        ctx.parameters = {{"t", sys.params.t}, {"n", sys.params.n}, {"v", sys.params.v}};
        if (cmd_inv->parsed()) {
            ctx.command = "invariants";
            ctx.parameters["what"] = what;
            ctx.parameters["mode"] = mode;
            ctx.parameters["m"] = opt_m;
            return run_invariants(sys, what, mode, opt_m, deep, ctx);
        }
        if (cmd_cont->parsed()) {
            ctx.command = "containment";
            ctx.parameters["m"] = opt_m;
            ctx.parameters["d"] = opt_d;
            return run_containment(sys, opt_m, opt_d, ctx);
        }
        if (cmd_code->parsed()) {
            ctx.command = "code";
            ctx.parameters["which"] = which;
            return run_code(sys, which, nodes_spec, with_matrix, ctx);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
