// Command-line surface: compute / verify / formula / construct / crosscheck.
// JSON results on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 internal error or failed verification, 2 input error,
// 3 budget exhausted, 4 crosscheck disagreement.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sge/constructions.hpp"
#include "sge/families.hpp"
#include "sge/formulas.hpp"
#include "sge/io.hpp"
#include "sge/solver.hpp"
#include "sge/verifier.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagree = 4;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        const auto ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cerr << "timing: " << ms << " ms\n";
    }
};

void print_report(const json& j) { std::cout << j.dump(2) << "\n"; }

uint64_t budget_from(const CLI::App& cmd, const CLI::Option* flag, uint64_t flag_value) {
    if (flag->count() > 0) return flag_value;
    if (const char* env = std::getenv("SGE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw sge::ParseError(std::string("invalid SGE_BUDGET value \"") + env + "\"");
        }
    }
    (void)cmd;
    return sge::kDefaultBudget;
}

json edge_pairs(const sge::Graph& g, const std::vector<int>& ids) {
    json out = json::array();
    for (int id : ids) {
        const auto [u, v] = g.edge(id);
        out.push_back({u, v});
    }
    return out;
}

json result_json(const sge::SgeResult& r) {
    json j;
    j["status"] = "ok";
    j["value"] = r.value;
    j["optimal_set"] = r.optimal_set;
    j["witness"] = sge::witness_to_json(r.witness);
    j["forced"] = r.forced;
    j["lower_bound_used"] = r.lower_bound_used;
    j["expansions"] = r.expansions;
    return j;
}

int run_compute(const std::string& path, bool oracle, int oracle_max, uint64_t budget,
                int threads) {
    const sge::Graph g = sge::read_graph_file(path);
    json report;
    report["command"] = "compute";
    report["fingerprint"] = sge::fingerprint(g);
    if (oracle) {
        const sge::SgeResult r = sge::sge_oracle(g, oracle_max);
        report["budget"] = {{"limit", nullptr}, {"used", r.expansions}};
        report["result"] = result_json(r);
        print_report(report);
        return kExitOk;
    }
    const sge::SgeOutcome out = sge::sge_exact(g, budget, threads);
    report["budget"] = {{"limit", budget}, {"used", out.expansions}};
    if (!out.result) {
        report["result"] = {{"status", "unknown"},
                            {"best_lower", out.best_lower},
                            {"best_upper", out.best_upper},
                            {"expansions", out.expansions}};
        print_report(report);
        std::cerr << "budget exhausted: sg_e in [" << out.best_lower << ", " << out.best_upper
                  << "]\n";
        return kExitBudget;
    }
    report["result"] = result_json(*out.result);
    print_report(report);
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& witness_path) {
    const sge::Graph g = sge::read_graph_file(graph_path);
    const sge::Witness w = sge::read_witness_file(witness_path);
    const sge::VerifyReport r = sge::validate_witness(g, w);
    json report;
    report["command"] = "verify";
    report["fingerprint"] = sge::fingerprint(g);
    report["result"] = {{"valid", r.valid},
                        {"covered", edge_pairs(g, r.covered)},
                        {"uncovered", edge_pairs(g, r.uncovered)},
                        {"violations", r.violations}};
    print_report(report);
    if (!r.valid) {
        std::cerr << "witness invalid: " << r.uncovered.size() << " uncovered edge(s), "
                  << r.violations.size() << " violation(s)\n";
        return kExitInternal;
    }
    return kExitOk;
}

int formula_value(const std::string& family, const std::vector<int>& params) {
    if (family == "bipartite") {
        if (params.size() != 2) throw sge::ParseError("bipartite takes two part sizes");
        return sge::sge_complete_bipartite(params[0], params[1]);
    }
    if (family == "multipartite") {
        return sge::sge_complete_multipartite(sge::MultipartiteSpec::of(params));
    }
    if (family == "prism") {
        if (params.size() != 2) throw sge::ParseError("prism takes path and clique orders");
        return sge::sge_path_times_complete(sge::PrismSpec::of(params[0], params[1]));
    }
    if (family == "complete") {
        if (params.size() != 1) throw sge::ParseError("complete takes one order");
        return sge::sge_complete(params[0]);
    }
    throw sge::ParseError("unknown family \"" + family + "\"");
}

sge::Construction build_construction(const std::string& family, const std::vector<int>& params) {
    if (family == "bipartite") {
        if (params.size() != 2) throw sge::ParseError("bipartite takes two part sizes");
        return sge::construct_bipartite(params[0], params[1]);
    }
    if (family == "multipartite") {
        return sge::construct_multipartite(sge::MultipartiteSpec::of(params));
    }
    if (family == "prism") {
        if (params.size() != 2) throw sge::ParseError("prism takes path and clique orders");
        return sge::construct_prism(params[0], params[1]);
    }
    throw sge::ParseError("unknown family \"" + family + "\"");
}

int run_formula(const std::string& family, const std::vector<int>& params) {
    json report;
    report["command"] = "formula";
    report["family"] = family;
    report["params"] = params;
    report["value"] = formula_value(family, params);
    print_report(report);
    return kExitOk;
}

int run_construct(const std::string& family, const std::vector<int>& params,
                  const std::string& emit_graph, const std::string& emit_witness) {
    const sge::Construction c = build_construction(family, params);
    const int formula = formula_value(family, params);
    const sge::VerifyReport check = sge::validate_witness(c.graph, c.witness);
    const bool size_ok = static_cast<int>(c.set.size()) == formula;

    if (!emit_graph.empty()) {
        std::ofstream out(emit_graph);
        if (!out) throw sge::ParseError("cannot write " + emit_graph);
        out << sge::write_edge_list(c.graph);
    }
    if (!emit_witness.empty()) {
        std::ofstream out(emit_witness);
        if (!out) throw sge::ParseError("cannot write " + emit_witness);
        out << sge::witness_to_json(c.witness).dump(2) << "\n";
    }

    json report;
    report["command"] = "construct";
    report["family"] = family;
    report["params"] = params;
    report["fingerprint"] = sge::fingerprint(c.graph);
    report["result"] = {{"formula", formula},
                        {"size", c.set.size()},
                        {"set", c.set},
                        {"valid", check.valid},
                        {"witness", sge::witness_to_json(c.witness)}};
    print_report(report);

    if (!check.valid || !size_ok) {
        std::cerr << "construction self-verification failed for " << family << " (valid="
                  << check.valid << ", size=" << c.set.size() << ", formula=" << formula << ")\n";
        return kExitInternal;
    }
    return kExitOk;
}

// --- crosscheck ------------------------------------------------------------

struct Range {
    int lo = 0;
    int hi = 0;
    bool hi_is_n = false;  // "m=2..n": upper limit tracks the current n
};

Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    const std::string lo = dots == std::string::npos ? text : text.substr(0, dots);
    const std::string hi = dots == std::string::npos ? text : text.substr(dots + 2);
    try {
        r.lo = std::stoi(lo);
        if (hi == "n") {
            r.hi_is_n = true;
        } else {
            r.hi = std::stoi(hi);
        }
    } catch (const std::exception&) {
        throw sge::ParseError("bad range \"" + text + "\"");
    }
    return r;
}

void parse_range_spec(const std::string& spec, Range& n, Range& m) {
    std::string rest = spec;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string item = rest.substr(0, comma);
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw sge::ParseError("bad range item \"" + item + "\"");
        const std::string var = item.substr(0, eq);
        const Range r = parse_range(item.substr(eq + 1));
        if (var == "n") {
            n = r;
        } else if (var == "m") {
            m = r;
        } else {
            throw sge::ParseError("unknown range variable \"" + var + "\"");
        }
    }
}

void sorted_part_lists(int sum_max, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    const int used = std::accumulate(acc.begin(), acc.end(), 0);
    if (acc.size() >= 2) out.push_back(acc);
    const int lo = acc.empty() ? 2 : acc.back();
    for (int next = lo; used + next <= sum_max; ++next) {
        acc.push_back(next);
        sorted_part_lists(sum_max, acc, out);
        acc.pop_back();
    }
}

struct CheckRow {
    std::vector<int> params;
    int formula = -1;
    int construction = -1;
    bool witness_valid = false;
    std::optional<int> oracle;
    std::optional<int> exact;
    bool budget_out = false;

    bool agree() const {
        if (!witness_valid || construction != formula) return false;
        if (oracle && *oracle != formula) return false;
        if (exact && *exact != formula) return false;
        return true;
    }
};

CheckRow check_instance(const std::string& family, const std::vector<int>& params,
                        int oracle_max, int exact_max, uint64_t budget) {
    CheckRow row;
    row.params = params;
    row.formula = formula_value(family, params);
    const sge::Construction c = build_construction(family, params);
    row.construction = static_cast<int>(c.set.size());
    row.witness_valid = sge::validate_witness(c.graph, c.witness).valid;
    if (c.graph.order() <= oracle_max) {
        row.oracle = sge::sge_oracle(c.graph, oracle_max).value;
    } else if (c.graph.order() <= exact_max) {
        const sge::SgeOutcome out = sge::sge_exact(c.graph, budget, 1);
        if (out.result) {
            row.exact = out.result->value;
        } else {
            row.budget_out = true;
        }
    }
    return row;
}

int run_crosscheck(const std::string& family, const std::string& range_spec, int sum_max,
                   int oracle_max, int exact_max, uint64_t budget, int threads) {
    std::vector<std::vector<int>> instances;
    if (family == "bipartite" || family == "prism") {
        Range n{2, family == "prism" ? 4 : 5, false};
        Range m{family == "prism" ? 3 : 2, family == "prism" ? 3 : 0, family != "prism"};
        if (!range_spec.empty()) parse_range_spec(range_spec, n, m);
        for (int nv = n.lo; nv <= n.hi; ++nv) {
            const int mhi = m.hi_is_n ? nv : m.hi;
            for (int mv = m.lo; mv <= mhi; ++mv) instances.push_back({nv, mv});
        }
    } else if (family == "multipartite") {
        std::vector<int> acc;
        sorted_part_lists(sum_max, acc, instances);
    } else {
        throw sge::ParseError("unknown family \"" + family + "\"");
    }

    std::vector<CheckRow> rows(instances.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            rows[i] = check_instance(family, instances[i], oracle_max, exact_max, budget);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    int disagreements = 0;
    bool budget_out = false;
    json items = json::array();
    for (const CheckRow& row : rows) {
        json item;
        item["params"] = row.params;
        item["formula"] = row.formula;
        item["construction"] = row.construction;
        item["witness_valid"] = row.witness_valid;
        item["oracle"] = row.oracle ? json(*row.oracle) : json(nullptr);
        item["exact"] = row.exact ? json(*row.exact) : json(nullptr);
        item["agree"] = row.agree();
        items.push_back(item);
        if (!row.agree()) ++disagreements;
        budget_out = budget_out || row.budget_out;
    }

    json report;
    report["command"] = "crosscheck";
    report["family"] = family;
    report["instances"] = items;
    report["summary"] = {{"checked", instances.size()}, {"disagreements", disagreements}};
    print_report(report);

    if (disagreements > 0) {
        std::cerr << disagreements << " disagreement(s)\n";
        return kExitDisagree;
    }
    if (budget_out) {
        std::cerr << "budget exhausted on at least one instance\n";
        return kExitBudget;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong edge geodetic sets: exact solver, formulas, constructions"};
    app.require_subcommand(1);

    std::string graph_path, witness_path, family, range_spec, emit_graph, emit_witness;
    std::vector<int> params;
    uint64_t budget_flag = sge::kDefaultBudget;
    int threads = 1;
    int oracle_max = sge::kDefaultOracleGuard;
    int exact_max = 12;
    int sum_max = 9;
    bool oracle = false;

    auto* compute = app.add_subcommand("compute", "exact strong edge geodetic number");
    compute->add_option("graph", graph_path, "edge-list or graph6 file")->required();
    auto* budget_opt = compute->add_option("--budget", budget_flag, "node-expansion budget");
    compute->add_flag("--oracle", oracle, "use the brute-force oracle");
    compute->add_option("--oracle-max", oracle_max, "oracle vertex guard");
    compute->add_option("--threads", threads, "worker threads");

    auto* verify = app.add_subcommand("verify", "validate a witness against a graph");
    verify->add_option("graph", graph_path, "edge-list or graph6 file")->required();
    verify->add_option("witness", witness_path, "witness JSON file")->required();

    auto* formula = app.add_subcommand("formula", "closed-form value for a family");
    formula->add_option("family", family, "bipartite|multipartite|prism|complete")->required();
    formula->add_option("params", params, "family parameters")->required();

    auto* construct = app.add_subcommand("construct", "build a family witness");
    construct->add_option("family", family, "bipartite|multipartite|prism")->required();
    construct->add_option("params", params, "family parameters")->required();
    construct->add_option("--emit-graph", emit_graph, "write the graph as an edge list");
    construct->add_option("--emit-witness", emit_witness, "write the witness JSON");

    auto* crosscheck = app.add_subcommand("crosscheck", "formula vs construction vs solver");
    crosscheck->add_option("--family", family, "bipartite|multipartite|prism")->required();
    crosscheck->add_option("--range", range_spec, "e.g. n=2..5,m=2..n");
    crosscheck->add_option("--sum-max", sum_max, "multipartite: max sum of parts");
    crosscheck->add_option("--oracle-max", oracle_max, "run the oracle up to this order");
    crosscheck->add_option("--exact-max", exact_max, "run sge_exact up to this order");
    auto* cc_budget_opt = crosscheck->add_option("--budget", budget_flag, "per-instance budget");
    crosscheck->add_option("--threads", threads, "instances checked in parallel");

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    try {
        if (compute->parsed())
            return run_compute(graph_path, oracle, oracle_max,
                               budget_from(*compute, budget_opt, budget_flag), threads);
        if (verify->parsed()) return run_verify(graph_path, witness_path);
        if (formula->parsed()) return run_formula(family, params);
        if (construct->parsed()) return run_construct(family, params, emit_graph, emit_witness);
        if (crosscheck->parsed())
            return run_crosscheck(family, range_spec, sum_max, oracle_max, exact_max,
                                  budget_from(*crosscheck, cc_budget_opt, budget_flag), threads);
    } catch (const sge::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sge::HypothesisError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sge::InstanceTooLargeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sge::WitnessError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sge::GraphError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
