// Command-line front end: normalize / synth / matrix / tcount / equal /
// selftest over the exact qutrit Clifford+T toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tritsynth/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

using namespace tritsynth;

nlohmann::json phase_json(const PhaseUnit& u) {
    return {{"i_pow", u.i_pow}, {"sign", static_cast<int>(u.sign)}, {"xi_pow", u.xi_pow}};
}

std::vector<std::string> syllable_list(const NormalForm& nf, bool expand) {
    std::istringstream is(nf.str(expand));
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

nlohmann::json report_json(const NormalForm& nf, unsigned denom_exp, bool expand) {
    return {{"member", true},
            {"t_count", nf.t_count()},
            {"h_count", nf.h_count()},
            {"denom_exp", denom_exp},
            {"phase", phase_json(nf.phase)},
            {"syllables", syllable_list(nf, expand)}};
}

std::optional<GateString> parse_or_report(const std::string& text) {
    try {
        return parse_gate_string(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

std::optional<PhasedOp> load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return std::nullopt;
    }
    try {
        nlohmann::json j;
        in >> j;
        return phased_op_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "bad matrix file " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

// Gate string, or a JSON matrix when the argument names a readable file.
std::optional<PhasedOp> load_operand(const std::string& arg, bool& bad) {
    if (std::ifstream probe(arg); probe.good()) {
        auto m = load_matrix(arg);
        bad = !m.has_value();
        return m;
    }
    auto g = parse_or_report(arg);
    if (!g) {
        bad = true;
        return std::nullopt;
    }
    bad = false;
    return string_to_matrix(*g);
}

int cmd_normalize(const std::string& text, bool json, bool expand) {
    const auto g = parse_or_report(text);
    if (!g) return kExitUsage;
    const NormalForm nf = normalize(*g);
    if (json) {
        std::cout << report_json(nf, nf_matrix(nf).mat().denom_exp(), expand).dump() << "\n";
        return kExitOk;
    }
    std::cout << "normal form: " << nf.str(expand) << "\n"
              << "t_count:     " << nf.t_count() << "\n"
              << "h_count:     " << nf.h_count() << "\n"
              << "phase:       " << nf.phase.str() << "\n";
    return kExitOk;
}

int cmd_tcount(const std::string& text) {
    const auto g = parse_or_report(text);
    if (!g) return kExitUsage;
    std::cout << normalize(*g).t_count() << "\n";
    return kExitOk;
}

int cmd_matrix(const std::string& text, const std::string& out_path) {
    const auto g = parse_or_report(text);
    if (!g) return kExitUsage;
    const nlohmann::json j = to_json(string_to_matrix(*g));
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_synth(const std::string& path, bool json, bool expand) {
    const auto op = load_matrix(path);
    if (!op) return kExitUsage;
    SynthResult res = exact_synthesize(op->mat());
    if (res.member && op->i_pow() != 0)
        res.nf.phase = res.nf.phase * PhaseUnit::i_unit();
    if (!res.member) {
        nlohmann::json j{{"member", false},
                         {"reason", SynthResult::reason_name(res.reason)},
                         {"denom_exp", res.denom_exp}};
        if (res.failed_step >= 0) j["failed_step"] = res.failed_step;
        if (json)
            std::cout << j.dump() << "\n";
        else
            std::cerr << "not in the Clifford+T group: " << SynthResult::reason_name(res.reason)
                      << " (denominator exponent " << res.denom_exp << ")\n";
        return kExitNegative;
    }
    if (json)
        std::cout << report_json(res.nf, res.denom_exp, expand).dump() << "\n";
    else
        std::cout << res.nf.str(expand) << "\n";
    return kExitOk;
}

int cmd_equal(const std::string& a, const std::string& b) {
    bool bad = false;
    const auto ma = load_operand(a, bad);
    if (bad) return kExitUsage;
    const auto mb = load_operand(b, bad);
    if (bad) return kExitUsage;
    const auto u = projective_eq(*ma, *mb);
    if (!u) {
        std::cout << "not equal\n";
        return kExitNegative;
    }
    std::cout << "equal, phase " << u->str() << "\n";
    return kExitOk;
}

nlohmann::json tables_json() {
    const auto& tables = CliffordTables::instance();
    nlohmann::json past_t = nlohmann::json::array();
    nlohmann::json past_h = nlohmann::json::array();
    nlohmann::json classify = nlohmann::json::array();
    auto pelem_json = [](const PElem& p) {
        return nlohmann::json::array({p.v, p.s, p.x, p.z});
    };
    for (int pi = 0; pi < 54; ++pi) {
        const PElem p = PElem::from_index(pi);
        for (int a = 1; a <= 2; ++a) {
            const auto& r = tables.p_past_t(p, a);
            past_t.push_back({{"p", pelem_json(p)},
                              {"a", a},
                              {"t_pow", r.t_pow},
                              {"p_out", pelem_json(r.p)},
                              {"unit", phase_json(r.u)}});
        }
        for (int h = 0; h < 3; ++h) {
            const auto& r = tables.p_past_hprime(p, h);
            past_h.push_back({{"p", pelem_json(p)},
                              {"h", h},
                              {"h_out", r.h_idx},
                              {"p_out", pelem_json(r.p)},
                              {"unit", phase_json(r.u)}});
        }
    }
    for (const auto& e : CliffordElem::all()) {
        const auto hp = tables.classify(e);
        classify.push_back({{"x", e.x},
                            {"z", e.z},
                            {"f", nlohmann::json::array({e.f.a, e.f.b, e.f.c, e.f.d})},
                            {"h", hp.h},
                            {"p", pelem_json(hp.p)}});
    }
    return {{"p_past_t", past_t}, {"p_past_hprime", past_h}, {"classify", classify}};
}

int cmd_selftest(unsigned max_t, bool dump_tables, const std::string& atlas_path) {
    if (dump_tables) {
        std::cout << tables_json().dump(2) << "\n";
        return kExitOk;
    }
    const GroupAtlas atlas = bfs_enumerate(max_t);
    if (!atlas_path.empty()) {
        std::ofstream out(atlas_path);
        if (!out) {
            std::cerr << "cannot write " << atlas_path << "\n";
            return kExitUsage;
        }
        out << atlas_to_jsonl(atlas);
    }
    std::cout << "layers:";
    for (std::size_t n : atlas.layer_sizes) std::cout << " " << n;
    std::cout << (atlas.complete ? "" : " (incomplete)") << "\n";
    if (!atlas.complete) {
        std::cerr << "element budget exhausted\n";
        return kExitNegative;
    }
    bool ok = atlas.layer_sizes.at(0) == 216;
    if (!ok) std::cerr << "Clifford layer has " << atlas.layer_sizes.at(0) << " elements, want 216\n";
    for (const auto& [name, report] :
         {std::pair{"uniqueness", check_uniqueness(atlas)}, {"denom-law", check_denom_law(atlas)}}) {
        std::cout << name << ": " << report.checked << " checked, " << report.violations.size()
                  << " violations\n";
        for (std::size_t i = 0; i < report.violations.size() && i < 10; ++i)
            std::cerr << "  " << report.violations[i] << "\n";
        ok = ok && report.ok();
    }
    return ok ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact synthesis and T-optimal rewriting for single-qutrit Clifford+T circuits"};
    app.require_subcommand(1);

    std::string text, in_path, out_path, lhs, rhs;
    bool json = false, expand = false, dump_tables = false;
    unsigned max_t = 3;

    auto* norm = app.add_subcommand("normalize", "rewrite a gate string into normal form");
    norm->add_option("string", text, "gate string")->required();
    norm->add_flag("--json", json, "emit the JSON report");
    norm->add_flag("--expand", expand, "print H/S/T tokens instead of syllables");

    auto* tc = app.add_subcommand("tcount", "print the minimal T-count of a gate string");
    tc->add_option("string", text, "gate string")->required();

    auto* mat = app.add_subcommand("matrix", "evaluate a gate string to an exact matrix");
    mat->add_option("string", text, "gate string")->required();
    mat->add_option("-o,--output", out_path, "write JSON here instead of stdout");

    auto* syn = app.add_subcommand("synth", "exactly synthesize a JSON matrix");
    syn->add_option("-i,--input", in_path, "matrix JSON file")->required();
    syn->add_flag("--json", json, "emit the JSON report");
    syn->add_flag("--expand", expand, "print H/S/T tokens instead of syllables");

    auto* eq = app.add_subcommand("equal", "test projective equality of two operators");
    eq->add_option("a", lhs, "gate string or matrix file")->required();
    eq->add_option("b", rhs, "gate string or matrix file")->required();

    auto* st = app.add_subcommand("selftest", "enumerate the group and check it");
    st->add_option("--max-t", max_t, "BFS depth in T-count");
    st->add_flag("--dump-tables", dump_tables, "print the Clifford rewrite tables as JSON");
    st->add_option("-o,--output", out_path, "also write the atlas as JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (norm->parsed()) return cmd_normalize(text, json, expand);
    if (tc->parsed()) return cmd_tcount(text);
    if (mat->parsed()) return cmd_matrix(text, out_path);
    if (syn->parsed()) return cmd_synth(in_path, json, expand);
    if (eq->parsed()) return cmd_equal(lhs, rhs);
    if (st->parsed()) return cmd_selftest(max_t, dump_tables, out_path);
    return kExitUsage;
}
