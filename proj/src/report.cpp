#include "threshold_lab/report.hpp"

#include <cmath>

#include "threshold_lab/graph6.hpp"

namespace tlab {

namespace {

json finite_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;  // -inf (zero probabilities) and friends
}

}  // namespace

json to_json(const Graph& g) {
    return json{{"graph6", write_graph6(g)},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()}};
}

json to_json(const Rational& q) {
    return json{{"num", to_string(BigInt(q.get_num()))}, {"den", to_string(BigInt(q.get_den()))}};
}

json to_json(const Prob& p) {
    json out;
    out["approx"] = finite_or_null(p.approx());
    out["log2"] = finite_or_null(p.log2());
    out["describe"] = p.describe();
    if (p.is_exact()) {
        json ex = to_json(p.base());
        ex["root"] = p.root();
        out["exact"] = std::move(ex);
    }
    return out;
}

json to_json(const ThresholdResult& t) {
    return json{{"p", to_json(t.p)},
                {"binding_class", to_json(t.binding_rep)},
                {"binding_base", to_json(t.binding_base)},
                {"binding_exponent", t.binding_e}};
}

json to_json(const SparseCheck& s) {
    json out{{"sparse", s.sparse}, {"near_tie", s.near_tie}};
    if (s.witness) {
        json w{{"class", to_json(s.witness->rep)},
               {"expectation_log2", finite_or_null(s.witness->expectation_log2)}};
        if (s.witness->expectation) w["expectation"] = to_json(*s.witness->expectation);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const Census& c) {
    json classes = json::array();
    for (const CensusEntry& entry : c.entries)
        classes.push_back(json{{"graph6", write_graph6(entry.rep)},
                               {"v", entry.v},
                               {"e", entry.e},
                               {"copies", to_string(entry.copies)},
                               {"aut", to_string(entry.aut)}});
    return json{{"host_vertices", c.host_vertices},
                {"host_edges", c.host_edges},
                {"class_count", c.entries.size()},
                {"classes", std::move(classes)}};
}

json to_json(const PcEstimate& pc) {
    json probes = json::array();
    for (const ProbeRecord& pr : pc.probes)
        probes.push_back(json{{"p", pr.p},
                              {"samples", pr.samples},
                              {"hits", pr.hits},
                              {"wilson_lo", pr.wilson_lo},
                              {"wilson_hi", pr.wilson_hi}});
    return json{{"estimate", pc.estimate},
                {"ci_lo", pc.ci_lo},
                {"ci_hi", pc.ci_hi},
                {"conclusive", pc.conclusive},
                {"total_samples", pc.total_samples},
                {"probes", std::move(probes)}};
}

json to_json(const LeadingDecomposition& d) {
    json chain = json::array();
    for (const auto& level : d.chain) chain.push_back(level);
    json steps = json::array();
    for (const DecompositionStep& st : d.steps) {
        json s{{"lower", st.lower},
               {"upper", st.upper},
               {"mu_log2", finite_or_null(st.step_mu.mu_log2())},
               {"near_tie", st.near_tie}};
        if (st.step_mu.has_exact()) s["mu"] = to_json(st.step_mu.mu_exact());
        steps.push_back(std::move(s));
    }
    return json{{"chain", std::move(chain)}, {"steps", std::move(steps)}};
}

json to_json(const std::vector<RatioRow>& rows) {
    json out = json::array();
    for (const RatioRow& row : rows) {
        json r{{"graph6", row.graph6}};
        if (row.pe) r["p_e"] = to_json(*row.pe);
        if (row.pe_star) r["p_e_star"] = to_json(*row.pe_star);
        if (!row.error) r["ratio_log2"] = finite_or_null(row.ratio_log2);
        if (row.error) r["error"] = *row.error;
        out.push_back(std::move(r));
    }
    return out;
}

json to_json(const VerifyReport& rep) {
    json rows = json::array();
    for (const CheckRow& row : rep.rows)
        rows.push_back(json{{"label", row.label},
                            {"applicable", row.applicable},
                            {"pass", row.pass},
                            {"near_tie", row.near_tie},
                            {"detail", row.detail}});
    json metrics = json::object();
    for (const auto& [name, value] : rep.metrics) metrics[name] = finite_or_null(value);
    return json{{"suite", rep.suite},
                {"hypotheses_met", rep.hypotheses_met},
                {"notes", rep.hypothesis_notes},
                {"counts",
                 json{{"checked", rep.checked},
                      {"passed", rep.passed},
                      {"failed", rep.failed},
                      {"advisories", rep.advisories}}},
                {"all_pass", rep.all_pass},
                {"metrics", std::move(metrics)},
                {"rows", std::move(rows)}};
}

json to_json(const ConnReductionReport& rep) {
    json entries = json::array();
    for (const ConnReductionEntry& entry : rep.entries)
        entries.push_back(json{{"code_v", entry.v},
                               {"code_e", entry.e},
                               {"connected", entry.connected},
                               {"copies", to_string(entry.copies)},
                               {"hyp_ok", entry.hyp_ok},
                               {"concl_ok", entry.concl_ok},
                               {"concl_margin_log2", finite_or_null(entry.concl_margin_log2)}});
    return json{{"hypothesis_met", rep.hypothesis_met},
                {"conclusion_ok", rep.conclusion_ok},
                {"advisory", rep.advisory},
                {"rate_above_one", rep.rate_above_one},
                {"p_log2", finite_or_null(rep.p_log2)},
                {"isolate_identity_ok", rep.isolate_identity_ok},
                {"isolate_note", rep.isolate_note},
                {"entries", std::move(entries)}};
}

json report_envelope(const std::string& command, const std::string& input_hash,
                     const json& params, const json& result) {
    return json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", command},
                {"input_hash", input_hash},
                {"params", params},
                {"result", result}};
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[x & 0xf];
        x >>= 4;
    }
    return out;
}

}  // namespace tlab
