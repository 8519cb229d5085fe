#include "mis/report_io.hpp"

#include <sstream>

namespace mis {

namespace {

nlohmann::json bound_json(const BoundValue& b)
{
    if (const auto* exact = std::get_if<BigCount>(&b)) return {{"kind", "exact"}, {"value", exact->str()}};
    nlohmann::json j = to_json(std::get<RealInterval>(b));
    j["kind"] = "interval";
    return j;
}

nlohmann::json finding_json(const Finding& f)
{
    nlohmann::json j{{"graph6", f.graph6}, {"mis", f.mis.str()}, {"bound", f.bound}};
    j["parameter"] = f.parameter ? nlohmann::json(*f.parameter) : nlohmann::json(nullptr);
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

nlohmann::json to_json(const RealInterval& interval)
{
    return {
        {"lo", to_decimal_floor(interval.lo(), 15)},
        {"hi", to_decimal_ceil(interval.hi(), 15)},
        {"lo_exact", interval.lo().str()},
        {"hi_exact", interval.hi().str()},
    };
}

nlohmann::json to_json(const SweepReport& report)
{
    nlohmann::json params = nlohmann::json::array();
    for (const ParameterMax& pm : report.per_parameter) {
        nlohmann::json j;
        j["t"] = pm.t ? nlohmann::json(*pm.t) : nlohmann::json(nullptr);
        j["max_mis"] = pm.max_mis ? nlohmann::json(pm.max_mis->str()) : nlohmann::json(nullptr);
        j["bound"] = bound_json(pm.bound);
        j["witness"] = pm.witness;
        j["attained"] = std::holds_alternative<BigCount>(pm.bound) ? nlohmann::json(pm.attained)
                                                                   : nlohmann::json(nullptr);
        j["graphs"] = pm.graphs;
        params.push_back(std::move(j));
    }

    nlohmann::json violations = nlohmann::json::array();
    for (const Finding& f : report.violations) violations.push_back(finding_json(f));
    nlohmann::json inconclusive = nlohmann::json::array();
    for (const Finding& f : report.inconclusive) inconclusive.push_back(finding_json(f));

    return {
        {"theorem", std::string(to_string(report.theorem))},
        {"n", report.n},
        {"source", report.source},
        {"exhaustive", report.exhaustive},
        {"verdict", report.verdict()},
        {"graphs_scanned", report.graphs_scanned},
        {"graphs_qualified", report.graphs_qualified},
        {"per_parameter", std::move(params)},
        {"violations", std::move(violations)},
        {"inconclusive", std::move(inconclusive)},
        {"elapsed_seconds", report.elapsed.count()},
    };
}

nlohmann::json to_json(const Report& report)
{
    return {
        {"check", report.check},
        {"verdict", std::string(to_string(report.verdict()))},
        {"evidence", report.evidence},
        {"counterexamples", report.counterexamples},
        {"inconclusive", report.inconclusive},
        {"notes", report.notes},
    };
}

std::string to_csv(const SweepReport& report)
{
    std::ostringstream out;
    out << "theorem,n,source,t,graphs,max_mis,bound_lo,bound_hi,attained,witness\n";
    for (const ParameterMax& pm : report.per_parameter) {
        std::string lo, hi;
        if (const auto* exact = std::get_if<BigCount>(&pm.bound)) {
            lo = hi = exact->str();
        } else {
            const auto& h = std::get<RealInterval>(pm.bound);
            lo = to_decimal_floor(h.lo(), 15);
            hi = to_decimal_ceil(h.hi(), 15);
        }
        out << to_string(report.theorem) << ',' << report.n << ',' << csv_field(report.source) << ','
            << (pm.t ? std::to_string(*pm.t) : "") << ',' << pm.graphs << ','
            << (pm.max_mis ? pm.max_mis->str() : "") << ',' << lo << ',' << hi << ','
            << (std::holds_alternative<BigCount>(pm.bound) ? (pm.attained ? "true" : "false") : "") << ','
            << csv_field(pm.witness) << '\n';
    }
    return out.str();
}

} // namespace mis
