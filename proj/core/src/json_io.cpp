#include "hahn/json_io.hpp"

namespace hahn {

using nlohmann::json;

json monomial_to_json(const Monomial& m) {
    if (m.is_one()) return json{{"kind", "one"}};
    if (m.is_nested())
        return json{{"kind", "omega"}, {"exponent", series_to_json(m.exponent())}};
    json support = json::array();
    for (const auto& [g, c] : m.support())
        support.push_back(json{{"element", m.chain()->format(g)}, {"coeff", c.to_text()}});
    return json{{"kind", "free"}, {"chain", m.chain()->label}, {"support", support}};
}

json series_to_json(const Series& s) {
    json terms = json::array();
    for (const auto& t : s.terms())
        terms.push_back(json{{"monomial", monomial_to_json(t.mono)},
                             {"coefficient", t.coeff.to_text()}});
    json out{{"terms", terms}};
    out["remainder"] = s.is_exact() ? json(nullptr) : monomial_to_json(*s.remainder());
    return out;
}

json growth_report_to_json(const GrowthReport& r) {
    auto status_text = [](int s) {
        return s > 0 ? "holds" : s == 0 ? "violated" : "inconclusive";
    };
    json log_checks = json::array();
    for (const auto& e : r.log_checks)
        log_checks.push_back(json{{"y", e.y.to_text()},
                                  {"r", e.r.to_text()},
                                  {"status", status_text(e.status)},
                                  {"note", e.note}});
    json h_checks = json::array();
    for (const auto& e : r.h_checks)
        h_checks.push_back(json{{"x", e.x.to_text()},
                               {"status", status_text(e.status)},
                               {"note", e.note}});
    return json{{"log_checks", log_checks},
                {"h_checks", h_checks},
                {"violations", r.violations()},
                {"inconclusive", r.inconclusive()}};
}

json no_omega_to_json(const NoOmegaReport& r) {
    return json{{"trace", r.trace}, {"triggered", r.triggered}, {"verdict", r.verdict}};
}

}  // namespace hahn
