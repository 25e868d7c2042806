#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "tsa/pipeline.hpp"

namespace tsa {

namespace {

using json = nlohmann::ordered_json;

// Non-finite values become null so the document stays valid JSON.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const PValue& p) {
    json j;
    j["value"] = num(p.value);
    j["censoring"] = to_string(p.censoring);
    j["threshold"] = p.threshold ? num(*p.threshold) : json(nullptr);
    j["display"] = p.to_string();
    return j;
}

json to_json(const HypothesisTestResult& t) {
    json j;
    j["test"] = t.test_name;
    j["statistic"] = num(t.statistic);
    j["p_value"] = to_json(t.p_value);
    j["null_hypothesis"] = t.null_hypothesis;
    j["sample_size"] = t.sample_size;
    json nuisance = json::object();
    for (const auto& [k, v] : t.nuisance) nuisance[k] = num(v);
    j["nuisance"] = std::move(nuisance);
    return j;
}

json to_json(const LinearTrendFit& f) {
    json j;
    j["n"] = f.n;
    j["dof"] = f.dof;
    j["time_index"] = "1..N";
    j["beta0"] = {{"estimate", num(f.beta0)},
                  {"std_error", num(f.se_beta0)},
                  {"t_value", num(f.t_beta0)},
                  {"p_value", to_json(f.p_beta0)}};
    j["beta1"] = {{"estimate", num(f.beta1)},
                  {"std_error", num(f.se_beta1)},
                  {"t_value", num(f.t_beta1)},
                  {"p_value", to_json(f.p_beta1)}};
    j["residual_std_error"] = num(f.residual_std_error);
    j["r_squared"] = num(f.r_squared);
    j["f_statistic"] = num(f.f_statistic);
    j["f_dof"] = {1, f.dof};
    j["model_p_value"] = to_json(f.model_p_value);
    return j;
}

json to_json(const AicTable& t, std::size_t max_order) {
    json j;
    j["method"] = to_string(t.method);
    j["max_order"] = max_order;
    j["n"] = t.n;
    j["selected_order"] = t.selected_order;
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["order"] = r.order;
        row["sigma2"] = r.error ? json(nullptr) : num(r.sigma2);
        row["aic"] = r.error ? json(nullptr) : num(r.aic);
        if (r.error) row["error"] = *r.error;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

json to_json(const ArModel& m, const RootSummary& roots) {
    json j;
    j["order"] = m.order();
    j["method"] = m.estimation_method;
    json phi = json::array();
    for (double v : m.phi) phi.push_back(num(v));
    j["phi"] = std::move(phi);
    j["sigma2"] = num(m.sigma2);
    j["mean"] = num(m.mean);
    j["n_used"] = m.n_used;
    json rs = json::array();
    for (const auto& z : roots.roots)
        rs.push_back({{"re", num(z.real())}, {"im", num(z.imag())}, {"modulus", num(std::abs(z))}});
    j["roots"] = std::move(rs);
    j["min_root_modulus"] = num(roots.min_modulus);
    j["stationary"] = roots.stationary;
    j["unit_root"] = roots.unit_root;
    return j;
}

json spectrum_ref(const SpectrumEstimate& s, const char* file, const char* column) {
    json j;
    j["estimator"] = to_string(s.estimator);
    j["file"] = file;
    j["column"] = column;
    j["points"] = s.frequencies.size();
    json params = json::object();
    for (const auto& [k, v] : s.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    if (!s.power.empty()) {
        const auto it = std::max_element(s.power.begin(), s.power.end());
        j["peak_frequency"] = num(s.frequencies[static_cast<std::size_t>(it - s.power.begin())]);
        j["peak_power"] = num(*it);
    }
    return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
    json j;
    j["format_version"] = r.format_version;
    j["dataset"] = {{"file", r.dataset.file_name},
                    {"rows", r.dataset.rows},
                    {"first_period", r.dataset.first_period},
                    {"last_period", r.dataset.last_period},
                    {"content_hash", r.dataset.content_hash}};
    j["trend"] = to_json(r.trend);
    j["residual_diagnostics"] = {{"jarque_bera", to_json(r.jarque_bera)},
                                 {"shapiro_wilk", to_json(r.shapiro_wilk)}};

    std::size_t max_order = r.aic.rows.empty() ? 0 : r.aic.rows.back().order;
    json diff;
    diff["method"] = r.detrend_method;
    diff["length"] = r.stationary_series.size();
    diff["first_period"] = r.stationary_series.start().to_string();
    diff["mean_removed"] = num(r.mean_removed);
    diff["kpss"] = to_json(r.kpss);
    diff["aic"] = to_json(r.aic, max_order);
    diff["model"] = to_json(r.model, r.roots);
    diff["sacf_band"] = num(r.sacf.band);
    j["difference"] = std::move(diff);

    j["spectra"] = {
        {"raw", spectrum_ref(r.raw_spectrum, "fig_spectrum_np.csv", "raw_power")},
        {"smoothed", spectrum_ref(r.smoothed_spectrum, "fig_spectrum_np.csv", "smoothed_power")},
        {"parametric", spectrum_ref(r.ar_spectrum, "fig_spectrum_ar.csv", "power")}};

    json figs = json::array();
    for (const auto& f : r.figures) figs.push_back({{"file", f.file_name}, {"rows", f.rows.size()}});
    j["figures"] = std::move(figs);

    json dec = json::object();
    for (const auto& [k, v] : r.decisions) dec[k] = v;
    j["decisions"] = std::move(dec);
    return j.dump(2) + "\n";
}

std::string canonicalize_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
    }
    return j.dump(2) + "\n";
}

}  // namespace tsa
