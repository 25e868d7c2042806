#include "tsa/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <system_error>

#include "tsa/error.hpp"
#include "tsa/special.hpp"

namespace tsa {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    s = s.substr(b, e - b + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::optional<double> parse_count(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    if (!std::isfinite(v) || v < 0.0 || v != std::floor(v)) return std::nullopt;
    return v;
}

std::string fmt(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string fmt(std::size_t v) { return std::to_string(v); }

std::string join_spans(std::span<const std::size_t> spans) {
    std::string out;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spans[i]);
    }
    return out;
}

bool is_numerical(const std::exception& e) {
    return dynamic_cast<const ZeroVariance*>(&e) || dynamic_cast<const DomainError*>(&e) ||
           dynamic_cast<const DegenerateFit*>(&e) || dynamic_cast<const InsufficientData*>(&e);
}

template <typename F>
auto stage(const char* name, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what(), is_numerical(e));
    }
}

CsvTable trend_table(const TimeSeries& x, const LinearTrendFit& fit) {
    CsvTable t{"fig_trend.csv", {"t", "period", "value", "trend"}, {}};
    for (std::size_t i = 0; i < x.size(); ++i)
        t.rows.push_back({fmt(i + 1), x.period_at(i).to_string(), fmt(x[i]), fmt(fit.fitted[i])});
    return t;
}

CsvTable residual_table(const TimeSeries& x, const LinearTrendFit& fit) {
    CsvTable t{"fig_residuals.csv", {"t", "period", "fitted", "residual"}, {}};
    for (std::size_t i = 0; i < x.size(); ++i)
        t.rows.push_back(
            {fmt(i + 1), x.period_at(i).to_string(), fmt(fit.fitted[i]), fmt(fit.residuals[i])});
    return t;
}

CsvTable qq_table(std::span<const double> residuals) {
    CsvTable t{"fig_qq.csv", {"theoretical_quantile", "sample_quantile"}, {}};
    for (const auto& [q, s] : qq_plot_data(residuals)) t.rows.push_back({fmt(q), fmt(s)});
    return t;
}

// Two blocks stacked in one file, distinguished by the first column.
CsvTable diff_sacf_table(const TimeSeries& y, const AcfEstimate& acf) {
    CsvTable t{"fig_diff_sacf.csv", {"kind", "index", "period", "value", "band"}, {}};
    for (std::size_t i = 0; i < y.size(); ++i)
        t.rows.push_back({"series", fmt(i), y.period_at(i).to_string(), fmt(y[i]), ""});
    for (std::size_t k = 0; k < acf.autocorrelation.size(); ++k)
        t.rows.push_back({"sacf", fmt(k), "", fmt(acf.autocorrelation[k]), fmt(acf.band)});
    return t;
}

CsvTable hist_table(const HistogramData& h) {
    CsvTable t{"fig_hist.csv", {"kind", "x_left", "x_right", "value"}, {}};
    for (std::size_t i = 0; i < h.counts.size(); ++i)
        t.rows.push_back({"bin", fmt(h.edges[i]), fmt(h.edges[i + 1]), fmt(h.counts[i])});
    for (std::size_t i = 0; i < h.normal_x.size(); ++i)
        t.rows.push_back({"normal_density", fmt(h.normal_x[i]), "", fmt(h.normal_density[i])});
    return t;
}

CsvTable spectrum_np_table(const SpectrumEstimate& raw, const SpectrumEstimate& smooth) {
    CsvTable t{"fig_spectrum_np.csv",
               {"frequency_cycles_per_sample", "frequency_cycles_per_month", "raw_power",
                "smoothed_power"},
               {}};
    for (std::size_t i = 0; i < raw.frequencies.size(); ++i)
        t.rows.push_back({fmt(raw.frequencies[i]), fmt(raw.frequencies[i]), fmt(raw.power[i]),
                          fmt(smooth.power[i])});
    return t;
}

CsvTable spectrum_ar_table(const SpectrumEstimate& s) {
    CsvTable t{"fig_spectrum_ar.csv",
               {"frequency_cycles_per_sample", "frequency_cycles_per_month", "power"},
               {}};
    for (std::size_t i = 0; i < s.frequencies.size(); ++i)
        t.rows.push_back({fmt(s.frequencies[i]), fmt(s.frequencies[i]), fmt(s.power[i])});
    return t;
}

}  // namespace

std::string CsvTable::to_string() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

TimeSeries ingest_csv(const std::filesystem::path& path, const std::string& date_column,
                      const std::string& value_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError(IngestErrorCode::missing_file, 0, "cannot open " + path.string());

    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t date_idx = 0, value_idx = 0;

    struct Row {
        YearMonth period;
        double value;
        std::size_t line;
    };
    std::vector<Row> rows;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (trim(view).empty()) continue;
        const auto fields = split_fields(view);

        if (!have_header) {
            auto find = [&](const std::string& name) {
                const auto it = std::find(fields.begin(), fields.end(), name);
                if (it == fields.end())
                    throw IngestError(IngestErrorCode::missing_column, line_no,
                                      "missing column '" + name + "'");
                return static_cast<std::size_t>(it - fields.begin());
            };
            date_idx = find(date_column);
            value_idx = find(value_column);
            have_header = true;
            continue;
        }

        const auto where = "line " + std::to_string(line_no) + ": ";
        if (fields.size() <= std::max(date_idx, value_idx))
            throw IngestError(IngestErrorCode::malformed_row, line_no, where + "too few fields");
        const auto ym = YearMonth::parse(fields[date_idx]);
        if (!ym)
            throw IngestError(IngestErrorCode::malformed_row, line_no,
                              where + "bad period '" + std::string(fields[date_idx]) + "'");
        const auto v = parse_count(fields[value_idx]);
        if (!v)
            throw IngestError(IngestErrorCode::malformed_row, line_no,
                              where + "bad count '" + std::string(fields[value_idx]) + "'");
        rows.push_back({*ym, *v, line_no});
    }

    if (!have_header) throw IngestError(IngestErrorCode::insufficient_data, 0, "empty file");
    if (rows.empty()) throw IngestError(IngestErrorCode::insufficient_data, 0, "no data rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.period < b.period; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const long step = rows[i].period.months_since(rows[i - 1].period);
        if (step == 0)
            throw IngestError(IngestErrorCode::duplicate_month, rows[i].line,
                              "duplicate month " + rows[i].period.to_string() + " (line " +
                                  std::to_string(rows[i].line) + ")");
        if (step > 1)
            throw IngestError(IngestErrorCode::month_gap, rows[i].line,
                              "missing month " + rows[i - 1].period.plus_months(1).to_string());
    }

    std::vector<double> values;
    values.reserve(rows.size());
    for (const auto& r : rows) values.push_back(r.value);
    return TimeSeries(std::move(values), rows.front().period, 1);
}

std::string content_fingerprint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError(IngestErrorCode::missing_file, 0, "cannot open " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
        h ^= static_cast<unsigned char>(*it);
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::pair<double, double>> qq_plot_data(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 3) throw InsufficientData("qq_plot_data: need at least 3 values");
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = (static_cast<double>(i + 1) - 0.375) / (static_cast<double>(n) + 0.25);
        out[i] = {special::normal_quantile(p), sorted[i]};
    }
    return out;
}

HistogramData histogram_data(std::span<const double> x, std::optional<std::size_t> bins) {
    const std::size_t n = x.size();
    if (n < 2) throw InsufficientData("histogram_data: need at least 2 values");
    HistogramData h;
    const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
    const double lo = *lo_it, hi = *hi_it;

    h.mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double v : x) ss += (v - h.mean) * (v - h.mean);
    h.sd = std::sqrt(ss / static_cast<double>(n - 1));

    if (hi - lo <= 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) {
        h.degenerate = true;
        h.edges = {lo, hi};
        h.counts = {n};
        return h;
    }

    const std::size_t k =
        bins.value_or(static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1);
    if (k == 0) throw std::invalid_argument("histogram_data: bins must be positive");
    const double width = (hi - lo) / static_cast<double>(k);
    h.edges.resize(k + 1);
    for (std::size_t i = 0; i <= k; ++i) h.edges[i] = lo + width * static_cast<double>(i);
    h.edges[k] = hi;
    h.counts.assign(k, 0);
    for (double v : x) {
        auto b = static_cast<std::size_t>((v - lo) / width);
        ++h.counts[std::min(b, k - 1)];
    }

    constexpr std::size_t overlay_points = 101;
    h.normal_x.resize(overlay_points);
    h.normal_density.resize(overlay_points);
    for (std::size_t i = 0; i < overlay_points; ++i) {
        const double xv = lo + (hi - lo) * static_cast<double>(i) / (overlay_points - 1);
        h.normal_x[i] = xv;
        h.normal_density[i] = special::normal_pdf((xv - h.mean) / h.sd) / h.sd;
    }
    return h;
}

AnalysisReport analyze_series(const TimeSeries& series, const PipelineConfig& config,
                              DatasetFingerprint dataset) {
    AnalysisReport r;
    r.format_version = config.report_format_version;
    if (dataset.rows == 0) {
        dataset.rows = series.size();
        dataset.first_period = series.start().to_string();
        dataset.last_period = series.period_at(series.size() - 1).to_string();
    }
    r.dataset = std::move(dataset);

    r.trend = stage("trend", [&] { return fit_linear_trend(series); });
    const auto residuals = r.trend.residuals.values();
    r.jarque_bera = stage("residual_diagnostics", [&] { return jarque_bera(residuals); });
    r.shapiro_wilk = stage("residual_diagnostics", [&] { return shapiro_wilk(residuals); });

    stage("transform", [&] {
        if (config.truncate_head + 2 > series.size())
            throw InsufficientData("truncate_head=" + std::to_string(config.truncate_head) +
                                   " leaves too few samples (N=" + std::to_string(series.size()) +
                                   ")");
        const auto truncated = series.drop_head(config.truncate_head);
        if (config.detrend_by_regression) {
            r.detrend_method = "regression";
            const auto fit = fit_linear_trend(truncated);
            auto dm = demean(detrend_linear(truncated, fit));
            r.stationary_series = std::move(dm.series);
            r.mean_removed = dm.mean;
        } else {
            r.detrend_method = "difference";
            auto dm = demean(difference(truncated, 1));
            r.stationary_series = std::move(dm.series);
            r.mean_removed = dm.mean;
        }
        return 0;
    });
    const auto y = r.stationary_series.values();
    const std::size_t n = y.size();

    const std::size_t kpss_lag = config.kpss_lag.value_or(kpss_auto_lag(n));
    r.kpss = stage("kpss", [&] { return kpss_level(y, kpss_lag); });

    const std::size_t max_order = config.aic_max_order.value_or(default_max_order(n));
    stage("ar_model", [&] {
        r.aic = select_order_aic(y, max_order, config.ar_estimator);
        r.model = fit_ar(y, r.aic.selected_order, config.ar_estimator);
        r.roots = analyze_roots(r.model);
        r.sacf = sample_acf(y, std::min(config.sacf_max_lag, n - 1));
        return 0;
    });

    stage("spectra", [&] {
        r.raw_spectrum = periodogram(y);
        r.smoothed_spectrum = daniell_smooth(r.raw_spectrum, config.daniell_spans);
        r.ar_spectrum = ar_psd(r.model, config.ar_psd_grid);
        return 0;
    });

    const auto hist = stage("figures", [&] { return histogram_data(residuals); });
    r.figures = stage("figures", [&] {
        return std::vector<CsvTable>{trend_table(series, r.trend),
                                     residual_table(series, r.trend),
                                     qq_table(residuals),
                                     diff_sacf_table(r.stationary_series, r.sacf),
                                     hist_table(hist),
                                     spectrum_np_table(r.raw_spectrum, r.smoothed_spectrum),
                                     spectrum_ar_table(r.ar_spectrum)};
    });

    auto& d = r.decisions;
    d.emplace_back("time_index", "t = 1..N");
    d.emplace_back("pvalue_floor", fmt(kPValueFloor));
    d.emplace_back("truncate_head", fmt(config.truncate_head));
    d.emplace_back("detrend", r.detrend_method);
    d.emplace_back("demean", "after truncation and detrending");
    d.emplace_back("kpss_lag", fmt(kpss_lag));
    d.emplace_back("kpss_lag_source", config.kpss_lag ? "configured" : "auto floor(4 (N/100)^0.25)");
    d.emplace_back("ar_estimator", to_string(config.ar_estimator));
    d.emplace_back("aic_max_order", fmt(max_order));
    d.emplace_back("aic_max_order_source",
                   config.aic_max_order ? "configured" : "auto floor(10 log10 N)");
    d.emplace_back("aic_tie_break", "smallest order");
    d.emplace_back("daniell_kernel", "modified");
    d.emplace_back("daniell_spans", join_spans(config.daniell_spans));
    d.emplace_back("spectrum_boundary", "reflect");
    d.emplace_back("periodogram_length", r.raw_spectrum.parameters.at("padded_length"));
    d.emplace_back("ar_psd_grid", fmt(config.ar_psd_grid));
    d.emplace_back("frequency_unit", "cycles per sample (= cycles per month)");
    d.emplace_back("seed", std::to_string(config.seed));
    d.emplace_back("seed_source", config.seed_source);
    return r;
}

void write_outputs(const AnalysisReport& report, const std::filesystem::path& dir) {
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("report.json", report_to_json(report));
    for (const auto& f : report.figures) files.emplace_back(f.file_name, f.to_string());

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string());

    std::vector<std::filesystem::path> written;
    try {
        for (const auto& [name, body] : files) {
            const auto path = dir / name;
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + path.string());
            written.push_back(path);
            out << body;
            out.close();
            if (!out) throw std::runtime_error("write failed for " + path.string());
        }
    } catch (...) {
        for (const auto& p : written) std::filesystem::remove(p, ec);
        throw;
    }
}

AnalysisReport run_pipeline(const PipelineConfig& config) {
    const auto series = ingest_csv(config.input, config.date_column, config.value_column);
    DatasetFingerprint fp;
    fp.file_name = config.input.filename().string();
    fp.rows = series.size();
    fp.first_period = series.start().to_string();
    fp.last_period = series.period_at(series.size() - 1).to_string();
    fp.content_hash = content_fingerprint(config.input);
    auto report = analyze_series(series, config, std::move(fp));
    stage("write", [&] {
        write_outputs(report, config.output_dir);
        return 0;
    });
    return report;
}

}  // namespace tsa
