#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsa/ar_model.hpp"
#include "tsa/correlation.hpp"
#include "tsa/regression.hpp"
#include "tsa/series.hpp"
#include "tsa/spectral.hpp"
#include "tsa/stat_tests.hpp"

namespace tsa {

inline constexpr const char* kReportFormatVersion = "1.0";

struct PipelineConfig {
    std::filesystem::path input;
    std::string date_column = "period";
    std::string value_column = "deaths";
    /// Leading samples dropped before differencing.
    std::size_t truncate_head = 2;
    /// nullopt selects default_max_order(N).
    std::optional<std::size_t> aic_max_order;
    ArEstimator ar_estimator = ArEstimator::yule_walker;
    std::vector<std::size_t> daniell_spans{3, 3};
    /// nullopt selects kpss_auto_lag(N).
    std::optional<std::size_t> kpss_lag;
    /// Detrend with the regression line instead of differencing.
    bool detrend_by_regression = false;
    std::size_t ar_psd_grid = 257;
    std::size_t sacf_max_lag = 24;
    std::filesystem::path output_dir;
    std::uint64_t seed = 0;
    std::string seed_source = "default";
    std::string report_format_version = kReportFormatVersion;
};

/// Reads `period,deaths`-style CSV. Rows may arrive in any order; after
/// sorting, months must be unique and contiguous.
/// @throws IngestError with a distinct code per failure kind
[[nodiscard]] TimeSeries ingest_csv(const std::filesystem::path& path,
                                    const std::string& date_column = "period",
                                    const std::string& value_column = "deaths");

/// 64-bit FNV-1a of the file contents, as "fnv1a64:<16 hex digits>".
[[nodiscard]] std::string content_fingerprint(const std::filesystem::path& path);

/// (theoretical normal quantile, sample order statistic) pairs with
/// plotting positions (i - 3/8)/(N + 1/4).
/// @throws InsufficientData if N < 3
[[nodiscard]] std::vector<std::pair<double, double>> qq_plot_data(std::span<const double> x);

struct HistogramData {
    std::vector<double> edges;           ///< bins + 1 edges, equal width
    std::vector<std::size_t> counts;
    bool degenerate = false;             ///< zero range: one bin holds everything
    double mean = 0.0;
    double sd = 0.0;                     ///< sample standard deviation (N - 1)
    std::vector<double> normal_x;        ///< overlay abscissae
    std::vector<double> normal_density;  ///< N(mean, sd²) density at normal_x
};

/// Equal-width histogram; `bins` = nullopt uses Sturges' rule ceil(log2 N) + 1.
/// @throws InsufficientData if N < 2
[[nodiscard]] HistogramData histogram_data(std::span<const double> x,
                                           std::optional<std::size_t> bins = {});

/// One plot-data file: header plus rows of pre-formatted cells.
struct CsvTable {
    std::string file_name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::string to_string() const;
};

struct DatasetFingerprint {
    std::string file_name;
    std::size_t rows = 0;
    std::string first_period;
    std::string last_period;
    std::string content_hash;
};

struct AnalysisReport {
    std::string format_version;
    DatasetFingerprint dataset;
    LinearTrendFit trend;
    HypothesisTestResult jarque_bera;
    HypothesisTestResult shapiro_wilk;

    std::string detrend_method;  ///< "difference" or "regression"
    TimeSeries stationary_series{std::vector<double>{0.0}};
    double mean_removed = 0.0;
    HypothesisTestResult kpss;
    AicTable aic;
    ArModel model;
    RootSummary roots;
    AcfEstimate sacf;

    SpectrumEstimate raw_spectrum;
    SpectrumEstimate smoothed_spectrum;
    SpectrumEstimate ar_spectrum;

    /// Every parameter the run used, defaulted or not, in insertion order.
    std::vector<std::pair<std::string, std::string>> decisions;
    std::vector<CsvTable> figures;
};

/// Thrown when a pipeline stage fails; wraps the underlying error message.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& cause, bool numerical)
        : std::runtime_error("stage '" + stage + "' failed: " + cause),
          stage_(std::move(stage)),
          numerical_(numerical) {}

    [[nodiscard]] const std::string& stage() const noexcept { return stage_; }
    /// False for input/validation failures, true for numerical failures.
    [[nodiscard]] bool numerical() const noexcept { return numerical_; }

private:
    std::string stage_;
    bool numerical_;
};

/// Runs every analysis stage on an in-memory series; no file I/O.
/// @throws StageError
[[nodiscard]] AnalysisReport analyze_series(const TimeSeries& series, const PipelineConfig& config,
                                            DatasetFingerprint dataset = {});

/// Serialized report.json body.
[[nodiscard]] std::string report_to_json(const AnalysisReport& report);

/// Parses and re-serializes a report document.
/// @throws std::invalid_argument on malformed JSON
[[nodiscard]] std::string canonicalize_report_json(const std::string& text);

/// Writes report.json and the figure files. Already-written files are removed if any write fails.
void write_outputs(const AnalysisReport& report, const std::filesystem::path& dir);

/// ingest_csv + analyze_series + write_outputs.
/// @throws IngestError, StageError
AnalysisReport run_pipeline(const PipelineConfig& config);

}  // namespace tsa
