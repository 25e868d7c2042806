// tsa: monthly series analysis and AR/random-walk simulation.
//
//   tsa analyze --input deaths.csv --output out/
//   tsa simulate --model ar --phi 0.5,0.3 --n 500 --seed 7

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsa/ar_model.hpp"
#include "tsa/error.hpp"
#include "tsa/pipeline.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        T v{};
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument(std::string("bad ") + what + " list '" + text + "'");
        out.push_back(v);
    }
    return out;
}

// Flag beats TSA_SEED beats the built-in default.
void resolve_seed(std::optional<std::uint64_t> flag, std::uint64_t& seed, std::string& source) {
    if (flag) {
        seed = *flag;
        source = "flag";
        return;
    }
    if (const char* env = std::getenv("TSA_SEED"); env && *env) {
        std::uint64_t v = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("TSA_SEED is not an unsigned integer: '" + std::string(s) + "'");
        seed = v;
        source = "env";
    }
}

void print_summary(const tsa::AnalysisReport& r, const std::filesystem::path& out) {
    std::printf("rows            %zu (%s .. %s)\n", r.dataset.rows, r.dataset.first_period.c_str(),
                r.dataset.last_period.c_str());
    std::printf("trend           beta0=%.4f beta1=%.4f R2=%.4f F=%.4f\n", r.trend.beta0,
                r.trend.beta1, r.trend.r_squared, r.trend.f_statistic);
    std::printf("jarque-bera     %.5f p=%s\n", r.jarque_bera.statistic,
                r.jarque_bera.p_value.to_string().c_str());
    std::printf("shapiro-wilk    %.5f p=%s\n", r.shapiro_wilk.statistic,
                r.shapiro_wilk.p_value.to_string().c_str());
    std::printf("kpss            %.5f p=%s\n", r.kpss.statistic, r.kpss.p_value.to_string().c_str());
    std::printf("ar order        %zu (%s, K=%zu)\n", r.aic.selected_order, tsa::to_string(r.aic.method),
                r.aic.rows.empty() ? std::size_t{0} : r.aic.rows.back().order);
    std::printf("output          %s\n", out.string().c_str());
}

int run_analyze(const tsa::PipelineConfig& cfg) {
    const auto report = tsa::run_pipeline(cfg);
    print_summary(report, cfg.output_dir);
    return 0;
}

struct SimulateArgs {
    std::string model = "ar";
    std::string phi;
    double sigma2 = 1.0;
    double mean = 0.0;
    double drift = 0.0;
    double y0 = 0.0;
    std::size_t d = 1;
    std::size_t n = 100;
    std::optional<std::size_t> burn_in;
    std::string output;
};

int run_simulate(const SimulateArgs& a, std::uint64_t seed) {
    tsa::TimeSeries y(std::vector<double>{0.0});
    const auto phi = a.phi.empty() ? std::vector<double>{} : parse_list<double>(a.phi, "phi");
    if (a.model == "ar") {
        y = tsa::simulate_ar(tsa::make_ar_model(phi, a.sigma2, a.mean), a.n, seed, a.burn_in);
    } else if (a.model == "arima") {
        const std::vector<double> iv(a.d, a.y0);
        y = tsa::simulate_arima(tsa::make_ar_model(phi, a.sigma2, a.mean), a.d, a.n, seed, iv);
    } else {
        y = tsa::simulate_random_walk({a.drift, a.sigma2, a.y0}, a.n, seed);
    }

    std::ofstream file;
    if (!a.output.empty()) {
        file.open(a.output, std::ios::binary | std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot write " + a.output);
    }
    std::ostream& os = a.output.empty() ? std::cout : file;
    os << "t,value\n";
    char buf[32];
    for (std::size_t t = 0; t < y.size(); ++t) {
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, y[t]);
        os << t + 1 << ',' << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trend, normality, stationarity, AR and spectral analysis of monthly counts"};
    app.require_subcommand(1);

    tsa::PipelineConfig cfg;
    std::optional<std::uint64_t> seed_flag;
    std::string kpss_lag = "auto";
    std::string aic_max_order = "auto";
    std::string spans = "3,3";
    std::string estimator = "yule_walker";

    auto* analyze = app.add_subcommand("analyze", "Run the full analysis and write report + plot data");
    analyze->add_option("--input", cfg.input, "CSV file with period and count columns")->required();
    analyze->add_option("--output", cfg.output_dir, "Output directory")->required();
    analyze->add_option("--date-column", cfg.date_column)->capture_default_str();
    analyze->add_option("--value-column", cfg.value_column)->capture_default_str();
    analyze->add_option("--truncate-head", cfg.truncate_head)->capture_default_str();
    analyze->add_option("--aic-max-order", aic_max_order, "N or auto")->capture_default_str();
    analyze->add_option("--daniell-spans", spans, "Comma-separated odd spans")->capture_default_str();
    analyze->add_option("--kpss-lag", kpss_lag, "N or auto")->capture_default_str();
    analyze->add_option("--estimator", estimator, "yule_walker | least_squares")->capture_default_str();
    analyze->add_option("--ar-psd-grid", cfg.ar_psd_grid)->capture_default_str();
    analyze->add_flag("--detrend-regression", cfg.detrend_by_regression,
                      "Remove the fitted line instead of differencing");
    analyze->add_option("--seed", seed_flag, "Overrides TSA_SEED");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Write a simulated series as CSV");
    simulate->add_option("--model", sim.model)
        ->check(CLI::IsMember({"ar", "arima", "random-walk"}))
        ->capture_default_str();
    simulate->add_option("--phi", sim.phi, "Comma-separated AR coefficients");
    simulate->add_option("--sigma2", sim.sigma2)->capture_default_str();
    simulate->add_option("--mean", sim.mean)->capture_default_str();
    simulate->add_option("--drift", sim.drift)->capture_default_str();
    simulate->add_option("--y0", sim.y0, "Initial value (random walk, arima)")->capture_default_str();
    simulate->add_option("-d,--order-d", sim.d, "Integration order (arima)")->capture_default_str();
    simulate->add_option("-n,--n", sim.n)->capture_default_str();
    simulate->add_option("--burn-in", sim.burn_in);
    simulate->add_option("--output", sim.output, "File; stdout if omitted");
    simulate->add_option("--seed", seed_flag, "Overrides TSA_SEED");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        resolve_seed(seed_flag, cfg.seed, cfg.seed_source);
        if (*analyze) {
            cfg.daniell_spans = parse_list<std::size_t>(spans, "span");
            cfg.ar_estimator = tsa::parse_estimator(estimator);
            if (kpss_lag != "auto") cfg.kpss_lag = parse_list<std::size_t>(kpss_lag, "lag").at(0);
            if (aic_max_order != "auto")
                cfg.aic_max_order = parse_list<std::size_t>(aic_max_order, "order").at(0);
            return run_analyze(cfg);
        }
        return run_simulate(sim, cfg.seed);
    } catch (const tsa::IngestError& e) {
        std::fprintf(stderr, "tsa: input error (%s): %s\n", tsa::to_string(e.code()), e.what());
        return kExitInput;
    } catch (const tsa::StageError& e) {
        std::fprintf(stderr, "tsa: %s\n", e.what());
        return e.numerical() ? kExitNumerical : kExitInput;
    } catch (const tsa::DomainError& e) {
        std::fprintf(stderr, "tsa: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "tsa: %s\n", e.what());
        return kExitInput;
    }
}
