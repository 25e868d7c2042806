#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tsa/ar_model.hpp"
#include "tsa/correlation.hpp"
#include "tsa/error.hpp"
#include "tsa/pipeline.hpp"
#include "tsa/regression.hpp"
#include "tsa/spectral.hpp"
#include "tsa/stat_tests.hpp"

namespace py = pybind11;

namespace {

tsa::TimeSeries as_series(const std::vector<double>& x) { return tsa::TimeSeries(x); }

tsa::ArEstimator estimator(const std::string& name) { return tsa::parse_estimator(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "C++ core of tsakit";

    py::register_exception<tsa::IngestError>(m, "IngestError", PyExc_ValueError);
    py::register_exception<tsa::StageError>(m, "StageError", PyExc_RuntimeError);
    py::register_exception<tsa::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<tsa::DegenerateFit>(m, "DegenerateFit", PyExc_RuntimeError);
    py::register_exception<tsa::ZeroVariance>(m, "ZeroVariance", PyExc_ValueError);
    py::register_exception<tsa::InsufficientData>(m, "InsufficientData", PyExc_ValueError);

    py::class_<tsa::PValue>(m, "PValue")
        .def_readonly("value", &tsa::PValue::value)
        .def_readonly("threshold", &tsa::PValue::threshold)
        .def_property_readonly("censoring",
                               [](const tsa::PValue& p) { return tsa::to_string(p.censoring); })
        .def("__str__", &tsa::PValue::to_string)
        .def("__repr__", [](const tsa::PValue& p) { return "PValue(" + p.to_string() + ")"; });

    py::class_<tsa::LinearTrendFit>(m, "LinearTrendFit")
        .def_readonly("beta0", &tsa::LinearTrendFit::beta0)
        .def_readonly("beta1", &tsa::LinearTrendFit::beta1)
        .def_readonly("se_beta0", &tsa::LinearTrendFit::se_beta0)
        .def_readonly("se_beta1", &tsa::LinearTrendFit::se_beta1)
        .def_readonly("t_beta0", &tsa::LinearTrendFit::t_beta0)
        .def_readonly("t_beta1", &tsa::LinearTrendFit::t_beta1)
        .def_readonly("p_beta0", &tsa::LinearTrendFit::p_beta0)
        .def_readonly("p_beta1", &tsa::LinearTrendFit::p_beta1)
        .def_readonly("r_squared", &tsa::LinearTrendFit::r_squared)
        .def_readonly("f_statistic", &tsa::LinearTrendFit::f_statistic)
        .def_readonly("model_p_value", &tsa::LinearTrendFit::model_p_value)
        .def_readonly("residual_std_error", &tsa::LinearTrendFit::residual_std_error)
        .def_property_readonly("residuals",
                               [](const tsa::LinearTrendFit& f) { return f.residuals.vec(); })
        .def_property_readonly("fitted", [](const tsa::LinearTrendFit& f) { return f.fitted.vec(); })
        .def_readonly("n", &tsa::LinearTrendFit::n)
        .def_readonly("dof", &tsa::LinearTrendFit::dof);

    py::class_<tsa::HypothesisTestResult>(m, "HypothesisTestResult")
        .def_readonly("test_name", &tsa::HypothesisTestResult::test_name)
        .def_readonly("statistic", &tsa::HypothesisTestResult::statistic)
        .def_readonly("p_value", &tsa::HypothesisTestResult::p_value)
        .def_readonly("null_hypothesis", &tsa::HypothesisTestResult::null_hypothesis)
        .def_readonly("sample_size", &tsa::HypothesisTestResult::sample_size)
        .def_readonly("nuisance", &tsa::HypothesisTestResult::nuisance);

    py::class_<tsa::AcfEstimate>(m, "AcfEstimate")
        .def_readonly("autocovariance", &tsa::AcfEstimate::autocovariance)
        .def_readonly("autocorrelation", &tsa::AcfEstimate::autocorrelation)
        .def_readonly("n", &tsa::AcfEstimate::n)
        .def_readonly("band", &tsa::AcfEstimate::band);

    py::class_<tsa::ArModel>(m, "ArModel")
        .def_readonly("phi", &tsa::ArModel::phi)
        .def_readonly("sigma2", &tsa::ArModel::sigma2)
        .def_readonly("mean", &tsa::ArModel::mean)
        .def_readonly("estimation_method", &tsa::ArModel::estimation_method)
        .def_readonly("n_used", &tsa::ArModel::n_used)
        .def_readonly("stationary", &tsa::ArModel::stationary)
        .def_property_readonly("order", &tsa::ArModel::order);

    py::class_<tsa::AicTable>(m, "AicTable")
        .def_readonly("selected_order", &tsa::AicTable::selected_order)
        .def_readonly("n", &tsa::AicTable::n)
        .def_property_readonly("orders",
                               [](const tsa::AicTable& t) {
                                   std::vector<std::size_t> v;
                                   for (const auto& r : t.rows) v.push_back(r.order);
                                   return v;
                               })
        .def_property_readonly("aic", [](const tsa::AicTable& t) {
            std::vector<std::optional<double>> v;
            for (const auto& r : t.rows) v.push_back(r.error ? std::nullopt : std::optional(r.aic));
            return v;
        });

    py::class_<tsa::SpectrumEstimate>(m, "SpectrumEstimate")
        .def_readonly("frequencies", &tsa::SpectrumEstimate::frequencies)
        .def_readonly("power", &tsa::SpectrumEstimate::power)
        .def_readonly("parameters", &tsa::SpectrumEstimate::parameters)
        .def_property_readonly("estimator", [](const tsa::SpectrumEstimate& s) {
            return tsa::to_string(s.estimator);
        });

    py::class_<tsa::RandomWalkMoments>(m, "RandomWalkMoments")
        .def_readonly("mean", &tsa::RandomWalkMoments::mean)
        .def_readonly("variance", &tsa::RandomWalkMoments::variance)
        .def_readonly("autocovariance", &tsa::RandomWalkMoments::autocovariance)
        .def_readonly("acf", &tsa::RandomWalkMoments::acf);

    m.def("fit_linear_trend",
          [](const std::vector<double>& x) { return tsa::fit_linear_trend(as_series(x)); },
          py::arg("x"));
    m.def("jarque_bera", [](const std::vector<double>& x) { return tsa::jarque_bera(x); },
          py::arg("x"));
    m.def("shapiro_wilk", [](const std::vector<double>& x) { return tsa::shapiro_wilk(x); },
          py::arg("x"));
    m.def("kpss_level",
          [](const std::vector<double>& x, std::optional<std::size_t> lag) {
              return tsa::kpss_level(x, lag);
          },
          py::arg("x"), py::arg("lag") = py::none());
    m.def("sample_acf",
          [](const std::vector<double>& x, std::size_t max_lag) { return tsa::sample_acf(x, max_lag); },
          py::arg("x"), py::arg("max_lag"));

    m.def("difference",
          [](const std::vector<double>& x, std::size_t d) {
              return tsa::difference(as_series(x), d).vec();
          },
          py::arg("x"), py::arg("d") = 1);
    m.def("integrate",
          [](const std::vector<double>& y, std::size_t d, const std::vector<double>& iv) {
              return tsa::integrate(as_series(y), d, iv).vec();
          },
          py::arg("y"), py::arg("d"), py::arg("initial_values"));

    m.def("make_ar_model", &tsa::make_ar_model, py::arg("phi"), py::arg("sigma2"),
          py::arg("mean") = 0.0);
    m.def("fit_ar",
          [](const std::vector<double>& x, std::size_t p, const std::string& method) {
              return tsa::fit_ar(x, p, estimator(method));
          },
          py::arg("x"), py::arg("p"), py::arg("method") = "yule_walker");
    m.def("select_order_aic",
          [](const std::vector<double>& x, std::optional<std::size_t> max_order,
             const std::string& method) {
              return tsa::select_order_aic(x, max_order.value_or(tsa::default_max_order(x.size())),
                                           estimator(method));
          },
          py::arg("x"), py::arg("max_order") = py::none(), py::arg("method") = "yule_walker");
    m.def("characteristic_roots", &tsa::characteristic_roots, py::arg("model"));
    m.def("psi_weights", &tsa::psi_weights, py::arg("model"), py::arg("count"));

    m.def("simulate_ar",
          [](const tsa::ArModel& model, std::size_t n, std::uint64_t seed,
             std::optional<std::size_t> burn_in) {
              return tsa::simulate_ar(model, n, seed, burn_in).vec();
          },
          py::arg("model"), py::arg("n"), py::arg("seed"), py::arg("burn_in") = py::none());
    m.def("simulate_arima",
          [](const tsa::ArModel& model, std::size_t d, std::size_t n, std::uint64_t seed,
             const std::vector<double>& iv) {
              return tsa::simulate_arima(model, d, n, seed, iv).vec();
          },
          py::arg("model"), py::arg("d"), py::arg("n"), py::arg("seed"),
          py::arg("initial_values") = std::vector<double>{});
    m.def("simulate_random_walk",
          [](std::size_t n, std::uint64_t seed, double drift, double sigma2, double y0) {
              return tsa::simulate_random_walk({drift, sigma2, y0}, n, seed).vec();
          },
          py::arg("n"), py::arg("seed"), py::arg("drift") = 0.0, py::arg("sigma2") = 1.0,
          py::arg("y0") = 0.0);
    m.def("random_walk_moments",
          [](std::size_t t, std::size_t k, double drift, double sigma2, double y0) {
              return tsa::random_walk_moments({drift, sigma2, y0}, t, k);
          },
          py::arg("t"), py::arg("k"), py::arg("drift") = 0.0, py::arg("sigma2") = 1.0,
          py::arg("y0") = 0.0);

    m.def("dft",
          [](const std::vector<double>& x, std::optional<std::size_t> pad_to) {
              return tsa::dft(x, pad_to.value_or(x.size())).coefficients;
          },
          py::arg("x"), py::arg("pad_to") = py::none());
    m.def("periodogram",
          [](const std::vector<double>& x, bool demean, std::optional<std::size_t> pad_to) {
              return tsa::periodogram(x, demean, pad_to);
          },
          py::arg("x"), py::arg("demean") = true, py::arg("pad_to") = py::none());
    m.def("daniell_smooth",
          [](const tsa::SpectrumEstimate& raw, const std::vector<std::size_t>& spans) {
              return tsa::daniell_smooth(raw, spans);
          },
          py::arg("spectrum"), py::arg("spans") = std::vector<std::size_t>{3, 3});
    m.def("ar_psd", &tsa::ar_psd, py::arg("model"), py::arg("grid_size") = 257);

    m.def("analyze_csv",
          [](const std::filesystem::path& input, const std::filesystem::path& output,
             std::size_t truncate_head, std::optional<std::size_t> aic_max_order,
             const std::string& method, std::vector<std::size_t> spans,
             std::optional<std::size_t> kpss_lag, std::uint64_t seed) {
              tsa::PipelineConfig cfg;
              cfg.input = input;
              cfg.output_dir = output;
              cfg.truncate_head = truncate_head;
              cfg.aic_max_order = aic_max_order;
              cfg.ar_estimator = estimator(method);
              cfg.daniell_spans = std::move(spans);
              cfg.kpss_lag = kpss_lag;
              cfg.seed = seed;
              cfg.seed_source = "python";
              return tsa::report_to_json(tsa::run_pipeline(cfg));
          },
          py::arg("input"), py::arg("output"), py::arg("truncate_head") = 2,
          py::arg("aic_max_order") = py::none(), py::arg("estimator") = "yule_walker",
          py::arg("daniell_spans") = std::vector<std::size_t>{3, 3},
          py::arg("kpss_lag") = py::none(), py::arg("seed") = 0);
}
