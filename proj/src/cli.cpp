// Copyright 2026 The gaussmet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussmet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gaussmet/errors.hpp"
#include "gaussmet/estimation.hpp"
#include "gaussmet/homodyne.hpp"
#include "gaussmet/interferometer.hpp"
#include "gaussmet/resource.hpp"
#include "gaussmet/serialization.hpp"
#include "gaussmet/state.hpp"

namespace gaussmet {

namespace {

constexpr double kDefaultLoPhotons = 1e6;
constexpr double kTwoPi = 6.283185307179586;

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

ParameterizedModel load_with_overrides(const RunConfig& config, nlohmann::json* raw) {
    ParameterizedModel model = load_model(config.model_path, raw);
    if (config.photons > 0) {
        model.photons = config.photons;
    }
    if (config.phi0_set) {
        model.p0 = config.phi0;
    }
    return model;
}

void print_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << (j ? " " : "") << fmt(m(i, j));
        }
        out << "\n";
    }
}

// Working-basis form of a covariance given in the detection basis.
Eigen::MatrixXd to_working_basis(const DetectionBasis& db, const CovarianceMatrix& cov_det) {
    Eigen::MatrixXd s = quadrature_transform(basis_change_unitary(detection_mode_basis(db)));
    return s.transpose() * cov_det.matrix() * s;
}

void run_crb(const RunConfig& config, std::ostream& out) {
    ParameterizedModel model = load_with_overrides(config, nullptr);
    FisherBreakdown fisher = fisher_information(model);
    double delta_p = cramer_rao_bound(fisher.total);
    out << "mean_term = " << fmt(fisher.mean_term) << "\n";
    out << "cov_term = " << fmt(fisher.cov_term) << "\n";
    out << "classical_cov_term = " << fmt(fisher.classical_cov_term) << "\n";
    out << "total = " << fmt(fisher.total) << "\n";
    out << "p_c = " << fmt(fisher.p_c) << "\n";
    out << "delta_p = " << fmt(delta_p) << "\n";
    if (!config.output_path.empty()) {
        write_json_file(config.output_path,
                        nlohmann::json{{"mean_term", fisher.mean_term},
                                       {"cov_term", fisher.cov_term},
                                       {"classical_cov_term", fisher.classical_cov_term},
                                       {"total", fisher.total},
                                       {"p_c", fisher.p_c},
                                       {"delta_p", delta_p}});
    }
}

void run_optimize(const RunConfig& config, std::ostream& out) {
    nlohmann::json raw;
    ParameterizedModel model = load_with_overrides(config, &raw);
    SqueezingBudget budget(config.sigmas);
    DetectionBasis db = detection_basis(model);
    CovarianceMatrix cov_det = optimal_covariance(budget, model.dim);
    Eigen::MatrixXd cov_work = to_working_basis(db, cov_det);
    double delta_p_opt = optimal_crb(budget, model.photons, db.p_c);

    out << "sigma_min = " << fmt(budget.sigma_min()) << "\n";
    out << "p_c = " << fmt(db.p_c) << "\n";
    out << "delta_p_opt = " << fmt(delta_p_opt) << "\n";
    out << "optimal covariance (working basis):\n";
    print_matrix(out, cov_work);

    if (!config.output_path.empty()) {
        raw["covariance"] = {{"family", "constant"}, {"matrix", matrix_to_json(cov_work)}};
        write_json_file(config.output_path, raw);
    }
}

void run_simulate(const RunConfig& config, std::ostream& out) {
    ParameterizedModel model = load_with_overrides(config, nullptr);
    DetectionBasis db = detection_basis(model);
    CovarianceMatrix cov0 = model.covariance_at(model.p0);
    FisherBreakdown fisher = fisher_information(model);
    double crb = cramer_rao_bound(fisher.total);

    HomodyneConfig hconfig;
    hconfig.lo_photons = kDefaultLoPhotons;
    hconfig.n_samples = config.samples;
    hconfig.seed = config.seed;
    std::vector<double> i_minus =
        intensity_difference_samples(model, db, cov0, hconfig, config.p_true);
    EstimationReport report = unbiased_estimator(i_minus, model.photons,
                                                 hconfig.lo_photons, db.p_c,
                                                 config.p_true, crb);

    write_json_file(config.output_path, report_to_json(report));
    std::string base = config.output_path;
    const std::string ext = ".json";
    if (base.size() > ext.size() && base.compare(base.size() - ext.size(), ext.size(), ext) == 0) {
        base.resize(base.size() - ext.size());
    }
    double scale = db.p_c / (2.0 * std::sqrt(model.photons * hconfig.lo_photons));
    std::vector<double> p_hat(i_minus.size());
    std::transform(i_minus.begin(), i_minus.end(), p_hat.begin(),
                   [scale](double v) { return scale * v; });
    write_samples_csv(base + ".samples.csv", i_minus, p_hat);

    out << "estimator_mean = " << fmt(report.estimator_mean) << "\n";
    out << "estimator_variance = " << fmt(report.estimator_variance) << "\n";
    out << "crb = " << fmt(report.crb) << "\n";
    out << "variance_over_crb_sq = " << fmt(report.variance_over_crb_sq) << "\n";
}

void run_interferometer(const RunConfig& config, std::ostream& out) {
    if (config.sigmas.size() > 1) {
        throw ValidationError("the interferometer command takes a single --sigma value");
    }
    double sigma = config.sigmas.empty() ? 1.0 : config.sigmas[0];
    ResponseProfile profile = response_profile_from_string(config.profile);
    if (!(config.photons > 0)) {
        throw ValidationError("--photons must be positive");
    }

    std::vector<double> grid;
    if (config.phi0_set) {
        grid.push_back(config.phi0);
    } else {
        for (int k = 0; k < 16; ++k) {
            grid.push_back(kTwoPi * k / 16.0);
        }
    }

    std::vector<SensitivityRow> rows;
    for (double phi0 : grid) {
        GaussianState output = caves_scheme(config.photons, sigma, profile, phi0);
        InterferometerSpec spec(profile, phi0, config.photons,
                                caves_input_state(config.photons, sigma));
        ModeBasis det({companion_output_mode(spec, phi0), mean_output_mode(spec, phi0)});
        GaussianState in_det = express_in_basis(output, det);
        SensitivityRow row;
        row.phi0 = phi0;
        row.sigma = sigma;
        row.photons = config.photons;
        row.fprime = profile.derivative(phi0 / 2.0);
        row.delta_phi = phase_crb(spec, in_det.cov);
        rows.push_back(row);
    }

    if (!config.output_path.empty()) {
        write_sensitivity_csv(config.output_path, rows);
    }
    out << "phi0,sigma,N,Fprime,delta_phi\n";
    for (const SensitivityRow& r : rows) {
        out << fmt(r.phi0) << "," << fmt(r.sigma) << "," << fmt(r.photons) << ","
            << fmt(r.fprime) << "," << fmt(r.delta_phi) << "\n";
    }
}

void run_sweep(const RunConfig& config, std::ostream& out) {
    ParameterizedModel model = load_with_overrides(config, nullptr);
    SqueezingBudget budget(config.sigmas);
    DetectionBasis db = detection_basis(model);
    std::vector<SweepRow> rows =
        allocation_sweep(budget, model, detection_mode_basis(db).modes());
    if (!config.output_path.empty()) {
        write_sweep_csv(config.output_path, rows);
    }
    out << "placement,entanglement,crb,ratio_to_optimal\n";
    for (const SweepRow& r : rows) {
        out << r.placement << "," << r.entanglement << "," << fmt(r.crb) << ","
            << fmt(r.ratio_to_optimal) << "\n";
    }
}

}  // namespace

void run(const RunConfig& config, std::ostream& out) {
    if (config.samples < 1) {
        throw ValidationError("--samples must be at least 1");
    }
    if (config.subcommand == "crb") {
        run_crb(config, out);
    } else if (config.subcommand == "optimize") {
        run_optimize(config, out);
    } else if (config.subcommand == "simulate") {
        run_simulate(config, out);
    } else if (config.subcommand == "interferometer") {
        run_interferometer(config, out);
    } else if (config.subcommand == "sweep") {
        run_sweep(config, out);
    } else {
        throw ValidationError("unknown subcommand '" + config.subcommand + "'");
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Cramer-Rao bounds for parameters carried by multimode Gaussian light"};
    app.require_subcommand(1);

    CLI::App* crb = app.add_subcommand("crb", "Fisher information and bound for a model");
    crb->add_option("--model", config.model_path, "model JSON file")->required();
    crb->add_option("--out", config.output_path, "also write a JSON report here");
    crb->add_option("--photons", config.photons, "override the model photon number");
    CLI::Option* crb_phi0 = crb->add_option("--phi0", config.phi0, "override the expansion point");

    CLI::App* optimize = app.add_subcommand("optimize", "squeezing allocation minimizing the bound");
    optimize->add_option("--model", config.model_path, "model JSON file")->required();
    optimize->add_option("--sigma", config.sigmas, "squeezing budget, e.g. 0.5,0.8")
        ->required()
        ->delimiter(',');
    optimize->add_option("--out", config.output_path, "write the optimized model here");

    CLI::App* simulate = app.add_subcommand("simulate", "homodyne Monte Carlo estimation run");
    simulate->add_option("--model", config.model_path, "model JSON file")->required();
    simulate->add_option("--out", config.output_path, "report JSON path (samples CSV lands beside it)")
        ->required();
    simulate->add_option("--seed", config.seed, "random seed");
    simulate->add_option("--samples", config.samples, "number of homodyne shots");
    simulate->add_option("--p-true", config.p_true, "true parameter value");
    simulate->add_option("--photons", config.photons, "override the model photon number");

    CLI::App* interferometer =
        app.add_subcommand("interferometer", "phase sensitivity of the two-port instrument");
    interferometer->add_option("--photons", config.photons, "mean-field photon number")->required();
    interferometer->add_option("--sigma", config.sigmas, "dark-port squeezing")->delimiter(',');
    interferometer->add_option("--profile", config.profile, "response profile (linear, scaled:<k>)");
    CLI::Option* itf_phi0 =
        interferometer->add_option("--phi0", config.phi0, "bias phase (default: 16-point scan)");
    interferometer->add_option("--out", config.output_path, "sensitivity CSV path");

    CLI::App* sweep = app.add_subcommand("sweep", "CRB over squeezing placements");
    sweep->add_option("--model", config.model_path, "model JSON file")->required();
    sweep->add_option("--sigma", config.sigmas, "squeezing budget")->required()->delimiter(',');
    sweep->add_option("--out", config.output_path, "sweep CSV path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CLI::App* active = app.get_subcommands().front();
    config.subcommand = active->get_name();
    config.phi0_set = (crb_phi0->count() > 0) || (itf_phi0->count() > 0);

    try {
        run(config, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace gaussmet
