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

#include "gaussmet/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gaussmet/errors.hpp"

namespace gaussmet {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* name, const std::string& context) {
    if (!doc.is_object()) {
        throw ValidationError(context + ": expected a JSON object");
    }
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ValidationError(context + ": missing field \"" + name + "\"");
    }
    return *it;
}

double number(const json& doc, const char* name, const std::string& context) {
    const json& v = field(doc, name, context);
    if (!v.is_number()) {
        throw ValidationError(context + ": field \"" + name + "\" must be a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ValidationError(context + ": field \"" + name + "\" must be finite");
    }
    return x;
}

int integer(const json& doc, const char* name, const std::string& context) {
    const json& v = field(doc, name, context);
    if (!v.is_number_integer()) {
        throw ValidationError(context + ": field \"" + name + "\" must be an integer");
    }
    return v.get<int>();
}

std::vector<double> real_array(const json& v, const std::string& context) {
    if (!v.is_array()) {
        throw ValidationError(context + ": expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const json& e : v) {
        if (!e.is_number()) {
            throw ValidationError(context + ": expected an array of numbers");
        }
        double x = e.get<double>();
        if (!std::isfinite(x)) {
            throw ValidationError(context + ": array contains a non-finite value");
        }
        out.push_back(x);
    }
    return out;
}

// 1-based in files, 0-based internally.
int mode_index(const json& doc, const char* name, int dim, const std::string& context) {
    int k = integer(doc, name, context);
    if (k < 1 || k > dim) {
        throw ValidationError(context + ": field \"" + name + "\" must be between 1 and " +
                              std::to_string(dim));
    }
    return k - 1;
}

std::string csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot open output file " + path);
    }
    return out;
}

std::function<Eigen::MatrixXd(double)> covariance_from_json(const json& doc,
                                                            const std::string& context) {
    const json& fam = field(doc, "family", context);
    if (!fam.is_string()) {
        throw ValidationError(context + ": field \"family\" must be a string");
    }
    std::string name = fam.get<std::string>();
    if (name == "constant") {
        return constant_covariance(matrix_from_json(field(doc, "matrix", context)));
    }
    if (name == "rotating-squeezed") {
        int modes = integer(doc, "modes", context);
        if (modes < 1) {
            throw ValidationError(context + ": field \"modes\" must be positive");
        }
        int which = mode_index(doc, "which", modes, context);
        double sigma = number(doc, "sigma", context);
        double rate = number(doc, "rate", context);
        return rotating_squeezed_covariance(modes, which, sigma, rate);
    }
    if (name == "table") {
        std::vector<double> grid = real_array(field(doc, "grid", context), context);
        const json& nodes = field(doc, "nodes", context);
        if (!nodes.is_array()) {
            throw ValidationError(context + ": field \"nodes\" must be an array");
        }
        std::vector<Eigen::MatrixXd> mats;
        for (const json& n : nodes) {
            mats.push_back(matrix_from_json(n));
        }
        return table_covariance(std::move(grid), std::move(mats));
    }
    throw ValidationError(context + ": unknown covariance family \"" + name + "\"");
}

}  // namespace

json mode_to_json(const ModeVector& mode) {
    json re = json::array();
    json im = json::array();
    for (int k = 0; k < mode.dim(); ++k) {
        re.push_back(mode[k].real());
        im.push_back(mode[k].imag());
    }
    return json{{"re", re}, {"im", im}};
}

ModeVector mode_from_json(const json& doc) {
    const std::string context = "mode";
    std::vector<double> re = real_array(field(doc, "re", context), context);
    std::vector<double> im = real_array(field(doc, "im", context), context);
    if (re.size() != im.size() || re.empty()) {
        throw ValidationError("mode: \"re\" and \"im\" must be nonempty and equally long");
    }
    Eigen::VectorXcd c(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) {
        c(static_cast<Eigen::Index>(k)) = std::complex<double>(re[k], im[k]);
    }
    return ModeVector(c);
}

json state_to_json(const GaussianState& state) {
    json mean = json::array();
    for (Eigen::Index i = 0; i < state.mean.size(); ++i) {
        mean.push_back(state.mean(i));
    }
    return json{{"M", state.modes()}, {"mean", mean}, {"cov", matrix_to_json(state.cov.matrix())}};
}

GaussianState state_from_json(const json& doc) {
    const std::string context = "state";
    int m = integer(doc, "M", context);
    if (m < 1) {
        throw ValidationError("state: \"M\" must be positive");
    }
    std::vector<double> mean = real_array(field(doc, "mean", context), context);
    if (static_cast<int>(mean.size()) != 2 * m) {
        throw ValidationError("state: \"mean\" must have length 2M");
    }
    Eigen::MatrixXd cov = matrix_from_json(field(doc, "cov", context));
    if (cov.rows() != 2 * m) {
        throw ValidationError("state: \"cov\" must be 2M x 2M");
    }
    Eigen::VectorXd mu(2 * m);
    for (int i = 0; i < 2 * m; ++i) {
        mu(i) = mean[static_cast<std::size_t>(i)];
    }
    return GaussianState(mu, CovarianceMatrix(cov));
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& doc) {
    if (!doc.is_array() || doc.empty()) {
        throw ValidationError("matrix: expected a nonempty array of rows");
    }
    std::size_t cols = 0;
    std::vector<std::vector<double>> rows;
    for (const json& r : doc) {
        rows.push_back(real_array(r, "matrix row"));
        if (rows.size() == 1) {
            cols = rows[0].size();
        } else if (rows.back().size() != cols) {
            throw ValidationError("matrix: rows have inconsistent lengths");
        }
    }
    Eigen::MatrixXd m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return m;
}

ParameterizedModel model_from_json(const json& doc) {
    const std::string context = "model";
    double photons = number(doc, "photons", context);
    if (!(photons > 0)) {
        throw ValidationError("model: \"photons\" must be positive");
    }
    double p0 = doc.contains("p0") ? number(doc, "p0", context) : 0.0;

    const json& mode_doc = field(doc, "mode", context);
    const json& fam = field(mode_doc, "family", "model.mode");
    if (!fam.is_string()) {
        throw ValidationError("model.mode: field \"family\" must be a string");
    }
    std::string name = fam.get<std::string>();

    ParameterizedModel model;
    if (name == "rotation") {
        int dim = integer(mode_doc, "dim", "model.mode");
        if (dim < 2) {
            throw ValidationError("model.mode: rotation needs dim >= 2");
        }
        int from = mode_index(mode_doc, "from", dim, "model.mode");
        int to = mode_index(mode_doc, "to", dim, "model.mode");
        double rate = number(mode_doc, "rate", "model.mode");
        model = rotation_model(dim, from, to, rate, photons);
    } else if (name == "phase") {
        int dim = integer(mode_doc, "dim", "model.mode");
        if (dim < 1) {
            throw ValidationError("model.mode: phase needs dim >= 1");
        }
        int index = mode_index(mode_doc, "index", dim, "model.mode");
        double rate = number(mode_doc, "rate", "model.mode");
        model = phase_model(dim, index, rate, photons);
    } else if (name == "interferometer") {
        const json& prof = field(mode_doc, "profile", "model.mode");
        if (!prof.is_string()) {
            throw ValidationError("model.mode: field \"profile\" must be a string");
        }
        model = interferometer_mode_family(response_profile_from_string(prof.get<std::string>()),
                                           photons, p0);
    } else if (name == "custom-table") {
        std::vector<double> grid = real_array(field(mode_doc, "grid", "model.mode"),
                                              "model.mode");
        const json& nodes = field(mode_doc, "nodes", "model.mode");
        if (!nodes.is_array()) {
            throw ValidationError("model.mode: field \"nodes\" must be an array");
        }
        std::vector<ModeVector> modes;
        for (const json& n : nodes) {
            modes.push_back(mode_from_json(n));
        }
        model = table_model(std::move(grid), std::move(modes), photons);
    } else {
        throw ValidationError("model.mode: unknown mode family \"" + name + "\"");
    }

    model.p0 = p0;
    model.covariance = covariance_from_json(field(doc, "covariance", context),
                                            "model.covariance");

    // Evaluate once so dimension mismatches surface at load time.
    CovarianceMatrix cov = model.covariance_at(model.p0);
    if (cov.modes() != model.dim) {
        throw ValidationError("model: covariance is " + std::to_string(cov.modes()) +
                              "-mode but the mode family has dimension " +
                              std::to_string(model.dim));
    }
    model.mode_at(model.p0);
    return model;
}

json report_to_json(const EstimationReport& report) {
    return json{{"p_true", report.p_true},
                {"estimator_mean", report.estimator_mean},
                {"estimator_variance", report.estimator_variance},
                {"crb", report.crb},
                {"variance_over_crb_sq", report.variance_over_crb_sq},
                {"n_samples", report.n_samples}};
}

EstimationReport report_from_json(const json& doc) {
    const std::string context = "report";
    EstimationReport report;
    report.p_true = number(doc, "p_true", context);
    report.estimator_mean = number(doc, "estimator_mean", context);
    report.estimator_variance = number(doc, "estimator_variance", context);
    report.crb = number(doc, "crb", context);
    report.variance_over_crb_sq = number(doc, "variance_over_crb_sq", context);
    report.n_samples = integer(doc, "n_samples", context);
    return report;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open file " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out = open_output(path);
    out << doc.dump(2) << "\n";
    if (!out) {
        throw ValidationError("failed writing " + path);
    }
}

ParameterizedModel load_model(const std::string& path, json* raw) {
    json doc = read_json_file(path);
    try {
        ParameterizedModel model = model_from_json(doc);
        if (raw) {
            *raw = std::move(doc);
        }
        return model;
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_samples_csv(const std::string& path, const std::vector<double>& i_minus,
                       const std::vector<double>& p_hat) {
    if (i_minus.size() != p_hat.size()) {
        throw ValidationError("sample columns have different lengths");
    }
    std::ofstream out = open_output(path);
    out << "sample_index,I_minus,p_hat\n";
    for (std::size_t k = 0; k < i_minus.size(); ++k) {
        out << k << "," << csv_number(i_minus[k]) << "," << csv_number(p_hat[k]) << "\n";
    }
    if (!out) {
        throw ValidationError("failed writing " + path);
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out = open_output(path);
    out << "placement,entanglement,crb,ratio_to_optimal\n";
    for (const SweepRow& r : rows) {
        out << r.placement << "," << r.entanglement << "," << csv_number(r.crb) << ","
            << csv_number(r.ratio_to_optimal) << "\n";
    }
    if (!out) {
        throw ValidationError("failed writing " + path);
    }
}

void write_sensitivity_csv(const std::string& path,
                           const std::vector<SensitivityRow>& rows) {
    std::ofstream out = open_output(path);
    out << "phi0,sigma,N,Fprime,delta_phi\n";
    for (const SensitivityRow& r : rows) {
        out << csv_number(r.phi0) << "," << csv_number(r.sigma) << ","
            << csv_number(r.photons) << "," << csv_number(r.fprime) << ","
            << csv_number(r.delta_phi) << "\n";
    }
    if (!out) {
        throw ValidationError("failed writing " + path);
    }
}

}  // namespace gaussmet
