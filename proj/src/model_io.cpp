#include "somclass/model_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "somclass/errors.hpp"

namespace somclass {

namespace {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows, Eigen::Index nrows,
                                 Eigen::Index ncols) {
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != nrows) {
        throw Error(Errc::corrupt_file, "matrix row count mismatch");
    }
    Eigen::MatrixXd m(nrows, ncols);
    for (Eigen::Index r = 0; r < nrows; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != ncols) {
            throw Error(Errc::corrupt_file, "matrix column count mismatch");
        }
        for (Eigen::Index c = 0; c < ncols; ++c) {
            m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
        }
    }
    return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Eigen::VectorXd vector_from_json(const json& arr, Eigen::Index n) {
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != n) {
        throw Error(Errc::corrupt_file, "vector length mismatch");
    }
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v[i] = arr[static_cast<std::size_t>(i)].get<double>();
    }
    return v;
}

void write_document(const std::string& kind, json dims, json payload,
                    const std::filesystem::path& path) {
    json doc;
    doc["format_version"] = kModelFormatVersion;
    doc["model_kind"] = kind;
    doc["dims"] = std::move(dims);
    doc["checksum"] = fnv1a64_hex(payload.dump());
    doc["payload"] = std::move(payload);

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot write model " + path.string());
    }
    out << doc.dump(2) << "\n";
    if (!out) {
        throw Error(Errc::io_error, "write failed for " + path.string());
    }
}

json read_document(const std::filesystem::path& path, const std::string& want_kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, "cannot open model " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(Errc::corrupt_file, path.string() + ": " + e.what());
    }
    if (!doc.contains("format_version") || !doc.contains("model_kind") ||
        !doc.contains("dims") || !doc.contains("payload") || !doc.contains("checksum")) {
        throw Error(Errc::corrupt_file, path.string() + ": missing required fields");
    }
    if (doc["format_version"].get<int>() != kModelFormatVersion) {
        throw Error(Errc::version_mismatch,
                    path.string() + ": format version " +
                        doc["format_version"].dump() + ", expected " +
                        std::to_string(kModelFormatVersion));
    }
    if (fnv1a64_hex(doc["payload"].dump()) != doc["checksum"].get<std::string>()) {
        throw Error(Errc::corrupt_file, path.string() + ": checksum mismatch");
    }
    if (!want_kind.empty() && doc["model_kind"].get<std::string>() != want_kind) {
        throw Error(Errc::corrupt_file,
                    path.string() + ": holds a '" +
                        doc["model_kind"].get<std::string>() + "' model, expected '" +
                        want_kind + "'");
    }
    return doc;
}

}  // namespace

void save_model(const PcaModel& model, const std::filesystem::path& path) {
    json dims{{"rows", model.mean.size()}, {"k", model.k}};
    json payload;
    payload["mean"] = vector_to_json(model.mean);
    payload["basis"] = matrix_to_json(model.basis);
    payload["eigenvalues"] = vector_to_json(model.eigenvalues);
    write_document("pca", std::move(dims), std::move(payload), path);
}

void save_model(const LsaModel& model, const std::filesystem::path& path) {
    json dims{{"rows", model.u_k.rows()}, {"k", model.k}};
    json payload;
    payload["u_k"] = matrix_to_json(model.u_k);
    payload["s_k"] = vector_to_json(model.s_k);
    write_document("lsa", std::move(dims), std::move(payload), path);
}

void save_model(const SomModel& model, const std::filesystem::path& path) {
    json dims{{"clusters", model.weights.rows()}, {"dim", model.weights.cols()}};
    json payload;
    payload["weights"] = matrix_to_json(model.weights);
    payload["trained"] = model.trained;
    payload["epochs_run"] = model.epochs_run;
    payload["final_rate"] = model.final_rate;
    payload["converged"] = model.converged;
    payload["win_counts"] = model.win_counts;
    write_document("som", std::move(dims), std::move(payload), path);
}

PcaModel load_pca_model(const std::filesystem::path& path) {
    const json doc = read_document(path, "pca");
    try {
        const Eigen::Index rows = doc["dims"]["rows"].get<Eigen::Index>();
        PcaModel model;
        model.k = doc["dims"]["k"].get<int>();
        model.mean = vector_from_json(doc["payload"]["mean"], rows);
        model.basis = matrix_from_json(doc["payload"]["basis"], rows, model.k);
        model.eigenvalues = vector_from_json(doc["payload"]["eigenvalues"], model.k);
        return model;
    } catch (const json::exception& e) {
        throw Error(Errc::corrupt_file, path.string() + ": " + e.what());
    }
}

LsaModel load_lsa_model(const std::filesystem::path& path) {
    const json doc = read_document(path, "lsa");
    try {
        const Eigen::Index rows = doc["dims"]["rows"].get<Eigen::Index>();
        LsaModel model;
        model.k = doc["dims"]["k"].get<int>();
        model.u_k = matrix_from_json(doc["payload"]["u_k"], rows, model.k);
        model.s_k = vector_from_json(doc["payload"]["s_k"], model.k);
        return model;
    } catch (const json::exception& e) {
        throw Error(Errc::corrupt_file, path.string() + ": " + e.what());
    }
}

SomModel load_som_model(const std::filesystem::path& path) {
    const json doc = read_document(path, "som");
    try {
        const Eigen::Index clusters = doc["dims"]["clusters"].get<Eigen::Index>();
        const Eigen::Index dim = doc["dims"]["dim"].get<Eigen::Index>();
        SomModel model;
        model.weights = matrix_from_json(doc["payload"]["weights"], clusters, dim);
        model.trained = doc["payload"]["trained"].get<bool>();
        model.epochs_run = doc["payload"]["epochs_run"].get<int>();
        model.final_rate = doc["payload"]["final_rate"].get<double>();
        model.converged = doc["payload"]["converged"].get<bool>();
        model.win_counts = doc["payload"]["win_counts"].get<std::vector<long>>();
        if (static_cast<Eigen::Index>(model.win_counts.size()) != clusters) {
            throw Error(Errc::corrupt_file, path.string() + ": win_counts size mismatch");
        }
        return model;
    } catch (const json::exception& e) {
        throw Error(Errc::corrupt_file, path.string() + ": " + e.what());
    }
}

SelectionModel load_selection_model(const std::filesystem::path& path) {
    const json doc = read_document(path, "");
    const std::string kind = doc["model_kind"].get<std::string>();
    if (kind == "pca") return load_pca_model(path);
    if (kind == "lsa") return load_lsa_model(path);
    throw Error(Errc::corrupt_file,
                path.string() + ": unknown model kind '" + kind + "'");
}

FeatureMatrix project(const SelectionModel& model, const FeatureMatrix& x) {
    if (const auto* pca = std::get_if<PcaModel>(&model)) {
        return project_pca(*pca, x);
    }
    return project_lsa(std::get<LsaModel>(model), x);
}

}  // namespace somclass
