#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "somclass/cache.hpp"
#include "somclass/errors.hpp"
#include "somclass/evaluation.hpp"
#include "somclass/histogram.hpp"
#include "somclass/image.hpp"
#include "somclass/lsa.hpp"
#include "somclass/manifest.hpp"
#include "somclass/model_io.hpp"
#include "somclass/numeric_text.hpp"
#include "somclass/pca.hpp"
#include "somclass/report.hpp"
#include "somclass/som.hpp"
#include "somclass/synthetic.hpp"

namespace {

using namespace somclass;

// 0 success, 1 numerical failure, 2 usage/validation, 3 I/O.
int exit_code_for(Errc code) {
    switch (code) {
        case Errc::no_convergence:
            return 1;
        case Errc::io_error:
        case Errc::corrupt_file:
        case Errc::version_mismatch:
        case Errc::bad_cache:
            return 3;
        default:
            return 2;
    }
}

struct SomOptions {
    int clusters = 5;
    double alpha = 0.5;
    int epochs = 500;
    std::uint64_t seed = 1;
    double eps = 1e-6;
};

void add_som_options(CLI::App* cmd, SomOptions& opts) {
    cmd->add_option("-j,--clusters", opts.clusters, "number of clusters")
        ->capture_default_str();
    cmd->add_option("-a,--alpha", opts.alpha, "initial learning rate")
        ->capture_default_str();
    cmd->add_option("-e,--epochs", opts.epochs, "maximum training epochs")
        ->capture_default_str();
    cmd->add_option("-s,--seed", opts.seed, "weight initialization seed")
        ->capture_default_str();
    cmd->add_option("--eps", opts.eps, "convergence threshold on max weight delta")
        ->capture_default_str();
}

SomConfig make_config(const SomOptions& opts, Eigen::Index dim) {
    SomConfig config;
    config.clusters = opts.clusters;
    config.dim = static_cast<int>(dim);
    config.initial_rate = opts.alpha;
    config.epochs = opts.epochs;
    config.seed = opts.seed;
    config.convergence_eps = opts.eps;
    return config;
}

FeatureMatrix extract_features(const DatasetManifest& manifest, const char* stage) {
    std::vector<std::pair<std::string, Eigen::VectorXd>> histograms;
    histograms.reserve(manifest.entries.size());
    std::size_t failures = 0;
    Errc first_code = Errc::missing_file;
    std::string first_path;
    for (const auto& entry : manifest.entries) {
        try {
            const RgbImage rgb = load_image(entry.path);
            histograms.emplace_back(entry.path, compute_histogram(rgb_to_gray(rgb)));
        } catch (const Error& e) {
            if (failures == 0) {
                first_code = e.code();
                first_path = entry.path;
            }
            ++failures;
            std::cerr << "somclass: " << stage << ": " << e.what() << "\n";
        }
    }
    if (failures > 0) {
        throw Error(first_code, std::to_string(failures) + " file(s) failed, first: " +
                                    first_path);
    }
    return assemble_matrix(histograms);
}

SelectionModel fit_selection(const FeatureMatrix& features, const std::string& method,
                             int k) {
    if (method == "pca") return fit_pca(features, k);
    return fit_lsa(features, k);
}

std::vector<int> labels_for(const FeatureMatrix& features,
                            const DatasetManifest& manifest) {
    std::vector<int> labels;
    labels.reserve(features.ids.size());
    for (const auto& id : features.ids) {
        bool found = false;
        for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
            if (manifest.entries[i].path == id) {
                labels.push_back(manifest.labels[i]);
                found = true;
                break;
            }
        }
        if (!found) {
            throw Error(Errc::bad_manifest,
                        "feature id '" + id + "' not present in the manifest");
        }
    }
    return labels;
}

ReportDocument evaluate_labels(const std::vector<int>& predicted,
                               const std::vector<int>& truth, int clusters,
                               const std::vector<std::string>& class_names) {
    ReportDocument doc;
    doc.cm = confusion(predicted, truth, clusters,
                       static_cast<int>(class_names.size()), class_names);
    const ClusterMapping mapping = map_clusters(doc.cm);
    doc.report = accuracy(doc.cm, mapping);
    return doc;
}

void write_trace(const std::vector<EpochTrace>& trace,
                 const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot write trace " + path.string());
    }
    out << "epoch,rate,max_delta,wins...\n";
    for (const auto& rec : trace) {
        out << rec.epoch << "," << format_double(rec.rate) << ","
            << format_double(rec.max_delta);
        for (const long w : rec.wins) out << "," << w;
        out << "\n";
    }
    if (!out) {
        throw Error(Errc::io_error, "write failed for " + path.string());
    }
}

void emit_report(const ReportDocument& doc, const std::string& out_prefix) {
    write_report_csv(doc, out_prefix + ".report.csv");
    std::ofstream txt(out_prefix + ".report.txt", std::ios::binary);
    if (!txt) {
        throw Error(Errc::io_error, "cannot write " + out_prefix + ".report.txt");
    }
    const std::string text = render_text(doc);
    txt << text;
    if (!txt) {
        throw Error(Errc::io_error, "write failed for " + out_prefix + ".report.txt");
    }
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"image-collection clustering: histograms, PCA/LSA selection, "
                 "winner-take-all SOM, accuracy evaluation"};
    app.require_subcommand(1);

    // extract
    std::string manifest_path;
    std::string out_path;
    auto* extract = app.add_subcommand("extract", "decode images and cache histograms");
    extract->add_option("-m,--manifest", manifest_path, "dataset manifest")->required();
    extract->add_option("-o,--out", out_path, "histogram cache to write")->required();

    // select
    std::string cache_path;
    std::string method = "pca";
    int k = 100;
    auto* select = app.add_subcommand("select", "fit a pca/lsa selection model");
    select->add_option("-c,--cache", cache_path, "histogram cache")->required();
    select->add_option("--method", method, "selection method")
        ->check(CLI::IsMember({"pca", "lsa"}))
        ->required();
    select->add_option("-k,--k", k, "retained dimension")->required();
    select->add_option("-o,--out", out_path, "model file to write")->required();

    // train
    std::string model_path;
    std::string trace_path;
    SomOptions train_opts;
    auto* train_cmd = app.add_subcommand("train", "train the SOM on projected features");
    train_cmd->add_option("-c,--cache", cache_path, "histogram cache")->required();
    train_cmd->add_option("--model", model_path, "selection model")->required();
    train_cmd->add_option("-o,--out", out_path, "SOM model file to write")->required();
    train_cmd->add_option("--trace", trace_path, "optional per-epoch trace CSV");
    add_som_options(train_cmd, train_opts);

    // evaluate
    std::string som_path;
    auto* evaluate = app.add_subcommand("evaluate", "score cluster assignments");
    evaluate->add_option("-c,--cache", cache_path, "histogram cache")->required();
    evaluate->add_option("--model", model_path, "selection model")->required();
    evaluate->add_option("--som", som_path, "trained SOM model")->required();
    evaluate->add_option("-m,--manifest", manifest_path, "manifest with true classes")
        ->required();
    evaluate->add_option("-o,--out", out_path, "output prefix for report files")
        ->required();

    // pipeline
    SomOptions pipe_opts;
    auto* pipeline = app.add_subcommand("pipeline", "run extract/select/train/evaluate");
    pipeline->add_option("-m,--manifest", manifest_path, "dataset manifest")->required();
    pipeline->add_option("-c,--cache", cache_path,
                         "histogram cache to use instead of decoding images");
    pipeline->add_option("--method", method, "selection method")
        ->check(CLI::IsMember({"pca", "lsa"}))
        ->required();
    pipeline->add_option("-k,--k", k, "retained dimension")->required();
    pipeline->add_option("-o,--out", out_path, "output prefix")->required();
    add_som_options(pipeline, pipe_opts);

    // synth
    SynthSpec synth_spec;
    synth_spec.noise = 0.002;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic labeled corpus");
    synth_cmd->add_option("--classes", synth_spec.classes, "class count")
        ->capture_default_str();
    synth_cmd->add_option("--per-class", synth_spec.per_class, "samples per class")
        ->capture_default_str();
    synth_cmd->add_option("--dim", synth_spec.dim, "feature dimension")
        ->capture_default_str();
    synth_cmd->add_option("--separation", synth_spec.separation,
                          "required minimum inter-centroid distance")
        ->capture_default_str();
    synth_cmd->add_option("--noise", synth_spec.noise, "per-bin jitter amplitude")
        ->capture_default_str();
    synth_cmd->add_option("-s,--seed", synth_spec.seed, "generator seed")
        ->capture_default_str();
    synth_cmd->add_option("-o,--out", out_path, "output prefix")->required();

    // report
    std::string in_path;
    auto* report_cmd = app.add_subcommand("report", "render a saved report CSV");
    report_cmd->add_option("--in", in_path, "report CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*extract) {
            const DatasetManifest manifest = load_manifest(manifest_path);
            write_cache(extract_features(manifest, "extract"), out_path);
        } else if (*select) {
            const FeatureMatrix features = read_cache(cache_path);
            const SelectionModel model = fit_selection(features, method, k);
            std::visit([&](const auto& m) { save_model(m, out_path); }, model);
        } else if (*train_cmd) {
            const FeatureMatrix features = read_cache(cache_path);
            const SelectionModel selection = load_selection_model(model_path);
            const FeatureMatrix projected = project(selection, features);
            std::vector<EpochTrace> trace;
            const SomModel som =
                train(projected.values, make_config(train_opts, projected.rows()),
                      trace_path.empty() ? nullptr : &trace);
            save_model(som, out_path);
            if (!trace_path.empty()) write_trace(trace, trace_path);
        } else if (*evaluate) {
            const FeatureMatrix features = read_cache(cache_path);
            const DatasetManifest manifest = load_manifest(manifest_path);
            const SelectionModel selection = load_selection_model(model_path);
            const FeatureMatrix projected = project(selection, features);
            const SomModel som = load_som_model(som_path);
            const std::vector<int> predicted = assign(som, projected.values);
            const ReportDocument doc =
                evaluate_labels(predicted, labels_for(features, manifest),
                                static_cast<int>(som.weights.rows()),
                                manifest.class_names);
            emit_report(doc, out_path);
        } else if (*pipeline) {
            const DatasetManifest manifest = load_manifest(manifest_path);
            const FeatureMatrix features = cache_path.empty()
                                               ? extract_features(manifest, "pipeline")
                                               : read_cache(cache_path);
            const SelectionModel selection = fit_selection(features, method, k);
            std::visit([&](const auto& m) { save_model(m, out_path + ".selection.json"); },
                       selection);
            const FeatureMatrix projected = project(selection, features);
            const SomModel som =
                train(projected.values, make_config(pipe_opts, projected.rows()));
            save_model(som, out_path + ".som.json");
            const std::vector<int> predicted = assign(som, projected.values);
            const ReportDocument doc =
                evaluate_labels(predicted, labels_for(features, manifest),
                                static_cast<int>(som.weights.rows()),
                                manifest.class_names);
            emit_report(doc, out_path);
        } else if (*synth_cmd) {
            const SynthDataset data = generate(synth_spec);
            write_cache(data.features, out_path + ".cache");
            DatasetManifest manifest;
            for (std::size_t i = 0; i < data.features.ids.size(); ++i) {
                manifest.entries.push_back(
                    {data.features.ids[i],
                     data.class_names[static_cast<std::size_t>(data.labels[i])]});
            }
            write_manifest(manifest, out_path + ".manifest");
        } else if (*report_cmd) {
            std::cout << render_text(read_report_csv(in_path));
        }
    } catch (const Error& e) {
        std::cerr << "somclass: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "somclass: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
