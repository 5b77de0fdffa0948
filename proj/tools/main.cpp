#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maintlab/analyzer.hpp"
#include "maintlab/csv.hpp"
#include "maintlab/harness.hpp"
#include "maintlab/language.hpp"
#include "maintlab/report.hpp"
#include "maintlab/svg.hpp"

namespace fs = std::filesystem;
using namespace maintlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << contents;
}

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("missing input: " + path.string() + " (run `analyze` first?)");
    return in;
}

struct AnalyzeOptions {
    std::string corpus;
    std::string out_dir;
    std::string catalog_path;
    double cost_per_line = kDefaultCostPerLine;
    std::string cc_aggregate = "sum";
    bool strict = false;
    int jobs = 1;
};

struct BenchOptionsCli {
    std::string out_dir;
    std::string labels_path;
    std::string catalog_path;
    std::string approaches = "A,B,C,D,E,F,G";
    std::string predictions_path;
    double cost_per_line = kDefaultCostPerLine;
    int estimators = 150;
    double learning_rate = 0.5;
    int folds = 5;
    std::uint64_t seed = 42;
};

RuleCatalog load_catalog(const std::string& path) {
    return path.empty() ? RuleCatalog::defaults() : RuleCatalog::load_file(path);
}

std::vector<SourceUnit> collect_corpus(const fs::path& root) {
    if (!fs::is_directory(root)) throw DataError("corpus root is not a directory: " + root.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        const fs::path rel = entry.path().lexically_relative(root);
        if (!language_for_path(rel.generic_string()).empty()) files.push_back(rel);
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.generic_string() < b.generic_string();
              });
    if (files.empty()) throw DataError("no supported source files under " + root.string());

    std::vector<SourceUnit> units;
    units.reserve(files.size());
    for (const fs::path& rel : files) {
        SourceUnit unit;
        unit.path = rel.generic_string();
        unit.project = rel.has_parent_path() ? rel.begin()->generic_string()
                                             : root.filename().generic_string();
        unit.language = language_for_path(unit.path);
        unit.text = read_file(root / rel);
        units.push_back(std::move(unit));
    }
    return units;
}

CcAggregate parse_aggregate(const std::string& name) {
    if (name == "sum") return CcAggregate::Sum;
    if (name == "max") return CcAggregate::Max;
    if (name == "mean") return CcAggregate::Mean;
    throw DataError("unknown --cc-aggregate: " + name + " (want sum|max|mean)");
}

int run_analyze(const AnalyzeOptions& opts) {
    AnalyzerConfig config;
    config.catalog = load_catalog(opts.catalog_path);
    config.cost_per_line = opts.cost_per_line;
    config.cc_aggregate = parse_aggregate(opts.cc_aggregate);

    const std::vector<SourceUnit> units = collect_corpus(opts.corpus);
    const std::vector<FileAnalysis> analyses = analyze_corpus(units, config, opts.jobs);

    const fs::path out_dir(opts.out_dir);
    fs::create_directories(out_dir);
    auto emit = [&](const char* name, auto writer) {
        std::ostringstream buffer;
        writer(buffer);
        write_file(out_dir / name, buffer.str());
    };
    emit("metrics.csv", [&](std::ostream& o) { write_metrics_csv(o, analyses); });
    emit("metrics.jsonl", [&](std::ostream& o) { write_metrics_jsonl(o, analyses); });
    emit("findings.jsonl", [&](std::ostream& o) { write_findings_jsonl(o, analyses); });
    emit("sqale.csv", [&](std::ostream& o) { write_sqale_csv(o, analyses); });
    emit("sqale.jsonl", [&](std::ostream& o) { write_sqale_jsonl(o, analyses); });
    emit("health.csv", [&](std::ostream& o) { write_health_csv(o, analyses); });
    emit("health.jsonl", [&](std::ostream& o) { write_health_jsonl(o, analyses); });
    emit("features.csv",
         [&](std::ostream& o) { write_features_csv(o, analyses, config.catalog); });
    emit("diagnostics.jsonl", [&](std::ostream& o) { write_diagnostics_jsonl(o, analyses); });

    int failed = 0;
    for (const FileAnalysis& a : analyses) {
        if (a.status != AnalysisStatus::Ok) {
            ++failed;
            std::cerr << "warning: " << a.path << ": "
                      << (a.diagnostics.empty() ? "analysis failed" : a.diagnostics.back())
                      << '\n';
        }
    }
    std::cout << "analyzed " << analyses.size() << " files (" << failed << " with diagnostics) -> "
              << out_dir.string() << '\n';
    if (opts.strict && failed > 0) {
        std::cerr << "error: " << failed << " files unanalyzable under --strict\n";
        return kExitData;
    }
    return kExitOk;
}

std::pair<AlignedCorpus, BenchOutcome> run_benchmark(const BenchOptionsCli& opts) {
    const fs::path out_dir(opts.out_dir);
    auto metrics = open_input(out_dir / "metrics.csv");
    auto sqale_in = open_input(out_dir / "sqale.csv");
    auto health_in = open_input(out_dir / "health.csv");
    auto features_in = open_input(out_dir / "features.csv");
    const MetricTable table =
        read_metric_table(metrics, sqale_in, health_in, features_in, opts.cost_per_line);

    const std::vector<GroundTruthLabel> labels = load_labels_file(opts.labels_path);
    if (labels.empty()) throw DataError("labels file has no rows: " + opts.labels_path);
    const AlignedCorpus corpus = align_corpus(table, labels);
    for (const std::string& path : corpus.unlabeled) {
        std::cerr << "note: analyzed but unlabeled, excluded from evaluation: " << path << '\n';
    }

    BenchOptions options;
    std::stringstream ids(opts.approaches);
    std::string id;
    while (std::getline(ids, id, ',')) {
        if (id.empty()) continue;
        if (id.size() != 1 || id[0] < 'A' || id[0] > 'G') {
            throw DataError("unknown approach id '" + id + "' (expected A..G)");
        }
        options.approaches.insert(id);
    }
    options.learner.n_estimators = opts.estimators;
    options.learner.learning_rate = opts.learning_rate;
    options.learner.folds = opts.folds;
    options.learner.seed = opts.seed;

    if (!opts.predictions_path.empty()) {
        std::ifstream in(opts.predictions_path);
        if (!in) throw DataError("cannot read predictions: " + opts.predictions_path);
        const auto predictions = read_predictions_csv(in);
        std::map<std::string, double> by_path(predictions.begin(), predictions.end());
        std::vector<double> scores;
        scores.reserve(corpus.paths.size());
        std::vector<std::string> missing;
        for (const std::string& path : corpus.paths) {
            const auto it = by_path.find(path);
            if (it == by_path.end()) {
                missing.push_back(path);
            } else {
                scores.push_back(it->second);
            }
        }
        if (!missing.empty()) throw PathMismatchError(std::move(missing));
        options.external_scores = std::move(scores);
    }
    return {corpus, run_bench(corpus, options)};
}

void print_table(const std::vector<EvalReport>& rows) {
    std::ostringstream out;
    write_report_csv(out, rows);
    std::istringstream lines(out.str());
    std::string line;
    std::vector<std::vector<std::string>> grid;
    while (std::getline(lines, line)) grid.push_back(csv::split_row(line));
    std::vector<std::size_t> width;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c >= width.size()) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::cout << (c == 0 ? "" : "  ") << row[c]
                      << std::string(width[c] - row[c].size(), ' ');
        }
        std::cout << '\n';
    }
}

int run_bench_cmd(const BenchOptionsCli& opts) {
    const auto [corpus, outcome] = run_benchmark(opts);
    const fs::path out_dir(opts.out_dir);
    {
        std::ostringstream buffer;
        write_report_csv(buffer, outcome.rows);
        write_file(out_dir / "report.csv", buffer.str());
    }
    if (!outcome.learner_scores.empty() && opts.predictions_path.empty()) {
        std::ostringstream buffer;
        write_predictions_csv(buffer, corpus.paths, outcome.learner_scores);
        write_file(out_dir / "predictions_A.csv", buffer.str());
    }
    print_table(outcome.rows);
    return kExitOk;
}

int run_roc_cmd(const BenchOptionsCli& opts) {
    const auto [corpus, outcome] = run_benchmark(opts);
    const fs::path out_dir(opts.out_dir);

    const std::vector<ApproachSpec> specs = default_approaches();
    for (UseCase uc : {UseCase::UC1, UseCase::UC2}) {
        const auto& curves = uc == UseCase::UC1 ? outcome.uc1_curves : outcome.uc2_curves;
        const auto& stars = uc == UseCase::UC1 ? outcome.uc1_stars : outcome.uc2_stars;
        const char* base = uc == UseCase::UC1 ? "roc_uc1" : "roc_uc2";
        {
            std::ostringstream buffer;
            write_roc_csv(buffer, curves);
            write_file(out_dir / (std::string(base) + ".csv"), buffer.str());
        }
        std::map<std::string, SvgCurveInput> inputs;
        for (const auto& [id, curve] : curves) {
            SvgCurveInput input;
            const ApproachSpec* spec = find_approach(specs, id);
            input.label = id + " " + (spec != nullptr ? spec->name : id);
            input.curve = &curve;
            const auto star = stars.find(id);
            if (star != stars.end()) input.star = star->second;
            inputs[id] = input;
        }
        const std::string title = uc == UseCase::UC1 ? "ROC - UC1 maintainability prediction"
                                                     : "ROC - UC2 liability prediction";
        write_file(out_dir / (std::string(base) + ".svg"), render_roc_svg(inputs, title));
    }
    std::cout << "wrote ROC tables and plots for " << outcome.uc1_curves.size()
              << " approaches -> " << out_dir.string() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maintlab - maintainability metrics, smells, and benchmark harness"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_opts;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a source corpus into CSV/JSONL");
    analyze->add_option("--corpus", analyze_opts.corpus, "corpus root directory")->required();
    analyze->add_option("--out", analyze_opts.out_dir, "output directory")->required();
    analyze->add_option("--catalog", analyze_opts.catalog_path, "rule catalog JSON");
    analyze->add_option("--cost-per-line", analyze_opts.cost_per_line,
                        "development cost minutes per code line");
    analyze->add_option("--cc-aggregate", analyze_opts.cc_aggregate,
                        "complexity aggregate for the index: sum|max|mean");
    analyze->add_flag("--strict", analyze_opts.strict, "fail when any file is unanalyzable");
    analyze->add_option("--jobs", analyze_opts.jobs, "worker threads")->check(CLI::Range(1, 256));

    BenchOptionsCli bench_opts;
    auto add_bench_options = [&](CLI::App* cmd) {
        cmd->add_option("--out", bench_opts.out_dir,
                        "directory with analyze outputs; reports land here too")
            ->required();
        cmd->add_option("--labels", bench_opts.labels_path, "ground truth CSV")->required();
        cmd->add_option("--approaches", bench_opts.approaches, "comma-separated ids (A..G)");
        cmd->add_option("--predictions", bench_opts.predictions_path,
                        "external path,score CSV used for approach A");
        cmd->add_option("--cost-per-line", bench_opts.cost_per_line,
                        "must match the analyze run");
        cmd->add_option("--estimators", bench_opts.estimators, "boosting rounds");
        cmd->add_option("--learning-rate", bench_opts.learning_rate, "boosting learning rate");
        cmd->add_option("--folds", bench_opts.folds, "cross-validation folds");
        cmd->add_option("--seed", bench_opts.seed, "cross-validation shuffle seed");
    };
    CLI::App* bench = app.add_subcommand("bench", "score all approaches against labels");
    add_bench_options(bench);
    CLI::App* roc = app.add_subcommand("roc", "threshold sweeps, ROC tables, and SVG plots");
    add_bench_options(roc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_opts);
        if (bench->parsed()) return run_bench_cmd(bench_opts);
        if (roc->parsed()) return run_roc_cmd(bench_opts);
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const AnalysisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
