#ifndef MRNAOPT_RUN_IO_HPP
#define MRNAOPT_RUN_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "mrnaopt/fasta.hpp"
#include "mrnaopt/ga.hpp"

namespace mrnaopt {

/// Flat key-value run configuration ("key = value", '#' comments).
/// Unknown keys are hard errors; referenced paths are checked at load.
struct RunConfig {
    ProteinSequence target;
    NucleicSequence utr5, utr3;        // may be empty
    NucleicSequence reference_cds;     // empty -> usage-argmax rendering of the target
    std::string import_fasta;          // optional initial population

    std::string usage_table_path;      // empty -> bundled human table
    std::string tai_table_path;        // empty -> bundled human table
    std::string cps_table_path;        // empty -> neutral table
    std::string energy_model_path;     // empty -> bundled model

    std::string backend = "builtin";   // builtin | external
    std::string external_cmd;
    std::size_t fold_max_len = 2000;
    bool allow_long_fold = false;
    int window_radius = 30;
    double upa_weight = 1.0;

    GaConfig ga;

    std::string out_dir = "out";
    int top_k = 10;

    static RunConfig load(const std::string& path);
    static RunConfig parse(const std::string& text, const std::string& base_dir);
    void validate() const;
};

/// Tables plus folding backend assembled from a RunConfig; the caching
/// wrapper is shared by every evaluation of the run.
class RunEnvironment {
public:
    explicit RunEnvironment(const RunConfig& cfg);

    const EvalContext& context() const { return ctx_; }
    const MetricTables& tables() const { return ctx_.tables; }
    const Folder& folder() const { return *caching_; }

private:
    std::unique_ptr<Folder> base_;
    std::unique_ptr<CachingFolder> caching_;
    EvalContext ctx_;
};

struct ScoreRow {
    std::string name;
    MetricVector metrics;
    NormalizedScores normalized;
    double fitness = 0.0;
};

struct ScoreOutcome {
    std::vector<ScoreRow> rows;
    std::vector<std::string> errors; // "name: reason" per invalid record
};

/// Evaluate named CDS records against the run configuration. Invalid
/// records are reported per record, valid ones still produce rows.
ScoreOutcome score_sequences(const std::vector<std::pair<std::string, std::string>>& records,
                             const RunConfig& cfg, const RunEnvironment& env);

std::string score_table_text(const std::vector<ScoreRow>& rows);
void write_score_csv(const std::string& path, const std::vector<ScoreRow>& rows);

struct OptimizeOutcome {
    RunResult result;
    std::filesystem::path out_dir;
    std::vector<std::string> import_drops; // reasons for discarded FASTA records
};

/// Full optimization pipeline: build the environment, run the GA, write
/// generations.csv, report.json, topk.fasta, per-candidate .dbn files and
/// radar.csv into cfg.out_dir.
OptimizeOutcome run_optimize(const RunConfig& cfg, std::ostream* log = nullptr);

// artifact writers (used by run_optimize; exposed for tests)
void write_generations_csv(const std::string& path, const std::vector<GenerationStats>& stats);
std::string generations_csv_header();

} // namespace mrnaopt

#endif
