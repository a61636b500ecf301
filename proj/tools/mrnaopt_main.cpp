#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "mrnaopt/run_io.hpp"

using namespace mrnaopt;

namespace {

RunConfig load_config_or_default(const std::string& path) {
    return path.empty() ? RunConfig{} : RunConfig::load(path);
}

std::vector<std::pair<std::string, std::string>> gather_records(const std::string& seq_literal,
                                                                const std::string& fasta_path) {
    std::vector<std::pair<std::string, std::string>> records;
    if (!seq_literal.empty())
        records.emplace_back("seq", seq_literal);
    if (!fasta_path.empty()) {
        auto file_records = parse_fasta(fasta_path);
        records.insert(records.end(), file_records.begin(), file_records.end());
    }
    if (records.empty())
        throw std::runtime_error("provide --seq and/or --fasta");
    return records;
}

int cmd_score(const std::string& config_path, const std::string& seq, const std::string& fasta,
              const std::string& csv, const std::string& backend) {
    RunConfig cfg = load_config_or_default(config_path);
    if (!backend.empty())
        cfg.backend = backend;
    cfg.validate();
    RunEnvironment env(cfg);

    auto outcome = score_sequences(gather_records(seq, fasta), cfg, env);
    std::cout << score_table_text(outcome.rows);
    if (!csv.empty())
        write_score_csv(csv, outcome.rows);
    for (const auto& e : outcome.errors)
        std::cerr << "error: " << e << '\n';
    return outcome.errors.empty() ? 0 : 1;
}

int cmd_optimize(const std::string& config_path, long long seed_override, const std::string& out,
                 int top_k, const std::string& backend, bool quiet) {
    RunConfig cfg = RunConfig::load(config_path);
    if (seed_override >= 0)
        cfg.ga.rng_seed = static_cast<std::uint64_t>(seed_override);
    if (!out.empty())
        cfg.out_dir = out;
    if (top_k > 0)
        cfg.top_k = top_k;
    if (!backend.empty())
        cfg.backend = backend;
    cfg.validate();

    OptimizeOutcome outcome = run_optimize(cfg, quiet ? nullptr : &std::cerr);
    const auto& stats = outcome.result.stats;
    std::cout << "generations: " << stats.size()
              << (outcome.result.plateau_stopped ? " (plateau stop)" : "") << '\n';
    if (!stats.empty()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", stats.back().fitness_max);
        std::cout << "best fitness: " << buf << '\n';
    }
    std::cout << "artifacts: " << outcome.out_dir.string() << '\n';
    return 0;
}

int cmd_fold(const std::string& seq, const std::string& fasta, const std::string& backend,
             const std::string& cmd, const std::string& energy_model_path, std::size_t max_len,
             bool allow_long) {
    std::unique_ptr<Folder> folder;
    if (backend == "external") {
        if (cmd.empty())
            throw std::runtime_error("--backend external requires --cmd");
        folder = std::make_unique<ExternalFolder>(ExternalFolderConfig{cmd});
    } else {
        EnergyModel model = energy_model_path.empty() ? EnergyModel::bundled()
                                                      : EnergyModel::load(energy_model_path);
        folder = std::make_unique<BuiltinFolder>(std::move(model), max_len, allow_long);
    }

    for (const auto& [name, text] : gather_records(seq, fasta)) {
        NucleicSequence s = NucleicSequence::from_any(text);
        SecondaryStructure structure = folder->fold(s);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", structure.energy.value_or(0.0));
        if (name != "seq")
            std::cout << '>' << name << '\n';
        std::cout << s.to_rna().str() << '\n' << structure.dot_bracket << " (" << buf << ")\n";
    }
    return 0;
}

int cmd_seed(const std::string& target_literal, const std::string& target_fasta, int n,
             const std::string& usage_path, long long seed, const std::string& out_fasta) {
    ProteinSequence target;
    if (!target_literal.empty()) {
        target = ProteinSequence(target_literal);
    } else if (!target_fasta.empty()) {
        auto records = parse_fasta(target_fasta);
        if (records.size() != 1)
            throw std::runtime_error("--target-fasta must hold exactly one protein record");
        target = ProteinSequence(records[0].second);
    } else {
        throw std::runtime_error("provide --target or --target-fasta");
    }

    CodonUsageTable usage =
        usage_path.empty() ? CodonUsageTable::bundled_human() : CodonUsageTable::load(usage_path);

    // same stream as an optimize run's initial population with this seed
    RngStream rng = RngStream::derive(static_cast<std::uint64_t>(seed), 0, 0);
    Population pop = seed_population(target, usage, n, rng);

    std::vector<std::pair<std::string, std::string>> records;
    for (std::size_t i = 0; i < pop.size(); ++i)
        records.emplace_back("seed_" + std::to_string(i + 1), pop[i].cds.dna());
    if (out_fasta.empty()) {
        for (const auto& [h, s] : records)
            std::cout << '>' << h << '\n' << s << '\n';
    } else {
        write_fasta(out_fasta, records);
        std::cout << "wrote " << records.size() << " records to " << out_fasta << '\n';
    }
    return 0;
}

int cmd_build_cps(const std::string& fasta, const std::string& out_table, double pseudocount) {
    auto records = parse_fasta(fasta);
    std::vector<NucleicSequence> corpus;
    for (const auto& [name, text] : records) {
        try {
            corpus.push_back(NucleicSequence::from_any(text).to_dna());
        } catch (const std::exception& e) {
            throw std::runtime_error(name + ": " + e.what());
        }
    }
    CodonPairTable table = CodonPairTable::build(corpus, pseudocount);
    table.save(out_table);
    std::cout << "wrote codon-pair table (" << table.pair_count_total()
              << " observed pairs) to " << out_table << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-objective codon optimization for mRNA coding sequences"};
    app.require_subcommand(1);

    // score
    auto* score = app.add_subcommand("score", "evaluate metrics and fitness for CDS inputs");
    std::string score_config, score_seq, score_fasta, score_csv, score_backend;
    score->add_option("--config", score_config, "run configuration file");
    score->add_option("--seq", score_seq, "CDS literal");
    score->add_option("--fasta", score_fasta, "FASTA of CDS records");
    score->add_option("--csv", score_csv, "also write the rows as CSV");
    score->add_option("--backend", score_backend, "folding backend")
        ->check(CLI::IsMember({"builtin", "external"}));

    // optimize
    auto* optimize = app.add_subcommand("optimize", "run the generational optimizer");
    std::string opt_config, opt_out, opt_backend;
    long long opt_seed = -1;
    int opt_topk = 0;
    bool opt_quiet = false;
    optimize->add_option("--config", opt_config, "run configuration file")->required();
    optimize->add_option("--seed", opt_seed, "override rng_seed");
    optimize->add_option("--out", opt_out, "override the output directory");
    optimize->add_option("--top-k", opt_topk, "override top_k");
    optimize->add_option("--backend", opt_backend, "folding backend")
        ->check(CLI::IsMember({"builtin", "external"}));
    optimize->add_flag("--quiet", opt_quiet, "suppress per-generation progress");

    // fold
    auto* fold = app.add_subcommand("fold", "predict a secondary structure");
    std::string fold_seq, fold_fasta, fold_backend = "builtin", fold_cmd, fold_model;
    std::size_t fold_max_len = 2000;
    bool fold_allow_long = false;
    fold->add_option("--seq", fold_seq, "sequence literal");
    fold->add_option("--fasta", fold_fasta, "FASTA of sequences");
    fold->add_option("--backend", fold_backend, "folding backend")
        ->check(CLI::IsMember({"builtin", "external"}));
    fold->add_option("--cmd", fold_cmd, "external engine command (reads stdin)");
    fold->add_option("--energy-model", fold_model, "energy model file (default: bundled)");
    fold->add_option("--max-len", fold_max_len, "builtin DP length cap");
    fold->add_flag("--allow-long", fold_allow_long, "fold past the length cap");

    // seed
    auto* seed = app.add_subcommand("seed", "sample usage-weighted candidate CDSs");
    std::string seed_target, seed_target_fasta, seed_usage, seed_out;
    int seed_n = 220;
    long long seed_seed = 1;
    seed->add_option("--target", seed_target, "protein literal");
    seed->add_option("--target-fasta", seed_target_fasta, "FASTA with one protein record");
    seed->add_option("--n", seed_n, "number of candidates");
    seed->add_option("--usage", seed_usage, "usage table (default: bundled)");
    seed->add_option("--seed", seed_seed, "rng seed");
    seed->add_option("--out-fasta", seed_out, "output FASTA (default: stdout)");

    // corpus build-cps
    auto* corpus = app.add_subcommand("corpus", "reference-corpus utilities");
    auto* build_cps = corpus->add_subcommand("build-cps", "build a codon-pair score table");
    std::string cps_fasta, cps_out;
    double cps_pseudocount = 0.5;
    build_cps->add_option("--fasta", cps_fasta, "corpus FASTA of CDSs")->required();
    build_cps->add_option("--out-table", cps_out, "output table path")->required();
    build_cps->add_option("--pseudocount", cps_pseudocount, "pair-count smoothing");
    corpus->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (score->parsed())
            return cmd_score(score_config, score_seq, score_fasta, score_csv, score_backend);
        if (optimize->parsed())
            return cmd_optimize(opt_config, opt_seed, opt_out, opt_topk, opt_backend, opt_quiet);
        if (fold->parsed())
            return cmd_fold(fold_seq, fold_fasta, fold_backend, fold_cmd, fold_model,
                            fold_max_len, fold_allow_long);
        if (seed->parsed())
            return cmd_seed(seed_target, seed_target_fasta, seed_n, seed_usage, seed_seed,
                            seed_out);
        if (corpus->parsed() && build_cps->parsed())
            return cmd_build_cps(cps_fasta, cps_out, cps_pseudocount);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
