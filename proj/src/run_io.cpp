#include "mrnaopt/run_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mrnaopt {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string fmt(double v, int precision = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': not a number: '" + value + "'");
    }
    if (used != value.size())
        throw std::runtime_error("config key '" + key + "': trailing junk in '" + value + "'");
    return v;
}

long parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(value, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': not an integer: '" + value + "'");
    }
    if (used != value.size())
        throw std::runtime_error("config key '" + key + "': trailing junk in '" + value + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1")
        return true;
    if (value == "false" || value == "0")
        return false;
    throw std::runtime_error("config key '" + key + "': expected true/false, got '" + value + "'");
}

std::string resolve_path(const std::string& base_dir, const std::string& value) {
    std::filesystem::path p(value);
    if (p.is_absolute() || base_dir.empty())
        return p.string();
    return (std::filesystem::path(base_dir) / p).string();
}

void require_readable(const std::string& key, const std::string& path) {
    if (!std::filesystem::exists(path))
        throw std::runtime_error("config key '" + key + "': path does not exist: " + path);
}

} // namespace

RunConfig RunConfig::parse(const std::string& text, const std::string& base_dir) {
    RunConfig cfg;
    std::string target_literal, target_fasta;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));

        if (key == "target") target_literal = value;
        else if (key == "target_fasta") target_fasta = resolve_path(base_dir, value);
        else if (key == "utr5") cfg.utr5 = value.empty() ? NucleicSequence{} : NucleicSequence(value);
        else if (key == "utr3") cfg.utr3 = value.empty() ? NucleicSequence{} : NucleicSequence(value);
        else if (key == "reference_cds")
            cfg.reference_cds = value.empty() ? NucleicSequence{} : NucleicSequence::from_any(value).to_dna();
        else if (key == "import_fasta") cfg.import_fasta = resolve_path(base_dir, value);
        else if (key == "usage_table") cfg.usage_table_path = resolve_path(base_dir, value);
        else if (key == "tai_table") cfg.tai_table_path = resolve_path(base_dir, value);
        else if (key == "cps_table") cfg.cps_table_path = resolve_path(base_dir, value);
        else if (key == "energy_model") cfg.energy_model_path = resolve_path(base_dir, value);
        else if (key == "backend") cfg.backend = value;
        else if (key == "external_cmd") cfg.external_cmd = value;
        else if (key == "fold_max_len") cfg.fold_max_len = static_cast<std::size_t>(parse_int(key, value));
        else if (key == "allow_long_fold") cfg.allow_long_fold = parse_bool(key, value);
        else if (key == "window_radius") cfg.window_radius = static_cast<int>(parse_int(key, value));
        else if (key == "upa_weight") cfg.upa_weight = parse_double(key, value);
        else if (key == "out_dir") cfg.out_dir = resolve_path(base_dir, value);
        else if (key == "top_k") cfg.top_k = static_cast<int>(parse_int(key, value));
        else if (key == "pop_init") cfg.ga.pop_init = static_cast<int>(parse_int(key, value));
        else if (key == "pop_cap") cfg.ga.pop_cap = static_cast<int>(parse_int(key, value));
        else if (key == "growth_step") cfg.ga.growth_step = static_cast<int>(parse_int(key, value));
        else if (key == "mutation_rate") cfg.ga.mutation_rate = parse_double(key, value);
        else if (key == "per_codon_rate") cfg.ga.per_codon_rate = parse_double(key, value);
        else if (key == "crossover_rate") cfg.ga.crossover_rate = parse_double(key, value);
        else if (key == "tournament_size") cfg.ga.tournament_size = static_cast<int>(parse_int(key, value));
        else if (key == "elitism") cfg.ga.elitism = static_cast<int>(parse_int(key, value));
        else if (key == "plateau_eps") cfg.ga.plateau_eps = parse_double(key, value);
        else if (key == "plateau_window") cfg.ga.plateau_window = static_cast<int>(parse_int(key, value));
        else if (key == "max_generations") cfg.ga.max_generations = static_cast<int>(parse_int(key, value));
        else if (key == "rng_seed") cfg.ga.rng_seed = static_cast<std::uint64_t>(parse_int(key, value));
        else if (key == "eval_threads") cfg.ga.eval_threads = static_cast<int>(parse_int(key, value));
        else if (key == "weight_cai") cfg.ga.weights.cai = parse_double(key, value);
        else if (key == "weight_tai") cfg.ga.weights.tai = parse_double(key, value);
        else if (key == "weight_cpb") cfg.ga.weights.cpb = parse_double(key, value);
        else if (key == "weight_mfe_global") cfg.ga.weights.mfe_global = parse_double(key, value);
        else if (key == "weight_unpaired30") cfg.ga.weights.unpaired30 = parse_double(key, value);
        else if (key == "weight_gc") cfg.ga.weights.gc = parse_double(key, value);
        else if (key == "weight_immune") cfg.ga.weights.immune = parse_double(key, value);
        else if (key == "weight_utr_balance") cfg.ga.weights.utr_balance = parse_double(key, value);
        else if (key == "weight_motif") cfg.ga.weights.motif = parse_double(key, value);
        else if (key == "weight_embed") cfg.ga.weights.embed = parse_double(key, value);
        else if (key == "gc_band_lo") cfg.ga.bands.gc_lo = parse_double(key, value);
        else if (key == "gc_band_hi") cfg.ga.bands.gc_hi = parse_double(key, value);
        else if (key == "gc_falloff") cfg.ga.bands.gc_falloff = parse_double(key, value);
        else if (key == "mfe_band_lo") cfg.ga.bands.mfe_lo = parse_double(key, value);
        else if (key == "mfe_band_hi") cfg.ga.bands.mfe_hi = parse_double(key, value);
        else if (key == "mfe_falloff") cfg.ga.bands.mfe_falloff = parse_double(key, value);
        else if (key == "motif_band_lo") cfg.ga.bands.motif_lo = parse_double(key, value);
        else if (key == "motif_band_hi") cfg.ga.bands.motif_hi = parse_double(key, value);
        else if (key == "motif_falloff") cfg.ga.bands.motif_falloff = parse_double(key, value);
        else if (key == "utr_band_lo") cfg.ga.bands.utr_lo = parse_double(key, value);
        else if (key == "utr_band_hi") cfg.ga.bands.utr_hi = parse_double(key, value);
        else if (key == "utr_falloff") cfg.ga.bands.utr_falloff = parse_double(key, value);
        else if (key == "immune_max") cfg.ga.bands.immune_max = parse_double(key, value);
        else if (key == "cpb_scale") cfg.ga.bands.cpb_scale = parse_double(key, value);
        else
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
    }

    if (!target_literal.empty() && !target_fasta.empty())
        throw std::runtime_error("config sets both 'target' and 'target_fasta'");
    if (!target_literal.empty()) {
        cfg.target = ProteinSequence(target_literal);
    } else if (!target_fasta.empty()) {
        auto records = parse_fasta(target_fasta);
        if (records.size() != 1)
            throw std::runtime_error("target_fasta must hold exactly one protein record");
        cfg.target = ProteinSequence(records[0].second);
    }
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    // callers validate after applying command-line overrides
    return parse(os.str(), std::filesystem::path(path).parent_path().string());
}

void RunConfig::validate() const {
    if (target.size() > 0 && target.at(0) != 'M')
        throw std::runtime_error("target protein must begin with M");
    if (backend != "builtin" && backend != "external")
        throw std::runtime_error("backend must be 'builtin' or 'external', got '" + backend + "'");
    if (backend == "external" && external_cmd.empty())
        throw std::runtime_error("backend 'external' requires external_cmd");
    if (top_k < 1)
        throw std::runtime_error("top_k must be positive");
    if (window_radius < 1)
        throw std::runtime_error("window_radius must be positive");
    for (const auto& [key, path] :
         {std::pair<std::string, std::string>{"usage_table", usage_table_path},
          {"tai_table", tai_table_path},
          {"cps_table", cps_table_path},
          {"energy_model", energy_model_path},
          {"import_fasta", import_fasta}})
        if (!path.empty())
            require_readable(key, path);
    if (!reference_cds.empty()) {
        CdsReport report = validate_cds(reference_cds);
        if (!report.valid())
            throw std::runtime_error("reference_cds is not a valid CDS: " + report.describe());
    }
    ga.validate();
}

RunEnvironment::RunEnvironment(const RunConfig& cfg) {
    ctx_.tables.usage = cfg.usage_table_path.empty() ? CodonUsageTable::bundled_human()
                                                     : CodonUsageTable::load(cfg.usage_table_path);
    ctx_.tables.adaptiveness = AdaptivenessTable::from_usage(ctx_.tables.usage);
    ctx_.tables.tai = cfg.tai_table_path.empty() ? TaiWeightTable::bundled_human()
                                                 : TaiWeightTable::load(cfg.tai_table_path);
    ctx_.tables.pairs = cfg.cps_table_path.empty() ? CodonPairTable::neutral()
                                                   : CodonPairTable::load(cfg.cps_table_path);

    if (cfg.backend == "external") {
        base_ = std::make_unique<ExternalFolder>(ExternalFolderConfig{cfg.external_cmd});
    } else {
        EnergyModel model = cfg.energy_model_path.empty() ? EnergyModel::bundled()
                                                          : EnergyModel::load(cfg.energy_model_path);
        base_ = std::make_unique<BuiltinFolder>(std::move(model), cfg.fold_max_len,
                                                cfg.allow_long_fold);
    }
    caching_ = std::make_unique<CachingFolder>(*base_);

    ctx_.folder = caching_.get();
    ctx_.utr5 = cfg.utr5;
    ctx_.utr3 = cfg.utr3;
    ctx_.eval.upa_weight = cfg.upa_weight;
    ctx_.eval.window_radius = cfg.window_radius;
    if (!cfg.reference_cds.empty())
        ctx_.eval.reference_cds = cfg.reference_cds;
    else if (cfg.target.size() > 0)
        ctx_.eval.reference_cds = preferred_codon_cds(cfg.target, ctx_.tables.usage);
    // else: score fills the reference per record
}

ScoreOutcome score_sequences(const std::vector<std::pair<std::string, std::string>>& records,
                             const RunConfig& cfg, const RunEnvironment& env) {
    ScoreOutcome out;
    for (const auto& [name, text] : records) {
        try {
            NucleicSequence cds = NucleicSequence::from_any(text).to_dna();
            CdsReport report = validate_cds(cds);
            if (!report.valid())
                throw std::runtime_error("invalid CDS: " + report.describe());

            ScoreRow row;
            row.name = name;
            Construct construct(cfg.utr5, cds, cfg.utr3);
            EvalConfig eval = env.context().eval;
            if (cfg.reference_cds.empty())
                eval.reference_cds = preferred_codon_cds(translate(cds).protein, env.tables().usage);
            row.metrics = evaluate_all(construct, env.tables(), env.folder(), eval);
            row.normalized = normalize_metrics(row.metrics, cfg.ga.bands);
            row.fitness = fitness(row.metrics, cfg.ga.weights, cfg.ga.bands);
            out.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            out.errors.push_back(name + ": " + e.what());
        }
    }
    return out;
}

namespace {

const char* kScoreColumns =
    "name\tcai\ttai\tcpb_raw\tgc\timmune_raw\tunpaired30\tmfe_global\tmfe_local\t"
    "utr_balance\tmotif_total\tembed_sim\tn_cai\tn_tai\tn_cpb\tn_mfe_global\t"
    "n_unpaired30\tn_gc\tn_immune\tn_utr_balance\tn_motif\tn_embed\tfitness";

std::string score_row_text(const ScoreRow& r, char sep) {
    std::ostringstream os;
    const MetricVector& m = r.metrics;
    const NormalizedScores& n = r.normalized;
    os << r.name << sep << fmt(m.cai) << sep << fmt(m.tai) << sep << fmt(m.cpb_raw) << sep
       << fmt(m.gc) << sep << fmt(m.immune_raw) << sep << fmt(m.unpaired30) << sep
       << fmt(m.mfe_global) << sep << fmt(m.mfe_local) << sep << fmt(m.utr_balance) << sep
       << m.motif_total << sep << fmt(m.embed_sim) << sep << fmt(n.cai) << sep << fmt(n.tai)
       << sep << fmt(n.cpb) << sep << fmt(n.mfe_global) << sep << fmt(n.unpaired30) << sep
       << fmt(n.gc) << sep << fmt(n.immune) << sep << fmt(n.utr_balance) << sep << fmt(n.motif)
       << sep << fmt(n.embed) << sep << fmt(r.fitness);
    return os.str();
}

} // namespace

std::string score_table_text(const std::vector<ScoreRow>& rows) {
    std::ostringstream os;
    os << kScoreColumns << '\n';
    for (const auto& r : rows)
        os << score_row_text(r, '\t') << '\n';
    return os.str();
}

void write_score_csv(const std::string& path, const std::vector<ScoreRow>& rows) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    std::string header = kScoreColumns;
    for (char& c : header)
        if (c == '\t')
            c = ',';
    out << header << '\n';
    for (const auto& r : rows)
        out << score_row_text(r, ',') << '\n';
}

std::string generations_csv_header() {
    return "generation,pop_size,fitness_mean,fitness_max,fitness_min,cai_mean,tai_mean,"
           "cpb_mean,gc_mean,immune_mean,unpaired30_mean,mfe_global_mean,mfe_local_mean,"
           "utr_balance_mean,motif_mean,embed_mean";
}

void write_generations_csv(const std::string& path, const std::vector<GenerationStats>& stats) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << generations_csv_header() << '\n';
    for (const auto& s : stats) {
        out << s.generation << ',' << s.pop_size << ',' << fmt(s.fitness_mean) << ','
            << fmt(s.fitness_max) << ',' << fmt(s.fitness_min) << ',' << fmt(s.means.cai) << ','
            << fmt(s.means.tai) << ',' << fmt(s.means.cpb_raw) << ',' << fmt(s.means.gc) << ','
            << fmt(s.means.immune_raw) << ',' << fmt(s.means.unpaired30) << ','
            << fmt(s.means.mfe_global) << ',' << fmt(s.means.mfe_local) << ','
            << fmt(s.means.utr_balance) << ',' << fmt(s.means.motif_total) << ','
            << fmt(s.means.embed_sim) << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

namespace {

json metrics_json(const MetricVector& m) {
    return json{{"cai", m.cai},
                {"tai", m.tai},
                {"cpb_raw", m.cpb_raw},
                {"gc", m.gc},
                {"immune_raw", m.immune_raw},
                {"unpaired30", m.unpaired30},
                {"mfe_global", m.mfe_global},
                {"mfe_local", m.mfe_local},
                {"utr_balance", m.utr_balance},
                {"motif_total", m.motif_total},
                {"embed_sim", m.embed_sim},
                {"utr_empty", m.utr_empty}};
}

json normalized_json(const NormalizedScores& n) {
    return json{{"cai", n.cai},
                {"tai", n.tai},
                {"cpb", n.cpb},
                {"mfe_global", n.mfe_global},
                {"unpaired30", n.unpaired30},
                {"gc", n.gc},
                {"immune", n.immune},
                {"utr_balance", n.utr_balance},
                {"motif", n.motif},
                {"embed", n.embed}};
}

json stats_json(const GenerationStats& s) {
    return json{{"generation", s.generation},
                {"pop_size", s.pop_size},
                {"fitness", json{{"mean", s.fitness_mean}, {"max", s.fitness_max}, {"min", s.fitness_min}}},
                {"means",
                 json{{"cai", s.means.cai},
                      {"tai", s.means.tai},
                      {"cpb_raw", s.means.cpb_raw},
                      {"gc", s.means.gc},
                      {"immune_raw", s.means.immune_raw},
                      {"unpaired30", s.means.unpaired30},
                      {"mfe_global", s.means.mfe_global},
                      {"mfe_local", s.means.mfe_local},
                      {"utr_balance", s.means.utr_balance},
                      {"motif_total", s.means.motif_total},
                      {"embed_sim", s.means.embed_sim}}}};
}

json config_json(const RunConfig& cfg) {
    const FitnessWeights& w = cfg.ga.weights;
    const Bands& b = cfg.ga.bands;
    return json{
        {"target", cfg.target.str()},
        {"utr5", cfg.utr5.empty() ? "" : cfg.utr5.dna()},
        {"utr3", cfg.utr3.empty() ? "" : cfg.utr3.dna()},
        {"backend", cfg.backend},
        {"top_k", cfg.top_k},
        {"window_radius", cfg.window_radius},
        {"upa_weight", cfg.upa_weight},
        {"ga",
         json{{"pop_init", cfg.ga.pop_init},
              {"pop_cap", cfg.ga.pop_cap},
              {"growth_step", cfg.ga.growth_step},
              {"mutation_rate", cfg.ga.mutation_rate},
              {"per_codon_rate", cfg.ga.per_codon_rate},
              {"crossover_rate", cfg.ga.crossover_rate},
              {"tournament_size", cfg.ga.tournament_size},
              {"elitism", cfg.ga.elitism},
              {"plateau_eps", cfg.ga.plateau_eps},
              {"plateau_window", cfg.ga.plateau_window},
              {"max_generations", cfg.ga.max_generations},
              {"rng_seed", cfg.ga.rng_seed},
              {"eval_threads", cfg.ga.eval_threads}}},
        {"weights",
         json{{"cai", w.cai},
              {"tai", w.tai},
              {"cpb", w.cpb},
              {"mfe_global", w.mfe_global},
              {"unpaired30", w.unpaired30},
              {"gc", w.gc},
              {"immune", w.immune},
              {"utr_balance", w.utr_balance},
              {"motif", w.motif},
              {"embed", w.embed}}},
        {"bands",
         json{{"gc", json::array({b.gc_lo, b.gc_hi, b.gc_falloff})},
              {"mfe", json::array({b.mfe_lo, b.mfe_hi, b.mfe_falloff})},
              {"motif", json::array({b.motif_lo, b.motif_hi, b.motif_falloff})},
              {"utr", json::array({b.utr_lo, b.utr_hi, b.utr_falloff})},
              {"immune_max", b.immune_max},
              {"cpb_scale", b.cpb_scale}}}};
}

void write_dbn(const std::string& path, const std::string& comment, const NucleicSequence& seq,
               const SecondaryStructure& s) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", s.energy.value_or(0.0));
    out << "# " << comment << '\n'
        << seq.to_rna().str() << '\n'
        << s.dot_bracket << " (" << buf << ")\n";
}

} // namespace

OptimizeOutcome run_optimize(const RunConfig& cfg, std::ostream* log) {
    cfg.validate();
    if (cfg.target.size() == 0)
        throw std::runtime_error("optimize requires 'target' or 'target_fasta'");
    RunEnvironment env(cfg);

    OptimizeOutcome outcome;
    Population initial;
    if (!cfg.import_fasta.empty()) {
        ImportResult imported = import_population(cfg.import_fasta, cfg.target);
        outcome.import_drops = imported.dropped;
        if (log) {
            for (const auto& d : outcome.import_drops)
                *log << "dropped record: " << d << '\n';
            *log << "imported " << imported.individuals.size() << " individuals\n";
        }
        initial = std::move(imported.individuals);
    }

    GenerationObserver observer;
    if (log) {
        observer = [log](int generation, const Population& pop) {
            double best = 0.0;
            for (const auto& ind : pop)
                best = std::max(best, ind.fitness.value_or(0.0));
            *log << "generation " << generation << "  pop " << pop.size() << "  best "
                 << fmt(best, 6) << '\n';
        };
    }

    outcome.result = run(cfg.target, cfg.ga, env.context(), cfg.top_k, std::move(initial), observer);

    const std::filesystem::path out_dir(cfg.out_dir);
    std::filesystem::create_directories(out_dir);
    outcome.out_dir = out_dir;

    write_generations_csv((out_dir / "generations.csv").string(), outcome.result.stats);

    // top-K artifacts
    const Population& pop = outcome.result.final_population;
    std::vector<std::pair<std::string, std::string>> fasta_records;
    json topk = json::array();
    json radar_rows = json::array();
    std::ostringstream radar;
    radar << "rank,cai,tai,cpb,mfe_global,unpaired30,gc,immune,utr_balance,motif,embed\n";
    for (std::size_t r = 0; r < outcome.result.top_k.size(); ++r) {
        const Individual& ind = pop[outcome.result.top_k[r]];
        const MetricVector& m = *ind.metrics;
        NormalizedScores n = normalize_metrics(m, cfg.ga.bands);
        std::string name = "seq_" + std::to_string(r + 1);

        fasta_records.emplace_back(name + " fitness=" + fmt(*ind.fitness, 6), ind.cds.dna());

        Construct construct = env.context().construct_for(ind.cds);
        SecondaryStructure global_structure = env.folder().fold(construct.transcript());
        StartWindow w = window_around_start(construct, cfg.window_radius);
        SecondaryStructure window_structure = env.folder().fold(w.seq);

        write_dbn((out_dir / (name + ".dbn")).string(), name + " full transcript",
                  construct.transcript(), global_structure);
        write_dbn((out_dir / (name + ".window.dbn")).string(),
                  name + " start window [" + std::to_string(w.begin) + "," +
                      std::to_string(w.end) + ")",
                  w.seq, window_structure);

        topk.push_back(json{{"rank", r + 1},
                            {"cds", ind.cds.dna()},
                            {"fitness", *ind.fitness},
                            {"metrics", metrics_json(m)},
                            {"normalized", normalized_json(n)},
                            {"structure_global", global_structure.dot_bracket},
                            {"energy_global", global_structure.energy.value_or(0.0)},
                            {"structure_window", window_structure.dot_bracket},
                            {"energy_window", window_structure.energy.value_or(0.0)}});

        radar << (r + 1) << ',' << fmt(n.cai) << ',' << fmt(n.tai) << ',' << fmt(n.cpb) << ','
              << fmt(n.mfe_global) << ',' << fmt(n.unpaired30) << ',' << fmt(n.gc) << ','
              << fmt(n.immune) << ',' << fmt(n.utr_balance) << ',' << fmt(n.motif) << ','
              << fmt(n.embed) << '\n';
    }
    write_fasta((out_dir / "topk.fasta").string(), fasta_records);
    {
        std::ofstream out(out_dir / "radar.csv");
        if (!out)
            throw std::runtime_error("cannot write radar.csv");
        out << radar.str();
    }

    json report{{"config", config_json(cfg)},
                {"plateau_stopped", outcome.result.plateau_stopped},
                {"generations", outcome.result.stats.size()},
                {"stats", json::array()},
                {"top_k", topk}};
    for (const auto& s : outcome.result.stats)
        report["stats"].push_back(stats_json(s));
    {
        std::ofstream out(out_dir / "report.json");
        if (!out)
            throw std::runtime_error("cannot write report.json");
        out << report.dump(2) << '\n';
    }

    if (log)
        *log << "artifacts written to " << out_dir.string() << '\n';
    return outcome;
}

} // namespace mrnaopt
