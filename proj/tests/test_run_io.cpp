#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mrnaopt/bundled_data.hpp"
#include "mrnaopt/run_io.hpp"

using namespace mrnaopt;

namespace {

std::string tmp_dir(const std::string& name) {
    std::string dir = std::string(MRNAOPT_TEST_TMP) + "/" + name;
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// ten-residue target keeps folding trivial for pipeline tests
RunConfig tiny_config(const std::string& out_dir) {
    RunConfig cfg;
    cfg.target = ProteinSequence("MAKLVSTPGR");
    cfg.utr5 = NucleicSequence("GGGAAACCAAGG");
    cfg.utr3 = NucleicSequence("AACCGGTT");
    cfg.ga.pop_init = 6;
    cfg.ga.pop_cap = 12;
    cfg.ga.growth_step = 3;
    cfg.ga.max_generations = 3;
    cfg.ga.rng_seed = 11;
    cfg.ga.eval_threads = 2;
    cfg.top_k = 4;
    cfg.out_dir = out_dir;
    return cfg;
}

} // namespace

TEST_CASE("parse_fasta") {
    std::string dir = tmp_dir("fasta");
    write_file(dir + "/ok.fasta", ">a\nATG\nGCT\n");
    auto records = parse_fasta(dir + "/ok.fasta");
    REQUIRE(records.size() == 1);
    CHECK(records[0].first == "a");
    CHECK(records[0].second == "ATGGCT");

    write_file(dir + "/empty_record.fasta", ">a\n>b\nATG\n");
    CHECK_THROWS_AS(parse_fasta(dir + "/empty_record.fasta"), std::runtime_error);

    write_file(dir + "/two.fasta", ">first\nAAA\n>second\nCCC\n");
    auto two = parse_fasta(dir + "/two.fasta");
    REQUIRE(two.size() == 2);
    CHECK(two[0].first == "first");
    CHECK(two[1].first == "second");

    write_file(dir + "/headerless.fasta", "ATG\n");
    CHECK_THROWS_AS(parse_fasta(dir + "/headerless.fasta"), std::runtime_error);

    CHECK_THROWS_AS(parse_fasta(dir + "/missing.fasta"), std::runtime_error);
}

TEST_CASE("fasta round trip") {
    std::string dir = tmp_dir("fasta_rt");
    std::vector<std::pair<std::string, std::string>> records{
        {"one", std::string(130, 'A')},
        {"two", "ATGGCTTAA"},
    };
    write_fasta(dir + "/rt.fasta", records);
    auto back = parse_fasta(dir + "/rt.fasta");
    CHECK(back == records);
}

TEST_CASE("config parsing") {
    RunConfig cfg = RunConfig::parse("target = MKL\nutr5 = GGG\nrng_seed = 9\n"
                                     "weight_cai = 0.25\nweight_tai = 0.10\n",
                                     "");
    CHECK(cfg.target.str() == "MKL");
    CHECK(cfg.utr5.dna() == "GGG");
    CHECK(cfg.ga.rng_seed == 9);
    CHECK(cfg.ga.weights.cai == 0.25);

    // unknown keys are hard errors
    CHECK_THROWS_WITH_AS(RunConfig::parse("weight_cia = 0.2\n", ""),
                         "config line 1: unknown key 'weight_cia'", std::runtime_error);
    CHECK_THROWS_AS(RunConfig::parse("pop_init\n", ""), std::runtime_error);
    CHECK_THROWS_AS(RunConfig::parse("pop_init = twelve\n", ""), std::runtime_error);

    // weight sum enforced at validation
    RunConfig unbalanced = RunConfig::parse("target = M\nweight_cai = 0.9\n", "");
    CHECK_THROWS_AS(unbalanced.validate(), std::invalid_argument);

    // backend rules
    RunConfig ext = RunConfig::parse("target = M\nbackend = external\n", "");
    CHECK_THROWS_AS(ext.validate(), std::runtime_error);
    ext.external_cmd = "cat";
    ext.validate();

    CHECK_THROWS_AS(RunConfig::parse("target = M\nbackend = magic\n", "").validate(),
                    std::runtime_error);

    // referenced paths must resolve
    RunConfig missing = RunConfig::parse("target = M\nusage_table = /does/not/exist.tsv\n", "");
    CHECK_THROWS_AS(missing.validate(), std::runtime_error);
}

TEST_CASE("config file loading resolves relative paths") {
    std::string dir = tmp_dir("cfg");
    write_file(dir + "/usage.tsv", std::string(bundled::usage_tsv()));
    write_file(dir + "/run.cfg", "target = MAK\nusage_table = usage.tsv\n");
    RunConfig cfg = RunConfig::load(dir + "/run.cfg");
    cfg.validate();
    CHECK(cfg.usage_table_path == dir + "/usage.tsv");
}

TEST_CASE("score_sequences") {
    RunConfig cfg = tiny_config(tmp_dir("score"));
    cfg.validate();
    RunEnvironment env(cfg);

    auto outcome = score_sequences(
        {
            {"good", "ATGGCTAAACTGGTTTCTACCCCAGGTCGTTAA"},
            {"bad", "ATGTAAGCTTAA"}, // internal stop
            {"good_again", "ATGGCTAAACTGGTTTCTACCCCAGGTCGTTAA"},
        },
        cfg, env);
    REQUIRE(outcome.rows.size() == 2);
    REQUIRE(outcome.errors.size() == 1);
    CHECK(outcome.errors[0].find("bad") == 0);
    CHECK(outcome.errors[0].find("internal stop") != std::string::npos);

    // identical inputs give identical rows
    CHECK(outcome.rows[0].fitness == outcome.rows[1].fitness);
    CHECK(outcome.rows[0].metrics.mfe_global == outcome.rows[1].metrics.mfe_global);

    // 11 metric fields + 10 normalized + fitness in the table
    std::string table = score_table_text(outcome.rows);
    std::istringstream lines(table);
    std::string header;
    std::getline(lines, header);
    CHECK(std::count(header.begin(), header.end(), '\t') == 22);
}

TEST_CASE("run_optimize writes the documented artifacts") {
    std::string out = tmp_dir("opt_artifacts");
    RunConfig cfg = tiny_config(out);
    auto outcome = run_optimize(cfg);

    CHECK(std::filesystem::exists(out + "/generations.csv"));
    CHECK(std::filesystem::exists(out + "/report.json"));
    CHECK(std::filesystem::exists(out + "/topk.fasta"));
    CHECK(std::filesystem::exists(out + "/radar.csv"));
    CHECK(std::filesystem::exists(out + "/seq_1.dbn"));
    CHECK(std::filesystem::exists(out + "/seq_1.window.dbn"));

    // one CSV data row per executed generation
    std::string csv = read_file(out + "/generations.csv");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == generations_csv_header());
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == static_cast<int>(outcome.result.stats.size()));

    // radar has one row per top candidate
    std::string radar = read_file(out + "/radar.csv");
    CHECK(std::count(radar.begin(), radar.end(), '\n') ==
          1 + static_cast<long>(outcome.result.top_k.size()));

    // dbn files round-trip through the engine-output parser
    std::string dbn = read_file(out + "/seq_1.dbn");
    std::istringstream dbn_in(dbn);
    std::string comment, seq_line, structure_line;
    std::getline(dbn_in, comment);
    std::getline(dbn_in, seq_line);
    std::getline(dbn_in, structure_line);
    auto [structure, energy] = split_structure_energy(structure_line);
    CHECK(structure.size() == seq_line.size());
    CHECK(energy <= 0.0);
    parse_dot_bracket(structure);

    // topk.fasta re-parses and has top_k records
    auto topk = parse_fasta(out + "/topk.fasta");
    CHECK(topk.size() == outcome.result.top_k.size());
}

TEST_CASE("run_optimize: one generation, one row") {
    std::string out = tmp_dir("opt_short");
    RunConfig cfg = tiny_config(out);
    cfg.ga.max_generations = 1;
    auto outcome = run_optimize(cfg);
    CHECK(outcome.result.stats.size() == 1);
    std::string csv = read_file(out + "/generations.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2); // header + 1 row
}

TEST_CASE("report.json fitness values recompute from stored metrics and weights") {
    std::string out = tmp_dir("opt_report");
    RunConfig cfg = tiny_config(out);
    run_optimize(cfg);

    auto report = nlohmann::json::parse(read_file(out + "/report.json"));
    const auto& wj = report["config"]["weights"];
    FitnessWeights w;
    w.cai = wj["cai"];
    w.tai = wj["tai"];
    w.cpb = wj["cpb"];
    w.mfe_global = wj["mfe_global"];
    w.unpaired30 = wj["unpaired30"];
    w.gc = wj["gc"];
    w.immune = wj["immune"];
    w.utr_balance = wj["utr_balance"];
    w.motif = wj["motif"];
    w.embed = wj["embed"];

    const auto& bj = report["config"]["bands"];
    Bands b;
    b.gc_lo = bj["gc"][0];
    b.gc_hi = bj["gc"][1];
    b.gc_falloff = bj["gc"][2];
    b.mfe_lo = bj["mfe"][0];
    b.mfe_hi = bj["mfe"][1];
    b.mfe_falloff = bj["mfe"][2];
    b.motif_lo = bj["motif"][0];
    b.motif_hi = bj["motif"][1];
    b.motif_falloff = bj["motif"][2];
    b.utr_lo = bj["utr"][0];
    b.utr_hi = bj["utr"][1];
    b.utr_falloff = bj["utr"][2];
    b.immune_max = bj["immune_max"];
    b.cpb_scale = bj["cpb_scale"];

    REQUIRE(report["top_k"].size() > 0);
    for (const auto& entry : report["top_k"]) {
        const auto& mj = entry["metrics"];
        MetricVector m;
        m.cai = mj["cai"];
        m.tai = mj["tai"];
        m.cpb_raw = mj["cpb_raw"];
        m.gc = mj["gc"];
        m.immune_raw = mj["immune_raw"];
        m.unpaired30 = mj["unpaired30"];
        m.mfe_global = mj["mfe_global"];
        m.mfe_local = mj["mfe_local"];
        m.utr_balance = mj["utr_balance"];
        m.motif_total = mj["motif_total"];
        m.embed_sim = mj["embed_sim"];
        double recomputed = fitness(m, w, b);
        CHECK(std::fabs(recomputed - entry["fitness"].get<double>()) < 1e-9);
    }

    // top-k sorted by fitness descending
    double prev = 2.0;
    for (const auto& entry : report["top_k"]) {
        CHECK(entry["fitness"].get<double>() <= prev);
        prev = entry["fitness"].get<double>();
    }
}

TEST_CASE("run_optimize is byte-deterministic under a fixed seed") {
    std::string out_a = tmp_dir("opt_det_a");
    std::string out_b = tmp_dir("opt_det_b");
    RunConfig cfg = tiny_config(out_a);
    cfg.ga.eval_threads = 2; // parallel evaluation on
    run_optimize(cfg);
    cfg.out_dir = out_b;
    run_optimize(cfg);

    CHECK(read_file(out_a + "/generations.csv") == read_file(out_b + "/generations.csv"));
    CHECK(read_file(out_a + "/topk.fasta") == read_file(out_b + "/topk.fasta"));
    CHECK(read_file(out_a + "/report.json") == read_file(out_b + "/report.json"));
}

TEST_CASE("run_optimize can start from an imported population") {
    std::string dir = tmp_dir("opt_import");
    write_fasta(dir + "/initial.fasta", {
        {"c1", "ATGGCTAAACTGGTTTCTACCCCAGGTCGTTAA"},
        {"c2", "ATGGCCAAACTGGTTTCTACCCCAGGTCGTTAA"},
        {"bad", "ATGGCTAAACTGGTTTCTACCCCAGGTTAA"}, // wrong translation
    });
    RunConfig cfg = tiny_config(dir + "/out");
    cfg.import_fasta = dir + "/initial.fasta";
    cfg.ga.max_generations = 2;
    auto outcome = run_optimize(cfg);
    CHECK(outcome.import_drops.size() == 1);
    CHECK(outcome.result.stats.back().pop_size >= 2);
}

TEST_CASE("bundled example config loads and validates") {
    std::string dir = MRNAOPT_DATA_DIR;
    RunConfig cfg = RunConfig::load(dir + "/example_config.txt");
    cfg.validate();
    CHECK(cfg.target.size() > 0);
    CHECK(cfg.ga.pop_init <= cfg.ga.pop_cap);

    // sample corpus parses and builds a CPS table
    auto records = parse_fasta(dir + "/sample_corpus.fasta");
    std::vector<NucleicSequence> corpus;
    for (const auto& [h, s] : records)
        corpus.emplace_back(NucleicSequence::from_any(s).to_dna());
    auto table = CodonPairTable::build(corpus, 0.5);
    CHECK(table.pair_count_total() > 0);
}
