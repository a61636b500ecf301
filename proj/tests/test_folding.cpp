#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "fold_oracle.hpp"
#include "mrnaopt/bundled_data.hpp"
#include "mrnaopt/folding.hpp"

using namespace mrnaopt;

TEST_CASE("parse_dot_bracket") {
    auto pairs = parse_dot_bracket("((..))");
    CHECK(pairs == std::vector<std::pair<int, int>>{{0, 5}, {1, 4}});
    CHECK(parse_dot_bracket("...").empty());
    CHECK_THROWS_AS(parse_dot_bracket("((.)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dot_bracket(".))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dot_bracket(".x."), std::invalid_argument);
}

TEST_CASE("pair_type covers the six allowed pairs") {
    CHECK(pair_type('C', 'G') >= 0);
    CHECK(pair_type('G', 'C') >= 0);
    CHECK(pair_type('G', 'T') >= 0);
    CHECK(pair_type('T', 'G') >= 0);
    CHECK(pair_type('A', 'T') >= 0);
    CHECK(pair_type('T', 'A') >= 0);
    CHECK(pair_type('A', 'G') < 0);
    CHECK(pair_type('A', 'C') < 0);
    CHECK(pair_type('C', 'T') < 0);
    CHECK(pair_type('A', 'A') < 0);
}

TEST_CASE("nussinov basics") {
    auto s1 = fold_nussinov(NucleicSequence("GCGC"), 3);
    CHECK(s1.pair_count == 0);
    CHECK(s1.dot_bracket == "....");
    CHECK_FALSE(s1.energy.has_value());

    auto s2 = fold_nussinov(NucleicSequence("GGGAAAACCC"), 3);
    CHECK(s2.pair_count == fold_oracle::max_pairs("GGGAAAACCC", 3));
    CHECK(s2.pair_count == 3);

    auto s3 = fold_nussinov(NucleicSequence("AAAA"), 3);
    CHECK(s3.pair_count == 0);
}

TEST_CASE("nussinov equals exhaustive search on short sequences") {
    fold_oracle::Lcg rng{777};
    for (int trial = 0; trial < 60; ++trial) {
        std::string s = rng.random_seq(1, 12);
        auto folded = fold_nussinov(NucleicSequence(s), 3);
        CHECK(folded.pair_count == fold_oracle::max_pairs(s, 3));
        validate_structure(NucleicSequence(s), folded, 3);
    }
}

TEST_CASE("MFE: unpairable sequence gives zero energy and all dots") {
    auto s = fold_mfe(NucleicSequence("AAAA"));
    CHECK(s.dot_bracket == "....");
    CHECK(s.energy.value() == 0.0);
    CHECK(s.pair_count == 0);
}

TEST_CASE("MFE: a clean hairpin folds below zero") {
    auto s = fold_mfe(NucleicSequence("GGGGAAAACCCC"));
    CHECK(s.energy.value() < 0.0);
    CHECK(s.pair_count > 0);
    validate_structure(NucleicSequence("GGGGAAAACCCC"), s, EnergyModel::bundled().hairpin_min);
}

TEST_CASE("MFE equals exhaustive enumeration on short sequences") {
    const EnergyModel& m = EnergyModel::bundled();
    fold_oracle::Lcg rng{4242};
    for (int trial = 0; trial < 40; ++trial) {
        std::string s = rng.random_seq(1, 14);
        auto folded = fold_mfe(NucleicSequence(s), m);
        int expect = fold_oracle::min_energy_cents(s, m);
        int got = static_cast<int>(std::llround(folded.energy.value() * 100.0));
        CHECK_MESSAGE(got == expect, "sequence ", s);
        // returned structure itself decomposes to the reported energy
        auto pairs = parse_dot_bracket(folded.dot_bracket);
        CHECK(fold_oracle::structure_energy_cents(s, pairs, m) == got);
        validate_structure(NucleicSequence(s), folded, m.hairpin_min);
    }
}

TEST_CASE("MFE traceback is deterministic") {
    fold_oracle::Lcg rng{99};
    for (int trial = 0; trial < 10; ++trial) {
        std::string s = rng.random_seq(20, 60);
        auto a = fold_mfe(NucleicSequence(s));
        auto b = fold_mfe(NucleicSequence(s));
        CHECK(a.dot_bracket == b.dot_bracket);
        CHECK(a.energy == b.energy);
    }
}

TEST_CASE("energy model: bundled file matches the embedded copy and invariants hold") {
    std::string dir = MRNAOPT_DATA_DIR;
    std::ifstream in(dir + "/energy_model.tsv");
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == std::string(bundled::energy_tsv()));

    EnergyModel from_file = EnergyModel::load(dir + "/energy_model.tsv");
    CHECK(from_file == EnergyModel::bundled());

    const EnergyModel& m = EnergyModel::bundled();
    for (int o = 0; o < 6; ++o)
        for (int i = 0; i < 6; ++i)
            CHECK(m.stack_cents(o, i) < 0);
    for (int size = 3; size <= 40; ++size)
        CHECK(m.hairpin_cents(size) >= 0);
    CHECK(m.hairpin_cents(2) >= fold_oracle::kInf);
    CHECK(m.bulge_cents(1) > 0);
    CHECK(m.internal_cents(2) > 0);
    CHECK(m.hairpin_min == 3);

    CHECK_THROWS_AS(EnergyModel::parse("stack\tCG\tCG\t1.0\n", "x"), std::runtime_error);
    CHECK_THROWS_AS(EnergyModel::parse("nonsense\t1\t2\n", "x"), std::runtime_error);
}

TEST_CASE("split_structure_energy parses engine lines") {
    auto [s1, e1] = split_structure_energy("....(((...))) ( -12.30)");
    CHECK(s1 == "....(((...)))");
    CHECK(e1 == doctest::Approx(-12.30));

    auto [s2, e2] = split_structure_energy("..... (-0.00)");
    CHECK(s2 == ".....");
    CHECK(e2 == 0.0);

    auto [s3, e3] = split_structure_energy("STRUCT ( -356.20)");
    CHECK(s3 == "STRUCT");
    CHECK(e3 == doctest::Approx(-356.2));

    CHECK_THROWS_AS(split_structure_energy("no energy here"), std::runtime_error);
    CHECK_THROWS_AS(split_structure_energy(".... (abc)"), std::runtime_error);
}

TEST_CASE("fold_external runs an engine and parses its output") {
    ExternalFolderConfig ok{"printf 'GGGAAAACCC\\n(((....))) ( -4.20)\\n'"};
    auto s = fold_external(NucleicSequence("GGGAAAACCC"), ok);
    CHECK(s.dot_bracket == "(((....)))");
    CHECK(s.energy.value() == doctest::Approx(-4.2));
    CHECK(s.pair_count == 3);

    // echo line content is not interpreted; only line 2 matters
    ExternalFolderConfig mismatch{"printf 'GGGAAAACCC\\n((....)) ( -1.00)\\n'"};
    CHECK_THROWS_AS(fold_external(NucleicSequence("GGGAAAACCC"), mismatch), std::runtime_error);

    ExternalFolderConfig failing{"exit 3"};
    CHECK_THROWS_AS(fold_external(NucleicSequence("GGGAAAACCC"), failing), std::runtime_error);

    ExternalFolderConfig malformed{"printf 'GGGAAAACCC\\nnot a structure\\n'"};
    CHECK_THROWS_AS(fold_external(NucleicSequence("GGGAAAACCC"), malformed), std::runtime_error);

    ExternalFolderConfig one_line{"printf 'GGGAAAACCC\\n'"};
    CHECK_THROWS_AS(fold_external(NucleicSequence("GGGAAAACCC"), one_line), std::runtime_error);
}

TEST_CASE("count_motifs basics") {
    auto none = count_motifs(SecondaryStructure{"...", std::nullopt, 0});
    CHECK(none.total() == 0);

    auto hp = count_motifs(SecondaryStructure{"((((...))))", std::nullopt, 4});
    CHECK(hp.hairpins == 1);
    CHECK(hp.total() == 1);
    CHECK(hp.stems == 1);

    auto ml = count_motifs(SecondaryStructure{"((..((...))..((...))..))", std::nullopt, 6});
    CHECK(ml.hairpins == 2);
    CHECK(ml.multiloops == 1);
    CHECK(ml.total() == 3);
    CHECK(ml.stems == 3);

    auto bulge = count_motifs(SecondaryStructure{"((.((....))))", std::nullopt, 4});
    CHECK(bulge.bulges == 1);
    CHECK(bulge.hairpins == 1);
    CHECK(bulge.total() == 2);

    auto internal = count_motifs(SecondaryStructure{"((.((....)).))", std::nullopt, 4});
    CHECK(internal.internal_loops == 1);
    CHECK(internal.total() == 2);
}

TEST_CASE("motif totals are invariant under mirroring (property)") {
    fold_oracle::Lcg rng{2024};
    for (int trial = 0; trial < 30; ++trial) {
        std::string s = rng.random_seq(10, 40);
        auto folded = fold_mfe(NucleicSequence(s));
        auto counts = count_motifs(folded);

        std::string mirrored(folded.dot_bracket.rbegin(), folded.dot_bracket.rend());
        for (char& c : mirrored)
            c = c == '(' ? ')' : (c == ')' ? '(' : '.');
        auto mirrored_counts =
            count_motifs(SecondaryStructure{mirrored, std::nullopt, folded.pair_count});
        CHECK(counts.total() == mirrored_counts.total());
        CHECK(counts.hairpins == mirrored_counts.hairpins);
        CHECK(counts.multiloops == mirrored_counts.multiloops);
        CHECK(counts.stems == mirrored_counts.stems);
    }
}

TEST_CASE("paired_fraction") {
    SecondaryStructure dots{"......", std::nullopt, 0};
    CHECK(paired_fraction(dots, 0, 6) == 0.0);

    SecondaryStructure hp{"(((...)))", std::nullopt, 3};
    CHECK(paired_fraction(hp, 0, 9) == doctest::Approx(6.0 / 9.0));
    // paired + unpaired fractions sum to 1 over the full range
    CHECK(paired_fraction(hp, 0, 9) + 3.0 / 9.0 == doctest::Approx(1.0));

    CHECK_THROWS_AS(paired_fraction(hp, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(paired_fraction(hp, 0, 10), std::invalid_argument);
}

TEST_CASE("window_around_start") {
    std::string utr5_100(100, 'A');
    Construct c1(NucleicSequence(utr5_100), NucleicSequence("ATGGCTGCTGCTGCTGCTGCTGCTGCTGCTTAA"),
                 NucleicSequence("CCCC"));
    auto w1 = window_around_start(c1, 30);
    CHECK(w1.length() == 60);
    CHECK(w1.begin == 70);
    CHECK(w1.end == 130);

    Construct c2(NucleicSequence(std::string(10, 'A')),
                 NucleicSequence("ATGGCTGCTGCTGCTGCTGCTGCTGCTGCTTAA"), NucleicSequence("CCCC"));
    auto w2 = window_around_start(c2, 30);
    CHECK(w2.length() == 40);
    CHECK(w2.begin == 0);

    CHECK_THROWS_AS(window_around_start(c1, 0), std::invalid_argument);
}

TEST_CASE("builtin folder enforces the length limit") {
    BuiltinFolder limited(EnergyModel::bundled(), 10, false);
    CHECK_THROWS_AS(limited.fold(NucleicSequence(std::string(11, 'A'))), std::runtime_error);
    CHECK(limited.fold(NucleicSequence("AAAA")).energy.value() == 0.0);

    BuiltinFolder unlimited(EnergyModel::bundled(), 10, true);
    CHECK(unlimited.fold(NucleicSequence(std::string(11, 'A'))).energy.value() == 0.0);
}

TEST_CASE("caching folder returns identical results") {
    BuiltinFolder inner;
    CachingFolder cached(inner);
    NucleicSequence s("GGGGAAAACCCC");
    auto a = cached.fold(s);
    auto b = cached.fold(s);
    CHECK(a.dot_bracket == b.dot_bracket);
    CHECK(a.energy == b.energy);
    CHECK(a.dot_bracket == inner.fold(s).dot_bracket);
}
