#include <doctest.h>

#include <set>
#include <stdexcept>

#include "mrnaopt/sequence.hpp"

using namespace mrnaopt;

TEST_CASE("nucleic sequence normalizes case and canonicalizes to DNA") {
    NucleicSequence s("atgT");
    CHECK(s.dna() == "ATGT");
    CHECK(s.kind() == SeqKind::Dna);

    NucleicSequence r("augu", SeqKind::Rna);
    CHECK(r.dna() == "ATGT");
    CHECK(r.str() == "AUGU");
}

TEST_CASE("nucleic sequence rejects bad input") {
    CHECK_THROWS_AS(NucleicSequence(""), std::invalid_argument);
    CHECK_THROWS_AS(NucleicSequence("ATGN"), std::invalid_argument);
    CHECK_THROWS_AS(NucleicSequence("ATRG"), std::invalid_argument);
    CHECK_THROWS_AS(NucleicSequence("AUG", SeqKind::Dna), std::invalid_argument);
    CHECK_THROWS_AS(NucleicSequence("ATG", SeqKind::Rna), std::invalid_argument);
}

TEST_CASE("to_rna / to_dna round trip is identity") {
    NucleicSequence s("ATGT");
    CHECK(s.to_rna().str() == "AUGU");
    CHECK(NucleicSequence("AUG", SeqKind::Rna).to_dna().str() == "ATG");
    CHECK(s.to_rna().to_dna() == s);

    // involution on arbitrary sequences
    for (const char* text : {"A", "ACGTACGT", "TTTT", "GCGCGC"}) {
        NucleicSequence x(text);
        CHECK(x.to_rna().to_dna() == x);
        CHECK(x.to_rna().to_rna().str() == x.to_rna().str());
    }
}

TEST_CASE("from_any infers kind") {
    CHECK(NucleicSequence::from_any("AUG").kind() == SeqKind::Rna);
    CHECK(NucleicSequence::from_any("ATG").kind() == SeqKind::Dna);
    CHECK(NucleicSequence::from_any("AUG").dna() == "ATG");
}

TEST_CASE("genetic code invariants") {
    const GeneticCode& code = GeneticCode::standard();
    CHECK(code.sense_codons().size() == 61);
    CHECK(code.stop_codons().size() == 3);

    std::set<int> stops(code.stop_codons().begin(), code.stop_codons().end());
    CHECK(stops == std::set<int>{codon_id("TAA"), codon_id("TAG"), codon_id("TGA")});

    // every sense codon appears in exactly one synonym family
    std::set<int> seen;
    for (char aa : std::string("ACDEFGHIKLMNPQRSTVWY")) {
        for (int c : code.family(aa)) {
            CHECK(seen.insert(c).second);
            CHECK(code.amino_acid(c) == aa);
        }
    }
    CHECK(seen.size() == 61);
}

TEST_CASE("translate basics") {
    auto t1 = translate(NucleicSequence("ATG"));
    CHECK(t1.protein.str() == "M");
    CHECK_FALSE(t1.stop_seen);

    auto t2 = translate(NucleicSequence("ATGGCTTAA"));
    CHECK(t2.protein.str() == "MA");
    CHECK(t2.stop_seen);

    auto t3 = translate(NucleicSequence("ATGTAAGGG"));
    CHECK(t3.protein.str() == "M");
    CHECK(t3.stop_seen);

    CHECK_THROWS_AS(translate(NucleicSequence("ATGC")), std::invalid_argument);
}

TEST_CASE("validate_cds rule reporting") {
    ProteinSequence ma("MA");
    CHECK(validate_cds(NucleicSequence("ATGGCTTAA"), ma).valid());

    auto r1 = validate_cds(NucleicSequence("ATGTAAGCTTAA"), ma);
    CHECK(r1.violated(CdsRule::NoInternalStop));
    CHECK_FALSE(r1.valid());

    auto r2 = validate_cds(NucleicSequence("GCTATGTAA"), ProteinSequence("M"));
    CHECK(r2.violated(CdsRule::StartsWithAtg));
    CHECK(r2.violated(CdsRule::TranslationMatches));
    CHECK_FALSE(r2.violated(CdsRule::NoInternalStop));
    CHECK_FALSE(r2.violated(CdsRule::TerminalStop));

    auto r3 = validate_cds(NucleicSequence("ATGGCTGCT"));
    CHECK(r3.violated(CdsRule::TerminalStop));

    auto r4 = validate_cds(NucleicSequence("ATGGC"));
    CHECK(r4.violated(CdsRule::LengthMultipleOf3));
}

TEST_CASE("validate_cds passes iff all five rules pass") {
    // exhaustive over a small family of mutants of ATG GCT TAA vs target MA
    ProteinSequence ma("MA");
    struct Case { const char* cds; bool ok; };
    const Case cases[] = {
        {"ATGGCTTAA", true},   {"ATGGCCTAA", true},  {"ATGGCGTGA", true},
        {"ATGGCTTAG", true},   {"ATGGCT", false},    {"GTGGCTTAA", false},
        {"ATGTAATAA", false},  {"ATGGCTGCT", false}, {"ATGGCTTAAA", false},
        {"ATGTGGTAA", false},
    };
    for (const auto& c : cases) {
        CHECK(validate_cds(NucleicSequence(c.cds), ma).valid() == c.ok);
    }
}

TEST_CASE("synonymous codons") {
    const GeneticCode& code = GeneticCode::standard();
    CHECK(code.synonymous_codons("ATG") == std::vector<std::string>{"ATG"});
    CHECK(code.synonymous_codons("TGG") == std::vector<std::string>{"TGG"});

    auto ala = code.synonymous_codons("GCT");
    std::set<std::string> ala_set(ala.begin(), ala.end());
    CHECK(ala_set == std::set<std::string>{"GCA", "GCC", "GCG", "GCT"});

    CHECK_THROWS_AS(code.synonymous_codons("TAA"), std::invalid_argument);
}

namespace {

// simple deterministic LCG for the property sweep
struct Lcg {
    std::uint64_t s;
    std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
    int below(int n) { return static_cast<int>((next() >> 33) % n); }
};

} // namespace

TEST_CASE("synonymous substitution preserves translation (property)") {
    const GeneticCode& code = GeneticCode::standard();
    Lcg rng{12345};
    for (int trial = 0; trial < 200; ++trial) {
        // random CDS: ATG + 20 random sense codons + stop
        std::string cds = "ATG";
        for (int k = 0; k < 20; ++k) {
            int c;
            do {
                c = rng.below(64);
            } while (code.is_stop(c));
            cds += codon_text(c);
        }
        cds += "TAA";
        NucleicSequence original(cds);
        auto base = translate(original);

        // apply a handful of random synonymous substitutions
        std::string mutated = cds;
        for (int m = 0; m < 8; ++m) {
            int pos = 1 + rng.below(20);
            int id = codon_id(mutated.substr(3 * pos, 3));
            const auto& fam = code.family_of(id);
            int pick = fam[rng.below(static_cast<int>(fam.size()))];
            std::string t = codon_text(pick);
            mutated.replace(3 * pos, 3, t);
        }
        auto after = translate(NucleicSequence(mutated));
        CHECK(after.protein == base.protein);
        CHECK(after.stop_seen == base.stop_seen);
    }
}

TEST_CASE("construct validates its CDS and locates the start codon") {
    Construct c(NucleicSequence("GGGG"), NucleicSequence("ATGGCTTAA"), NucleicSequence("CCC"));
    CHECK(c.cds_start() == 4);
    CHECK(c.transcript_length() == 16);
    CHECK(c.transcript().dna() == "GGGGATGGCTTAACCC");

    CHECK_THROWS_AS(Construct(NucleicSequence("G"), NucleicSequence("ATGGCT"), NucleicSequence("C")),
                    std::invalid_argument);

    // empty UTRs are representable
    Construct no_utr(NucleicSequence{}, NucleicSequence("ATGTAA"), NucleicSequence{});
    CHECK(no_utr.transcript_length() == 6);
    CHECK(no_utr.cds_start() == 0);
}
