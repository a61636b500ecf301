#include "mrnaopt/codon_tables.hpp"

#include "mrnaopt/bundled_data.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrnaopt {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open table file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// CODON<TAB>value records; '#' comments and blank lines skipped.
std::map<std::string, double> parse_codon_values(std::string_view text,
                                                 const std::string& what) {
    std::map<std::string, double> values;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string codon;
        double value;
        if (!(ls >> codon >> value))
            throw std::runtime_error(what + ": parse error at line " + std::to_string(lineno));
        for (char& c : codon)
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (codon_id(codon) < 0)
            throw std::runtime_error(what + ": bad codon '" + codon + "' at line " +
                                     std::to_string(lineno));
        if (!values.emplace(codon, value).second)
            throw std::runtime_error(what + ": duplicate codon '" + codon + "'");
    }
    return values;
}

} // namespace

CodonUsageTable CodonUsageTable::from_values(const std::map<std::string, double>& values,
                                             double pseudocount, std::string provenance) {
    const GeneticCode& code = GeneticCode::standard();
    std::array<double, 64> raw{};
    for (int c : code.sense_codons()) {
        auto it = values.find(codon_text(c));
        if (it == values.end())
            throw std::runtime_error("usage table missing codon " + codon_text(c));
        if (it->second < 0.0)
            throw std::runtime_error("negative usage value for codon " + codon_text(c));
        raw[c] = it->second;
    }

    CodonUsageTable t;
    t.provenance_ = std::move(provenance);
    for (char aa : std::string("ACDEFGHIKLMNPQRSTVWY")) {
        const auto& fam = code.family(aa);
        double total = 0.0;
        for (int c : fam)
            total += raw[c] + pseudocount;
        if (total <= 0.0)
            throw std::runtime_error(std::string("usage family for '") + aa +
                                     "' has zero total; increase pseudocount");
        for (int c : fam) {
            t.freq_[c] = (raw[c] + pseudocount) / total;
            if (t.freq_[c] <= 0.0)
                throw std::runtime_error("zero usage frequency for codon " + codon_text(c) +
                                         "; increase pseudocount");
        }
    }

    // Stop-codon records are optional; they feed stop sampling when seeding.
    double stop_total = 0.0;
    std::array<double, 64> stop_raw{};
    for (int c : code.stop_codons()) {
        auto it = values.find(codon_text(c));
        stop_raw[c] = (it != values.end() && it->second > 0.0) ? it->second : 0.0;
        stop_total += stop_raw[c];
    }
    for (int c : code.stop_codons())
        t.stop_freq_[c] = stop_total > 0.0 ? stop_raw[c] / stop_total : 1.0 / 3.0;
    return t;
}

CodonUsageTable CodonUsageTable::parse(std::string_view text, double pseudocount,
                                       std::string provenance) {
    return from_values(parse_codon_values(text, "usage table"), pseudocount,
                       std::move(provenance));
}

CodonUsageTable CodonUsageTable::load(const std::string& path, double pseudocount) {
    return parse(read_file(path), pseudocount, path);
}

const CodonUsageTable& CodonUsageTable::bundled_human() {
    static const CodonUsageTable t =
        parse(bundled::usage_tsv(), 0.0, "bundled human codon usage (Kazusa per-1000)");
    return t;
}

double CodonUsageTable::at(std::string_view codon) const {
    int id = codon_id(codon);
    if (id < 0)
        throw std::invalid_argument("malformed codon: " + std::string(codon));
    return freq_[id];
}

AdaptivenessTable AdaptivenessTable::from_usage(const CodonUsageTable& usage) {
    const GeneticCode& code = GeneticCode::standard();
    AdaptivenessTable t;
    for (char aa : std::string("ACDEFGHIKLMNPQRSTVWY")) {
        const auto& fam = code.family(aa);
        double fmax = 0.0;
        for (int c : fam)
            fmax = std::max(fmax, usage.at(c));
        for (int c : fam)
            t.w_[c] = usage.at(c) / fmax;
    }
    return t;
}

double AdaptivenessTable::at(std::string_view codon) const {
    int id = codon_id(codon);
    if (id < 0)
        throw std::invalid_argument("malformed codon: " + std::string(codon));
    return w_[id];
}

TaiWeightTable TaiWeightTable::parse(std::string_view text, std::string provenance) {
    const GeneticCode& code = GeneticCode::standard();
    auto values = parse_codon_values(text, "tAI table");
    std::array<double, 64> raw{};
    double max_raw = 0.0;
    for (int c : code.sense_codons()) {
        auto it = values.find(codon_text(c));
        if (it == values.end())
            throw std::runtime_error("tAI table missing codon " + codon_text(c));
        if (it->second <= 0.0)
            throw std::runtime_error("nonpositive tAI weight for codon " + codon_text(c));
        raw[c] = it->second;
        max_raw = std::max(max_raw, raw[c]);
    }
    TaiWeightTable t;
    t.provenance_ = std::move(provenance);
    for (int c : code.sense_codons())
        t.s_[c] = raw[c] / max_raw;
    return t;
}

TaiWeightTable TaiWeightTable::load(const std::string& path) {
    return parse(read_file(path), path);
}

const TaiWeightTable& TaiWeightTable::bundled_human() {
    static const TaiWeightTable t =
        parse(bundled::tai_tsv(), "bundled human tAI weights (approximate tGCN)");
    return t;
}

double TaiWeightTable::at(std::string_view codon) const {
    int id = codon_id(codon);
    if (id < 0)
        throw std::invalid_argument("malformed codon: " + std::string(codon));
    return s_[id];
}

CodonPairTable CodonPairTable::build(const std::vector<NucleicSequence>& corpus,
                                     double pseudocount, const GeneticCode& code) {
    if (corpus.empty())
        throw std::invalid_argument("empty corpus");
    if (pseudocount < 0.0)
        throw std::invalid_argument("negative pseudocount");

    // Raw adjacent sense-pair counts.
    std::vector<double> n(64 * 64, 0.0);
    std::int64_t total = 0;
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        CdsReport report = validate_cds(corpus[s], code);
        if (!report.valid())
            throw std::invalid_argument("corpus sequence " + std::to_string(s) +
                                        " is not a valid CDS: " + report.describe());
        const NucleicSequence& cds = corpus[s];
        std::size_t n_codons = cds.size() / 3;
        for (std::size_t c = 0; c + 1 < n_codons; ++c) {
            int a = codon_id(cds.at(3 * c), cds.at(3 * c + 1), cds.at(3 * c + 2));
            int b = codon_id(cds.at(3 * c + 3), cds.at(3 * c + 4), cds.at(3 * c + 5));
            if (code.is_sense(a) && code.is_sense(b)) {
                n[(a << 6) | b] += 1.0;
                ++total;
            }
        }
    }

    // Smoothed counts and the marginals derived from them. Position-aware
    // counts (first/second slot of each pair) keep the observed/expected
    // ratio exactly 1 for single-codon families at any pseudocount.
    std::array<double, 64> c_first{}, c_second{};
    std::array<double, 26> a_first{}, a_second{};
    std::vector<double> m(26 * 26, 0.0);
    for (int a : code.sense_codons()) {
        for (int b : code.sense_codons()) {
            double nn = n[(a << 6) | b] + pseudocount;
            c_first[a] += nn;
            c_second[b] += nn;
            int x = code.amino_acid(a) - 'A';
            int y = code.amino_acid(b) - 'A';
            a_first[x] += nn;
            a_second[y] += nn;
            m[x * 26 + y] += nn;
        }
    }

    CodonPairTable t;
    t.pair_count_total_ = total;
    t.provenance_ = "built from corpus of " + std::to_string(corpus.size()) + " CDSs";
    for (int a : code.sense_codons()) {
        for (int b : code.sense_codons()) {
            double nn = n[(a << 6) | b] + pseudocount;
            if (nn <= 0.0)
                throw std::invalid_argument(
                    "pair " + codon_text(a) + "-" + codon_text(b) +
                    " has zero smoothed count; use a positive pseudocount");
            int x = code.amino_acid(a) - 'A';
            int y = code.amino_acid(b) - 'A';
            double expected = c_first[a] * c_second[b] / (a_first[x] * a_second[y]) *
                              m[x * 26 + y];
            t.cps_[(a << 6) | b] = std::log(nn / expected);
        }
    }
    return t;
}

CodonPairTable CodonPairTable::neutral() {
    CodonPairTable t;
    t.provenance_ = "neutral (no corpus)";
    return t;
}

CodonPairTable CodonPairTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open CPS table: " + path);
    const GeneticCode& code = GeneticCode::standard();
    CodonPairTable t;
    t.provenance_ = path;
    std::vector<bool> seen(64 * 64, false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const std::string key = "# pair_count_total:";
            if (line.rfind(key, 0) == 0)
                t.pair_count_total_ = std::stoll(line.substr(key.size()));
            continue;
        }
        std::istringstream ls(line);
        std::string c1, c2;
        double value;
        if (!(ls >> c1 >> c2 >> value))
            throw std::runtime_error("CPS table parse error at line " + std::to_string(lineno));
        int a = codon_id(c1), b = codon_id(c2);
        if (a < 0 || b < 0 || !code.is_sense(a) || !code.is_sense(b))
            throw std::runtime_error("CPS table: bad sense pair at line " +
                                     std::to_string(lineno));
        t.cps_[(a << 6) | b] = value;
        seen[(a << 6) | b] = true;
    }
    for (int a : code.sense_codons())
        for (int b : code.sense_codons())
            if (!seen[(a << 6) | b])
                throw std::runtime_error("CPS table missing pair " + codon_text(a) + "-" +
                                         codon_text(b));
    return t;
}

void CodonPairTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write CPS table: " + path);
    const GeneticCode& code = GeneticCode::standard();
    out << "# codon pair scores (natural log observed/expected)\n";
    out << "# provenance: " << provenance_ << "\n";
    out << "# pair_count_total: " << pair_count_total_ << "\n";
    char buf[64];
    for (int a : code.sense_codons()) {
        for (int b : code.sense_codons()) {
            std::snprintf(buf, sizeof buf, "%.17g", cps_[(a << 6) | b]);
            out << codon_text(a) << '\t' << codon_text(b) << '\t' << buf << '\n';
        }
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

double CodonPairTable::at(std::string_view first, std::string_view second) const {
    int a = codon_id(first), b = codon_id(second);
    if (a < 0 || b < 0)
        throw std::invalid_argument("malformed codon pair");
    return at(a, b);
}

} // namespace mrnaopt
