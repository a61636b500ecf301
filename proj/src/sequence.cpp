#include "mrnaopt/sequence.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mrnaopt {

namespace {

char normalize_base(char c, SeqKind kind) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    switch (u) {
    case 'A':
    case 'C':
    case 'G':
        return u;
    case 'T':
        if (kind == SeqKind::Rna)
            throw std::invalid_argument("base 'T' not in RNA alphabet");
        return 'T';
    case 'U':
        if (kind == SeqKind::Dna)
            throw std::invalid_argument("base 'U' not in DNA alphabet");
        return 'T';
    default:
        throw std::invalid_argument(std::string("invalid base '") + c + "'");
    }
}

} // namespace

NucleicSequence::NucleicSequence(std::string_view text, SeqKind kind) : kind_(kind) {
    if (text.empty())
        throw std::invalid_argument("empty sequence");
    bases_.reserve(text.size());
    for (char c : text)
        bases_.push_back(normalize_base(c, kind));
}

NucleicSequence NucleicSequence::from_any(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty sequence");
    bool has_u = false;
    for (char c : text) {
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (u == 'U')
            has_u = true;
        else if (u != 'A' && u != 'C' && u != 'G' && u != 'T')
            throw std::invalid_argument(std::string("invalid base '") + c + "'");
    }
    NucleicSequence s;
    s.kind_ = has_u ? SeqKind::Rna : SeqKind::Dna;
    s.bases_.reserve(text.size());
    for (char c : text) {
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        s.bases_.push_back(u == 'U' ? 'T' : u);
    }
    return s;
}

std::string NucleicSequence::str() const {
    if (kind_ == SeqKind::Dna)
        return bases_;
    std::string out = bases_;
    for (char& c : out)
        if (c == 'T')
            c = 'U';
    return out;
}

NucleicSequence NucleicSequence::to_rna() const {
    NucleicSequence s = *this;
    s.kind_ = SeqKind::Rna;
    return s;
}

NucleicSequence NucleicSequence::to_dna() const {
    NucleicSequence s = *this;
    s.kind_ = SeqKind::Dna;
    return s;
}

NucleicSequence NucleicSequence::subseq(std::size_t pos, std::size_t len) const {
    if (pos > bases_.size() || pos + len > bases_.size())
        throw std::out_of_range("subseq out of range");
    NucleicSequence s;
    s.kind_ = kind_;
    s.bases_ = bases_.substr(pos, len);
    return s;
}

ProteinSequence::ProteinSequence(std::string_view residues) {
    static const std::string kAmino = "ACDEFGHIKLMNPQRSTVWY";
    residues_.reserve(residues.size());
    for (char c : residues) {
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (kAmino.find(u) == std::string::npos)
            throw std::invalid_argument(std::string("invalid amino acid '") + c + "'");
        residues_.push_back(u);
    }
}

int codon_id(char a, char b, char c) {
    auto idx = [](char x) -> int {
        switch (x) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: return -1;
        }
    };
    int i0 = idx(a), i1 = idx(b), i2 = idx(c);
    if (i0 < 0 || i1 < 0 || i2 < 0)
        return -1;
    return 16 * i0 + 4 * i1 + i2;
}

int codon_id(std::string_view codon) {
    if (codon.size() != 3)
        return -1;
    return codon_id(codon[0], codon[1], codon[2]);
}

std::string codon_text(int id) {
    static const char kBases[] = "ACGT";
    std::string s(3, 'A');
    s[0] = kBases[(id >> 4) & 3];
    s[1] = kBases[(id >> 2) & 3];
    s[2] = kBases[id & 3];
    return s;
}

GeneticCode::GeneticCode() {
    // Codons in lexicographic order over A<C<G<T; '*' marks stops.
    static const char kTable[] =
        "KNKNTTTTRSRSIIMIQHQHPPPPRRRRLLLLEDEDAAAAGGGGVVVV*Y*YSSSS*CWCLFLF";
    for (int i = 0; i < 64; ++i) {
        table_[i] = kTable[i];
        if (table_[i] == '*') {
            stops_.push_back(i);
        } else {
            sense_.push_back(i);
            families_[table_[i] - 'A'].push_back(i);
        }
    }
}

const GeneticCode& GeneticCode::standard() {
    static const GeneticCode code;
    return code;
}

const std::vector<int>& GeneticCode::family(char aa) const {
    if (aa < 'A' || aa > 'Z' || families_[aa - 'A'].empty())
        throw std::invalid_argument(std::string("no codon family for '") + aa + "'");
    return families_[aa - 'A'];
}

std::vector<std::string> GeneticCode::synonymous_codons(std::string_view codon) const {
    int id = codon_id(codon);
    if (id < 0)
        throw std::invalid_argument("malformed codon: " + std::string(codon));
    if (is_stop(id))
        throw std::invalid_argument("stop codon has no synonym family: " + std::string(codon));
    std::vector<std::string> out;
    for (int c : family(table_[id]))
        out.push_back(codon_text(c));
    return out;
}

TranslationResult translate(const NucleicSequence& cds, const GeneticCode& code) {
    if (cds.size() % 3 != 0)
        throw std::invalid_argument("CDS length not a multiple of 3");
    std::string residues;
    residues.reserve(cds.size() / 3);
    bool stop_seen = false;
    for (std::size_t i = 0; i + 2 < cds.size(); i += 3) {
        int id = codon_id(cds.at(i), cds.at(i + 1), cds.at(i + 2));
        char aa = code.amino_acid(id);
        if (aa == '*') {
            stop_seen = true;
            break;
        }
        residues.push_back(aa);
    }
    return TranslationResult{ProteinSequence(residues), stop_seen};
}

std::string_view cds_rule_name(CdsRule r) {
    switch (r) {
    case CdsRule::LengthMultipleOf3: return "length not a multiple of 3";
    case CdsRule::StartsWithAtg: return "does not start with ATG";
    case CdsRule::NoInternalStop: return "internal stop codon";
    case CdsRule::TerminalStop: return "missing terminal stop codon";
    case CdsRule::TranslationMatches: return "translation does not match target";
    }
    return "unknown";
}

bool CdsReport::violated(CdsRule r) const {
    for (CdsRule v : violations)
        if (v == r)
            return true;
    return false;
}

std::string CdsReport::describe() const {
    if (violations.empty())
        return "valid";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i)
            os << "; ";
        os << cds_rule_name(violations[i]);
    }
    return os.str();
}

namespace {

CdsReport validate_cds_impl(const NucleicSequence& cds, const ProteinSequence* target,
                            const GeneticCode& code) {
    CdsReport report;
    const bool length_ok = cds.size() % 3 == 0 && cds.size() >= 6;
    if (cds.size() % 3 != 0)
        report.violations.push_back(CdsRule::LengthMultipleOf3);

    if (cds.size() < 3 || cds.at(0) != 'A' || cds.at(1) != 'T' || cds.at(2) != 'G')
        report.violations.push_back(CdsRule::StartsWithAtg);

    // Stop placement over complete codons.
    std::size_t n_codons = cds.size() / 3;
    bool internal_stop = false, terminal_stop = false;
    for (std::size_t c = 0; c < n_codons; ++c) {
        int id = codon_id(cds.at(3 * c), cds.at(3 * c + 1), cds.at(3 * c + 2));
        if (code.is_stop(id)) {
            if (c + 1 == n_codons && cds.size() % 3 == 0)
                terminal_stop = true;
            else
                internal_stop = true;
        }
    }
    if (internal_stop)
        report.violations.push_back(CdsRule::NoInternalStop);
    if (!terminal_stop)
        report.violations.push_back(CdsRule::TerminalStop);

    if (target != nullptr) {
        bool match = false;
        if (cds.size() % 3 == 0 && cds.size() >= 3) {
            TranslationResult t = translate(cds, code);
            match = t.protein == *target;
        }
        (void)length_ok;
        if (!match)
            report.violations.push_back(CdsRule::TranslationMatches);
    }
    return report;
}

} // namespace

CdsReport validate_cds(const NucleicSequence& cds, const GeneticCode& code) {
    return validate_cds_impl(cds, nullptr, code);
}

CdsReport validate_cds(const NucleicSequence& cds, const ProteinSequence& target,
                       const GeneticCode& code) {
    return validate_cds_impl(cds, &target, code);
}

Construct::Construct(NucleicSequence utr5, NucleicSequence cds, NucleicSequence utr3)
    : utr5_(std::move(utr5)), cds_(std::move(cds)), utr3_(std::move(utr3)) {
    CdsReport report = validate_cds(cds_);
    if (!report.valid())
        throw std::invalid_argument("invalid CDS: " + report.describe());
}

NucleicSequence Construct::transcript() const {
    return NucleicSequence(utr5_.dna() + cds_.dna() + utr3_.dna(), SeqKind::Dna);
}

} // namespace mrnaopt
