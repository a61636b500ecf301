#include "mrnaopt/fasta.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrnaopt {

std::vector<std::pair<std::string, std::string>> parse_fasta_text(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> records;
    std::istringstream in(text);
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == ';') // ';' comments per the old FASTA convention
            continue;
        if (line[0] == '>') {
            if (seen_header && records.back().second.empty())
                throw std::runtime_error("FASTA record '" + records.back().first +
                                         "' has an empty sequence");
            std::string header = line.substr(1);
            // trim to first whitespace-separated token plus the rest verbatim
            records.emplace_back(header, "");
            seen_header = true;
        } else {
            if (!seen_header)
                throw std::runtime_error("FASTA input does not start with a '>' header");
            records.back().second += line;
        }
    }
    if (!seen_header)
        throw std::runtime_error("FASTA input has no records");
    if (records.back().second.empty())
        throw std::runtime_error("FASTA record '" + records.back().first +
                                 "' has an empty sequence");
    return records;
}

std::vector<std::pair<std::string, std::string>> parse_fasta(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open FASTA file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_fasta_text(os.str());
}

void write_fasta(const std::string& path,
                 const std::vector<std::pair<std::string, std::string>>& records,
                 std::size_t wrap) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write FASTA file: " + path);
    for (const auto& [header, seq] : records) {
        out << '>' << header << '\n';
        for (std::size_t i = 0; i < seq.size(); i += wrap)
            out << seq.substr(i, wrap) << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace mrnaopt
