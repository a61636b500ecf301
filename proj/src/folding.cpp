#include "mrnaopt/folding.hpp"

#include "mrnaopt/bundled_data.hpp"
#include "process.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrnaopt {

namespace {

constexpr int kInf = 100000000; // centikcal sentinel, safe to add twice

int cents_from_kcal(double v) { return static_cast<int>(std::llround(v * 100.0)); }

} // namespace

std::vector<std::pair<int, int>> parse_dot_bracket(std::string_view s) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        char c = s[i];
        if (c == '(') {
            stack.push_back(i);
        } else if (c == ')') {
            if (stack.empty())
                throw std::invalid_argument("unbalanced ')' at position " + std::to_string(i));
            pairs.emplace_back(stack.back(), i);
            stack.pop_back();
        } else if (c != '.') {
            throw std::invalid_argument(std::string("illegal structure character '") + c + "'");
        }
    }
    if (!stack.empty())
        throw std::invalid_argument("unbalanced '(' at position " + std::to_string(stack.back()));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

int pair_type(char a, char b) {
    // canonical DNA letters; T plays U
    switch (a) {
    case 'C': return b == 'G' ? 0 : -1;
    case 'G': return b == 'C' ? 1 : (b == 'T' ? 2 : -1);
    case 'T': return b == 'G' ? 3 : (b == 'A' ? 5 : -1);
    case 'A': return b == 'T' ? 4 : -1;
    default: return -1;
    }
}

namespace {

int pair_type_name(std::string_view name) {
    std::string t(name);
    for (char& c : t) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (c == 'U')
            c = 'T';
    }
    if (t.size() != 2)
        return -1;
    return pair_type(t[0], t[1]);
}

} // namespace

EnergyModel EnergyModel::parse(std::string_view text, std::string provenance) {
    EnergyModel m;
    m.provenance_ = std::move(provenance);
    m.hairpin_.assign(31, kInf);
    m.bulge_.assign(31, kInf);
    m.internal_.assign(31, kInf);
    std::array<std::array<bool, 6>, 6> stack_seen{};

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        auto fail = [&](const std::string& why) -> std::runtime_error {
            return std::runtime_error("energy model line " + std::to_string(lineno) + ": " + why);
        };
        if (kind == "stack") {
            std::string outer, inner;
            double v;
            if (!(ls >> outer >> inner >> v))
                throw fail("expected: stack OUTER INNER value");
            int o = pair_type_name(outer), i = pair_type_name(inner);
            if (o < 0 || i < 0)
                throw fail("unknown pair in stack record");
            if (v >= 0.0)
                throw fail("stacking energies must be negative");
            m.stack_[o][i] = cents_from_kcal(v);
            stack_seen[o][i] = true;
        } else if (kind == "hairpin" || kind == "bulge" || kind == "internal") {
            int size;
            double v;
            if (!(ls >> size >> v))
                throw fail("expected: " + kind + " SIZE value");
            if (v < 0.0)
                throw fail("loop penalties must be nonnegative");
            auto& table = kind == "hairpin" ? m.hairpin_ : kind == "bulge" ? m.bulge_ : m.internal_;
            if (size < 0 || size >= static_cast<int>(table.size()))
                throw fail("loop size out of range");
            table[size] = cents_from_kcal(v);
        } else if (kind == "multiloop") {
            std::string which;
            double v;
            if (!(ls >> which >> v))
                throw fail("expected: multiloop {close|branch|unpaired} value");
            if (v < 0.0)
                throw fail("multiloop constants must be nonnegative");
            if (which == "close")
                m.ml_close_cents = cents_from_kcal(v);
            else if (which == "branch")
                m.ml_branch_cents = cents_from_kcal(v);
            else if (which == "unpaired")
                m.ml_unpaired_cents = cents_from_kcal(v);
            else
                throw fail("unknown multiloop constant '" + which + "'");
        } else if (kind == "option") {
            std::string which;
            double v;
            if (!(ls >> which >> v))
                throw fail("expected: option NAME value");
            if (which == "hairpin_min")
                m.hairpin_min = static_cast<int>(v);
            else if (which == "max_interior_span")
                m.max_interior_span = static_cast<int>(v);
            else if (which == "loop_extension_coef")
                m.ext_coef_cents_ = cents_from_kcal(v);
            else
                throw fail("unknown option '" + which + "'");
        } else {
            throw fail("unknown record kind '" + kind + "'");
        }
    }

    for (int o = 0; o < 6; ++o)
        for (int i = 0; i < 6; ++i)
            if (!stack_seen[o][i])
                throw std::runtime_error("energy model missing stack entry");
    for (int s = m.hairpin_min; s <= 30; ++s)
        if (m.hairpin_[s] == kInf)
            throw std::runtime_error("energy model missing hairpin size " + std::to_string(s));
    for (int s = 1; s <= 30; ++s)
        if (m.bulge_[s] == kInf)
            throw std::runtime_error("energy model missing bulge size " + std::to_string(s));
    for (int s = 2; s <= 30; ++s)
        if (m.internal_[s] == kInf)
            throw std::runtime_error("energy model missing internal size " + std::to_string(s));
    return m;
}

EnergyModel EnergyModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open energy model: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse(os.str(), path);
}

const EnergyModel& EnergyModel::bundled() {
    static const EnergyModel m = parse(bundled::energy_tsv(), "bundled reduced NN model");
    return m;
}

int EnergyModel::extend_cents(int base, int size, int table_max) const {
    return base + static_cast<int>(std::llround(
                      ext_coef_cents_ * std::log(static_cast<double>(size) / table_max)));
}

int EnergyModel::hairpin_cents(int size) const {
    if (size < hairpin_min)
        return kInf;
    if (size <= 30)
        return hairpin_[size];
    return extend_cents(hairpin_[30], size, 30);
}

int EnergyModel::bulge_cents(int size) const {
    if (size < 1)
        return kInf;
    if (size <= 30)
        return bulge_[size];
    return extend_cents(bulge_[30], size, 30);
}

int EnergyModel::internal_cents(int size) const {
    if (size < 2)
        return kInf;
    if (size <= 30)
        return internal_[size];
    return extend_cents(internal_[30], size, 30);
}

bool EnergyModel::operator==(const EnergyModel& o) const {
    return stack_ == o.stack_ && hairpin_ == o.hairpin_ && bulge_ == o.bulge_ &&
           internal_ == o.internal_ && ml_close_cents == o.ml_close_cents &&
           ml_branch_cents == o.ml_branch_cents && ml_unpaired_cents == o.ml_unpaired_cents &&
           hairpin_min == o.hairpin_min && max_interior_span == o.max_interior_span &&
           ext_coef_cents_ == o.ext_coef_cents_;
}

// ---------------------------------------------------------------------------
// Nussinov maximum pairing

SecondaryStructure fold_nussinov(const NucleicSequence& seq, int hairpin_min) {
    const int n = static_cast<int>(seq.size());
    if (n == 0)
        throw std::invalid_argument("cannot fold empty sequence");
    const std::string& s = seq.dna();

    auto can_pair = [&](int i, int j) {
        return j - i > hairpin_min && pair_type(s[i], s[j]) >= 0;
    };

    std::vector<int> N(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> int& { return N[static_cast<std::size_t>(i) * n + j]; };

    for (int d = hairpin_min + 1; d < n; ++d) {
        for (int i = 0, j = d; j < n; ++i, ++j) {
            int best = at(i + 1, j); // i unpaired
            for (int k = i + hairpin_min + 1; k <= j; ++k) {
                if (pair_type(s[i], s[k]) < 0)
                    continue;
                int inner = (i + 1 <= k - 1) ? at(i + 1, k - 1) : 0;
                int outer = (k + 1 <= j) ? at(k + 1, j) : 0;
                best = std::max(best, 1 + inner + outer);
            }
            at(i, j) = best;
        }
    }

    // traceback: prefer pairing, smallest partner first
    std::string db(n, '.');
    int pair_count = 0;
    std::vector<std::pair<int, int>> work{{0, n - 1}};
    while (!work.empty()) {
        auto [i, j] = work.back();
        work.pop_back();
        if (i >= j || j - i <= hairpin_min)
            continue;
        int target = at(i, j);
        if (target == 0)
            continue;
        bool paired = false;
        for (int k = i + hairpin_min + 1; k <= j; ++k) {
            if (pair_type(s[i], s[k]) < 0)
                continue;
            int inner = (i + 1 <= k - 1) ? at(i + 1, k - 1) : 0;
            int outer = (k + 1 <= j) ? at(k + 1, j) : 0;
            if (1 + inner + outer == target) {
                db[i] = '(';
                db[k] = ')';
                ++pair_count;
                work.emplace_back(i + 1, k - 1);
                work.emplace_back(k + 1, j);
                paired = true;
                break;
            }
        }
        if (!paired)
            work.emplace_back(i + 1, j);
    }

    SecondaryStructure out;
    out.dot_bracket = std::move(db);
    out.pair_count = pair_count;
    return out;
}

// ---------------------------------------------------------------------------
// Zuker-style MFE over the reduced model

namespace {

struct MfeDp {
    const std::string& s;
    const EnergyModel& m;
    int n;
    std::vector<int> V, WM, WM2;
    std::vector<int> W; // exterior prefix, W[j+1] covers [0..j]

    MfeDp(const NucleicSequence& seq, const EnergyModel& model)
        : s(seq.dna()), m(model), n(static_cast<int>(seq.size())) {
        std::size_t cells = static_cast<std::size_t>(n) * n;
        V.assign(cells, kInf);
        WM.assign(cells, kInf);
        WM2.assign(cells, kInf);
        W.assign(n + 1, 0);
    }

    int& v(int i, int j) { return V[static_cast<std::size_t>(i) * n + j]; }
    int& wm(int i, int j) { return WM[static_cast<std::size_t>(i) * n + j]; }
    int& wm2(int i, int j) { return WM2[static_cast<std::size_t>(i) * n + j]; }

    bool can_pair(int i, int j) const {
        return j - i > m.hairpin_min && pair_type(s[i], s[j]) >= 0;
    }

    int interior_cost(int i, int j, int p, int q) const {
        int l = p - i - 1, r = j - q - 1;
        if (l == 0 && r == 0)
            return m.stack_cents(pair_type(s[i], s[j]), pair_type(s[p], s[q]));
        if (l + r > m.max_interior_span)
            return kInf;
        if (l == 0 || r == 0)
            return m.bulge_cents(l + r);
        return m.internal_cents(l + r);
    }

    void fill() {
        for (int d = m.hairpin_min + 1; d < n; ++d) {
            for (int i = 0, j = d; j < n; ++i, ++j) {
                // V
                if (can_pair(i, j)) {
                    int best = m.hairpin_cents(j - i - 1);
                    int max_l = std::min(m.max_interior_span, j - i - 2);
                    for (int p = i + 1; p <= i + 1 + max_l && p < j; ++p) {
                        int l = p - i - 1;
                        int min_q = std::max(p + m.hairpin_min + 1, j - 1 - (m.max_interior_span - l));
                        for (int q = j - 1; q >= min_q; --q) {
                            if (pair_type(s[p], s[q]) < 0)
                                continue;
                            int vin = v(p, q);
                            if (vin >= kInf)
                                continue;
                            int cost = interior_cost(i, j, p, q);
                            if (cost >= kInf)
                                continue;
                            best = std::min(best, vin + cost);
                        }
                    }
                    if (j - i >= 2 && wm2(i + 1, j - 1) < kInf)
                        best = std::min(best, m.ml_close_cents + m.ml_branch_cents + wm2(i + 1, j - 1));
                    v(i, j) = best;
                }
                // WM2: two or more branches. Each side needs room for at
                // least one hairpin, which bounds the split scan.
                {
                    int best = kInf;
                    for (int k = i + m.hairpin_min + 1; k <= j - m.hairpin_min - 2; ++k) {
                        int a = wm(i, k), b = wm(k + 1, j);
                        if (a < kInf && b < kInf)
                            best = std::min(best, a + b);
                    }
                    wm2(i, j) = best;
                }
                // WM: at least one branch inside a multiloop
                {
                    int best = kInf;
                    if (v(i, j) < kInf)
                        best = v(i, j) + m.ml_branch_cents;
                    if (wm(i + 1, j) < kInf)
                        best = std::min(best, wm(i + 1, j) + m.ml_unpaired_cents);
                    if (wm(i, j - 1) < kInf)
                        best = std::min(best, wm(i, j - 1) + m.ml_unpaired_cents);
                    best = std::min(best, wm2(i, j));
                    wm(i, j) = best;
                }
            }
        }
        // exterior
        for (int j = 0; j < n; ++j) {
            int best = W[j]; // j unpaired
            for (int i = 0; i + m.hairpin_min + 1 <= j; ++i) {
                if (v(i, j) < kInf)
                    best = std::min(best, W[i] + v(i, j));
            }
            W[j + 1] = best;
        }
    }

    void trace(std::string& db) {
        std::vector<std::array<int, 3>> work; // {mode, i, j}: 0=W prefix end, 1=V, 2=WM, 3=WM2
        work.push_back({0, 0, n - 1});
        while (!work.empty()) {
            auto [mode, i, j] = work.back();
            work.pop_back();
            if (mode == 0) {
                // exterior over [0..j]; pairing preferred, smallest partner first
                int jj = j;
                while (jj >= 0) {
                    bool paired = false;
                    for (int ii = 0; ii + m.hairpin_min + 1 <= jj; ++ii) {
                        if (v(ii, jj) < kInf && W[ii] + v(ii, jj) == W[jj + 1]) {
                            work.push_back({1, ii, jj});
                            jj = ii - 1;
                            paired = true;
                            break;
                        }
                    }
                    if (!paired)
                        --jj; // only reachable when W[jj+1] == W[jj]
                }
            } else if (mode == 1) {
                db[i] = '(';
                db[j] = ')';
                int target = v(i, j);
                if (target == m.hairpin_cents(j - i - 1))
                    continue;
                bool done = false;
                int max_l = std::min(m.max_interior_span, j - i - 2);
                for (int p = i + 1; p <= i + 1 + max_l && p < j && !done; ++p) {
                    int l = p - i - 1;
                    int min_q = std::max(p + m.hairpin_min + 1, j - 1 - (m.max_interior_span - l));
                    for (int q = j - 1; q >= min_q; --q) {
                        if (pair_type(s[p], s[q]) < 0 || v(p, q) >= kInf)
                            continue;
                        int cost = interior_cost(i, j, p, q);
                        if (cost < kInf && v(p, q) + cost == target) {
                            work.push_back({1, p, q});
                            done = true;
                            break;
                        }
                    }
                }
                if (!done)
                    work.push_back({3, i + 1, j - 1}); // multiloop interior
            } else if (mode == 2) {
                int target = wm(i, j);
                if (can_pair(i, j) && v(i, j) < kInf && v(i, j) + m.ml_branch_cents == target) {
                    work.push_back({1, i, j});
                } else if (i + 1 <= j && wm(i + 1, j) < kInf &&
                           wm(i + 1, j) + m.ml_unpaired_cents == target) {
                    work.push_back({2, i + 1, j});
                } else if (j - 1 >= i && wm(i, j - 1) < kInf &&
                           wm(i, j - 1) + m.ml_unpaired_cents == target) {
                    work.push_back({2, i, j - 1});
                } else {
                    work.push_back({3, i, j});
                }
            } else {
                int target = wm2(i, j);
                for (int k = i + m.hairpin_min + 1; k <= j - m.hairpin_min - 2; ++k) {
                    if (wm(i, k) < kInf && wm(k + 1, j) < kInf && wm(i, k) + wm(k + 1, j) == target) {
                        work.push_back({2, i, k});
                        work.push_back({2, k + 1, j});
                        break;
                    }
                }
            }
        }
    }
};

} // namespace

SecondaryStructure fold_mfe(const NucleicSequence& seq, const EnergyModel& model) {
    const int n = static_cast<int>(seq.size());
    if (n == 0)
        throw std::invalid_argument("cannot fold empty sequence");

    MfeDp dp(seq, model);
    dp.fill();

    SecondaryStructure out;
    out.dot_bracket.assign(seq.size(), '.');
    dp.trace(out.dot_bracket);
    out.energy = dp.W[n] / 100.0;
    out.pair_count = static_cast<int>(std::count(out.dot_bracket.begin(),
                                                 out.dot_bracket.end(), '('));
    return out;
}

// ---------------------------------------------------------------------------
// external engine adapter

std::pair<std::string, double> split_structure_energy(std::string_view line) {
    std::size_t open = line.rfind('(');
    std::size_t close = line.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw std::runtime_error("malformed engine line (no trailing energy): " +
                                 std::string(line));
    std::string inside(line.substr(open + 1, close - open - 1));
    std::string compact;
    for (char c : inside)
        if (c != ' ' && c != '\t')
            compact.push_back(c);
    std::size_t used = 0;
    double energy = 0.0;
    try {
        energy = std::stod(compact, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("malformed engine energy field: (" + inside + ")");
    }
    if (used != compact.size())
        throw std::runtime_error("malformed engine energy field: (" + inside + ")");

    std::string structure(line.substr(0, open));
    while (!structure.empty() && (structure.back() == ' ' || structure.back() == '\t'))
        structure.pop_back();
    return {structure, energy};
}

SecondaryStructure fold_external(const NucleicSequence& seq, const ExternalFolderConfig& cfg) {
    if (cfg.command.empty())
        throw std::runtime_error("external folder: no command configured");

    detail::ProcessResult proc = detail::run_with_input(cfg.command, seq.to_rna().str() + "\n");
    if (proc.exit_code != 0)
        throw std::runtime_error("external folder exited with status " +
                                 std::to_string(proc.exit_code));

    std::istringstream in(proc.output);
    std::string echoed, structure_line;
    if (!std::getline(in, echoed) || !std::getline(in, structure_line))
        throw std::runtime_error("external folder: expected two output lines");

    auto [structure, energy] = split_structure_energy(structure_line);
    if (structure.size() != seq.size())
        throw std::runtime_error("external folder: structure length " +
                                 std::to_string(structure.size()) + " != sequence length " +
                                 std::to_string(seq.size()));
    parse_dot_bracket(structure); // balance + alphabet check

    SecondaryStructure out;
    out.dot_bracket = structure;
    out.energy = energy;
    out.pair_count =
        static_cast<int>(std::count(out.dot_bracket.begin(), out.dot_bracket.end(), '('));
    return out;
}

// ---------------------------------------------------------------------------
// structure analysis

MotifCounts count_motifs(const SecondaryStructure& s) {
    auto pairs = parse_dot_bracket(s.dot_bracket);
    const int n = static_cast<int>(s.dot_bracket.size());
    std::vector<int> partner(n, -1);
    for (auto [i, j] : pairs) {
        partner[i] = j;
        partner[j] = i;
    }

    MotifCounts out;
    for (auto [i, j] : pairs) {
        // stems: count maximal helices once, at their outermost pair
        if (!(i > 0 && j + 1 < n && partner[i - 1] == j + 1))
            out.stems++;

        // classify the loop closed by (i, j)
        int children = 0, unpaired = 0;
        int first_child_i = -1, last_child_j = -1;
        int t = i + 1;
        while (t < j) {
            if (partner[t] > t) {
                if (children == 0)
                    first_child_i = t;
                last_child_j = partner[t];
                ++children;
                t = partner[t] + 1;
            } else {
                ++unpaired;
                ++t;
            }
        }
        if (children == 0) {
            out.hairpins++;
        } else if (children == 1) {
            int l = first_child_i - i - 1;
            int r = j - last_child_j - 1;
            if (l == 0 && r == 0)
                ; // stack, not a loop
            else if (l == 0 || r == 0)
                out.bulges++;
            else
                out.internal_loops++;
        } else {
            out.multiloops++;
        }
    }
    return out;
}

double paired_fraction(const SecondaryStructure& s, std::size_t begin, std::size_t end) {
    if (begin >= end || end > s.dot_bracket.size())
        throw std::invalid_argument("paired_fraction: empty or out-of-range interval");
    std::size_t paired = 0;
    for (std::size_t t = begin; t < end; ++t)
        if (s.dot_bracket[t] != '.')
            ++paired;
    return static_cast<double>(paired) / static_cast<double>(end - begin);
}

StartWindow window_around_start(const Construct& construct, int radius) {
    if (radius <= 0)
        throw std::invalid_argument("window radius must be positive");
    const std::size_t start = construct.cds_start();
    const std::size_t len = construct.transcript_length();
    StartWindow w;
    w.begin = start >= static_cast<std::size_t>(radius) ? start - radius : 0;
    w.end = std::min(len, start + static_cast<std::size_t>(radius));
    w.seq = construct.transcript().subseq(w.begin, w.end - w.begin);
    return w;
}

void validate_structure(const NucleicSequence& seq, const SecondaryStructure& s,
                        int hairpin_min) {
    if (s.dot_bracket.size() != seq.size())
        throw std::invalid_argument("structure length != sequence length");
    auto pairs = parse_dot_bracket(s.dot_bracket);
    for (auto [i, j] : pairs) {
        if (j - i <= hairpin_min)
            throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") violates the minimum hairpin span");
        if (pair_type(seq.at(i), seq.at(j)) < 0)
            throw std::invalid_argument("illegal base pair at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
    }
    if (static_cast<int>(pairs.size()) != s.pair_count)
        throw std::invalid_argument("pair_count does not match the dot-bracket string");
}

SecondaryStructure BuiltinFolder::fold(const NucleicSequence& seq) const {
    if (!allow_long_ && seq.size() > max_len_)
        throw std::runtime_error(
            "sequence of length " + std::to_string(seq.size()) + " exceeds the built-in DP limit (" +
            std::to_string(max_len_) + "); use the external engine or raise the limit");
    return fold_mfe(seq, model_);
}

SecondaryStructure CachingFolder::fold(const NucleicSequence& seq) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(seq.dna());
        if (it != cache_.end())
            return it->second;
    }
    SecondaryStructure folded = inner_.fold(seq);
    {
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(seq.dna(), folded);
    }
    return folded;
}

} // namespace mrnaopt
