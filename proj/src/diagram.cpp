#include "mcomb/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "mcomb/error.hpp"

namespace mcomb {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::OddLength: return "OddLength";
        case ErrorCode::NonDoubleOccurrence: return "NonDoubleOccurrence";
        case ErrorCode::InvalidToken: return "InvalidToken";
        case ErrorCode::ChordOutOfRange: return "ChordOutOfRange";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::NotIsomorphic: return "NotIsomorphic";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::FaceNotInCatalog: return "FaceNotInCatalog";
        case ErrorCode::NegativeBetti: return "NegativeBetti";
        case ErrorCode::CacheInvalid: return "CacheInvalid";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

GaussianWord GaussianWord::from_symbols(std::span<const int> symbols) {
    if (symbols.empty()) throw Error(ErrorCode::EmptyInput, "word has no symbols");
    if (symbols.size() % 2 != 0)
        throw Error(ErrorCode::OddLength, "word length " + std::to_string(symbols.size()));

    std::map<int, int> counts;
    for (int s : symbols) ++counts[s];
    for (auto [label, count] : counts) {
        if (count != 2)
            throw Error(ErrorCode::NonDoubleOccurrence,
                        "label " + std::to_string(label) + " occurs " + std::to_string(count) +
                            " times");
    }

    std::map<int, int> relabel;
    std::vector<int> out;
    out.reserve(symbols.size());
    for (int s : symbols) {
        auto [it, inserted] = relabel.try_emplace(s, static_cast<int>(relabel.size()) + 1);
        out.push_back(it->second);
    }
    return GaussianWord(std::move(out));
}

GaussianWord parse_word(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorCode::EmptyInput, "empty word");

    std::vector<int> symbols;
    if (text.find('.') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw Error(ErrorCode::InvalidToken, std::string("unexpected character '") + c + "'");
            symbols.push_back(c - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('.', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view token = text.substr(start, end - start);
            while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
            while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0)
                throw Error(ErrorCode::InvalidToken, "bad token '" + std::string(token) + "'");
            symbols.push_back(value);
            start = end + 1;
        }
    }
    return GaussianWord::from_symbols(symbols);
}

std::string render(const GaussianWord& word) {
    std::string out;
    const bool bare = word.chords() <= 9;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!bare && i > 0) out += '.';
        out += std::to_string(word[i]);
    }
    return out;
}

ChordDiagram::ChordDiagram(const GaussianWord& word) : mates_(word.size(), -1) {
    std::vector<int> first(static_cast<std::size_t>(word.chords()) + 1, -1);
    for (std::size_t i = 0; i < word.size(); ++i) {
        int& f = first[static_cast<std::size_t>(word[i])];
        if (f < 0) {
            f = static_cast<int>(i);
        } else {
            mates_[i] = f;
            mates_[static_cast<std::size_t>(f)] = static_cast<int>(i);
        }
    }
}

ChordDiagram ChordDiagram::from_matching(std::vector<int> mates) {
    const auto size = static_cast<int>(mates.size());
    if (size == 0) throw Error(ErrorCode::EmptyInput, "empty matching");
    if (size % 2 != 0) throw Error(ErrorCode::OddLength, "matching on odd number of positions");
    for (int i = 0; i < size; ++i) {
        const int m = mates[static_cast<std::size_t>(i)];
        if (m < 0 || m >= size || m == i || mates[static_cast<std::size_t>(m)] != i)
            throw Error(ErrorCode::NonDoubleOccurrence,
                        "position " + std::to_string(i) + " is not properly paired");
    }
    ChordDiagram d;
    d.mates_ = std::move(mates);
    return d;
}

ChordDiagram ChordDiagram::rotated(std::size_t shift) const {
    const std::size_t size = mates_.size();
    ChordDiagram d;
    d.mates_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t from = (i + shift) % size;
        const auto to = static_cast<std::size_t>(mates_[from]);
        d.mates_[i] = static_cast<int>((to + size - shift % size) % size);
    }
    return d;
}

void standard_labels(std::span<const int> mates, std::size_t shift, std::span<int> out) {
    const std::size_t size = mates.size();
    int next = 1;
    for (std::size_t t = 0; t < size; ++t) {
        const std::size_t pos = (t + shift) % size;
        const std::size_t mate = static_cast<std::size_t>(mates[pos]);
        const std::size_t mate_t = (mate + size - shift) % size;
        out[t] = mate_t > t ? next++ : out[mate_t];
    }
}

GaussianWord ChordDiagram::word() const {
    std::vector<int> labels(mates_.size());
    standard_labels(mates_, 0, labels);
    return GaussianWord::from_symbols(labels);
}

std::vector<int> vertex_valences(const ChordDiagram& diagram) {
    const std::size_t size = diagram.positions();
    std::vector<char> seen(size, 0);
    std::vector<int> valences;
    for (std::size_t start = 0; start < size; ++start) {
        if (seen[start]) continue;
        int length = 0;
        std::size_t c = start;
        while (!seen[c]) {
            seen[c] = 1;
            ++length;
            c = (static_cast<std::size_t>(diagram.mate(c)) + 1) % size;
        }
        valences.push_back(length);
    }
    return valences;
}

int vertex_count(const ChordDiagram& diagram) {
    return static_cast<int>(vertex_valences(diagram).size());
}

int genus(const ChordDiagram& diagram) {
    const int excess = diagram.chords() + 1 - vertex_count(diagram);
    if (excess % 2 != 0 || excess < 0)
        throw Error(ErrorCode::ParityViolation, "n + 1 - V = " + std::to_string(excess));
    return excess / 2;
}

Canonical canonicalize(const ChordDiagram& diagram) {
    const std::size_t size = diagram.positions();
    std::vector<int> best(size), current(size);
    standard_labels(diagram.mates(), 0, best);
    std::size_t best_shift = 0;
    for (std::size_t s = 1; s < size; ++s) {
        standard_labels(diagram.mates(), s, current);
        if (std::lexicographical_compare(current.begin(), current.end(), best.begin(), best.end())) {
            best.swap(current);
            best_shift = s;
        }
    }
    return {GaussianWord::from_symbols(best), best_shift};
}

Parity permutation_parity(std::span<const int> perm) {
    std::vector<char> seen(perm.size(), 0);
    bool odd = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t length = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j] - 1)) {
            seen[j] = 1;
            ++length;
        }
        if (length % 2 == 0) odd = !odd;
    }
    return odd ? Parity::Odd : Parity::Even;
}

SymmetryInfo symmetry(const ChordDiagram& diagram) {
    const std::size_t size = diagram.positions();
    std::size_t step = 1;
    for (; step < size; ++step) {
        bool preserved = true;
        for (std::size_t i = 0; i < size && preserved; ++i) {
            const auto image = (static_cast<std::size_t>(diagram.mate(i)) + step) % size;
            preserved = static_cast<std::size_t>(diagram.mate((i + step) % size)) == image;
        }
        if (preserved) break;
    }

    SymmetryInfo info;
    info.min_step = step;
    info.order = static_cast<int>(size / step);
    std::vector<int> labels(size);
    standard_labels(diagram.mates(), 0, labels);
    info.chord_perm.assign(static_cast<std::size_t>(diagram.chords()), 0);
    for (std::size_t i = 0; i < size; ++i)
        info.chord_perm[static_cast<std::size_t>(labels[i] - 1)] = labels[(i + step) % size];
    info.parity = permutation_parity(info.chord_perm);
    return info;
}

int SymmetryInfo::orbit_size(int label) const {
    int size = 1;
    for (int c = chord_perm[static_cast<std::size_t>(label - 1)]; c != label;
         c = chord_perm[static_cast<std::size_t>(c - 1)])
        ++size;
    return size;
}

int SymmetryInfo::orbit_representative(int label) const {
    int best = label;
    for (int c = chord_perm[static_cast<std::size_t>(label - 1)]; c != label;
         c = chord_perm[static_cast<std::size_t>(c - 1)])
        best = std::min(best, c);
    return best;
}

DeletionResult delete_chord(const ChordDiagram& diagram, int label) {
    const int n = diagram.chords();
    if (label < 1 || label > n || n < 2)
        throw Error(ErrorCode::ChordOutOfRange,
                    "chord " + std::to_string(label) + " of " + std::to_string(n));

    const std::size_t size = diagram.positions();
    std::vector<int> labels(size);
    standard_labels(diagram.mates(), 0, labels);

    std::vector<int> new_index(size, -1);
    int next = 0;
    for (std::size_t i = 0; i < size; ++i)
        if (labels[i] != label) new_index[i] = next++;

    DeletionResult result;
    result.deleted_chord = label;
    std::vector<int> mates(size - 2);
    result.induced_labels.reserve(size - 2);
    for (std::size_t i = 0; i < size; ++i) {
        if (labels[i] == label) continue;
        mates[static_cast<std::size_t>(new_index[i])] =
            new_index[static_cast<std::size_t>(diagram.mate(i))];
        result.induced_labels.push_back(labels[i] < label ? labels[i] : labels[i] - 1);
    }
    result.child = ChordDiagram::from_matching(std::move(mates));
    result.genus_preserved = genus(result.child) == genus(diagram);
    return result;
}

bool IdentificationSet::contains(Parity p) const {
    return std::any_of(matches.begin(), matches.end(),
                       [p](const Identification& m) { return m.parity == p; });
}

bool IdentificationSet::unique_parity() const {
    return !matches.empty() && !(contains(Parity::Even) && contains(Parity::Odd));
}

IdentificationSet identification_parity(const DeletionResult& child, const GaussianWord& target) {
    const std::size_t size = child.child.positions();
    IdentificationSet result;
    if (target.size() != size)
        throw Error(ErrorCode::NotIsomorphic, "size mismatch");

    std::vector<int> labels(size);
    std::vector<int> sigma(size / 2);
    for (std::size_t s = 0; s < size; ++s) {
        standard_labels(child.child.mates(), s, labels);
        if (!std::equal(labels.begin(), labels.end(), target.symbols().begin())) continue;
        for (std::size_t t = 0; t < size; ++t) {
            const int induced = child.induced_labels[(t + s) % size];
            sigma[static_cast<std::size_t>(induced - 1)] = target[t];
        }
        result.matches.push_back({s, permutation_parity(sigma)});
    }
    if (result.matches.empty())
        throw Error(ErrorCode::NotIsomorphic, "child is not a rotation of the target");
    return result;
}

}  // namespace mcomb
