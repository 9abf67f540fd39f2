// Reference enumeration.  Deliberately shares no code with the backtracking
// search or with diagram.cpp: matchings are walked exhaustively, vertices
// come from a union-find over polygon corners, and canonical forms from
// sorting every relabelled rotation as a string.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "mcomb/enumeration.hpp"
#include "mcomb/error.hpp"

namespace mcomb {
namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
    std::vector<std::size_t> parent, size;
};

std::string relabel_from(const std::vector<int>& labels, std::size_t shift) {
    const std::size_t n = labels.size();
    std::vector<int> map(n / 2 + 1, 0);
    int next = 1;
    std::string out;
    for (std::size_t t = 0; t < n; ++t) {
        int& m = map[static_cast<std::size_t>(labels[(t + shift) % n])];
        if (m == 0) m = next++;
        out += static_cast<char>('0' + m);
    }
    return out;
}

void walk(std::vector<int>& labels, int next_label, const std::function<void()>& leaf) {
    auto free = std::find(labels.begin(), labels.end(), 0);
    if (free == labels.end()) {
        leaf();
        return;
    }
    *free = next_label;
    for (auto it = free + 1; it != labels.end(); ++it) {
        if (*it != 0) continue;
        *it = next_label;
        walk(labels, next_label + 1, leaf);
        *it = 0;
    }
    *free = 0;
}

}  // namespace

std::vector<GaussianWord> brute_force_oracle(int chords, int genus, int min_valence) {
    if (chords > 7)
        throw Error(ErrorCode::SizeLimitExceeded, "oracle is limited to 7 chords");
    if (chords < 1) return {};

    const std::size_t size = 2 * static_cast<std::size_t>(chords);
    std::set<std::string> classes;
    std::vector<int> labels(size, 0);
    walk(labels, 1, [&] {
        UnionFind corners(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i + 1; j < size; ++j) {
                if (labels[i] != labels[j]) continue;
                corners.unite(i, (j + 1) % size);
                corners.unite((i + 1) % size, j);
            }
        }
        int vertices = 0;
        bool valence_ok = true;
        for (std::size_t c = 0; c < size; ++c) {
            if (corners.find(c) != c) continue;
            ++vertices;
            valence_ok = valence_ok && static_cast<int>(corners.size[c]) >= min_valence;
        }
        if (!valence_ok || chords + 1 - vertices != 2 * genus) return;

        std::string best = relabel_from(labels, 0);
        for (std::size_t s = 1; s < size; ++s) best = std::min(best, relabel_from(labels, s));
        classes.insert(best);
    });

    std::vector<GaussianWord> out;
    for (const auto& c : classes) {
        std::vector<int> symbols;
        for (char ch : c) symbols.push_back(ch - '0');
        out.push_back(GaussianWord::from_symbols(symbols));
    }
    return out;
}

}  // namespace mcomb
