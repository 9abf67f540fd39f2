#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mcomb/diagram.hpp"

namespace mcomb {

enum class CellClass { Simple, SpecialEven, SpecialOdd };

std::string_view to_string(CellClass c);
std::optional<CellClass> cell_class_from_string(std::string_view s);

struct Cell {
    std::string id;  // "g{genus}-n{chords}-{ordinal}", ordinal 1-based
    GaussianWord word;
    int dim = 0;
    SymmetryInfo aut;
    CellClass classification = CellClass::Simple;

    int chords() const { return word.chords(); }

    /// Derives dim, aut and classification from a canonical word.
    static Cell make(int genus, std::size_t ordinal, GaussianWord canonical_word);
};

/// All cells of one genus, grouped by dimension.  Immutable once built.
class Catalog {
public:
    Catalog() = default;
    /// Throws Internal if two cells share a word or an id.
    Catalog(int genus, std::vector<Cell> cells);

    int genus() const { return genus_; }
    std::vector<int> dims() const;
    std::span<const Cell> cells(int dim) const;
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    const Cell* find(const GaussianWord& canonical_word) const;
    const Cell* find(std::string_view id) const;

private:
    int genus_ = 0;
    std::size_t count_ = 0;
    std::map<int, std::vector<Cell>> by_dim_;
    std::map<GaussianWord, std::pair<int, std::size_t>> word_index_;
    std::unordered_map<std::string, std::pair<int, std::size_t>> id_index_;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000'000ULL;

struct EnumerationOptions {
    /// Vertices of lower valence are rejected; 3 for moduli-space cells.
    int min_valence = 3;
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

/// (2n-1)!!, saturating at UINT64_MAX.
std::uint64_t matching_count(int chords);

/// Canonical words of all rotation classes of n-chord one-face gluings of
/// genus g whose vertices all have valence >= options.min_valence, in
/// lexicographic order.  Throws SizeLimitExceeded past the budget.
std::vector<GaussianWord> enumerate_gluings(int chords, int genus,
                                            const EnumerationOptions& options = {});

/// One Cell per rotation class; ids are ordinals in lexicographic order.
std::vector<Cell> enumerate_cells(int chords, int genus, const EnumerationOptions& options = {});

/// Naive reference: walks all (2n-1)!! matchings.  n <= 7 only.
std::vector<GaussianWord> brute_force_oracle(int chords, int genus, int min_valence = 3);

/// Chord counts that can carry cells of genus g: one vertex up to trivalent.
std::pair<int, int> chord_range(int genus);

/// All cells of genus g >= 1.  Throws SizeLimitExceeded when the projected
/// matching count exceeds options.budget.
Catalog build_catalog(int genus, const EnumerationOptions& options = {});

}  // namespace mcomb
