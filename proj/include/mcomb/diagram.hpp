#pragma once

// Single chord diagrams: Gaussian words, polygon gluings, rotation classes.
//
// A diagram on 2n cyclically ordered positions (polygon sides) pairs every
// position with exactly one other.  Paired sides are identified with
// opposite orientations, so every diagram describes a closed orientable
// surface with one face.  Chords are numbered 1..n in order of first
// occurrence clockwise from position 0 (the "standard" numeration).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcomb {

enum class Parity : std::uint8_t { Even, Odd };

constexpr Parity operator*(Parity a, Parity b) {
    return a == b ? Parity::Even : Parity::Odd;
}
constexpr int sign_of(Parity p) { return p == Parity::Even ? 1 : -1; }
std::string_view to_string(Parity p);

/// Sequence of 2n chord labels in standard numeration.
class GaussianWord {
public:
    GaussianWord() = default;

    /// Validates the double-occurrence property and relabels to standard
    /// numeration.  Throws EmptyInput, OddLength or NonDoubleOccurrence.
    static GaussianWord from_symbols(std::span<const int> symbols);

    std::span<const int> symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    int chords() const { return static_cast<int>(symbols_.size() / 2); }
    int operator[](std::size_t i) const { return symbols_[i]; }

    friend bool operator==(const GaussianWord&, const GaussianWord&) = default;
    friend auto operator<=>(const GaussianWord&, const GaussianWord&) = default;

private:
    explicit GaussianWord(std::vector<int> symbols) : symbols_(std::move(symbols)) {}
    std::vector<int> symbols_;
};

/// Accepts bare digits ("12341234", n <= 9) or dot-delimited labels
/// ("1.2.3.4.1.2.3.4") for any n.  Whitespace around tokens is ignored.
GaussianWord parse_word(std::string_view text);

/// Bare digits when n <= 9, dot-delimited otherwise.
std::string render(const GaussianWord& word);

/// Fixed-point-free involution on positions 0..2n-1; position 0 is the mark.
class ChordDiagram {
public:
    ChordDiagram() = default;
    explicit ChordDiagram(const GaussianWord& word);

    /// Throws NonDoubleOccurrence when `mates` is not a fixed-point-free
    /// involution.
    static ChordDiagram from_matching(std::vector<int> mates);

    std::size_t positions() const { return mates_.size(); }
    int chords() const { return static_cast<int>(mates_.size() / 2); }
    int mate(std::size_t position) const { return mates_[position]; }
    std::span<const int> mates() const { return mates_; }

    /// The diagram read from position `shift` onwards.
    ChordDiagram rotated(std::size_t shift) const;

    /// Standard-numeration word read from the mark.
    GaussianWord word() const;

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    std::vector<int> mates_;
};

/// Standard labels of `diagram` read from position `shift`, written to `out`
/// (size 2n).  Shared by canonicalization and the enumerator.
void standard_labels(std::span<const int> mates, std::size_t shift, std::span<int> out);

/// Cycle lengths of the corner map c -> mate(c) + 1.  Corner k sits between
/// sides k-1 and k; each cycle is one vertex of the embedded graph and its
/// length is the vertex valence.
std::vector<int> vertex_valences(const ChordDiagram& diagram);
int vertex_count(const ChordDiagram& diagram);

/// g = (n + 1 - V) / 2.  Throws ParityViolation if n + 1 - V is odd.
int genus(const ChordDiagram& diagram);

struct Canonical {
    GaussianWord word;
    std::size_t rotation = 0;  // smallest shift reaching `word`
};

/// Lexicographically smallest standard word over all rotations.
Canonical canonicalize(const ChordDiagram& diagram);

struct SymmetryInfo {
    int order = 1;
    std::size_t min_step = 0;
    /// chord_perm[c - 1] is the image of chord c under rotation by min_step.
    std::vector<int> chord_perm;
    Parity parity = Parity::Even;

    /// Size of the orbit of chord `label` under the rotation group.
    int orbit_size(int label) const;
    /// Smallest label in the orbit of `label`.
    int orbit_representative(int label) const;
};

SymmetryInfo symmetry(const ChordDiagram& diagram);

Parity permutation_parity(std::span<const int> one_based_perm);

struct DeletionResult {
    ChordDiagram child;
    /// Induced label (1..n-1) at each child position.
    std::vector<int> induced_labels;
    int deleted_chord = 0;
    bool genus_preserved = false;
};

/// Removes both sides of chord `label` (1-based, standard numeration).
/// Throws ChordOutOfRange.
DeletionResult delete_chord(const ChordDiagram& diagram, int label);

struct Identification {
    std::size_t rotation = 0;
    Parity parity = Parity::Even;
};

struct IdentificationSet {
    /// Every rotation carrying the child onto the target word, ascending.
    std::vector<Identification> matches;

    bool contains(Parity p) const;
    bool unique_parity() const;
    /// Parity of the smallest identifying rotation.
    Parity minimal() const { return matches.front().parity; }
};

/// For each rotation s with std(rotate(child, s)) == target, the permutation
/// induced label -> target label, and its parity.  Throws NotIsomorphic.
IdentificationSet identification_parity(const DeletionResult& child, const GaussianWord& target);

}  // namespace mcomb
