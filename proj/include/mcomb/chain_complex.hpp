#pragma once

// Rational cellular chain complex of the catalog.
//
// A cell of n chords is an (n-1)-simplex whose vertices are its chords,
// ordered by the standard numeration of the cell's representative word,
// possibly divided by the cyclic rotation group.  Deleting chord j gives
// the face opposite vertex j; if the genus drops the face lies outside the
// (noncompact) space and is discarded.
//
// Coefficient of face f in the boundary of cell c, summed over chords:
//
//   sign_j   = (-1)^(j-1) * sign(sigma_j)
//   weight_j = |Aut f| / |Aut c|
//
// where sigma_j renumbers the induced labels of c[j] into the standard labels
// of f.  Chords in one orbit of Aut c give equal terms, so each orbit
// contributes once with (orbit size) * weight, which is always an integer.
// Special-odd faces receive nothing from simple or special-even parents;
// special-odd parents only see their fixed chords, whose faces are again
// special-odd.  The special-odd cells therefore span a subcomplex.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcomb/enumeration.hpp"

namespace mcomb {

enum class CoefficientRule {
    Discarded,       // genus dropped
    SimpleToSimple,  // rule 1
    SimpleToEven,    // rule 2
    SimpleToOdd,     // rule 3
    EvenParent,      // rule 4
    OddParent,       // rule 5
};

std::string_view to_string(CoefficientRule r);

struct FaceIncidence {
    std::string parent;
    int deleted_chord = 0;
    std::optional<std::string> face;  // empty when discarded
    Parity sign_parity = Parity::Even;
    /// Orbit total, carried by the smallest chord of each orbit; 0 on the
    /// other members.
    std::int64_t alpha = 0;
    CoefficientRule rule = CoefficientRule::Discarded;
    int orbit_size = 1;
    int orbit_representative = 0;
};

/// Rotation offset of the marked point used for a cell.  The default (0)
/// reads every cell from its canonical word.
using RepresentativeRule = std::function<std::size_t(const Cell&)>;

struct ComplexOptions {
    unsigned jobs = 1;
    RepresentativeRule representative;
};

/// Word of `cell` read from its representative's marked point.
GaussianWord representative_word(const Cell& cell, const RepresentativeRule& rule);

/// All incidences of one parent, one per chord.  Throws FaceNotInCatalog.
std::vector<FaceIncidence> boundary_column(const Cell& parent, const Catalog& catalog,
                                           const RepresentativeRule& rule = {});

FaceIncidence boundary_coefficient(const Cell& parent, int chord, const Catalog& catalog,
                                   const RepresentativeRule& rule = {});

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Matrix of d_k : C_k -> C_{k-1}.  Rows are faces, columns are parents,
/// both in catalog order; entries are sorted by (col, row), zeros omitted.
struct BoundaryMatrix {
    int k = 0;
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<MatrixEntry> entries;

    std::vector<std::vector<std::int64_t>> dense() const;
    std::int64_t at(std::size_t row, std::size_t col) const;
};

BoundaryMatrix boundary_matrix(int k, const Catalog& catalog, const ComplexOptions& options = {});

struct ChainComplexData {
    const Catalog* catalog = nullptr;
    std::map<int, BoundaryMatrix> matrices;  // keyed by source dimension k
};

/// Boundary matrices for every k where both C_k and C_{k-1} are nonempty.
ChainComplexData build_chain_complex(const Catalog& catalog, const ComplexOptions& options = {});

struct D2Check {
    int k = 0;  // checks d_{k-1} o d_k
    bool zero = true;
    std::optional<std::string> first_bad_column;
};

struct D2Report {
    std::vector<D2Check> checks;
    bool ok() const;
};

/// Exact integer products d_{k-1} * d_k for every consecutive pair.
D2Report verify_d2(const ChainComplexData& complex);

}  // namespace mcomb
