#include "mcomb/chain_complex.hpp"

#include <algorithm>

#include "mcomb/error.hpp"
#include "parallel.hpp"

namespace mcomb {

std::string_view to_string(CoefficientRule r) {
    switch (r) {
        case CoefficientRule::Discarded: return "discarded";
        case CoefficientRule::SimpleToSimple: return "simple->simple";
        case CoefficientRule::SimpleToEven: return "simple->even";
        case CoefficientRule::SimpleToOdd: return "simple->odd";
        case CoefficientRule::EvenParent: return "even-parent";
        case CoefficientRule::OddParent: return "odd-parent";
    }
    return "unknown";
}

GaussianWord representative_word(const Cell& cell, const RepresentativeRule& rule) {
    if (!rule) return cell.word;
    const std::size_t shift = rule(cell) % cell.word.size();
    if (shift == 0) return cell.word;
    return ChordDiagram(cell.word).rotated(shift).word();
}

namespace {

FaceIncidence incidence_for(const Cell& parent, const ChordDiagram& diagram, const SymmetryInfo& aut,
                            int chord, const Catalog& catalog, const RepresentativeRule& rule) {
    FaceIncidence inc;
    inc.parent = parent.id;
    inc.deleted_chord = chord;
    inc.orbit_size = aut.orbit_size(chord);
    inc.orbit_representative = aut.orbit_representative(chord);

    DeletionResult child = delete_chord(diagram, chord);
    if (!child.genus_preserved) return inc;

    const GaussianWord canonical = canonicalize(child.child).word;
    const Cell* face = catalog.find(canonical);
    if (face == nullptr)
        throw Error(ErrorCode::FaceNotInCatalog,
                    parent.id + " minus chord " + std::to_string(chord) + " gives " + render(canonical));
    inc.face = face->id;

    const IdentificationSet ident = identification_parity(child, representative_word(*face, rule));
    inc.sign_parity = ident.minimal();

    const bool representative = chord == inc.orbit_representative;
    const int sign = sign_of(inc.sign_parity) * ((chord - 1) % 2 == 0 ? 1 : -1);
    const std::int64_t face_order = face->aut.order;
    const std::int64_t parent_order = parent.aut.order;

    auto orbit_total = [&]() -> std::int64_t {
        const std::int64_t scaled = inc.orbit_size * face_order;
        if (scaled % parent_order != 0)
            throw Error(ErrorCode::Internal, "non-integral orbit weight at " + parent.id);
        return sign * (scaled / parent_order);
    };

    switch (parent.classification) {
        case CellClass::Simple:
            if (face->classification == CellClass::SpecialOdd) {
                inc.rule = CoefficientRule::SimpleToOdd;
                return inc;
            }
            inc.rule = face->classification == CellClass::Simple ? CoefficientRule::SimpleToSimple
                                                                 : CoefficientRule::SimpleToEven;
            if (!ident.unique_parity())
                throw Error(ErrorCode::Internal, "ambiguous parity onto " + face->id);
            inc.alpha = orbit_total();
            return inc;
        case CellClass::SpecialEven:
            inc.rule = CoefficientRule::EvenParent;
            if (face->classification == CellClass::SpecialOdd) return inc;
            if (!ident.unique_parity())
                throw Error(ErrorCode::Internal, "ambiguous parity onto " + face->id);
            if (representative) inc.alpha = orbit_total();
            return inc;
        case CellClass::SpecialOdd:
            inc.rule = CoefficientRule::OddParent;
            if (inc.orbit_size > 1) return inc;
            if (face->classification != CellClass::SpecialOdd)
                throw Error(ErrorCode::Internal,
                            "fixed chord of odd cell " + parent.id + " gives non-odd face " + face->id);
            inc.alpha = orbit_total();
            return inc;
    }
    return inc;
}

void check_orbit_consistency(const std::vector<FaceIncidence>& column, const SymmetryInfo& aut,
                             const Catalog& catalog) {
    // Every member of an orbit must land on the same face.  Signs must agree
    // too, except where the face is special-odd and no sign is defined.
    for (const auto& inc : column) {
        const auto& rep = column[static_cast<std::size_t>(inc.orbit_representative - 1)];
        if (inc.face != rep.face)
            throw Error(ErrorCode::Internal, "orbit of chord " + std::to_string(inc.deleted_chord) +
                                                 " in " + inc.parent + " splits across faces");
        const bool signed_term = inc.face && inc.rule != CoefficientRule::OddParent &&
                                 catalog.find(*inc.face)->classification != CellClass::SpecialOdd;
        if (signed_term && aut.order > 1) {
            const int s1 = ((inc.deleted_chord - 1) % 2 == 0 ? 1 : -1) * sign_of(inc.sign_parity);
            const int s2 = ((rep.deleted_chord - 1) % 2 == 0 ? 1 : -1) * sign_of(rep.sign_parity);
            if (s1 != s2)
                throw Error(ErrorCode::Internal, "orbit signs disagree in " + inc.parent);
        }
    }
}

}  // namespace

std::vector<FaceIncidence> boundary_column(const Cell& parent, const Catalog& catalog,
                                           const RepresentativeRule& rule) {
    const ChordDiagram diagram(representative_word(parent, rule));
    const SymmetryInfo aut = symmetry(diagram);
    std::vector<FaceIncidence> column;
    if (parent.chords() < 2) return column;
    for (int j = 1; j <= parent.chords(); ++j)
        column.push_back(incidence_for(parent, diagram, aut, j, catalog, rule));
    check_orbit_consistency(column, aut, catalog);
    return column;
}

FaceIncidence boundary_coefficient(const Cell& parent, int chord, const Catalog& catalog,
                                   const RepresentativeRule& rule) {
    if (chord < 1 || chord > parent.chords())
        throw Error(ErrorCode::ChordOutOfRange,
                    "chord " + std::to_string(chord) + " of " + parent.id);
    const ChordDiagram diagram(representative_word(parent, rule));
    return incidence_for(parent, diagram, symmetry(diagram), chord, catalog, rule);
}

std::vector<std::vector<std::int64_t>> BoundaryMatrix::dense() const {
    std::vector<std::vector<std::int64_t>> out(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (const auto& e : entries) out[e.row][e.col] = e.value;
    return out;
}

std::int64_t BoundaryMatrix::at(std::size_t row, std::size_t col) const {
    for (const auto& e : entries)
        if (e.row == row && e.col == col) return e.value;
    return 0;
}

BoundaryMatrix boundary_matrix(int k, const Catalog& catalog, const ComplexOptions& options) {
    BoundaryMatrix m;
    m.k = k;
    const auto faces = catalog.cells(k - 1);
    const auto parents = catalog.cells(k);
    std::map<std::string, std::size_t> row_of;
    for (const auto& f : faces) {
        row_of.emplace(f.id, m.rows.size());
        m.rows.push_back(f.id);
    }
    for (const auto& p : parents) m.cols.push_back(p.id);

    std::vector<std::vector<MatrixEntry>> columns(parents.size());
    detail::parallel_for(parents.size(), options.jobs, [&](std::size_t col) {
        std::map<std::size_t, std::int64_t> acc;
        for (const auto& inc : boundary_column(parents[col], catalog, options.representative)) {
            if (!inc.face || inc.alpha == 0) continue;
            auto it = row_of.find(*inc.face);
            if (it == row_of.end())
                throw Error(ErrorCode::FaceNotInCatalog, *inc.face + " is not in dimension " +
                                                             std::to_string(k - 1));
            acc[it->second] += inc.alpha;
        }
        for (auto [row, value] : acc)
            if (value != 0) columns[col].push_back({row, col, value});
    });
    for (auto& c : columns) m.entries.insert(m.entries.end(), c.begin(), c.end());
    return m;
}

ChainComplexData build_chain_complex(const Catalog& catalog, const ComplexOptions& options) {
    ChainComplexData cc;
    cc.catalog = &catalog;
    for (int k : catalog.dims())
        if (!catalog.cells(k - 1).empty()) cc.matrices.emplace(k, boundary_matrix(k, catalog, options));
    return cc;
}

bool D2Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const D2Check& c) { return c.zero; });
}

D2Report verify_d2(const ChainComplexData& complex) {
    D2Report report;
    for (const auto& [k, upper] : complex.matrices) {
        auto lower_it = complex.matrices.find(k - 1);
        if (lower_it == complex.matrices.end()) continue;
        const auto lower = lower_it->second.dense();
        const auto up = upper.dense();
        D2Check check;
        check.k = k;
        const std::size_t mid = up.size();
        const std::size_t out_rows = lower.size();
        for (std::size_t c = 0; c < upper.cols.size() && check.zero; ++c) {
            for (std::size_t r = 0; r < out_rows && check.zero; ++r) {
                std::int64_t sum = 0;
                for (std::size_t t = 0; t < mid; ++t) sum += lower[r][t] * up[t][c];
                if (sum != 0) {
                    check.zero = false;
                    check.first_bad_column = upper.cols[c];
                }
            }
        }
        report.checks.push_back(check);
    }
    return report;
}

}  // namespace mcomb
