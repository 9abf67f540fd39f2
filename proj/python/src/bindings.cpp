#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcomb/chain_complex.hpp"
#include "mcomb/diagram.hpp"
#include "mcomb/enumeration.hpp"
#include "mcomb/error.hpp"
#include "mcomb/exact_linalg.hpp"
#include "mcomb/invariants.hpp"

namespace py = pybind11;
using namespace mcomb;

namespace {

py::dict cell_dict(const Cell& c) {
    py::dict d;
    d["id"] = c.id;
    d["word"] = render(c.word);
    d["dim"] = c.dim;
    d["aut_order"] = c.aut.order;
    d["aut_parity"] = std::string(to_string(c.aut.parity));
    d["class"] = std::string(to_string(c.classification));
    return d;
}

py::dict word_info(const std::string& text) {
    const ChordDiagram d(parse_word(text));
    const auto aut = symmetry(d);
    py::dict out;
    out["canonical"] = render(canonicalize(d).word);
    out["chords"] = d.chords();
    out["genus"] = genus(d);
    out["valences"] = vertex_valences(d);
    out["aut_order"] = aut.order;
    out["aut_parity"] = std::string(to_string(aut.parity));
    return out;
}

py::list cells(int genus, unsigned jobs) {
    EnumerationOptions opts;
    opts.jobs = jobs;
    const Catalog catalog = build_catalog(genus, opts);
    py::list out;
    for (int dim : catalog.dims())
        for (const auto& c : catalog.cells(dim)) out.append(cell_dict(c));
    return out;
}

py::dict homology(int genus, unsigned jobs) {
    EnumerationOptions eopts;
    eopts.jobs = jobs;
    const Catalog catalog = build_catalog(genus, eopts);
    ComplexOptions copts;
    copts.jobs = jobs;
    const ChainComplexData cc = build_chain_complex(catalog, copts);
    const BettiReport report = betti(cc, jobs);
    const EulerReport chi = euler(catalog);

    std::map<int, std::size_t> cell_counts, ranks;
    std::map<int, std::int64_t> bettis;
    for (const auto& row : report.rows) {
        cell_counts[row.dim] = row.cells;
        bettis[row.dim] = row.betti;
        if (cc.matrices.count(row.dim)) ranks[row.dim] = row.rank_out;
    }
    py::dict out;
    out["cells"] = cell_counts;
    out["ranks"] = ranks;
    out["betti"] = bettis;
    out["d2_zero"] = verify_d2(cc).ok();
    out["euler"] = report.euler_cells;
    out["orbifold_euler"] = to_string(chi.orbifold_chi);
    return out;
}

py::dict boundary(int genus, int k) {
    const Catalog catalog = build_catalog(genus);
    const BoundaryMatrix m = boundary_matrix(k, catalog);
    py::dict out;
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    out["dense"] = m.dense();
    return out;
}

}  // namespace

PYBIND11_MODULE(_mcomb, m) {
    m.doc() = "Cells and rational homology of the combinatorial moduli space M^comb_{g,1}";

    py::register_exception<Error>(m, "McombError", PyExc_ValueError);

    m.def("word_info", &word_info, py::arg("word"));
    m.def("cells", &cells, py::arg("genus"), py::arg("jobs") = 1);
    m.def("homology", &homology, py::arg("genus"), py::arg("jobs") = 1);
    m.def("boundary", &boundary, py::arg("genus"), py::arg("k"));
}
