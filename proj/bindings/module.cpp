#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "turanlab/canonical.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/theorem_lab.hpp"

namespace py = pybind11;
using namespace turanlab;

namespace {

Rational rational_arg(const std::string& s) { return Rational::parse(s); }

py::dict record_dict(const ExtremalRecord& rec) {
    py::dict d;
    d["n"] = rec.n;
    d["pattern"] = rec.h_g6;
    d["forbidden"] = rec.f_g6;
    d["value"] = rec.value;
    d["witnesses"] = rec.witnesses;
    d["exhaustive"] = rec.exhaustive;
    d["witnesses_truncated"] = rec.witnesses_truncated;
    return d;
}

py::dict bracket_dict(const DensityBracket& b) {
    py::dict d;
    d["lower"] = b.lower.str();
    d["upper"] = b.upper.str();
    d["lower_n"] = b.lower_n;
    d["upper_n"] = b.upper_n;
    return d;
}

}  // namespace

PYBIND11_MODULE(_turanlab, m) {
    m.doc() = "Exact generalized Turan computations: copy counting, isomorph-free "
              "enumeration, and executable extremal-graph procedures.";

    py::register_exception<Error>(m, "TuranError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_graph6", [](const std::string& s) { return graph_from_graph6(s); })
        .def_static("from_edges", &Graph::from_edges)
        .def("graph6", [](const Graph& g) { return graph_to_graph6(g); })
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("add_edge", &Graph::add_edge)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(graph6='" << graph_to_graph6(g) << "')";
            return out.str();
        });

    m.def("turan_graph", &turan_graph, py::arg("n"), py::arg("parts"));
    m.def("complete_multipartite", [](const std::vector<int64_t>& sizes) {
        return complete_multipartite(PartSizes(sizes));
    });
    m.def("blow_up", &blow_up, py::arg("g"), py::arg("t"));
    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("empty_graph", &empty_graph);

    m.def("canonical_graph6", &canonical_graph6);
    m.def("isomorphic", &isomorphic);

    m.def("count_automorphisms", &count_automorphisms);
    m.def("count_copies", &count_copies, py::arg("pattern"), py::arg("host"),
          py::arg("threads") = 1);
    m.def("count_copies_through_vertex", &count_copies_through_vertex);
    m.def("count_cliques", &count_cliques, py::arg("r"), py::arg("host"), py::arg("threads") = 1);
    m.def("chromatic_number", &chromatic_number);
    m.def("exists_homomorphism", &exists_homomorphism);
    m.def("count_copies_in_multipartite", [](const Graph& h, const std::vector<int64_t>& sizes) {
        return count_copies_in_multipartite(h, PartSizes(sizes));
    });
    m.def("zykov_clique_bound", &zykov_clique_bound, py::arg("n"), py::arg("r"), py::arg("k"));

    m.def(
        "enumerate_free_graphs",
        [](int n, const Graph& f, int threads) { return enumerate_free_graphs(n, f, threads); },
        py::arg("n"), py::arg("forbid"), py::arg("threads") = 1);

    m.def(
        "generalized_turan",
        [](int n, const Graph& h, const Graph& f, int threads) {
            return record_dict(generalized_turan(n, h, f, threads));
        },
        py::arg("n"), py::arg("pattern"), py::arg("forbid"), py::arg("threads") = 1);
    m.def("is_degenerate_pair", &is_degenerate_pair);

    py::class_<Catalog>(m, "Catalog")
        .def(py::init<std::string>(), py::arg("path"))
        .def_property_readonly("path", &Catalog::path)
        .def("__len__", &Catalog::size)
        .def("put_extremal",
             [](Catalog& c, int n, const Graph& h, const Graph& f, int threads) {
                 ExtremalRecord rec = generalized_turan(n, h, f, threads);
                 c.put(rec);
                 return record_dict(rec);
             },
             py::arg("n"), py::arg("pattern"), py::arg("forbid"), py::arg("threads") = 1)
        .def("get", [](const Catalog& c, int n, const Graph& h, const Graph& f) -> py::object {
            auto rec = c.get(n, h, f);
            if (!rec) return py::none();
            return record_dict(*rec);
        });

    m.def(
        "density_bracket",
        [](const Graph& h, const Graph& f, int max_n, const Catalog& catalog) {
            return bracket_dict(density_bracket(h, f, max_n, catalog));
        },
        py::arg("pattern"), py::arg("forbid"), py::arg("max_n"), py::arg("catalog"));
    m.def("clique_turan_density",
          [](int r, int k) { return clique_turan_density(r, k).str(); });

    m.def(
        "check_ratio_monotone",
        [](const std::vector<std::pair<int, CopyCount>>& table, int h_size) {
            py::list out;
            for (const auto& v : check_ratio_monotone(table, h_size)) {
                py::dict d;
                d["n_lo"] = v.n_lo;
                d["n_hi"] = v.n_hi;
                d["ratio_lo"] = v.ratio_lo.str();
                d["ratio_hi"] = v.ratio_hi.str();
                out.append(d);
            }
            return out;
        },
        py::arg("table"), py::arg("h_size"));

    m.def(
        "heavy_subset_census",
        [](const Graph& g, const Graph& h, int m, const std::string& threshold) {
            CensusResult res = heavy_subset_census(g, h, m, rational_arg(threshold));
            return py::make_tuple(res.heavy_count, res.copy_sum);
        },
        py::arg("host"), py::arg("pattern"), py::arg("m"), py::arg("threshold"));

    m.def(
        "supersaturation_check",
        [](const Graph& g, const Graph& h, const Graph& f, const std::string& c, int max_n,
           const Catalog& catalog) {
            DensityBracket bracket = density_bracket(h, f, max_n, catalog);
            SupersaturationReport rep =
                supersaturation_check(g, h, f, rational_arg(c), bracket, catalog);
            py::dict d;
            d["host_copies"] = rep.host_copies;
            d["extremal_reference"] = rep.extremal_reference.str();
            d["reference_exact"] = rep.reference_exact;
            d["required"] = rep.required.str();
            d["hypothesis_holds"] = rep.hypothesis_holds;
            d["m"] = rep.m;
            d["threshold"] = rep.threshold.str();
            d["heavy_count"] = rep.heavy_count;
            d["copy_sum"] = rep.copy_sum;
            d["implied_f_lower"] = rep.implied_f_lower.str();
            d["f_copies"] = rep.f_copies;
            d["bracket"] = bracket_dict(bracket);
            return d;
        },
        py::arg("host"), py::arg("pattern"), py::arg("forbid"), py::arg("c"), py::arg("max_n"),
        py::arg("catalog"));

    m.def(
        "symmetrize",
        [](const Graph& g, int r) {
            SymmetrizationTrace t = symmetrize(g, r);
            py::dict d;
            d["start"] = graph_to_graph6(t.start);
            d["end"] = graph_to_graph6(t.end);
            py::list steps;
            for (const auto& s : t.steps)
                steps.append(py::make_tuple(s.kept, s.replaced, s.count_after));
            d["steps"] = steps;
            d["step_cap"] = t.step_cap;
            return d;
        },
        py::arg("g"), py::arg("r"));
    m.def("is_complete_multipartite", &is_complete_multipartite);

    m.def(
        "greedy_min_copy_deletion",
        [](const Graph& g, int r, int k, const std::string& alpha,
           const std::optional<std::string>& q) {
            std::optional<Rational> qq;
            if (q) qq = rational_arg(*q);
            DeletionTrace t = greedy_min_copy_deletion(g, r, k, rational_arg(alpha), qq);
            py::dict d;
            d["outcome"] = std::string(to_string(t.outcome));
            d["q"] = t.q.str();
            d["beta"] = t.beta.str();
            py::list steps;
            for (const auto& s : t.steps)
                steps.append(py::make_tuple(s.vertex, s.copies, s.order_before));
            d["steps"] = steps;
            d["end"] = graph_to_graph6(t.end);
            return d;
        },
        py::arg("g"), py::arg("r"), py::arg("k"), py::arg("alpha"),
        py::arg("q") = std::nullopt);

    m.def(
        "degree_lower_bound",
        [](int n, int k, int r, const std::string& alpha) {
            return degree_lower_bound(n, k, r, rational_arg(alpha)).str();
        },
        py::arg("n"), py::arg("k"), py::arg("r"), py::arg("alpha"));

    m.def(
        "check_degree_lemma",
        [](const Graph& g, int x, int k, int r, const std::string& alpha) {
            DegreeLemmaReport rep = check_degree_lemma(g, x, k, r, rational_arg(alpha));
            py::dict d;
            d["neighborhood_copies"] = rep.neighborhood_copies;
            d["hypothesis_threshold"] = rep.hypothesis_threshold.str();
            d["hypothesis_holds"] = rep.hypothesis_holds;
            d["degree"] = rep.degree;
            d["degree_bound"] = rep.degree_bound.str();
            d["conclusion_holds"] = rep.conclusion_holds;
            return d;
        },
        py::arg("g"), py::arg("x"), py::arg("k"), py::arg("r"), py::arg("alpha"));

    m.def(
        "turan_edit_distance",
        [](const Graph& g, int parts) {
            StabilityReport rep = turan_edit_distance(g, parts);
            py::dict d;
            d["distance"] = rep.distance;
            d["assignment"] = rep.assignment;
            d["normalized"] = rep.normalized.str();
            return d;
        },
        py::arg("g"), py::arg("parts"));
}
