#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgk/field.hpp"
#include "hgk/io.hpp"
#include "hgk/lattice.hpp"

namespace py = pybind11;
using namespace hgk;

namespace {

PermGroup build_group(unsigned degree, const std::vector<std::string>& generators) {
  std::vector<Perm> gens;
  for (const auto& s : generators) gens.push_back(Perm::parse(s, degree));
  return PermGroup::generate(degree, std::move(gens));
}

ExtensionDatum build_extension(unsigned degree, const std::vector<std::string>& generators,
                               const std::vector<std::string>& subgroup) {
  PermGroup G = build_group(degree, generators);
  PermGroup Gp = subgroup.empty() ? PermGroup::trivial(degree) : build_group(degree, subgroup);
  return make_extension(G, Gp);
}

py::list group_generators(const PermGroup& G) {
  py::list out;
  for (const Perm& g : G.generators()) out.append(g.cycle_string());
  return out;
}

py::dict verdict_dict(const HGVerdict& v) {
  py::dict d;
  d["hopf_galois"] = v.hopf_galois;
  d["verdict"] = v.verdict_string();
  d["decided_by"] = decided_by_string(v.decided_by);
  if (v.witness) {
    d["witness_type"] = v.witness->type_name;
    d["witness_generators"] = group_generators(v.witness->regular_N);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_hgkit, m) {
  m.doc() = "Hopf Galois structures on separable field extensions";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<BoundError>(m, "BoundError");

  m.def("classify", [](unsigned degree) {
    py::list rows;
    for (const auto& r : classify_degree(degree)) {
      py::dict d;
      d["name"] = r.name;
      d["order"] = r.order;
      d["verdict"] = r.verdict;
      d["decided_by"] = r.decided_by;
      if (!r.witness_gprime.empty()) {
        d["witness_gprime"] = r.witness_gprime;
        d["witness_complement"] = r.witness_complement;
      }
      rows.append(d);
    }
    return rows;
  }, py::arg("degree"), "classification table for all transitive groups of a degree");

  m.def("check",
        [](unsigned degree, const std::vector<std::string>& generators,
           const std::vector<std::string>& subgroup) {
          ExtensionDatum E = build_extension(degree, generators, subgroup);
          return verdict_dict(is_hopf_galois(E));
        },
        py::arg("degree"), py::arg("generators"),
        py::arg("subgroup") = std::vector<std::string>{},
        "decide the Hopf Galois property of the extension datum (G, G')");

  m.def("count",
        [](unsigned degree, const std::vector<std::string>& generators,
           const std::vector<std::string>& subgroup) {
          ExtensionDatum E = build_extension(degree, generators, subgroup);
          CountReport r = count_structures(E);
          py::dict d;
          d["total"] = r.total;
          py::dict types;
          for (const auto& [name, count] : r.per_type)
            if (count) types[py::str(name)] = count;
          d["per_type"] = types;
          py::list wit;
          for (const auto& s : r.witnesses) {
            py::dict w;
            w["type"] = s.type_name;
            w["generators"] = group_generators(s.regular_N);
            w["classical"] = s.is_classical;
            w["almost_classical"] = s.acg_witness.has_value();
            wit.append(w);
          }
          d["witnesses"] = wit;
          return d;
        },
        py::arg("degree"), py::arg("generators"),
        py::arg("subgroup") = std::vector<std::string>{},
        "count Hopf Galois structures by type");

  m.def("identify",
        [](unsigned degree, const std::vector<std::string>& generators) {
          return identify(build_group(degree, generators));
        },
        py::arg("degree"), py::arg("generators"));

  m.def("holomorph_info",
        [](unsigned degree, const std::vector<std::string>& generators) {
          PermGroup N = build_group(degree, generators);
          const HolomorphGroup& h = holomorph(N);
          py::dict d;
          d["order"] = static_cast<long long>(N.order());
          d["aut_order"] = static_cast<long long>(h.automorphism_part.order());
          d["hol_order"] = static_cast<long long>(h.ambient.order());
          d["name"] = identify(N);
          d["hol_name"] = identify(h.ambient);
          return d;
        },
        py::arg("degree"), py::arg("generators"));

  m.def("transitive_catalog", [](unsigned degree) {
    py::list out;
    for (const auto& e : transitive_groups(degree)) {
      py::dict d;
      d["name"] = e.name;
      d["order"] = e.order;
      d["generators"] = e.generators;
      out.append(d);
    }
    return out;
  }, py::arg("degree"));

  m.def("groups_of_order", [](long long order) {
    py::list out;
    for (const auto& e : groups_of_order(order)) {
      py::dict d;
      d["name"] = e.name;
      d["degree"] = e.degree;
      d["generators"] = e.generators;
      out.append(d);
    }
    return out;
  }, py::arg("order"));

  m.def("intermediate",
        [](unsigned degree, const std::vector<std::string>& generators,
           const std::vector<std::string>& subgroup, long long max_index) {
          ExtensionDatum E = build_extension(degree, generators, subgroup);
          py::list rows;
          for (const auto& row : intermediate_report(E, max_index).rows) {
            py::dict d;
            d["index"] = row.index;
            d["verdict"] = row.verdict;
            d["exists_marker"] = row.exists_marker;
            rows.append(d);
          }
          return rows;
        },
        py::arg("degree"), py::arg("generators"), py::arg("subgroup"),
        py::arg("max_index") = 60);

  m.def("descent_summary",
        [](const std::string& field_path, unsigned degree,
           const std::vector<std::string>& generators, const std::vector<std::string>& subgroup,
           int structure) {
          PermGroup G = build_group(degree, generators);
          PermGroup Gp =
              subgroup.empty() ? PermGroup::trivial(degree) : build_group(degree, subgroup);
          CheckedPresentation P =
              validate_presentation(load_presentation_document(field_path), G);
          ExtensionDatum E = make_extension(G, Gp);
          CountReport r = count_structures(E);
          if (structure < 0 || structure >= static_cast<int>(r.witnesses.size()))
            throw ValidationError("structure index out of range");
          DescentContext ctx = make_descent_context(P, E, r.witnesses[structure]);
          HopfAlgebraBasis H = hopf_algebra_basis(ctx);
          py::dict d;
          d["structures"] = static_cast<long long>(r.witnesses.size());
          d["type"] = r.witnesses[structure].type_name;
          d["convention"] = action_convention_string(ctx.convention);
          d["dimension"] = static_cast<long long>(H.rows.size());
          d["isomorphism"] = verify_hg_isomorphism(ctx, H);
          py::list sub_dims;
          for (const PermGroup& Np : stable_subgroups(r.witnesses[structure], E))
            sub_dims.append(sub_hopf_algebra(ctx, H, Np).size());
          d["sub_hopf_dimensions"] = sub_dims;
          return d;
        },
        py::arg("field_path"), py::arg("degree"), py::arg("generators"),
        py::arg("subgroup") = std::vector<std::string>{}, py::arg("structure") = 0);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
