// hgk: decide, count and classify Hopf Galois structures on separable field
// extensions, and compute the associated Hopf algebras by descent.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hgk/field.hpp"
#include "hgk/io.hpp"
#include "hgk/lattice.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBound = 4;

hgk::PermGroup load_group(const std::string& path) {
  return hgk::group_from_document(hgk::load_group_document(path));
}

hgk::ExtensionDatum load_extension(const std::string& group_path, const std::string& sub_path) {
  hgk::PermGroup G = load_group(group_path);
  hgk::PermGroup Gp = sub_path.empty() ? hgk::PermGroup::trivial(G.degree()) : load_group(sub_path);
  return hgk::make_extension(G, Gp);
}

std::string format_field_element(const hgk::RatVec& coords) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    std::string c = hgk::rat_string(coords[k]);
    if (!first) out << (c[0] == '-' ? " - " : " + ");
    if (!first && c[0] == '-') c = c.substr(1);
    if (k == 0) {
      out << c;
    } else {
      if (c == "1")
        out << "t";
      else if (c == "-1")
        out << (first ? "-t" : "t");
      else
        out << c << "*t";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::string format_group_algebra_element(const hgk::RatVec& h, const std::vector<hgk::Perm>& etas,
                                         unsigned d) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < etas.size(); ++j) {
    hgk::RatVec coeff(h.begin() + j * d, h.begin() + (j + 1) * d);
    bool zero = true;
    for (const auto& c : coeff) zero = zero && c == 0;
    if (zero) continue;
    if (!first) out << " + ";
    out << "(" << format_field_element(coeff) << ")*" << etas[j].cycle_string();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

int run_descent(const std::string& field_path, const std::string& group_path,
                const std::string& sub_path, int structure_index) {
  hgk::SplittingFieldPresentation pres = hgk::load_presentation_document(field_path);
  hgk::PermGroup G = load_group(group_path);
  hgk::PermGroup Gp = sub_path.empty() ? hgk::PermGroup::trivial(G.degree()) : load_group(sub_path);
  hgk::CheckedPresentation P = hgk::validate_presentation(pres, G);
  hgk::ExtensionDatum E = hgk::make_extension(G, Gp);
  hgk::CountReport report = hgk::count_structures(E);
  if (report.witnesses.empty()) {
    std::cout << "no Hopf Galois structures\n";
    return 0;
  }
  if (structure_index < 0 || structure_index >= static_cast<int>(report.witnesses.size()))
    throw hgk::ValidationError("structure index out of range; there are " +
                               std::to_string(report.witnesses.size()) + " structures");
  const hgk::HGStructure& s = report.witnesses[structure_index];
  hgk::DescentContext ctx = hgk::make_descent_context(P, E, s);
  hgk::HopfAlgebraBasis H = hgk::hopf_algebra_basis(ctx);

  std::cout << "structure " << structure_index << " of " << report.witnesses.size() << ", type "
            << s.type_name << "\n";
  std::cout << "action convention: " << hgk::action_convention_string(ctx.convention) << "\n";
  std::cout << "H = K~[N]^G basis:\n";
  for (const auto& row : H.rows)
    std::cout << "  " << format_group_algebra_element(row, H.n_elements, H.d) << "\n";
  std::cout << "action matrices on the basis of K:\n";
  for (std::size_t r = 0; r < H.rows.size(); ++r) {
    hgk::RatMat M = hgk::hopf_action_matrix(ctx, H, H.rows[r]);
    std::cout << "  mu(h" << r << "):\n";
    for (const auto& row : M) {
      std::cout << "    [";
      for (std::size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? " " : "") << hgk::rat_string(row[j]);
      std::cout << "]\n";
    }
  }
  std::cout << "sub-Hopf algebras from stable subgroups:\n";
  for (const hgk::PermGroup& Np : hgk::stable_subgroups(s, E)) {
    hgk::RatMat sub = hgk::sub_hopf_algebra(ctx, H, Np);
    hgk::RatMat fixed = hgk::fixed_field_of_sub_hopf(ctx, H, sub);
    std::cout << "  N' = <";
    bool first = true;
    for (const hgk::Perm& g : Np.generators()) {
      if (!first) std::cout << ", ";
      std::cout << g.cycle_string();
      first = false;
    }
    if (first) std::cout << "()";
    std::cout << ">: dim " << sub.size() << ", fixed field basis:";
    for (const auto& x : fixed) std::cout << " " << format_field_element(x) << ";";
    std::cout << "\n";
  }
  std::cout << "K tensor H -> End_k(K) is an isomorphism: "
            << (hgk::verify_hg_isomorphism(ctx, H) ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf Galois structures on separable extensions: decide, count, classify"};
  app.require_subcommand(1);

  std::string group_path, sub_path, field_path;
  std::string format = "text";
  unsigned degree = 0;
  long long order = 0;
  int structure_index = 0;
  long long max_order = 60;
  bool skip_large = false;

  auto* check = app.add_subcommand("check", "decide the Hopf Galois property");
  check->add_option("--group", group_path, "group document (JSON)")->required();
  check->add_option("--subgroup", sub_path, "subgroup document; trivial if omitted");
  check->add_option("--format", format, "text|json|csv");

  auto* count = app.add_subcommand("count", "count structures by type");
  count->add_option("--group", group_path)->required();
  count->add_option("--subgroup", sub_path);
  count->add_option("--format", format);

  auto* classify = app.add_subcommand("classify", "classify all transitive groups of a degree");
  classify->add_option("--degree", degree)->required();
  classify->add_option("--format", format);

  auto* lattice = app.add_subcommand("lattice", "stable subgroups and the strong form");
  lattice->add_option("--group", group_path)->required();
  lattice->add_option("--subgroup", sub_path);
  lattice->add_option("--structure", structure_index);

  auto* inter = app.add_subcommand("intermediate", "verdicts for intermediate extensions");
  inter->add_option("--group", group_path)->required();
  inter->add_option("--subgroup", sub_path)->required();
  inter->add_option("--format", format);
  inter->add_option("--max-order", max_order, "largest [F:k] to compute");
  inter->add_flag("--skip-large", skip_large, "silently skip rows above the bound");

  auto* descent = app.add_subcommand("descent", "Hopf algebra via descent");
  descent->add_option("--field", field_path, "field presentation (JSON)")->required();
  descent->add_option("--group", group_path)->required();
  descent->add_option("--subgroup", sub_path);
  descent->add_option("--structure", structure_index);

  auto* catalog = app.add_subcommand("catalog", "embedded group catalogs");
  catalog->add_option("--degree", degree);
  catalog->add_option("--order", order);

  auto* hol = app.add_subcommand("hol", "automorphism group and holomorph");
  hol->add_option("--group", group_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    hgk::OutputFormat fmt = hgk::parse_format(format);
    if (check->parsed()) {
      hgk::GroupDocument doc = hgk::load_group_document(group_path);
      hgk::ExtensionDatum E = load_extension(group_path, sub_path);
      hgk::HGVerdict v = hgk::is_hopf_galois(E);
      std::cout << hgk::render_check(v, doc.name, static_cast<long long>(E.G.order()), fmt);
    } else if (count->parsed()) {
      hgk::ExtensionDatum E = load_extension(group_path, sub_path);
      std::cout << hgk::render_count(hgk::count_structures(E), fmt);
    } else if (classify->parsed()) {
      std::cout << hgk::render_classify(hgk::classify_degree(degree), degree, fmt);
    } else if (lattice->parsed()) {
      hgk::ExtensionDatum E = load_extension(group_path, sub_path);
      hgk::CountReport report = hgk::count_structures(E);
      if (report.witnesses.empty()) {
        std::cout << "no Hopf Galois structures\n";
        return 0;
      }
      if (structure_index < 0 || structure_index >= static_cast<int>(report.witnesses.size()))
        throw hgk::ValidationError("structure index out of range");
      const hgk::HGStructure& s = report.witnesses[structure_index];
      hgk::StrongFormReport sf = hgk::strong_form_holds(s, E);
      std::cout << "structure " << structure_index << " of " << report.witnesses.size()
                << ", type " << s.type_name << "\n";
      for (const auto& rec : sf.records) {
        std::cout << "  N' = <";
        bool first = true;
        for (const hgk::Perm& g : rec.subgroup.generators()) {
          if (!first) std::cout << ", ";
          std::cout << g.cycle_string();
          first = false;
        }
        if (first) std::cout << "()";
        std::cout << ">  ->  S of order " << rec.corresponding_subgroup.order() << "\n";
      }
      std::cout << "strong form holds: " << (sf.holds ? "true" : "false") << " ("
                << sf.image_subgroups.size() << " of " << sf.all_intermediate.size()
                << " intermediate subgroups reached)\n";
    } else if (inter->parsed()) {
      hgk::ExtensionDatum E = load_extension(group_path, sub_path);
      hgk::IntermediateReport report = hgk::intermediate_report(E, max_order);
      if (skip_large) {
        std::erase_if(report.rows, [](const hgk::IntermediateRow& row) {
          return row.verdict.rfind("skipped", 0) == 0;
        });
      }
      std::cout << hgk::render_intermediate(report, fmt);
    } else if (descent->parsed()) {
      return run_descent(field_path, group_path, sub_path, structure_index);
    } else if (catalog->parsed()) {
      if (degree > 0) {
        for (const auto& e : hgk::transitive_groups(degree)) {
          std::cout << "  " << e.name << "\t" << e.order;
          if (!e.has_generators()) std::cout << "\t(order-only)";
          std::cout << "\n";
        }
      } else if (order > 0) {
        for (const auto& e : hgk::groups_of_order(order)) {
          std::cout << "  " << e.name << "\tdegree " << e.degree << "\n";
        }
      } else {
        throw hgk::ValidationError("catalog: need --degree or --order");
      }
    } else if (hol->parsed()) {
      hgk::PermGroup N = load_group(group_path);
      const hgk::HolomorphGroup& H = hgk::holomorph(N);
      std::cout << "|N| = " << N.order() << " (" << hgk::identify(N) << ")\n";
      std::cout << "|Aut(N)| = " << H.automorphism_part.order() << "\n";
      std::cout << "|Hol(N)| = " << H.ambient.order() << " (" << hgk::identify(H.ambient)
                << ")\n";
    }
  } catch (const hgk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hgk::BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const hgk::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
