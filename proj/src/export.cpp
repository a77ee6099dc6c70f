#include "ncp/export.hpp"

#include <sstream>

#include "ncp/error.hpp"
#include "ncp/nc.hpp"
#include "ncp/shelling.hpp"

namespace ncp {

ExportObject parse_export_object(std::string_view s) {
  if (s == "group") return ExportObject::Group;
  if (s == "nc") return ExportObject::Nc;
  if (s == "nck") return ExportObject::Nck;
  if (s == "labeling") return ExportObject::Labeling;
  throw Error(ErrorKind::InvalidArgument, "unknown export object '" + std::string(s) + "' (group, nc, nck, labeling)");
}

namespace {

nlohmann::json render_all(const CoxeterSystem& W, std::span<const GroupElement> xs) {
  nlohmann::json a = nlohmann::json::array();
  for (GroupElement x : xs) a.push_back(W.render(x));
  return a;
}

std::string group_dot(const CoxeterSystem& W) {
  std::ostringstream os;
  os << "graph cayley {\n";
  for (GroupElement w : W.elements()) os << "  n" << w.index() << " [label=\"" << W.render(w) << "\"];\n";
  const auto S = W.simple_generators();
  for (GroupElement w : W.elements())
    for (std::size_t i = 0; i < S.size(); ++i) {
      const GroupElement ws = W.multiply(w, S[i]);
      if (w.index() < ws.index()) os << "  n" << w.index() << " -- n" << ws.index() << " [label=\"s" << W.generator_order()[i] << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string cmd_export(ExportObject object, const CoxeterType& ctype, std::string_view format,
                       const ExportOptions& options) {
  if (format != "json" && format != "dot")
    throw Error(ErrorKind::InvalidArgument, "unknown export format '" + std::string(format) + "' (json, dot)");
  const bool json = format == "json";
  BuildOptions bo;
  bo.generator_order = options.gamma_perm;
  auto W = CoxeterSystem::build(ctype, bo);
  if (object == ExportObject::Group) {
    if (!json) return group_dot(*W);
    return nlohmann::json{{"type", ctype.name()},
                          {"order", W->order()},
                          {"elements", render_all(*W, W->elements())},
                          {"simple_generators", render_all(*W, W->simple_generators())},
                          {"reflections", render_all(*W, W->reflections())},
                          {"coxeter_element", W->render(W->coxeter_element())}}
               .dump(2) + "\n";
  }
  auto nc = NCLattice::build(W);
  if (object == ExportObject::Nc) {
    const ReflectionOrder order = find_el_reflection_order(*nc);
    if (!json) return to_dot(*nc, order);
    return nlohmann::json{{"type", ctype.name()},
                          {"poset", to_json(nc->poset())},
                          {"reflection_order", render_all(*W, order.reflections())}}
               .dump(2) + "\n";
  }
  KdivOptions ko;
  ko.max_elements = options.max_elements;
  auto lower = build_nc_lower(nc, options.k, ko);
  if (object == ExportObject::Nck) {
    auto upper = build_nc_upper(nc, options.k, ko);
    if (!json) return to_dot(upper->poset());
    return nlohmann::json{{"type", ctype.name()},
                          {"k", options.k},
                          {"upper", to_json(upper->poset())},
                          {"lower", to_json(lower->poset())},
                          {"delta_sequences", delta_sequences_to_json(*lower)}}
               .dump(2) + "\n";
  }
  const ReflectionOrder order = find_el_reflection_order(*nc);
  const FinitePoset top = with_top(*lower);
  const EdgeLabeling lab = lex_abw_labeling(*lower, top, order);
  if (!json)
    return to_dot(top, [&](std::size_t x, std::size_t y) { return lab.labels().name(lab.label(top, x, y)); });
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [x, y] : top.covers()) edges.push_back({x, y, lab.labels().name(lab.label(top, x, y))});
  return nlohmann::json{{"type", ctype.name()},
                        {"k", options.k},
                        {"labels", lab.labels().names()},
                        {"poset", to_json(top)},
                        {"edge_labels", edges}}
             .dump(2) + "\n";
}

}  // namespace ncp
