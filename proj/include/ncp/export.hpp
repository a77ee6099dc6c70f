#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncp/coxeter.hpp"
#include "ncp/kdiv.hpp"

namespace ncp {

enum class ExportObject { Group, Nc, Nck, Labeling };

ExportObject parse_export_object(std::string_view s);

struct ExportOptions {
  int k = 1;
  std::vector<int> gamma_perm;
  std::size_t max_elements = kDefaultElementCap;
};

/// group: elements, simple generators, reflections, gamma (json) or the
/// Cayley graph on S (dot). nc: NC(W) with its reflection order. nck:
/// NC^(k)(W) and NC_(k)(W). labeling: NC_(k)(W) + 1hat with the lex-ABW
/// labels. `format` is "json" or "dot".
std::string cmd_export(ExportObject object, const CoxeterType& ctype, std::string_view format,
                       const ExportOptions& options = {});

}  // namespace ncp
