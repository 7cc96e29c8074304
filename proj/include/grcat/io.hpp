#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "grcat/braided.hpp"
#include "grcat/extensions.hpp"

namespace grcat {

using Json = nlohmann::ordered_json;

/// Parsed file contents.  Group references inside module, type, kernel and
/// functor files are either inline objects or path strings resolved relative
/// to the referring file.  Unknown fields are rejected.
struct GroupInput {
  FiniteGroup group;
  std::string name;
};

struct GrTypeInput {
  GrType type;
  std::optional<Cochain> eta;  // validated braiding when present
};

struct KernelInput {
  FiniteGroup pi;
  FiniteGroup g;
  std::vector<int> psi;  // outer class index per pi element
};

struct FunctorInput {
  GrType source;
  GrType target;
  GroupHom phi;
  AbelianHom f;
  std::optional<Cochain> g;  // over the restricted coefficients
};

Json load_json(const std::string& path);

GroupInput parse_group_file(const Json& j, const std::string& dir, const std::string& file);
ModulePtr parse_module_file(const Json& j, const std::string& dir, const std::string& file);
GrTypeInput parse_gr_type_file(const Json& j, const std::string& dir, const std::string& file);
KernelInput parse_kernel_file(const Json& j, const std::string& dir, const std::string& file);
FunctorInput parse_functor_file(const Json& j, const std::string& dir, const std::string& file);

GroupInput load_group_file(const std::string& path);
ModulePtr load_module_file(const std::string& path);
GrTypeInput load_gr_type_file(const std::string& path);
KernelInput load_kernel_file(const std::string& path);
FunctorInput load_functor_file(const std::string& path);

Json group_to_json(const FiniteGroup& g, const std::string& name = "");
Json module_to_json(const PiModule& m);
Json gr_type_to_json(const GrType& t, const Cochain* eta = nullptr);
Json functor_to_json(const GrFunctorData& f);
Json cochain_entries(const Cochain& c);
void write_json_file(const std::string& path, const Json& j);

}  // namespace grcat
