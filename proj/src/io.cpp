#include <fstream>

#include "grcat/io.hpp"

namespace grcat {

namespace {

[[noreturn]] void parse_fail(const std::string& file, const std::string& msg) {
  throw Error(Errc::ParseError, file + ": " + msg);
}

/// Re-throws a validation error with the file name in front of the detail.
template <class Fn>
auto in_file(const std::string& file, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code == Errc::ParseError) throw;
    throw Error(e.code, file + ": " + e.detail, e.witness);
  }
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed,
                    const std::string& file, const std::string& what) {
  if (!j.is_object()) parse_fail(file, what + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) parse_fail(file, "unknown field \"" + key + "\" in " + what);
  }
}

std::string join_dir(const std::string& dir, const std::string& rel) {
  if (rel.empty() || rel.front() == '/' || dir.empty()) return rel;
  return dir + "/" + rel;
}

std::string dir_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

long long get_int(const Json& j, const std::string& file, const std::string& what) {
  if (!j.is_number_integer()) parse_fail(file, what + " must be an integer");
  return j.get<long long>();
}

std::vector<int> get_int_list(const Json& j, const std::string& file, const std::string& what) {
  if (!j.is_array()) parse_fail(file, what + " must be a list of integers");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(static_cast<int>(get_int(e, file, "entry of " + what)));
  return out;
}

Mat get_matrix(const Json& j, int rows, int cols, const std::string& file,
               const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    parse_fail(file, what + " must be a matrix with " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      parse_fail(file, what + " rows must have " + std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k) m.at(i, k) = get_int(row[k], file, "entry of " + what);
  }
  return m;
}

FiniteGroup group_ref(const Json& j, const std::string& dir, const std::string& file,
                      const std::string& what) {
  if (j.is_string()) return load_group_file(join_dir(dir, j.get<std::string>())).group;
  if (j.is_object()) return parse_group_file(j, dir, file).group;
  parse_fail(file, what + " must be a file path or an inline group object");
}

/// Cochain from sparse {"at": tuple, "value": coords} entries.
Cochain get_cochain(const Json& j, ModulePtr module, int degree, const std::string& file,
                    const std::string& what) {
  if (!j.is_array()) parse_fail(file, what + " must be a list of entries");
  Cochain c = zero_cochain(std::move(module), degree);
  const int n = c.module->pi.order();
  const int rank = c.module->coeff.rank();
  for (const auto& e : j) {
    reject_unknown(e, {"at", "value"}, file, "an entry of " + what);
    if (!e.contains("at") || !e.contains("value"))
      parse_fail(file, what + " entries need \"at\" and \"value\"");
    auto at = get_int_list(e["at"], file, "\"at\" of " + what);
    if (static_cast<int>(at.size()) != degree)
      parse_fail(file, what + " entries take " + std::to_string(degree) + " arguments");
    for (int x : at)
      if (x < 0 || x >= n) parse_fail(file, what + " argument out of range");
    auto value = get_int_list(e["value"], file, "\"value\" of " + what);
    if (static_cast<int>(value.size()) != rank)
      parse_fail(file, what + " values need " + std::to_string(rank) + " coordinates");
    in_file(file, [&] {
      c.set(at, std::vector<long long>(value.begin(), value.end()));
      return 0;
    });
  }
  return c;
}

/// Shared body of module and type files; `extra` lists the additional fields
/// the caller will consume.
ModulePtr parse_module_core(const Json& j, const std::string& dir, const std::string& file,
                            std::initializer_list<const char*> extra) {
  std::vector<const char*> allowed{"group", "coefficients", "action"};
  allowed.insert(allowed.end(), extra.begin(), extra.end());
  if (!j.is_object()) parse_fail(file, "module description must be an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) parse_fail(file, "unknown field \"" + key + "\" in module description");
  }
  if (!j.contains("group")) parse_fail(file, "module description needs \"group\"");
  if (!j.contains("coefficients")) parse_fail(file, "module description needs \"coefficients\"");
  FiniteGroup pi = group_ref(j["group"], dir, file, "\"group\"");
  auto factors = get_int_list(j["coefficients"], file, "\"coefficients\"");
  FiniteAbelianGroup coeff =
      in_file(file, [&] { return abelian_group({factors.begin(), factors.end()}); });
  if (!j.contains("action")) return trivial_module(std::move(pi), std::move(coeff));
  const auto& act = j["action"];
  if (!act.is_array() || static_cast<int>(act.size()) != pi.order())
    parse_fail(file, "\"action\" needs one matrix per group element");
  std::vector<AbelianHom> action;
  for (int s = 0; s < pi.order(); ++s) {
    Mat m = get_matrix(act[s], coeff.rank(), coeff.rank(), file, "\"action\" matrix");
    action.push_back(in_file(file, [&] { return make_abelian_hom(coeff, coeff, std::move(m)); }));
  }
  return in_file(file,
                 [&] { return make_module(std::move(pi), std::move(coeff), std::move(action)); });
}

GrType gr_type_ref(const Json& j, const std::string& dir, const std::string& file,
                   const std::string& what) {
  if (j.is_string())
    return load_gr_type_file(join_dir(dir, j.get<std::string>())).type;
  if (j.is_object()) return parse_gr_type_file(j, dir, file).type;
  parse_fail(file, what + " must be a file path or an inline type object");
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

GroupInput parse_group_file(const Json& j, const std::string&, const std::string& file) {
  reject_unknown(j, {"name", "elements", "table"}, file, "a group file");
  if (!j.contains("table")) parse_fail(file, "group file needs \"table\"");
  const auto& tj = j["table"];
  if (!tj.is_array()) parse_fail(file, "\"table\" must be a list of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : tj) table.push_back(get_int_list(row, file, "a table row"));
  GroupInput out;
  out.group = in_file(file, [&] { return validate_group(std::move(table)); });
  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_fail(file, "\"name\" must be a string");
    out.name = j["name"].get<std::string>();
  }
  if (j.contains("elements")) {
    const auto& e = j["elements"];
    if (!e.is_array() || static_cast<int>(e.size()) != out.group.order())
      parse_fail(file, "\"elements\" needs one label per element");
    for (const auto& s : e) {
      if (!s.is_string()) parse_fail(file, "\"elements\" entries must be strings");
      out.group.names.push_back(s.get<std::string>());
    }
  }
  return out;
}

ModulePtr parse_module_file(const Json& j, const std::string& dir, const std::string& file) {
  return parse_module_core(j, dir, file, {});
}

GrTypeInput parse_gr_type_file(const Json& j, const std::string& dir, const std::string& file) {
  ModulePtr module = parse_module_core(j, dir, file, {"h", "eta"});
  Cochain h = j.contains("h") ? get_cochain(j["h"], module, 3, file, "\"h\"")
                              : zero_cochain(module, 3);
  GrTypeInput out;
  out.type = in_file(file, [&] { return make_gr_type(module, std::move(h)); });
  if (j.contains("eta")) {
    Cochain eta = get_cochain(j["eta"], module, 2, file, "\"eta\"");
    out.eta = in_file(file, [&] { return make_braided(out.type, std::move(eta)).eta; });
  }
  return out;
}

KernelInput parse_kernel_file(const Json& j, const std::string& dir, const std::string& file) {
  reject_unknown(j, {"pi", "g", "psi"}, file, "a kernel file");
  for (const char* field : {"pi", "g", "psi"})
    if (!j.contains(field))
      parse_fail(file, std::string("kernel file needs \"") + field + "\"");
  KernelInput out;
  out.pi = group_ref(j["pi"], dir, file, "\"pi\"");
  out.g = group_ref(j["g"], dir, file, "\"g\"");
  out.psi = get_int_list(j["psi"], file, "\"psi\"");
  if (static_cast<int>(out.psi.size()) != out.pi.order())
    parse_fail(file, "\"psi\" needs one outer class per base element");
  return out;
}

FunctorInput parse_functor_file(const Json& j, const std::string& dir, const std::string& file) {
  reject_unknown(j, {"source", "target", "phi", "f", "g"}, file, "a functor file");
  for (const char* field : {"source", "target", "phi", "f"})
    if (!j.contains(field))
      parse_fail(file, std::string("functor file needs \"") + field + "\"");
  FunctorInput out;
  out.source = gr_type_ref(j["source"], dir, file, "\"source\"");
  out.target = gr_type_ref(j["target"], dir, file, "\"target\"");
  auto phi = get_int_list(j["phi"], file, "\"phi\"");
  out.phi = in_file(file, [&] { return make_hom(out.source.pi(), out.target.pi(), phi); });
  Mat fm = get_matrix(j["f"], out.target.coeff().rank(), out.source.coeff().rank(), file,
                      "\"f\"");
  out.f = in_file(file,
                  [&] { return make_abelian_hom(out.source.coeff(), out.target.coeff(), fm); });
  if (j.contains("g")) {
    ModulePtr restricted = restrict_along(out.phi, out.target.module);
    out.g = get_cochain(j["g"], restricted, 2, file, "\"g\"");
  }
  return out;
}

namespace {

template <class T, class Fn>
T load_any(const std::string& path, Fn&& fn) {
  Json j = load_json(path);
  return fn(j, dir_of(path), path);
}

}  // namespace

GroupInput load_group_file(const std::string& path) {
  return load_any<GroupInput>(path, [](const Json& j, const std::string& d,
                                       const std::string& f) { return parse_group_file(j, d, f); });
}

ModulePtr load_module_file(const std::string& path) {
  return load_any<ModulePtr>(path, [](const Json& j, const std::string& d, const std::string& f) {
    return parse_module_file(j, d, f);
  });
}

GrTypeInput load_gr_type_file(const std::string& path) {
  return load_any<GrTypeInput>(path, [](const Json& j, const std::string& d,
                                        const std::string& f) {
    return parse_gr_type_file(j, d, f);
  });
}

KernelInput load_kernel_file(const std::string& path) {
  return load_any<KernelInput>(path, [](const Json& j, const std::string& d,
                                        const std::string& f) {
    return parse_kernel_file(j, d, f);
  });
}

FunctorInput load_functor_file(const std::string& path) {
  return load_any<FunctorInput>(path, [](const Json& j, const std::string& d,
                                         const std::string& f) {
    return parse_functor_file(j, d, f);
  });
}

Json group_to_json(const FiniteGroup& g, const std::string& name) {
  Json j = Json::object();
  if (!name.empty()) j["name"] = name;
  if (!g.names.empty()) j["elements"] = g.names;
  j["table"] = g.table;
  return j;
}

Json module_to_json(const PiModule& m) {
  Json j = Json::object();
  j["group"] = group_to_json(m.pi);
  j["coefficients"] = m.coeff.factors;
  if (!action_is_trivial(m)) {
    Json act = Json::array();
    for (const auto& hom : m.action) {
      Json rows = Json::array();
      for (int i = 0; i < hom.m.rows; ++i) {
        Json row = Json::array();
        for (int k = 0; k < hom.m.cols; ++k) row.push_back(hom.m.at(i, k));
        rows.push_back(std::move(row));
      }
      act.push_back(std::move(rows));
    }
    j["action"] = std::move(act);
  }
  return j;
}

Json cochain_entries(const Cochain& c) {
  Json out = Json::array();
  for (const auto& [key, value] : c.entries) {
    Json e = Json::object();
    e["at"] = c.tuple_of(key);
    e["value"] = value;
    out.push_back(std::move(e));
  }
  return out;
}

Json gr_type_to_json(const GrType& t, const Cochain* eta) {
  Json j = module_to_json(*t.module);
  j["h"] = cochain_entries(t.h);
  if (eta) j["eta"] = cochain_entries(*eta);
  return j;
}

Json functor_to_json(const GrFunctorData& f) {
  Json j = Json::object();
  j["source"] = gr_type_to_json(f.source);
  j["target"] = gr_type_to_json(f.target);
  j["phi"] = f.phi.map;
  Json rows = Json::array();
  for (int i = 0; i < f.f.m.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < f.f.m.cols; ++k) row.push_back(f.f.m.at(i, k));
    rows.push_back(std::move(row));
  }
  j["f"] = std::move(rows);
  j["g"] = cochain_entries(f.g);
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, path + ": cannot write file");
  out << j.dump(2) << '\n';
}

}  // namespace grcat
