#include <algorithm>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "grcat/braided.hpp"
#include "grcat/cli.hpp"
#include "grcat/extensions.hpp"
#include "grcat/io.hpp"
#include "grcat/strictify.hpp"

namespace grcat {

namespace {

struct Ctx {
  Caps caps;
  bool json = false;
  std::string emit;
  std::ostream* out = nullptr;
};

template <class T>
std::string fmt_list(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string fmt_tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string fmt_mat(const Mat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) {
    if (i) s += ", ";
    s += "[";
    for (int k = 0; k < m.cols; ++k) {
      if (k) s += ", ";
      s += std::to_string(m.at(i, k));
    }
    s += "]";
  }
  return s + "]";
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols; ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_cochain(std::ostream& out, const Cochain& c, const std::string& name,
                   const std::string& indent) {
  if (c.is_zero()) {
    out << indent << name << ": zero\n";
    return;
  }
  for (const auto& [key, value] : c.entries)
    out << indent << name << fmt_tuple(c.tuple_of(key)) << " = " << fmt_list(value) << "\n";
}

std::string describe_module(const PiModule& m) {
  std::string s =
      "base order " + std::to_string(m.pi.order()) + ", coefficients " + fmt_list(m.coeff.factors);
  if (!action_is_trivial(m)) s += ", nontrivial action";
  return s;
}

bool is_zero_class(const std::vector<long long>& cls) {
  return std::all_of(cls.begin(), cls.end(), [](long long v) { return v == 0; });
}

void require_group_cap(const FiniteGroup& g, const Ctx& ctx, const std::string& what) {
  if (g.order() > ctx.caps.group_order)
    throw Error(Errc::CapExceeded, what + " order " + std::to_string(g.order()) +
                                       " exceeds the cap " + std::to_string(ctx.caps.group_order) +
                                       "; raise --cap to allow it");
}

void emit_json(const Ctx& ctx, const std::string& name, const Json& j) {
  if (ctx.emit.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(ctx.emit, ec);
  if (ec) throw Error(Errc::ParseError, ctx.emit + ": cannot create directory");
  write_json_file(ctx.emit + "/" + name, j);
}

void print_report(const Ctx& ctx, const Json& j) { *ctx.out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_group_check(const Ctx& ctx, const std::string& file) {
  GroupInput gi = load_group_file(file);
  GroupProfile p = profile_group(gi.group);
  std::vector<int> z = center(gi.group);
  if (ctx.json) {
    Json j;
    j["command"] = "group check";
    j["file"] = file;
    j["valid"] = true;
    if (!gi.name.empty()) j["name"] = gi.name;
    j["order"] = p.order;
    j["abelian"] = p.abelian;
    j["cyclic"] = p.cyclic;
    j["center"] = z;
    j["description"] = p.description;
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "group file: " << file << "\n";
    if (!gi.name.empty()) out << "name: " << gi.name << "\n";
    out << "valid group of order " << p.order << "\n";
    out << "description: " << p.description << "\n";
    out << "center: " << fmt_list(z) << "\n";
  }
  emit_json(ctx, "group.json", group_to_json(gi.group, gi.name));
  return 0;
}

int cmd_group_aut(const Ctx& ctx, const std::string& file) {
  GroupInput gi = load_group_file(file);
  require_group_cap(gi.group, ctx, "group");
  AutData aut = automorphisms(gi.group, ctx.caps.enumeration);
  if (ctx.json) {
    Json j;
    j["command"] = "group aut";
    j["file"] = file;
    j["order"] = gi.group.order();
    j["automorphisms"] = aut.order();
    j["inner"] = static_cast<long long>(aut.inner.size());
    j["outer"] = aut.out.order();
    j["outer_representatives"] = aut.out_reps;
    j["maps"] = aut.maps;
    j["outer_table"] = aut.out.table;
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "group file: " << file << " (order " << gi.group.order() << ")\n";
    out << "automorphisms: " << aut.order() << "\n";
    out << "inner: " << aut.inner.size() << "\n";
    out << "outer classes: " << aut.out.order() << "\n";
    out << "outer representatives: " << fmt_list(aut.out_reps) << "\n";
    if (aut.order() <= 24) {
      for (int i = 0; i < aut.order(); ++i)
        out << "aut " << i << ": " << fmt_list(aut.maps[i]) << "\n";
    } else {
      out << "automorphism maps omitted in text form (more than 24); use --json\n";
    }
  }
  emit_json(ctx, "group.json", group_to_json(gi.group, gi.name));
  return 0;
}

int cmd_cohomology(const Ctx& ctx, const std::string& file, int degree) {
  if (degree < 1 || degree > 3)
    throw Error(Errc::DegreeTooHigh, "--degree must be 1, 2, or 3");
  ModulePtr m = load_module_file(file);
  require_group_cap(m->pi, ctx, "base group");
  CohomologyGroup h = cohomology_group(m, degree);
  std::vector<Cochain> reps = h.class_representatives(ctx.caps.enumeration);
  if (ctx.json) {
    Json j;
    j["command"] = "cohomology";
    j["file"] = file;
    j["module"] = module_to_json(*m);
    j["degree"] = degree;
    j["order"] = h.order();
    j["factors"] = h.factors();
    Json rj = Json::array();
    for (const auto& r : reps) rj.push_back(cochain_entries(r));
    j["representatives"] = std::move(rj);
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "module file: " << file << "\n";
    out << "module: " << describe_module(*m) << "\n";
    out << "degree: " << degree << "\n";
    out << "cohomology order: " << h.order() << "\n";
    out << "invariant factors: " << fmt_list(h.factors()) << "\n";
    for (std::size_t i = 0; i < reps.size(); ++i)
      print_cochain(out, reps[i], "representative " + std::to_string(i) + ": c", "");
  }
  emit_json(ctx, "module.json", module_to_json(*m));
  if (degree == 3) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      GrType t = make_gr_type(m, reps[i]);
      emit_json(ctx, "rep_" + std::to_string(i) + ".json", gr_type_to_json(t));
    }
  }
  return 0;
}

int cmd_functor_obstruction(const Ctx& ctx, const std::string& file) {
  FunctorInput fi = load_functor_file(file);
  require_group_cap(fi.source.pi(), ctx, "source base group");
  require_group_cap(fi.target.pi(), ctx, "target base group");
  Cochain k = obstruction(fi.source, fi.target, fi.phi, fi.f);
  CohomologyGroup h3 = cohomology_group(k.module, 3);
  std::vector<long long> cls = h3.class_of(k);
  bool realizable = is_zero_class(cls);
  if (ctx.json) {
    Json j;
    j["command"] = "functor obstruction";
    j["file"] = file;
    j["obstruction"] = cochain_entries(k);
    j["class"] = cls;
    j["h3_order"] = h3.order();
    j["h3_factors"] = h3.factors();
    j["realizable"] = realizable;
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "functor file: " << file << "\n";
    out << "source: " << describe_module(*fi.source.module) << "\n";
    out << "target: " << describe_module(*fi.target.module) << "\n";
    print_cochain(out, k, "obstruction k", "");
    out << "class: " << fmt_list(cls) << " in cohomology of order " << h3.order() << "\n";
    out << "realizable: " << (realizable ? "yes" : "no") << "\n";
  }
  return realizable ? 0 : 2;
}

int cmd_functor_classify(const Ctx& ctx, const std::string& file) {
  FunctorInput fi = load_functor_file(file);
  require_group_cap(fi.source.pi(), ctx, "source base group");
  require_group_cap(fi.target.pi(), ctx, "target base group");
  FunctorClassification c = classify_functors(fi.source, fi.target, fi.phi, fi.f, ctx.caps);
  if (ctx.json) {
    Json j;
    j["command"] = "functor classify";
    j["file"] = file;
    j["realizable"] = c.realizable;
    if (!c.realizable) {
      j["obstruction_class"] = c.obstruction_class;
    } else {
      j["h2_order"] = c.h2.order();
      j["h2_factors"] = c.h2.factors();
      j["classes"] = static_cast<long long>(c.classes.size());
      Json cj = Json::array();
      for (const auto& f : c.classes) cj.push_back(cochain_entries(f.g));
      j["class_adjustments"] = std::move(cj);
    }
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "functor file: " << file << "\n";
    out << "realizable: " << (c.realizable ? "yes" : "no") << "\n";
    if (!c.realizable) {
      out << "obstruction class: " << fmt_list(c.obstruction_class) << "\n";
    } else {
      out << "homotopy classes: " << c.classes.size() << "\n";
      out << "degree-2 cohomology order: " << c.h2.order() << ", factors "
          << fmt_list(c.h2.factors()) << "\n";
      for (std::size_t i = 0; i < c.classes.size(); ++i)
        print_cochain(out, c.classes[i].g, "class " + std::to_string(i) + ": g", "");
    }
  }
  if (c.realizable)
    for (std::size_t i = 0; i < c.classes.size(); ++i)
      emit_json(ctx, "functor_" + std::to_string(i) + ".json", functor_to_json(c.classes[i]));
  return c.realizable ? 0 : 2;
}

int cmd_kernel_obstruction(const Ctx& ctx, const std::string& file) {
  KernelInput ki = load_kernel_file(file);
  AbstractKernel kernel = make_kernel(ki.pi, ki.g, ki.psi, ctx.caps);
  KernelObstruction ob = kernel_obstruction(kernel, ctx.caps);
  CohomologyGroup h3 = cohomology_group(ob.module, 3);
  bool exists = is_zero_class(ob.k_class);
  if (ctx.json) {
    Json j;
    j["command"] = "kernel obstruction";
    j["file"] = file;
    j["base_order"] = ki.pi.order();
    j["group_order"] = ki.g.order();
    j["psi"] = ki.psi;
    j["lifts"] = ob.lifts;
    j["f"] = ob.f;
    j["center"] = ob.center_elements;
    j["center_invariants"] = ob.center.group.factors;
    j["obstruction"] = cochain_entries(ob.k);
    j["class"] = ob.k_class;
    j["h3_order"] = h3.order();
    j["h3_factors"] = h3.factors();
    j["extensions_exist"] = exists;
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "kernel file: " << file << "\n";
    out << "base order " << ki.pi.order() << ", kernel group order " << ki.g.order() << "\n";
    out << "outer action: " << fmt_list(ki.psi) << "\n";
    out << "lifts (automorphism indices): " << fmt_list(ob.lifts) << "\n";
    bool fz = true;
    for (int x = 0; x < ki.pi.order(); ++x)
      for (int y = 0; y < ki.pi.order(); ++y)
        if (ob.f[x][y] != 0) {
          out << "f(" << x << ", " << y << ") = " << ob.f[x][y] << "\n";
          fz = false;
        }
    if (fz) out << "f: zero\n";
    out << "center: " << fmt_list(ob.center_elements) << ", invariants "
        << fmt_list(ob.center.group.factors) << "\n";
    print_cochain(out, ob.k, "obstruction k", "");
    out << "class: " << fmt_list(ob.k_class) << " in cohomology of order " << h3.order() << "\n";
    out << "extensions exist: " << (exists ? "yes" : "no") << "\n";
  }
  return exists ? 0 : 2;
}

int cmd_ext_enumerate(const Ctx& ctx, const std::string& file) {
  KernelInput ki = load_kernel_file(file);
  AbstractKernel kernel = make_kernel(ki.pi, ki.g, ki.psi, ctx.caps);
  ExtensionEnumeration en = enumerate_extensions(kernel, ctx.caps);
  bool exists = !en.classes.empty();
  if (ctx.json) {
    Json j;
    j["command"] = "ext enumerate";
    j["file"] = file;
    j["base_order"] = ki.pi.order();
    j["group_order"] = ki.g.order();
    j["psi"] = ki.psi;
    j["obstruction_class"] = en.obstruction.k_class;
    j["extensions_exist"] = exists;
    if (exists) {
      j["h2_order"] = en.h2.order();
      j["h2_factors"] = en.h2.factors();
      j["classes"] = static_cast<long long>(en.classes.size());
      j["lifts"] = en.obstruction.lifts;
      Json cj = Json::array();
      for (std::size_t i = 0; i < en.classes.size(); ++i) {
        Json e;
        GroupProfile p = profile_group(en.classes[i].b);
        e["order"] = p.order;
        e["description"] = p.description;
        e["factor_set"] = en.factor_sets[i].f;
        cj.push_back(std::move(e));
      }
      j["extensions"] = std::move(cj);
    }
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "kernel file: " << file << "\n";
    out << "base order " << ki.pi.order() << ", kernel group order " << ki.g.order() << "\n";
    out << "outer action: " << fmt_list(ki.psi) << "\n";
    out << "obstruction class: " << fmt_list(en.obstruction.k_class) << "\n";
    if (!exists) {
      out << "extensions exist: no\n";
    } else {
      out << "congruence classes: " << en.classes.size() << " (degree-2 cohomology order "
          << en.h2.order() << ", factors " << fmt_list(en.h2.factors()) << ")\n";
      out << "lifts (automorphism indices): " << fmt_list(en.obstruction.lifts) << "\n";
      for (std::size_t i = 0; i < en.classes.size(); ++i) {
        GroupProfile p = profile_group(en.classes[i].b);
        out << "class " << i << ": " << p.description << "\n";
        bool fz = true;
        for (int x = 0; x < ki.pi.order(); ++x)
          for (int y = 0; y < ki.pi.order(); ++y)
            if (en.factor_sets[i].f[x][y] != 0) {
              out << "  f(" << x << ", " << y << ") = " << en.factor_sets[i].f[x][y] << "\n";
              fz = false;
            }
        if (fz) out << "  f: zero\n";
      }
    }
  }
  if (exists)
    for (std::size_t i = 0; i < en.classes.size(); ++i) {
      GroupProfile p = profile_group(en.classes[i].b);
      emit_json(ctx, "extension_" + std::to_string(i) + ".json",
                group_to_json(en.classes[i].b, p.description));
    }
  return exists ? 0 : 2;
}

std::vector<long long> parse_factor_list(const std::string& s, const std::string& opt) {
  std::vector<long long> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::ParseError, opt + " must be a comma-separated list of integers");
    out.push_back(std::stoll(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

int cmd_emcheck(const Ctx& ctx, const std::string& m_str, const std::string& n_str) {
  FiniteAbelianGroup m = abelian_group(parse_factor_list(m_str, "--m"));
  FiniteAbelianGroup n = abelian_group(parse_factor_list(n_str, "--n"));
  FiniteGroup pi = cayley_of(m);
  require_group_cap(pi, ctx, "base group");
  EmCheckReport r = em_check(pi, n, ctx.caps);
  bool ok = r.match();
  if (ctx.json) {
    Json j;
    j["command"] = "braided emcheck";
    j["m"] = m.factors;
    j["n"] = n.factors;
    j["cohomology_order"] = r.cohomology_order;
    j["cohomology_factors"] = r.cohomology_factors;
    j["quadratic_maps"] = r.quadratic_count;
    j["polarization_only_maps"] = r.polarization_only_count;
    j["traces_quadratic"] = r.traces_quadratic;
    j["traces_additive"] = r.traces_additive;
    j["traces_distinct"] = r.traces_distinct;
    j["traces_cover"] = r.traces_cover;
    j["match"] = ok;
    print_report(ctx, j);
  } else {
    std::ostream& out = *ctx.out;
    out << "base group: " << fmt_list(m.factors) << ", coefficients: " << fmt_list(n.factors)
        << "\n";
    out << "braided cohomology order: " << r.cohomology_order << ", factors "
        << fmt_list(r.cohomology_factors) << "\n";
    out << "quadratic maps: " << r.quadratic_count << "\n";
    out << "polarization-only maps: " << r.polarization_only_count << "\n";
    out << "traces quadratic: " << (r.traces_quadratic ? "yes" : "no") << "\n";
    out << "traces additive: " << (r.traces_additive ? "yes" : "no") << "\n";
    out << "traces distinct: " << (r.traces_distinct ? "yes" : "no") << "\n";
    out << "traces cover: " << (r.traces_cover ? "yes" : "no") << "\n";
    out << "match: " << (ok ? "yes" : "no") << "\n";
  }
  if (!ctx.emit.empty()) {
    AbelianCohomology h = abelian_h3(trivial_module(pi, n));
    std::vector<AbelianCocyclePair> reps = h.class_representatives(ctx.caps.enumeration);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      GrType t = make_gr_type(reps[i].module, reps[i].h);
      emit_json(ctx, "pair_" + std::to_string(i) + ".json", gr_type_to_json(t, &reps[i].eta));
    }
  }
  return ok ? 0 : 2;
}

int cmd_strictify(const Ctx& ctx, const std::string& type_file, const std::string& kernel_file) {
  GrTypeInput ti = load_gr_type_file(type_file);
  KernelInput ki = load_kernel_file(kernel_file);
  if (!(ki.pi == ti.type.pi()))
    throw Error(Errc::SourceTargetMismatch,
                kernel_file + ": realization base group differs from the type's base group");
  std::ostream& out = *ctx.out;
  StrictifyResult r;
  try {
    r = strictify(ti.type, ki.g, ki.psi, ctx.caps);
  } catch (const Error& e) {
    if (e.code != Errc::RealizationMismatch) throw;
    if (ctx.json) {
      Json j;
      j["command"] = "strictify";
      j["file"] = type_file;
      j["realization"] = kernel_file;
      j["strictified"] = false;
      j["reason"] = e.detail;
      print_report(ctx, j);
    } else {
      out << "type file: " << type_file << "\n";
      out << "realization file: " << kernel_file << "\n";
      out << "strictified: no\n";
      out << "reason: " << e.detail << "\n";
    }
    return 2;
  }
  if (ctx.json) {
    Json j;
    j["command"] = "strictify";
    j["file"] = type_file;
    j["realization"] = kernel_file;
    j["strictified"] = true;
    j["group_order"] = ki.g.order();
    j["automorphisms"] = r.aut->order();
    j["outer_classes"] = r.aut->out.order();
    j["model_objects"] = static_cast<long long>(r.model.objects.size());
    j["coefficient_identification"] = mat_json(r.coeff_iso.m);
    j["adjustment"] = cochain_entries(r.equivalence.g);
    print_report(ctx, j);
  } else {
    out << "type file: " << type_file << "\n";
    out << "realization file: " << kernel_file << "\n";
    out << "strictified: yes\n";
    out << "realizing group order: " << ki.g.order() << " (automorphisms " << r.aut->order()
        << ", outer classes " << r.aut->out.order() << ")\n";
    out << "model objects: " << r.model.objects.size() << "\n";
    out << "coefficient identification: " << fmt_mat(r.coeff_iso.m) << "\n";
    print_cochain(out, r.equivalence.g, "adjustment g", "");
  }
  emit_json(ctx, "equivalence.json", functor_to_json(r.equivalence));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite categorical group calculator"};
  app.name("grcat");
  app.require_subcommand(1);
  app.fallthrough();

  int cap = 12;
  Ctx ctx;
  ctx.out = &out;
  app.add_option("--cap", cap, "largest base group order to work with (default 12)");
  app.add_flag("--json", ctx.json, "print reports as JSON");
  app.add_option("--emit", ctx.emit, "directory for re-loadable result files");

  auto* group = app.add_subcommand("group", "finite group utilities");
  group->require_subcommand(1);
  group->fallthrough();
  std::string group_check_file, group_aut_file;
  auto* group_check = group->add_subcommand("check", "validate a group table file");
  group_check->fallthrough();
  group_check->add_option("file", group_check_file, "group file")->required();
  auto* group_aut = group->add_subcommand("aut", "automorphism data of a group");
  group_aut->fallthrough();
  group_aut->add_option("file", group_aut_file, "group file")->required();

  std::string coh_file;
  int coh_degree = 0;
  auto* coh = app.add_subcommand("cohomology", "cohomology of a base-group module");
  coh->fallthrough();
  coh->add_option("file", coh_file, "module file")->required();
  coh->add_option("--degree", coh_degree, "cohomology degree (1, 2, or 3)")->required();

  auto* functor = app.add_subcommand("functor", "monoidal functor analysis");
  functor->require_subcommand(1);
  functor->fallthrough();
  std::string functor_obs_file, functor_cls_file;
  auto* functor_obs = functor->add_subcommand("obstruction", "obstruction to realizing a pair");
  functor_obs->fallthrough();
  functor_obs->add_option("file", functor_obs_file, "functor file")->required();
  auto* functor_cls = functor->add_subcommand("classify", "homotopy classes extending a pair");
  functor_cls->fallthrough();
  functor_cls->add_option("file", functor_cls_file, "functor file")->required();

  auto* kernel = app.add_subcommand("kernel", "abstract kernel analysis");
  kernel->require_subcommand(1);
  kernel->fallthrough();
  std::string kernel_file;
  auto* kernel_obs = kernel->add_subcommand("obstruction", "central obstruction of a kernel");
  kernel_obs->fallthrough();
  kernel_obs->add_option("file", kernel_file, "kernel file")->required();

  auto* ext = app.add_subcommand("ext", "group extension classification");
  ext->require_subcommand(1);
  ext->fallthrough();
  std::string ext_file;
  auto* ext_enum = ext->add_subcommand("enumerate", "congruence classes of extensions");
  ext_enum->fallthrough();
  ext_enum->add_option("file", ext_file, "kernel file")->required();

  auto* braided = app.add_subcommand("braided", "braided classification checks");
  braided->require_subcommand(1);
  braided->fallthrough();
  std::string em_m, em_n;
  auto* emcheck = braided->add_subcommand(
      "emcheck", "compare braided classes with quadratic maps");
  emcheck->fallthrough();
  emcheck->add_option("--m", em_m, "base group invariant factors, comma separated")->required();
  emcheck->add_option("--n", em_n, "coefficient invariant factors, comma separated")->required();

  std::string strict_type, strict_kernel;
  auto* strict = app.add_subcommand("strictify", "realize a type inside an automorphism model");
  strict->fallthrough();
  strict->add_option("file", strict_type, "type file")->required();
  strict->add_option("--realization", strict_kernel, "kernel file naming the model")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  ctx.caps.group_order = cap;
  ctx.caps.extension_order = std::max(32, cap);

  try {
    if (group_check->parsed()) return cmd_group_check(ctx, group_check_file);
    if (group_aut->parsed()) return cmd_group_aut(ctx, group_aut_file);
    if (coh->parsed()) return cmd_cohomology(ctx, coh_file, coh_degree);
    if (functor_obs->parsed()) return cmd_functor_obstruction(ctx, functor_obs_file);
    if (functor_cls->parsed()) return cmd_functor_classify(ctx, functor_cls_file);
    if (kernel_obs->parsed()) return cmd_kernel_obstruction(ctx, kernel_file);
    if (ext_enum->parsed()) return cmd_ext_enumerate(ctx, ext_file);
    if (emcheck->parsed()) return cmd_emcheck(ctx, em_m, em_n);
    if (strict->parsed()) return cmd_strictify(ctx, strict_type, strict_kernel);
    err << "error: no subcommand given\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!e.witness.empty()) err << " [witness: " << fmt_list(e.witness) << "]";
    err << "\n";
    return 1;
  }
}

}  // namespace grcat
