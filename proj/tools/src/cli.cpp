#include "singk/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "singk/assembly.hpp"
#include "singk/characters.hpp"
#include "singk/geomtables.hpp"
#include "singk/localsing.hpp"
#include "singk/presets.hpp"
#include "singk/repring.hpp"
#include "singk/serialize.hpp"
#include "singk/verify/acceptance.hpp"

namespace singk::cli {

namespace {

using Json = nlohmann::json;

struct RunConfig {
  bool json = false;
  bool checks = false;
  std::size_t max_order = kDefaultMaxOrder;
  std::uint64_t seed = 20261016;
};

struct GroupSource {
  std::string preset;
  std::string cyclic;
  std::string file;
};

// Unicode-aware width for column alignment.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], display_width(row[i]));
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::vector<unsigned long> parse_list(const std::string& text, const std::string& what) {
  std::vector<unsigned long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      raise(ErrorCode::InvalidArgument, "malformed " + what + " '" + text + "'");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) raise(ErrorCode::InvalidArgument, "empty " + what);
  return out;
}

// "m:a1,a2,..."
std::pair<unsigned long, std::vector<unsigned long>> parse_cyclic(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) raise(ErrorCode::InvalidArgument, "cyclic model must look like m:a1,a2,...");
  const auto m = parse_list(text.substr(0, colon), "modulus");
  if (m.size() != 1) raise(ErrorCode::InvalidArgument, "malformed modulus in '" + text + "'");
  return {m[0], parse_list(text.substr(colon + 1), "weights")};
}

std::vector<CycMatrix> read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::InvalidArgument, "cannot open group file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("group file: ") + e.what());
  }
  // preset data files wrap the group under "group"
  if (j.is_object() && j.contains("group")) return json::generators_from_json(j.at("group"));
  return json::generators_from_json(j);
}

int count_sources(const GroupSource& s) {
  return static_cast<int>(!s.preset.empty()) + static_cast<int>(!s.cyclic.empty()) + static_cast<int>(!s.file.empty());
}

void require_one_source(const GroupSource& s) {
  if (count_sources(s) != 1) raise(ErrorCode::InvalidArgument, "give exactly one of --preset, --cyclic, --group");
}

LocalModel model_from(const GroupSource& s, const RunConfig& cfg) {
  require_one_source(s);
  if (!s.preset.empty()) return find_preset(s.preset).model(cfg.max_order);
  if (!s.cyclic.empty()) {
    const auto [m, w] = parse_cyclic(s.cyclic);
    return LocalModel::cyclic(m, w);
  }
  return LocalModel::matrix(close_group(read_group_file(s.file), cfg.max_order), s.file);
}

GroupPtr group_from(const GroupSource& s, const RunConfig& cfg) {
  const LocalModel m = model_from(s, cfg);
  return m.as_matrix_model(cfg.max_order).group;
}

std::string label_of(const GroupSource& s) {
  if (!s.preset.empty()) return s.preset;
  if (!s.cyclic.empty()) return "cyclic " + s.cyclic;
  return s.file;
}

void add_source_options(CLI::App* sub, GroupSource& s) {
  sub->add_option("--preset", s.preset, "named group: A1..A8, D4..D9, E6, E7, E8 (any A_n, D_n)");
  sub->add_option("--cyclic", s.cyclic, "cyclic model m:a1,a2,...");
  sub->add_option("--group", s.file, "group JSON file {n, conductor, generators}");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

int cmd_group(const GroupSource& src, const RunConfig& cfg, std::ostream& out) {
  const GroupPtr g = group_from(src, cfg);
  std::size_t reflections = 0;
  for (const auto& c : g->classes())
    if (is_reflection(*g, c.representative)) reflections += c.size();
  const bool free_action = acts_freely_off_origin(*g);
  std::vector<CycMatrix> gens;
  for (auto i : g->generator_indices()) gens.push_back(g->element(i));
  if (cfg.json) {
    Json classes = Json::array();
    for (const auto& c : g->classes())
      classes.push_back({{"size", c.size()}, {"representative_order", g->element_order(c.representative)}});
    out << Json{{"order", g->order()},
                {"dimension", g->dimension()},
                {"conductor", g->conductor()},
                {"exponent", g->exponent()},
                {"classes", classes},
                {"reflections", reflections},
                {"free_action", free_action},
                {"group", json::group_to_json(gens)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  print_table(out, {{"group", label_of(src)},
                    {"order", std::to_string(g->order())},
                    {"dimension", std::to_string(g->dimension())},
                    {"conductor", std::to_string(g->conductor())},
                    {"exponent", std::to_string(g->exponent())},
                    {"classes", std::to_string(g->class_count())},
                    {"reflections", std::to_string(reflections)},
                    {"free action", yes_no(free_action)}});
  return kExitOk;
}

int cmd_chartab(const GroupSource& src, const RunConfig& cfg, std::ostream& out) {
  const GroupPtr g = group_from(src, cfg);
  const TablePtr t = character_table(g);
  if (cfg.json) {
    out << json::to_json(*t).dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> sizes{"size"}, orders{"order"};
  for (const auto& c : g->classes()) {
    sizes.push_back(std::to_string(c.size()));
    orders.push_back(std::to_string(g->element_order(c.representative)));
  }
  rows.push_back(sizes);
  rows.push_back(orders);
  for (std::size_t i = 0; i < t->size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1)};
    for (const auto& v : (*t)[i].values()) row.push_back(v.to_string());
    rows.push_back(std::move(row));
  }
  out << "character table of " << label_of(src) << " (order " << g->order() << ", values in Q(z" << t->conductor()
      << "))\n";
  print_table(out, rows);
  return kExitOk;
}

int cmd_koszul(const GroupSource& src, const RunConfig& cfg, bool matrix, bool use_rho, std::ostream& out) {
  const GroupPtr g = group_from(src, cfg);
  const TablePtr t = character_table(g);
  const VirtualCharacter r = koszul_class(g, t, !use_rho);
  const ClassFunction rv = r.realize();
  if (cfg.json) {
    Json coords = Json::array();
    for (const auto& c : r.coords()) coords.push_back(json::big_to_json(c));
    Json values = Json::array();
    for (const auto& v : rv.values()) values.push_back(json::to_json(v));
    Json j = {{"coords", coords}, {"class_function", values}, {"dual", !use_rho}};
    if (matrix) j["matrix"] = json::to_json(multiplication_matrix(r));
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::string coords;
  for (std::size_t i = 0; i < r.coords().size(); ++i) coords += (i ? " " : "") + r.coords()[i].get_str();
  std::string values;
  for (std::size_t i = 0; i < rv.size(); ++i) values += (i ? ", " : "") + rv[i].to_string();
  out << "r in irreducible coordinates: (" << coords << ")\n";
  out << "r as a class function: (" << values << ")\n";
  if (matrix) out << "multiplication by r:\n" << multiplication_matrix(r).to_string() << '\n';
  return kExitOk;
}

int cmd_ksg(const GroupSource& src, const RunConfig& cfg, std::ostream& out) {
  const LocalModel model = model_from(src, cfg);
  const SingInvariants s = local_invariants(model);
  const int code = s.all_checks_passed() ? kExitOk : kExitCheckFailure;
  if (cfg.json) {
    Json j = json::to_json(s);
    j["model"] = model.describe();
    j["flags"] = Json::array();
    if (s.isolated)
      j["flags"].push_back(
          {{"name", "ksg1_zero"}, {"value", "true"}, {"statement", "K^sg_1 vanishes for isolated quotient singularities"}, {"provenance", "cited"}});
    out << j.dump(2) << '\n';
    return code;
  }
  std::vector<std::vector<std::string>> rows = {
      {"model", model.describe() + " (order " + s.group_order.get_str() + ", n = " + std::to_string(s.dimension) + ")"},
      {s.free_action ? "G_0" : "R(G)/rR(G)", s.g0.to_string()},
      {"K^sg_0", s.ksg0 ? s.ksg0->to_string() : "not defined (action not free)"},
      {"Cl", s.cl.to_string()},
      {"free action", yes_no(s.free_action)},
      {"isolated", yes_no(s.isolated)},
      {"bound |G|^(n-1)", s.annihilator_bound.get_str()},
  };
  print_table(out, rows);
  if (cfg.checks || code != kExitOk) {
    out << "checks:\n";
    std::vector<std::vector<std::string>> crows;
    for (const auto& c : s.checks) crows.push_back({"  " + to_string(c.status), c.name, c.detail});
    print_table(out, crows);
  }
  return code;
}

int cmd_cl(const GroupSource& src, const RunConfig& cfg, std::ostream& out) {
  const LocalModel model = model_from(src, cfg);
  const AbelianGroupStructure cl = class_group(model);
  if (cfg.json) out << Json{{"model", model.describe()}, {"cl", json::to_json(cl)}}.dump(2) << '\n';
  else out << "Cl(" << model.describe() << ") = " << cl.to_string() << '\n';
  return kExitOk;
}

int cmd_ade(bool curves, bool threefolds, const std::string& label, const RunConfig& cfg, std::ostream& out) {
  if (!label.empty()) {
    const auto rec = ade_curve_invariants(label);
    if (cfg.json) {
      Json j = json::to_json(rec);
      j["threefold_cl"] = json::to_json(ade_threefold_class_group(label));
      out << j.dump(2) << '\n';
    } else {
      print_table(out, {{"curve", rec.label + " (" + rec.family + ")"},
                        {"equation", rec.equation},
                        {"N", std::to_string(rec.components)},
                        {"K^sg_0", rec.ksg0.to_string()},
                        {"Pic", SymbolicGroupExpr::vector_space(AffineDim::fixed(rec.pic_dim)).render()},
                        {"K^sg_1", rec.ksg1.render()},
                        {"Cl(threefold)", ade_threefold_class_group(label).to_string()}});
    }
    return kExitOk;
  }
  if (!curves && !threefolds) raise(ErrorCode::InvalidArgument, "choose --curves, --threefolds or --label");
  Json j = Json::object();
  if (curves) {
    Json rows = Json::array();
    std::vector<std::vector<std::string>> text{{"C", "condition", "equation", "N", "K^sg_0", "Pic", "K^sg_1"}};
    for (const auto& r : ade_curve_table()) {
      rows.push_back({{"family", r.family},
                      {"condition", r.condition},
                      {"equation", r.equation},
                      {"components", r.components},
                      {"ksg0", json::to_json(r.ksg0)},
                      {"pic", r.pic.render()},
                      {"ksg1", r.ksg1.render()}});
      text.push_back({r.family, r.condition, r.equation, std::to_string(r.components), r.ksg0.to_string(),
                      r.pic.render(), r.ksg1.render()});
    }
    j["curves"] = rows;
    if (!cfg.json) print_table(out, text);
  }
  if (threefolds) {
    if (curves && !cfg.json) out << '\n';
    Json rows = Json::array();
    std::vector<std::vector<std::string>> text{{"X", "condition", "equation", "Cl(X)"}};
    for (const auto& r : ade_threefold_table()) {
      rows.push_back({{"family", r.family}, {"condition", r.condition}, {"equation", r.equation}, {"cl", json::to_json(r.cl)}});
      text.push_back({r.family, r.condition, r.equation, r.cl.to_string()});
    }
    j["threefolds"] = rows;
    if (!cfg.json) print_table(out, text);
  }
  if (cfg.json) out << j.dump(2) << '\n';
  return kExitOk;
}

void print_filtered(const FilteredAbelianGroup& fg, const std::string& title, const RunConfig& cfg,
                    std::ostream& out) {
  if (cfg.json) {
    out << json::to_json(fg).dump(2) << '\n';
    return;
  }
  out << title << ": K^sg_0 = " << fg.group.to_string() << '\n';
  for (const auto& c : fg.components) out << "  gr^" << c.degree << " = " << c.part.to_string() << '\n';
}

int cmd_odp(long n, const RunConfig& cfg, std::ostream& out) {
  print_filtered(odp_invariants(n), "ordinary double point of dimension " + std::to_string(n), cfg, out);
  return kExitOk;
}

int cmd_knorrer(long k, const std::string& base, const RunConfig& cfg, std::ostream& out) {
  KnorrerBase b;
  if (base == "z2") b = KnorrerBase::DoublePoint;
  else if (base == "xy") b = KnorrerBase::NodeCurve;
  else raise(ErrorCode::InvalidArgument, "--base must be z2 or xy");
  if (cfg.json) {
    Json chain = Json::array();
    for (long i = 0; i <= k; ++i) chain.push_back(json::to_json(knorrer_chain(b, i)));
    out << Json{{"base", base}, {"chain", chain}}.dump(2) << '\n';
    return kExitOk;
  }
  out << "base " << (base == "z2" ? "k[z]/(z^2)" : "xy = 0") << '\n';
  for (long i = 0; i <= k; ++i) out << "step " << i << ": " << knorrer_chain(b, i).to_string() << '\n';
  return kExitOk;
}

void print_report(const GlobalReport& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.json) {
    out << json::to_json(r).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"local model", "order", "K^sg_0", "Cl"}};
  for (const auto& l : r.locals) rows.push_back({l.model, l.order.get_str(), l.ksg0.to_string(), l.cl.to_string()});
  if (r.locals.empty()) out << "no singular points\n";
  else print_table(out, rows);
  out << "upper K^sg_0 (computed): " << r.kksg0.to_string() << '\n';
  out << "annihilator bound lcm(|G_i|)^(n-1) (computed): " << r.annihilator_bound.get_str() << '\n';
  if (r.surface_formula) out << "direct sum of local class groups (computed): " << r.surface_formula->to_string() << '\n';
  for (const auto& c : r.checks) out << "check " << to_string(c.status) << ": " << c.name << '\n';
  for (const auto& f : r.flags) out << "cited " << f.name << " = " << f.value << ": " << f.statement << '\n';
}

int cmd_assemble(std::size_t n, const std::vector<std::string>& specs, const RunConfig& cfg, std::ostream& out) {
  GlobalSingularityData data;
  data.n = n;
  for (const auto& spec : specs) {
    if (spec.rfind("cyclic:", 0) == 0) {
      const auto [m, w] = parse_cyclic(spec.substr(7));
      data.local_models.push_back(LocalModel::cyclic(m, w));
    } else if (spec.rfind("preset:", 0) == 0) {
      data.local_models.push_back(find_preset(spec.substr(7)).model(cfg.max_order));
    } else {
      raise(ErrorCode::InvalidArgument, "model '" + spec + "' must start with cyclic: or preset:");
    }
  }
  const GlobalReport r = assemble(data);
  print_report(r, cfg, out);
  return r.all_checks_passed() ? kExitOk : kExitCheckFailure;
}

int cmd_wps(const std::string& weights, const RunConfig& cfg, std::ostream& out) {
  const GlobalReport r = wps_report(parse_list(weights, "weights"));
  print_report(r, cfg, out);
  return r.all_checks_passed() ? kExitOk : kExitCheckFailure;
}

int cmd_selftest(const RunConfig& cfg, const std::vector<int>& only, std::ostream& out) {
  verify::AcceptanceOptions opt;
  opt.seed = cfg.seed;
  opt.only = only;
  opt.cli = [](const std::vector<std::string>& args, std::ostream& o, std::ostream& e) { return run(args, o, e); };
  const auto results = verify::run_acceptance(opt);
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (cfg.json)
      arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    else
      out << verify::format_result(r) << '\n';
  }
  if (cfg.json) out << Json{{"criteria", arr}, {"passed", all}}.dump(2) << '\n';
  return all ? kExitOk : kExitCheckFailure;
}

std::size_t default_max_order() {
  if (const char* env = std::getenv("SINGK_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxOrder;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept { return is_internal(code) ? kExitCheckFailure : kExitUsage; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.max_order = default_max_order();

  CLI::App app{"Exact singularity K-theory of quotient singularities", "singk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--max-order", cfg.max_order, "bound on enumerated group orders (env SINGK_MAX_ORDER)")
      ->check(CLI::PositiveNumber);

  GroupSource src;
  bool matrix = false, use_rho = false, curves = false, threefolds = false;
  std::string ade_label, base = "z2", weights;
  long dim = 0, chain = 0;
  std::size_t assemble_dim = 0;
  std::vector<std::string> model_specs;
  std::vector<int> only;

  auto* group = app.add_subcommand("group", "enumerate a group: order, classes, freeness");
  add_source_options(group, src);
  auto* chartab = app.add_subcommand("chartab", "character table");
  add_source_options(chartab, src);
  auto* koszul = app.add_subcommand("koszul", "Koszul class r in R(G)");
  add_source_options(koszul, src);
  koszul->add_flag("--matrix", matrix, "also emit the multiplication-by-r matrix");
  koszul->add_flag("--rho", use_rho, "use exterior powers of rho instead of its dual");
  auto* ksg = app.add_subcommand("ksg", "G_0, K^sg_0 and Cl of A^n/G");
  add_source_options(ksg, src);
  ksg->add_flag("--checks", cfg.checks, "print the structural checks");
  auto* cl = app.add_subcommand("cl", "class group of A^n/G");
  add_source_options(cl, src);
  auto* ade = app.add_subcommand("ade", "ADE curve and threefold tables");
  ade->add_flag("--curves", curves, "curve table");
  ade->add_flag("--threefolds", threefolds, "threefold class group table");
  ade->add_option("--label", ade_label, "a single curve such as A4 or E7");
  auto* odp = app.add_subcommand("odp", "ordinary double point of dimension n");
  odp->add_option("--dim", dim, "dimension n >= 1")->required()->check(CLI::PositiveNumber);
  auto* knorrer = app.add_subcommand("knorrer", "Knorrer chain from a base singularity");
  knorrer->add_option("--chain", chain, "number of shifts")->required()->check(CLI::NonNegativeNumber);
  knorrer->add_option("--base", base, "z2 (k[z]/z^2) or xy (xy = 0)")->check(CLI::IsMember({"z2", "xy"}));
  auto* assemble_cmd = app.add_subcommand("assemble", "global upper K^sg_0 from local models");
  assemble_cmd->add_option("--dim", assemble_dim, "ambient dimension n")->required();
  assemble_cmd->add_option("--model", model_specs, "cyclic:m:a1,... or preset:NAME (repeatable)");
  auto* wps = app.add_subcommand("wps", "weighted projective space P(a_0, ..., a_n)");
  wps->add_option("--weights", weights, "pairwise coprime weights a0,a1,...")->required();
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--seed", cfg.seed, "random seed");
  selftest->add_option("--only", only, "criterion ids to run");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*group) return cmd_group(src, cfg, out);
    if (*chartab) return cmd_chartab(src, cfg, out);
    if (*koszul) return cmd_koszul(src, cfg, matrix, use_rho, out);
    if (*ksg) return cmd_ksg(src, cfg, out);
    if (*cl) return cmd_cl(src, cfg, out);
    if (*ade) return cmd_ade(curves, threefolds, ade_label, cfg, out);
    if (*odp) return cmd_odp(dim, cfg, out);
    if (*knorrer) return cmd_knorrer(chain, base, cfg, out);
    if (*assemble_cmd) return cmd_assemble(assemble_dim, model_specs, cfg, out);
    if (*wps) return cmd_wps(weights, cfg, out);
    if (*selftest) return cmd_selftest(cfg, only, out);
  } catch (const Error& e) {
    if (cfg.json) err << json::error_to_json(e.code(), e.what()).dump() << '\n';
    else err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    if (cfg.json) err << json::error_to_json(ErrorCode::AlgorithmFailure, e.what()).dump() << '\n';
    else err << "internal error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}

}  // namespace singk::cli
