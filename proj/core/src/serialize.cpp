#include "singk/serialize.hpp"

#include <limits>

namespace singk::json {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

BigRational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return BigRational(big_from_json(j));
    if (j.is_string()) {
      BigRational q(j.get<std::string>());
      q.canonicalize();
      return q;
    }
    if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
      const BigInt num = big_from_json(j[0]);
      const BigInt den = j.size() == 2 ? big_from_json(j[1]) : BigInt(1);
      if (den == 0) raise(ErrorCode::DivisionByZero, "zero denominator in coefficient");
      BigRational q(num, den);
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    bad("malformed rational " + j.dump());
  }
  bad("malformed rational " + j.dump());
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json big_to_json(const BigInt& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return Json(x.get_si());
  return Json(x.get_str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<unsigned long>());
    return BigInt(j.get<long>());
  }
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad("malformed integer " + j.dump());
    return x;
  }
  bad("expected an integer, got " + j.dump());
}

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  return {{"N", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return CycNum(rational_from_json(j));
  const std::size_t n = size_from_json(field(j, "N"), "N");
  if (n == 0) bad("conductor must be positive");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) bad("coeffs must be an array");
  std::vector<BigRational> coeffs;
  for (const auto& c : cs) coeffs.push_back(rational_from_json(c));
  return CycNum::from_coeffs(n, coeffs);
}

Json to_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

CycMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  std::vector<CycNum> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) bad("matrix must be square");
    for (const auto& x : row) entries.push_back(cycnum_from_json(x));
  }
  return CycMatrix(n, std::move(entries));
}

Json group_to_json(const std::vector<CycMatrix>& generators) {
  unsigned long cond = 1;
  for (const auto& g : generators) cond = lcm_ul(cond, g.conductor());
  Json gens = Json::array();
  for (const auto& g : generators) gens.push_back(to_json(g.promoted(cond)));
  return {{"n", generators.empty() ? 0 : generators.front().dim()}, {"conductor", cond}, {"generators", gens}};
}

std::vector<CycMatrix> generators_from_json(const Json& j) {
  const std::size_t n = size_from_json(field(j, "n"), "n");
  const std::size_t cond = size_from_json(field(j, "conductor"), "conductor");
  if (cond == 0) bad("conductor must be positive");
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || gens.empty()) bad("generators must be a nonempty array");
  std::vector<CycMatrix> out;
  for (const auto& g : gens) {
    CycMatrix m = matrix_from_json(g);
    if (m.dim() != n) bad("generator size differs from n = " + std::to_string(n));
    if (cond % m.conductor() != 0)
      bad("generator entries need conductor " + std::to_string(m.conductor()) + ", which does not divide " +
          std::to_string(cond));
    out.push_back(m.promoted(cond));
  }
  return out;
}

Json to_json(const AbelianGroupStructure& a) {
  Json t = Json::array();
  for (const auto& d : a.torsion) t.push_back(big_to_json(d));
  return {{"free_rank", a.free_rank}, {"invariant_factors", t}};
}

AbelianGroupStructure abelian_from_json(const Json& j) {
  const std::size_t r = size_from_json(field(j, "free_rank"), "free_rank");
  const Json& t = field(j, "invariant_factors");
  if (!t.is_array()) bad("invariant_factors must be an array");
  std::vector<BigInt> orders;
  for (const auto& d : t) {
    BigInt x = big_from_json(d);
    if (x < 1) bad("invariant factors must be positive");
    orders.push_back(std::move(x));
  }
  AbelianGroupStructure a = AbelianGroupStructure::from_cyclic_orders(orders);
  a.free_rank += r;
  return a;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(big_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix intmatrix_from_json(const Json& j) {
  if (!j.is_array()) bad("integer matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  std::vector<BigInt> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) bad("integer matrix rows differ in length");
    for (const auto& x : row) entries.push_back(big_from_json(x));
  }
  return IntMatrix(rows, cols, std::move(entries));
}

Json to_json(const CheckRecord& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
}

CheckRecord check_from_json(const Json& j) {
  CheckRecord c;
  c.name = field(j, "name").get<std::string>();
  c.status = check_status_from_string(field(j, "status").get<std::string>());
  if (j.contains("detail")) c.detail = j.at("detail").get<std::string>();
  return c;
}

Json to_json(const SingInvariants& s) {
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return {{"dimension", s.dimension},
          {"group_order", big_to_json(s.group_order)},
          {"g0", to_json(s.g0)},
          {"g0_interpretation", s.free_action ? "G_0" : "R(G)/rR(G), free action fails"},
          {"ksg0", s.ksg0 ? to_json(*s.ksg0) : Json(nullptr)},
          {"cl", to_json(s.cl)},
          {"free_action", s.free_action},
          {"isolated", s.isolated},
          {"annihilator_bound", big_to_json(s.annihilator_bound)},
          {"checks", checks}};
}

SingInvariants sing_from_json(const Json& j) {
  SingInvariants s;
  try {
    s.dimension = size_from_json(field(j, "dimension"), "dimension");
    s.group_order = big_from_json(field(j, "group_order"));
    s.g0 = abelian_from_json(field(j, "g0"));
    if (!field(j, "ksg0").is_null()) s.ksg0 = abelian_from_json(j.at("ksg0"));
    s.cl = abelian_from_json(field(j, "cl"));
    s.free_action = field(j, "free_action").get<bool>();
    s.isolated = field(j, "isolated").get<bool>();
    s.annihilator_bound = big_from_json(field(j, "annihilator_bound"));
    for (const auto& c : field(j, "checks")) s.checks.push_back(check_from_json(c));
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  return s;
}

Json to_json(const FilteredAbelianGroup& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back({{"degree", c.degree}, {"part", to_json(c.part)}});
  return {{"group", to_json(f.group)}, {"components", comps}};
}

FilteredAbelianGroup filtered_from_json(const Json& j) {
  std::vector<FilterComponent> comps;
  for (const auto& c : field(j, "components"))
    comps.push_back({field(c, "degree").get<long>(), abelian_from_json(field(c, "part"))});
  FilteredAbelianGroup f = FilteredAbelianGroup::from_components(std::move(comps));
  if (j.contains("group") && abelian_from_json(j.at("group")) != f.group)
    bad("filtered group total disagrees with its parts");
  return f;
}

Json to_json(const ADECurveRecord& r) {
  Json j = {{"label", r.label},
            {"family", r.family},
            {"parameter", r.parameter ? Json(*r.parameter) : Json(nullptr)},
            {"equation", r.equation},
            {"components", r.components},
            {"ksg0", to_json(r.ksg0)},
            {"pic_dim", r.pic_dim},
            {"ksg1", r.ksg1.render()},
            {"cusp", r.cusp ? Json::array({r.cusp->first, r.cusp->second}) : Json(nullptr)}};
  return j;
}

ADECurveRecord curve_record_from_json(const Json& j) {
  ADECurveRecord r;
  try {
    r.label = field(j, "label").get<std::string>();
    r.family = field(j, "family").get<std::string>();
    if (!field(j, "parameter").is_null()) r.parameter = j.at("parameter").get<long>();
    r.equation = field(j, "equation").get<std::string>();
    r.components = field(j, "components").get<long>();
    r.ksg0 = abelian_from_json(field(j, "ksg0"));
    r.pic_dim = field(j, "pic_dim").get<long>();
    r.ksg1 = SymbolicGroupExpr::parse(field(j, "ksg1").get<std::string>());
    if (!field(j, "cusp").is_null()) r.cusp = std::make_pair(j.at("cusp")[0].get<long>(), j.at("cusp")[1].get<long>());
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  return r;
}

Json to_json(const GlobalReport& r) {
  Json locals = Json::array();
  for (const auto& l : r.locals)
    locals.push_back({{"model", l.model}, {"order", big_to_json(l.order)}, {"ksg0", to_json(l.ksg0)}, {"cl", to_json(l.cl)}});
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json flags = Json::array();
  for (const auto& f : r.flags)
    flags.push_back({{"name", f.name}, {"value", f.value}, {"statement", f.statement}, {"provenance", "cited"}});
  return {{"schema", GlobalReport::kSchema},
          {"n", r.n},
          {"locals", locals},
          {"kksg0", {{"value", to_json(r.kksg0)}, {"provenance", "computed"}}},
          {"annihilator_bound", {{"value", big_to_json(r.annihilator_bound)}, {"provenance", "computed"}}},
          {"surface_formula", r.surface_formula ? Json{{"value", to_json(*r.surface_formula)}, {"provenance", "computed"}}
                                                : Json(nullptr)},
          {"checks", checks},
          {"flags", flags}};
}

GlobalReport global_report_from_json(const Json& j) {
  GlobalReport r;
  try {
    if (field(j, "schema").get<int>() != GlobalReport::kSchema)
      bad("unsupported report schema " + j.at("schema").dump());
    r.n = size_from_json(field(j, "n"), "n");
    for (const auto& l : field(j, "locals"))
      r.locals.push_back({field(l, "model").get<std::string>(), big_from_json(field(l, "order")),
                          abelian_from_json(field(l, "ksg0")), abelian_from_json(field(l, "cl"))});
    r.kksg0 = abelian_from_json(field(field(j, "kksg0"), "value"));
    r.annihilator_bound = big_from_json(field(field(j, "annihilator_bound"), "value"));
    if (!field(j, "surface_formula").is_null())
      r.surface_formula = abelian_from_json(field(j.at("surface_formula"), "value"));
    for (const auto& c : field(j, "checks")) r.checks.push_back(check_from_json(c));
    for (const auto& f : field(j, "flags"))
      r.flags.push_back({field(f, "name").get<std::string>(), field(f, "value").get<std::string>(),
                         field(f, "statement").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  return r;
}

Json to_json(const CharacterTable& t) {
  const auto& g = *t.group();
  Json classes = Json::array();
  for (const auto& c : g.classes())
    classes.push_back({{"size", c.size()}, {"representative_order", g.element_order(c.representative)}});
  Json irr = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : t[i].values()) values.push_back(to_json(v));
    irr.push_back({{"degree", t.degrees()[i]}, {"values", values}});
  }
  return {{"order", g.order()}, {"conductor", t.conductor()}, {"classes", classes}, {"irreducibles", irr}};
}

Json error_to_json(ErrorCode code, const std::string& message) {
  return {{"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
}

}  // namespace singk::json
