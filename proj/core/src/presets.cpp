#include "singk/presets.hpp"

#include <cctype>

#include "singk/error.hpp"

namespace singk {

namespace {

CycNum q(long num, long den = 1, unsigned long conductor = 1) { return CycNum(BigRational(num, den), conductor); }

// a + b i + c j + d k  ->  [[a + b i, c + d i], [-c + d i, a - b i]] with i = zeta_4^{N/4}
CycMatrix quaternion(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d, unsigned long conductor) {
  const CycNum i = CycNum::zeta(conductor, static_cast<long>(conductor / 4));
  return CycMatrix(2, {a + b * i, c + d * i, -c + d * i, a - b * i});
}

Preset cyclic_named(std::string name, unsigned long m, std::vector<unsigned long> weights) {
  Preset p = cyclic_preset(m, weights);
  p.name = std::move(name);
  return p;
}

Preset binary_tetrahedral_base(unsigned long conductor) {
  const CycNum half = q(1, 2);
  Preset p;
  p.conductor = conductor;
  p.generators = {
      quaternion(q(0), q(1), q(0), q(0), conductor),
      quaternion(q(0), q(0), q(1), q(0), conductor),
      quaternion(half, half, half, half, conductor),
  };
  return p;
}

Preset e6() {
  Preset p = binary_tetrahedral_base(4);
  p.name = "E6";
  p.description = "binary tetrahedral group in SL_2(Q(i))";
  p.expected_order = 24;
  p.ade_label = "E6";
  return p;
}

Preset e7() {
  Preset p = binary_tetrahedral_base(8);
  p.name = "E7";
  p.description = "binary octahedral group in SL_2(Q(zeta_8))";
  p.generators.push_back(CycMatrix::diagonal({CycNum::zeta(8, 1), CycNum::zeta(8, 7)}));
  p.expected_order = 48;
  p.ade_label = "E7";
  return p;
}

Preset e8() {
  const unsigned long n = 20;
  const CycNum z5 = CycNum::zeta(n, 4);
  const CycNum phi_inv = z5 + CycNum::zeta(n, 16);  // zeta_5 + zeta_5^4 = 2 cos(2 pi / 5)
  const CycNum phi = phi_inv + q(1);
  const CycNum half = q(1, 2);
  Preset p;
  p.name = "E8";
  p.description = "binary icosahedral group in SL_2(Q(zeta_20))";
  p.conductor = n;
  p.generators = {
      quaternion(half, half, half, half, n),
      quaternion(phi * half, phi_inv * half, half, q(0), n),
  };
  p.expected_order = 120;
  p.ade_label = "E8";
  return p;
}

}  // namespace

GroupPtr Preset::group(std::size_t max_order) const {
  GroupPtr g = close_group(generators, max_order);
  if (expected_order != 0 && g->order() != expected_order)
    raise(ErrorCode::AlgorithmFailure, "preset " + name + " has order " + std::to_string(g->order()) +
                                           ", expected " + std::to_string(expected_order));
  return g;
}

LocalModel Preset::model(std::size_t max_order) const {
  if (cyclic) {
    LocalModel m = LocalModel::cyclic(cyclic->first, cyclic->second);
    m.label = name;
    return m;
  }
  return LocalModel::matrix(group(max_order), name);
}

Preset cyclic_preset(unsigned long m, const std::vector<unsigned long>& weights) {
  const LocalModel model = LocalModel::cyclic(m, weights);  // validates
  std::vector<CycNum> diag;
  for (auto a : weights) diag.push_back(CycNum::zeta(m, static_cast<long>(a % m)));
  Preset p;
  p.name = model.describe();
  p.description = "cyclic group of order " + std::to_string(m) + " acting with weights";
  p.conductor = m;
  p.generators = {CycMatrix::diagonal(diag)};
  p.expected_order = m;
  p.cyclic = std::make_pair(m, weights);
  return p;
}

Preset binary_dihedral_preset(unsigned long k) {
  if (k < 2) raise(ErrorCode::InvalidArgument, "binary dihedral groups need k >= 2");
  const unsigned long n = 2 * k;
  Preset p;
  p.name = "BD" + std::to_string(k);
  p.description = "binary dihedral group of order " + std::to_string(4 * k);
  p.conductor = n;
  p.generators = {
      CycMatrix::diagonal({CycNum::zeta(n, 1), CycNum::zeta(n, static_cast<long>(n) - 1)}),
      CycMatrix(2, {q(0), q(1), q(-1), q(0)}),
  };
  p.expected_order = 4 * k;
  return p;
}

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = [] {
    std::vector<Preset> out;
    for (unsigned long n = 1; n <= 8; ++n) out.push_back(find_preset("A" + std::to_string(n)));
    for (unsigned long n = 4; n <= 9; ++n) out.push_back(find_preset("D" + std::to_string(n)));
    out.push_back(e6());
    out.push_back(e7());
    out.push_back(e8());
    return out;
  }();
  return catalog;
}

Preset find_preset(std::string_view name) {
  std::string key;
  for (char ch : name)
    if (ch != '_') key += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (key == "E6") return e6();
  if (key == "E7") return e7();
  if (key == "E8") return e8();
  if (key.size() >= 2 && (key[0] == 'A' || key[0] == 'D') && key.size() <= 7) {
    bool digits = true;
    for (std::size_t i = 1; i < key.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(key[i]))) digits = false;
    if (digits) {
      const unsigned long n = std::stoul(key.substr(1));
      if (key[0] == 'A' && n >= 1) {
        Preset p = cyclic_named("A" + std::to_string(n), n + 1, {1, n});
        p.description = "cyclic group of order " + std::to_string(n + 1) + " in SL_2";
        p.ade_label = p.name;
        return p;
      }
      if (key[0] == 'D' && n >= 4) {
        Preset p = binary_dihedral_preset(n - 2);
        p.name = "D" + std::to_string(n);
        p.ade_label = p.name;
        return p;
      }
    }
  }
  raise(ErrorCode::InvalidLabel, "unknown preset '" + std::string(name) + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace singk
