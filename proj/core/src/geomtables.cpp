#include "singk/geomtables.hpp"

#include <cctype>
#include <numeric>

#include "singk/error.hpp"

namespace singk {

namespace {

AbelianGroupStructure z_power(long r) { return AbelianGroupStructure::free(static_cast<std::size_t>(r)); }

}  // namespace

// ---------------------------------------------------------------------------
// Filtered groups

FilteredAbelianGroup FilteredAbelianGroup::from_components(std::vector<FilterComponent> components) {
  std::vector<AbelianGroupStructure> parts;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].degree < 0) raise(ErrorCode::InvalidArgument, "negative filtration degree");
    if (i > 0 && components[i].degree <= components[i - 1].degree)
      raise(ErrorCode::InvalidArgument, "filtration degrees must increase strictly");
    parts.push_back(components[i].part);
  }
  FilteredAbelianGroup fg;
  fg.group = direct_sum(parts);
  fg.components = std::move(components);
  return fg;
}

std::string FilteredAbelianGroup::to_string() const {
  if (components.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ", ";
    s += "gr^" + std::to_string(components[i].degree) + " = " + components[i].part.to_string();
  }
  return s;
}

FilteredAbelianGroup knorrer_shift(const FilteredAbelianGroup& fg) {
  FilteredAbelianGroup out = fg;
  for (auto& c : out.components) ++c.degree;
  return out;
}

FilteredAbelianGroup knorrer_base(KnorrerBase base) {
  const AbelianGroupStructure part = base == KnorrerBase::DoublePoint
                                         ? AbelianGroupStructure::from_cyclic_orders({BigInt(2)})
                                         : AbelianGroupStructure::free(1);
  return FilteredAbelianGroup::from_components({{0, part}});
}

FilteredAbelianGroup knorrer_chain(KnorrerBase base, long k) {
  if (k < 0) raise(ErrorCode::InvalidArgument, "chain length must be nonnegative");
  FilteredAbelianGroup fg = knorrer_base(base);
  for (long i = 0; i < k; ++i) fg = knorrer_shift(fg);
  return fg;
}

FilteredAbelianGroup odp_invariants(long n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "dimension must be at least 1");
  // Q_n = Q_0 + xy (even n) or Q_1 + xy (odd n), repeated
  if (n % 2 == 0) return knorrer_chain(KnorrerBase::DoublePoint, n / 2);
  return knorrer_chain(KnorrerBase::NodeCurve, (n - 1) / 2);
}

// ---------------------------------------------------------------------------
// Sylvester

namespace {

void check_pair(long a, long b) {
  if (a < 1 || b < 1) raise(ErrorCode::InvalidArgument, "Sylvester count needs positive integers");
  if (std::gcd(a, b) != 1)
    raise(ErrorCode::NotCoprime, std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
}

}  // namespace

long sylvester_closed_form(long a, long b) {
  check_pair(a, b);
  return (a - 1) * (b - 1) / 2;
}

long sylvester_enumerate(long a, long b) {
  check_pair(a, b);
  const long bound = a * b - a - b;
  if (bound < 1) return 0;
  std::vector<bool> representable(static_cast<std::size_t>(bound) + 1, false);
  representable[0] = true;
  for (long v = 1; v <= bound; ++v)
    representable[v] = (v >= a && representable[v - a]) || (v >= b && representable[v - b]);
  long gaps = 0;
  for (long v = 1; v <= bound; ++v)
    if (!representable[v]) ++gaps;
  return gaps;
}

long sylvester_count(long a, long b) {
  const long closed = sylvester_closed_form(a, b);
  const long counted = sylvester_enumerate(a, b);
  if (closed != counted)
    raise(ErrorCode::AlgorithmFailure, "Sylvester closed form " + std::to_string(closed) +
                                           " disagrees with enumeration " + std::to_string(counted));
  return closed;
}

// ---------------------------------------------------------------------------
// Symbolic group expressions

SymbolicGroupExpr SymbolicGroupExpr::units() {
  SymbolicGroupExpr e;
  e.kind = Kind::UnitsOfField;
  return e;
}

SymbolicGroupExpr SymbolicGroupExpr::integers() {
  SymbolicGroupExpr e;
  e.kind = Kind::Integers;
  return e;
}

SymbolicGroupExpr SymbolicGroupExpr::vector_space(AffineDim d) {
  SymbolicGroupExpr e;
  e.kind = Kind::VectorSpace;
  e.dim = std::move(d);
  return e;
}

SymbolicGroupExpr SymbolicGroupExpr::product(std::vector<SymbolicGroupExpr> factors, long multiplicity) {
  SymbolicGroupExpr e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  e.multiplicity = multiplicity;
  return e;
}

SymbolicGroupExpr SymbolicGroupExpr::extension(SymbolicGroupExpr sub, SymbolicGroupExpr quotient) {
  SymbolicGroupExpr e;
  e.kind = Kind::Extension;
  e.children = {std::move(sub), std::move(quotient)};
  return e;
}

bool SymbolicGroupExpr::is_zero() const {
  switch (kind) {
    case Kind::UnitsOfField:
    case Kind::Integers: return false;
    case Kind::VectorSpace: return dim.is_constant() && dim.constant == 0;
    case Kind::Product:
      if (multiplicity == 0) return true;
      for (const auto& c : children)
        if (!c.is_zero()) return false;
      return true;
    case Kind::Extension: return children[0].is_zero() && children[1].is_zero();
  }
  return false;
}

SymbolicGroupExpr SymbolicGroupExpr::normalized() const {
  switch (kind) {
    case Kind::UnitsOfField:
    case Kind::Integers: return *this;
    case Kind::VectorSpace: return is_zero() ? vector_space(AffineDim::fixed(0)) : *this;
    case Kind::Product: {
      if (multiplicity == 0) return vector_space(AffineDim::fixed(0));
      std::vector<SymbolicGroupExpr> kept;
      for (const auto& c : children) {
        SymbolicGroupExpr n = c.normalized();
        if (n.is_zero()) continue;
        if (n.kind == Kind::Product && n.multiplicity == 1)
          kept.insert(kept.end(), n.children.begin(), n.children.end());
        else
          kept.push_back(std::move(n));
      }
      if (kept.empty()) return vector_space(AffineDim::fixed(0));
      if (kept.size() == 1 && multiplicity == 1) return kept.front();
      return product(std::move(kept), multiplicity);
    }
    case Kind::Extension: {
      SymbolicGroupExpr sub = children[0].normalized();
      SymbolicGroupExpr quot = children[1].normalized();
      if (sub.is_zero()) return quot;
      if (quot.is_zero()) return sub;
      return extension(std::move(sub), std::move(quot));
    }
  }
  return *this;
}

SymbolicGroupExpr SymbolicGroupExpr::evaluated(long value) const {
  SymbolicGroupExpr e = *this;
  if (e.kind == Kind::VectorSpace && !e.dim.is_constant()) e.dim = AffineDim::fixed(e.dim.evaluate(value));
  for (auto& c : e.children) c = c.evaluated(value);
  return e.normalized();
}

namespace {

std::string render_dim(const AffineDim& d) {
  if (d.is_constant()) {
    if (d.constant == 0) return "0";
    if (d.constant == 1) return "k";
    return "k^" + std::to_string(d.constant);
  }
  std::string inner = d.coeff == 1 ? d.param : std::to_string(d.coeff) + d.param;
  if (d.constant == 0 && d.coeff == 1) return "k^" + inner;
  if (d.constant > 0) inner += "+" + std::to_string(d.constant);
  if (d.constant < 0) inner += "-" + std::to_string(-d.constant);
  return "k^{" + inner + "}";
}

const std::string kOplus = "\xE2\x8A\x95";  // ⊕

}  // namespace

std::string SymbolicGroupExpr::render() const {
  switch (kind) {
    case Kind::UnitsOfField: return "k^*";
    case Kind::Integers: return "Z";
    case Kind::VectorSpace: return render_dim(dim);
    case Kind::Product: {
      if (children.empty()) return "0";
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += " " + kOplus + " ";
        const bool wrap = children[i].kind == Kind::Product && children[i].multiplicity == 1;
        s += wrap ? "(" + children[i].render() + ")" : children[i].render();
      }
      if (multiplicity == 1) return s;
      return "(" + s + ")^" + std::to_string(multiplicity);
    }
    case Kind::Extension: return "[" + children[0].render() + "; " + children[1].render() + "]";
  }
  return "?";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  SymbolicGroupExpr parse_all() {
    SymbolicGroupExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e.normalized();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool eat_oplus() { return eat(kOplus) || eat("+"); }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
      if (v > 1000000000L) fail("integer too large");
    }
    if (pos_ == start) fail("expected an integer");
    return neg ? -v : v;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a parameter name");
    return std::string(s_.substr(start, pos_ - start));
  }

  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  AffineDim affine() {
    AffineDim d;
    if (at_digit()) {
      const long c = integer();
      skip_ws();
      if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        d.coeff = c;
        d.param = identifier();
      } else {
        return AffineDim::fixed(c);
      }
    } else {
      d.coeff = 1;
      d.param = identifier();
    }
    if (eat("+")) d.constant = integer();
    else if (eat("-")) d.constant = -integer();
    return d;
  }

  SymbolicGroupExpr expr() {
    if (eat("[")) {
      SymbolicGroupExpr sub = expr();
      expect(";");
      SymbolicGroupExpr quot = expr();
      expect("]");
      return SymbolicGroupExpr::extension(std::move(sub), std::move(quot));
    }
    std::vector<SymbolicGroupExpr> terms{term()};
    while (eat_oplus()) terms.push_back(term());
    if (terms.size() == 1) return std::move(terms.front());
    return SymbolicGroupExpr::product(std::move(terms));
  }

  SymbolicGroupExpr term() {
    if (eat("(")) {
      SymbolicGroupExpr inner = expr();
      expect(")");
      long mult = 1;
      if (eat("^")) mult = integer();
      if (mult < 0) fail("negative multiplicity");
      if (inner.kind == SymbolicGroupExpr::Kind::Product && inner.multiplicity == 1)
        return SymbolicGroupExpr::product(std::move(inner.children), mult);
      return SymbolicGroupExpr::product({std::move(inner)}, mult);
    }
    if (eat("[")) {
      --pos_;
      return expr();
    }
    if (eat("Z")) return SymbolicGroupExpr::integers();
    if (eat("0")) return SymbolicGroupExpr::vector_space(AffineDim::fixed(0));
    if (eat("k")) {
      if (!eat("^")) return SymbolicGroupExpr::vector_space(AffineDim::fixed(1));
      if (eat("*") || eat("{*}")) return SymbolicGroupExpr::units();
      if (eat("{")) {
        AffineDim d = affine();
        expect("}");
        return SymbolicGroupExpr::vector_space(std::move(d));
      }
      if (at_digit()) return SymbolicGroupExpr::vector_space(AffineDim::fixed(integer()));
      AffineDim d;
      d.coeff = 1;
      d.param = identifier();
      return SymbolicGroupExpr::vector_space(std::move(d));
    }
    fail("unexpected input");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicGroupExpr SymbolicGroupExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// ADE atlases

namespace {

// Family-level data for the curve y^2 + ... rows. Component counts and Pic
// dimensions are table data; the cusp exponents feed the Sylvester check.
struct CurveFamily {
  char letter;
  int parity;  // index parity for A and D; the E index otherwise
  std::string family;
  std::string condition;
  std::string equation;
  std::string threefold_equation;
  long components;
  AffineDim pic;
  long min_param;
};

const std::vector<CurveFamily>& curve_families() {
  static const std::vector<CurveFamily> families = {
      {'A', 0, "A_{2l}", "l >= 1", "y^2+z^{2l+1}", "xy+z^2+w^{2l+1}", 1, {0, 1, "l"}, 1},
      {'A', 1, "A_{2l-1}", "l >= 1", "y^2+z^{2l}", "xy+z^2+w^{2l}", 2, AffineDim::fixed(0), 1},
      {'D', 0, "D_{2l}", "l >= 2", "y^2z+z^{2l-1}", "xy+z^2w+w^{2l-1}", 3, AffineDim::fixed(0), 2},
      {'D', 1, "D_{2l-1}", "l >= 3", "y^2z+z^{2l-2}", "xy+z^2w+w^{2l-2}", 2, {-2, 1, "l"}, 3},
      {'E', 6, "E_6", "", "y^3+z^4", "xy+z^3+w^4", 1, AffineDim::fixed(3), 0},
      {'E', 7, "E_7", "", "y^3+yz^3", "xy+z^3+zw^3", 2, AffineDim::fixed(1), 0},
      {'E', 8, "E_8", "", "y^3+z^5", "xy+z^3+w^5", 1, AffineDim::fixed(4), 0},
  };
  return families;
}

struct ParsedLabel {
  const CurveFamily* family;
  long index;
  std::optional<long> param;
};

ParsedLabel parse_label(std::string_view label) {
  std::string letters;
  std::string digits;
  for (char ch : label) {
    if (ch == '_' || ch == '{' || ch == '}' || ch == ' ') continue;
    if (std::isdigit(static_cast<unsigned char>(ch))) digits += ch;
    else if (digits.empty()) letters += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    else raise(ErrorCode::InvalidLabel, "malformed ADE label '" + std::string(label) + "'");
  }
  if (letters.size() != 1 || digits.empty() || digits.size() > 6)
    raise(ErrorCode::InvalidLabel, "malformed ADE label '" + std::string(label) + "'");
  const char letter = letters[0];
  const long index = std::stol(digits);
  for (const auto& f : curve_families()) {
    if (f.letter != letter) continue;
    if (letter == 'E') {
      if (index == f.parity) return {&f, index, std::nullopt};
      continue;
    }
    if (index % 2 != f.parity) continue;
    // A_{2l}: l = n/2, A_{2l-1}: l = (n+1)/2, likewise for D
    const long l = (index + f.parity) / 2;
    if (l < f.min_param || (letter == 'D' && index < 4)) break;
    return {&f, index, l};
  }
  raise(ErrorCode::InvalidLabel, "no ADE singularity named '" + std::string(label) + "'");
}

std::string instantiate(const std::string& pattern, long l) {
  // replaces {2l+1}, {2l}, {2l-1}, {2l-2} exponents by their values
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '{') {
      out += pattern[i];
      continue;
    }
    const std::size_t close = pattern.find('}', i);
    const std::string inner = pattern.substr(i + 1, close - i - 1);
    long value = 2 * l;
    if (inner.size() > 2) value += (inner[2] == '+' ? 1 : -1) * std::stol(inner.substr(3));
    out += std::to_string(value);
    i = close;
  }
  return out;
}

std::optional<std::pair<long, long>> cusp_exponents(const CurveFamily& f, long l) {
  switch (f.letter) {
    case 'A':
      if (f.parity == 0) return std::make_pair(2L, 2 * l + 1);
      return std::nullopt;
    case 'D':
      // y^2 z + z^{2l-2} = z (y^2 + z^{2l-3})
      if (f.parity == 1) return std::make_pair(2L, 2 * l - 3);
      return std::nullopt;
    default:
      if (f.parity == 6) return std::make_pair(3L, 4L);
      if (f.parity == 7) return std::make_pair(2L, 3L);  // y (y^2 + z^3)
      return std::make_pair(3L, 5L);
  }
}

SymbolicGroupExpr ksg1_shape(long components, const SymbolicGroupExpr& pic) {
  const SymbolicGroupExpr units_z =
      SymbolicGroupExpr::product({SymbolicGroupExpr::units(), SymbolicGroupExpr::integers()}, components - 1);
  return SymbolicGroupExpr::extension(units_z, pic).normalized();
}

}  // namespace

ADECurveRecord ade_curve_invariants(std::string_view label) {
  const ParsedLabel p = parse_label(label);
  const CurveFamily& f = *p.family;
  const long l = p.param.value_or(0);
  ADECurveRecord rec;
  rec.label = std::string(1, f.letter) + "_" + std::to_string(p.index);
  rec.family = f.family;
  rec.parameter = p.param;
  rec.equation = instantiate(f.equation, l);
  rec.components = f.components;
  rec.ksg0 = z_power(f.components - 1);
  rec.pic_dim = f.pic.evaluate(l);
  rec.cusp = cusp_exponents(f, l);
  if (rec.cusp) {
    const long s = sylvester_count(rec.cusp->first, rec.cusp->second);
    if (s != rec.pic_dim)
      raise(ErrorCode::TableMismatch, rec.label + ": Pic dimension " + std::to_string(rec.pic_dim) +
                                          " but the cuspidal component gives " + std::to_string(s));
  } else if (rec.pic_dim != 0) {
    raise(ErrorCode::TableMismatch, rec.label + ": nonzero Pic without a cuspidal component");
  }
  rec.ksg1 = ksg1_shape(rec.components, SymbolicGroupExpr::vector_space(AffineDim::fixed(rec.pic_dim)));
  return rec;
}

AbelianGroupStructure ade_threefold_class_group(std::string_view label) {
  // Cl(X) = gr^1 K^sg_0(X) = gr^0 K^sg_0(C) = Z^{N-1}
  const FilteredAbelianGroup curve =
      FilteredAbelianGroup::from_components({{0, ade_curve_invariants(label).ksg0}});
  const FilteredAbelianGroup threefold = knorrer_shift(curve);
  for (const auto& c : threefold.components)
    if (c.degree == 1) return c.part;
  return AbelianGroupStructure::trivial();
}

const std::vector<ADECurveFamilyRow>& ade_curve_table() {
  static const std::vector<ADECurveFamilyRow> rows = [] {
    std::vector<ADECurveFamilyRow> out;
    for (const auto& f : curve_families()) {
      ADECurveFamilyRow row;
      row.family = f.family;
      row.condition = f.condition;
      row.equation = f.equation;
      row.components = f.components;
      row.ksg0 = z_power(f.components - 1);
      row.pic = SymbolicGroupExpr::vector_space(f.pic).normalized();
      row.ksg1 = ksg1_shape(f.components, row.pic);
      const long idx = f.letter == 'E' ? f.parity : 2 * f.min_param - f.parity;
      row.first_label = std::string(1, f.letter) + "_" + std::to_string(idx);
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

const std::vector<ADEThreefoldFamilyRow>& ade_threefold_table() {
  static const std::vector<ADEThreefoldFamilyRow> rows = [] {
    std::vector<ADEThreefoldFamilyRow> out;
    for (const auto& f : curve_families()) {
      // the threefold table names its family parameter k
      auto rename = [](std::string t) {
        for (auto& ch : t)
          if (ch == 'l') ch = 'k';
        return t;
      };
      ADEThreefoldFamilyRow row;
      row.family = rename(f.family);
      row.condition = rename(f.condition);
      row.equation = rename(f.threefold_equation);
      const long idx = f.letter == 'E' ? f.parity : 2 * f.min_param - f.parity;
      row.first_label = std::string(1, f.letter) + "_" + std::to_string(idx);
      row.cl = ade_threefold_class_group(row.first_label);
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

}  // namespace singk
