#include "singk/repring.hpp"

#include "singk/error.hpp"

namespace singk {

namespace {

void require_same_table(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.table() != b.table()) raise(ErrorCode::TableMismatch, "virtual characters use different tables");
}

}  // namespace

VirtualCharacter::VirtualCharacter(TablePtr table, std::vector<BigInt> coords)
    : table_(std::move(table)), coords_(std::move(coords)) {
  if (!table_ || coords_.size() != table_->size())
    raise(ErrorCode::DimensionMismatch, "coordinate vector does not match the character table");
}

VirtualCharacter VirtualCharacter::basis(TablePtr table, std::size_t i) {
  std::vector<BigInt> coords(table->size());
  coords.at(i) = 1;
  return VirtualCharacter(std::move(table), std::move(coords));
}

VirtualCharacter VirtualCharacter::from_class_function(TablePtr table, const ClassFunction& phi) {
  auto coords = decompose(phi, *table);
  return VirtualCharacter(std::move(table), std::move(coords));
}

ClassFunction VirtualCharacter::realize() const { return singk::realize(coords_, *table_); }

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& other) const {
  require_same_table(*this, other);
  std::vector<BigInt> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return VirtualCharacter(table_, std::move(c));
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& other) const {
  require_same_table(*this, other);
  std::vector<BigInt> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return VirtualCharacter(table_, std::move(c));
}

bool VirtualCharacter::operator==(const VirtualCharacter& other) const {
  return table_ == other.table_ && coords_ == other.coords_;
}

VirtualCharacter rr_multiply(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_same_table(a, b);
  return VirtualCharacter::from_class_function(a.table(), a.realize() * b.realize());
}

VirtualCharacter dual(const VirtualCharacter& a) {
  const auto& t = *a.table();
  std::vector<BigInt> c(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) c[t.dual_index(i)] = a.coords()[i];
  return VirtualCharacter(a.table(), std::move(c));
}

VirtualCharacter koszul_class(const GroupPtr& group, const TablePtr& table, bool use_dual) {
  if (table->group() != group) raise(ErrorCode::GroupMismatch, "table belongs to another group");
  ClassFunction rho = trace_character(group);
  if (use_dual) rho = rho.conj();
  const auto powers = exterior_power_characters(rho, static_cast<long>(group->dimension()));
  ClassFunction r = powers.front();
  for (std::size_t i = 1; i < powers.size(); ++i) {
    if (i % 2 == 1) r -= powers[i];
    else r += powers[i];
  }
  return VirtualCharacter::from_class_function(table, r);
}

IntMatrix multiplication_matrix(const VirtualCharacter& r) {
  const auto& table = r.table();
  const std::size_t c = table->size();
  IntMatrix m(c, c);
  const ClassFunction rv = r.realize();
  for (std::size_t j = 0; j < c; ++j) {
    const auto col = decompose(rv * (*table)[j], *table);
    for (std::size_t i = 0; i < c; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace singk
