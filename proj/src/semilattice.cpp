#include "zerok/semilattice.hpp"

#include <algorithm>

#include "zerok/errors.hpp"

namespace zerok {

bool Semilattice::leq(const Elem& a, const Elem& b) const {
  if (is_zero(a)) return true;
  if (is_zero(b)) return false;
  return product(a, b) == a;
}

bool Semilattice::strictly_below(const Elem& a, const Elem& b) const {
  return a != b && leq(a, b);
}

TableSemilattice::TableSemilattice(std::string name, std::vector<Elem> elements,
                                   std::map<std::pair<Elem, Elem>, Elem> table)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      table_(std::move(table)) {
  for (const auto& e : elements_) {
    if (is_zero(e))
      throw input_error("table semilattice: empty string is reserved for zero");
    element_set_.insert(e);
  }
  for (const auto& [key, value] : table_) {
    if (!element_set_.count(key.first) || !element_set_.count(key.second) ||
        (!is_zero(value) && !element_set_.count(value)))
      throw input_error("table semilattice: product table mentions unknown element");
  }
  // idempotents: e * e = e is implied, fill if missing
  for (const auto& e : elements_) {
    auto it = table_.find({e, e});
    if (it == table_.end())
      table_[{e, e}] = e;
    else if (it->second != e)
      throw input_error("table semilattice: diagonal of the table must be the identity map");
  }
}

Elem TableSemilattice::product(const Elem& a, const Elem& b) const {
  if (!contains(a) || !contains(b))
    throw input_error("table semilattice '" + name_ + "': product of non-member");
  auto it = table_.find(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
  if (it == table_.end()) return {};
  return it->second;
}

bool TableSemilattice::contains(const Elem& a) const {
  return element_set_.count(a) != 0;
}

}  // namespace zerok
