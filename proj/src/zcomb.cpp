#include "zerok/zcomb.hpp"

#include <sstream>

#include "zerok/errors.hpp"

namespace zerok {

ZComb::ZComb(const Semilattice* lat) : lat_(lat) {
  if (lat_ == nullptr) throw input_error("combination without a carrier semilattice");
}

ZComb ZComb::basis(const Semilattice* lat, const Elem& e, const Int& c) {
  ZComb x(lat);
  x.add_term(e, c);
  return x;
}

Int ZComb::coefficient(const Elem& e) const {
  auto it = coef_.find(e);
  return it == coef_.end() ? Int(0) : it->second;
}

void ZComb::add_term(const Elem& e, const Int& c) {
  if (zerok::is_zero(e))
    throw input_error("zero element cannot carry a coefficient");
  if (!lat_->contains(e))
    throw structure_error("element '" + e + "' does not belong to semilattice '" +
                          lat_->name() + "'");
  if (c == 0) return;
  auto [it, inserted] = coef_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

namespace {
void require_same_carrier(const ZComb& a, const ZComb& b) {
  if (a.lattice() != b.lattice())
    throw structure_error("combinations over different semilattices ('" +
                          a.lattice()->name() + "' vs '" + b.lattice()->name() +
                          "') cannot be combined");
}
}  // namespace

ZComb& ZComb::operator+=(const ZComb& other) {
  require_same_carrier(*this, other);
  for (const auto& [e, c] : other.coef_) add_term(e, c);
  return *this;
}

ZComb& ZComb::operator-=(const ZComb& other) {
  require_same_carrier(*this, other);
  for (const auto& [e, c] : other.coef_) add_term(e, -c);
  return *this;
}

ZComb& ZComb::operator*=(const Int& c) {
  if (c == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& [e, v] : coef_) v *= c;
  return *this;
}

bool ZComb::operator==(const ZComb& other) const {
  require_same_carrier(*this, other);
  return coef_ == other.coef_;
}

std::string ZComb::to_string() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coef_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = abs_int(c);
    if (a != 1) os << a.str() << "*";
    os << e;
  }
  return os.str();
}

ZComb product(const ZComb& x, const ZComb& y) {
  if (x.lattice() != y.lattice())
    throw structure_error("product of combinations over different semilattices");
  ZComb out(x.lattice());
  for (const auto& [e, c] : x.terms()) {
    for (const auto& [f, d] : y.terms()) {
      Elem p = x.lattice()->product(e, f);
      if (!is_zero(p)) out.add_term(p, c * d);
    }
  }
  return out;
}

namespace {
// Depth-first enumeration of nonempty subsets of R with running products;
// a zero partial product prunes the whole branch (its supersets multiply to
// zero as well).
void join_rec(const Semilattice* lat, const std::vector<Elem>& R,
              std::size_t start, const Elem& prod, std::size_t size,
              ZComb& out) {
  for (std::size_t i = start; i < R.size(); ++i) {
    Elem p = size == 0 ? R[i] : lat->product(prod, R[i]);
    if (is_zero(p)) continue;
    out.add_term(p, (size + 1) % 2 == 1 ? 1 : -1);
    join_rec(lat, R, i + 1, p, size + 1, out);
  }
}
}  // namespace

ZComb join(const Semilattice* lat, const std::vector<Elem>& R) {
  ZComb out(lat);
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (is_zero(R[i]) || !lat->contains(R[i]))
      throw input_error("join over a set containing zero or a non-member");
    for (std::size_t j = i + 1; j < R.size(); ++j)
      if (R[i] == R[j]) throw input_error("join over a set with repeated elements");
  }
  join_rec(lat, R, 0, {}, 0, out);
  return out;
}

std::vector<Elem> support(const ZComb& x) {
  std::vector<Elem> out;
  out.reserve(x.terms().size());
  for (const auto& [e, c] : x.terms()) out.push_back(e);
  return out;
}

bool is_finite_cover(const Semilattice* lat, const std::vector<Elem>& R,
                     const Elem& e, const std::vector<Elem>& universe) {
  if (is_zero(e) || !lat->contains(e))
    throw input_error("cover check for zero or a non-member");
  if (R.empty()) return false;
  for (const auto& r : R) {
    if (is_zero(r) || !lat->contains(r))
      throw input_error("cover candidate contains zero or a non-member");
    if (!lat->leq(r, e)) return false;
  }
  for (const auto& f : universe) {
    if (is_zero(f) || !lat->leq(f, e)) continue;
    bool met = false;
    for (const auto& r : R) {
      if (!is_zero(lat->product(f, r))) {
        met = true;
        break;
      }
    }
    if (!met) return false;
  }
  return true;
}

}  // namespace zerok
