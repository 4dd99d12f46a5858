#include "zerok/homology.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "zerok/errors.hpp"

namespace zerok {

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d.at(i, i) != 0) ++r;
  return r;
}

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

namespace {

// Position of an entry of smallest nonzero absolute value in the trailing
// submatrix starting at (t, t); nullopt when that block is zero.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& m,
                                                             std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int& x = m.at(i, j);
      if (x == 0) continue;
      Int a = abs_int(x);
      if (!best || a < best_abs) {
        best = {{i, j}};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// Quotient truncated toward zero, so |a - q b| < |b|.
Int trunc_div(const Int& a, const Int& b) { return a / b; }

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  SnfResult s;
  s.d = a;
  s.u = IntMatrix::identity(r);
  s.v = IntMatrix::identity(c);
  s.vinv = IntMatrix::identity(c);
  IntMatrix& d = s.d;

  // Column operation wrappers keeping v and its inverse in lockstep:
  // v <- v * C  implies  vinv <- C^{-1} * vinv.
  auto col_swap = [&](std::size_t x, std::size_t y) {
    d.swap_cols(x, y);
    s.v.swap_cols(x, y);
    s.vinv.swap_rows(x, y);
  };
  auto col_add = [&](std::size_t x, std::size_t y, const Int& q) {
    d.add_col(x, y, q);       // col_x += q col_y
    s.v.add_col(x, y, q);
    s.vinv.add_row(y, x, -q);  // row_y -= q row_x
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    d.swap_rows(x, y);
    s.u.swap_rows(x, y);
  };
  auto row_add = [&](std::size_t x, std::size_t y, const Int& q) {
    d.add_row(x, y, q);
    s.u.add_row(x, y, q);
  };
  auto row_negate = [&](std::size_t x) {
    d.scale_row(x, -1);
    s.u.scale_row(x, -1);
  };

  std::size_t limit = std::min(r, c);
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = min_pivot(d, t);
    if (!pivot) break;
    row_swap(t, pivot->first);
    col_swap(t, pivot->second);

    for (;;) {
      // Clear the pivot column.  Remainders become new, smaller pivots.
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = trunc_div(d.at(i, t), d.at(t, t));
        if (q != 0) row_add(i, t, -q);
        if (d.at(i, t) != 0) {
          row_swap(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear the pivot row.
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = trunc_div(d.at(t, j), d.at(t, t));
        if (q != 0) col_add(j, t, -q);
        if (d.at(t, j) != 0) {
          col_swap(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot divides everything below-right, or we fold the offending row
      // in and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d.at(t, t) < 0) row_negate(t);
  }
  return s;
}

// ---------------------------------------------------------------------------

AbGroup make_ab_group(std::size_t rank, std::vector<Int> orders) {
  AbGroup g;
  g.rank = rank;
  std::vector<Int> t;
  for (auto& x : orders) {
    if (x == 0) {
      ++g.rank;  // a cyclic factor of order zero is a free factor
      continue;
    }
    Int a = abs_int(x);
    if (a > 1) t.push_back(a);
  }
  // Renormalize to a divisibility chain: replace pairs by (gcd, lcm) until
  // each entry divides the next.  The product is invariant.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i + 1] % t[i] != 0) {
        Int gg = gcd_int(t[i], t[i + 1]);
        Int ll = t[i] / gg * t[i + 1];
        t[i] = gg;
        t[i + 1] = ll;
        changed = true;
      }
    }
  }
  std::erase_if(t, [](const Int& x) { return x == 1; });
  g.torsion = std::move(t);
  return g;
}

std::string AbGroup::to_text() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " (+) ";
    first = false;
  };
  if (rank > 0) {
    sep();
    os << "Z";
    if (rank > 1) os << "^" << rank;
  }
  for (const auto& d : torsion) {
    sep();
    os << "Z/" << d.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void ChainComplex::validate() const {
  if (ranks.empty()) throw input_error("complex must have at least degree 0");
  if (boundaries.size() + 1 != ranks.size())
    throw input_error("complex needs exactly one boundary per positive degree");
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    if (boundaries[k].rows() != ranks[k] || boundaries[k].cols() != ranks[k + 1])
      throw input_error("boundary " + std::to_string(k + 1) + " has shape " +
                        std::to_string(boundaries[k].rows()) + "x" +
                        std::to_string(boundaries[k].cols()) + ", expected " +
                        std::to_string(ranks[k]) + "x" +
                        std::to_string(ranks[k + 1]));
  }
  if (!labels.empty()) {
    if (labels.size() != ranks.size())
      throw input_error("labels must cover every degree when present");
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k].size() != ranks[k])
        throw input_error("degree " + std::to_string(k) + " has " +
                          std::to_string(labels[k].size()) + " labels for rank " +
                          std::to_string(ranks[k]));
  }
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k)
    if (!(boundaries[k] * boundaries[k + 1]).is_zero())
      throw input_error("d" + std::to_string(k + 1) + " ∘ d" +
                        std::to_string(k + 2) + " != 0");
}

AbGroup homology(const ChainComplex& c, std::size_t k) {
  if (k >= c.ranks.size())
    throw input_error("homology degree " + std::to_string(k) +
                      " exceeds complex length");
  const std::size_t r = c.ranks[k];
  IntMatrix out_bd = k >= 1 ? c.boundaries[k - 1] : IntMatrix(0, r);
  IntMatrix in_bd =
      k < c.boundaries.size() ? c.boundaries[k] : IntMatrix(r, 0);
  if (r == 0) return {};

  // Kernel of the outgoing boundary: with U A V = D, a column x = V y lies
  // in ker A iff the first rank(A) entries of y vanish, so the trailing
  // columns of V are a lattice basis of the kernel.
  SnfResult sa = smith_normal_form(out_bd);
  const std::size_t rank_a = sa.rank();
  const std::size_t kernel_dim = r - rank_a;

  // Incoming boundary in kernel coordinates: y = V^{-1} B must be supported
  // on the kernel rows; anything else means the input was not a complex.
  IntMatrix y = sa.vinv * in_bd;
  for (std::size_t i = 0; i < rank_a; ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      if (y.at(i, j) != 0)
        throw structure_error("incoming boundary does not map into the kernel "
                              "(d∘d != 0 in degree " + std::to_string(k) + ")");
  IntMatrix rel = y.row_slice(rank_a, r);

  SnfResult sk = smith_normal_form(rel);
  return make_ab_group(kernel_dim - sk.rank(), sk.diagonal());
}

std::vector<AbGroup> homology_all(const ChainComplex& c) {
  c.validate();
  std::vector<AbGroup> out;
  for (std::size_t k = 0; k < c.ranks.size(); ++k) out.push_back(homology(c, k));
  return out;
}

// ---------------------------------------------------------------------------

namespace {
// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}
}  // namespace

ChainComplex koszul_complex(const std::vector<IntMatrix>& mats) {
  if (mats.empty()) throw input_error("koszul complex needs at least one matrix");
  const std::size_t n = mats.size();
  const std::size_t m = mats[0].rows();
  for (const auto& mat : mats)
    if (mat.rows() != m || mat.cols() != m)
      throw input_error("koszul complex needs square matrices of equal size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(mats[i] * mats[j] == mats[j] * mats[i]))
        throw input_error("koszul complex needs pairwise commuting matrices");

  std::vector<IntMatrix> nmat;  // N_i = I - M_i
  for (const auto& mat : mats) nmat.push_back(IntMatrix::identity(m) - mat);

  ChainComplex c;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    auto subs = subsets(n, k);
    for (std::size_t b = 0; b < subs.size(); ++b) index[k][subs[b]] = b;
    c.ranks.push_back(subs.size() * m);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix d(c.ranks[k - 1], c.ranks[k]);
    for (const auto& [S, bs] : index[k]) {
      for (std::size_t p = 0; p < S.size(); ++p) {
        std::vector<std::size_t> T = S;
        T.erase(T.begin() + static_cast<std::ptrdiff_t>(p));
        std::size_t bt = index[k - 1].at(T);
        int sign = p % 2 == 0 ? 1 : -1;  // (-1)^{pos+1}, pos counted from 1
        const IntMatrix& N = nmat[S[p]];
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            d.at(bt * m + i, bs * m + j) += sign * N.at(i, j);
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------

IntMatrix boundary_from_expansions(
    const std::vector<LabelledExpansion>& basis,
    const std::vector<LabelledExpansion>& generators,
    const std::function<std::string(const std::string&)>& key_to_rep) {
  auto translate = [&](const Expansion& x) {
    Expansion out;
    for (const auto& [key, c] : x) {
      std::string r = key_to_rep(key);
      if (r.empty()) continue;  // the generator behind this key vanished
      auto [it, inserted] = out.try_emplace(r, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
    return out;
  };

  std::vector<Expansion> tbasis(basis.size());
  std::vector<Expansion> tgens(generators.size());
  std::map<std::string, std::size_t> key_index;
  auto index_keys = [&](const Expansion& x) {
    for (const auto& [key, c] : x) key_index.try_emplace(key, key_index.size());
  };
  for (std::size_t b = 0; b < basis.size(); ++b) {
    tbasis[b] = translate(basis[b].expansion);
    index_keys(tbasis[b]);
  }
  for (std::size_t g = 0; g < generators.size(); ++g) {
    tgens[g] = translate(generators[g].expansion);
    index_keys(tgens[g]);
  }

  const std::size_t nkeys = key_index.size();
  IntMatrix m(nkeys, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (const auto& [key, c] : tbasis[b]) m.at(key_index.at(key), b) = c;

  // Solve m * x = rhs exactly for every generator column via the Smith form
  // of m.  The basis must determine coordinates uniquely (full column rank).
  SnfResult s = smith_normal_form(m);
  if (s.rank() != basis.size())
    throw structure_error("basis expansions are linearly dependent; "
                          "coordinates are not unique");

  IntMatrix out(basis.size(), generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    std::vector<Int> rhs(nkeys);
    for (const auto& [key, c] : tgens[g]) rhs[key_index.at(key)] = c;
    // y = U * rhs
    std::vector<Int> y(nkeys);
    for (std::size_t i = 0; i < nkeys; ++i)
      for (std::size_t j = 0; j < nkeys; ++j)
        if (s.u.at(i, j) != 0 && rhs[j] != 0) y[i] += s.u.at(i, j) * rhs[j];
    std::vector<Int> z(basis.size());
    for (std::size_t i = 0; i < nkeys; ++i) {
      if (i < basis.size() && s.d.at(i, i) != 0) {
        if (y[i] % s.d.at(i, i) != 0)
          throw structure_error("expansion of generator '" +
                                generators[g].label +
                                "' is not an integer combination of the basis");
        z[i] = y[i] / s.d.at(i, i);
      } else if (y[i] != 0) {
        throw structure_error("expansion of generator '" + generators[g].label +
                              "' lies outside the span of the basis");
      }
    }
    // x = V * z
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (s.v.at(i, j) != 0 && z[j] != 0) acc += s.v.at(i, j) * z[j];
      out.at(i, g) = acc;
    }
  }
  return out;
}

}  // namespace zerok
