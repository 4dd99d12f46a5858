#include "zerok/group.hpp"

#include <algorithm>
#include <sstream>

#include "zerok/errors.hpp"

namespace zerok {

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

std::string Group::mul(const std::string& a, const std::string& b) const {
  Word w = word(a);
  Word wb = word(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return elem(w);
}

std::string Group::inv(const std::string& a) const {
  return elem(inverse_word(word(a)));
}

namespace {

void validate_generator_names(const std::vector<std::string>& gens) {
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (g.empty()) throw input_error("generator names must be nonempty");
    if (g.find('.') != std::string::npos || g.find('\'') != std::string::npos)
      throw input_error("generator name '" + g + "' contains a reserved character");
    if (!seen.insert(g).second)
      throw input_error("duplicate generator name '" + g + "'");
  }
}

std::string serialize_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << '.';
    os << w[i].gen;
    if (w[i].sign < 0) os << '\'';
  }
  return os.str();
}

Word parse_word(const std::string& g, const std::set<std::string>& known) {
  Word out;
  if (g.empty()) return out;
  std::size_t pos = 0;
  while (pos <= g.size()) {
    std::size_t dot = g.find('.', pos);
    std::string token = g.substr(pos, dot == std::string::npos ? dot : dot - pos);
    Letter l{token, 1};
    if (!token.empty() && token.back() == '\'') {
      l.gen = token.substr(0, token.size() - 1);
      l.sign = -1;
    }
    if (!known.count(l.gen))
      throw input_error("unknown generator in group element '" + g + "'");
    out.push_back(std::move(l));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return out;
}

// Cancel adjacent inverse pairs.
Word free_reduce(Word w) {
  Word out;
  for (auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

// --- FreeGroup ---------------------------------------------------------------

FreeGroup::FreeGroup(std::vector<std::string> gens) : gens_(std::move(gens)) {
  validate_generator_names(gens_);
  gen_set_.insert(gens_.begin(), gens_.end());
}

std::string FreeGroup::elem(const Word& w) const {
  for (const auto& l : w)
    if (!gen_set_.count(l.gen))
      throw input_error("unknown generator '" + l.gen + "'");
  return serialize_word(free_reduce(w));
}

Word FreeGroup::word(const std::string& g) const {
  return parse_word(g, gen_set_);
}

// --- RaagGroup ---------------------------------------------------------------

RaagGroup::RaagGroup(std::vector<std::string> gens,
                     std::set<std::pair<std::string, std::string>> commuting)
    : gens_(std::move(gens)) {
  validate_generator_names(gens_);
  gen_set_.insert(gens_.begin(), gens_.end());
  for (const auto& [a, b] : commuting) {
    if (!gen_set_.count(a) || !gen_set_.count(b) || a == b)
      throw input_error("commutation relation on unknown or equal generators");
    commuting_.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
}

bool RaagGroup::commute(const std::string& a, const std::string& b) const {
  if (a == b) return false;
  return commuting_.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) != 0;
}

Word RaagGroup::reduce(Word w) const {
  // Delete pairs w[i], w[j] that are mutually inverse with everything in
  // between commuting with them (shuffle cancellation); iterating this
  // reaches a geodesic word.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].gen == w[i].gen) {
          if (w[j].sign == -w[i].sign) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
          }
          break;  // same generator with same sign blocks the shuffle
        }
        if (!commute(w[i].gen, w[j].gen)) break;
      }
    }
  }
  return w;
}

std::string RaagGroup::elem(const Word& w) const {
  for (const auto& l : w)
    if (!gen_set_.count(l.gen))
      throw input_error("unknown generator '" + l.gen + "'");
  Word r = reduce(w);
  // Greedy lexicographic normal form: repeatedly emit the least currently
  // available letter (one whose predecessors all commute with it).
  Word out;
  std::vector<Letter> rest(r.begin(), r.end());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    std::string best_token;
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool avail = true;
      for (std::size_t q = 0; q < p && avail; ++q)
        avail = commute(rest[q].gen, rest[p].gen);
      if (!avail) continue;
      std::string token = rest[p].gen + (rest[p].sign < 0 ? "'" : "");
      if (best == rest.size() || token < best_token) {
        best = p;
        best_token = token;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return serialize_word(out);
}

Word RaagGroup::word(const std::string& g) const {
  return parse_word(g, gen_set_);
}

// --- AffineGroup ---------------------------------------------------------------

AffineGroup::AffineGroup(std::vector<Int> primes) : primes_(std::move(primes)) {
  std::set<Int> seen;
  for (const auto& p : primes_) {
    if (p < 2) throw input_error("affine group scalings must be at least 2");
    if (!seen.insert(p).second)
      throw input_error("duplicate scaling " + p.str());
  }
}

std::vector<std::string> AffineGroup::generators() const {
  std::vector<std::string> out{"t"};
  for (const auto& p : primes_) out.push_back("u" + p.str());
  return out;
}

std::string AffineGroup::elem_of(const Rat& r, const Rat& q) const {
  if (q <= 0) throw input_error("affine scaling factor must be positive");
  std::ostringstream os;
  os << "af:" << r << ":" << q;
  return os.str();
}

std::pair<Rat, Rat> AffineGroup::affine_of(const std::string& g) const {
  if (g.rfind("af:", 0) != 0)
    throw input_error("malformed affine element '" + g + "'");
  std::size_t colon = g.find(':', 3);
  if (colon == std::string::npos)
    throw input_error("malformed affine element '" + g + "'");
  try {
    Rat r(g.substr(3, colon - 3));
    Rat q(g.substr(colon + 1));
    return {r, q};
  } catch (const std::exception&) {
    throw input_error("malformed affine element '" + g + "'");
  }
}

std::string AffineGroup::elem(const Word& w) const {
  // Compose maps left to right: the word l1 l2 ... lk is the map l1∘l2∘...∘lk.
  Rat r = 0, q = 1;
  auto compose = [&](const Rat& lr, const Rat& lq) {
    // (r,q) ∘ (lr,lq) : x -> q(lq x + lr) + r
    r = q * lr + r;
    q = q * lq;
  };
  for (const auto& l : w) {
    if (l.gen == "t") {
      compose(Rat(l.sign), 1);
      continue;
    }
    Int p = 0;
    if (l.gen.size() > 1 && l.gen[0] == 'u') {
      try {
        p = Int(l.gen.substr(1));
      } catch (const std::exception&) {
        p = 0;
      }
    }
    if (p == 0 || std::find(primes_.begin(), primes_.end(), p) == primes_.end())
      throw input_error("unknown generator '" + l.gen + "'");
    compose(0, l.sign > 0 ? Rat(p) : Rat(Int(1), p));
  }
  return elem_of(r, q);
}

Word AffineGroup::word(const std::string& g) const {
  auto [r, q] = affine_of(g);
  // Factor a positive rational over the configured scalings.
  auto factor = [&](Rat x) {
    std::vector<int> exps(primes_.size(), 0);
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      while (num % primes_[i] == 0) {
        num /= primes_[i];
        ++exps[i];
      }
      while (den % primes_[i] == 0) {
        den /= primes_[i];
        --exps[i];
      }
    }
    if (num != 1 || den != 1)
      throw input_error("affine element '" + g +
                        "' does not factor over the configured scalings");
    return exps;
  };

  // g = D^{-1} t^m D U where D clears the denominator of r and U realizes q.
  Int m = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  std::vector<int> dexp = factor(Rat(d));
  std::vector<int> qexp = factor(q);

  Word w;
  auto push_scalings = [&](const std::vector<int>& exps, int dir) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      std::string name = "u" + primes_[i].str();
      int e = exps[i] * dir;
      for (int k = 0; k < std::abs(e); ++k) w.push_back({name, e > 0 ? 1 : -1});
    }
  };
  push_scalings(dexp, -1);
  Int steps = abs_int(m);
  for (Int k = 0; k < steps; ++k) w.push_back({"t", m > 0 ? 1 : -1});
  push_scalings(dexp, 1);
  push_scalings(qexp, 1);
  return free_reduce(w);
}

}  // namespace zerok
