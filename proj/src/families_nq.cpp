#include "zerok/families.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zerok/errors.hpp"

namespace zerok {

namespace {

void validate_primes(const std::vector<Int>& primes) {
  if (primes.empty()) throw input_error("at least one prime is required");
  for (const Int& p : primes) {
    if (p < 2) throw input_error("primes must be at least 2");
    for (Int d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw input_error(to_string(p) + " is not prime");
  }
  std::vector<Int> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw input_error("primes must be distinct");
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
  Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b, s2 = s0 - q * s1, t2 = t0 - q * t1;
    a = b;
    b = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

Int positive_mod(Int x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

// The congruence class j mod m, intersected by the Chinese remainder
// theorem.  A modulus is any product of the fixed primes.
struct Residue {
  Int j, m;
};

std::optional<std::pair<Int, Int>> parse_fraction(const std::string& body) {
  auto slash = body.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= body.size())
    return std::nullopt;
  try {
    Int j(body.substr(0, slash));
    Int m(body.substr(slash + 1));
    return std::make_pair(j, m);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool modulus_over_primes(Int m, const std::vector<Int>& primes) {
  if (m < 1) return false;
  for (const Int& p : primes)
    while (m % p == 0) m /= p;
  return m == 1;
}

class ResidueSemilattice final : public Semilattice {
 public:
  explicit ResidueSemilattice(std::vector<Int> primes)
      : primes_(std::move(primes)) {}

  std::string name() const override { return "arithmetic residues"; }

  static Elem serialize(const Residue& r) {
    return "q:" + to_string(r.j) + "/" + to_string(r.m);
  }

  std::optional<Residue> parse(const Elem& e) const {
    if (e.size() < 2 || e.compare(0, 2, "q:") != 0) return std::nullopt;
    auto f = parse_fraction(e.substr(2));
    if (!f) return std::nullopt;
    auto [j, m] = *f;
    if (!modulus_over_primes(m, primes_)) return std::nullopt;
    if (j < 0 || j >= m) return std::nullopt;
    return Residue{j, m};
  }

  bool contains(const Elem& e) const override { return parse(e).has_value(); }

  Elem product(const Elem& a, const Elem& b) const override {
    auto ra = parse(a), rb = parse(b);
    if (!ra || !rb)
      throw input_error("not a residue class: '" + (ra ? b : a) + "'");
    auto [g, s, t] = egcd(ra->m, rb->m);
    (void)t;
    if (positive_mod(ra->j - rb->j, g) != 0) return Elem{};
    Int l = ra->m / g * rb->m;
    // x = j_a + m_a * k with m_a k = j_b - j_a (mod m_b)
    Int k = positive_mod((rb->j - ra->j) / g * s, rb->m / g);
    Int x = positive_mod(ra->j + ra->m * k, l);
    return serialize({x, l});
  }

  const std::vector<Int>& primes() const { return primes_; }

 private:
  std::vector<Int> primes_;
};

// Genuine progressions {j + m N}: the exact model, used for freeness checks
// (the residue model identifies translates, so it has fixed points that the
// progression picture does not).
class ProgressionSemilattice final : public Semilattice {
 public:
  explicit ProgressionSemilattice(std::vector<Int> primes)
      : primes_(std::move(primes)) {}

  std::string name() const override { return "arithmetic progressions"; }

  static Elem serialize(const Residue& r) {
    return "n:" + to_string(r.j) + "/" + to_string(r.m);
  }

  std::optional<Residue> parse(const Elem& e) const {
    if (e.size() < 2 || e.compare(0, 2, "n:") != 0) return std::nullopt;
    auto f = parse_fraction(e.substr(2));
    if (!f) return std::nullopt;
    auto [j, m] = *f;
    if (!modulus_over_primes(m, primes_)) return std::nullopt;
    if (j < 0) return std::nullopt;
    return Residue{j, m};
  }

  bool contains(const Elem& e) const override { return parse(e).has_value(); }

  Elem product(const Elem& a, const Elem& b) const override {
    auto ra = parse(a), rb = parse(b);
    if (!ra || !rb)
      throw input_error("not a progression: '" + (ra ? b : a) + "'");
    auto [g, s, t] = egcd(ra->m, rb->m);
    (void)t;
    if (positive_mod(ra->j - rb->j, g) != 0) return Elem{};
    Int l = ra->m / g * rb->m;
    Int k = positive_mod((rb->j - ra->j) / g * s, rb->m / g);
    Int c = positive_mod(ra->j + ra->m * k, l);
    // least member >= the start of both progressions
    Int lead = std::max(ra->j, rb->j);
    Int x = c >= lead ? c : c + l * ((lead - c + l - 1) / l);
    return serialize({x, l});
  }

 private:
  std::vector<Int> primes_;
};

Int product_of(const std::vector<Int>& primes) {
  Int m = 1;
  for (const Int& p : primes) m *= p;
  return m;
}

Int prime_of_letter(const Letter& l) { return Int(l.gen.substr(1)); }

}  // namespace

FamilySystem nq_system(const NqDesc& desc) {
  validate_primes(desc.primes);
  auto lat = std::make_shared<ResidueSemilattice>(desc.primes);
  auto group = std::make_shared<AffineGroup>(desc.primes);
  Int bound = product_of(desc.primes);

  FamilySystem sys;
  sys.lat = lat;
  sys.group = group;

  sys.action.group = group.get();
  sys.action.lat = lat.get();
  sys.action.step = [lat, bound](const Letter& l, const Elem& e) -> Elem {
    auto r = lat->parse(e);
    if (!r) throw input_error("not a residue class: '" + e + "'");
    if (l.gen == "t")
      return ResidueSemilattice::serialize(
          {positive_mod(r->j + l.sign, r->m), r->m});
    Int p = prime_of_letter(l);
    if (l.sign > 0) {
      if (bound % (p * r->m) != 0) return Elem{};  // outside the truncation
      return ResidueSemilattice::serialize({p * r->j, p * r->m});
    }
    if (r->j % p != 0 || r->m % p != 0) return Elem{};
    return ResidueSemilattice::serialize({r->j / p, r->m / p});
  };
  sys.action.domain = [](const Letter& l) -> Elem {
    if (l.gen == "t" || l.sign > 0) return Elem{};
    return "q:0/" + l.gen.substr(1);
  };

  sys.covers.lat = lat.get();
  std::vector<Int> primes = desc.primes;
  sys.covers.covers = [lat, primes](const Elem& e) {
    auto r = lat->parse(e);
    if (!r) throw input_error("not a residue class: '" + e + "'");
    std::vector<std::vector<Elem>> out;
    for (const Int& p : primes) {
      std::vector<Elem> cover;
      for (Int k = 0; k < p; ++k)
        cover.push_back(
            ResidueSemilattice::serialize({r->j + k * r->m, p * r->m}));
      out.push_back(std::move(cover));
    }
    return out;
  };

  // Universe: all residues with modulus dividing the product of the primes.
  std::vector<Int> moduli{1};
  for (const Int& p : desc.primes) {
    std::size_t count = moduli.size();
    for (std::size_t i = 0; i < count; ++i) moduli.push_back(moduli[i] * p);
  }
  for (const Int& m : moduli)
    for (Int j = 0; j < m; ++j)
      sys.universe.push_back(ResidueSemilattice::serialize({j, m}));
  std::sort(sys.universe.begin(), sys.universe.end());
  sys.notes.push_back("moduli divide " + to_string(bound));
  return sys;
}

FamilySystem nq_progression_system(const NqDesc& desc, std::size_t j_bound,
                                   const Int& modulus_bound) {
  validate_primes(desc.primes);
  auto lat = std::make_shared<ProgressionSemilattice>(desc.primes);
  auto group = std::make_shared<AffineGroup>(desc.primes);
  Int jb = Int(j_bound);

  FamilySystem sys;
  sys.lat = lat;
  sys.group = group;

  sys.action.group = group.get();
  sys.action.lat = lat.get();
  sys.action.step = [lat, jb, modulus_bound](const Letter& l,
                                             const Elem& e) -> Elem {
    auto r = lat->parse(e);
    if (!r) throw input_error("not a progression: '" + e + "'");
    if (l.gen == "t") {
      Int j = r->j + l.sign;
      if (j < 0 || j > jb) return Elem{};
      return ProgressionSemilattice::serialize({j, r->m});
    }
    Int p = prime_of_letter(l);
    if (l.sign > 0) {
      if (modulus_bound % (p * r->m) != 0 || p * r->j > jb) return Elem{};
      return ProgressionSemilattice::serialize({p * r->j, p * r->m});
    }
    if (r->j % p != 0 || r->m % p != 0) return Elem{};
    return ProgressionSemilattice::serialize({r->j / p, r->m / p});
  };
  sys.action.domain = [](const Letter& l) -> Elem {
    if (l.gen == "t") return l.sign > 0 ? Elem{} : Elem{"n:1/1"};
    if (l.sign > 0) return Elem{};
    return "n:0/" + l.gen.substr(1);
  };

  sys.covers.lat = lat.get();
  std::vector<Int> primes = desc.primes;
  sys.covers.covers = [lat, primes](const Elem& e) {
    auto r = lat->parse(e);
    if (!r) throw input_error("not a progression: '" + e + "'");
    std::vector<std::vector<Elem>> out;
    for (const Int& p : primes) {
      std::vector<Elem> cover;
      for (Int k = 0; k < p; ++k)
        cover.push_back(
            ProgressionSemilattice::serialize({r->j + k * r->m, p * r->m}));
      out.push_back(std::move(cover));
    }
    return out;
  };

  std::vector<Int> moduli{1};
  for (const Int& p : desc.primes) {
    std::size_t count = moduli.size();
    for (std::size_t i = 0; i < count; ++i)
      if (modulus_bound % (moduli[i] * p) == 0)
        moduli.push_back(moduli[i] * p);
  }
  for (const Int& m : moduli)
    for (Int j = 0; j <= jb; ++j)
      sys.universe.push_back(ProgressionSemilattice::serialize({j, m}));
  std::sort(sys.universe.begin(), sys.universe.end());
  sys.notes.push_back("progressions with start <= " + to_string(jb) +
                      " and modulus dividing " + to_string(modulus_bound));
  return sys;
}

ChainComplex nq_complex(const NqDesc& desc) {
  validate_primes(desc.primes);
  std::vector<IntMatrix> mats;
  for (const Int& p : desc.primes) {
    IntMatrix m(1, 1);
    m.at(0, 0) = p;
    mats.push_back(std::move(m));
  }
  return koszul_complex(mats);
}

KResult nq_ktheory(const NqDesc& desc, bool run_checks) {
  validate_primes(desc.primes);
  if (run_checks) {
    CheckReport rep = nq_checks(desc, 2);
    if (rep.any_failed())
      throw refusal_error("cover-system conditions failed for the "
                          "progression family:\n" + report_to_text(rep));
  }
  std::vector<AbGroup> h = homology_all(nq_complex(desc));
  if (desc.primes.size() >= 4) {
    // The homology is available, but the length-n assembly is only exact up
    // to n = 3; report the refusal with the homology attached.
    std::string msg =
        "K-group assembly is only exact for resolutions of length <= 3; " +
        std::to_string(desc.primes.size()) + " primes give length " +
        std::to_string(desc.primes.size()) + ".";
    for (std::size_t k = 0; k < h.size(); ++k)
      msg += "\n  H" + std::to_string(k) + " = " + h[k].to_text();
    throw refusal_error(msg);
  }
  KResult r = assemble(h);
  if (run_checks)
    r.notes.push_back("cover conditions verified on the residue model "
                      "(equivariance up to word length 2)");

  FamilySystem prog = nq_progression_system(desc, 8, product_of(desc.primes));
  FreeActionReport fr = free_action_check(prog.action, prog.universe, 2);
  if (fr.free_up_to_depth())
    r.notes.push_back("no fixed points on exact progressions for group "
                      "elements of word length <= " + std::to_string(fr.depth));
  else
    r.notes.push_back("fixed point found on exact progressions: theta_{" +
                      fr.violations[0].g + "} fixes " + fr.violations[0].e);
  return r;
}

CheckReport nq_checks(const NqDesc& desc, std::size_t depth) {
  FamilySystem sys = nq_system(desc);
  return check_all(sys.covers, sys.action, sys.universe, depth);
}

}  // namespace zerok
