#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kappa/bigint.hpp"
#include "kappa/kfamily.hpp"
#include "kappa/mod_poly.hpp"
#include "kappa/moebius.hpp"
#include "kappa/rational.hpp"
#include "kappa/symmetry.hpp"

namespace kappa {

enum class CertKind { HalfInteger2Adic, Eisenstein3Shift, TwoPowerMod2, PPowerCriterion };

inline const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::HalfInteger2Adic: return "HalfInteger2Adic";
    case CertKind::Eisenstein3Shift: return "Eisenstein3Shift";
    case CertKind::TwoPowerMod2: return "TwoPowerMod2";
    case CertKind::PPowerCriterion: return "PPowerCriterion";
  }
  return "?";
}

/// Evidence record for one irreducibility criterion. A certificate with
/// verdict true re-verifies from its params and evidence alone, without
/// repeating any search (see verify_certificate).
struct Certificate {
  CertKind kind;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> evidence;
  bool verdict = false;

  std::string lookup(const std::string& key) const {
    for (const auto& [k, v] : evidence)
      if (k == key) return v;
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw std::invalid_argument("Certificate: missing field " + key);
  }
};

/// 2-adic certificate for a = +-1/2: the rescaled polynomial
/// L = 2^n K_{a,n}(x/2) = x^n + (2-x)^n + (+-1)^n has leading coefficient
/// 2 mod 4 and reduces to the constant 1 mod 2, which forbids nontrivial
/// factorisations.
inline Certificate certify_half(const Rational& a, int n) {
  if (!(abs(a.num) == 1 && a.den == 2))
    throw std::invalid_argument("certify_half: a must be 1/2 or -1/2");
  if (n < 2) throw std::invalid_argument("certify_half: n must be at least 2");
  auto binom = detail::binomial_row(n);
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] += 1;
  for (int k = 0; k <= n; ++k) {
    BigInt t = binom[k] * big_pow(BigInt(2), n - k);  // (2-x)^n = sum C(n,k) 2^(n-k) (-x)^k
    c[k] += (k % 2) ? -t : t;
  }
  c[0] += big_pow(a.num, n);  // (2a)^n = (+-1)^n
  IntPoly L(std::move(c));

  Certificate cert;
  cert.kind = CertKind::HalfInteger2Adic;
  cert.params = {{"a", a.str()}, {"n", std::to_string(n)}};
  BigInt lc = L.lc();
  ModPoly mod2 = reduce(L, 2);
  bool lc_ok = lc % 4 == 2;
  bool image_ok = mod2.degree() == 0 && mod2.coeff(0) == 1;
  cert.evidence = {{"lc", lc.str()},
                   {"lc_mod4", BigInt(lc % 4).str()},
                   {"mod2_image", mod2.str()},
                   {"degree", std::to_string(L.degree())}};
  cert.verdict = lc_ok && image_ok;
  return cert;
}

/// Eisenstein certificate at p = 3 for 6m = 3^a + 3^b: K_{6m}(x-1)
/// satisfies Eisenstein's criterion, with constant term K_{6m}(-1) = 3 mod 9.
inline Certificate certify_eisenstein3(int m) {
  if (m < 1) throw std::invalid_argument("certify_eisenstein3: m must be positive");
  Certificate cert;
  cert.kind = CertKind::Eisenstein3Shift;
  cert.params = {{"m", std::to_string(m)}};
  long long target = 6LL * m;
  int found_a = 0, found_b = 0;
  for (long long pa = 3, ea = 1; pa < target; pa *= 3, ++ea) {
    long long rest = target - pa;
    long long pb = 3;
    int eb = 1;
    while (pb < rest) { pb *= 3; ++eb; }
    if (pb == rest && eb >= 1) { found_a = ea; found_b = eb; break; }
  }
  if (found_a == 0) {
    cert.evidence = {{"decomposition", "none"}};
    cert.verdict = false;
    return cert;
  }
  IntPoly k = k_poly(6 * m);
  bool eis = eisenstein_check(k, 3, -1);
  BigInt c0 = k.eval(-1);
  cert.evidence = {{"a", std::to_string(found_a)},
                   {"b", std::to_string(found_b)},
                   {"const_term", c0.str()},
                   {"const_mod9", BigInt(c0 % 9).str()}};
  cert.verdict = eis;
  return cert;
}

/// Mod-2 certificate for m = 2^(a-1): verifies the hypotheses of the
/// two-power argument -- K_{6m}(0) = K_{6m}(1) = 2, the reduction
/// x^(2^a)(x+1)^(2^a) mod 2, and square-freeness of K-tilde_{6m}(0).
inline Certificate certify_two_power(int m) {
  if (m < 1) throw std::invalid_argument("certify_two_power: m must be positive");
  Certificate cert;
  cert.kind = CertKind::TwoPowerMod2;
  cert.params = {{"m", std::to_string(m)}};
  int a = 0;
  for (int v = m; v > 1; v >>= 1) {
    if (v & 1) { a = -1; break; }
    ++a;
  }
  if (a < 0) {
    cert.evidence = {{"two_exp", "none"}};
    cert.verdict = false;
    return cert;
  }
  ++a;  // m = 2^(a-1)
  int n = 6 * m;
  IntPoly k = k_poly(n);
  ModPoly image = reduce(k, 2);
  // Expected image: x^(2^a)(x+1)^(2^a) = x^(2^(a+1)) + x^(2^a) over F_2.
  std::size_t half = std::size_t(1) << a;
  std::vector<std::uint64_t> want(2 * half + 1, 0);
  want[half] = 1;
  want[2 * half] = 1;
  ModPoly expected(2, std::move(want));
  auto fs = factor_symmetry_hypothesis(n);
  bool ok = k.eval(0) == 2 && k.eval(1) == 2 && image == expected && fs.holds() &&
            fs.ktilde_at_0 == 2;
  cert.evidence = {{"two_exp", std::to_string(a)},
                   {"value_at_0", k.eval(0).str()},
                   {"value_at_1", k.eval(1).str()},
                   {"mod2_image", image.str()},
                   {"ktilde_at_0", fs.ktilde_at_0.str()}};
  cert.verdict = ok;
  return cert;
}

namespace detail {

/// K_{6p}(alpha) mod p^2 by modular exponentiation; K_{6p} itself is never
/// expanded. Also checks that the residue only depends on alpha mod p, the
/// observation the criterion's proof relies on.
inline std::uint64_t k6p_residue_mod_p2(std::uint64_t alpha, std::uint64_t p) {
  std::uint64_t p2 = p * p;
  auto value = [&](std::uint64_t x) {
    std::uint64_t one_minus = (p2 + 1 - x % p2) % p2;
    return (powmod_u64(x % p2, 6 * p, p2) + powmod_u64(one_minus, 6 * p, p2) + 1) % p2;
  };
  std::uint64_t r = value(alpha);
  if (value(alpha + p) != r)
    throw std::logic_error("k6p_residue_mod_p2: residue not constant on alpha mod p");
  return r;
}

}  // namespace detail

/// The odd-prime criterion: K_6 has a root alpha mod p and
/// p^2 does not divide K_{6p}(alpha) for some such root. A true verdict
/// certifies irreducibility of K_{6p^e} for every e >= 1.
inline Certificate certify_p_power(std::uint64_t p, int e = 1) {
  if (p == 2 || !is_prime_u64(p))
    throw std::invalid_argument("certify_p_power: p must be an odd prime");
  if (p >= 1000000) throw std::invalid_argument("certify_p_power: p out of supported range");
  if (e < 1) throw std::invalid_argument("certify_p_power: e must be positive");
  Certificate cert;
  cert.kind = CertKind::PPowerCriterion;
  cert.params = {{"p", std::to_string(p)}, {"e", std::to_string(e)}};
  auto roots = roots_modp(reduce(k_poly(6), p));
  if (roots.empty()) {
    cert.verdict = false;
    return cert;
  }
  std::string all_roots, all_residues;
  for (const auto& [alpha, mult] : roots) {
    std::uint64_t r = detail::k6p_residue_mod_p2(alpha, p);
    if (!all_roots.empty()) { all_roots += ","; all_residues += ","; }
    all_roots += std::to_string(alpha);
    all_residues += std::to_string(r);
    if (r != 0) {
      cert.evidence = {{"alpha", std::to_string(alpha)}, {"residue_mod_p2", std::to_string(r)}};
      cert.verdict = true;
      return cert;
    }
  }
  cert.evidence = {{"roots", all_roots}, {"residues_mod_p2", all_residues}};
  cert.verdict = false;
  return cert;
}

/// Re-checks a certificate from its params and evidence, without repeating
/// any search. For verdict-true certificates this is a complete independent
/// verification.
inline bool verify_certificate(const Certificate& cert) {
  switch (cert.kind) {
    case CertKind::HalfInteger2Adic: {
      Rational a = parse_rational(cert.lookup("a"));
      int n = std::stoi(cert.lookup("n"));
      Certificate fresh = certify_half(a, n);
      return fresh.verdict == cert.verdict && fresh.lookup("lc") == cert.lookup("lc") &&
             fresh.lookup("mod2_image") == cert.lookup("mod2_image");
    }
    case CertKind::Eisenstein3Shift: {
      int m = std::stoi(cert.lookup("m"));
      if (!cert.verdict) return !certify_eisenstein3(m).verdict;
      long long a = std::stoll(cert.lookup("a")), b = std::stoll(cert.lookup("b"));
      long long pa = 1, pb = 1;
      for (int i = 0; i < a; ++i) pa *= 3;
      for (int i = 0; i < b; ++i) pb *= 3;
      if (pa + pb != 6LL * m || a < 1 || b < 1) return false;
      IntPoly k = k_poly(6 * m);
      return eisenstein_check(k, 3, -1) && BigInt(k.eval(-1) % 9).str() == cert.lookup("const_mod9") &&
             k.eval(-1) % 9 != 0;
    }
    case CertKind::TwoPowerMod2: {
      int m = std::stoi(cert.lookup("m"));
      if (!cert.verdict) return !certify_two_power(m).verdict;
      int a = std::stoi(cert.lookup("two_exp"));
      if (m != (1 << (a - 1))) return false;
      IntPoly k = k_poly(6 * m);
      if (!(k.eval(0) == 2 && k.eval(1) == 2)) return false;
      if (reduce(k, 2).str() != cert.lookup("mod2_image")) return false;
      return squarefree_integer(BigInt(cert.lookup("ktilde_at_0"))) &&
             k_tilde(6 * m).poly.eval(0).str() == cert.lookup("ktilde_at_0");
    }
    case CertKind::PPowerCriterion: {
      std::uint64_t p = std::stoull(cert.lookup("p"));
      if (p == 2 || !is_prime_u64(p)) return false;
      if (!cert.verdict) {
        // Exceptions re-check the recorded roots only; skipped primes carry
        // no evidence and re-verify vacuously.
        for (const auto& [key, value] : cert.evidence) {
          if (key != "roots") continue;
          std::size_t pos = 0;
          while (pos < value.size()) {
            std::size_t comma = value.find(',', pos);
            std::uint64_t alpha = std::stoull(value.substr(pos, comma - pos));
            if (reduce(k_poly(6), p).eval(alpha) != 0) return false;
            if (detail::k6p_residue_mod_p2(alpha, p) != 0) return false;
            if (comma == std::string::npos) break;
            pos = comma + 1;
          }
        }
        return true;
      }
      std::uint64_t alpha = std::stoull(cert.lookup("alpha"));
      std::uint64_t residue = std::stoull(cert.lookup("residue_mod_p2"));
      if (reduce(k_poly(6), p).eval(alpha) != 0) return false;
      return detail::k6p_residue_mod_p2(alpha, p) == residue && residue != 0;
    }
  }
  return false;
}

/// For an odd prime p where K_6 has a root: verifies that K_6 splits
/// completely over F_p and that the orbit of one root under H recovers the
/// whole root set (maps with vanishing denominators are skipped).
inline bool splitting_prerequisite(std::uint64_t p) {
  if (p == 2 || !is_prime_u64(p))
    throw std::invalid_argument("splitting_prerequisite: p must be an odd prime");
  ModPoly k6 = reduce(k_poly(6), p);
  auto roots = roots_modp(k6);
  if (roots.empty()) return true;  // vacuous
  if (!splits_completely(k6)) return false;
  std::vector<std::uint64_t> root_set;
  for (const auto& [r, mult] : roots) root_set.push_back(r);
  std::vector<std::uint64_t> orbit;
  for (const Moebius& m : HGroup::standard().elements) {
    auto img = m.apply_modp(root_set.front(), p);
    if (!img) continue;
    if (std::find(orbit.begin(), orbit.end(), *img) == orbit.end()) orbit.push_back(*img);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit == root_set;
}

/// Classification of one scanned prime.
struct PrimeScanRecord {
  std::uint64_t p;
  enum class Class { Certified, Exception, Skipped } cls;
  std::uint64_t alpha = 0;    // certified only
  std::uint64_t residue = 0;  // certified only
  std::vector<std::uint64_t> roots;     // exception only
  std::vector<std::uint64_t> residues;  // exception only (all zero)
};

/// scan_primes output: every odd prime below the bound lands in exactly one
/// of the three lists.
struct ScanResult {
  std::uint64_t bound;
  std::vector<std::uint64_t> certified;
  std::vector<std::uint64_t> exceptions;
  std::vector<std::uint64_t> skipped;
  std::vector<PrimeScanRecord> records;  // ascending by p
};

namespace detail {

inline PrimeScanRecord scan_one_prime(std::uint64_t p) {
  PrimeScanRecord rec;
  rec.p = p;
  auto roots = roots_modp(reduce(k_poly(6), p));
  if (roots.empty()) {
    rec.cls = PrimeScanRecord::Class::Skipped;
    return rec;
  }
  for (const auto& [alpha, mult] : roots) {
    std::uint64_t r = k6p_residue_mod_p2(alpha, p);
    rec.roots.push_back(alpha);
    rec.residues.push_back(r);
    if (r != 0) {
      rec.cls = PrimeScanRecord::Class::Certified;
      rec.alpha = alpha;
      rec.residue = r;
      return rec;
    }
  }
  rec.cls = PrimeScanRecord::Class::Exception;
  return rec;
}

}  // namespace detail

/// Classifies every odd prime p < bound by the odd-prime criterion.
/// Deterministic; the optional worker pool partitions the primes and the
/// merge preserves ascending order.
inline ScanResult scan_primes(std::uint64_t bound, int jobs = 1) {
  if (bound < 3) throw std::invalid_argument("scan_primes: bound must be at least 3");
  if (bound > 2000000) throw std::invalid_argument("scan_primes: bound out of supported range");
  if (jobs < 1) throw std::invalid_argument("scan_primes: jobs must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : primes_below(bound))
    if (p >= 3) primes.push_back(p);
  std::vector<PrimeScanRecord> records(primes.size());
  if (jobs == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) records[i] = detail::scan_one_prime(primes[i]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < primes.size(); i += jobs)
          records[i] = detail::scan_one_prime(primes[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  ScanResult out;
  out.bound = bound;
  for (auto& rec : records) {
    switch (rec.cls) {
      case PrimeScanRecord::Class::Certified: out.certified.push_back(rec.p); break;
      case PrimeScanRecord::Class::Exception: out.exceptions.push_back(rec.p); break;
      case PrimeScanRecord::Class::Skipped: out.skipped.push_back(rec.p); break;
    }
  }
  out.records = std::move(records);
  return out;
}

namespace detail {

inline std::string join_u64(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s.empty() ? "none" : s;
}

}  // namespace detail

/// Structured text document for a scan: bound, the three ordered lists, and
/// per-prime evidence. Byte-stable across runs for a fixed bound.
inline void write_scan_document(const ScanResult& scan, std::ostream& os) {
  os << "command: scan\n";
  os << "bound: " << scan.bound << "\n";
  os << "certified_count: " << scan.certified.size() << "\n";
  os << "certified: " << detail::join_u64(scan.certified) << "\n";
  os << "exceptions_count: " << scan.exceptions.size() << "\n";
  os << "exceptions: " << detail::join_u64(scan.exceptions) << "\n";
  os << "skipped_count: " << scan.skipped.size() << "\n";
  os << "skipped: " << detail::join_u64(scan.skipped) << "\n";
  os << "evidence:\n";
  for (const auto& rec : scan.records) {
    if (rec.cls == PrimeScanRecord::Class::Certified)
      os << "p=" << rec.p << " alpha=" << rec.alpha << " residue_mod_p2=" << rec.residue << "\n";
    else if (rec.cls == PrimeScanRecord::Class::Exception)
      os << "p=" << rec.p << " roots=" << detail::join_u64(rec.roots)
         << " residues_mod_p2=" << detail::join_u64(rec.residues) << "\n";
  }
}

}  // namespace kappa
