// Regenerates core/data/small_groups.txt: every group of order <= 31 up to
// isomorphism, built as cyclic extensions N.C_p of smaller groups.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "coxkit/permgrp.hpp"

using coxkit::perm::CayleyTable;
using coxkit::perm::Index;

namespace {

constexpr std::size_t kMaxOrder = 31;
constexpr std::size_t kCensus[kMaxOrder + 1] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1,
                                                14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1};

std::vector<std::size_t> primes_dividing(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  return out;
}

using Map = std::vector<Index>;

Map compose(const Map& a, const Map& b) {
  Map out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

// Multiplication table of N.C_p with t n t^-1 = alpha(n) and t^p = z.
// Element n t^i has index i * |N| + n.
std::vector<Index> extension_table(const CayleyTable& n, std::size_t p, const std::vector<Map>& alpha_pow, Index z) {
  const std::size_t m = n.order(), order = m * p;
  std::vector<Index> mul(order * order);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t j = 0; j < p; ++j)
        for (std::size_t b = 0; b < m; ++b) {
          Index c = n.mul(static_cast<Index>(a), alpha_pow[i][b]);
          std::size_t k = i + j;
          if (k >= p) {
            c = n.mul(c, z);
            k -= p;
          }
          mul[(i * m + a) * order + j * m + b] = static_cast<Index>(k * m + c);
        }
  return mul;
}

struct Invariant {
  bool abelian;
  std::vector<std::size_t> orders;  // element order histogram
  friend auto operator<=>(const Invariant&, const Invariant&) = default;
};

Invariant invariant_of(const CayleyTable& t) {
  std::vector<std::size_t> hist(t.order() + 1, 0);
  for (auto o : t.element_orders()) ++hist[o];
  return {t.is_abelian(), hist};
}

std::size_t count_power_kernel(const CayleyTable& t, std::size_t e) {
  std::size_t c = 0;
  for (Index a = 0; a < t.order(); ++a)
    if (e % t.element_order(a) == 0) ++c;
  return c;
}

std::vector<std::size_t> invariant_factors(const CayleyTable& t) {
  // Elementary divisors per prime from |{x : x^(p^k) = 1}| = p^(sum min(k, e_i)).
  std::vector<std::vector<std::size_t>> per_prime;
  for (std::size_t p : primes_dividing(t.order())) {
    std::vector<std::size_t> exps;  // number of parts >= k, for k = 1, 2, ...
    std::size_t prev = 0, pk = 1;
    for (;;) {
      pk *= p;
      std::size_t c = count_power_kernel(t, pk), lg = 0;
      while (c > 1) {
        c /= p;
        ++lg;
      }
      if (lg == prev) break;
      exps.push_back(lg - prev);
      prev = lg;
    }
    // exps[k-1] parts have exponent >= k.
    std::vector<std::size_t> parts;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      const std::size_t ge_k = exps[k], ge_next = k + 1 < exps.size() ? exps[k + 1] : 0;
      std::size_t pw = 1;
      for (std::size_t i = 0; i <= k; ++i) pw *= p;
      for (std::size_t i = 0; i < ge_k - ge_next; ++i) parts.push_back(pw);
    }
    std::sort(parts.rbegin(), parts.rend());
    per_prime.push_back(parts);
  }
  std::size_t rows = 0;
  for (const auto& v : per_prime) rows = std::max(rows, v.size());
  std::vector<std::size_t> out(rows, 1);
  for (const auto& v : per_prime)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_dihedral(const CayleyTable& t) {
  const std::size_t m = t.order() / 2;
  if (t.order() % 2 || m < 3 || t.is_abelian()) return false;
  for (Index r = 0; r < t.order(); ++r) {
    if (t.element_order(r) != m) continue;
    const Index gens[] = {r};
    const auto cyc = t.generated(gens);
    bool ok = true;
    for (Index x = 0; x < t.order() && ok; ++x)
      if (!std::binary_search(cyc.begin(), cyc.end(), x) && t.element_order(x) != 2) ok = false;
    if (ok) return true;
  }
  return false;
}

std::string name_of(const CayleyTable& t, std::size_t order, std::size_t k) {
  const auto inv = invariant_of(t);
  if (inv.abelian) {
    std::string s;
    for (auto f : invariant_factors(t)) s += (s.empty() ? "C" : "xC") + std::to_string(f);
    return s.empty() ? "C1" : s;
  }
  if (order == 6) return "S3";
  if (is_dihedral(t)) return "D" + std::to_string(order);
  if (order == 8 && inv.orders[2] == 1) return "Q8";
  if (order == 12 && inv.orders[2] == 3 && inv.orders[3] == 8) return "A4";
  if (order == 24 && inv.orders[2] == 9 && inv.orders[3] == 8 && inv.orders[4] == 6) return "S4";
  return "G" + std::to_string(order) + "_" + std::to_string(k);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::vector<CayleyTable>> groups(kMaxOrder + 1);
  groups[1].push_back(CayleyTable::from_table(1, {0}));
  for (std::size_t n = 2; n <= kMaxOrder; ++n) {
    std::map<Invariant, std::vector<std::size_t>> by_inv;
    for (std::size_t p : primes_dividing(n)) {
      for (const auto& base : groups[n / p]) {
        const std::size_t m = base.order();
        Map id(m);
        std::iota(id.begin(), id.end(), Index{0});
        for (const auto& alpha : coxkit::perm::automorphisms(base)) {
          std::vector<Map> pw{id};
          for (std::size_t i = 1; i <= p; ++i) pw.push_back(compose(alpha, pw.back()));
          for (Index z = 0; z < m; ++z) {
            if (alpha[z] != z) continue;
            bool inner = true;
            for (Index x = 0; x < m && inner; ++x) inner = pw[p][x] == base.conjugate(z, x);
            if (!inner) continue;
            pw.pop_back();
            auto cand = CayleyTable::from_table(n, extension_table(base, p, pw, z));
            pw.push_back(compose(alpha, pw.back()));
            auto& bucket = by_inv[invariant_of(cand)];
            bool seen = false;
            for (std::size_t idx : bucket)
              if (coxkit::perm::find_isomorphism(cand, groups[n][idx])) {
                seen = true;
                break;
              }
            if (!seen) {
              bucket.push_back(groups[n].size());
              groups[n].push_back(std::move(cand));
            }
          }
        }
      }
    }
    // Abelian first, then by exponent (largest first), then element orders.
    auto key = [](const CayleyTable& t) {
      const auto inv = invariant_of(t);
      const auto& o = t.element_orders();
      const std::size_t exponent = std::accumulate(o.begin(), o.end(), std::size_t{1}, std::lcm<std::size_t, std::size_t>);
      return std::tuple(!inv.abelian, t.order() - exponent, inv.orders);
    };
    std::stable_sort(groups[n].begin(), groups[n].end(),
                     [&](const CayleyTable& a, const CayleyTable& b) { return key(a) < key(b); });
    if (groups[n].size() != kCensus[n]) {
      std::cerr << "order " << n << ": found " << groups[n].size() << " groups, expected " << kCensus[n] << "\n";
      return 1;
    }
  }

  std::ofstream file;
  if (argc > 1) file.open(argv[1]);
  std::ostream& out = argc > 1 ? static_cast<std::ostream&>(file) : std::cout;
  out << "# id order name | generators (regular representation, cycle notation)\n";
  for (std::size_t n = 1; n <= kMaxOrder; ++n)
    for (std::size_t k = 0; k < groups[n].size(); ++k) {
      const auto& t = groups[n][k];
      out << n << "." << k + 1 << " " << n << " " << name_of(t, n, k + 1);
      for (Index g : coxkit::perm::minimum_generating_set(t)) out << " | " << t.regular(g).to_string();
      out << "\n";
    }
  return 0;
}
