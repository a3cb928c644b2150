#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "rwg/error.hpp"
#include "rwg/permutation.hpp"

namespace rwg {

/// Diameters of G, C and B for one permutation.
struct DiameterTriple {
  long long g = 0;
  long long c = 0;
  long long b = 0;
  friend bool operator==(const DiameterTriple&, const DiameterTriple&) = default;
};

inline std::string to_string(const DiameterTriple& d) {
  return "g=" + std::to_string(d.g) + " c=" + std::to_string(d.c) + " b=" + std::to_string(d.b);
}

/// Bounds for G and B, exact value for C.
struct DiameterBounds {
  long long g_lower = 0;
  long long g_upper = 0;
  long long c = 0;
  long long b_lower = 0;
  long long b_upper = 0;
  friend bool operator==(const DiameterBounds&, const DiameterBounds&) = default;

  bool contains(const DiameterTriple& d) const {
    return g_lower <= d.g && d.g <= g_upper && d.c == c && b_lower <= d.b && d.b <= b_upper;
  }
};

inline long long choose2(long long n) { return n * (n - 1) / 2; }

/// pi = 12[alpha, beta]
inline DiameterTriple diam_12(const DiameterTriple& da, const DiameterTriple& db, long long la, long long lb) {
  return {da.g + db.g + la * lb, da.c + db.c, da.b + db.b + la * lb};
}

/// pi = 21[alpha, iota_b] with a = |alpha|.
inline DiameterBounds bounds_21_iota(const DiameterTriple& da, long long la, long long a, long long b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::Precondition, "bounds for 21[alpha, iota_b] need a >= 1 and b >= 1");
  const long long gap = choose2(a) * choose2(b);
  const long long g = da.g + la * b * (a - 1);
  const long long bb = da.b + la * b * (a - 2);
  return {g + gap, g + 2 * gap, da.c + la * b, bb + gap, bb + 2 * gap};
}

/// pi = 21[alpha, 1] with a = |alpha|.
inline DiameterTriple diam_21_single(const DiameterTriple& da, long long la, long long a) {
  return {da.g + la * (a - 1), da.c + la, da.b + la * (a - 2)};
}

/// (D(n), C(n), B(n)) for delta_n, iterated from n = 1.
inline DiameterTriple delta_recursion(int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "delta_recursion needs n >= 1");
  DiameterTriple d;
  for (long long k = 1; k < n; ++k) {
    d.g += (k - 1) * choose2(k);
    d.c += choose2(k);
    d.b += (k - 2) * choose2(k);
  }
  return d;
}

namespace detail {

// one cache per Step type
template <typename Step>
DiameterTriple memoized(const Permutation& pi, Step step) {
  static std::mutex guard;
  static std::map<Permutation, DiameterTriple> cache;
  {
    std::lock_guard lock(guard);
    if (auto it = cache.find(pi); it != cache.end()) return it->second;
  }
  const auto value = step(pi);
  std::lock_guard lock(guard);
  cache.emplace(pi, value);
  return value;
}

}  // namespace detail

/// pi avoids 312, so pi = 12[21[pi', 1], pi''] with pi_m = 1.
inline DiameterTriple diam_312_avoiding(const Permutation& pi) {
  if (pi.size() <= 1) return {};
  struct Step {
    DiameterTriple operator()(const Permutation& p) const {
      const auto d = decompose_312(p);
      const auto d1 = diam_312_avoiding(d.left);
      const auto d2 = diam_312_avoiding(d.right);
      const long long l1 = d.left.length();
      const long long l2 = d.right.length();
      const long long m = d.m;
      return {d1.g + d2.g + (m - 1) * (l1 + l2) + l1 * (l2 - 1), d1.c + d2.c + l1,
              d1.b + d2.b + (m - 1) * (l1 + l2) + l1 * (l2 - 2)};
    }
  };
  return detail::memoized(pi, Step{});
}

/// pi avoids 231, so pi = 12[pi', 21[1, pi'']] with pi_m = n.
inline DiameterTriple diam_231_avoiding(const Permutation& pi) {
  if (pi.size() <= 1) return {};
  struct Step {
    DiameterTriple operator()(const Permutation& p) const {
      const auto d = decompose_231(p);
      const auto d1 = diam_231_avoiding(d.left);
      const auto d2 = diam_231_avoiding(d.right);
      const long long l1 = d.left.length();
      const long long l2 = d.right.length();
      const long long k = p.size() - d.m;
      return {d1.g + d2.g + k * (l1 + l2) + l2 * (l1 - 1), d1.c + d2.c + l2,
              d1.b + d2.b + k * (l1 + l2) + l2 * (l1 - 2)};
    }
  };
  return detail::memoized(pi, Step{});
}

/// diam G for 12[iota_c, 21[iota_a, iota_b], iota_d].
inline long long diam_low_family(long long a, long long b, long long c, long long d) {
  if (a < 2 || b < 2 || c < 0 || d < 0)
    throw Error(ErrorCode::Precondition, "low family needs a, b >= 2 and c, d >= 0");
  return choose2(a) * choose2(b);
}

struct LowFamily {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
};

/// Recognizes pi = 12[iota_c, 21[iota_a, iota_b], iota_d] with a, b >= 2.
inline std::optional<LowFamily> match_low_family(const Permutation& pi) {
  const int n = pi.size();
  int c = 0;
  while (c < n && pi(c + 1) == c + 1) ++c;
  int d = 0;
  while (d < n - c && pi(n - d) == n - d) ++d;
  const int inner = n - c - d;
  for (int a = 2; a <= inner - 2; ++a) {
    const int b = inner - a;
    bool ok = true;
    for (int i = 1; i <= a && ok; ++i) ok = pi(c + i) == c + b + i;
    for (int i = 1; i <= b && ok; ++i) ok = pi(c + a + i) == c + i;
    if (ok) return LowFamily{a, b, c, d};
  }
  return std::nullopt;
}

/// Nested binary expression for a low-family member, e.g. 12[12[i1,21[i2,i2]],i1].
inline std::string to_expression(const LowFamily& f) {
  auto iota = [](int k) { return "i" + std::to_string(k); };
  std::string core = "21[" + iota(f.a) + "," + iota(f.b) + "]";
  if (f.c > 0) core = "12[" + iota(f.c) + "," + core + "]";
  if (f.d > 0) core = "12[" + core + "," + iota(f.d) + "]";
  return core;
}

}  // namespace rwg
