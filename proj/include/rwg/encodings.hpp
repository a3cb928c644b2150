#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwg/error.hpp"
#include "rwg/permutation.hpp"
#include "rwg/reduced_words.hpp"
#include "rwg/word_graph.hpp"

namespace rwg {

// Plain letters are ballot-sequence letters; Under letters spell a reduced
// word of alpha, Over letters one of beta.
enum class LetterKind : std::uint8_t { Plain, Under, Over };

struct EncodedLetter {
  LetterKind kind = LetterKind::Plain;
  std::uint8_t value = 0;
  friend bool operator==(const EncodedLetter&, const EncodedLetter&) = default;
  friend auto operator<=>(const EncodedLetter&, const EncodedLetter&) = default;
};

constexpr EncodedLetter plain(int j) { return {LetterKind::Plain, static_cast<std::uint8_t>(j)}; }
constexpr EncodedLetter under(int j) { return {LetterKind::Under, static_cast<std::uint8_t>(j)}; }
constexpr EncodedLetter over(int j) { return {LetterKind::Over, static_cast<std::uint8_t>(j)}; }

/// Word over the three letter kinds, for blocks of sizes a = |alpha| and
/// b = |beta|.
struct EncodedWord {
  std::vector<EncodedLetter> letters;
  int a = 0;
  int b = 0;

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const EncodedWord&, const EncodedWord&) = default;
  friend auto operator<=>(const EncodedWord&, const EncodedWord&) = default;
};

inline std::string format_letter(EncodedLetter letter) {
  const auto digits = std::to_string(static_cast<int>(letter.value));
  switch (letter.kind) {
    case LetterKind::Plain: return digits;
    case LetterKind::Under: return "_" + digits;
    case LetterKind::Over: return "^" + digits;
  }
  return digits;
}

/// Whitespace-separated letters: "3", "_3", "^3". The empty word is "e".
inline std::string format_encoded(const EncodedWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_letter(w.letters[i]);
  }
  return out;
}

inline EncodedWord parse_encoded(std::string_view text, int a, int b) {
  EncodedWord w{{}, a, b};
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    auto end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    pos = end;
    if (token == "e") continue;
    EncodedLetter letter;
    if (token.front() == '_' || token.front() == '^') {
      letter.kind = token.front() == '_' ? LetterKind::Under : LetterKind::Over;
      token.remove_prefix(1);
    }
    if (token.empty() || token.size() > 3) throw Error(ErrorCode::Parse, "bad encoded letter");
    int v = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad encoded letter '" + std::string(token) + "'");
      v = v * 10 + (c - '0');
    }
    if (v < 1 || v > 255) throw Error(ErrorCode::Parse, "encoded letter out of range");
    letter.value = static_cast<std::uint8_t>(v);
    w.letters.push_back(letter);
  }
  return w;
}

/// All interleavings of u and v that keep the internal order of each.
template <typename T>
std::vector<std::vector<T>> shuffles(std::span<const T> u, std::span<const T> v) {
  std::vector<std::vector<T>> out;
  std::vector<T> current;
  current.reserve(u.size() + v.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      out.push_back(current);
      return;
    }
    if (i < u.size()) {
      current.push_back(u[i]);
      self(self, i + 1, j);
      current.pop_back();
    }
    if (j < v.size()) {
      current.push_back(v[j]);
      self(self, i, j + 1);
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Letters of `kind` in order, as a plain word.
inline Word subsequence(const EncodedWord& w, LetterKind kind) {
  Word out;
  for (auto letter : w.letters)
    if (letter.kind == kind) out.push_back(letter.value);
  return out;
}

inline std::vector<EncodedLetter> mark(const Word& word, LetterKind kind) {
  std::vector<EncodedLetter> out;
  out.reserve(word.size());
  for (auto c : word) out.push_back({kind, c});
  return out;
}

inline bool spells_reduced_word(const Word& word, const Permutation& pi) {
  if (static_cast<int>(word.size()) != pi.length()) return false;
  for (auto c : word)
    if (c < 1 || c >= pi.size()) return false;
  return apply_word(word, pi.size()) == pi;
}

// ---------------------------------------------------------------- 12-inflations

/// U_{alpha,beta}: every shuffle of an Under reduced word of alpha with an
/// Over reduced word of beta, sorted.
inline std::vector<EncodedWord> build_U(const Permutation& alpha, const Permutation& beta,
                                        std::size_t cap = kDefaultWordCap) {
  const auto total = count_reduced_words(inflate_12(alpha, beta));
  if (total > cap)
    throw Error(ErrorCode::TooLarge, "|U| = " + std::to_string(total) + " exceeds the cap of " + std::to_string(cap));
  const auto us = enumerate(alpha, cap);
  const auto vs = enumerate(beta, cap);
  std::vector<EncodedWord> out;
  for (const auto& u : us) {
    const auto mu = mark(u, LetterKind::Under);
    for (const auto& v : vs) {
      const auto mv = mark(v, LetterKind::Over);
      for (auto& s : shuffles<EncodedLetter>(mu, mv)) out.push_back({std::move(s), alpha.size(), beta.size()});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool in_U(const EncodedWord& w, const Permutation& alpha, const Permutation& beta) {
  if (w.a != alpha.size() || w.b != beta.size()) return false;
  for (auto letter : w.letters)
    if (letter.kind == LetterKind::Plain) return false;
  return spells_reduced_word(subsequence(w, LetterKind::Under), alpha) &&
         spells_reduced_word(subsequence(w, LetterKind::Over), beta);
}

/// Under j -> j, Over j -> j + a.
inline Word eta(const EncodedWord& w) {
  Word r;
  r.reserve(w.size());
  for (auto letter : w.letters) {
    if (letter.kind == LetterKind::Plain) throw Error(ErrorCode::NotInEncodingSet, "plain letter in a 12-encoding");
    r.push_back(static_cast<std::uint8_t>(letter.kind == LetterKind::Under ? letter.value : letter.value + w.a));
  }
  return r;
}

/// Pairs (Under letter, later Over letter).
inline long long shift(const EncodedWord& w) {
  long long unders = 0;
  long long total = 0;
  for (auto letter : w.letters) {
    if (letter.kind == LetterKind::Under) ++unders;
    if (letter.kind == LetterKind::Over) total += unders;
  }
  return total;
}

struct EncodedNeighbor {
  EncodedWord word;
  EdgeKind kind;
};

namespace detail {

inline bool far_apart(int p, int q) { return p - q > 1 || q - p > 1; }

inline bool braid_triple(EncodedLetter x, EncodedLetter y, EncodedLetter z) {
  return x.kind == y.kind && y.kind == z.kind && x.value == z.value && (x.value + 1 == y.value || y.value + 1 == x.value);
}

inline EncodedWord swapped(const EncodedWord& w, std::size_t i) {
  auto out = w;
  std::swap(out.letters[i], out.letters[i + 1]);
  return out;
}

inline EncodedWord braided(const EncodedWord& w, std::size_t i) {
  auto out = w;
  std::swap(out.letters[i], out.letters[i + 1]);
  out.letters[i + 2] = out.letters[i];
  return out;
}

}  // namespace detail

/// Neighbors of w in the graph on U_{alpha,beta}.
inline std::vector<EncodedNeighbor> u_neighbors(const EncodedWord& w) {
  std::vector<EncodedNeighbor> out;
  const auto& l = w.letters;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    const bool mixed = l[i].kind != l[i + 1].kind;
    if (mixed || detail::far_apart(l[i].value, l[i + 1].value))
      out.push_back({detail::swapped(w, i), EdgeKind::Commutation});
    if (i + 2 < l.size() && detail::braid_triple(l[i], l[i + 1], l[i + 2]))
      out.push_back({detail::braided(w, i), EdgeKind::LongBraid});
  }
  return out;
}

// ---------------------------------------------------------------- ballot sequences

/// Every prefix has N_1 >= N_2 >= ... and the whole uses each of 1..a
/// exactly b times.
inline bool is_ballot(const Word& x, int a, int b) {
  std::vector<int> count(static_cast<std::size_t>(a) + 2, 0);
  for (auto c : x) {
    if (c < 1 || c > a) return false;
    if (c > 1 && count[c - 1u] <= count[c]) return false;
    if (++count[c] > b) return false;
  }
  for (int j = 1; j <= a; ++j)
    if (count[static_cast<std::size_t>(j)] != b) return false;
  return true;
}

/// Ballot_{a,b} in lexicographic order.
inline std::vector<Word> ballot_sequences(int a, int b) {
  std::vector<Word> out;
  if (a < 0 || b < 0) throw Error(ErrorCode::Precondition, "a and b must be nonnegative");
  std::vector<int> count(static_cast<std::size_t>(a) + 2, 0);
  Word current;
  const auto total = static_cast<std::size_t>(a) * static_cast<std::size_t>(b);
  auto rec = [&](auto&& self) -> void {
    if (current.size() == total) {
      out.push_back(current);
      return;
    }
    for (int j = 1; j <= a; ++j) {
      if (count[static_cast<std::size_t>(j)] == b) continue;
      if (j > 1 && count[j - 1u] <= count[static_cast<std::size_t>(j)]) continue;
      ++count[static_cast<std::size_t>(j)];
      current.push_back(static_cast<std::uint8_t>(j));
      self(self);
      current.pop_back();
      --count[static_cast<std::size_t>(j)];
    }
  };
  rec(rec);
  return out;
}

/// y_i = b - N_j(x^(i-1)) when x_i = j.
inline Word f_map(const Word& x, int b) {
  std::vector<int> count(256, 0);
  Word y;
  y.reserve(x.size());
  for (auto c : x) y.push_back(static_cast<std::uint8_t>(b - count[c]++));
  return y;
}

/// Inverse of f_map on Ballot_{a,b}: x_i is the smallest j whose count so
/// far is b - y_i.
inline Word f_inverse(const Word& y, int a, int b) {
  std::vector<int> count(static_cast<std::size_t>(a) + 2, 0);
  Word x;
  x.reserve(y.size());
  for (auto k : y) {
    int j = 1;
    while (j <= a && count[static_cast<std::size_t>(j)] != b - k) ++j;
    if (j > a) throw Error(ErrorCode::Precondition, "not a reverse ballot sequence");
    ++count[static_cast<std::size_t>(j)];
    x.push_back(static_cast<std::uint8_t>(j));
  }
  return x;
}

/// f applied to the Plain letters of w; other letters are untouched.
inline EncodedWord f_map(const EncodedWord& w) {
  auto z = w;
  std::vector<int> count(256, 0);
  for (auto& letter : z.letters)
    if (letter.kind == LetterKind::Plain) letter.value = static_cast<std::uint8_t>(w.b - count[letter.value]++);
  return z;
}

/// Pairs (i < i') of Plain letters with w_i > w_i'.
inline long long ballot_statistic(const EncodedWord& w) {
  long long total = 0;
  std::vector<long long> seen(256, 0);
  for (auto letter : w.letters) {
    if (letter.kind != LetterKind::Plain) continue;
    for (int j = letter.value + 1; j < 256; ++j) total += seen[static_cast<std::size_t>(j)];
    ++seen[letter.value];
  }
  return total;
}

// ---------------------------------------------------------------- 21-inflations

/// Membership in V_{alpha,beta}, in one left-to-right pass.
inline bool in_V(const EncodedWord& w, const Permutation& alpha, const Permutation& beta) {
  const int a = alpha.size();
  const int b = beta.size();
  if (w.a != a || w.b != b) return false;
  std::vector<int> n(static_cast<std::size_t>(a) + 2, 0);
  std::vector<int> z(static_cast<std::size_t>(b) + 2, 0);
  Word us;
  Word vs;
  for (auto letter : w.letters) {
    const int j = letter.value;
    switch (letter.kind) {
      case LetterKind::Plain:
        if (j < 1 || j > a || n[static_cast<std::size_t>(j)] == b) return false;
        if (j > 1 && n[j - 1u] <= n[static_cast<std::size_t>(j)]) return false;
        ++z[static_cast<std::size_t>(b - n[static_cast<std::size_t>(j)])];
        ++n[static_cast<std::size_t>(j)];
        break;
      case LetterKind::Under:
        if (j < 1 || j >= a || n[static_cast<std::size_t>(j)] != n[j + 1u]) return false;
        us.push_back(letter.value);
        break;
      case LetterKind::Over:
        if (j < 1 || j >= b || z[static_cast<std::size_t>(j)] != z[j + 1u]) return false;
        vs.push_back(letter.value);
        break;
    }
  }
  for (int j = 1; j <= a; ++j)
    if (n[static_cast<std::size_t>(j)] != b) return false;
  return spells_reduced_word(us, alpha) && spells_reduced_word(vs, beta);
}

/// V_{alpha,beta}, sorted. Its size equals |R(21[alpha,beta])|, which is what
/// the cap is checked against.
inline std::vector<EncodedWord> build_V(const Permutation& alpha, const Permutation& beta,
                                        std::size_t cap = kDefaultWordCap) {
  const int a = alpha.size();
  const int b = beta.size();
  if (a < 1 || b < 1) throw Error(ErrorCode::Precondition, "21-encodings need nonempty alpha and beta");
  const auto total = count_reduced_words(inflate_21(alpha, beta));
  if (total > cap)
    throw Error(ErrorCode::TooLarge, "|V| = " + std::to_string(total) + " exceeds the cap of " + std::to_string(cap));
  const auto us = enumerate(alpha, cap);
  const auto vs = enumerate(beta, cap);
  std::vector<EncodedWord> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> n(static_cast<std::size_t>(a) + 2, 0);
  std::vector<int> z(static_cast<std::size_t>(b) + 2, 0);
  EncodedWord current{{}, a, b};
  const std::size_t plain_total = static_cast<std::size_t>(a) * static_cast<std::size_t>(b);
  for (const auto& u : us)
    for (const auto& v : vs) {
      const std::size_t length = plain_total + u.size() + v.size();
      auto rec = [&](auto&& self, std::size_t iu, std::size_t iv) -> void {
        if (current.letters.size() == length) {
          out.push_back(current);
          return;
        }
        for (int j = 1; j <= a; ++j) {
          auto& nj = n[static_cast<std::size_t>(j)];
          if (nj == b || (j > 1 && n[j - 1u] <= nj)) continue;
          const auto y = static_cast<std::size_t>(b - nj);
          ++z[y];
          ++nj;
          current.letters.push_back(plain(j));
          self(self, iu, iv);
          current.letters.pop_back();
          --nj;
          --z[y];
        }
        if (iu < u.size() && n[u[iu]] == n[u[iu] + 1u]) {
          current.letters.push_back(under(u[iu]));
          self(self, iu + 1, iv);
          current.letters.pop_back();
        }
        if (iv < v.size() && z[v[iv]] == z[v[iv] + 1u]) {
          current.letters.push_back(over(v[iv]));
          self(self, iu, iv + 1);
          current.letters.pop_back();
        }
      };
      rec(rec, 0, 0);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Plain j -> j + b - N_j - 1, Under j -> j + b - N_j, Over j -> j + N_j(z),
/// with counts over the prefix before the letter and z = f(w).
inline Word psi(const EncodedWord& w) {
  const int b = w.b;
  std::vector<int> n(256, 0);
  std::vector<int> z(256, 0);
  Word r;
  r.reserve(w.size());
  for (auto letter : w.letters) {
    const int j = letter.value;
    switch (letter.kind) {
      case LetterKind::Plain: {
        const int value = j + b - n[static_cast<std::size_t>(j)] - 1;
        ++z[static_cast<std::size_t>(b - n[static_cast<std::size_t>(j)])];
        ++n[static_cast<std::size_t>(j)];
        r.push_back(static_cast<std::uint8_t>(value));
        break;
      }
      case LetterKind::Under: r.push_back(static_cast<std::uint8_t>(j + b - n[static_cast<std::size_t>(j)])); break;
      case LetterKind::Over: r.push_back(static_cast<std::uint8_t>(j + z[static_cast<std::size_t>(j)])); break;
    }
  }
  return r;
}

/// Neighbors of w in the graph on V_{alpha,beta}: each listed move, kept only
/// when the result stays in V_{alpha,beta}.
inline std::vector<EncodedNeighbor> v_neighbors(const EncodedWord& w, const Permutation& alpha,
                                                const Permutation& beta) {
  std::vector<EncodedNeighbor> out;
  const auto& l = w.letters;
  const auto zw = f_map(w);
  const auto& zl = zw.letters;
  std::vector<int> n(256, 0);
  auto keep = [&](EncodedWord candidate, EdgeKind kind) {
    if (in_V(candidate, alpha, beta)) out.push_back({std::move(candidate), kind});
  };
  using K = LetterKind;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    const auto x = l[i];
    const auto y = l[i + 1];
    const int p = x.value;
    const int q = y.value;
    bool commutes = false;
    if (x.kind == y.kind && x.kind != K::Plain) {
      commutes = detail::far_apart(p, q);
    } else if (x.kind == K::Plain && y.kind == K::Plain) {
      commutes = p > q || (p < q && n[static_cast<std::size_t>(p)] > n[static_cast<std::size_t>(q)]);
    } else if (x.kind != K::Plain && y.kind != K::Plain) {
      commutes = true;
    } else {
      // one marked letter next to a plain one
      const auto marked = x.kind == K::Plain ? y : x;
      const auto plain_at = x.kind == K::Plain ? i : i + 1;
      if (marked.kind == K::Under) {
        const int pl = l[plain_at].value;
        commutes = detail::far_apart(marked.value, pl) || marked.value > pl;
      } else {
        const int zq = zl[plain_at].value;
        commutes = detail::far_apart(marked.value, zq) || zq < marked.value;
      }
    }
    if (commutes) keep(detail::swapped(w, i), EdgeKind::Commutation);

    if (i + 2 < l.size()) {
      const auto t = l[i + 2];
      if (detail::braid_triple(x, y, t) && x.kind != K::Plain) keep(detail::braided(w, i), EdgeKind::LongBraid);
      // Under p past the plain pair p (p+1), either direction
      if (x.kind == K::Under && y.kind == K::Plain && t.kind == K::Plain && y.value == x.value &&
          t.value == x.value + 1) {
        auto c = w;
        c.letters[i] = y;
        c.letters[i + 1] = t;
        c.letters[i + 2] = x;
        keep(std::move(c), EdgeKind::LongBraid);
      }
      if (t.kind == K::Under && x.kind == K::Plain && y.kind == K::Plain && x.value == t.value &&
          y.value == t.value + 1) {
        auto c = w;
        c.letters[i] = t;
        c.letters[i + 1] = x;
        c.letters[i + 2] = y;
        keep(std::move(c), EdgeKind::LongBraid);
      }
      // in z: Over p past the plain pair (p+1) p, either direction
      if (x.kind == K::Over && y.kind == K::Plain && t.kind == K::Plain && zl[i + 1].value == x.value + 1 &&
          zl[i + 2].value == x.value) {
        auto c = w;
        c.letters[i] = y;
        c.letters[i + 1] = t;
        c.letters[i + 2] = x;
        keep(std::move(c), EdgeKind::LongBraid);
      }
      if (t.kind == K::Over && x.kind == K::Plain && y.kind == K::Plain && zl[i].value == t.value + 1 &&
          zl[i + 1].value == t.value) {
        auto c = w;
        c.letters[i] = t;
        c.letters[i + 1] = x;
        c.letters[i + 2] = y;
        keep(std::move(c), EdgeKind::LongBraid);
      }
    }
    if (x.kind == K::Plain) ++n[static_cast<std::size_t>(p)];
  }
  return out;
}

enum class Form { Twelve, TwentyOne };

/// Kind of the move joining w and w2 in the encoding graph, if any.
inline std::optional<EdgeKind> encoded_edge(Form form, const EncodedWord& w, const EncodedWord& w2,
                                            const Permutation& alpha, const Permutation& beta) {
  const bool member = form == Form::Twelve ? in_U(w, alpha, beta) && in_U(w2, alpha, beta)
                                           : in_V(w, alpha, beta) && in_V(w2, alpha, beta);
  if (!member) throw Error(ErrorCode::NotInEncodingSet, "both words must lie in the encoding set");
  const auto candidates = form == Form::Twelve ? u_neighbors(w) : v_neighbors(w, alpha, beta);
  for (const auto& c : candidates)
    if (c.word == w2) return c.kind;
  return std::nullopt;
}

/// The graph on U_{alpha,beta} (Form::Twelve) or V_{alpha,beta} (Form::TwentyOne).
inline LabeledGraph<EncodedWord> build_encoding_graph(Form form, const Permutation& alpha, const Permutation& beta,
                                                      std::size_t cap = kDefaultWordCap) {
  auto vertices = form == Form::Twelve ? build_U(alpha, beta, cap) : build_V(alpha, beta, cap);
  std::vector<Edge> edges;
  for (std::size_t id = 0; id < vertices.size(); ++id) {
    const auto candidates = form == Form::Twelve ? u_neighbors(vertices[id]) : v_neighbors(vertices[id], alpha, beta);
    for (const auto& c : candidates) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), c.word);
      if (it == vertices.end() || !(*it == c.word))
        throw Error(ErrorCode::NotInEncodingSet, "move left the encoding set: " + format_encoded(c.word));
      const auto other = static_cast<VertexId>(it - vertices.begin());
      if (id < other) edges.push_back({static_cast<VertexId>(id), other, c.kind});
    }
  }
  return LabeledGraph<EncodedWord>(std::move(vertices), std::move(edges));
}

// ---------------------------------------------------------------- statistics on V_{alpha, iota_b}

struct Stats21 {
  long long cshift = 0;
  long long bshift = 0;
  long long ballot = 0;
  friend bool operator==(const Stats21&, const Stats21&) = default;
};

/// Cshift: (plain j, later Under k) with j != k, k+1. Bshift: (plain j, later
/// Under j). ballot: (plain j, later plain k) with j > k.
inline Stats21 stats_21(const EncodedWord& w) {
  Stats21 s;
  std::vector<long long> seen(257, 0);
  long long plains = 0;
  s.ballot = ballot_statistic(w);
  for (auto letter : w.letters) {
    const auto j = letter.value;
    if (letter.kind == LetterKind::Plain) {
      ++seen[j];
      ++plains;
    } else if (letter.kind == LetterKind::Under) {
      s.bshift += seen[j];
      s.cshift += plains - seen[j] - seen[j + 1u];
    }
  }
  return s;
}

inline long long binomial2(long long n) { return n * (n - 1) / 2; }

/// (12...a)^b
inline Word xtilde(int a, int b) {
  Word x;
  for (int r = 0; r < b; ++r)
    for (int j = 1; j <= a; ++j) x.push_back(static_cast<std::uint8_t>(j));
  return x;
}

/// u followed by xtilde, or xtilde followed by u.
inline EncodedWord concat_xtilde(const Word& u, int a, int b, bool xtilde_first) {
  EncodedWord w{{}, a, b};
  const auto xs = mark(xtilde(a, b), LetterKind::Plain);
  const auto us = mark(u, LetterKind::Under);
  if (xtilde_first) {
    w.letters = xs;
    w.letters.insert(w.letters.end(), us.begin(), us.end());
  } else {
    w.letters = us;
    w.letters.insert(w.letters.end(), xs.begin(), xs.end());
  }
  return w;
}

/// Reverse the word, plain j -> a+1-j, Under j -> a-j. A bijection from
/// V_{alpha,iota_b} onto V_{alpha',iota_b} with alpha' the RM1 image of alpha;
/// it fixes xtilde and preserves ballot.
inline EncodedWord mirror(const EncodedWord& w) {
  auto out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  for (auto& letter : out.letters) {
    if (letter.kind == LetterKind::Plain) letter.value = static_cast<std::uint8_t>(w.a + 1 - letter.value);
    if (letter.kind == LetterKind::Under) letter.value = static_cast<std::uint8_t>(w.a - letter.value);
    if (letter.kind == LetterKind::Over) throw Error(ErrorCode::Precondition, "mirror needs beta = identity");
  }
  return out;
}

enum class PathTarget { UXtilde, XtildeU };

struct PathStep {
  EncodedWord word;  // after the step
  EdgeKind kind;
};

namespace detail {

class PathBuilder {
 public:
  explicit PathBuilder(EncodedWord w) : w_(std::move(w)) {}

  void swap_left(std::size_t i) {
    std::swap(w_.letters[i - 1], w_.letters[i]);
    steps_.push_back({w_, EdgeKind::Commutation});
  }

  // Under letter at i+2 jumps over the plain pair at i, i+1
  void braid_left(std::size_t i) {
    std::rotate(w_.letters.begin() + static_cast<std::ptrdiff_t>(i),
                w_.letters.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                w_.letters.begin() + static_cast<std::ptrdiff_t>(i) + 3);
    steps_.push_back({w_, EdgeKind::LongBraid});
  }

  // plain letters in [begin, end) become (12..m1)(12..m2)... with m1 >= m2 >= ...
  void normalize(std::size_t begin, std::size_t end) {
    auto& l = w_.letters;
    std::size_t start = begin;
    while (start < end) {
      int top = 0;
      for (std::size_t k = start; k < end; ++k) top = std::max<int>(top, l[k].value);
      for (int value = 1; value <= top; ++value) {
        const std::size_t slot = start + static_cast<std::size_t>(value) - 1;
        std::size_t at = slot;
        while (l[at].value != value) ++at;
        for (; at > slot; --at) swap_left(at);
      }
      start += static_cast<std::size_t>(top);
    }
  }

  std::vector<PathStep> run() {
    auto& l = w_.letters;
    std::size_t done = 0;
    for (;;) {
      std::size_t q = done;
      while (q < l.size() && l[q].kind != LetterKind::Under) ++q;
      normalize(done, q);
      if (q == l.size()) break;
      const int j = l[q].value;
      while (q > done) {
        if (q >= done + 2 && l[q - 2].value == j && l[q - 1].value == j + 1) {
          braid_left(q - 2);
          q -= 2;
        } else {
          swap_left(q);
          --q;
        }
      }
      ++done;
    }
    return std::move(steps_);
  }

 private:
  EncodedWord w_;
  std::vector<PathStep> steps_;
};

}  // namespace detail

/// An explicit path in the graph on V_{alpha,iota_b} from w to u xtilde
/// (UXtilde) or to xtilde u (XtildeU), where u is the Under subsequence of w.
/// UXtilde follows the recursive construction directly; XtildeU runs it on
/// the mirror image of w and mirrors the result back.
inline std::vector<PathStep> shift_path(const EncodedWord& w, PathTarget target) {
  for (auto letter : w.letters)
    if (letter.kind == LetterKind::Over) throw Error(ErrorCode::Precondition, "path construction needs beta = identity");
  if (target == PathTarget::UXtilde) return detail::PathBuilder(w).run();
  auto steps = detail::PathBuilder(mirror(w)).run();
  for (auto& step : steps) step.word = mirror(step.word);
  return steps;
}

}  // namespace rwg
