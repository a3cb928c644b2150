#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "rwg/error.hpp"
#include "rwg/permutation.hpp"

namespace rwg {

namespace detail {

class InflationParser {
 public:
  explicit InflationParser(std::string_view text) : text_(text) {}

  Permutation parse() {
    auto p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing text");
    return p;
  }

 private:
  Permutation expression() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == 'e') {
      ++pos_;
      return Permutation{};
    }
    if (c == 'i' || c == 'd') {
      ++pos_;
      const int k = number();
      return c == 'i' ? Permutation::identity(k) : Permutation::decreasing(k);
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a permutation");
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto sigma = Permutation::parse(text_.substr(start, pos_ - start));
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '[') return sigma;
    ++pos_;
    std::vector<Permutation> blocks{expression()};
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      blocks.push_back(expression());
      skip_space();
    }
    if (pos_ == text_.size() || text_[pos_] != ']') fail("expected ']'");
    ++pos_;
    return inflate(sigma, blocks);
  }

  int number() {
    const auto start = pos_;
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) && pos_ - start < 4)
      v = v * 10 + (text_[pos_++] - '0');
    if (pos_ == start) fail("expected a size");
    return v;
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Evaluates expressions such as "12[i1,21[i2,i2]]": a permutation literal
/// followed by bracketed blocks, i<k> for the identity, d<k> for the
/// decreasing permutation, e for the empty one.
inline Permutation parse_inflation(std::string_view text) { return detail::InflationParser(text).parse(); }

}  // namespace rwg
