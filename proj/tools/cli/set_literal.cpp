#include "cli/set_literal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "sumprod/error.hpp"

namespace sumprod::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                       std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ZpSet parse_set_literal(std::string_view text, PrimeModulus p) {
  Parser in(text);
  in.expect("{");
  if (in.accept("}")) {
    if (!in.at_end()) in.fail("trailing characters");
    throw Error(Errc::EmptySet, "set literal denotes the empty set");
  }
  std::vector<std::int64_t> elems;
  do {
    const std::int64_t lo = in.integer();
    if (in.accept("..")) {
      const std::int64_t hi = in.integer();
      if (hi < lo) in.fail("range " + std::to_string(lo) + ".." + std::to_string(hi) + " is reversed");
      // A range of p or more consecutive integers covers Z_p.
      const auto span = static_cast<__int128>(hi) - lo + 1;
      const auto count = static_cast<std::int64_t>(std::min<__int128>(span, p.value()));
      for (std::int64_t i = 0; i < count; ++i) elems.push_back(lo + i);
    } else {
      elems.push_back(lo);
    }
  } while (in.accept(","));
  in.expect("}");
  if (!in.at_end()) in.fail("trailing characters");
  return ZpSet(p, elems);
}

}  // namespace sumprod::cli
