#include "grasscoh/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include <fmt/format.h>

#include "grasscoh/error.hpp"

namespace grasscoh {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BundleExpr parse() {
    BundleExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(fmt::format("unexpected '{}'", text_[pos_]));
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(pos_ < text_.size() ? fmt::format("expected '{}' but found '{}'", c, text_[pos_])
                                             : fmt::format("expected '{}' at end of input", c));
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    const std::size_t from = text_[start] == '+' ? start + 1 : start;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + from, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  // '(' INT ')' after a factor; leaves the position untouched otherwise.
  std::optional<int> twist_suffix() {
    skip_ws();
    if (peek() != '(') return std::nullopt;
    std::size_t probe = pos_ + 1;
    while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe]))) ++probe;
    if (probe < text_.size() && (text_[probe] == '-' || text_[probe] == '+')) ++probe;
    if (probe >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[probe]))) {
      fail("'(' after a bundle must start an integer twist");
    }
    expect('(');
    const int t = integer();
    expect(')');
    return t;
  }

  BundleExpr expr() {
    BundleExpr e = term();
    while (accept('+')) e += term();
    return e;
  }

  BundleExpr term() {
    BundleExpr e = factor();
    while (accept('*')) e = tensor(e, factor());
    return e;
  }

  BundleExpr factor() {
    struct Prefix {
      bool is_sym;
      int degree;
      std::size_t at;
    };
    std::vector<Prefix> prefixes;
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (text_.substr(pos_).starts_with("Sym") || text_.substr(pos_).starts_with("Wedge")) {
        const std::string word = identifier();
        if (word != "Sym" && word != "Wedge") {
          pos_ = at;
          fail(fmt::format("unknown identifier '{}'", word));
        }
        expect('^');
        const std::size_t deg_at = pos_;
        const int degree = integer();
        if (degree < 0) {
          pos_ = deg_at;
          fail(fmt::format("{}^{}: degree must be non-negative", word, degree));
        }
        prefixes.push_back({word == "Sym", degree, at});
        continue;
      }
      break;
    }
    BundleExpr e = primary();
    for (auto it = prefixes.rbegin(); it != prefixes.rend(); ++it) {
      try {
        e = it->is_sym ? sym(e, it->degree) : ext(e, it->degree);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& err) {
        // Keep the error category but attach the operator's position.
        const std::string where = fmt::format(" (at position {})", it->at);
        if (dynamic_cast<const UnsupportedPlethysm*>(&err)) throw UnsupportedPlethysm(err.what() + where);
        if (dynamic_cast<const DegreeOutOfRange*>(&err)) throw DegreeOutOfRange(err.what() + where);
        throw;
      }
    }
    while (auto t = twist_suffix()) e = twist(e, *t);
    return e;
  }

  BundleExpr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      BundleExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const int n = integer();
      return n == 0 ? BundleExpr() : bundles::trivial(n);
    }
    const std::size_t at = pos_;
    const std::string word = identifier();
    if (word.empty()) fail(c == '\0' ? "unexpected end of input" : fmt::format("unexpected '{}'", c));
    if (word == "O") return bundles::O();
    if (word == "Q") return bundles::Q();
    if (word == "S") return bundles::S();
    if (word == "Sd") return bundles::Sd();
    if (word == "dual") {
      expect('(');
      BundleExpr e = expr();
      expect(')');
      return dual(e);
    }
    if (word == "W") {
      expect('(');
      std::array<int, 2> a{};
      std::array<int, 3> b{};
      a[0] = integer();
      expect(',');
      a[1] = integer();
      expect(';');
      b[0] = integer();
      expect(',');
      b[1] = integer();
      expect(',');
      b[2] = integer();
      const std::size_t close = pos_;
      expect(')');
      try {
        return BundleExpr(IrreducibleWeight(a, b));
      } catch (const InvalidPartition& err) {
        throw ParseError(close, err.what());
      }
    }
    pos_ = at;
    fail(fmt::format("unknown identifier '{}'", word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BundleExpr parse_bundle(std::string_view text) { return Parser(text).parse(); }

}  // namespace grasscoh
