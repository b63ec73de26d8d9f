// Recursive-descent parser for the preradical expression language.

#include <cctype>
#include <charconv>

#include "qpers/errors.hpp"
#include "qpers/preradical.hpp"

namespace qpers {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PreradicalExpr expr() {
    const std::size_t start = skip();
    const std::string word = identifier();
    if (word == "alpha" || word == "omega") {
      expect('(');
      std::string anchor = vertex();
      expect(',');
      SubspaceSpec n = subspace();
      expect(')');
      return word == "alpha" ? PreradicalExpr::alpha(std::move(anchor), std::move(n))
                             : PreradicalExpr::omega(std::move(anchor), std::move(n));
    }
    if (word == "meet" || word == "join" || word == "prod" || word == "coprod") {
      expect('(');
      PreradicalExpr a = expr();
      expect(',');
      PreradicalExpr b = expr();
      expect(')');
      if (word == "meet") return PreradicalExpr::meet(std::move(a), std::move(b));
      if (word == "join") return PreradicalExpr::join(std::move(a), std::move(b));
      if (word == "prod") return PreradicalExpr::prod(std::move(a), std::move(b));
      return PreradicalExpr::coprod(std::move(a), std::move(b));
    }
    throw ParseError(word.empty() ? "expected an expression" : "unknown operator '" + word + "'", start);
  }

  SubspaceSpec subspace() {
    const std::size_t start = skip();
    if (peek() == '[') {
      SubspaceSpec spec{SubspaceSpec::Kind::Span, {}};
      expect('[');
      do {
        spec.rows.push_back(row());
      } while (accept(','));
      expect(']');
      const std::size_t width = spec.rows.front().size();
      for (const auto& r : spec.rows)
        if (r.size() != width) throw ParseError("rows of a subspace literal differ in length", start);
      return spec;
    }
    const std::string word = identifier();
    if (word == "full") return SubspaceSpec::full();
    if (word == "zero") return SubspaceSpec::zero();
    throw ParseError("expected 'full', 'zero' or a list of rows", start);
  }

  void finish() {
    if (skip() != text_.size()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  std::vector<Scalar> row() {
    expect('[');
    std::vector<Scalar> out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(']');
    return out;
  }

  Scalar integer() {
    const std::size_t start = skip();
    std::size_t end = start;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    Scalar value = 0;
    const bool plus = start < text_.size() && text_[start] == '+';
    const char* first = text_.data() + start + (plus ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end || end == start) throw ParseError("expected an integer", start);
    pos_ = end;
    return value;
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // vertex ids: any run of characters other than whitespace and punctuation
  // used by the grammar
  std::string vertex() {
    const std::size_t start = skip();
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')' || c == '[' || c == ']')
        break;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a vertex id", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PreradicalExpr parse_expr(std::string_view text) {
  Parser p(text);
  PreradicalExpr e = p.expr();
  p.finish();
  return e;
}

SubspaceSpec parse_subspace(std::string_view text) {
  Parser p(text);
  SubspaceSpec s = p.subspace();
  p.finish();
  return s;
}

}  // namespace qpers
