#include <cctype>
#include <string>

#include "coxcensus/errors.hpp"
#include "coxcensus/presentation.hpp"

namespace coxcensus {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    expect_keyword("gens");
    std::vector<std::string> names;
    skip_ws();
    if (peek() != ';') {
      for (;;) {
        names.push_back(identifier());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(';');
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) fail("duplicate generator '" + names[i] + "'");
    names_ = names;

    expect_keyword("rels");
    std::vector<Word> rels;
    skip_ws();
    if (!at_end() && peek() != ';') {
      for (;;) {
        rels.push_back(relator());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_ws();
    if (peek() == ';') ++pos_;
    skip_ws();
    if (!at_end()) fail("unexpected trailing text");
    return Presentation(std::move(names), std::move(rels));
  }

  Word standalone_word(const std::vector<std::string>& names) {
    names_ = names;
    Word w = word();
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view kw) {
    skip_ws();
    std::size_t start = pos_;
    std::string got;
    while (!at_end() && ident_char(peek())) got += text_[pos_++];
    if (got != kw) fail_at(start, "expected '" + std::string(kw) + "'");
  }

  std::string identifier() {
    skip_ws();
    if (!ident_start(peek())) fail("expected a generator name");
    std::string s;
    while (!at_end() && ident_char(peek())) s += text_[pos_++];
    return s;
  }

  Word relator() {
    Word lhs = word();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Word rhs = word();
      return lhs * rhs.inverse();
    }
    return lhs;
  }

  bool word_follows() {
    skip_ws();
    char c = peek();
    return ident_start(c) || c == '(' || c == '1';
  }

  Word word() {
    Word w;
    bool any = false;
    while (word_follows()) {
      w *= factor();
      any = true;
    }
    if (!any) fail("expected a word");
    return w;
  }

  // "f1f2" is split by repeatedly taking the longest declared name that is a
  // prefix of the remaining run; the exponent binds to the last piece.
  Word factor() {
    skip_ws();
    Word base;
    Word head;
    if (peek() == '(') {
      ++pos_;
      base = word_or_identity();
      expect(')');
    } else if (peek() == '1') {
      ++pos_;
      if (!at_end() && ident_char(peek())) fail("unexpected character after 1");
    } else {
      std::size_t start = pos_;
      std::string run;
      while (!at_end() && ident_char(peek())) run += text_[pos_++];
      std::vector<int> pieces;
      std::size_t at = 0;
      while (at < run.size()) {
        std::size_t best = 0;
        int best_g = 0;
        for (std::size_t g = 0; g < names_.size(); ++g) {
          const auto& nm = names_[g];
          if (nm.size() > best && run.compare(at, nm.size(), nm) == 0) {
            best = nm.size();
            best_g = static_cast<int>(g + 1);
          }
        }
        if (best == 0) fail_at(start + at, "undeclared generator in '" + run.substr(at) + "'");
        pieces.push_back(best_g);
        at += best;
      }
      head = Word(std::vector<int>(pieces.begin(), pieces.end() - 1));
      base = Word{pieces.back()};
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t epos = pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
      if (digits.empty()) fail("expected an exponent");
      if (digits.size() > 9) fail_at(epos, "exponent too large");
      long k = std::stol(digits);
      if (neg) {
        if (k != 1) fail_at(epos, "negative exponents other than -1 are not allowed");
        return head * base.inverse();
      }
      if (k < 1) fail_at(epos, "exponent must be at least 1");
      return head * base.power(k);
    }
    return head * base;
  }

  Word word_or_identity() {
    Word w;
    while (word_follows()) w *= factor();
    return w;
  }
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, const Presentation& p) {
  return Parser(text).standalone_word(p.generator_names());
}

}  // namespace coxcensus
