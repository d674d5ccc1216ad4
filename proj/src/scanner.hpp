#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "tsc/formula.hpp"
#include "tsc/ordinal.hpp"

namespace tsc::detail {

// Cursor over whitespace-insensitive ASCII input shared by the grammars.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool at_end() { return peek() == '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'" + found());
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Natural natural() {
    if (!at_digit()) fail("expected a natural number" + found());
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

 private:
  std::string found() {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Ordinal parse_ordinal(Scanner& in);
Formula parse_formula(Scanner& in);

}  // namespace tsc::detail
