#include "schurpair/expr.hpp"

#include <cctype>

namespace schurpair {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Prime p, const Catalog& catalog) : p_(p), catalog_(catalog), ids_(catalog.ids()) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      columns_.push_back(i + 1);
    }
    end_column_ = text.size() + 1;
  }

  GroupSpec parse() {
    if (chars_.empty()) fail("a group atom");
    term();
    while (peek('x')) {
      ++pos_;
      term();
    }
    if (pos_ != chars_.size()) fail("'x' or end of input");
    AbelianPGroup tail(p_, parts_);
    if (base_) return GroupSpec::product(*base_, std::move(tail));
    return GroupSpec::abelian(std::move(tail));
  }

 private:
  void term() {
    const std::size_t start = pos_;
    Atom atom = parse_atom();
    int copies = 1;
    if (peek('^')) {
      ++pos_;
      expect('(');
      copies = integer();
      expect(')');
    }
    if (atom.id) {
      if (base_ || copies > 1) {
        throw Error(ErrorKind::TwoNonabelianBases,
                    "at most one catalog group may appear (column " + std::to_string(column(start)) + ")");
      }
      base_ = catalog_.lookup(*atom.id, p_);
      return;
    }
    if (atom.exponent > 0) parts_.insert(parts_.end(), static_cast<std::size_t>(copies), atom.exponent);
  }

  struct Atom {
    std::optional<std::string> id;
    int exponent = 0;  // 0 for the trivial group
  };

  Atom parse_atom() {
    if (peek('1') && !digit_at(pos_ + 1)) {
      ++pos_;
      return {};
    }
    if (const auto id = catalog_id()) {
      pos_ += id->size();
      return {*id, 0};
    }
    if (peek('Z')) {
      ++pos_;
      expect('(');
      expect('p');
      int e = 1;
      if (peek('^')) {
        ++pos_;
        e = integer();
      }
      expect(')');
      return {std::nullopt, e};
    }
    fail("'Z(p)', 'Z(p^k)', '1' or a catalog id");
  }

  std::optional<std::string> catalog_id() const {
    std::optional<std::string> best;
    for (const auto& id : ids_) {
      if (id.size() > chars_.size() - pos_) continue;
      if (std::string_view(chars_).substr(pos_, id.size()) != id) continue;
      if (!best || id.size() > best->size()) best = id;
    }
    return best;
  }

  int integer() {
    if (!digit_at(pos_)) fail("a positive integer");
    const std::size_t start = pos_;
    long value = 0;
    while (digit_at(pos_)) {
      value = value * 10 + (chars_[pos_] - '0');
      if (value > 1'000'000) fail_at(start, "an integer below 1000000");
      ++pos_;
    }
    if (value == 0) fail_at(start, "a positive integer");
    return static_cast<int>(value);
  }

  bool digit_at(std::size_t i) const {
    return i < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[i]));
  }
  bool peek(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("'") + c + "'");
    ++pos_;
  }

  std::size_t column(std::size_t i) const { return i < columns_.size() ? columns_[i] : end_column_; }

  [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected); }

  [[noreturn]] void fail_at(std::size_t i, const std::string& expected) const {
    const std::string found = i < chars_.size() ? std::string("'") + chars_[i] + "'" : "end of input";
    throw Error(ErrorKind::SyntaxError,
                "column " + std::to_string(column(i)) + ": expected " + expected + ", found " + found);
  }

  Prime p_;
  const Catalog& catalog_;
  std::vector<std::string> ids_;
  std::string chars_;
  std::vector<std::size_t> columns_;
  std::size_t end_column_ = 1;
  std::size_t pos_ = 0;
  std::optional<BaseGroup> base_;
  Partition parts_;
};

}  // namespace

GroupSpec parse_group_expr(std::string_view text, Prime p, const Catalog& catalog) {
  return Parser(text, p, catalog).parse();
}

}  // namespace schurpair
