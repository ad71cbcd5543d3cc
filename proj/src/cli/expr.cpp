#include "posetkit/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>

#include "posetkit/constructors.hpp"
#include "posetkit/json_io.hpp"

namespace posetkit {

namespace {

using Op = PosetExpr::Op;

enum class Shape { Int, IntInt, Expr, IntExpr, ExprExpr, ExprList, Path };

struct Keyword {
  const char* name;
  Op op;
  Shape shape;
};

constexpr std::array<Keyword, 13> kKeywords{{
    {"boolean", Op::Boolean, Shape::Int},
    {"butterfly", Op::Butterfly, Shape::Int},
    {"chain", Op::Chain, Shape::Int},
    {"polygon", Op::Polygon, Shape::Int},
    {"cubical", Op::Cubical, Shape::Int},
    {"subspace", Op::Subspace, Shape::IntInt},
    {"sigma_star", Op::SigmaStar, Shape::Expr},
    {"sigma", Op::Sigma, Shape::Expr},
    {"dual", Op::Dual, Shape::Expr},
    {"ksum", Op::KSum, Shape::IntExpr},
    {"boxsum", Op::BoxSum, Shape::ExprList},
    {"segre", Op::Segre, Shape::ExprExpr},
    {"load", Op::Load, Shape::Path},
}};

const Keyword& keyword(Op op) {
  for (const auto& k : kKeywords)
    if (k.op == op) return k;
  throw std::logic_error("unknown operator");
}

std::vector<std::string> all_keywords() {
  std::vector<std::string> out;
  for (const auto& k : kKeywords) out.emplace_back(k.name);
  return out;
}

std::string message(std::size_t offset, const std::vector<std::string>& expected,
                    const std::string& found) {
  std::string s = "parse error at offset " + std::to_string(offset) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += i + 1 == expected.size() ? " or " : ", ";
    s += expected[i];
  }
  return s + ", found " + found;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PosetExpr parse_all() {
    PosetExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail({"end of input"});
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), found());
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail({std::string(1, c)});
    ++pos_;
  }

  // Consumes ',' or ')'; true on ','.
  bool comma_or_close() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      return true;
    }
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return false;
    }
    fail({",", ")"});
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail({"INT"});
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      throw ParseError(start, {"INT"}, "integer literal out of range");
    }
    return value;
  }

  std::string path() {
    skip();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '"') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail({"\""});
        char c = text_[pos_++];
        if (c == '"') break;
        if (c == '\\') {
          if (pos_ >= text_.size()) fail({"escaped character"});
          c = text_[pos_++];
        }
        out += c;
      }
    } else {
      while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ')' || c == '(' || c == ',' ||
            c == '"')
          break;
        out += c;
        ++pos_;
      }
    }
    if (out.empty()) fail({"PATH"});
    return out;
  }

  PosetExpr expr() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::islower(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    const Keyword* kw = nullptr;
    for (const auto& k : kKeywords)
      if (word == k.name) kw = &k;
    if (!kw) {
      pos_ = start;
      fail(all_keywords());
    }
    PosetExpr e;
    e.op = kw->op;
    expect('(');
    switch (kw->shape) {
      case Shape::Int:
        e.ints.push_back(integer());
        break;
      case Shape::IntInt:
        e.ints.push_back(integer());
        expect(',');
        e.ints.push_back(integer());
        break;
      case Shape::Expr:
        e.args.push_back(expr());
        break;
      case Shape::IntExpr:
        e.ints.push_back(integer());
        expect(',');
        e.args.push_back(expr());
        break;
      case Shape::ExprExpr:
        e.args.push_back(expr());
        expect(',');
        e.args.push_back(expr());
        break;
      case Shape::ExprList:
        e.args.push_back(expr());
        expect(',');
        do e.args.push_back(expr());
        while (comma_or_close());
        e.span = {start, pos_};
        return e;
      case Shape::Path:
        e.path = path();
        break;
    }
    expect(')');
    e.span = {start, pos_};
    return e;
  }
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

GradedPoset apply(const PosetExpr& e) {
  auto arg = [&](std::size_t i) { return eval(e.args.at(i)); };
  switch (e.op) {
    case Op::Boolean: return boolean(e.ints[0]);
    case Op::Butterfly: return butterfly(e.ints[0]);
    case Op::Chain: return chain(e.ints[0]);
    case Op::Polygon: return polygon(e.ints[0]);
    case Op::Cubical: return cubical(e.ints[0]);
    case Op::Subspace: return subspace_lattice(e.ints[0], e.ints[1]);
    case Op::SigmaStar: return dual_suspension(arg(0));
    case Op::Sigma: return suspension(arg(0));
    case Op::Dual: return dual(arg(0));
    case Op::KSum: return k_summation(arg(0), e.ints[0]);
    case Op::BoxSum: {
      std::vector<GradedPoset> parts;
      for (std::size_t i = 0; i < e.args.size(); ++i) parts.push_back(arg(i));
      return box_sum(parts);
    }
    case Op::Segre: return rank_product(arg(0), arg(1));
    case Op::Load: return load_poset(e.path);
  }
  throw std::logic_error("unknown operator");
}

// Marks errors that already carry a location so outer nodes pass them through.
struct Located : PosetError {
  using PosetError::PosetError;
};

}  // namespace

bool PosetExpr::operator==(const PosetExpr& other) const {
  return op == other.op && ints == other.ints && args == other.args && path == other.path;
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error(message(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

PosetExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const PosetExpr& e) {
  std::string out = std::string(keyword(e.op).name) + "(";
  std::vector<std::string> parts;
  for (int i : e.ints) parts.push_back(std::to_string(i));
  for (const auto& a : e.args) parts.push_back(print(a));
  if (e.op == Op::Load) parts.push_back(quote(e.path));
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + ")";
}

GradedPoset eval(const PosetExpr& e) {
  try {
    return apply(e);
  } catch (const Located&) {
    throw;
  } catch (const PosetError& err) {
    throw Located(err.kind(), "in " + print(e) + " at bytes " + std::to_string(e.span.begin) +
                                  ".." + std::to_string(e.span.end) + ": " + err.detail());
  }
}

}  // namespace posetkit
