#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "dimfree/errors.hpp"
#include "dimfree/geometry.hpp"
#include "dimfree/hypergroup_maps.hpp"
#include "dimfree/stp.hpp"
#include "dimfree/weights.hpp"

namespace dimfree::cli {

namespace {

const std::set<std::string> kWordOps = {"ltimes", "rtimes", "circ", "dk",   "pstp",
                                        "badd",   "bsub",   "hadd", "hsub"};
const std::set<std::string> kFunctions = {"box", "sym", "alt", "proj", "bridge", "eye"};

struct Tok {
  enum class T { Num, Name, Op, LParen, RParen, Comma, Quote, End };
  T type;
  std::string text;
  std::size_t column;
  double value = 0.0;
};

[[noreturn]] void fail_at(std::size_t column, const std::string& msg) {
  throw ParseError("column " + std::to_string(column) + ": " + msg, column);
}

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
          j = k;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        }
      }
      double v = 0.0;
      const auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, v);
      if (ec != std::errc() || p != s.data() + j || !std::isfinite(v)) {
        fail_at(col, "malformed number '" + s.substr(i, j - i) + "'");
      }
      out.push_back({Tok::T::Num, s.substr(i, j - i), col, v});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word = s.substr(i, j - i);
      out.push_back({kWordOps.count(word) ? Tok::T::Op : Tok::T::Name, std::move(word), col});
      i = j;
    } else if (c == '+' || c == '-' || c == '*') {
      out.push_back({Tok::T::Op, std::string(1, c), col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::T::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::T::RParen, ")", col});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::T::Comma, ",", col});
      ++i;
    } else if (c == '\'') {
      out.push_back({Tok::T::Quote, "'", col});
      ++i;
    } else {
      fail_at(col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::T::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  NodePtr parse() {
    NodePtr n = expr();
    if (peek().type != Tok::T::End) fail_at(peek().column, "unexpected '" + peek().text + "'");
    return n;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  const Tok& next() { return toks_[pos_++]; }

  void expect(Tok::T t, const char* what) {
    if (peek().type != t) {
      fail_at(peek().column, std::string("expected ") + what +
                                 (peek().type == Tok::T::End ? " at end of input"
                                                             : ", got '" + peek().text + "'"));
    }
    ++pos_;
  }

  NodePtr expr() {
    NodePtr lhs = unary();
    std::string chain_op;
    while (peek().type == Tok::T::Op) {
      const Tok& op = next();
      if (chain_op.empty()) {
        chain_op = op.text;
      } else if (op.text != chain_op) {
        fail_at(op.column, "mixed operators '" + chain_op + "' and '" + op.text +
                               "' need parentheses");
      }
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Binary;
      n->column = op.column;
      n->text = op.text;
      n->args.push_back(std::move(lhs));
      n->args.push_back(unary());
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr unary() {
    if (peek().type == Tok::T::Op && peek().text == "-") {
      const Tok& t = next();
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Negate;
      n->column = t.column;
      n->args.push_back(unary());
      return n;
    }
    NodePtr p = primary();
    while (peek().type == Tok::T::Quote) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Transpose;
      n->column = next().column;
      n->args.push_back(std::move(p));
      p = std::move(n);
    }
    return p;
  }

  NodePtr primary() {
    const Tok& t = peek();
    auto n = std::make_unique<Node>();
    n->column = t.column;
    switch (t.type) {
      case Tok::T::Num:
        n->kind = Node::Kind::Number;
        n->number = t.value;
        n->text = t.text;
        ++pos_;
        return n;
      case Tok::T::Name:
        ++pos_;
        n->text = t.text;
        if (peek().type == Tok::T::LParen) {
          if (!kFunctions.count(n->text)) fail_at(n->column, "unknown function '" + n->text + "'");
          ++pos_;
          n->kind = Node::Kind::Call;
          n->args.push_back(expr());
          while (peek().type == Tok::T::Comma) {
            ++pos_;
            n->args.push_back(expr());
          }
          expect(Tok::T::RParen, "')'");
          return n;
        }
        n->kind = Node::Kind::Name;
        return n;
      case Tok::T::LParen: {
        ++pos_;
        NodePtr inner = expr();
        expect(Tok::T::RParen, "')'");
        return inner;
      }
      case Tok::T::End:
        fail_at(t.column, "unexpected end of expression");
      default:
        fail_at(t.column, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

bool is_vec(const Mat& A) { return A.cols() == 1; }

Index integer_arg(const Mat& v, const Node& n, const char* fn) {
  if (v.size() != 1 || v(0, 0) != std::floor(v(0, 0)) || v(0, 0) < 1 || v(0, 0) > 1e15) {
    throw DomainError("column " + std::to_string(n.column) + ": " + fn +
                      " needs a positive integer argument");
  }
  return static_cast<Index>(v(0, 0));
}

void arity(const Node& n, std::size_t k) {
  if (n.args.size() != k) {
    throw ParseError("column " + std::to_string(n.column) + ": " + n.text + " takes " +
                         std::to_string(k) + " argument" + (k == 1 ? "" : "s") + ", got " +
                         std::to_string(n.args.size()),
                     n.column);
  }
}

Mat binary(const std::string& op, const Mat& A, const Mat& B, const EvalOptions& opt) {
  if (op == "ltimes") return ltimes(A, B);
  if (op == "rtimes") return rtimes(A, B);
  if (op == "circ") return circ(A, B);
  if (op == "dk") return dk_stp(A, B, opt.weighted);
  if (op == "pstp") return pseudo_stp(A, B);
  if (op == "hadd") return hat_add(A, B);
  if (op == "hsub") return hat_sub(A, B);
  if (op == "badd" || op == "bsub") {
    const Sign sign = op == "badd" ? Sign::Plus : Sign::Minus;
    if (is_vec(A) && is_vec(B)) return as_column(sta_vec(as_hvec(A), as_hvec(B), StaKind::VecBar, sign));
    if (A.rows() == A.cols() && B.rows() == B.cols()) return sta(A, B, StaKind::SqBar, sign);
    throw ShapeError("bar addition needs two column vectors or two square matrices");
  }
  if (op == "*") {
    if (A.size() == 1) return A(0, 0) * B;
    if (B.size() == 1) return B(0, 0) * A;
    if (A.cols() != B.rows()) throw ShapeError("classical product needs cols(A) = rows(B)");
    return A * B;
  }
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw ShapeError("classical '" + op + "' needs equal shapes");
  }
  return op == "+" ? Mat(A + B) : Mat(A - B);
}

}  // namespace

NodePtr parse_expression(const std::string& src) { return Parser(lex(src)).parse(); }

Mat evaluate(const Node& n, const Bindings& env, const EvalOptions& opt) {
  switch (n.kind) {
    case Node::Kind::Number:
      return Mat::Constant(1, 1, n.number);
    case Node::Kind::Name: {
      const auto it = env.find(n.text);
      if (it == env.end()) {
        throw DomainError("column " + std::to_string(n.column) + ": unbound identifier '" +
                          n.text + "'");
      }
      return it->second;
    }
    case Node::Kind::Negate:
      return -evaluate(*n.args[0], env, opt);
    case Node::Kind::Transpose:
      return evaluate(*n.args[0], env, opt).transpose();
    case Node::Kind::Binary: {
      const Mat A = evaluate(*n.args[0], env, opt);
      const Mat B = evaluate(*n.args[1], env, opt);
      try {
        return binary(n.text, A, B, opt);
      } catch (const ShapeError& e) {
        throw ShapeError("column " + std::to_string(n.column) + ": '" + n.text + "' on " +
                         to_string(shape_of(A)) + " and " + to_string(shape_of(B)) + ": " +
                         e.what());
      }
    }
    case Node::Kind::Call: {
      const std::string& f = n.text;
      if (f == "box" || f == "sym" || f == "alt") {
        arity(n, 1);
        const Mat A = evaluate(*n.args[0], env, opt);
        if (f == "box") return box(A);
        return sym_alt(A, f == "sym" ? SymAltMode::Symmetrize : SymAltMode::Alternate);
      }
      if (f == "eye") {
        arity(n, 1);
        const Index k = integer_arg(evaluate(*n.args[0], env, opt), n, "eye");
        return Mat::Identity(k, k);
      }
      if (f == "bridge") {
        arity(n, 2);
        const Index a = integer_arg(evaluate(*n.args[0], env, opt), n, "bridge");
        const Index b = integer_arg(evaluate(*n.args[1], env, opt), n, "bridge");
        return bridge(a, b, opt.weighted);
      }
      arity(n, 2);  // proj(n, E)
      const Index k = integer_arg(evaluate(*n.args[0], env, opt), n, "proj");
      const Mat x = evaluate(*n.args[1], env, opt);
      if (!is_vec(x)) {
        throw ShapeError("column " + std::to_string(n.column) + ": proj needs a column vector, got " +
                         to_string(shape_of(x)));
      }
      return as_column(project(as_hvec(x), k).x0);
    }
  }
  throw DomainError("malformed expression");
}

Mat evaluate(const std::string& src, const Bindings& env, const EvalOptions& opt) {
  return evaluate(*parse_expression(src), env, opt);
}

namespace {
void collect(const Node& n, std::vector<std::string>& out) {
  if (n.kind == Node::Kind::Name) {
    for (const auto& s : out)
      if (s == n.text) return;
    out.push_back(n.text);
  }
  for (const auto& a : n.args) collect(*a, out);
}
}  // namespace

std::vector<std::string> free_names(const Node& node) {
  std::vector<std::string> out;
  collect(node, out);
  return out;
}

}  // namespace dimfree::cli
