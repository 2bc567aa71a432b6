#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "errors.hpp"

namespace rdaopt {

struct Expr::Node {
  enum class Kind {
    Number, VarX, VarT, Pi,
    Neg,
    Add, Sub, Mul, Div, Pow,
    Sin, Cos, Exp, Abs,
    Piecewise
  };

  struct Branch {
    std::shared_ptr<const Node> lhs;
    CmpOp op;
    std::shared_ptr<const Node> rhs;
    std::shared_ptr<const Node> value;
  };

  Kind kind;
  double number = 0.0;
  std::shared_ptr<const Node> a, b;  // unary child in a; binary children in a,b
  std::vector<Branch> branches;      // Piecewise only
  std::shared_ptr<const Node> fallback;
};

namespace {

using Node = Expr::Node;
using Kind = Node::Kind;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_leaf(Kind k, double num = 0.0) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->number = num;
  return n;
}

NodePtr make_unary(Kind k, NodePtr child) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(child);
  return n;
}

NodePtr make_binary(Kind k, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return n;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over raw characters, tracking byte offsets.

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(0, "syntax error at byte 0: empty expression");
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, "syntax error at byte " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        NodePtr rhs = parse_term();
        lhs = make_binary(c == '+' ? Kind::Add : Kind::Sub, std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        NodePtr rhs = parse_unary();
        lhs = make_binary(c == '*' ? Kind::Mul : Kind::Div, std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (consume('-')) return make_unary(Kind::Neg, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (peek() == '^') {
      ++pos_;
      return make_binary(Kind::Pow, std::move(base), parse_unary());
    }
    return base;
  }

  NodePtr parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_expr();
      expect(')', "to close '('");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail("expected a number, name, or '('");
  }

  NodePtr parse_number() {
    skip_ws();
    const char* begin = src_.data() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    if (!std::isfinite(v)) fail("number out of range");
    pos_ += static_cast<std::size_t>(end - begin);
    return make_leaf(Kind::Number, v);
  }

  NodePtr parse_identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return make_leaf(Kind::VarX);
    if (name == "t") return make_leaf(Kind::VarT);
    if (name == "pi") return make_leaf(Kind::Pi);
    if (name == "sin" || name == "cos" || name == "exp" || name == "abs") {
      expect('(', "after function name");
      NodePtr arg = parse_expr();
      expect(')', "to close function call");
      Kind k = name == "sin"   ? Kind::Sin
               : name == "cos" ? Kind::Cos
               : name == "exp" ? Kind::Exp
                               : Kind::Abs;
      return make_unary(k, std::move(arg));
    }
    if (name == "pw") return parse_piecewise();
    pos_ = start;
    throw ParseError(start, "unknown identifier '" + std::string(name) + "' at byte " +
                                std::to_string(start));
  }

  // pw(cond : value ; cond : value ; default)
  NodePtr parse_piecewise() {
    expect('(', "after 'pw'");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Piecewise;
    for (;;) {
      NodePtr e = parse_expr();
      CmpOp op;
      if (try_cmp(op)) {
        Node::Branch br;
        br.lhs = std::move(e);
        br.op = op;
        br.rhs = parse_expr();
        expect(':', "after piecewise condition");
        br.value = parse_expr();
        node->branches.push_back(std::move(br));
        expect(';', "after piecewise branch");
      } else {
        node->fallback = std::move(e);
        expect(')', "to close 'pw('");
        return node;
      }
    }
  }

  bool try_cmp(CmpOp& op) {
    char c = peek();
    if (c == '<') {
      ++pos_;
      op = consume('=') ? CmpOp::Le : CmpOp::Lt;
      return true;
    }
    if (c == '>') {
      ++pos_;
      op = consume('=') ? CmpOp::Ge : CmpOp::Gt;
      return true;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Evaluation.

double eval_node(const Node& n, double x, double t) {
  switch (n.kind) {
    case Kind::Number: return n.number;
    case Kind::VarX: return x;
    case Kind::VarT: return t;
    case Kind::Pi: return M_PI;
    case Kind::Neg: return -eval_node(*n.a, x, t);
    case Kind::Add: return eval_node(*n.a, x, t) + eval_node(*n.b, x, t);
    case Kind::Sub: return eval_node(*n.a, x, t) - eval_node(*n.b, x, t);
    case Kind::Mul: return eval_node(*n.a, x, t) * eval_node(*n.b, x, t);
    case Kind::Div: {
      double num = eval_node(*n.a, x, t);
      double den = eval_node(*n.b, x, t);
      if (den == 0.0)
        throw EvalError(x, t, "division by zero at (x=" + std::to_string(x) +
                                  ", t=" + std::to_string(t) + ")");
      return num / den;
    }
    case Kind::Pow: return std::pow(eval_node(*n.a, x, t), eval_node(*n.b, x, t));
    case Kind::Sin: return std::sin(eval_node(*n.a, x, t));
    case Kind::Cos: return std::cos(eval_node(*n.a, x, t));
    case Kind::Exp: return std::exp(eval_node(*n.a, x, t));
    case Kind::Abs: return std::abs(eval_node(*n.a, x, t));
    case Kind::Piecewise: {
      for (const auto& br : n.branches) {
        double l = eval_node(*br.lhs, x, t);
        double r = eval_node(*br.rhs, x, t);
        bool hit = false;
        switch (br.op) {
          case CmpOp::Le: hit = l <= r; break;
          case CmpOp::Lt: hit = l < r; break;
          case CmpOp::Ge: hit = l >= r; break;
          case CmpOp::Gt: hit = l > r; break;
        }
        if (hit) return eval_node(*br.value, x, t);
      }
      return eval_node(*n.fallback, x, t);
    }
  }
  throw Error("expr: corrupt node");
}

// ---------------------------------------------------------------------------
// Printing with minimal parentheses.

int precedence(const Node& n) {
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;  // atoms and calls never need parentheses
  }
}

std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int min_prec, std::string& out) {
  if (precedence(child) < min_prec) {
    out += '(';
    print_node(child, out);
    out += ')';
  } else {
    print_node(child, out);
  }
}

const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Le: return "<=";
    case CmpOp::Lt: return "<";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Number: out += format_number(n.number); return;
    case Kind::VarX: out += 'x'; return;
    case Kind::VarT: out += 't'; return;
    case Kind::Pi: out += "pi"; return;
    case Kind::Neg:
      out += '-';
      print_child(*n.a, 3, out);
      return;
    case Kind::Add:
    case Kind::Sub:
      print_child(*n.a, 1, out);
      out += (n.kind == Kind::Add) ? '+' : '-';
      print_child(*n.b, 2, out);  // right operand needs parens at equal precedence
      return;
    case Kind::Mul:
    case Kind::Div:
      print_child(*n.a, 2, out);
      out += (n.kind == Kind::Mul) ? '*' : '/';
      print_child(*n.b, 3, out);
      return;
    case Kind::Pow:
      print_child(*n.a, 5, out);  // left operand of ^ binds looser: parenthesize non-atoms
      out += '^';
      print_child(*n.b, 3, out);  // unary minus and nested powers attach without parens
      return;
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Abs: {
      const char* f = n.kind == Kind::Sin   ? "sin"
                      : n.kind == Kind::Cos ? "cos"
                      : n.kind == Kind::Exp ? "exp"
                                            : "abs";
      out += f;
      out += '(';
      print_node(*n.a, out);
      out += ')';
      return;
    }
    case Kind::Piecewise:
      out += "pw(";
      for (const auto& br : n.branches) {
        print_node(*br.lhs, out);
        out += cmp_text(br.op);
        print_node(*br.rhs, out);
        out += ':';
        print_node(*br.value, out);
        out += ';';
      }
      print_node(*n.fallback, out);
      out += ')';
      return;
  }
}

bool nodes_equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Number: return a->number == b->number;
    case Kind::VarX:
    case Kind::VarT:
    case Kind::Pi: return true;
    case Kind::Piecewise: {
      if (a->branches.size() != b->branches.size()) return false;
      for (std::size_t i = 0; i < a->branches.size(); ++i) {
        const auto& ba = a->branches[i];
        const auto& bb = b->branches[i];
        if (ba.op != bb.op) return false;
        if (!nodes_equal(ba.lhs.get(), bb.lhs.get())) return false;
        if (!nodes_equal(ba.rhs.get(), bb.rhs.get())) return false;
        if (!nodes_equal(ba.value.get(), bb.value.get())) return false;
      }
      return nodes_equal(a->fallback.get(), b->fallback.get());
    }
    default:
      return nodes_equal(a->a.get(), b->a.get()) && nodes_equal(a->b.get(), b->b.get());
  }
}

}  // namespace

struct ExprBuilder {
  static Expr wrap(NodePtr n) { return Expr(std::move(n)); }
};

Expr Expr::parse(std::string_view source) {
  Parser p(source);
  return ExprBuilder::wrap(p.parse());
}

double Expr::eval(double x, double t) const {
  if (!root_) throw Error("expr: evaluating an empty expression");
  return eval_node(*root_, x, t);
}

std::string Expr::str() const {
  if (!root_) return "";
  std::string out;
  print_node(*root_, out);
  return out;
}

bool Expr::operator==(const Expr& other) const {
  return nodes_equal(root_.get(), other.root_.get());
}

Field sample_on_grid(const Expr& expr, const Grid1D& grid) {
  Field f(grid);
  for (int n = 0; n < grid.nt; ++n) {
    auto level = f.level(n);
    const double t = grid.t(n);
    for (int i = 0; i < grid.nx; ++i) {
      try {
        level[i] = expr.eval(grid.x(i), t);
      } catch (const EvalError& e) {
        throw EvalError(grid.x(i), t,
                        std::string(e.what()) + " while sampling node (i=" +
                            std::to_string(i) + ", n=" + std::to_string(n) + ")");
      }
    }
  }
  return f;
}

SpaceProfile sample_profile(const Expr& expr, const Grid1D& grid) {
  SpaceProfile p(grid);
  for (int i = 0; i < grid.nx; ++i) {
    try {
      p.values[i] = expr.eval(grid.x(i), 0.0);
    } catch (const EvalError& e) {
      throw EvalError(grid.x(i), 0.0,
                      std::string(e.what()) + " while sampling node i=" + std::to_string(i));
    }
  }
  return p;
}

}  // namespace rdaopt
