#include "tga/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "tga/errors.hpp"

namespace tga::dsl {

long long Expr::eval(const std::map<std::string, long long>& env) const {
  switch (op) {
    case Op::Int:
      return value;
    case Op::Var: {
      auto it = env.find(name);
      if (it == env.end()) throw InvalidArgument("unbound constant '" + name + "'");
      return it->second;
    }
    case Op::Neg:
      return -args[0].eval(env);
    case Op::Add:
      return args[0].eval(env) + args[1].eval(env);
    case Op::Sub:
      return args[0].eval(env) - args[1].eval(env);
    case Op::Mul:
      return args[0].eval(env) * args[1].eval(env);
    case Op::Pow: {
      const long long b = args[0].eval(env), e = args[1].eval(env);
      if (e < 0) throw InvalidArgument("negative power in a constant expression");
      long long r = 1;
      for (long long i = 0; i < e; ++i) r *= b;
      return r;
    }
  }
  return 0;
}

namespace {

struct Token {
  enum class Type { Ident, Int, Punct, End };
  Type type = Type::End;
  std::string text;
  long long value = 0;
  int line = 1, column = 1;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.type = Token::Type::Ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.type = Token::Type::Int;
      t.text = s.substr(i, j - i);
      if (t.text.size() > 15) throw ParseError("integer literal too large", line, col);
      t.value = std::stoll(t.text);
      advance(j - i);
    } else if (std::string("{}[](),;:=*^+-").find(c) != std::string::npos) {
      t.type = Token::Type::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

struct PendingName {
  std::string name;
  int line, column;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Document document() {
    Document d;
    const Token& head = expect_ident("document kind");
    if (head.text == "group")
      d.kind = Document::Kind::Group;
    else if (head.text == "algebra")
      d.kind = Document::Kind::Algebra;
    else if (head.text == "sweep")
      d.kind = Document::Kind::Sweep;
    else
      fail(head, "expected 'group', 'algebra' or 'sweep'");
    d.name = expect_ident("document name").text;
    expect("{");
    if (peek().text == "}") fail(peek(), "empty body");
    bool have_generators = false;
    while (!(peek().type == Token::Type::Punct && peek().text == "}")) {
      const Token& key = expect_ident("declaration");
      if (key.text == "generators") {
        if (have_generators) fail(key, "generators declared twice");
        have_generators = true;
        expect(":");
        d.generators.push_back(expect_ident("generator name").text);
        while (accept(",")) d.generators.push_back(expect_ident("generator name").text);
        expect(";");
      } else if (key.text == "modulus") {
        if (d.modulus) fail(key, "modulus declared twice");
        expect(":");
        d.modulus = expr();
        expect(";");
      } else if (key.text == "order" || key.text == "relation") {
        expect(":");
        Rule r;
        r.line = key.line;
        if (accept("[")) {
          r.commutator = true;
          r.left = product();
          expect(",");
          r.right = product();
          expect("]");
        } else {
          r.left = product();
        }
        expect("=");
        r.rhs = product();
        expect(";");
        (key.text == "order" ? d.orders : d.relations).push_back(std::move(r));
        if (key.text == "order") check_order_lhs(d.orders.back(), key);
      } else if (key.text == "param") {
        Param p;
        p.name = expect_ident("parameter name").text;
        const Token& in = expect_ident("'in'");
        if (in.text != "in") fail(in, "expected 'in'");
        const Token& mu = expect_ident("'mu'");
        if (mu.text != "mu") fail(mu, "expected 'mu'");
        expect("(");
        p.root_order = expr();
        expect(")");
        expect(";");
        d.params.push_back(std::move(p));
      } else {
        fail(key, "unknown declaration '" + key.text + "'");
      }
    }
    expect("}");
    if (peek().type != Token::Type::End) fail(peek(), "trailing input after the closing brace");
    if (!have_generators) throw ParseError("missing generators declaration", toks_.front().line, toks_.front().column);
    resolve(d);
    return d;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg + (t.type == Token::Type::End ? " (at end of input)" : " near '" + t.text + "'"), t.line,
                     t.column);
  }
  bool accept(const std::string& p) {
    if (peek().type == Token::Type::Punct && peek().text == p) {
      next();
      return true;
    }
    return false;
  }
  void expect(const std::string& p) {
    if (!accept(p)) fail(peek(), "expected '" + p + "'");
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().type != Token::Type::Ident) fail(peek(), "expected " + what);
    return next();
  }

  Product product() {
    Product out;
    if (peek().type == Token::Type::Int && peek().value == 1) {
      next();
      return out;
    }
    out.push_back(factor());
    while (accept("*")) out.push_back(factor());
    return out;
  }

  Factor factor() {
    const Token& t = expect_ident("generator, parameter or w(k)");
    Factor f;
    if (t.text == "w") {
      f.kind = Factor::Kind::Root;
      f.name = "w";
      expect("(");
      f.exponent = expr();
      expect(")");
      return f;
    }
    f.name = t.text;
    names_.push_back({t.text, t.line, t.column});
    if (accept("^")) f.exponent = exponent_atom();
    return f;
  }

  Expr exponent_atom() {
    if (accept("-")) {
      Expr e = exponent_atom();
      if (e.op == Expr::Op::Int) return Expr::integer(-e.value);
      return {Expr::Op::Neg, 0, {}, {std::move(e)}};
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    const Token& t = next();
    if (t.type == Token::Type::Int) return Expr::integer(t.value);
    if (t.type == Token::Type::Ident) return {Expr::Op::Var, 0, t.text, {}};
    fail(t, "expected an exponent");
  }

  Expr expr() {
    Expr l = term();
    for (;;) {
      if (accept("+"))
        l = {Expr::Op::Add, 0, {}, {std::move(l), term()}};
      else if (accept("-"))
        l = {Expr::Op::Sub, 0, {}, {std::move(l), term()}};
      else
        return l;
    }
  }
  Expr term() {
    Expr l = unary();
    while (accept("*")) l = {Expr::Op::Mul, 0, {}, {std::move(l), unary()}};
    return l;
  }
  Expr unary() {
    if (accept("-")) {
      Expr e = unary();
      if (e.op == Expr::Op::Int) return Expr::integer(-e.value);
      return {Expr::Op::Neg, 0, {}, {std::move(e)}};
    }
    Expr base = atom();
    if (accept("^")) return {Expr::Op::Pow, 0, {}, {std::move(base), unary()}};
    return base;
  }
  Expr atom() {
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    const Token& t = next();
    if (t.type == Token::Type::Int) return Expr::integer(t.value);
    if (t.type == Token::Type::Ident) return {Expr::Op::Var, 0, t.text, {}};
    fail(t, "expected a number, a name or '('");
  }

  void check_order_lhs(const Rule& r, const Token& key) {
    if (r.commutator || r.left.size() != 1) fail(key, "an order declaration needs a single power g^n on the left");
  }

  void resolve(Document& d) {
    std::set<std::string> gens(d.generators.begin(), d.generators.end()), params;
    if (gens.size() != d.generators.size()) throw ParseError("duplicate generator name", 1, 1);
    for (const auto& p : d.params) {
      if (gens.count(p.name) || !params.insert(p.name).second)
        throw ParseError("parameter '" + p.name + "' clashes with another name", 1, 1);
    }
    for (const auto& n : names_)
      if (!gens.count(n.name) && !params.count(n.name))
        throw UndeclaredGenerator("undeclared generator '" + n.name + "' at line " + std::to_string(n.line) +
                                  ", column " + std::to_string(n.column));
    auto mark = [&](Product& p, const Rule& r, bool lhs) {
      for (auto& f : p) {
        if (f.kind == Factor::Kind::Root || params.count(f.name)) {
          if (f.kind == Factor::Kind::Generator) f.kind = Factor::Kind::Param;
          if (lhs) throw ParseError("scalars belong on the right-hand side", r.line, 1);
          if (d.kind == Document::Kind::Group) throw ParseError("a group presentation carries no scalars", r.line, 1);
        }
      }
    };
    for (auto* rules : {&d.orders, &d.relations})
      for (auto& r : *rules) {
        mark(r.left, r, true);
        mark(r.right, r, true);
        mark(r.rhs, r, false);
      }
    if (!d.params.empty() && d.kind != Document::Kind::Sweep)
      throw ParseError("parameters are only allowed in a sweep", 1, 1);
    std::set<std::string> ordered;
    for (const auto& r : d.orders)
      if (!ordered.insert(r.left.front().name).second)
        throw ParseError("two order declarations for '" + r.left.front().name + "'", r.line, 1);
    for (const auto& g : d.generators)
      if (!ordered.count(g)) throw MissingOrder("generator '" + g + "' has no order declaration");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<PendingName> names_;
};

bool binary(const Expr& e) { return e.op != Expr::Op::Int && e.op != Expr::Op::Var; }

std::string print_expr(const Expr& e) {
  auto wrap = [](const Expr& c) {
    if (binary(c) || (c.op == Expr::Op::Int && c.value < 0)) return "(" + print_expr(c) + ")";
    return print_expr(c);
  };
  switch (e.op) {
    case Expr::Op::Int:
      return std::to_string(e.value);
    case Expr::Op::Var:
      return e.name;
    case Expr::Op::Neg:
      return "-" + wrap(e.args[0]);
    case Expr::Op::Add:
      return wrap(e.args[0]) + "+" + wrap(e.args[1]);
    case Expr::Op::Sub:
      return wrap(e.args[0]) + "-" + wrap(e.args[1]);
    case Expr::Op::Mul:
      return wrap(e.args[0]) + "*" + wrap(e.args[1]);
    case Expr::Op::Pow:
      return wrap(e.args[0]) + "^" + wrap(e.args[1]);
  }
  return {};
}

std::string print_product(const Product& p) {
  if (p.empty()) return "1";
  std::string out;
  for (const auto& f : p) {
    if (!out.empty()) out += " * ";
    if (f.kind == Factor::Kind::Root) {
      out += "w(" + print_expr(f.exponent) + ")";
      continue;
    }
    out += f.name;
    if (f.exponent == Expr::integer(1)) continue;
    const Expr& e = f.exponent;
    if (e.op == Expr::Op::Var || e.op == Expr::Op::Int)
      out += "^" + print_expr(e);
    else
      out += "^(" + print_expr(e) + ")";
  }
  return out;
}

std::string print_rule(const Rule& r) {
  std::string lhs = r.commutator ? "[" + print_product(r.left) + ", " + print_product(r.right) + "]"
                                 : print_product(r.left);
  return lhs + " = " + print_product(r.rhs) + ";";
}

Syllables syllables(const Product& p, const std::map<std::string, int>& index,
                    const std::map<std::string, long long>& env, bool inverse = false) {
  Syllables out;
  for (const auto& f : p) {
    if (f.kind != Factor::Kind::Generator) continue;
    const long long e = f.exponent.eval(env);
    if (e != 0) out.push_back({index.at(f.name), e});
  }
  if (inverse) {
    std::reverse(out.begin(), out.end());
    for (auto& s : out) s.exponent = -s.exponent;
  }
  return out;
}

}  // namespace

Document parse(const std::string& text) { return Parser(text).document(); }

std::string print(const Document& d) {
  std::ostringstream out;
  const char* kind = d.kind == Document::Kind::Group ? "group" : d.kind == Document::Kind::Algebra ? "algebra" : "sweep";
  out << kind << " " << d.name << " {\n";
  out << "  generators: ";
  for (std::size_t i = 0; i < d.generators.size(); ++i) out << (i ? ", " : "") << d.generators[i];
  out << ";\n";
  if (d.modulus) out << "  modulus: " << print_expr(*d.modulus) << ";\n";
  for (const auto& p : d.params) out << "  param " << p.name << " in mu(" << print_expr(p.root_order) << ");\n";
  for (const auto& r : d.orders) out << "  order: " << print_rule(r) << "\n";
  for (const auto& r : d.relations) out << "  relation: " << print_rule(r) << "\n";
  out << "}\n";
  return out.str();
}

CollectionPresentation instantiate(const Document& d, const std::map<std::string, long long>& env) {
  CollectionPresentation pres;
  pres.name = d.name;
  pres.generators = d.generators;
  std::map<std::string, int> index, pindex;
  for (std::size_t i = 0; i < d.generators.size(); ++i) index[d.generators[i]] = static_cast<int>(i);
  pres.modulus = d.modulus ? static_cast<int>(d.modulus->eval(env)) : 1;
  if (pres.modulus < 1) throw InvalidArgument("modulus must be positive");
  for (std::size_t i = 0; i < d.params.size(); ++i) {
    pindex[d.params[i].name] = static_cast<int>(i);
    pres.parameters.push_back({d.params[i].name, static_cast<int>(d.params[i].root_order.eval(env))});
  }
  pres.orders.assign(d.generators.size(), 0);
  auto add = [&](const Rule& r) {
    Relator rel;
    if (r.commutator) {
      const Syllables x = syllables(r.left, index, env), y = syllables(r.right, index, env);
      rel.lhs = x;
      rel.lhs.insert(rel.lhs.end(), y.begin(), y.end());
      const Syllables xi = syllables(r.left, index, env, true), yi = syllables(r.right, index, env, true);
      rel.lhs.insert(rel.lhs.end(), xi.begin(), xi.end());
      rel.lhs.insert(rel.lhs.end(), yi.begin(), yi.end());
    } else {
      rel.lhs = syllables(r.left, index, env);
    }
    rel.rhs = syllables(r.rhs, index, env);
    for (const auto& f : r.rhs) {
      if (f.kind == Factor::Kind::Root)
        rel.scalar.exponent += f.exponent.eval(env);
      else if (f.kind == Factor::Kind::Param)
        rel.scalar.parameters.push_back({pindex.at(f.name), f.exponent.eval(env)});
    }
    rel.scalar.exponent = ((rel.scalar.exponent % pres.modulus) + pres.modulus) % pres.modulus;
    pres.relations.push_back(std::move(rel));
  };
  for (const auto& r : d.orders) {
    const long long n = r.left.front().exponent.eval(env);
    if (n < 1) throw InvalidArgument("order of '" + r.left.front().name + "' must be positive");
    pres.orders[static_cast<std::size_t>(index.at(r.left.front().name))] = n;
    add(r);
  }
  for (const auto& r : d.relations) add(r);
  return pres;
}

}  // namespace tga::dsl
