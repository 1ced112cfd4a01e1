#include "tate/ringfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tate {

namespace {

// ---------------------------------------------------------------------------
// Expression / guard tokenizer and parser
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  long col = 0;
};

class Lexer {
 public:
  Lexer(std::string s, long line, long col0)
      : s_(std::move(s)), line_(line), col0_(col0) {
    next();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    next();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw RingParseError(msg, line_, col0_ + (tok_.kind == Token::Kind::End
                                                  ? static_cast<long>(s_.size())
                                                  : tok_.col));
  }
  bool punct(const std::string& p) const {
    return tok_.kind == Token::Kind::Punct && tok_.text == p;
  }
  void expect_punct(const std::string& p) {
    if (!punct(p)) fail("expected '" + p + "'");
    next();
  }

 private:
  void next() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
    tok_.col = static_cast<long>(i_);
    if (i_ >= s_.size()) {
      tok_ = {Token::Kind::End, "", static_cast<long>(i_)};
      return;
    }
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = {Token::Kind::Ident, s_.substr(i_, j - i_), static_cast<long>(i_)};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Kind::Number, s_.substr(i_, j - i_), static_cast<long>(i_)};
      i_ = j;
      return;
    }
    for (const char* two : {"<=", ">=", "=="}) {
      if (s_.compare(i_, 2, two) == 0) {
        tok_ = {Token::Kind::Punct, two, static_cast<long>(i_)};
        i_ += 2;
        return;
      }
    }
    static const std::string singles = "+-*/()<>,:=^";
    if (singles.find(c) != std::string::npos) {
      tok_ = {Token::Kind::Punct, std::string(1, c), static_cast<long>(i_)};
      ++i_;
      return;
    }
    throw RingParseError(std::string("unexpected character '") + c + "'", line_,
                         col0_ + static_cast<long>(i_));
  }

  std::string s_;
  long line_;
  long col0_;
  std::size_t i_ = 0;
  Token tok_;
};

class ExprParser {
 public:
  ExprParser(Lexer& lx, const VarTablePtr& table) : lx_(lx), table_(table) {}

  ExprPtr expr() {
    ExprPtr a = term();
    while (lx_.punct("+") || lx_.punct("-")) {
      bool add = lx_.punct("+");
      lx_.take();
      ExprPtr b = term();
      a = add ? e_add(std::move(a), std::move(b)) : e_sub(std::move(a), std::move(b));
    }
    return a;
  }

  Guard guard() {
    Guard g;
    if (lx_.peek().kind == Token::Kind::Ident && lx_.peek().text == "true") {
      lx_.take();
      return g;
    }
    for (;;) {
      g.atoms.push_back(atom());
      if (lx_.peek().kind == Token::Kind::Ident && lx_.peek().text == "and") {
        lx_.take();
        continue;
      }
      break;
    }
    return g;
  }

 private:
  Guard::Atom atom() {
    ExprPtr l = expr();
    Cmp op;
    if (lx_.punct("<="))
      op = Cmp::Le;
    else if (lx_.punct(">="))
      op = Cmp::Ge;
    else if (lx_.punct("=="))
      op = Cmp::Eq;
    else if (lx_.punct("<"))
      op = Cmp::Lt;
    else if (lx_.punct(">"))
      op = Cmp::Gt;
    else
      lx_.fail("expected comparison operator");
    lx_.take();
    return {std::move(l), op, expr()};
  }

  ExprPtr term() {
    ExprPtr a = factor();
    while (lx_.punct("*")) {
      lx_.take();
      a = e_mul(std::move(a), factor());
    }
    return a;
  }

  ExprPtr factor() {
    if (lx_.punct("-")) {
      lx_.take();
      return e_neg(factor());
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = lx_.peek();
    if (t.kind == Token::Kind::Number) {
      Rat num(Int(lx_.take().text));
      if (lx_.punct("/")) {
        lx_.take();
        if (lx_.peek().kind != Token::Kind::Number) lx_.fail("expected denominator");
        Int den(lx_.take().text);
        if (den == 0) lx_.fail("zero denominator");
        num /= Rat(den);
      }
      return e_const(std::move(num));
    }
    if (t.kind == Token::Kind::Ident) {
      std::string name = lx_.take().text;
      if (name == "min" || name == "max" || name == "abs") {
        lx_.expect_punct("(");
        std::vector<ExprPtr> args;
        args.push_back(expr());
        while (lx_.punct(",")) {
          lx_.take();
          args.push_back(expr());
        }
        lx_.expect_punct(")");
        if (name == "abs") {
          if (args.size() != 1) lx_.fail("abs takes one argument");
          return e_abs(std::move(args[0]));
        }
        return name == "min" ? e_min(std::move(args)) : e_max(std::move(args));
      }
      auto i = table_->find(name);
      if (!i) lx_.fail("unknown variable '" + name + "'");
      return e_var(*i);
    }
    if (lx_.punct("(")) {
      lx_.take();
      ExprPtr e = expr();
      lx_.expect_punct(")");
      return e;
    }
    lx_.fail("expected expression");
  }

  Lexer& lx_;
  const VarTablePtr& table_;
};

// ---------------------------------------------------------------------------
// Canonical printers
// ---------------------------------------------------------------------------

void print_expr(const Expr& e, const VarTable& t, int parent, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    bool paren = prec < parent;
    if (paren) out += "(";
    body();
    if (paren) out += ")";
  };
  switch (e.kind) {
    case Expr::Kind::Const:
      out += e.cval.str();
      return;
    case Expr::Kind::Var:
      out += t.decl(e.var).name;
      return;
    case Expr::Kind::Add:
      wrap(1, [&] {
        print_expr(*e.args[0], t, 1, out);
        out += " + ";
        print_expr(*e.args[1], t, 2, out);
      });
      return;
    case Expr::Kind::Sub:
      wrap(1, [&] {
        print_expr(*e.args[0], t, 1, out);
        out += " - ";
        print_expr(*e.args[1], t, 2, out);
      });
      return;
    case Expr::Kind::Mul:
      wrap(2, [&] {
        print_expr(*e.args[0], t, 2, out);
        out += " * ";
        print_expr(*e.args[1], t, 3, out);
      });
      return;
    case Expr::Kind::Neg:
      wrap(3, [&] {
        out += "-";
        print_expr(*e.args[0], t, 4, out);
      });
      return;
    case Expr::Kind::Min:
    case Expr::Kind::Max:
    case Expr::Kind::Abs:
      out += e.kind == Expr::Kind::Min ? "min" : e.kind == Expr::Kind::Max ? "max" : "abs";
      out += "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        print_expr(*e.args[i], t, 0, out);
      }
      out += ")";
      return;
    case Expr::Kind::Cases:
      throw std::invalid_argument("emit_ring: nested case expressions are not serializable");
  }
}

std::string cmp_word(Cmp c) {
  switch (c) {
    case Cmp::Le: return "<=";
    case Cmp::Ge: return ">=";
    case Cmp::Eq: return "==";
    case Cmp::Lt: return "<";
    case Cmp::Gt: return ">";
  }
  return "?";
}

std::string print_guard(const Guard& g, const VarTable& t) {
  if (g.atoms.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < g.atoms.size(); ++i) {
    if (i) out += " and ";
    print_expr(*g.atoms[i].lhs, t, 0, out);
    out += " " + cmp_word(g.atoms[i].op) + " ";
    print_expr(*g.atoms[i].rhs, t, 0, out);
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Rat parse_rat(const std::string& s, long line, long col) {
  Lexer lx(s, line, col);
  bool neg = false;
  if (lx.punct("-")) {
    lx.take();
    neg = true;
  }
  if (lx.peek().kind != Token::Kind::Number)
    throw RingParseError("expected rational number", line, col);
  Rat num(Int(lx.take().text));
  if (lx.punct("/")) {
    lx.take();
    if (lx.peek().kind != Token::Kind::Number)
      throw RingParseError("expected denominator", line, col);
    Int den(lx.take().text);
    if (den == 0) throw RingParseError("zero denominator", line, col);
    num /= Rat(den);
  }
  if (lx.peek().kind != Token::Kind::End)
    throw RingParseError("trailing characters in number", line, col);
  return neg ? -num : num;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring files
// ---------------------------------------------------------------------------

TateRingDesc parse_ring_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string raw;
  long lineno = 0;

  enum class Section { None, Field, Vars, Gauge, Adjoin };
  Section sec = Section::None;

  Int prime = 2;
  std::vector<VariableDecl> decls;
  VarTablePtr table;

  enum class GaugeKind { Unset, Expression, Generators };
  GaugeKind kind = GaugeKind::Unset;
  Guard support;
  ExprPtr value;
  std::vector<std::pair<Guard, ExprPtr>> cases;
  std::vector<GeneratorGauge::Generator> gens;
  std::vector<DerivedGauge::Adjunction> adjoin;

  auto need_table = [&](long ln) -> const VarTablePtr& {
    if (!table) table = std::make_shared<VarTable>(prime, decls);
    (void)ln;
    return table;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    long col0 = static_cast<long>(first);

    if (line.front() == '[') {
      if (line == "[field]")
        sec = Section::Field;
      else if (line == "[vars]")
        sec = Section::Vars;
      else if (line == "[gauge]")
        sec = Section::Gauge;
      else if (line == "[adjoin]")
        sec = Section::Adjoin;
      else
        throw RingParseError("unknown section '" + line + "'", lineno, col0);
      if (sec == Section::Gauge || sec == Section::Adjoin) need_table(lineno);
      continue;
    }

    switch (sec) {
      case Section::None:
        throw RingParseError("content before the first section header", lineno, col0);
      case Section::Field: {
        auto eq = line.find('=');
        if (eq == std::string::npos || split_ws(line.substr(0, eq)) != std::vector<std::string>{"p"})
          throw RingParseError("expected 'p = <prime>'", lineno, col0);
        std::string v = line.substr(eq + 1);
        auto ws = split_ws(v);
        if (ws.size() != 1) throw RingParseError("expected a single prime", lineno, col0);
        try {
          prime = Int(ws[0]);
        } catch (const std::exception&) {
          throw RingParseError("invalid prime '" + ws[0] + "'", lineno, col0);
        }
        if (prime < 2) throw RingParseError("prime must be >= 2", lineno, col0);
        if (table) throw RingParseError("[field] must precede [gauge]/[adjoin]", lineno, col0);
        break;
      }
      case Section::Vars: {
        if (table)
          throw RingParseError("[vars] must precede [gauge]/[adjoin]", lineno, col0);
        auto ws = split_ws(line);
        VariableDecl d;
        d.name = ws[0];
        for (std::size_t i = 1; i < ws.size(); ++i) {
          if (ws[i] == "invertible")
            d.invertible = true;
          else if (ws[i] == "p_divisible")
            d.p_divisible = true;
          else if (ws[i] == "nilpotent") {
            if (i + 1 >= ws.size())
              throw RingParseError("nilpotent needs a cap", lineno, col0);
            try {
              d.nilpotency_cap = std::stol(ws[++i]);
            } catch (const std::exception&) {
              throw RingParseError("invalid nilpotency cap", lineno, col0);
            }
          } else {
            throw RingParseError("unknown variable flag '" + ws[i] + "'", lineno, col0);
          }
        }
        decls.push_back(std::move(d));
        break;
      }
      case Section::Gauge: {
        const VarTablePtr& tb = need_table(lineno);
        if (line.rfind("kind", 0) == 0) {
          auto eq = line.find('=');
          if (eq == std::string::npos)
            throw RingParseError("expected 'kind = expression|generators'", lineno, col0);
          auto ws = split_ws(line.substr(eq + 1));
          if (ws == std::vector<std::string>{"expression"})
            kind = GaugeKind::Expression;
          else if (ws == std::vector<std::string>{"generators"})
            kind = GaugeKind::Generators;
          else
            throw RingParseError("gauge kind must be expression or generators", lineno, col0);
          break;
        }
        if (kind == GaugeKind::Unset)
          throw RingParseError("gauge kind must be declared first", lineno, col0);
        if (kind == GaugeKind::Expression) {
          if (line.rfind("support", 0) == 0) {
            auto eq = line.find('=');
            if (eq == std::string::npos)
              throw RingParseError("expected 'support = <guard>'", lineno, col0);
            Lexer lx(line.substr(eq + 1), lineno, col0 + static_cast<long>(eq) + 1);
            ExprParser ep(lx, tb);
            support = ep.guard();
            if (lx.peek().kind != Token::Kind::End) lx.fail("trailing tokens");
          } else if (line.rfind("value", 0) == 0) {
            auto eq = line.find('=');
            if (eq == std::string::npos)
              throw RingParseError("expected 'value = <expr>'", lineno, col0);
            Lexer lx(line.substr(eq + 1), lineno, col0 + static_cast<long>(eq) + 1);
            ExprParser ep(lx, tb);
            value = ep.expr();
            if (lx.peek().kind != Token::Kind::End) lx.fail("trailing tokens");
          } else if (line.rfind("case", 0) == 0) {
            Lexer lx(line.substr(4), lineno, col0 + 4);
            ExprParser ep(lx, tb);
            Guard g = ep.guard();
            lx.expect_punct(":");
            ExprPtr v = ep.expr();
            if (lx.peek().kind != Token::Kind::End) lx.fail("trailing tokens");
            cases.emplace_back(std::move(g), std::move(v));
          } else {
            throw RingParseError("expected support/value/case line", lineno, col0);
          }
        } else {
          auto ws = split_ws(line);
          if (ws.empty() || ws[0] != "gen")
            throw RingParseError("expected 'gen e1 e2 ... : cost'", lineno, col0);
          auto colon = std::find(ws.begin(), ws.end(), ":");
          if (colon == ws.end() || colon + 2 != ws.end())
            throw RingParseError("expected ': cost' at end of gen line", lineno, col0);
          std::vector<Rat> e;
          for (auto it = ws.begin() + 1; it != colon; ++it)
            e.push_back(parse_rat(*it, lineno, col0));
          if (e.size() != tb->size())
            throw RingParseError("generator arity does not match [vars]", lineno, col0);
          long cost;
          try {
            cost = std::stol(*(colon + 1));
          } catch (const std::exception&) {
            throw RingParseError("invalid generator cost", lineno, col0);
          }
          gens.push_back({ExponentVector(tb, std::move(e)), cost});
        }
        break;
      }
      case Section::Adjoin: {
        const VarTablePtr& tb = need_table(lineno);
        auto ws = split_ws(line);
        if (ws.size() < 2)
          throw RingParseError("expected '<monomial> nonneg|nonpos|both'", lineno, col0);
        std::string dir_word = ws.back();
        AdjoinDir dir;
        if (dir_word == "nonneg")
          dir = AdjoinDir::NonNeg;
        else if (dir_word == "nonpos")
          dir = AdjoinDir::NonPos;
        else if (dir_word == "both")
          dir = AdjoinDir::Both;
        else
          throw RingParseError("adjoin direction must be nonneg, nonpos or both",
                               lineno, col0);
        std::string mono;
        for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
          if (i) mono += " ";
          mono += ws[i];
        }
        ExponentVector tau = [&] {
          try {
            return parse_monomial(mono, tb);
          } catch (const std::exception& ex) {
            throw RingParseError(ex.what(), lineno, col0);
          }
        }();
        adjoin.push_back({std::move(tau), dir});
        break;
      }
    }
  }

  const VarTablePtr& tb = need_table(lineno);

  GaugePtr gauge;
  if (kind == GaugeKind::Unset)
    throw RingParseError("missing [gauge] section", lineno + 1, 0);
  if (kind == GaugeKind::Expression) {
    if (value && !cases.empty())
      throw RingParseError("gauge has both 'value' and 'case' lines", lineno + 1, 0);
    if (!value && cases.empty())
      throw RingParseError("expression gauge needs a value or case lines", lineno + 1, 0);
    ExprPtr v = value ? value : e_cases(std::move(cases));
    gauge = std::make_shared<ExpressionGauge>(tb, std::move(support), std::move(v));
  } else {
    if (gens.empty())
      throw RingParseError("generator gauge needs at least one gen line", lineno + 1, 0);
    gauge = std::make_shared<GeneratorGauge>(tb, std::move(gens));
  }
  if (!adjoin.empty()) gauge = std::make_shared<DerivedGauge>(gauge, std::move(adjoin));

  return TateRingDesc::make(name, tb, std::move(gauge));
}

TateRingDesc parse_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ring file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name.erase(0, slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.erase(dot);
  return parse_ring_text(buf.str(), name);
}

std::string emit_ring(const TateRingDesc& ring) {
  const VarTable& t = *ring.table;
  std::string out;
  out += "[field]\np = " + ring.table->prime().str() + "\n\n[vars]\n";
  for (const auto& d : t.decls()) {
    out += d.name;
    if (d.invertible) out += " invertible";
    if (d.p_divisible) out += " p_divisible";
    if (d.nilpotency_cap) out += " nilpotent " + std::to_string(*d.nilpotency_cap);
    out += "\n";
  }

  const Gauge* g = ring.gauge.get();
  const auto* derived = dynamic_cast<const DerivedGauge*>(g);
  if (derived) g = derived->base().get();

  out += "\n[gauge]\n";
  if (const auto* eg = dynamic_cast<const ExpressionGauge*>(g)) {
    out += "kind = expression\n";
    if (!eg->support().atoms.empty())
      out += "support = " + print_guard(eg->support(), t) + "\n";
    const Expr& v = *eg->value_expr();
    if (v.kind == Expr::Kind::Cases) {
      for (const auto& [guard, val] : v.cases) {
        out += "case " + print_guard(guard, t) + " : ";
        print_expr(*val, t, 0, out);
        out += "\n";
      }
    } else {
      out += "value = ";
      print_expr(v, t, 0, out);
      out += "\n";
    }
  } else if (const auto* gg = dynamic_cast<const GeneratorGauge*>(g)) {
    out += "kind = generators\n";
    for (const auto& gen : gg->generators()) {
      out += "gen";
      for (std::size_t i = 0; i < gen.exponent.size(); ++i)
        out += " " + gen.exponent[i].str();
      out += " : " + std::to_string(gen.cost) + "\n";
    }
  } else {
    throw std::invalid_argument(
        "emit_ring: only expression/generator gauges (optionally derived) are "
        "serializable");
  }

  if (derived) {
    out += "\n[adjoin]\n";
    for (const auto& a : derived->adjunctions()) {
      out += a.tau.str();
      out += a.dir == AdjoinDir::NonNeg ? " nonneg"
             : a.dir == AdjoinDir::NonPos ? " nonpos"
                                          : " both";
      out += "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomials and elements
// ---------------------------------------------------------------------------

ExponentVector parse_monomial(const std::string& s, const VarTablePtr& table) {
  ExponentVector e(table);
  auto factors = split_ws(s);
  if (factors.empty()) throw std::invalid_argument("empty monomial");
  if (factors.size() == 1 && factors[0] == "1") return e;
  for (const auto& f : factors) {
    auto caret = f.find('^');
    std::string name = f.substr(0, caret);
    auto idx = table->find(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "' in monomial");
    Rat k = 1;
    if (caret != std::string::npos) k = parse_rat(f.substr(caret + 1), 1, 0);
    e[*idx] += k;
  }
  return e;
}

RingElement parse_element(const std::string& s, const VarTablePtr& table) {
  RingElement out(table);
  std::vector<std::string> terms;
  std::istringstream in(s);
  std::string tok;
  std::string cur;
  while (in >> tok) {
    if (tok == "+") {
      if (cur.empty()) throw std::invalid_argument("element: empty term");
      terms.push_back(cur);
      cur.clear();
    } else {
      if (!cur.empty()) cur += " ";
      cur += tok;
    }
  }
  if (cur.empty()) throw std::invalid_argument("element: empty term");
  terms.push_back(cur);

  for (const auto& tm : terms) {
    auto ws = split_ws(tm);
    Rat coeff = 1;
    std::size_t start = 0;
    const std::string& head = ws[0];
    bool is_coeff = false;
    if (head.rfind("p^", 0) == 0) {
      long k = std::stol(head.substr(2));
      Int pw = boost::multiprecision::pow(table->prime(),
                                          static_cast<unsigned>(k < 0 ? -k : k));
      coeff = k >= 0 ? Rat(pw) : Rat(1) / Rat(pw);
      is_coeff = true;
    } else if (!head.empty() &&
               (std::isdigit(static_cast<unsigned char>(head[0])) || head[0] == '-')) {
      coeff = parse_rat(head, 1, 0);
      is_coeff = true;
    }
    if (is_coeff) start = 1;
    ExponentVector e(table);
    if (start < ws.size()) {
      std::string mono;
      for (std::size_t i = start; i < ws.size(); ++i) {
        if (i > start) mono += " ";
        mono += ws[i];
      }
      e = parse_monomial(mono, table);
    }
    out = out + RingElement::monomial(e, coeff);
  }
  return out;
}

}  // namespace tate
