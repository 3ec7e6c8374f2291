#include "zinbiel/conditions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "condition_text.hpp"

namespace zinbiel {

const char* list_name(ConditionList l) {
  switch (l) {
    case ConditionList::Z: return "Z";
    case ConditionList::ZZ: return "ZZ";
    case ConditionList::CZ: return "CZ";
    case ConditionList::BZ: return "BZ";
    case ConditionList::H: return "H";
  }
  return "?";
}

namespace parse_detail {

// ---------------------------------------------------------------- tokens

enum class Tok { Op, Omega, Map, Var, Zero, LParen, RParen, Comma, Plus, Minus, Eq, End };
enum class OpKind { Cdot, HarpR, HarpL, TriR, TriL, Star };
enum class MapName { Phi, Sigma, D, R, S };

struct Token {
  Tok kind;
  OpKind op{};
  MapName map{};
  int index = -1;  // subscript, -1 when absent
  bool primed = false;
  char letter = 0;
  std::size_t pos = 0;
};

std::string strip_decorations(std::string s) {
  // Sizing commands only decorate delimiters; drop them before tokenising.
  for (const char* cmd : {"\\bigl", "\\bigr", "\\Bigl", "\\Bigr", "\\big", "\\Big", "\\left",
                          "\\right"}) {
    std::string c = cmd;
    for (std::size_t p; (p = s.find(c)) != std::string::npos;) {
      std::size_t after = p + c.size();
      if (after < s.size() && std::isalpha(static_cast<unsigned char>(s[after]))) break;
      s.erase(p, c.size());
    }
  }
  for (const char* sp : {"\\,", "\\;", "\\!", "\\ "})
    for (std::size_t p; (p = s.find(sp)) != std::string::npos;) s.replace(p, 2, " ");
  while (!s.empty() && (std::isspace(static_cast<unsigned char>(s.back())) || s.back() == ',' ||
                        s.back() == '.'))
    s.pop_back();
  return s;
}

class Lexer {
 public:
  explicit Lexer(std::string s) : s_(std::move(s)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      Token t;
      t.pos = i_;
      if (i_ >= s_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = s_[i_];
      if (c == '\\') {
        ++i_;
        std::string name;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) name += s_[i_++];
        if (name == "cdot") t = op(OpKind::Cdot);
        else if (name == "rightharpoonup") t = op(OpKind::HarpR);
        else if (name == "leftharpoonup") t = op(OpKind::HarpL);
        else if (name == "triangleright") t = op(OpKind::TriR);
        else if (name == "triangleleft") t = op(OpKind::TriL);
        else if (name == "ast") t = op(OpKind::Star);
        else if (name == "omega") t.kind = Tok::Omega;
        else if (name == "varphi") t = map(MapName::Phi);
        else if (name == "sigma") t = map(MapName::Sigma);
        else fail("unknown command '\\" + name + "'");
        modifiers(t);
      } else if (c == '*') {
        ++i_;
        t = op(OpKind::Star);
        modifiers(t);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        ++i_;
        switch (c) {
          case 'd': t = map(MapName::D); break;
          case 'r': t = map(MapName::R); break;
          case 's': t = map(MapName::S); break;
          case 'x': case 'y': case 'z': case 'u': case 'v': case 'w':
            t.kind = Tok::Var;
            t.letter = c;
            break;
          default: fail(std::string("unknown symbol '") + c + "'");
        }
        modifiers(t);
      } else if (c == '0') {
        ++i_;
        t.kind = Tok::Zero;
      } else {
        ++i_;
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ',': t.kind = Tok::Comma; break;
          case '+': t.kind = Tok::Plus; break;
          case '-': t.kind = Tok::Minus; break;
          case '=': t.kind = Tok::Eq; break;
          default: fail(std::string("unexpected character '") + c + "'");
        }
      }
      out.push_back(t);
    }
  }

 private:
  static Token op(OpKind k) {
    Token t;
    t.kind = Tok::Op;
    t.op = k;
    return t;
  }
  static Token map(MapName m) {
    Token t;
    t.kind = Tok::Map;
    t.map = m;
    return t;
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(i_));
  }
  // Subscripts and primes in any order: _{k}, _k, ^{\prime}, ^\prime, '.
  void modifiers(Token& t) {
    while (true) {
      skip_ws();
      if (i_ >= s_.size()) return;
      if (s_[i_] == '_') {
        ++i_;
        std::string sub = group();
        if (sub.size() != 1 || !std::isdigit(static_cast<unsigned char>(sub[0])))
          fail("subscript '" + sub + "' is not a level index");
        if (t.index >= 0) fail("double subscript");
        t.index = sub[0] - '0';
      } else if (s_[i_] == '^') {
        ++i_;
        std::string sup = group();
        if (sup != "\\prime" && sup != "'") fail("superscript '" + sup + "' is not a prime");
        t.primed = true;
      } else if (s_[i_] == '\'') {
        ++i_;
        t.primed = true;
      } else {
        return;
      }
    }
  }
  std::string group() {
    skip_ws();
    if (i_ >= s_.size()) fail("missing script");
    if (s_[i_] == '{') {
      std::size_t close = s_.find('}', i_);
      if (close == std::string::npos) fail("unclosed script group");
      std::string g = s_.substr(i_ + 1, close - i_ - 1);
      i_ = close + 1;
      g.erase(std::remove_if(g.begin(), g.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
              g.end());
      return g;
    }
    if (s_[i_] == '\\') {
      std::size_t b = i_++;
      while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
      return s_.substr(b, i_ - b);
    }
    return std::string(1, s_[i_++]);
  }

  std::string s_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------- AST

struct Ty {
  Space s;
  int level;
  friend bool operator==(const Ty& a, const Ty& b) { return a.s == b.s && a.level == b.level; }
};

std::string ty_name(Ty t) {
  return std::string(t.s == Space::Z ? "Z" : "V") + std::to_string(t.level);
}

struct Node;
using NodeP = std::unique_ptr<Node>;

struct Node {
  enum Kind { Var, Zero, Sum, Bin, Omega, Apply } kind;
  std::vector<NodeP> kids;
  std::vector<int> signs;  // Sum only
  OpKind op{};
  int j = -1;
  bool primed = false;
  MapName map{};
  int slot = -1;
  std::optional<Ty> ty;       // empty only for the literal 0
  std::vector<int> vars;      // sorted multiset of variable slots
};

}  // namespace parse_detail

using namespace parse_detail;

// A parsed and typechecked equation: sides[0] = sides[1] = ...
class Formula {
 public:
  std::vector<NodeP> sides;
  Ty ty{Space::Z, 0};
  std::vector<Ty> slot_ty;
  std::vector<std::string> slot_name;
  bool uses_prime = false, uses_rs = false;
};

namespace {

class Parser {
 public:
  Parser(std::vector<Token> toks, Formula& f) : t_(std::move(toks)), f_(f) {}

  void equation() {
    f_.sides.push_back(expr());
    while (peek().kind == Tok::Eq) {
      ++p_;
      f_.sides.push_back(expr());
    }
    if (f_.sides.size() < 2) fail("no '=' in equation");
    if (peek().kind != Tok::End) fail(peek().kind == Tok::RParen ? "unbalanced ')'" : "trailing tokens");
    // Unify side types; a literal 0 takes the type of the other sides.
    std::optional<Ty> ty;
    for (auto& s : f_.sides) {
      if (!s->ty) continue;
      if (ty && !(*ty == *s->ty))
        fail("sides have different types " + ty_name(*ty) + " and " + ty_name(*s->ty));
      ty = s->ty;
    }
    if (!ty) fail("equation has no typed side");
    f_.ty = *ty;
    std::optional<std::vector<int>> vars;
    for (auto& s : f_.sides) {
      if (s->kind == Node::Zero) continue;
      if (vars && *vars != s->vars) fail("sides are not multilinear in the same variables");
      vars = s->vars;
    }
  }

 private:
  const Token& peek() const { return t_[p_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " (token " + std::to_string(p_) + ")");
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++p_;
  }

  NodeP expr() {
    auto sum = std::make_unique<Node>();
    sum->kind = Node::Sum;
    int sign = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = peek().kind == Tok::Minus ? -1 : 1;
      ++p_;
    }
    while (true) {
      sum->kids.push_back(term());
      sum->signs.push_back(sign);
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        sign = peek().kind == Tok::Minus ? -1 : 1;
        ++p_;
        continue;
      }
      break;
    }
    if (sum->kids.size() == 1 && sum->signs[0] == 1) return std::move(sum->kids[0]);
    // Typing: every non-zero summand shares one type and one variable multiset.
    std::optional<std::vector<int>> vars;
    for (auto& k : sum->kids) {
      if (!k->ty) continue;
      if (sum->ty && !(*sum->ty == *k->ty))
        fail("summands of types " + ty_name(*sum->ty) + " and " + ty_name(*k->ty));
      sum->ty = k->ty;
      if (vars && *vars != k->vars) fail("summands are not multilinear in the same variables");
      vars = k->vars;
    }
    if (vars) sum->vars = *vars;
    return sum;
  }

  NodeP term() {
    NodeP lhs = operand();
    if (peek().kind != Tok::Op) return lhs;
    Token o = peek();
    ++p_;
    NodeP rhs = operand();
    if (peek().kind == Tok::Op) fail("chained binary operations need parentheses");
    return binary(o, std::move(lhs), std::move(rhs));
  }

  NodeP operand() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var: {
        ++p_;
        if (t.index < 0) fail(std::string("variable '") + t.letter + "' without level");
        if (t.index > 1) fail("level index out of range");
        auto n = std::make_unique<Node>();
        n->kind = Node::Var;
        Space s = (t.letter == 'x' || t.letter == 'y' || t.letter == 'z') ? Space::Z : Space::V;
        n->ty = Ty{s, t.index};
        std::string name = std::string(1, t.letter) + "_" + std::to_string(t.index);
        auto it = std::find(f_.slot_name.begin(), f_.slot_name.end(), name);
        if (it == f_.slot_name.end()) {
          f_.slot_name.push_back(name);
          f_.slot_ty.push_back(*n->ty);
          n->slot = static_cast<int>(f_.slot_name.size()) - 1;
        } else {
          n->slot = static_cast<int>(it - f_.slot_name.begin());
        }
        n->vars = {n->slot};
        return n;
      }
      case Tok::Zero: {
        ++p_;
        auto n = std::make_unique<Node>();
        n->kind = Node::Zero;
        return n;
      }
      case Tok::LParen: {
        ++p_;
        NodeP e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Map:
      case Tok::Omega:
        return application();
      default:
        fail("expected an operand");
    }
  }

  // Unary maps compose by juxtaposition: "r_{0}d(u_{1})" is r_0(d(u_1)).
  NodeP application() {
    std::vector<Token> chain;
    while (peek().kind == Tok::Map) chain.push_back(t_[p_++]);
    NodeP arg;
    if (peek().kind == Tok::Omega) {
      Token om = t_[p_++];
      expect(Tok::LParen, "'(' after omega");
      NodeP a = expr();
      expect(Tok::Comma, "',' in omega arguments");
      NodeP b = expr();
      expect(Tok::RParen, "')' after omega arguments");
      if (om.index < 0) fail("omega without index");
      if (!a->ty || !b->ty) fail("omega argument is a bare 0");
      OpLevels lv = op_levels(om.index);
      Ty want_a{Space::V, lv.a}, want_b{Space::V, lv.b};
      if (!(*a->ty == want_a) || !(*b->ty == want_b))
        fail("omega_" + std::to_string(om.index) + " applied to (" + ty_name(*a->ty) + ", " +
             ty_name(*b->ty) + ")");
      arg = std::make_unique<Node>();
      arg->kind = Node::Omega;
      arg->j = om.index;
      arg->primed = om.primed;
      if (om.primed) f_.uses_prime = true;
      arg->ty = Ty{Space::Z, lv.c};
      arg->vars = merge(a->vars, b->vars);
      arg->kids.push_back(std::move(a));
      arg->kids.push_back(std::move(b));
    } else {
      if (chain.empty()) fail("expected a map application");
      expect(Tok::LParen, "'(' after map");
      arg = expr();
      expect(Tok::RParen, "')' after map argument");
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) arg = apply(*it, std::move(arg));
    return arg;
  }

  NodeP apply(const Token& m, NodeP arg) {
    if (!arg->ty) fail("map applied to a bare 0");
    Ty in{}, out{};
    switch (m.map) {
      case MapName::Phi: in = {Space::Z, 1}; out = {Space::Z, 0}; break;
      case MapName::Sigma: in = {Space::V, 1}; out = {Space::Z, 0}; break;
      case MapName::D: in = {Space::V, 1}; out = {Space::V, 0}; break;
      case MapName::R:
      case MapName::S:
        if (m.index < 0 || m.index > 1) fail("r/s need a level index");
        in = {Space::V, m.index};
        out = {m.map == MapName::R ? Space::Z : Space::V, m.index};
        f_.uses_rs = true;
        break;
    }
    if (!(*arg->ty == in)) {
      static const char* names[] = {"phi", "sigma", "d", "r", "s"};
      fail(std::string(names[static_cast<int>(m.map)]) + (m.primed ? "'" : "") + " expects " +
           ty_name(in) + ", got " + ty_name(*arg->ty));
    }
    auto n = std::make_unique<Node>();
    n->kind = Node::Apply;
    n->map = m.map;
    n->j = m.index;
    n->primed = m.primed;
    if (m.primed) f_.uses_prime = true;
    n->ty = out;
    n->vars = arg->vars;
    n->kids.push_back(std::move(arg));
    return n;
  }

  NodeP binary(const Token& o, NodeP a, NodeP b) {
    if (!a->ty || !b->ty) fail("binary operation on a bare 0");
    Ty ta = *a->ty, tb = *b->ty;
    auto n = std::make_unique<Node>();
    n->kind = Node::Bin;
    n->op = o.op;
    n->primed = o.primed;
    if (o.primed) f_.uses_prime = true;
    Space sa{}, sb{}, sc{};
    switch (o.op) {
      case OpKind::Cdot: sa = Space::Z; sb = Space::Z; sc = Space::Z; break;
      case OpKind::HarpR: sa = Space::V; sb = Space::Z; sc = Space::Z; break;
      case OpKind::HarpL: sa = Space::Z; sb = Space::V; sc = Space::Z; break;
      case OpKind::TriR: sa = Space::Z; sb = Space::V; sc = Space::V; break;
      case OpKind::TriL: sa = Space::V; sb = Space::Z; sc = Space::V; break;
      case OpKind::Star: sa = Space::V; sb = Space::V; sc = Space::V; break;
    }
    static const char* names[] = {"cdot", "rightharpoonup", "leftharpoonup", "triangleright",
                                  "triangleleft", "ast"};
    std::string opname = names[static_cast<int>(o.op)];
    if (ta.s != sa || tb.s != sb)
      fail(opname + " applied to (" + ty_name(ta) + ", " + ty_name(tb) + ")");
    if (o.op == OpKind::Cdot) {
      if (o.index >= 0) fail("indexed cdot");
      n->j = op_index(ta.level, tb.level);
    } else {
      if (o.index < 0) fail(opname + " without index");
      OpLevels lv = op_levels(o.index);
      if (lv.a != ta.level || lv.b != tb.level)
        fail(opname + "_" + std::to_string(o.index) + " applied to (" + ty_name(ta) + ", " +
             ty_name(tb) + ")");
      n->j = o.index;
    }
    n->ty = Ty{sc, op_levels(n->j).c};
    n->vars = merge(a->vars, b->vars);
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return n;
  }

  static std::vector<int> merge(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a);
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end());
    return r;
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
  Formula& f_;
};

std::shared_ptr<const Formula> parse_formula(const std::string& latex) {
  auto f = std::make_shared<Formula>();
  Lexer lx(strip_decorations(latex));
  Parser ps(lx.run(), *f);
  ps.equation();
  return f;
}

// ---------------------------------------------------------------- evaluation

struct Env {
  const ConditionInputs& in;
  std::vector<Vec> bind;
};

const ExtendingDatum& pick(const Env& env, bool primed) {
  const ExtendingDatum* D = primed ? env.in.Dp : env.in.D;
  if (!D) throw Error(primed ? "condition needs a primed datum" : "condition needs a datum");
  return *D;
}

Vec eval(const Node& n, const Env& env) {
  switch (n.kind) {
    case Node::Var:
      return env.bind[n.slot];
    case Node::Zero:
      throw Error("untyped literal 0 evaluated");
    case Node::Sum: {
      const Ty ty = *n.ty;
      Vec acc = zeros(env.in.D->field(), env.in.D->dim(ty.s, ty.level));
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (n.kids[i]->kind == Node::Zero) continue;
        Vec v = eval(*n.kids[i], env);
        acc = n.signs[i] > 0 ? add(acc, v) : sub(acc, v);
      }
      return acc;
    }
    case Node::Bin: {
      const ExtendingDatum& D = pick(env, n.primed);
      Vec a = eval(*n.kids[0], env), b = eval(*n.kids[1], env);
      switch (n.op) {
        case OpKind::Cdot: return D.Z.op(n.j).eval(a, b);
        case OpKind::HarpR: return D.harpoon_r[n.j].eval(a, b);
        case OpKind::HarpL: return D.harpoon_l[n.j].eval(a, b);
        case OpKind::TriR: return D.tri_r[n.j].eval(a, b);
        case OpKind::TriL: return D.tri_l[n.j].eval(a, b);
        case OpKind::Star: return D.star[n.j].eval(a, b);
      }
      break;
    }
    case Node::Omega: {
      const ExtendingDatum& D = pick(env, n.primed);
      return D.omega[n.j].eval(eval(*n.kids[0], env), eval(*n.kids[1], env));
    }
    case Node::Apply: {
      Vec a = eval(*n.kids[0], env);
      switch (n.map) {
        case MapName::Phi: return pick(env, n.primed).Z.phi.apply(a);
        case MapName::Sigma: return pick(env, n.primed).sigma.apply(a);
        case MapName::D: return pick(env, n.primed).V.d.apply(a);
        case MapName::R:
        case MapName::S:
          if (!env.in.rs) throw Error("condition needs (r, s) data");
          return n.map == MapName::R ? env.in.rs->r(n.j).apply(a) : env.in.rs->s(n.j).apply(a);
      }
      break;
    }
  }
  throw Error("bad node");
}

// Runs f on every basis assignment of its variables; records violations under id.
void evaluate_grid(const Formula& f, const std::string& id, const ConditionInputs& in,
                   ConditionReport& rep) {
  if (f.uses_prime && !in.Dp) throw Error(id + ": needs a primed datum");
  if (f.uses_rs && !in.rs) throw Error(id + ": needs (r, s) data");
  const ExtendingDatum& D = *in.D;
  const Field& F = D.field();
  const std::size_t nslots = f.slot_ty.size();
  std::vector<std::size_t> dims(nslots), idx(nslots, 0);
  for (std::size_t s = 0; s < nslots; ++s) {
    dims[s] = D.dim(f.slot_ty[s].s, f.slot_ty[s].level);
    if (dims[s] == 0) return;  // vacuous: a variable ranges over the zero space
  }
  Env env{in, std::vector<Vec>(nslots)};
  const std::size_t out_dim = D.dim(f.ty.s, f.ty.level);
  while (true) {
    for (std::size_t s = 0; s < nslots; ++s) env.bind[s] = unit(F, dims[s], idx[s]);
    std::vector<Vec> vals;
    for (const auto& side : f.sides)
      vals.push_back(side->kind == Node::Zero ? zeros(F, out_dim) : eval(*side, env));
    for (std::size_t k = 1; k < vals.size(); ++k) {
      if (vals[k] == vals[0]) continue;
      std::vector<std::size_t> w(idx);
      for (auto& x : w) ++x;
      rep.record({id, w, f.slot_name, vals[0], vals[k]});
      break;
    }
    std::size_t s = 0;
    while (s < nslots && ++idx[s] == dims[s]) idx[s++] = 0;
    if (s == nslots) return;
  }
}

std::string instantiate(const std::string& text, int level) {
  std::string out = text;
  const std::string from = "_{i}", to = "_{" + std::to_string(level) + "}";
  for (std::size_t p = 0; (p = out.find(from, p)) != std::string::npos; p += to.size())
    out.replace(p, from.size(), to);
  return out;
}

std::vector<CompiledCondition> compile_list(ConditionList l) {
  std::map<std::pair<std::string, int>, const detail::RawRepair*> repairs;
  for (const auto& r : detail::raw_repairs()) repairs[{r.id, r.sub}] = &r;
  std::map<std::string, int> eq_count;
  for (const auto& raw : detail::raw_conditions())
    if (raw.list == std::string(list_name(l))) ++eq_count[raw.id];

  std::vector<CompiledCondition> out;
  for (const auto& raw : detail::raw_conditions()) {
    if (raw.list != std::string(list_name(l))) continue;
    const std::string text = raw.text;
    auto rep = repairs.find({raw.id, raw.sub});
    const bool generic = text.find("_{i}") != std::string::npos ||
                         (rep != repairs.end() && std::string(rep->second->text).find("_{i}") != std::string::npos);
    for (int lvl : generic ? std::vector<int>{0, 1} : std::vector<int>{-1}) {
      CompiledCondition c;
      c.label = raw.id;
      c.sub = raw.sub;
      c.level = lvl;
      c.id = raw.id;
      if (eq_count[raw.id] > 1) c.id += "." + std::to_string(raw.sub);
      if (lvl >= 0) c.id += "[i=" + std::to_string(lvl) + "]";
      c.as_written = lvl >= 0 ? instantiate(text, lvl) : text;
      try {
        c.as_written_formula = parse_formula(c.as_written);
      } catch (const ParseError& e) {
        c.as_written_error = e.what();
      }
      if (rep != repairs.end()) {
        const auto* r = rep->second;
        c.corrected = lvl >= 0 ? instantiate(r->text, lvl) : std::string(r->text);
        c.repair_kind = r->suspect ? RepairKind::Semantic : RepairKind::Syntax;
        c.repair_reason = r->reason;
        c.formula = parse_formula(*c.corrected);  // a bad repair is a build defect
      } else {
        if (!c.as_written_formula) throw Error(c.id + ": " + c.as_written_error);
        c.formula = c.as_written_formula;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

const std::vector<CompiledCondition>& compiled_conditions(ConditionList l) {
  static std::once_flag once[5];
  static std::vector<CompiledCondition> lists[5];
  const int k = static_cast<int>(l);
  std::call_once(once[k], [&] { lists[k] = compile_list(l); });
  return lists[k];
}

ConditionOutcome evaluate_conditions(ConditionList l, const ConditionInputs& in,
                                     const CheckOptions& opt) {
  if (!in.D) throw Error("evaluate_conditions: no datum");
  ConditionOutcome out{ConditionReport(opt.violation_cap), true, {}};
  out.report.set_conforming(in.D->field().conforming());
  for (const auto& c : compiled_conditions(l)) {
    ConditionReport main(opt.violation_cap);
    evaluate_grid(*c.formula, c.id, in, main);
    bool written_ok = main.ok();
    if (c.corrected) {
      if (c.as_written_formula) {
        ConditionReport written(opt.violation_cap);
        evaluate_grid(*c.as_written_formula, c.id, in, written);
        written_ok = written.ok();
        if (c.suspect() && written_ok != main.ok()) {
          out.disagreeing.push_back(c.id);
          const auto& v = written.ok() ? main.violations().front() : written.violations().front();
          std::string w;
          for (std::size_t i = 0; i < v.witness.size(); ++i)
            w += (i ? "," : "") + v.vars[i] + "=e" + std::to_string(v.witness[i]);
          out.report.note({c.id, "paper-typo-suspect",
                           std::string("as-written form ") + (written.ok() ? "holds" : "fails") +
                               " but corrected form " + (main.ok() ? "holds" : "fails") + " at (" +
                               w + "); verdict uses the corrected form: " + c.repair_reason});
        }
      } else if (c.suspect()) {
        out.report.note({c.id, "paper-typo-suspect",
                         "as-written form is not evaluable (" + c.as_written_error +
                             "); verdict uses the corrected form: " + c.repair_reason});
      }
    }
    out.as_written_ok = out.as_written_ok && written_ok;
    out.report.merge(main);
  }
  out.report.canonicalize();
  return out;
}

ConditionReport evaluate_formula(const std::string& id, const std::string& latex,
                                 const ConditionInputs& in, const CheckOptions& opt) {
  ConditionReport rep(opt.violation_cap);
  evaluate_grid(*parse_formula(latex), id, in, rep);
  return rep;
}

std::string formula_error(const std::string& latex) {
  try {
    parse_formula(latex);
    return "";
  } catch (const ParseError& e) {
    return e.what();
  }
}

}  // namespace zinbiel
