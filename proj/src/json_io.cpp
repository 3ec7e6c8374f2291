#include "zinbiel/json_io.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

namespace zinbiel {

// ---------------------------------------------------------------- writers

json to_json(const LinMap& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.cod_dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dom_dim(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const BilMap& m) {
  json out = json::array();
  for (const auto& e : m.entries()) out.push_back(json::array({e.k + 1, e.i + 1, e.j + 1, e.v.to_string()}));
  return out;
}

namespace {

json two_alg_body(const ZinbielTwoAlgebra& T) {
  json j;
  j["dim1"] = T.dim1();
  j["dim0"] = T.dim0();
  j["mult1"] = to_json(T.Z1.mult);
  j["mult0"] = to_json(T.Z0.mult);
  j["phi"] = to_json(T.phi);
  j["act_left"] = to_json(T.act.left);
  j["act_right"] = to_json(T.act.right);
  return j;
}

json header(const char* kind, const Field& f) {
  json j;
  j["kind"] = kind;
  j["field"] = f.name();
  return j;
}

json datum_body(const ExtendingDatum& D, const std::vector<MapKind>& kinds, bool with_sigma) {
  json j;
  j["Z"] = two_alg_body(D.Z);
  j["V"] = json{{"dim1", D.vdim(1)}, {"dim0", D.vdim(0)}, {"d", to_json(D.V.d)}};
  for (MapKind k : kinds)
    for (int i = 0; i < 4; ++i) j[map_field_name(k, i)] = to_json(D.map(k, i));
  if (with_sigma) j["sigma"] = to_json(D.sigma);
  return j;
}

const std::vector<MapKind> kDatumKinds(kAllMapKinds.begin(), kAllMapKinds.end());
const std::vector<MapKind> kCrossedKinds = {MapKind::HarpoonR, MapKind::HarpoonL, MapKind::Omega,
                                            MapKind::Star};
const std::vector<MapKind> kMatchedKinds = {MapKind::HarpoonR, MapKind::HarpoonL, MapKind::TriR,
                                            MapKind::TriL};

void append(json& to, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) to[it.key()] = it.value();
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

}  // namespace

json to_json(const ZinbielAlgebra& A) {
  json j = header("zinbiel_algebra", A.mult.field());
  j["dim"] = A.dim;
  j["mult"] = to_json(A.mult);
  return j;
}

json to_json(const ZinbielTwoAlgebra& T) {
  json j = header("zinbiel_2_algebra", T.field());
  append(j, two_alg_body(T));
  return j;
}

json to_json(const ExtendingDatum& D) {
  json j = header("extending_datum", D.field());
  append(j, datum_body(D, kDatumKinds, true));
  return j;
}

json to_json(const CrossedSystem& cs) {
  json j = header("crossed_system", cs.embed().field());
  append(j, datum_body(cs.embed(), kCrossedKinds, true));
  return j;
}

json to_json(const MatchedPairDatum& mp) {
  const ExtendingDatum& D = mp.embed();
  json j = header("matched_pair", D.field());
  j["Z"] = two_alg_body(D.Z);
  j["V"] = two_alg_body(star_algebra(D));
  for (MapKind k : kMatchedKinds)
    for (int i = 0; i < 4; ++i) j[map_field_name(k, i)] = to_json(D.map(k, i));
  return j;
}

json to_json(const ComplementSplit& s) {
  json j = header("complement_split", s.E.field());
  j["E"] = two_alg_body(s.E);
  j["iota1"] = to_json(s.iota1);
  j["iota0"] = to_json(s.iota0);
  j["p1"] = to_json(s.p1);
  j["p0"] = to_json(s.p0);
  return j;
}

json to_json(const RSData& rs) {
  json j;
  j["r1"] = to_json(rs.r1);
  j["r0"] = to_json(rs.r0);
  j["s1"] = to_json(rs.s1);
  j["s0"] = to_json(rs.s0);
  return j;
}

json to_json(const ConditionReport& r) {
  json j;
  j["ok"] = r.ok();
  j["conforming_field"] = r.conforming_field();
  j["violation_count"] = r.total();
  json vs = json::array();
  for (const auto& v : r.violations()) {
    json o;
    o["id"] = v.id;
    o["witness"] = v.witness;
    o["vars"] = v.vars;
    o["lhs"] = vec_json(v.lhs);
    o["rhs"] = vec_json(v.rhs);
    vs.push_back(std::move(o));
  }
  j["violations"] = std::move(vs);
  if (r.truncated()) j["truncated"] = true;
  if (!r.notes().empty()) {
    json ns = json::array();
    for (const auto& n : r.notes()) ns.push_back(json{{"id", n.id}, {"kind", n.kind}, {"detail", n.detail}});
    j["notes"] = std::move(ns);
  }
  return j;
}

std::string canonical_string(const ExtendingDatum& D) { return to_json(D).dump(); }

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- reader

namespace {

constexpr std::size_t kMaxDim = 64;

// Input iterator that counts the newlines it has moved past.
struct CountingIt {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;
  const char* p;
  int* newlines;
  reference operator*() const { return *p; }
  CountingIt& operator++() {
    if (*p == '\n') ++*newlines;
    ++p;
    return *this;
  }
  CountingIt operator++(int) {
    CountingIt t = *this;
    ++*this;
    return t;
  }
  friend bool operator==(const CountingIt& a, const CountingIt& b) { return a.p == b.p; }
  friend bool operator!=(const CountingIt& a, const CountingIt& b) { return a.p != b.p; }
};

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// SAX handler building an ordered_json while recording the line of every
// value (object members use the line of their key) and rejecting duplicates.
class LineSax {
 public:
  LineSax(const std::string& file, const std::string& text, int* newlines)
      : file_(file), text_(text), newlines_(newlines) {}

  json root;
  std::map<std::string, int> lines;

  bool null() { return put(json(nullptr)); }
  bool boolean(bool b) { return put(json(b)); }
  bool number_integer(json::number_integer_t v) { return put(json(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return put(json(v)); }
  bool number_float(json::number_float_t v, const std::string&) { return put(json(v)); }
  bool string(std::string& s) { return put(json(s)); }
  bool binary(json::binary_t&) { return put(json()); }
  bool start_object(std::size_t) { return open(json::object()); }
  bool start_array(std::size_t) { return open(json::array()); }
  bool end_object() { return close(); }
  bool end_array() { return close(); }
  bool key(std::string& k) {
    Frame& f = stack_.back();
    if (f.keys.count(k)) {
      std::string path = join(f.path, k);
      throw ParseError(file_ + ":" + std::to_string(line()) + ": key '" + path + "': duplicate key");
    }
    f.keys.insert(k);
    key_ = k;
    key_line_ = line();
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) {
    std::string what = ex.what();
    auto c = what.find("column");
    auto colon = c == std::string::npos ? std::string::npos : what.find(": ", c);
    std::string msg = colon == std::string::npos ? what : what.substr(colon + 2);
    throw ParseError(file_ + ":" + std::to_string(line_of_byte(text_, pos > 0 ? pos - 1 : 0)) +
                     ": malformed JSON: " + msg);
  }

 private:
  struct Frame {
    json* j;
    std::string path;
    std::set<std::string> keys;
  };

  static std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
  }
  int line() const { return 1 + *newlines_; }

  // Inserts v under the current parent; returns the stored value and its path.
  std::pair<json*, std::string> insert(json v) {
    if (stack_.empty()) {
      root = std::move(v);
      lines[""] = line();
      return {&root, ""};
    }
    Frame& f = stack_.back();
    if (f.j->is_object()) {
      std::string path = join(f.path, key_);
      lines[path] = key_line_;
      (*f.j)[key_] = std::move(v);
      return {&(*f.j)[key_], path};
    }
    std::string path = f.path + "[" + std::to_string(f.j->size()) + "]";
    lines[path] = line();
    f.j->push_back(std::move(v));
    return {&f.j->back(), path};
  }
  bool put(json v) {
    insert(std::move(v));
    return true;
  }
  bool open(json v) {
    auto [p, path] = insert(std::move(v));
    stack_.push_back({p, path, {}});
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  const std::string& file_;
  const std::string& text_;
  int* newlines_;
  std::vector<Frame> stack_;
  std::string key_;
  int key_line_ = 1;
};

struct Ctx {
  std::string file;
  std::map<std::string, int> lines;
  Field F = Field::rationals();
};

struct Node {
  const Ctx* c;
  const json* j;
  std::string path;

  int line() const {
    auto it = c->lines.find(path);
    return it == c->lines.end() ? 1 : it->second;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(c->file + ":" + std::to_string(line()) + ": key '" +
                     (path.empty() ? std::string("(document)") : path) + "': " + msg);
  }
  std::string child_path(const std::string& key) const { return path.empty() ? key : path + "." + key; }

  const Node& object() const {
    if (!j->is_object()) fail("expected an object");
    return *this;
  }
  const Node& array() const {
    if (!j->is_array()) fail("expected an array");
    return *this;
  }
  bool has(const std::string& key) const { return j->contains(key); }
  Node at(const std::string& key) const {
    object();
    if (!j->contains(key)) fail("missing key '" + key + "'");
    return {c, &(*j)[key], child_path(key)};
  }
  std::optional<Node> opt(const std::string& key) const {
    object();
    if (!j->contains(key)) return std::nullopt;
    return Node{c, &(*j)[key], child_path(key)};
  }
  Node elem(std::size_t i) const { return {c, &(*j)[i], path + "[" + std::to_string(i) + "]"}; }
  std::size_t size() const { return j->size(); }

  void only_keys(const std::set<std::string>& allowed) const {
    object();
    for (auto it = j->begin(); it != j->end(); ++it)
      if (!allowed.count(it.key())) Node{c, &it.value(), child_path(it.key())}.fail("unknown key");
  }

  std::size_t as_index(std::size_t lo, std::size_t hi, const char* what) const {
    if (!j->is_number_unsigned() && !(j->is_number_integer() && j->get<long long>() >= 0))
      fail(std::string("expected a non-negative integer ") + what);
    auto v = j->get<std::uint64_t>();
    if (v < lo || v > hi)
      fail(std::string(what) + " " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
           std::to_string(hi) + "]");
    return static_cast<std::size_t>(v);
  }
  std::size_t as_dim() const { return as_index(0, kMaxDim, "dimension"); }
  std::string as_string() const {
    if (!j->is_string()) fail("expected a string");
    return j->get<std::string>();
  }
  Scalar as_scalar() const {
    if (!j->is_string()) fail("scalars must be strings such as \"3\" or \"-1/2\"");
    try {
      return c->F.parse_scalar(j->get<std::string>());
    } catch (const Error& e) {
      fail(e.what());
    }
  }
};

// Rows of scalars; cod is fixed, dom is fixed or inferred from the first row.
LinMap read_matrix(const Node& n, std::size_t cod, std::optional<std::size_t> dom) {
  n.array();
  if (n.size() != cod)
    n.fail("expected " + std::to_string(cod) + " rows, got " + std::to_string(n.size()));
  std::size_t cols = dom.value_or(0);
  if (!dom && cod > 0) {
    Node r0 = n.elem(0).array();
    cols = r0.size();
    if (cols > kMaxDim) r0.fail("too many columns");
  }
  LinMap m(n.c->F, cod, cols);
  for (std::size_t r = 0; r < cod; ++r) {
    Node row = n.elem(r);
    row.array();
    if (row.size() != cols)
      row.fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row.elem(c).as_scalar());
  }
  return m;
}

LinMap read_matrix_or_zero(const Node& obj, const std::string& key, std::size_t cod, std::size_t dom) {
  if (auto n = obj.opt(key)) return read_matrix(*n, cod, dom);
  return LinMap::zero(obj.c->F, cod, dom);
}

BilMap read_bilmap(const Node& n, std::size_t a, std::size_t b, std::size_t c) {
  n.array();
  BilMapBuilder builder(n.c->F, a, b, c);
  std::array<std::size_t, 3> prev{0, 0, 0};
  for (std::size_t e = 0; e < n.size(); ++e) {
    Node entry = n.elem(e);
    entry.array();
    if (entry.size() != 4) entry.fail("expected [k, i, j, \"coefficient\"]");
    if (c == 0 || a == 0 || b == 0) entry.fail("map has no coefficients (a space has dimension 0)");
    std::array<std::size_t, 3> key{entry.elem(0).as_index(1, c, "output index k"),
                                   entry.elem(1).as_index(1, a, "first argument index i"),
                                   entry.elem(2).as_index(1, b, "second argument index j")};
    if (e > 0 && !(prev < key)) entry.fail("coefficients must be sorted by (k, i, j) without repeats");
    prev = key;
    builder.add(key[0] - 1, key[1] - 1, key[2] - 1, entry.elem(3).as_scalar());
  }
  return builder.build();
}

BilMap read_bilmap_or_zero(const Node& obj, const std::string& key, std::size_t a, std::size_t b,
                           std::size_t c) {
  if (auto n = obj.opt(key)) return read_bilmap(*n, a, b, c);
  return BilMap::zero(obj.c->F, a, b, c);
}

ZinbielTwoAlgebra read_two_alg_body(const Node& n, const std::set<std::string>& extra = {}) {
  std::set<std::string> keys = {"dim1", "dim0", "mult1", "mult0", "phi", "act_left", "act_right"};
  keys.insert(extra.begin(), extra.end());
  n.only_keys(keys);
  const std::size_t d1 = n.at("dim1").as_dim(), d0 = n.at("dim0").as_dim();
  return {ZinbielAlgebra(d1, read_bilmap_or_zero(n, "mult1", d1, d1, d1)),
          ZinbielAlgebra(d0, read_bilmap_or_zero(n, "mult0", d0, d0, d0)),
          read_matrix_or_zero(n, "phi", d0, d1),
          BimodulePair{read_bilmap_or_zero(n, "act_left", d0, d1, d1),
                       read_bilmap_or_zero(n, "act_right", d1, d0, d1)}};
}

ExtendingDatum read_datum_body(const Node& n, const std::vector<MapKind>& kinds, bool with_sigma,
                               const std::set<std::string>& extra = {}) {
  std::set<std::string> keys = {"Z", "V"};
  keys.insert(extra.begin(), extra.end());
  for (MapKind k : kinds)
    for (int j = 0; j < 4; ++j) keys.insert(map_field_name(k, j));
  if (with_sigma) keys.insert("sigma");
  n.only_keys(keys);
  ZinbielTwoAlgebra Z = read_two_alg_body(n.at("Z").object());
  Node v = n.at("V").object();
  v.only_keys({"dim1", "dim0", "d"});
  const std::size_t v1 = v.at("dim1").as_dim(), v0 = v.at("dim0").as_dim();
  ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace(v1, v0, read_matrix_or_zero(v, "d", v0, v1)));
  for (MapKind k : kinds)
    for (int j = 0; j < 4; ++j) {
      auto s = D.expected_shape(k, j);
      D.map(k, j) = read_bilmap_or_zero(n, map_field_name(k, j), s[0], s[1], s[2]);
    }
  if (with_sigma) D.sigma = read_matrix_or_zero(n, "sigma", D.zdim(0), v1);
  return D;
}

const std::set<std::string> kHeader = {"kind", "field"};

std::set<std::string> with_header(std::set<std::string> s) {
  s.insert(kHeader.begin(), kHeader.end());
  return s;
}

Document read_document(const Node& root) {
  root.object();
  const std::string kind = root.at("kind").as_string();
  if (kind == "zinbiel_algebra") {
    root.only_keys(with_header({"dim", "mult"}));
    std::size_t n = root.at("dim").as_dim();
    return ZinbielAlgebra(n, read_bilmap_or_zero(root, "mult", n, n, n));
  }
  if (kind == "zinbiel_2_algebra") return read_two_alg_body(root, kHeader);
  if (kind == "extending_datum") return read_datum_body(root, kDatumKinds, true, kHeader);
  if (kind == "crossed_system") return CrossedSystem(read_datum_body(root, kCrossedKinds, true, kHeader));
  if (kind == "matched_pair") {
    std::set<std::string> keys = with_header({"Z", "V"});
    for (MapKind k : kMatchedKinds)
      for (int j = 0; j < 4; ++j) keys.insert(map_field_name(k, j));
    root.only_keys(keys);
    ZinbielTwoAlgebra Z = read_two_alg_body(root.at("Z").object());
    ZinbielTwoAlgebra V = read_two_alg_body(root.at("V").object());
    ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace(V.dim1(), V.dim0(), V.phi));
    D.star = {V.Z0.mult, V.Z1.mult, V.act.left, V.act.right};
    for (MapKind k : kMatchedKinds)
      for (int j = 0; j < 4; ++j) {
        auto s = D.expected_shape(k, j);
        D.map(k, j) = read_bilmap_or_zero(root, map_field_name(k, j), s[0], s[1], s[2]);
      }
    return MatchedPairDatum(std::move(D));
  }
  if (kind == "complement_split") {
    root.only_keys(with_header({"E", "iota1", "iota0", "p1", "p0"}));
    ZinbielTwoAlgebra E = read_two_alg_body(root.at("E").object());
    LinMap i1 = read_matrix(root.at("iota1"), E.dim1(), std::nullopt);
    LinMap i0 = read_matrix(root.at("iota0"), E.dim0(), std::nullopt);
    LinMap p1 = read_matrix(root.at("p1"), i1.dom_dim(), E.dim1());
    LinMap p0 = read_matrix(root.at("p0"), i0.dom_dim(), E.dim0());
    return ComplementSplit{E, i1, i0, p1, p0};
  }
  if (kind == "factorization") {
    root.only_keys(with_header({"E", "z1", "z0", "v1", "v0"}));
    ZinbielTwoAlgebra E = read_two_alg_body(root.at("E").object());
    FactorInclusions inc{read_matrix(root.at("z1"), E.dim1(), std::nullopt),
                         read_matrix(root.at("z0"), E.dim0(), std::nullopt),
                         read_matrix(root.at("v1"), E.dim1(), std::nullopt),
                         read_matrix(root.at("v0"), E.dim0(), std::nullopt)};
    return FactorizationInput{E, inc};
  }
  if (kind == "two_morphism") {
    root.only_keys(with_header({"source", "target", "phi1", "phi0"}));
    ZinbielTwoAlgebra S = read_two_alg_body(root.at("source").object());
    ZinbielTwoAlgebra T = read_two_alg_body(root.at("target").object());
    TwoMorphism f{read_matrix(root.at("phi1"), T.dim1(), S.dim1()),
                  read_matrix(root.at("phi0"), T.dim0(), S.dim0())};
    return TwoMorphismInput{S, T, f};
  }
  if (kind == "rs_data") {
    root.only_keys(with_header({"D", "Dp", "r1", "r0", "s1", "s0"}));
    ExtendingDatum D = read_datum_body(root.at("D").object(), kDatumKinds, true);
    ExtendingDatum Dp = read_datum_body(root.at("Dp").object(), kDatumKinds, true);
    RSData rs{read_matrix(root.at("r1"), D.zdim(1), D.vdim(1)), read_matrix(root.at("r0"), D.zdim(0), D.vdim(0)),
              read_matrix(root.at("s1"), D.vdim(1), D.vdim(1)), read_matrix(root.at("s0"), D.vdim(0), D.vdim(0))};
    return RSInput{D, Dp, rs};
  }
  root.at("kind").fail("unknown kind '" + kind + "'");
}

}  // namespace

Document parse_document(const std::string& text, const std::string& filename, const FieldChoice& fc) {
  int newlines = 0;
  LineSax sax(filename, text, &newlines);
  CountingIt first{text.data(), &newlines}, last{text.data() + text.size(), &newlines};
  json::sax_parse(first, last, &sax);

  Ctx ctx;
  ctx.file = filename;
  ctx.lines = std::move(sax.lines);
  Node root{&ctx, &sax.root, ""};
  root.object();
  std::optional<Field> doc_field;
  if (auto f = root.opt("field")) {
    try {
      doc_field = Field::parse(f->as_string(), fc.allow_small_char);
    } catch (const FieldError& e) {
      f->fail(e.what());
    }
    if (fc.override_field && !(*fc.override_field == *doc_field))
      f->fail("field '" + doc_field->name() + "' conflicts with --field " + fc.override_field->name());
  }
  ctx.F = doc_field ? *doc_field : fc.override_field.value_or(Field::rationals());
  try {
    return read_document(root);
  } catch (const DimError& e) {
    root.fail(e.what());
  }
}

Document load_document(const std::string& path, const FieldChoice& fc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path, fc);
}

const char* document_kind(const Document& d) {
  struct V {
    const char* operator()(const ZinbielAlgebra&) const { return "zinbiel_algebra"; }
    const char* operator()(const ZinbielTwoAlgebra&) const { return "zinbiel_2_algebra"; }
    const char* operator()(const ExtendingDatum&) const { return "extending_datum"; }
    const char* operator()(const CrossedSystem&) const { return "crossed_system"; }
    const char* operator()(const MatchedPairDatum&) const { return "matched_pair"; }
    const char* operator()(const ComplementSplit&) const { return "complement_split"; }
    const char* operator()(const FactorizationInput&) const { return "factorization"; }
    const char* operator()(const TwoMorphismInput&) const { return "two_morphism"; }
    const char* operator()(const RSInput&) const { return "rs_data"; }
  };
  return std::visit(V{}, d);
}

}  // namespace zinbiel
