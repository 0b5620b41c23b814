#include "pilab/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pilab/actions.hpp"
#include "pilab/errors.hpp"

namespace pilab {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void shape(const std::string& msg) { throw ParseError(0, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) shape(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) shape(std::string("missing field \"") + key + "\"");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

Rational rat(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  shape("rationals must be strings \"p/q\" or integers");
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_unsigned()) shape(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Vector vec(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) shape("expected a vector of length " + std::to_string(n));
  Vector v;
  for (const auto& x : j) v.push_back(rat(x));
  return v;
}

Matrix mat(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) shape("expected a matrix with " + std::to_string(rows) + " rows");
  std::vector<Vector> r;
  for (const auto& row : j) r.push_back(vec(row, cols));
  return Matrix::from_rows(r, cols);
}

std::vector<Vector> row_list(const json& j, std::size_t cols) {
  if (!j.is_array()) shape("expected a list of rows");
  std::vector<Vector> r;
  for (const auto& row : j) r.push_back(vec(row, cols));
  return r;
}

std::vector<std::string> labels_of(const json& j, std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  if (const json* l = optional_field(j, "labels")) {
    if (!l->is_array() || l->size() != n) shape("labels must list one name per basis element");
    for (const auto& x : *l) {
      if (!x.is_string()) shape("labels must be strings");
      out.push_back(x.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  }
  return out;
}

template <class F>
auto checked(const std::string& checker, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::associativity_violation) throw ValidationError("associativity", e.what());
    if (e.kind() == ErrorKind::unit_violation) throw ValidationError("unit", e.what());
    throw ValidationError(checker, e.what());
  }
}

Algebra algebra_of(const json& j) {
  const std::size_t dim = count(field(j, "dim"), "dim");
  if (dim == 0) throw ValidationError("algebra", "dimension must be positive");
  const json& m = field(j, "mult");
  if (!m.is_array() || m.size() != dim) shape("mult must be a dim x dim x dim array");
  std::vector<Rational> flat;
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != dim) shape("mult must be a dim x dim x dim array");
    for (const auto& cell : row) {
      const Vector v = vec(cell, dim);
      flat.insert(flat.end(), v.begin(), v.end());
    }
  }
  std::optional<Vector> unit;
  if (const json* u = optional_field(j, "unit")) unit = vec(*u, dim);
  return checked("algebra", [&] { return Algebra::make(dim, std::move(flat), unit); });
}

ActionAlgebra action_algebra_of(const json& j) {
  Algebra a = algebra_of(j);
  if (!a.unit()) {
    auto u = a.find_unit();
    if (!u) throw ValidationError("action-algebra", "H has no unit");
    a = Algebra::make(a.dim(), a.structure(), *u);
  }
  const auto labels = labels_of(j, a.dim(), "h");
  return checked("action-algebra", [&] { return ActionAlgebra::make(std::move(a), labels); });
}

HopfData hopf_of(const json& j) {
  HopfData h;
  h.h = action_algebra_of(j);
  const std::size_t d = h.dim();
  h.comul = mat(field(j, "comul"), d, d * d);
  h.counit = vec(field(j, "counit"), d);
  h.antipode = mat(field(j, "antipode"), d, d);
  const CheckReport rep = check_hopf(h);
  if (const CheckItem* bad = rep.first_failure()) throw ValidationError("hopf", bad->name + " " + bad->detail);
  return h;
}

GroupData group_of(const json& j) {
  const json& t = field(j, "table");
  if (!t.is_array() || t.empty()) shape("group table must be a non-empty square array");
  const std::size_t n = t.size();
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n) shape("group table must be square");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(count(x, "group table entry"));
    table.push_back(std::move(r));
  }
  std::vector<bool> g0;
  if (const json* g = optional_field(j, "g0")) {
    if (!g->is_array() || g->size() != n) shape("g0 must list one flag per element");
    for (const auto& x : *g) {
      if (!x.is_boolean()) shape("g0 flags must be booleans");
      g0.push_back(x.get<bool>());
    }
  }
  const auto labels = labels_of(j, n, "g");
  return checked("group", [&] { return GroupData::make(table, labels, g0); });
}

std::vector<Matrix> operators_of(const json& j, std::size_t count_ops, std::size_t dim) {
  if (!j.is_array() || j.size() != count_ops) shape("expected one operator per basis element of H");
  std::vector<Matrix> ops;
  for (const auto& m : j) ops.push_back(mat(m, dim, dim));
  return ops;
}

ojson emit_rat(const Rational& r) { return to_string(r); }

ojson emit_vec(const Vector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(emit_rat(x));
  return a;
}

ojson emit_mat(const Matrix& m) {
  ojson a = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(emit_vec(m.row_vector(r)));
  return a;
}

ojson emit_algebra(const Algebra& a) {
  ojson j;
  j["dim"] = a.dim();
  ojson mult = ojson::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(emit_vec(a.product(i, k)));
    mult.push_back(row);
  }
  j["mult"] = mult;
  if (a.unit()) j["unit"] = emit_vec(*a.unit());
  return j;
}

ojson emit_action_algebra(const ActionAlgebra& h) {
  ojson j = emit_algebra(h.algebra);
  j["labels"] = h.labels;
  return j;
}

ojson emit_group(const GroupData& g) {
  ojson j;
  j["labels"] = g.labels();
  j["table"] = g.table();
  j["g0"] = g.g0();
  return j;
}

ojson emit_rows(const Subspace& s) {
  ojson a = ojson::array();
  for (const auto& v : s.vectors()) a.push_back(emit_vec(v));
  return a;
}

bool same_action(const Action& a, const Action& b) {
  return a.kind() == b.kind() && a.h().algebra == b.h().algebra && a.h().labels == b.h().labels &&
         a.ops() == b.ops() && a.group() == b.group() && a.hopf().has_value() == b.hopf().has_value() &&
         (!a.hopf() || (a.hopf()->comul == b.hopf()->comul && a.hopf()->counit == b.hopf()->counit &&
                        a.hopf()->antipode == b.hopf()->antipode));
}

bool same_decomposition(const std::optional<Decomposition>& a, const std::optional<Decomposition>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->algebra == b->algebra && a->radical == b->radical && a->nilpotency_index == b->nilpotency_index &&
         a->components == b->components;
}

Subspace subspace_of(const json& j, std::size_t dim) {
  return Subspace::span(dim, row_list(j, dim));
}

}  // namespace

bool operator==(const Scenario& a, const Scenario& b) {
  const bool graded_eq = a.graded.has_value() == b.graded.has_value() &&
                         (!a.graded || (a.graded->degree == b.graded->degree && a.graded->group == b.graded->group));
  return a.name == b.name && a.algebra == b.algebra && same_action(a.action, b.action) && a.group == b.group &&
         a.assignment == b.assignment && graded_eq && same_decomposition(a.decomposition, b.decomposition);
}

Decomposition candidate_decomposition(const Algebra& a, Subspace radical, std::vector<Subspace> components) {
  Decomposition d;
  d.algebra = a;
  d.radical = std::move(radical);
  d.components = std::move(components);
  Subspace power = d.radical;
  d.nilpotency_index = 1;
  while (!power.is_zero() && d.nilpotency_index <= a.dim()) {
    power = subspace_product(a, power, d.radical);
    ++d.nilpotency_index;
  }
  return d;
}

Scenario make_scenario(std::string name, Algebra a, Action act) {
  if (act.dim_a() != a.dim()) throw ValidationError("action", "operators do not match the algebra dimension");
  Scenario s;
  s.name = std::move(name);
  switch (act.kind()) {
    case ActionKind::hopf:
    case ActionKind::grading:
      if (!act.hopf()) throw ValidationError("module-algebra", "Hopf action without Hopf data");
      if (!check_module_algebra(*act.hopf(), a, act)) {
        throw ValidationError("module-algebra", "h(ab) != (h_(1) a)(h_(2) b)");
      }
      break;
    case ActionKind::generalized:
    case ActionKind::group:
      if (!check_generalized_action(act.h(), a, act).pass()) {
        throw ValidationError("generalized-action", "some h(ab) has no decomposition");
      }
      break;
    case ActionKind::trivial:
      break;
  }
  s.algebra = std::move(a);
  s.action = std::move(act);
  s.group = s.action.group();
  return s;
}

Scenario make_group_scenario(std::string name, Algebra a, GroupData g,
                             std::vector<std::pair<Matrix, bool>> assignment) {
  Action act = checked("group-action", [&] { return gaction_to_generalized(a, g, assignment); });
  Scenario s = make_scenario(std::move(name), std::move(a), std::move(act));
  s.group = std::move(g);
  s.assignment = std::move(assignment);
  return s;
}

Scenario make_graded_scenario(std::string name, GradedAlgebra x) {
  Action act = checked("grading", [&] { return duality_transform(x); });
  Scenario s = make_scenario(std::move(name), x.algebra, std::move(act));
  s.group = x.group;
  s.graded = std::move(x);
  return s;
}

Scenario parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, e.what());
  }
  if (!root.is_object()) shape("top level must be an object");
  std::string name;
  if (const json* n = optional_field(root, "name")) {
    if (!n->is_string()) shape("name must be a string");
    name = n->get<std::string>();
  }
  Algebra a = algebra_of(field(root, "algebra"));
  const std::size_t dim = a.dim();
  const json& act = field(root, "action");
  const json& kind_j = field(act, "kind");
  if (!kind_j.is_string()) shape("action kind must be a string");
  const std::string kind = kind_j.get<std::string>();

  Scenario s;
  if (kind == "trivial") {
    s = make_scenario(name, std::move(a), Action::trivial(dim));
  } else if (kind == "group") {
    GroupData g = group_of(field(act, "group"));
    const json& ops = field(act, "operators");
    if (!ops.is_array() || ops.size() != g.order()) shape("expected one operator per group element");
    std::vector<std::pair<Matrix, bool>> assignment;
    for (const auto& o : ops) {
      bool anti = false;
      if (const json* f = optional_field(o, "anti")) {
        if (!f->is_boolean()) shape("anti must be a boolean");
        anti = f->get<bool>();
      }
      assignment.emplace_back(mat(field(o, "matrix"), dim, dim), anti);
    }
    s = make_group_scenario(name, std::move(a), std::move(g), std::move(assignment));
  } else if (kind == "grading") {
    GroupData g = group_of(field(act, "group"));
    const json& deg = field(act, "degree");
    if (!deg.is_array() || deg.size() != dim) shape("degree must list one group element per basis vector");
    std::vector<std::size_t> degree;
    for (const auto& x : deg) degree.push_back(count(x, "degree"));
    GradedAlgebra x = checked("grading", [&] { return GradedAlgebra::make(a, g, degree); });
    s = make_graded_scenario(name, std::move(x));
  } else if (kind == "hopf") {
    HopfData h = hopf_of(field(act, "hopf"));
    auto ops = operators_of(field(act, "operators"), h.dim(), dim);
    Action action = checked("action", [&] { return Action::make(ActionKind::hopf, h.h, std::move(ops), h); });
    s = make_scenario(name, std::move(a), std::move(action));
  } else if (kind == "generalized") {
    ActionAlgebra h = action_algebra_of(field(act, "h"));
    auto ops = operators_of(field(act, "operators"), h.dim(), dim);
    Action action = checked("action", [&] { return Action::make(ActionKind::generalized, h, std::move(ops)); });
    s = make_scenario(name, std::move(a), std::move(action));
  } else {
    shape("unknown action kind \"" + kind + "\"");
  }

  if (const json* d = optional_field(root, "decomposition")) {
    Subspace radical = subspace_of(field(*d, "radical"), dim);
    const json& comps = field(*d, "components");
    if (!comps.is_array()) shape("components must be a list of row lists");
    std::vector<Subspace> parts;
    for (const auto& c : comps) parts.push_back(subspace_of(c, dim));
    Decomposition dec = candidate_decomposition(s.algebra, std::move(radical), std::move(parts));
    if (const json* p = optional_field(*d, "nilpotency_index")) dec.nilpotency_index = count(*p, "nilpotency_index");
    s.decomposition = std::move(dec);
  }
  return s;
}

std::string emit_scenario(const Scenario& s) {
  ojson root;
  if (!s.name.empty()) root["name"] = s.name;
  root["algebra"] = emit_algebra(s.algebra);
  ojson act;
  act["kind"] = to_string(s.kind());
  switch (s.kind()) {
    case ActionKind::trivial:
      break;
    case ActionKind::group: {
      act["group"] = emit_group(*s.group);
      ojson ops = ojson::array();
      for (const auto& [m, anti] : s.assignment) {
        ojson o;
        o["matrix"] = emit_mat(m);
        o["anti"] = anti;
        ops.push_back(o);
      }
      act["operators"] = ops;
      break;
    }
    case ActionKind::grading:
      act["group"] = emit_group(s.graded->group);
      act["degree"] = s.graded->degree;
      break;
    case ActionKind::hopf: {
      const HopfData& h = *s.action.hopf();
      ojson hj = emit_action_algebra(h.h);
      hj["comul"] = emit_mat(h.comul);
      hj["counit"] = emit_vec(h.counit);
      hj["antipode"] = emit_mat(h.antipode);
      act["hopf"] = hj;
      ojson ops = ojson::array();
      for (const auto& m : s.action.ops()) ops.push_back(emit_mat(m));
      act["operators"] = ops;
      break;
    }
    case ActionKind::generalized: {
      act["h"] = emit_action_algebra(s.action.h());
      ojson ops = ojson::array();
      for (const auto& m : s.action.ops()) ops.push_back(emit_mat(m));
      act["operators"] = ops;
      break;
    }
  }
  root["action"] = act;
  if (s.decomposition) {
    ojson d;
    d["radical"] = emit_rows(s.decomposition->radical);
    ojson comps = ojson::array();
    for (const auto& c : s.decomposition->components) comps.push_back(emit_rows(c));
    d["components"] = comps;
    d["nilpotency_index"] = s.decomposition->nilpotency_index;
    root["decomposition"] = d;
  }
  return root.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::validation_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

HPolynomial parse_polynomial(const std::string& text, const ActionAlgebra& h) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(line, e.what());
  }
  const std::size_t n = count(field(root, "n"), "n");
  if (const json* l = optional_field(root, "labels")) {
    if (labels_of(root, h.dim(), "") != h.labels) {
      throw ValidationError("labels", "polynomial labels do not match the acting algebra");
    }
    (void)l;
  }
  auto label_vector = [&](const json& x) {
    if (x.is_null()) return h.unit();
    if (!x.is_string()) shape("term labels must be strings or null");
    for (std::size_t i = 0; i < h.dim(); ++i)
      if (h.labels[i] == x.get<std::string>()) return unit_vector(h.dim(), i);
    throw ValidationError("labels", "unknown label \"" + x.get<std::string>() + "\"");
  };
  HPolynomial f(n, h.dim());
  const json& terms = field(root, "terms");
  if (!terms.is_array()) shape("terms must be a list");
  for (const auto& t : terms) {
    const Rational c = rat(field(t, "coef"));
    const json& p = field(t, "perm");
    if (!p.is_array() || p.size() != n) shape("perm must have length n");
    std::vector<std::size_t> perm;
    for (const auto& x : p) {
      const std::size_t v = count(x, "perm entry");
      if (v < 1 || v > n) shape("perm entries run from 1 to n");
      perm.push_back(v - 1);
    }
    std::vector<Vector> labels(n, h.unit());
    if (const json* l = optional_field(t, "labels")) {
      if (!l->is_array() || l->size() != n) shape("term labels must have length n");
      for (std::size_t j = 0; j < n; ++j) labels[j] = label_vector((*l)[j]);
    }
    // Expand the label vectors into basis labels.
    std::vector<std::pair<Monomial, Rational>> partial{{Monomial{perm, {}}, c}};
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::pair<Monomial, Rational>> next;
      for (const auto& [m, coef] : partial)
        for (std::size_t w = 0; w < h.dim(); ++w) {
          if (sgn(labels[j][w]) == 0) continue;
          Monomial e = m;
          e.labels.push_back(w);
          next.emplace_back(std::move(e), coef * labels[j][w]);
        }
      partial = std::move(next);
    }
    try {
      for (const auto& [m, coef] : partial) f.add_term(m, coef);
    } catch (const Error& e) {
      throw ValidationError("polynomial", e.what());
    }
  }
  return f;
}

std::string emit_polynomial(const HPolynomial& f, const ActionAlgebra& h) {
  ojson root;
  root["n"] = f.n();
  root["labels"] = h.labels;
  ojson terms = ojson::array();
  for (const auto& [m, c] : f.terms()) {
    ojson t;
    t["coef"] = to_string(c);
    std::vector<std::size_t> perm;
    for (auto v : m.perm) perm.push_back(v + 1);
    t["perm"] = perm;
    std::vector<std::string> labels;
    for (auto l : m.labels) labels.push_back(h.labels[l]);
    t["labels"] = labels;
    terms.push_back(t);
  }
  root["terms"] = terms;
  return root.dump(1) + "\n";
}

}  // namespace pilab
