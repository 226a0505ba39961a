#include "invlfp/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

#include "invlfp/errors.hpp"

namespace invlfp {

namespace {

using nlohmann::json;

Rational rat_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("expected rational as string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

json rat_to_json(const Rational& q) { return to_string(q); }

RatVector vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected array of rationals");
  RatVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json vec_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rat_to_json(q));
  return out;
}

// `cols` disambiguates the width of a matrix with zero rows.
RatMatrix mat_from_json(const json& j, std::size_t cols) {
  if (!j.is_array()) throw ParseError("expected array of matrix rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) {
    rows.push_back(vec_from_json(r));
    if (rows.back().size() != rows.front().size())
      throw ParseError("ragged matrix rows");
  }
  if (rows.empty()) return RatMatrix(0, cols);
  return RatMatrix::from_rows(rows);
}

json mat_to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

std::vector<std::size_t> indices_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected 1-based index array");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() == 0)
      throw ParseError("indices must be positive integers");
    out.push_back(e.get<std::size_t>() - 1);
  }
  if (!std::is_sorted(out.begin(), out.end()) ||
      std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError("index arrays must be sorted and duplicate-free");
  return out;
}

json indices_to_json(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

// Reorders the y-coordinates of the instance so that `fixed` (sorted) become
// the leading coordinates. Only A's columns, C's rows, and c are affected.
void permute_to_prefix(Instance& inst, const std::vector<std::size_t>& fixed) {
  const std::size_t n = inst.n();
  std::vector<std::size_t> perm = fixed;
  std::vector<bool> is_fixed(n, false);
  for (std::size_t i : fixed) {
    if (i >= n) throw ParseError("partial-fix position out of range");
    is_fixed[i] = true;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!is_fixed[j]) perm.push_back(j);
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (perm == id) return;
  inst.A = inst.A.select_cols(perm);
  inst.C = inst.C.select_rows(perm);
  RatVector c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = inst.c[perm[j]];
  inst.c = std::move(c);
}

TargetSet target_from_json(const json& j, Instance& inst) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "singleton") return SingletonTarget{vec_from_json(field(j, "ybar"))};
  if (kind == "basis") return BasisTarget{indices_from_json(field(j, "cols"))};
  if (kind == "partial") {
    PartialFixTarget t;
    t.ybar = vec_from_json(field(j, "ybar"));
    if (inst.n() < t.ybar.size()) throw ParseError("partial fix longer than n");
    t.free_count = inst.n() - t.ybar.size();
    if (auto it = j.find("positions"); it != j.end())
      permute_to_prefix(inst, indices_from_json(*it));
    return t;
  }
  if (kind == "polyhedron")
    return PolyhedronTarget{mat_from_json(field(j, "S"), inst.n()),
                            vec_from_json(field(j, "t"))};
  if (kind == "oracle") {
    OracleBackedTarget t;
    t.R = rat_from_json(field(j, "R"));
    std::string backing = field(j, "backing").get<std::string>();
    if (backing == "box")
      t.backing = BoxSpec{vec_from_json(field(j, "lo")), vec_from_json(field(j, "hi"))};
    else if (backing == "ball")
      t.backing = BallSpec{vec_from_json(field(j, "center")), rat_from_json(field(j, "radius"))};
    else if (backing == "polytope")
      t.backing = PolytopeSpec{mat_from_json(field(j, "S"), inst.n()),
                               vec_from_json(field(j, "t"))};
    else
      throw ParseError("unknown oracle backing \"" + backing + "\"");
    return t;
  }
  throw ParseError("unknown target kind \"" + kind + "\"");
}

json target_to_json(const TargetSet& target) {
  json j;
  if (const auto* s = std::get_if<SingletonTarget>(&target)) {
    j["kind"] = "singleton";
    j["ybar"] = vec_to_json(s->ybar);
  } else if (const auto* bt = std::get_if<BasisTarget>(&target)) {
    j["kind"] = "basis";
    j["cols"] = indices_to_json(bt->cols);
  } else if (const auto* p = std::get_if<PartialFixTarget>(&target)) {
    j["kind"] = "partial";
    j["ybar"] = vec_to_json(p->ybar);
  } else if (const auto* poly = std::get_if<PolyhedronTarget>(&target)) {
    j["kind"] = "polyhedron";
    j["S"] = mat_to_json(poly->S);
    j["t"] = vec_to_json(poly->t);
  } else {
    const auto& o = std::get<OracleBackedTarget>(target);
    j["kind"] = "oracle";
    j["R"] = rat_to_json(o.R);
    if (const auto* box = std::get_if<BoxSpec>(&o.backing)) {
      j["backing"] = "box";
      j["lo"] = vec_to_json(box->lo);
      j["hi"] = vec_to_json(box->hi);
    } else if (const auto* ball = std::get_if<BallSpec>(&o.backing)) {
      j["backing"] = "ball";
      j["center"] = vec_to_json(ball->center);
      j["radius"] = rat_to_json(ball->radius);
    } else {
      const auto& pt = std::get<PolytopeSpec>(o.backing);
      j["backing"] = "polytope";
      j["S"] = mat_to_json(pt.S);
      j["t"] = vec_to_json(pt.t);
    }
  }
  return j;
}

}  // namespace

ParsedDocument parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  ParsedDocument doc;
  Instance& inst = doc.instance;

  std::string form = field(j, "form").get<std::string>();
  if (form == "natural")
    inst.form = Form::Natural;
  else if (form == "standard")
    inst.form = Form::Standard;
  else
    throw ParseError("form must be \"natural\" or \"standard\"");

  inst.c = vec_from_json(field(j, "c"));
  inst.b = vec_from_json(field(j, "b"));
  const std::size_t n = inst.c.size(), m = inst.b.size();
  // k can only be read off a nonempty matrix: B, then C, then X.D
  std::size_t k = 0;
  auto width = [](const json& mj) -> std::size_t {
    return (mj.is_array() && !mj.empty() && mj[0].is_array()) ? mj[0].size() : 0;
  };
  if (m > 0)
    k = width(field(j, "B"));
  else if (n > 0)
    k = width(field(j, "C"));
  else
    k = width(field(field(j, "X"), "D"));
  inst.A = mat_from_json(field(j, "A"), n);
  inst.B = mat_from_json(field(j, "B"), k);
  inst.C = mat_from_json(field(j, "C"), k);
  const json& xj = field(j, "X");
  inst.X.d = vec_from_json(field(xj, "d"));
  inst.X.D = mat_from_json(field(xj, "D"), k);

  doc.target = target_from_json(field(j, "target"), inst);

  std::string scen = field(j, "scenario").get<std::string>();
  if (scen == "optimistic")
    doc.scenario = Scenario::Optimistic;
  else if (scen == "pessimistic")
    doc.scenario = Scenario::Pessimistic;
  else
    throw ParseError("scenario must be \"optimistic\" or \"pessimistic\"");

  validate(inst, doc.target);
  return doc;
}

std::string serialize_instance(const ParsedDocument& doc) {
  json j;
  j["form"] = doc.instance.form == Form::Natural ? "natural" : "standard";
  j["A"] = mat_to_json(doc.instance.A);
  j["B"] = mat_to_json(doc.instance.B);
  j["b"] = vec_to_json(doc.instance.b);
  j["C"] = mat_to_json(doc.instance.C);
  j["c"] = vec_to_json(doc.instance.c);
  j["X"] = {{"D", mat_to_json(doc.instance.X.D)}, {"d", vec_to_json(doc.instance.X.d)}};
  j["target"] = target_to_json(doc.target);
  j["scenario"] = doc.scenario == Scenario::Optimistic ? "optimistic" : "pessimistic";
  return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "active-set") return ActiveSetCertificate{indices_from_json(field(j, "rows"))};
  if (kind == "support-family") {
    SupportFamilyCertificate c;
    c.active = indices_from_json(field(j, "active"));
    for (const auto& s : field(j, "supports"))
      c.supports.push_back({indices_from_json(field(s, "s1")),
                            indices_from_json(field(s, "s2"))});
    return c;
  }
  if (kind == "basis-zero-set")
    return BasisZeroSetCertificate{indices_from_json(field(j, "zero_set"))};
  if (kind == "oracle")
    return OracleCertificate{indices_from_json(field(j, "active")),
                             vec_from_json(field(j, "y_hat")),
                             rat_from_json(field(j, "delta"))};
  throw ParseError("unknown certificate kind \"" + kind + "\"");
}

std::string serialize_certificate(const Certificate& cert) {
  json j;
  if (const auto* a = std::get_if<ActiveSetCertificate>(&cert)) {
    j["kind"] = "active-set";
    j["rows"] = indices_to_json(a->rows);
  } else if (const auto* s = std::get_if<SupportFamilyCertificate>(&cert)) {
    j["kind"] = "support-family";
    j["active"] = indices_to_json(s->active);
    json sup = json::array();
    for (const auto& h : s->supports)
      sup.push_back({{"s1", indices_to_json(h.s1)}, {"s2", indices_to_json(h.s2)}});
    j["supports"] = sup;
  } else if (const auto* bz = std::get_if<BasisZeroSetCertificate>(&cert)) {
    j["kind"] = "basis-zero-set";
    j["zero_set"] = indices_to_json(bz->zero_set);
  } else {
    const auto& o = std::get<OracleCertificate>(cert);
    j["kind"] = "oracle";
    j["active"] = indices_to_json(o.active);
    j["y_hat"] = vec_to_json(o.y_hat);
    j["delta"] = rat_to_json(o.delta);
  }
  return j.dump(2) + "\n";
}

}  // namespace invlfp
