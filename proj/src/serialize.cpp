#include "fibkit/serialize.hpp"

#include <stdexcept>

namespace fibkit {

namespace {

std::size_t require_index(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    throw std::invalid_argument("expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

template <class T, class F>
std::vector<T> list_from(const Json& j, F parse) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(parse(e));
  return out;
}

Json optional_cyclotomic(const std::optional<Cyclotomic>& x) { return x ? to_json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational as a string");
  const std::string s = j.get<std::string>();
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  return Cyclotomic::from_coeffs(j.at("order").get<long>(), list_from<Rational>(j.at("coeffs"), rational_from_json));
}

Json to_json(const Mat2& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(Json::array({to_json(row[0]), to_json(row[1])}));
  return out;
}

Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a 2x2 matrix");
  Mat2 m;
  for (std::size_t i = 0; i < 2; ++i) {
    if (!j[i].is_array() || j[i].size() != 2) throw std::invalid_argument("expected a 2x2 matrix");
    for (std::size_t k = 0; k < 2; ++k) m[i][k] = cyclotomic_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const FusionRing& r) {
  const std::size_t n = r.rank();
  Json N = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (std::size_t k = 0; k < n; ++k) plane.push_back(r.product(i, k));
    N.push_back(plane);
  }
  return Json{{"labels", r.labels()}, {"unit", r.unit()}, {"dual", r.duals()}, {"N", N}};
}

FusionRing fusion_ring_from_json(const Json& j) {
  auto labels = j.at("labels").get<std::vector<std::string>>();
  const std::size_t n = labels.size();
  const std::size_t unit = require_index(j.at("unit"));
  auto dual = list_from<std::size_t>(j.at("dual"), require_index);
  const Json& N = j.at("N");
  if (unit >= n || dual.size() != n || !N.is_array() || N.size() != n) throw std::invalid_argument("fusion ring: inconsistent sizes");
  std::vector<int> flat;
  for (const auto& plane : N) {
    if (!plane.is_array() || plane.size() != n) throw std::invalid_argument("fusion ring: N must be n x n x n");
    for (const auto& row : plane) {
      if (!row.is_array() || row.size() != n) throw std::invalid_argument("fusion ring: N must be n x n x n");
      for (const auto& v : row) {
        const int x = v.get<int>();
        if (x < 0) throw std::invalid_argument("fusion ring: negative structure constant");
        flat.push_back(x);
      }
    }
  }
  for (std::size_t d : dual)
    if (d >= n) throw std::invalid_argument("fusion ring: dual index out of range");
  return FusionRing(std::move(labels), unit, std::move(dual), std::move(flat));
}

Json to_json(const NimRep& rep) {
  return Json{{"ring_name", rep.ring_name}, {"ring", to_json(rep.ring)}, {"basis", rep.basis}, {"action", rep.action}};
}

NimRep nim_rep_from_json(const Json& j) {
  NimRep rep{fusion_ring_from_json(j.at("ring")), j.at("ring_name").get<std::string>(),
             j.at("basis").get<std::vector<std::string>>(), j.at("action").get<std::vector<IntMatrix>>()};
  if (rep.action.size() != rep.ring.rank()) throw std::invalid_argument("nim rep: one matrix per ring element required");
  for (const auto& m : rep.action) {
    if (m.size() != rep.rank()) throw std::invalid_argument("nim rep: matrix size does not match the basis");
    for (const auto& row : m)
      if (row.size() != rep.rank()) throw std::invalid_argument("nim rep: matrix is not square");
  }
  return rep;
}

Json to_json(const SetPartition& p) { return Json{{"ell", p.ell}, {"parts", p.parts}, {"text", p.to_string()}}; }

SetPartition set_partition_from_json(const Json& j) {
  return SetPartition::make(j.at("ell").get<int>(), j.at("parts").get<std::vector<std::vector<int>>>());
}

Json to_json(const FibAssociator& a) { return Json{{"alpha", to_json(a.alpha)}, {"A", to_json(a.A)}}; }

FibAssociator associator_from_json(const Json& j) {
  return FibAssociator{cyclotomic_from_json(j.at("alpha")), mat2_from_json(j.at("A"))};
}

Json to_json(const FibBraiding& b) { return Json{{"m", b.exponent()}, {"u", to_json(b.u)}, {"w", to_json(b.w)}}; }

FibBraiding braiding_from_json(const Json& j) {
  return FibBraiding{cyclotomic_from_json(j.at("u")), cyclotomic_from_json(j.at("w"))};
}

Json to_json(const FibModularData& d) {
  return Json{{"m", d.m},
              {"a", to_json(d.a)},
              {"u", to_json(d.u)},
              {"rho", to_json(d.rho)},
              {"gamma", to_json(d.gamma)},
              {"dimX", to_json(d.dimX)},
              {"DimC", to_json(d.DimC)},
              {"double_braiding_trace", to_json(d.double_braiding_trace)},
              {"tau_plus", to_json(d.tau_plus)},
              {"tau_minus", to_json(d.tau_minus)},
              {"xi_squared", to_json(d.xi_squared)},
              {"t_prefactor", to_json(d.t_prefactor)},
              {"convention", to_string(d.convention)},
              {"S", to_json(d.S)},
              {"T", to_json(d.T)}};
}

FibModularData modular_data_from_json(const Json& j) {
  FibModularData d;
  d.m = j.at("m").get<int>();
  d.a = cyclotomic_from_json(j.at("a"));
  d.u = cyclotomic_from_json(j.at("u"));
  d.rho = cyclotomic_from_json(j.at("rho"));
  d.gamma = cyclotomic_from_json(j.at("gamma"));
  d.dimX = cyclotomic_from_json(j.at("dimX"));
  d.DimC = cyclotomic_from_json(j.at("DimC"));
  d.double_braiding_trace = cyclotomic_from_json(j.at("double_braiding_trace"));
  d.tau_plus = cyclotomic_from_json(j.at("tau_plus"));
  d.tau_minus = cyclotomic_from_json(j.at("tau_minus"));
  d.xi_squared = cyclotomic_from_json(j.at("xi_squared"));
  d.t_prefactor = cyclotomic_from_json(j.at("t_prefactor"));
  const std::string conv = j.at("convention").get<std::string>();
  if (conv == to_string(TConvention::inverse_square)) {
    d.convention = TConvention::inverse_square;
  } else if (conv == to_string(TConvention::square)) {
    d.convention = TConvention::square;
  } else {
    throw std::invalid_argument("unknown T convention '" + conv + "'");
  }
  d.S = mat2_from_json(j.at("S"));
  d.T = mat2_from_json(j.at("T"));
  return d;
}

Json to_json(const Sl2Report& r) {
  return Json{{"s4_identity", r.s4_identity},
              {"residual_u^-2", optional_cyclotomic(r.residual_inverse_square)},
              {"residual_u^2", optional_cyclotomic(r.residual_square)},
              {"naive_prefactor_residual_u^-2", optional_cyclotomic(r.naive_residual_inverse_square)},
              {"naive_prefactor_residual_u^2", optional_cyclotomic(r.naive_residual_square)},
              {"selected", r.selected ? Json(to_string(*r.selected)) : Json(nullptr)}};
}

Json to_json(const AlgebraClass& c) {
  return Json{{"ell", c.ell}, {"coeffs", c.coeffs}, {"text", c.to_string()}};
}

AlgebraClass algebra_class_from_json(const Json& j) {
  AlgebraClass c{j.at("ell").get<int>(), j.at("coeffs").get<std::vector<long>>()};
  if (c.ell < 1 || c.coeffs.size() != (std::size_t{1} << c.ell)) throw std::invalid_argument("algebra class: 2^ell coefficients required");
  return c;
}

Json to_json(const ScanReport& r) {
  Json entries = Json::array();
  Json ribbon = Json::array();
  for (const auto& e : r.entries) {
    Json row{{"partition", to_json(e.partition)}, {"class", to_json(e.cls)}, {"ribbon", e.check.ribbon}};
    if (e.check.witness) row["witness"] = monomial_label(*e.check.witness);
    entries.push_back(row);
    if (e.check.ribbon) ribbon.push_back(e.cls.to_string());
  }
  return Json{{"params", r.params}, {"entries", entries}, {"ribbon_candidates", ribbon}};
}

ScanReport scan_report_from_json(const Json& j) {
  ScanReport r;
  r.params = j.at("params").get<TwistParams>();
  for (const auto& row : j.at("entries")) {
    ScanEntry e{set_partition_from_json(row.at("partition")), algebra_class_from_json(row.at("class")), {}};
    e.check.ribbon = row.at("ribbon").get<bool>();
    if (row.contains("witness")) {
      const std::string w = row.at("witness").get<std::string>();
      bool found = false;
      for (unsigned mask = 0; mask < e.cls.coeffs.size() && !found; ++mask) {
        if (monomial_label(mask) == w) {
          e.check.witness = mask;
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("unknown witness monomial '" + w + "'");
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

Json to_json(const VoaModel& m) {
  Json weights = Json::array();
  for (const auto& h : m.weights) weights.push_back(to_json(h));
  return Json{{"name", m.name}, {"c", to_json(m.c)}, {"labels", m.fusion.labels()}, {"weights", weights}, {"fusion", to_json(m.fusion)}};
}

VoaModel voa_model_from_json(const Json& j) {
  VoaModel m{j.at("name").get<std::string>(), rational_from_json(j.at("c")),
             list_from<Rational>(j.at("weights"), rational_from_json), fusion_ring_from_json(j.at("fusion"))};
  if (m.weights.size() != m.fusion.rank()) throw std::invalid_argument("model: one weight per label required");
  return m;
}

Json to_json(const ExtensionReport& r, const VoaModel& model) {
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json labels = Json::array();
    for (std::size_t i : o.members) labels.push_back(model.fusion.label(i));
    orbits.push_back(Json{{"members", o.members},
                          {"labels", labels},
                          {"local", o.local},
                          {"endomorphisms", o.endomorphisms},
                          {"weight_mod_1", to_json(o.weight_mod_1)}});
  }
  Json spectrum = Json::array();
  for (const auto& h : r.local_spectrum) spectrum.push_back(to_json(h));
  return Json{{"model", r.model},
              {"currents", r.currents},
              {"currents_integral", r.currents_integral},
              {"c", to_json(r.c)},
              {"orbits", orbits},
              {"local_spectrum", spectrum}};
}

ExtensionReport extension_report_from_json(const Json& j) {
  ExtensionReport r;
  r.model = j.at("model").get<std::string>();
  r.currents = list_from<std::size_t>(j.at("currents"), require_index);
  r.currents_integral = j.at("currents_integral").get<bool>();
  r.c = rational_from_json(j.at("c"));
  for (const auto& o : j.at("orbits")) {
    r.orbits.push_back(ExtensionOrbit{list_from<std::size_t>(o.at("members"), require_index), o.at("local").get<bool>(),
                                      o.at("endomorphisms").get<int>(), rational_from_json(o.at("weight_mod_1"))});
  }
  r.local_spectrum = list_from<Rational>(j.at("local_spectrum"), rational_from_json);
  return r;
}

Json to_json(const PointedData& p) {
  Json sigma = Json::array();
  for (const auto& row : p.sigma) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    sigma.push_back(r);
  }
  Json twists = Json::array();
  for (const auto& t : p.twists) twists.push_back(to_json(t));
  return Json{{"sigma", sigma},
              {"kernel", p.kernel},
              {"nondegenerate", p.nondegenerate},
              {"twists", twists},
              {"xi_squared", to_json(p.xi_squared)},
              {"central_charge_mod_4", to_json(p.central_charge_mod_4)}};
}

Json to_json(const M35Report& r) {
  Json map = Json::object();
  for (const auto& [from, to] : r.label_map) map[from] = to;
  return Json{{"label_map", map},
              {"fusion_isomorphic", r.fusion_isomorphic},
              {"fib_weight_congruence", r.fib_weight_congruence},
              {"pointed_twist_congruence", r.pointed_twist_congruence},
              {"product_twist_congruence", r.product_twist_congruence},
              {"c_pointed_mod_4", to_json(r.c_pointed_mod_4)},
              {"c_fib", to_json(r.c_fib)},
              {"fib_exponents", r.fib_exponents}};
}

Json to_json(const CatalogCheck& c) { return Json{{"name", c.name}, {"detail", c.detail}, {"holds", c.holds}}; }

}  // namespace fibkit
