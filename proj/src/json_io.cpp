#include "spheremap/json_io.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace spheremap {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    // drop the library's own "[json.exception...] parse error at ...:" prefix
    std::string msg = e.what();
    if (auto pos = msg.find(": ", msg.find("parse error")); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(msg, line, column);
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key) + " is missing");
  return *it;
}

const Json& array_member(const Json& j, const char* key, const std::string& path) {
  const Json& a = member(j, key, path);
  if (!a.is_array()) throw ParseError(at(path, key) + " must be an array");
  return a;
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

std::int64_t int_from(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t size_from(const Json& j, const std::string& path) {
  const auto v = int_from(j, path);
  if (v < 0) throw ParseError(path + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

bool bool_from(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path + " must be a boolean");
  return j.get<bool>();
}

double double_from(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path + " must be a number");
  return j.get<double>();
}

std::string string_from(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + " must be a string");
  return j.get<std::string>();
}

/// +inf has no JSON form and is written as null.
Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }
double double_or_inf(const Json& j, const std::string& path) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : double_from(j, path);
}

Json index_json(const MultiIndex& a) { return Json(a.exponents()); }

MultiIndex index_from(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + " must be an array of exponents");
  if (n != 0 && j.size() != n)
    throw ParseError(path + " has " + std::to_string(j.size()) + " exponents, expected " + std::to_string(n));
  std::vector<int> e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto v = int_from(j[i], at(path, i));
    if (v < 0 || v > std::numeric_limits<int>::max()) throw ParseError(at(path, i) + " must be a nonnegative exponent");
    e.push_back(static_cast<int>(v));
  }
  return MultiIndex(std::move(e));
}

Json cplx_fields(Json obj, const CplxRat& c) {
  obj["re"] = to_json(c.re());
  obj["im"] = to_json(c.im());
  return obj;
}

CplxRat cplx_fields_from(const Json& j, const std::string& path) {
  Rational re = rational_from_json(member(j, "re", path), at(path, "re"));
  Rational im = has(j, "im") ? rational_from_json(j["im"], at(path, "im")) : Rational(0);
  return {std::move(re), std::move(im)};
}

template <class T, class F>
Json array_of(const std::vector<T>& v, F&& f) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(f(x));
  return a;
}

template <class F>
auto vector_from(const Json& j, const char* key, const std::string& path, F&& f) {
  const Json& a = array_member(j, key, path);
  using T = decltype(f(a, std::string()));
  std::vector<T> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i], at(at(path, key), i)));
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  return array_of(v, [](const Rational& q) { return to_json(q); });
}

std::vector<Rational> rationals_from(const Json& j, const char* key, const std::string& path) {
  return vector_from(j, key, path, [](const Json& x, const std::string& p) { return rational_from_json(x, p); });
}

Json real_value_json(const RealValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return to_json(*q);
  const auto& iv = std::get<RootInterval>(v);
  Json o;
  o["lo"] = to_json(iv.lo);
  o["hi"] = to_json(iv.hi);
  return o;
}

RealValue real_value_from(const Json& j, const std::string& path) {
  if (j.is_string()) return rational_from_json(j, path);
  return RootInterval{rational_from_json(member(j, "lo", path), at(path, "lo")),
                      rational_from_json(member(j, "hi", path), at(path, "hi"))};
}

Json coeff_table_json(const CoeffTable& t) {
  Json a = Json::array();
  for (const auto& [alpha, v] : t) a.push_back({{"alpha", index_json(alpha)}, {"value", to_json(v)}});
  return a;
}

CoeffTable coeff_table_from(const Json& j, const char* key, const std::string& path) {
  CoeffTable t;
  const Json& a = array_member(j, key, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = at(at(path, key), i);
    MultiIndex alpha = index_from(member(a[i], "alpha", p), 0, at(p, "alpha"));
    if (!t.emplace(std::move(alpha), rational_from_json(member(a[i], "value", p), at(p, "value"))).second)
      throw ParseError(p + " repeats an exponent");
  }
  return t;
}

Json point_json(const std::vector<std::complex<double>>& z) {
  Json a = Json::array();
  for (const auto& x : z) a.push_back(Json::array({x.real(), x.imag()}));
  return a;
}

std::vector<std::complex<double>> point_from(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + " must be an array of [re, im] pairs");
  std::vector<std::complex<double>> z;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError(p + " must be a [re, im] pair");
    z.emplace_back(double_from(j[i][0], p), double_from(j[i][1], p));
  }
  return z;
}

BlowupLevel blowup_level_from(const std::string& s, const std::string& path) {
  for (auto l : {BlowupLevel::ProvedOriginFixed, BlowupLevel::ProvedTopDegree, BlowupLevel::NumericEvidence,
                 BlowupLevel::Unknown})
    if (s == to_string(l)) return l;
  throw ParseError(path + " has unknown blow-up level '" + s + "'");
}

ComplementVerdict complement_verdict_from(const std::string& s, const std::string& path) {
  for (auto v : {ComplementVerdict::Proper, ComplementVerdict::ContainmentOnly, ComplementVerdict::Unknown})
    if (s == to_string(v)) return v;
  throw ParseError(path + " has unknown verdict '" + s + "'");
}

}  // namespace

Json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j, const std::string& path) {
  const std::string s = string_from(j, path);
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const CplxRat& c) { return cplx_fields(Json::object(), c); }

CplxRat cplx_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return rational_from_json(j, path);
  return cplx_fields_from(j, path);
}

Json to_json(const HoloPoly& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) terms.push_back(cplx_fields({{"alpha", index_json(alpha)}}, c));
  return {{"terms", terms}};
}

HoloPoly holo_from_json(const Json& j, std::size_t n, const std::string& path) {
  HoloPoly p(n);
  std::set<MultiIndex> seen;
  const Json& terms = array_member(j, "terms", path);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = at(at(path, "terms"), i);
    MultiIndex alpha = index_from(member(terms[i], "alpha", tp), n, at(tp, "alpha"));
    if (!seen.insert(alpha).second) throw ParseError(tp + " repeats an exponent");
    p.add_term(alpha, cplx_fields_from(terms[i], tp));
  }
  return p;
}

Json to_json(const WeightedMap& p) { return to_json(RationalMap(p)); }

Json to_json(const RationalMap& f) {
  const bool polynomial = f.reduced_claimed() && f.denominator() == HoloPoly::constant(f.dim(), CplxRat(1));
  const char* kind = !polynomial ? "rational" : f.numerator().has_unit_weights() ? "poly" : "weighted";
  Json j;
  j["n"] = f.dim();
  j["N"] = f.target_dim();
  j["kind"] = kind;
  Json comps = Json::array();
  for (const auto& e : f.numerator().entries()) {
    Json c = to_json(e.poly);
    if (!polynomial || !f.numerator().has_unit_weights()) {
      Json w;
      w["weight"] = to_json(e.weight);
      w["terms"] = c["terms"];
      c = w;
    }
    comps.push_back(c);
  }
  j["components"] = comps;
  if (!polynomial) {
    j["denominator"] = to_json(f.denominator());
    j["reduced_claimed"] = f.reduced_claimed();
  }
  return j;
}

RationalMap map_from_json(const Json& j, const std::string& path) {
  const std::size_t n = size_from(member(j, "n", path), at(path, "n"));
  if (n == 0) throw ParseError(at(path, "n") + " must be positive");
  const std::string kind = string_from(member(j, "kind", path), at(path, "kind"));
  if (kind != "poly" && kind != "weighted" && kind != "rational")
    throw ParseError(at(path, "kind") + " must be poly, weighted or rational");
  const Json& comps = array_member(j, "components", path);
  if (has(j, "N") && size_from(j["N"], at(path, "N")) != comps.size())
    throw ParseError(at(path, "N") + " does not match the number of components");
  std::vector<WeightedEntry> entries;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string cp = at(at(path, "components"), i);
    Rational w = has(comps[i], "weight") ? rational_from_json(comps[i]["weight"], at(cp, "weight")) : Rational(1);
    if (sgn(w) <= 0) throw ParseError(at(cp, "weight") + " must be positive");
    if (kind == "poly" && w != 1) throw ParseError(at(cp, "weight") + " must be 1 for kind poly");
    entries.push_back({std::move(w), holo_from_json(comps[i], n, cp)});
  }
  WeightedMap num(n, std::move(entries));
  if (kind != "rational") {
    if (has(j, "denominator")) throw ParseError(at(path, "denominator") + " is only allowed for kind rational");
    return RationalMap(num);
  }
  HoloPoly q = holo_from_json(member(j, "denominator", path), n, at(path, "denominator"));
  if (q.is_zero()) throw ParseError(at(path, "denominator") + " is identically zero");
  const bool reduced = has(j, "reduced_claimed") && bool_from(j["reduced_claimed"], at(path, "reduced_claimed"));
  return RationalMap(std::move(num), std::move(q), reduced);
}

RationalMap map_from_document(const Json& j) {
  if (has(j, "map")) return map_from_json(j["map"], "$.map");
  return map_from_json(j, "$");
}

Json to_json(const HermPoly& Q) {
  Json terms = Json::array();
  for (const auto& [key, c] : Q.coeffs()) {
    if (key.mirrored() < key) continue;
    terms.push_back(cplx_fields({{"alpha", index_json(key.alpha)}, {"beta", index_json(key.beta)}}, c));
  }
  return {{"n", Q.dim()}, {"terms", terms}};
}

HermPoly herm_from_json(const Json& j, const std::string& path) {
  const std::size_t n = size_from(member(j, "n", path), at(path, "n"));
  HermPoly::Table table;
  const Json& terms = array_member(j, "terms", path);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = at(at(path, "terms"), i);
    HermKey key{index_from(member(terms[i], "alpha", tp), n, at(tp, "alpha")),
                index_from(member(terms[i], "beta", tp), n, at(tp, "beta"))};
    if (key.mirrored() < key) throw ParseError(tp + " must list (alpha, beta) with alpha <= beta");
    const CplxRat c = cplx_fields_from(terms[i], tp);
    if (c.is_zero()) continue;
    if (table.contains(key)) throw ParseError(tp + " repeats a key");
    if (key.alpha == key.beta && !c.is_real()) throw ParseError(tp + " diagonal coefficient must be real");
    table.emplace(key, c);
    if (!(key.alpha == key.beta)) table.emplace(key.mirrored(), c.conj());
  }
  return HermPoly(n, std::move(table));
}

Json to_json(const FoldProfile& prof) {
  Json j;
  if (prof.is_infinite()) {
    j["kind"] = "infinite";
    j["C"] = rationals_json(prof.C);
    j["reducible_witness"] = prof.reducible_witness;
    return j;
  }
  j["kind"] = "finite";
  Json entries = Json::array();
  for (const auto& e : prof.entries) entries.push_back({{"t", real_value_json(e.t)}, {"T", real_value_json(e.T)}});
  j["entries"] = entries;
  return j;
}

FoldProfile profile_from_json(const Json& j, const std::string& path) {
  FoldProfile prof;
  const std::string kind = string_from(member(j, "kind", path), at(path, "kind"));
  if (kind == "infinite") {
    prof.kind = FoldProfile::Kind::Infinite;
    prof.C = rationals_from(j, "C", path);
    if (has(j, "reducible_witness"))
      prof.reducible_witness = bool_from(j["reducible_witness"], at(path, "reducible_witness"));
    return prof;
  }
  if (kind != "finite") throw ParseError(at(path, "kind") + " must be finite or infinite");
  prof.entries = vector_from(j, "entries", path, [](const Json& e, const std::string& p) {
    return ProfileEntry{real_value_from(member(e, "t", p), at(p, "t")), real_value_from(member(e, "T", p), at(p, "T"))};
  });
  return prof;
}

Json to_json(const NewtonExpansion& e) {
  Json j;
  j["folds"] = array_of(e.folds.pairs(), [](const FoldPair& p) { return Json{{"t", to_json(p.t)}, {"T", to_json(p.T)}}; });
  j["b"] = rationals_json(e.b);
  j["intermediates"] = array_of(e.intermediates, [](const HermPoly& Q) { return to_json(Q); });
  j["remainder"] = to_json(e.remainder);
  j["denom_norm_sq"] = e.denom_norm_sq ? to_json(*e.denom_norm_sq) : Json(nullptr);
  j["degree_certificates"] = array_of(e.degree_certificates, [](const DegreeCertificate& c) {
    return Json{{"j", c.j}, {"bound", c.bound}};
  });
  return j;
}

NewtonExpansion expansion_from_json(const Json& j, const std::string& path) {
  NewtonExpansion e;
  auto pairs = vector_from(j, "folds", path, [](const Json& x, const std::string& p) {
    return FoldPair{rational_from_json(member(x, "t", p), at(p, "t")), rational_from_json(member(x, "T", p), at(p, "T"))};
  });
  try {
    e.folds = FoldData(std::move(pairs));
  } catch (const std::invalid_argument& err) {
    throw ParseError(at(path, "folds") + ": " + err.what());
  }
  e.b = rationals_from(j, "b", path);
  e.intermediates = vector_from(j, "intermediates", path, [](const Json& x, const std::string& p) {
    return herm_from_json(x, p);
  });
  e.remainder = herm_from_json(member(j, "remainder", path), at(path, "remainder"));
  if (has(j, "denom_norm_sq") && !j["denom_norm_sq"].is_null())
    e.denom_norm_sq = herm_from_json(j["denom_norm_sq"], at(path, "denom_norm_sq"));
  e.degree_certificates = vector_from(j, "degree_certificates", path, [](const Json& x, const std::string& p) {
    return DegreeCertificate{static_cast<int>(int_from(member(x, "j", p), at(p, "j"))),
                             static_cast<int>(int_from(member(x, "bound", p), at(p, "bound")))};
  });
  return e;
}

Json to_json(const NotAFold& e) { return {{"step", e.step()}, {"witness", to_json(e.witness())}}; }

Json to_json(const FactoryTrace& tr) {
  Json j;
  j["c"] = to_json(tr.c);
  j["a"] = array_of(tr.a, [](const CplxRat& c) { return to_json(c); });
  j["c_alpha"] = coeff_table_json(tr.c_alpha);
  j["d_alpha"] = coeff_table_json(tr.d_alpha);
  j["e_alpha"] = coeff_table_json(tr.e_alpha);
  j["f_beta"] = coeff_table_json(tr.f_beta);
  j["Qpp"] = to_json(tr.Qpp);
  j["Qp"] = to_json(tr.Qp);
  j["Q"] = to_json(tr.Q);
  j["Q0"] = to_json(tr.Q0);
  j["substitution_note"] = tr.substitution_note;
  return j;
}

FactoryTrace trace_from_json(const Json& j, const std::string& path) {
  FactoryTrace tr;
  tr.c = rational_from_json(member(j, "c", path), at(path, "c"));
  tr.a = vector_from(j, "a", path, [](const Json& x, const std::string& p) { return cplx_from_json(x, p); });
  tr.c_alpha = coeff_table_from(j, "c_alpha", path);
  tr.d_alpha = coeff_table_from(j, "d_alpha", path);
  tr.e_alpha = coeff_table_from(j, "e_alpha", path);
  tr.f_beta = coeff_table_from(j, "f_beta", path);
  tr.Qpp = herm_from_json(member(j, "Qpp", path), at(path, "Qpp"));
  tr.Qp = herm_from_json(member(j, "Qp", path), at(path, "Qp"));
  tr.Q = herm_from_json(member(j, "Q", path), at(path, "Q"));
  tr.Q0 = herm_from_json(member(j, "Q0", path), at(path, "Q0"));
  tr.substitution_note = string_from(member(j, "substitution_note", path), at(path, "substitution_note"));
  return tr;
}

Json to_json(const NormalForm& nf) {
  Json j;
  j["C"] = rationals_json(nf.C);
  j["degrees"] = nf.degrees;
  j["ell"] = nf.ell;
  j["blocks"] = array_of(nf.blocks, [](const WeightedMap& b) { return to_json(b); });
  Json U = Json::array();
  for (Eigen::Index r = 0; r < nf.U.rows(); ++r) {
    std::vector<std::complex<double>> row;
    for (Eigen::Index c = 0; c < nf.U.cols(); ++c) row.push_back(nf.U(r, c));
    U.push_back(point_json(row));
  }
  j["U"] = U;
  j["gram_certificate"] = nf.gram_certificate;
  j["residual"] = nf.residual;
  j["unitarity_defect"] = nf.unitarity_defect;
  return j;
}

NormalForm normal_form_from_json(const Json& j, const std::string& path) {
  NormalForm nf;
  nf.C = rationals_from(j, "C", path);
  nf.degrees = vector_from(j, "degrees", path, [](const Json& x, const std::string& p) {
    return static_cast<int>(int_from(x, p));
  });
  nf.ell = vector_from(j, "ell", path, [](const Json& x, const std::string& p) { return size_from(x, p); });
  nf.blocks = vector_from(j, "blocks", path, [](const Json& x, const std::string& p) {
    auto f = map_from_json(x, p);
    auto w = as_polynomial(f);
    if (!w) throw ParseError(p + " must be a polynomial map");
    return *w;
  });
  const Json& U = array_member(j, "U", path);
  const auto N = static_cast<Eigen::Index>(U.size());
  nf.U = ComplexMatrix::Zero(N, N);
  for (Eigen::Index r = 0; r < N; ++r) {
    const auto row = point_from(U[static_cast<std::size_t>(r)], at(at(path, "U"), static_cast<std::size_t>(r)));
    if (static_cast<Eigen::Index>(row.size()) != N) throw ParseError(at(path, "U") + " must be square");
    for (Eigen::Index c = 0; c < N; ++c) nf.U(r, c) = row[static_cast<std::size_t>(c)];
  }
  nf.gram_certificate = bool_from(member(j, "gram_certificate", path), at(path, "gram_certificate"));
  nf.residual = double_from(member(j, "residual", path), at(path, "residual"));
  nf.unitarity_defect = double_from(member(j, "unitarity_defect", path), at(path, "unitarity_defect"));
  return nf;
}

Json to_json(const DivisibilityCheck& c) { return {{"verdict", c.holds}, {"witness", to_json(c.witness)}}; }

DivisibilityCheck divisibility_from_json(const Json& j, const std::string& path) {
  return {bool_from(member(j, "verdict", path), at(path, "verdict")),
          herm_from_json(member(j, "witness", path), at(path, "witness"))};
}

Json to_json(const OutsideReport& r) {
  Json j;
  j["verdict"] = r.passed();
  j["min_norm"] = finite_or_null(r.min_norm);
  j["samples_used"] = r.samples_used;
  j["skipped_poles"] = r.skipped_poles;
  j["violations"] = array_of(r.violations, [](const SamplePoint& s) {
    return Json{{"z", point_json(s.z)}, {"value", s.value}};
  });
  j["seed"] = r.seed;
  return j;
}

OutsideReport outside_from_json(const Json& j, const std::string& path) {
  OutsideReport r;
  r.min_norm = double_or_inf(member(j, "min_norm", path), at(path, "min_norm"));
  r.samples_used = static_cast<int>(int_from(member(j, "samples_used", path), at(path, "samples_used")));
  r.skipped_poles = static_cast<int>(int_from(member(j, "skipped_poles", path), at(path, "skipped_poles")));
  r.violations = vector_from(j, "violations", path, [](const Json& x, const std::string& p) {
    return SamplePoint{point_from(member(x, "z", p), at(p, "z")), double_from(member(x, "value", p), at(p, "value"))};
  });
  const Json& seed = member(j, "seed", path);
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) throw ParseError(at(path, "seed") + " must be an integer");
  r.seed = seed.get<std::uint64_t>();
  return r;
}

Json to_json(const ReflectionReport& r) {
  Json j;
  j["verdict"] = r.passed();
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["samples_used"] = r.samples_used;
  j["skipped_poles"] = r.skipped_poles;
  j["seed"] = r.seed;
  return j;
}

ReflectionReport reflection_from_json(const Json& j, const std::string& path) {
  ReflectionReport r;
  r.max_residual = double_from(member(j, "max_residual", path), at(path, "max_residual"));
  r.tolerance = double_from(member(j, "tolerance", path), at(path, "tolerance"));
  r.samples_used = static_cast<int>(int_from(member(j, "samples_used", path), at(path, "samples_used")));
  r.skipped_poles = static_cast<int>(int_from(member(j, "skipped_poles", path), at(path, "skipped_poles")));
  r.seed = member(j, "seed", path).get<std::uint64_t>();
  return r;
}

Json to_json(const BlowupCertificate& c) {
  Json j;
  j["level"] = to_string(c.level);
  j["proved"] = c.proved();
  j["min_value"] = c.min_value ? Json(*c.min_value) : Json(nullptr);
  return j;
}

BlowupCertificate blowup_from_json(const Json& j, const std::string& path) {
  BlowupCertificate c;
  c.level = blowup_level_from(string_from(member(j, "level", path), at(path, "level")), at(path, "level"));
  if (has(j, "min_value") && !j["min_value"].is_null())
    c.min_value = double_from(j["min_value"], at(path, "min_value"));
  return c;
}

Json to_json(const ComplementReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["blowup"] = to_json(r.blowup);
  j["outside"] = to_json(r.outside);
  return j;
}

ComplementReport complement_from_json(const Json& j, const std::string& path) {
  ComplementReport r;
  r.verdict = complement_verdict_from(string_from(member(j, "verdict", path), at(path, "verdict")), at(path, "verdict"));
  r.blowup = blowup_from_json(member(j, "blowup", path), at(path, "blowup"));
  r.outside = outside_from_json(member(j, "outside", path), at(path, "outside"));
  return r;
}

}  // namespace spheremap
