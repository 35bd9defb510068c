#include "spheremap/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "spheremap/factory.hpp"
#include "spheremap/fold.hpp"
#include "spheremap/normal_form.hpp"
#include "spheremap/verify.hpp"

#ifndef SPHEREMAP_VERSION
#define SPHEREMAP_VERSION "dev"
#endif

namespace spheremap::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_rational(trim(p)));
  return out;
}

struct Outcome {
  std::string text;
  int code = kOk;
};

Outcome json_outcome(const Json& j, int code = kOk) { return {dump_json(j), code}; }

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  std::string out_path;
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::string command;
  std::vector<std::string> arguments;

  std::string read_text(const std::string& path) {
    inputs.push_back(path);
    std::stringstream ss;
    if (path == "-") {
      ss << in_.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw std::invalid_argument("cannot open input '" + path + "'");
      ss << f.rdbuf();
    }
    return ss.str();
  }

  Json read_json(const std::string& path) { return parse_json_text(read_text(path)); }
  RationalMap read_map(const std::string& path) { return map_from_document(read_json(path)); }

  void emit(const std::string& text) {
    if (out_path.empty() || out_path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write output '" + out_path + "'");
    f << text;
  }

  void write_manifest(double elapsed_ms, int code) {
    Json m;
    m["command"] = command;
    m["arguments"] = arguments;
    m["input_paths"] = inputs;
    m["seed"] = seed ? Json(*seed) : Json(nullptr);
    m["tool_version"] = SPHEREMAP_VERSION;
    m["timing_ms"] = elapsed_ms;
    m["exit_code"] = code;
    if (out_path.empty() || out_path == "-") {
      err_ << "manifest: " << m.dump() << "\n";
      return;
    }
    std::ofstream f(out_path + ".manifest.json");
    if (f) f << dump_json(m);
  }

  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

WeightedMap require_polynomial(const RationalMap& f) {
  auto p = as_polynomial(f);
  if (!p) throw PreconditionError("input must be a polynomial map (constant denominator)");
  return *p;
}

Outcome analyze(Session& s, const std::string& input, const std::string& folds, bool check_reduced) {
  const RationalMap f = s.read_map(input);
  const FoldProfile prof = fold_profile(f);
  if (folds.empty()) return json_outcome(to_json(prof));
  Json out;
  out["profile"] = to_json(prof);
  const FoldData data(parse_fold_list(folds));
  try {
    const auto poly = as_polynomial(f);
    const NewtonExpansion e = poly ? newton_expand_poly(*poly, data) : newton_expand_rational(f, data, check_reduced);
    out["newton_expansion"] = to_json(e);
    return json_outcome(out);
  } catch (const NotAFold& e) {
    out["not_a_fold"] = to_json(e);
  } catch (const DegreeViolation& e) {
    out["rejected"] = {{"reason", "degree_violation"}, {"message", e.what()}};
  } catch (const NotReduced& e) {
    out["rejected"] = {{"reason", "not_reduced"}, {"message", e.what()}};
  }
  return json_outcome(out, kFalseVerdict);
}

Json rationals_param(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

Outcome construct_homogeneous(std::size_t n, int d, const std::string& scale_sq) {
  Json out;
  out["family"] = "homogeneous";
  out["parameters"] = {{"n", n}, {"d", d}, {"scale_sq", to_json(parse_rational(scale_sq))}};
  out["map"] = to_json(homogeneous_map(n, d, parse_rational(scale_sq)));
  return json_outcome(out);
}

Outcome construct_poly(std::size_t n, int k, int m, const std::string& radii) {
  const auto r = parse_rational_list(radii);
  const PolyFamilyMap fam = poly_k_fold(n, k, m, r);
  Json out;
  out["family"] = "poly-k-fold";
  out["parameters"] = {{"n", n}, {"k", k}, {"m", m}, {"radii_sq", rationals_param(r)}};
  out["map"] = to_json(fam.map);
  out["trace"] = to_json(fam.trace);
  return json_outcome(out);
}

Outcome construct_rational(std::size_t n, int k, int m, const std::string& radii, const std::string& a_text) {
  const auto r = parse_rational_list(radii);
  std::vector<CplxRat> a = parse_cplx_list(a_text);
  // a single value stands for (a, 0, ..., 0)
  if (a.size() == 1 && n > 1) a.resize(n, CplxRat(0));
  const RationalFamilyMap fam = rational_k_fold(n, k, m, r, a);
  Json out;
  out["family"] = "rational-k-fold";
  Json av = Json::array();
  for (const auto& c : a) av.push_back(to_json(c));
  out["parameters"] = {{"n", n}, {"k", k}, {"m", m}, {"radii_sq", rationals_param(r)}, {"a", av}};
  out["map"] = to_json(fam.map);
  out["trace"] = to_json(fam.trace);
  return json_outcome(out);
}

Outcome decompose(Session& s, const std::string& input) {
  const WeightedMap p = require_polynomial(s.read_map(input));
  try {
    return json_outcome(to_json(decompose_infty_fold(p)));
  } catch (const NotInftyFold& e) {
    Json out;
    out["not_infinite_fold"] = {{"message", e.what()}, {"profile", to_json(e.profile())}};
    return json_outcome(out, kFalseVerdict);
  }
}

struct SamplingFlags {
  int samples = 1000;
  std::uint64_t seed = 42;
  double radius_lo = 1.0;
  double radius_hi = 3.0;
  double tolerance = 1e-9;

  SampleConfig config() const {
    SampleConfig c;
    c.count = samples;
    c.seed = seed;
    c.radius_lo = radius_lo;
    c.radius_hi = radius_hi;
    c.tolerance = tolerance;
    c.validate();
    return c;
  }
};

Json tagged(const char* check, Json body) {
  Json out;
  out["check"] = check;
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

BallSpec ball_from_flags(const std::string& center, const std::string& radius_sq, std::size_t dim) {
  BallSpec b;
  b.center = center.empty() ? std::vector<CplxRat>(dim, CplxRat(0)) : parse_cplx_list(center);
  b.radius_sq = parse_rational(radius_sq);
  return b;
}

Json ball_json(const BallSpec& b) {
  Json c = Json::array();
  for (const auto& x : b.center) c.push_back(to_json(x));
  return {{"center", c}, {"radius_sq", to_json(b.radius_sq)}};
}

std::string md_rationals(const Json& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
  return "[" + s + "]";
}

std::string md_real(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return "(" + v["lo"].get<std::string>() + ", " + v["hi"].get<std::string>() + ")";
}

void md_profile(std::ostringstream& md, const Json& prof) {
  if (prof["kind"] == "infinite") {
    md << "Infinite-fold map, C = " << md_rationals(prof["C"]) << "\n\n";
    return;
  }
  if (prof["entries"].empty()) {
    md << "No zero-centric sphere pairs.\n\n";
    return;
  }
  md << "| t | T |\n|---|---|\n";
  for (const auto& e : prof["entries"]) md << "| " << md_real(e["t"]) << " | " << md_real(e["T"]) << " |\n";
  md << "\n";
}

void md_document(std::ostringstream& md, const Json& doc) {
  if (doc.contains("kind") && doc["kind"].is_string() &&
      (doc["kind"] == "finite" || doc["kind"] == "infinite")) {
    md << "Fold profile.\n\n";
    md_profile(md, doc);
  } else if (doc.contains("profile")) {
    md << "Fold analysis.\n\n";
    md_profile(md, doc["profile"]);
    if (doc.contains("newton_expansion"))
      md << "Newton expansion: b = " << md_rationals(doc["newton_expansion"]["b"]) << "\n\n";
    if (doc.contains("not_a_fold"))
      md << "Claimed fold rejected at step " << doc["not_a_fold"]["step"].get<int>() << ".\n\n";
    if (doc.contains("rejected")) md << "Rejected: " << doc["rejected"]["reason"].get<std::string>() << ".\n\n";
  } else if (doc.contains("family") && doc.contains("map")) {
    const RationalMap f = map_from_json(doc["map"], "$.map");
    md << "Construction `" << doc["family"].get<std::string>() << "`: n = " << f.dim()
       << ", N = " << f.target_dim() << ", numerator degree " << f.numerator().degree()
       << ", denominator degree " << f.denominator().degree() << ".\n\n";
    if (doc.contains("trace")) md << "Slack constant c = " << doc["trace"]["c"].get<std::string>() << "\n\n";
  } else if (doc.contains("U") && doc.contains("C")) {
    md << "Normal form.\n\n| C | degrees | gram certificate | residual | unitarity defect |\n|---|---|---|---|---|\n";
    md << "| " << md_rationals(doc["C"]) << " | " << doc["degrees"].dump() << " | "
       << (doc["gram_certificate"].get<bool>() ? "yes" : "no") << " | " << doc["residual"].dump() << " | "
       << doc["unitarity_defect"].dump() << " |\n\n";
  } else if (doc.contains("not_infinite_fold")) {
    md << "Not an infinite-fold map.\n\n";
    md_profile(md, doc["not_infinite_fold"]["profile"]);
  } else if (doc.contains("check")) {
    const std::string check = doc["check"].get<std::string>();
    md << "Check `" << check << "`: verdict " << doc["verdict"].dump() << "\n\n";
    if (check == "outside")
      md << "min ||f(z)|| = " << doc["min_norm"].dump() << " over " << doc["samples_used"].get<int>()
         << " samples, " << doc["violations"].size() << " violations, seed " << doc["seed"].dump() << "\n\n";
    if (check == "reflection")
      md << "max residual = " << doc["max_residual"].dump() << " over " << doc["samples_used"].get<int>()
         << " samples, seed " << doc["seed"].dump() << "\n\n";
    if (check == "complement")
      md << "blow-up: " << doc["blowup"]["level"].get<std::string>() << ", outside violations: "
         << doc["outside"]["violations"].size() << "\n\n";
  } else {
    throw ParseError("document of unknown type");
  }
}

}  // namespace

CplxRat parse_cplx(const std::string& text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() == 1) return parse_rational(trim(parts[0]));
  if (parts.size() == 2) return {parse_rational(trim(parts[0])), parse_rational(trim(parts[1]))};
  throw std::invalid_argument("malformed complex value '" + text + "'");
}

std::vector<CplxRat> parse_cplx_list(const std::string& text) {
  std::vector<CplxRat> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_cplx(p));
  return out;
}

std::vector<FoldPair> parse_fold_list(const std::string& text) {
  std::vector<FoldPair> out;
  for (const auto& p : split(text, ',')) {
    const auto tT = split(trim(p), ':');
    if (tT.size() != 2) throw std::invalid_argument("fold '" + p + "' must be t:T");
    out.push_back({parse_rational(trim(tT[0])), parse_rational(trim(tT[1]))});
  }
  return out;
}

std::string render_report(const std::vector<ReportInput>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("report needs at least one input");
  std::ostringstream md;
  md << "# spheremap report\n\n";
  for (const auto& in : inputs) {
    md << "## " << in.path << "\n\n";
    if (in.manifest) {
      const Json& m = *in.manifest;
      md << "Produced by `spheremap " << m.value("command", std::string("?")) << "` (version "
         << m.value("tool_version", std::string("?"));
      if (m.contains("seed") && !m["seed"].is_null()) md << ", seed " << m["seed"].dump();
      md << ").\n\n";
    }
    md_document(md, in.document);
  }
  return md.str();
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for multi-fold sphere maps", "spheremap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SPHEREMAP_VERSION);

  Session s(in, out, err);
  for (int i = 1; i < argc; ++i) s.arguments.emplace_back(argv[i]);
  std::function<Outcome()> action;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", s.out_path, "Output path (default stdout)"); };

  std::string input, folds;
  bool no_reduced_check = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Fold profile, optionally a Newton expansion");
  analyze_cmd->add_option("input", input, "Map JSON path or -")->required();
  analyze_cmd->add_option("--folds", folds, "Claimed folds t1:T1,t2:T2,...");
  analyze_cmd->add_flag("--no-reduced-check", no_reduced_check, "Skip the reducedness screen");
  add_out(analyze_cmd);
  analyze_cmd->callback([&] { action = [&] { return analyze(s, input, folds, !no_reduced_check); }; });

  std::size_t n = 2;
  int d = 1, k = 1, m = 2;
  std::string scale_sq = "1", radii, a_text;
  auto* construct_cmd = app.add_subcommand("construct", "Build a map from one of the families");
  construct_cmd->require_subcommand(1);
  auto* homog = construct_cmd->add_subcommand("homogeneous", "Scaled H_d");
  homog->add_option("-n", n)->required()->check(CLI::PositiveNumber);
  homog->add_option("-d", d)->required()->check(CLI::NonNegativeNumber);
  homog->add_option("--scale-sq", scale_sq, "Squared scale");
  add_out(homog);
  homog->callback([&] { action = [&] { return construct_homogeneous(n, d, scale_sq); }; });
  auto* polyk = construct_cmd->add_subcommand("poly-k-fold", "Polynomial map with k prescribed folds");
  polyk->add_option("-n", n)->required()->check(CLI::PositiveNumber);
  polyk->add_option("-k", k)->required();
  polyk->add_option("-m", m)->required();
  polyk->add_option("--radii-sq", radii, "Comma separated t values")->required();
  add_out(polyk);
  polyk->callback([&] { action = [&] { return construct_poly(n, k, m, radii); }; });
  auto* ratk = construct_cmd->add_subcommand("rational-k-fold", "Rational map with k prescribed folds");
  ratk->add_option("-n", n)->required()->check(CLI::PositiveNumber);
  ratk->add_option("-k", k)->required();
  ratk->add_option("-m", m)->required();
  ratk->add_option("--radii-sq", radii, "Comma separated t values")->required();
  ratk->add_option("--a", a_text, "Denominator 1 + a.z; entries re or re:im, comma separated")->required();
  add_out(ratk);
  ratk->callback([&] { action = [&] { return construct_rational(n, k, m, radii, a_text); }; });

  auto* decompose_cmd = app.add_subcommand("decompose", "Normal form of an infinite-fold map");
  decompose_cmd->add_option("input", input, "Map JSON path or -")->required();
  add_out(decompose_cmd);
  decompose_cmd->callback([&] { action = [&] { return decompose(s, input); }; });

  SamplingFlags sf;
  std::string t_text = "1", T_text = "1";
  std::string src_center, src_r2 = "1", dst_center, dst_r2 = "1";
  auto* verify_cmd = app.add_subcommand("verify", "Certificate checks");
  verify_cmd->require_subcommand(1);
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("input", input, "Map JSON path or -")->required();
    sub->add_option("--samples", sf.samples)->check(CLI::PositiveNumber);
    sub->add_option("--seed", sf.seed);
    sub->add_option("--radius-lo", sf.radius_lo);
    sub->add_option("--radius-hi", sf.radius_hi);
    sub->add_option("--tolerance", sf.tolerance);
    add_out(sub);
  };
  auto* v_sphere = verify_cmd->add_subcommand("sphere", "Exact sphere-to-sphere divisibility");
  v_sphere->add_option("input", input, "Map JSON path or -")->required();
  v_sphere->add_option("--t", t_text, "Source radius squared");
  v_sphere->add_option("--T", T_text, "Target radius squared");
  add_out(v_sphere);
  v_sphere->callback([&] {
    action = [&] {
      const RationalMap f = s.read_map(input);
      const Rational t = parse_rational(t_text), T = parse_rational(T_text);
      const auto c = check_sphere_map(f, t, T);
      Json body = to_json(c);
      body["t"] = to_json(t);
      body["T"] = to_json(T);
      return json_outcome(tagged("sphere", body), c.holds ? kOk : kFalseVerdict);
    };
  });
  auto* v_outside = verify_cmd->add_subcommand("outside", "Sampled containment outside the ball");
  add_sampling(v_outside);
  v_outside->callback([&] {
    action = [&] {
      s.seed = sf.seed;
      const auto r = check_outside(s.read_map(input), sf.config());
      return json_outcome(tagged("outside", to_json(r)), r.passed() ? kOk : kFalseVerdict);
    };
  });
  auto* v_reflection = verify_cmd->add_subcommand("reflection", "Sampled reflection identity");
  add_sampling(v_reflection);
  v_reflection->callback([&] {
    action = [&] {
      s.seed = sf.seed;
      const auto r = check_reflection(s.read_map(input), sf.config());
      return json_outcome(tagged("reflection", to_json(r)), r.passed() ? kOk : kFalseVerdict);
    };
  });
  auto* v_ball = verify_cmd->add_subcommand("ball-difference", "Exact sphere check between shifted balls");
  v_ball->add_option("input", input, "Map JSON path or -")->required();
  v_ball->add_option("--source-center", src_center, "Entries re or re:im (default origin)");
  v_ball->add_option("--source-radius-sq", src_r2);
  v_ball->add_option("--target-center", dst_center, "Entries re or re:im (default origin)");
  v_ball->add_option("--target-radius-sq", dst_r2);
  add_out(v_ball);
  v_ball->callback([&] {
    action = [&] {
      const RationalMap f = s.read_map(input);
      const BallSpec src = ball_from_flags(src_center, src_r2, f.dim());
      const BallSpec dst = ball_from_flags(dst_center, dst_r2, f.target_dim());
      const auto c = check_ball_difference(f, src, dst);
      Json body = to_json(c);
      body["source"] = ball_json(src);
      body["target"] = ball_json(dst);
      return json_outcome(tagged("ball-difference", body), c.holds ? kOk : kFalseVerdict);
    };
  });
  auto* v_complement = verify_cmd->add_subcommand("complement", "Properness on the ball complement");
  add_sampling(v_complement);
  v_complement->callback([&] {
    action = [&] {
      s.seed = sf.seed;
      const auto r = check_complement_proper(require_polynomial(s.read_map(input)), sf.config());
      return json_outcome(tagged("complement", to_json(r)),
                          r.verdict == ComplementVerdict::Unknown ? kFalseVerdict : kOk);
    };
  });

  std::vector<std::string> report_inputs;
  auto* report_cmd = app.add_subcommand("report", "Markdown summary of result files");
  report_cmd->add_option("inputs", report_inputs, "Result JSON paths");
  add_out(report_cmd);
  report_cmd->callback([&] {
    action = [&] {
      std::vector<ReportInput> docs;
      for (const auto& path : report_inputs) {
        ReportInput ri{path, s.read_json(path), std::nullopt};
        std::ifstream side(path + ".manifest.json");
        if (side) {
          std::stringstream ss;
          ss << side.rdbuf();
          ri.manifest = parse_json_text(ss.str());
        }
        docs.push_back(std::move(ri));
      }
      return Outcome{render_report(docs), kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    s.command = sub->get_name();
    for (auto* leaf : sub->get_subcommands()) s.command += " " + leaf->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kInternal;
  try {
    const Outcome o = action();
    s.emit(o.text);
    code = o.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    code = kUsage;
  } catch (const SlackTooLarge& e) {
    err << "error: " << e.what() << "\nhint: reduce |a| so the slack constant can absorb the denominator\n";
    code = kUsage;
  } catch (const InternalInvariant& e) {
    err << "internal error: " << e.what() << "\n";
    code = kInternal;
  } catch (const ValidationFailed& e) {
    err << "internal error: " << e.what() << "\n";
    code = kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    code = kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = kInternal;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  s.write_manifest(ms, code);
  return code;
}

}  // namespace spheremap::cli
