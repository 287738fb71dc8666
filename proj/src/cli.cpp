#include "folia/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "folia/text.hpp"
#include "folia/transcript.hpp"

namespace folia {

namespace {

const char* kPaperI1 =
    "-y*((2+lambda)*x^2+lambda*y*z) dx + x*((2+lambda)*x^2-y*z) dy + (1+lambda)*x*y^2 dz";

std::vector<ProjectivePoint> rational_points(const std::vector<SingularRecord>& sing) {
  std::vector<ProjectivePoint> out;
  for (const auto& r : sing)
    if (!r.is_cluster()) out.push_back(r.point());
  std::sort(out.begin(), out.end());
  return out;
}

bool same_set(const std::vector<SingularRecord>& sing, std::vector<ProjectivePoint> expected) {
  std::sort(expected.begin(), expected.end());
  return distinct_count(sing) == static_cast<int>(expected.size()) && rational_points(sing) == expected;
}

std::string points_text(const std::vector<SingularRecord>& sing) {
  std::string s = "{";
  for (std::size_t i = 0; i < sing.size(); ++i) s += (i ? ", " : "") + to_string(sing[i].point());
  return s + "}";
}

struct Options {
  std::string input;
  std::string expr;
  std::vector<std::string> params;
  bool json = false;
};

std::string read_input(const Options& o, std::istream& in) {
  if (!o.expr.empty()) return o.expr;
  if (o.input.empty()) throw ValidationError("no input: give a file, '-' for stdin, or --expr");
  if (o.input == "-") {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(o.input);
  if (!f) throw ValidationError("cannot open '" + o.input + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ParamMap param_map(const Options& o) {
  ParamMap m;
  for (const auto& p : o.params) {
    auto [k, v] = parse_param(p);
    m[k] = v;
  }
  return m;
}

int degree_ceiling() {
  const char* env = std::getenv("FOLIA_DEGREE_CEILING");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 65535) throw ValidationError("FOLIA_DEGREE_CEILING must be a positive integer");
  return static_cast<int>(v);
}

Json darboux_json(const DarbouxReport& d) { return Json{{"sum", d.sum}, {"target", d.target}, {"ok", d.ok}}; }

void print_singular(std::ostream& out, const std::vector<SingularRecord>& sing, const DarbouxReport& d) {
  for (const auto& r : sing) out << "  " << to_string(r) << "\n";
  out << "darboux " << d.sum << " = " << d.target << (d.ok ? " ok" : " FAILED") << "\n";
}

void print_step(std::ostream& out, const LemmaStep& s) {
  out << "line " << to_string(s.line) << " (" << s.on_line << " points, "
      << (s.invariant ? "invariant" : "not invariant") << ")\n";
  out << "base point " << to_string(s.base_point) << "\n";
  out << "frame";
  for (const auto& row : s.frame.frame->matrix()) {
    out << " [";
    for (std::size_t k = 0; k < 3; ++k) out << (k ? " " : "") << to_string(row[k]);
    out << "]";
  }
  out << "\n";
  out << "extracted factor " << to_string(s.quadratic.extracted) << "\n";
  out << "form " << to_string(s.result) << "\n";
  out << "degree " << s.result.degree() << "\n";
  out << "singular points " << distinct_count(s.singular) << "\n";
  print_singular(out, s.singular, s.darboux);
}

Json step_json(const LemmaStep& s) {
  ReductionTranscript t{s.result, {}, {}, {s}, s.result, s.singular};
  return transcript_json(t)["steps"][0];
}

Matrix3 parse_matrix(const std::string& text) {
  Matrix3 m;
  std::stringstream rows(text);
  std::string row;
  int i = 0;
  while (std::getline(rows, row, ';')) {
    if (i >= 3) throw ParseError("matrix has more than three rows", 0);
    std::replace(row.begin(), row.end(), ',', ' ');
    std::stringstream cols(row);
    std::string cell;
    int k = 0;
    while (cols >> cell) {
      if (k >= 3) throw ParseError("matrix row has more than three entries", 0);
      m[i][k++] = Scalar(parse_rational(cell));
    }
    if (k != 3) throw ParseError("matrix row needs three entries", 0);
    ++i;
  }
  if (i != 3) throw ParseError("matrix needs three rows separated by ';'", 0);
  return m;
}

}  // namespace

std::string lambda_example_text() { return "lambda*y*z dx + x*z dy - (1+lambda)*x*y dz"; }

std::vector<Check> verify_example(const Rational& lambda) {
  if (lambda == 0 || lambda == -1 || lambda == -2) throw ValidationError("lambda must avoid 0, -1 and -2");
  if (lambda == 1) throw ValidationError("lambda = 1 makes the final restriction (1 - lambda) z^5 dx vanish");
  const ParamMap params{{"lambda", lambda}};
  std::vector<Check> out;
  const FoliationForm f = parse_form(lambda_example_text(), params);
  const auto s0 = singular_locus(f);
  out.push_back({"Sing(F) = {(0:0:1), (1:0:0), (0:1:0)}",
                 same_set(s0, {ProjectivePoint(0, 0, 1), ProjectivePoint(1, 0, 0), ProjectivePoint(0, 1, 0)}),
                 points_text(s0)});
  const auto d0 = darboux_check(f, s0);
  out.push_back({"Darboux sum for F", d0.ok, std::to_string(d0.sum) + " = " + std::to_string(d0.target)});

  const auto p1 = pullback_quadratic(f, i1_map());
  const FoliationForm expected = parse_form(kPaperI1, params);
  out.push_back({"I1 pullback equals the closed form", p1.form == expected, to_string(p1.form)});
  const auto s1 = singular_locus(p1.form);
  out.push_back({"Sing(I1^-1 F) = {(0:0:1), (0:1:0)}",
                 same_set(s1, {ProjectivePoint(0, 0, 1), ProjectivePoint(0, 1, 0)}), points_text(s1)});
  const auto d1 = darboux_check(p1.form, s1);
  out.push_back({"Darboux sum for I1^-1 F", d1.ok, std::to_string(d1.sum) + " = " + std::to_string(d1.target)});

  const auto p2 = pullback_quadratic(p1.form, i2_map());
  const auto s2 = singular_locus(p2.form);
  out.push_back({"Sing(I2^-1 I1^-1 F) = {(0:1:0)}", same_set(s2, {ProjectivePoint(0, 1, 0)}), points_text(s2)});
  const auto d2 = darboux_check(p2.form, s2);
  out.push_back({"Darboux sum for I2^-1 I1^-1 F", d2.ok, std::to_string(d2.sum) + " = " + std::to_string(d2.target)});

  const auto r = restrict_to_line(p2.form, ProjectiveLine(1, 0, 0));
  const MultiPoly z5 = MultiPoly::monomial(2, {0, 5, 0}, Scalar(1));
  const bool shape = r.tangency.is_zero() && r.normal.size() == 1 && r.normal.leading_term().key == z5.leading_term().key;
  std::string detail = to_string(r.normal, r.names) + " dx";
  out.push_back({"restriction to x = 0 is a nonzero multiple of (1 - lambda) z^5 dx", shape, detail});
  return out;
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact singular loci and birational reduction of foliations of P^2", "folia"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "form file, or - for stdin");
    sub->add_option("-e,--expr", o.expr, "form given inline");
    sub->add_option("-p,--param", o.params, "parameter name=value")->take_all();
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto* sing = app.add_subcommand("sing", "singular points, Milnor numbers and the Darboux sum");
  add_common(sing);
  auto* restrict = app.add_subcommand("restrict", "restriction of the form to a line");
  add_common(restrict);
  std::string line_text;
  restrict->add_option("--line", line_text, "line, e.g. 'x + y + z'")->required();
  auto* pullback = app.add_subcommand("pullback", "pullback by phi, I1, I2 or a matrix");
  add_common(pullback);
  std::string map_name;
  std::string matrix_text;
  pullback->add_option("--map", map_name, "phi | I1 | I2 | matrix")->required();
  pullback->add_option("--matrix", matrix_text, "rows separated by ';', entries by ',' or spaces");
  auto* lemma = app.add_subcommand("lemma-step", "one reduction step along a line");
  add_common(lemma);
  lemma->add_option("--line", line_text, "line through two or more singular points")->required();
  auto* red = app.add_subcommand("reduce", "iterate reduction steps down to one singular point");
  add_common(red);
  auto* example = app.add_subcommand("verify-example", "replay the lambda-family example");
  std::string lambda_text = "2";
  example->add_option("--lambda", lambda_text, "rational lambda");
  example->add_flag("--json", o.json, "machine-readable output");
  auto* rep = app.add_subcommand("replay", "replay a JSON transcript");
  std::string transcript_path;
  rep->add_option("transcript", transcript_path, "transcript file, or - for stdin")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*example) {
      const auto checks = verify_example(parse_rational(lambda_text));
      bool all = true;
      Json j = Json::array();
      for (const auto& c : checks) {
        all = all && c.ok;
        if (o.json) j.push_back(Json{{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        else out << (c.ok ? "ok    " : "FAIL  ") << c.name << ": " << c.detail << "\n";
      }
      if (o.json) out << j.dump(2) << "\n";
      return all ? 0 : 5;
    }
    if (*rep) {
      Options ro;
      ro.input = transcript_path;
      Json j;
      try {
        j = Json::parse(read_input(ro, in));
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
      }
      const FoliationForm f = replay_json(j);
      out << "replayed " << j.at("steps").size() << " steps; final form " << to_string(f) << "\n";
      return 0;
    }

    const FoliationForm f = parse_form(read_input(o, in), param_map(o));
    if (*sing) {
      const auto s = singular_locus(f);
      const auto d = darboux_check(f, s);
      if (o.json) {
        Json j;
        j["form"] = to_string(f);
        j["degree"] = f.degree();
        j["singular"] = singular_json(s);
        j["darboux"] = darboux_json(d);
        out << j.dump(2) << "\n";
      } else {
        out << "form " << to_string(f) << "\n" << "degree " << f.degree() << "\n";
        out << "singular points " << distinct_count(s) << "\n";
        print_singular(out, s, d);
      }
    } else if (*restrict) {
      const ProjectiveLine l = parse_line(line_text, param_map(o));
      const auto r = restrict_to_line(f, l);
      std::string param = "(";
      for (std::size_t i = 0; i < 3; ++i) param += (i ? ":" : "") + to_string(r.parametrization[i], r.names);
      param += ")";
      const std::string d = "d" + default_variable_names(3)[static_cast<std::size_t>(l.pivot())];
      if (o.json) {
        Json j;
        j["line"] = to_string(l);
        j["parametrization"] = param;
        j["invariant"] = r.tangency.is_zero();
        j["tangency"] = to_string(r.tangency, r.names);
        j["normal"] = to_string(r.normal, r.names);
        out << j.dump(2) << "\n";
      } else {
        out << "line " << to_string(l) << "\n" << "parametrization " << param << "\n";
        out << "invariant " << (r.tangency.is_zero() ? "yes" : "no") << "\n";
        out << "tangency (" << to_string(r.tangency, r.names) << ") (" << r.names[1] << " d" << r.names[0] << " - "
            << r.names[0] << " d" << r.names[1] << ")\n";
        out << "normal (" << to_string(r.normal, r.names) << ") " << d << "\n";
      }
    } else if (*pullback) {
      FoliationForm g;
      MultiPoly extracted = MultiPoly::constant(3, Scalar(1));
      if (map_name == "matrix") {
        if (matrix_text.empty()) throw ValidationError("--map matrix needs --matrix");
        g = pullback_linear(f, LinearFrame(parse_matrix(matrix_text)));
      } else {
        auto pb = pullback_quadratic(f, builtin_map(map_name));
        g = pb.form;
        extracted = pb.extracted;
      }
      if (o.json) {
        Json j;
        j["form"] = to_string(g);
        j["degree"] = g.degree();
        j["extractedFactor"] = to_string(extracted);
        out << j.dump(2) << "\n";
      } else {
        out << "form " << to_string(g) << "\n" << "degree " << g.degree() << "\n";
        out << "extracted factor " << to_string(extracted) << "\n";
      }
    } else if (*lemma) {
      const auto s = lemma_step(f, parse_line(line_text, param_map(o)));
      if (o.json) out << step_json(s).dump(2) << "\n";
      else print_step(out, s);
    } else if (*red) {
      ReduceOptions ro;
      ro.degree_ceiling = degree_ceiling();
      try {
        const auto t = reduce(f, ro);
        if (o.json) {
          out << transcript_json(t).dump(2) << "\n";
        } else {
          out << "input " << to_string(t.input) << "\n" << "degree " << t.input.degree() << "\n";
          out << "singular points " << distinct_count(t.input_singular) << "\n";
          print_singular(out, t.input_singular, t.input_darboux);
          for (std::size_t i = 0; i < t.steps.size(); ++i) {
            out << "\nstep " << i + 1 << "\n";
            print_step(out, t.steps[i]);
          }
          out << "\nfinal singular points " << distinct_count(t.final_singular) << "\n";
          if (distinct_count(t.final_singular) <= 1)
            out << "a frame sending a line through the remaining point to infinity leaves no affine singular point\n";
        }
      } catch (const ReductionAborted& e) {
        if (o.json) out << transcript_json(e.partial()).dump(2) << "\n";
        throw;
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 5;
  }
}

}  // namespace folia
