#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "toricfol/toricfol.hpp"

namespace toricfol::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string model_file;
  std::string degree;
  std::string degree_div;
  std::string symbolic;
  std::vector<CLI::Option*> symbolic_opts;
  std::string kind = "foliation";
  std::string weights;
  std::string ci;
  std::vector<std::string> classes;
  std::string vars;
  std::string components;
  std::string group = "1";
  unsigned cap = 64;
  std::string poly;
  std::string form;
  std::string field;
  std::string scroll_a;
  std::int64_t bound = 0;
  std::int64_t divisor_index = -1;
  std::int64_t generator_index = -1;
  bool strict = false;
  bool json_out = false;

  bool symbolic_given() const {
    return std::any_of(symbolic_opts.begin(), symbolic_opts.end(), [](auto* o) { return o->count() > 0; });
  }
};

struct Report {
  std::string operation;
  json inputs = json::object();
  std::string result;
  json details = json::object();
  std::vector<std::string> lines;
  std::vector<std::string> warnings;

  void detail(const std::string& key, const std::string& value) {
    details[key] = value;
    lines.push_back(key + " = " + value);
  }
  void detail(const std::string& key, const char* value) { detail(key, std::string(value)); }
  void detail(const std::string& key, bool value) {
    details[key] = value;
    lines.push_back(key + " = " + (value ? "true" : "false"));
  }
};

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto& p : split_top_level(s)) out.push_back(trim(p));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& s, const std::string& flag) {
  std::vector<std::int64_t> out;
  for (const auto& p : split_list(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(p, &used));
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& p : split_list(s)) {
    try {
      out.push_back(Rational::parse(p));
    } catch (const Error&) {
      throw UsageError(flag + ": expected comma-separated rationals, got '" + s + "'");
    }
  }
  return out;
}

std::string str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string str(const BigInt& z) { return z.get_str(); }

ModelPtr load_model(const Options& o) {
  const bool spec = !o.model.empty(), file = !o.model_file.empty();
  if (spec == file) throw UsageError("exactly one of --model or --model-file is required");
  if (spec) return std::make_shared<const ToricModel>(builtin(ModelSpec::parse(o.model)));
  std::ifstream in(o.model_file);
  if (!in) throw UsageError("--model-file: cannot read '" + o.model_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const ToricModel>(parse_model(buf.str()));
}

void note_model(Report& r, const ToricModel& m) {
  r.details["model"] = m.name;
  for (const auto& w : m.warnings) r.warnings.push_back(w);
}

ClassExpr degree_class(const Options& o, const ToricModel& m) {
  int given = !o.degree.empty() + !o.degree_div.empty() + o.symbolic_given();
  if (given == 0) throw UsageError("a degree is required: --degree, --degree-div or --symbolic");
  if (given > 1) throw UsageError("--degree, --degree-div and --symbolic are mutually exclusive");
  if (!o.degree.empty()) {
    auto v = parse_rationals(o.degree, "--degree");
    if (v.size() != m.rank)
      throw UsageError("--degree: model rank is " + std::to_string(m.rank) + ", got " + std::to_string(v.size()) +
                       " entries");
    return ClassExpr::numeric(v);
  }
  if (!o.degree_div.empty()) {
    std::vector<ScalarExpr> cs;
    for (const auto& q : parse_rationals(o.degree_div, "--degree-div")) cs.push_back(MultiPoly::constant(q));
    if (cs.size() != m.num_rays())
      throw UsageError("--degree-div: expected " + std::to_string(m.num_rays()) + " divisor coefficients");
    return class_of_divisor_coeffs(m, cs);
  }
  VarTable names = o.symbolic.empty() ? default_degree_symbols(m.rank) : VarTable(split_list(o.symbolic));
  if (names.size() != m.rank)
    throw UsageError("--symbolic: model rank is " + std::to_string(m.rank) + ", got " +
                     std::to_string(names.size()) + " names");
  return ClassExpr::symbolic(names);
}

ScalarExpr scalar_degree(const Options& o, const std::string& default_name = "d") {
  if (!o.degree.empty() && o.symbolic_given()) throw UsageError("--degree and --symbolic are mutually exclusive");
  if (o.symbolic_given()) {
    auto name = o.symbolic.empty() ? default_name : trim(o.symbolic);
    return MultiPoly::variable(VarTable{name}, 0);
  }
  if (o.degree.empty()) throw UsageError("a degree is required: --degree or --symbolic");
  auto v = parse_rationals(o.degree, "--degree");
  if (v.size() != 1) throw UsageError("--degree: expected a single value");
  return MultiPoly::constant(v[0]);
}

std::vector<ClassExpr> class_list(const Options& o, const ToricModel& m) {
  std::vector<ClassExpr> out;
  for (const auto& c : o.classes) {
    auto v = parse_rationals(c, "--class");
    if (v.size() != m.rank)
      throw UsageError("--class: model rank is " + std::to_string(m.rank) + ", got '" + c + "'");
    out.push_back(ClassExpr::numeric(v));
  }
  return out;
}

ClassExpr single_class(const Options& o, const ToricModel& m) {
  if (o.classes.size() != 1) throw UsageError("--class: exactly one hypersurface class is required");
  return class_list(o, m).front();
}

std::vector<std::int64_t> weights(const Options& o) {
  if (o.weights.empty()) throw UsageError("--weights is required");
  return parse_ints(o.weights, "--weights");
}

std::vector<std::int64_t> ci_degrees(const Options& o) {
  return o.ci.empty() ? std::vector<std::int64_t>{} : parse_ints(o.ci, "--ci");
}

Kind kind(const Options& o) {
  try {
    return parse_kind(o.kind);
  } catch (const ParseError&) {
    throw UsageError("--kind: expected foliation or distribution, got '" + o.kind + "'");
  }
}

void verdict(Report& r, const InequalityVerdict& v) {
  r.result = v.holds ? (*v.holds ? "holds" : "fails") : "undetermined";
  r.detail("lhs", canonical_string(v.lhs));
  r.detail("rhs", canonical_string(v.rhs));
  r.detail("slack", canonical_string(v.slack));
  r.warnings.insert(r.warnings.end(), v.warnings.begin(), v.warnings.end());
}

std::string solution_text(const SearchSolution& s) {
  std::vector<std::string> names =
      s.family == SearchFamily::scroll ? std::vector<std::string>{"d1", "d2"} : std::vector<std::string>{"a", "d", "k"};
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < s.params.size(); ++i) parts.push_back(names[i] + "=" + std::to_string(s.params[i]));
  return "(" + join(parts, ", ") + ")";
}

std::string degree_text(const QuasiDegree& q) {
  if (q.is_any()) return "any";
  if (q.is_mixed()) return "mixed";
  std::vector<std::string> parts;
  for (auto x : q.degree) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

using Handler = std::function<void(const Options&, Report&)>;

struct Leaf {
  CLI::App* app;
  std::string operation;
  Handler handler;
};

class Builder {
 public:
  Builder(CLI::App& root, Options& o) : root_(root), o_(o) {}

  CLI::App* group(const std::string& name, const std::string& desc) {
    auto* g = root_.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  }

  // Registers a leaf subcommand; `flags` lists the option groups it accepts.
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& operation, const std::string& desc,
                 std::initializer_list<const char*> flags, Handler h) {
    auto* app = parent->add_subcommand(name, desc);
    for (std::string f : flags) add_flag(app, f);
    leaves_.push_back({app, operation, std::move(h)});
    return app;
  }

  const std::vector<Leaf>& leaves() const { return leaves_; }

 private:
  void add_flag(CLI::App* app, const std::string& f) {
    if (f == "model") {
      app->add_option("--model", o_.model, "builtin model, e.g. blowup_point:2 or weighted:1,1,2");
      app->add_option("--model-file", o_.model_file, "model file path");
    } else if (f == "degree") {
      app->add_option("--degree", o_.degree, "degree (Picard vector, comma separated)");
      app->add_option("--degree-div", o_.degree_div, "degree as divisor coefficients");
      o_.symbolic_opts.push_back(app->add_option("--symbolic", o_.symbolic, "symbolic degree names")->expected(0, 1));
    } else if (f == "scalar-degree") {
      app->add_option("--degree", o_.degree, "degree");
      o_.symbolic_opts.push_back(app->add_option("--symbolic", o_.symbolic, "symbolic degree name")->expected(0, 1));
    } else if (f == "degree-div") {
      app->add_option("--degree-div", o_.degree_div, "divisor coefficients")->required();
    } else if (f == "kind") {
      app->add_option("--kind", o_.kind, "foliation or distribution");
    } else if (f == "weights") {
      app->add_option("--weights", o_.weights, "weights w0,...,wn");
      app->add_option("--ci", o_.ci, "complete-intersection degrees a1,...,am");
    } else if (f == "class") {
      app->add_option("--class", o_.classes, "hypersurface class (Picard vector); repeatable")
          ->expected(1)
          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    } else if (f == "strict") {
      app->add_flag("--strict", o_.strict, "strict P^n form of the bound");
    } else if (f == "residue") {
      app->add_option("--vars", o_.vars, "chart variables")->required();
      app->add_option("--components", o_.components, "germ components")->required();
      app->add_option("--group", o_.group, "local group order");
      app->add_option("--cap", o_.cap, "maximal truncation degree");
    } else if (f == "poly") {
      app->add_option("--poly", o_.poly, "polynomial in homogeneous coordinates")->required();
    } else if (f == "form") {
      app->add_option("--form", o_.form, "1-form components P_0,...,P_{n+r-1}")->required();
    } else if (f == "field") {
      app->add_option("--field", o_.field, "vector field components P_0,...,P_{n+r-1}")->required();
    } else if (f == "bound") {
      app->add_option("--bound", o_.bound, "search bound B")->required();
    } else if (f == "scroll") {
      app->add_option("--scroll", o_.scroll_a, "scroll parameters a1,...,an");
    } else if (f == "index") {
      app->add_option("--divisor", o_.divisor_index, "divisor index k (0-based)");
      app->add_option("--generator", o_.generator_index, "Picard generator index (0-based)");
    } else {
      throw std::logic_error("unknown flag group " + f);
    }
  }

  CLI::App& root_;
  Options& o_;
  std::vector<Leaf> leaves_;
};

void build(Builder& b, CLI::App& root) {
  auto* catalog = b.group("catalog", "builtin models");
  b.leaf(catalog, "list", "catalog list", "list builtin families", {}, [](const Options&, Report& r) {
    static const std::vector<std::string> syntax = {
        "projective:<n>",     "weighted:<w0,...,wn>", "multiprojective:<n1,...,nk>", "scroll:<a1,...,an>",
        "blowup_point:<n>", "blowup_two_points_p3", "blowup_line_p3"};
    r.result = std::to_string(syntax.size());
    r.details["families"] = syntax;
    for (const auto& s : syntax) r.lines.push_back("family = " + s);
  });
  b.leaf(catalog, "show", "catalog show", "print a model in file format", {"model"}, [](const Options& o, Report& r) {
    auto m = load_model(o);
    note_model(r, *m);
    r.result = m->name;
    auto text = serialize_model(*m);
    r.details["text"] = text;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) r.lines.push_back(line);
  });

  auto* count = b.group("count", "singularity counts");
  b.leaf(count, "foliation", "foliation_sing_count", "singular points of a foliation", {"model", "degree"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           r.result = canonical_string(foliation_sing_count(*m, degree_class(o, *m)));
         });
  b.leaf(count, "restricted", "restricted_sing_count", "singular points on an invariant hypersurface",
         {"model", "degree", "class"}, [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           r.result = canonical_string(restricted_sing_count(*m, degree_class(o, *m), single_class(o, *m)));
         });
  b.leaf(count, "complement", "complement_sing_count", "singular points off an invariant hypersurface",
         {"model", "degree", "class"}, [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           r.result = canonical_string(complement_sing_count(*m, degree_class(o, *m), single_class(o, *m)));
         });
  b.leaf(count, "wci", "wci_sing_count", "count on a weighted complete intersection",
         {"weights", "scalar-degree", "kind"}, [](const Options& o, Report& r) {
           auto br = wci_breakdown(weights(o), ci_degrees(o), scalar_degree(o), kind(o));
           r.result = canonical_string(br.total);
           r.detail("prefactor", str(br.prefactor));
           std::vector<std::string> terms;
           for (const auto& t : br.terms) terms.push_back(canonical_string(t));
           r.details["terms"] = terms;
           r.lines.push_back("terms = " + join(terms, ", "));
           r.warnings = br.warnings;
         });
  b.leaf(count, "ci", "ci_sing_count", "count on a complete intersection in a smooth model",
         {"model", "class", "degree", "kind"}, [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           Diagnostics diag;
           r.result = canonical_string(ci_sing_count(*m, class_list(o, *m), degree_class(o, *m), kind(o), &diag));
           for (auto& w : diag.warnings) r.warnings.push_back(w);
         });

  auto* euler = b.group("euler", "Euler characteristics");
  b.leaf(euler, "hyp", "hypersurface_euler", "Euler number of a smooth hypersurface", {"model", "class"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           r.result = canonical_string(hypersurface_euler(*m, single_class(o, *m)));
         });
  b.leaf(euler, "ci", "ci_euler", "Euler number of a complete intersection", {"model", "class"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           Diagnostics diag;
           r.result = canonical_string(ci_euler(*m, class_list(o, *m), &diag));
           for (auto& w : diag.warnings) r.warnings.push_back(w);
         });
  b.leaf(euler, "ambient", "ambient_euler", "orbifold Euler number of the model", {"model"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           r.result = canonical_string(integrate(*m, chern_class(*m, m->dim)));
         });
  b.leaf(euler, "complement", "complement_euler", "Euler number of the complement of a hypersurface",
         {"model", "class"}, [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           r.result = canonical_string(complement_euler(*m, single_class(o, *m)));
         });

  b.leaf(&root, "baumbott", "baum_bott_sum", "Baum-Bott sum on a weighted complete-intersection surface",
         {"weights", "scalar-degree"}, [](const Options& o, Report& r) {
           r.result = canonical_string(baum_bott_sum(weights(o), ci_degrees(o), scalar_degree(o)));
         });
  b.leaf(&root, "alpha", "alpha_invariant", "alpha invariant and Euler number of a weighted complete intersection",
         {"weights", "scalar-degree"}, [](const Options& o, Report& r) {
           auto a = alpha_invariant(weights(o), ci_degrees(o));
           r.result = canonical_string(a.alpha);
           r.detail("chi", canonical_string(a.chi));
           if (!o.degree.empty()) {
             auto d = parse_ints(o.degree, "--degree");
             if (d.size() != 1) throw UsageError("--degree: expected a single integer");
             r.detail("divides", a.divides(d[0]));
           }
         });
  b.leaf(&root, "gentype", "general_type_index", "index sum(a) - sum(w)", {"weights"},
         [](const Options& o, Report& r) {
           auto i = general_type_index(weights(o), ci_degrees(o));
           r.result = canonical_string(i);
           r.detail("general_type", i.constant_term().sign() > 0);
         });
  b.leaf(&root, "multidegree", "multidegree", "k-degree of a complete intersection", {"model", "class", "index"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           if ((o.divisor_index >= 0) == (o.generator_index >= 0))
             throw UsageError("exactly one of --divisor or --generator is required");
           auto cls = class_list(o, *m);
           r.result = canonical_string(o.divisor_index >= 0
                                           ? multidegree_divisor(*m, cls, static_cast<std::size_t>(o.divisor_index))
                                           : multidegree_generator(*m, cls, static_cast<std::size_t>(o.generator_index)));
         });

  auto* poincare = b.group("poincare", "Poincare-type inequalities");
  b.leaf(poincare, "wci-curve", "poincare_check", "sum(a) <= d + sum(w) for curves", {"weights", "scalar-degree", "strict"},
         [](const Options& o, Report& r) {
           verdict(r, poincare_wci_curve(weights(o), ci_degrees(o), scalar_degree(o), o.strict));
         });
  b.leaf(poincare, "wci-general", "poincare_check", "sum(a) + dim V - 1 <= d + sum(w)", {"weights", "scalar-degree"},
         [](const Options& o, Report& r) {
           verdict(r, poincare_wci_general(weights(o), ci_degrees(o), scalar_degree(o)));
         });
  b.leaf(poincare, "toric-curve", "poincare_check", "summed multidegree bound for invariant curves",
         {"model", "class", "degree", "strict"}, [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           verdict(r, poincare_toric_curve(*m, class_list(o, *m), degree_class(o, *m), o.strict));
         });

  auto* search = b.group("search", "bounded Diophantine searches");
  for (auto fam : {SearchFamily::p111k, SearchFamily::p1111k, SearchFamily::scroll}) {
    std::initializer_list<const char*> flags = {"bound", "scroll"};
    std::initializer_list<const char*> plain = {"bound"};
    b.leaf(search, to_string(fam), "regular_search", "search family " + to_string(fam),
           fam == SearchFamily::scroll ? flags : plain, [fam](const Options& o, Report& r) {
             std::vector<std::int64_t> a;
             if (fam == SearchFamily::scroll) {
               if (o.scroll_a.empty()) throw UsageError("--scroll is required for the scroll family");
               a = parse_ints(o.scroll_a, "--scroll");
             }
             auto sols = regular_search(fam, o.bound, a);
             r.result = std::to_string(sols.size());
             json arr = json::array();
             for (const auto& s : sols) {
               arr.push_back({{"params", s.params}, {"annotation", to_string(s.annotation)}});
               r.lines.push_back("solution = " + solution_text(s) + " " + to_string(s.annotation));
             }
             r.details["family"] = to_string(fam);
             r.details["solutions"] = arr;
           });
  }

  b.leaf(&root, "scrollform", "scroll_closed_form", "closed-form scroll count", {"scroll", "degree"},
         [](const Options& o, Report& r) {
           if (o.scroll_a.empty()) throw UsageError("--scroll is required");
           auto a = parse_ints(o.scroll_a, "--scroll");
           auto model = scroll(a);
           auto d = degree_class(o, model);
           r.result = canonical_string(scroll_closed_form(a, d.coeffs[0], d.coeffs[1]));
           r.detail("foliation_count", canonical_string(foliation_sing_count(model, d)));
         });

  b.leaf(&root, "residue", "local_multiplicity", "local multiplicity and orbifold index of a germ", {"residue"},
         [](const Options& o, Report& r) {
           VarTable vars(split_list(o.vars));
           IndexQuery q;
           for (const auto& c : split_list(o.components)) q.components.push_back(parse_polynomial(c, vars));
           try {
             q.group_order = BigInt(o.group);
           } catch (const std::exception&) {
             throw UsageError("--group: expected a positive integer, got '" + o.group + "'");
           }
           q.degree_cap = o.cap;
           auto rep = local_multiplicity(q);
           r.result = str(rep.orbifold_index);
           r.detail("multiplicity", str(rep.multiplicity));
           r.detail("group_order", str(rep.group_order));
           r.detail("stabilized_at", std::to_string(rep.stabilized_at));
         });

  auto* check = b.group("check", "homogeneity, descent and invariance checks");
  b.leaf(check, "homogeneous", "check_quasi_homogeneous", "class-group degree of a polynomial", {"model", "poly"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           auto q = parse_graded(m, o.poly).degree();
           r.result = degree_text(q);
           r.detail("homogeneous", !q.is_mixed());
         });
  b.leaf(check, "descends", "check_descends", "radial contractions of a 1-form vanish", {"model", "form"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           auto w = parse_one_form(m, o.form);
           r.result = check_descends(w) ? "true" : "false";
           r.detail("form_degree", degree_text(w.degree()));
         });
  b.leaf(check, "invariant", "check_invariant_hypersurface", "X(f) = g*f", {"model", "field", "poly"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           auto x = parse_vector_field(m, o.field);
           auto res = check_invariant_hypersurface(x, parse_graded(m, o.poly).poly);
           r.result = res.invariant ? "true" : "false";
           if (res.cofactor) r.detail("cofactor", canonical_string(*res.cofactor));
         });
  b.leaf(check, "integrable", "check_integrable", "Frobenius condition w ^ dw = 0", {"model", "form"},
         [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           r.result = check_integrable(parse_one_form(m, o.form)) ? "true" : "false";
         });

  b.leaf(&root, "gcd-obstruction", "gcd_obstruction", "gcd of divisor coefficients versus chi",
         {"model", "degree-div"}, [](const Options& o, Report& r) {
           auto m = load_model(o);
           note_model(r, *m);
           auto v = gcd_obstruction(*m, parse_ints(o.degree_div, "--degree-div"));
           r.result = v.forces_singular ? "true" : "false";
           r.detail("chi", canonical_string(v.chi));
           r.detail("gcd", str(v.gcd));
         });
}

void record_inputs(const Leaf& leaf, Report& r) {
  for (const auto* opt : leaf.app->get_options()) {
    if (opt->count() == 0 || opt->get_lnames().empty()) continue;
    const auto& name = opt->get_lnames().front();
    if (name == "help") continue;
    auto res = opt->results();
    if (res.size() == 1) r.inputs[name] = res.front();
    else r.inputs[name] = res;
  }
}

void emit(const Report& r, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    json j;
    j["operation"] = r.operation;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    json details = r.details;
    if (!r.warnings.empty()) details["warnings"] = r.warnings;
    j["details"] = details;
    out << j.dump(2) << "\n";
    return;
  }
  out << "result = " << r.result << "\n";
  for (const auto& line : r.lines) out << line << "\n";
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Singularity counts for foliations and distributions on toric orbifolds", "toricfol"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json_out, "print a JSON object instead of plain text");
  Builder b(app, o);
  build(b, app);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  for (const auto& leaf : b.leaves()) {
    if (!leaf.app->parsed()) continue;
    Report r;
    r.operation = leaf.operation;
    record_inputs(leaf, r);
    try {
      leaf.handler(o, r);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    emit(r, o.json_out, out, err);
    return 0;
  }
  err << "usage error: no subcommand given\n";
  return 2;
}

}  // namespace toricfol::cli
