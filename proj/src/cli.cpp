#include "catmag/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "catmag/errors.hpp"
#include "catmag/generators.hpp"
#include "catmag/io.hpp"
#include "catmag/linalg.hpp"
#include "catmag/magnitude.hpp"

namespace catmag::cli {

namespace {

struct Options {
  std::string format = "text";
  int decimal = -1;
  std::string output;
  std::string against;
  bool with_magnitude = false;
  std::string file;
  std::string file_b;
  std::string generator;
  long long size = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::string scalar(const Rational& r, const Options& o) {
  std::string s = r.to_string();
  if (o.decimal >= 0) s += " ≈ " + r.to_decimal(static_cast<unsigned>(o.decimal));
  return s;
}

void render_matrix(std::ostream& out, const Matrix& m) {
  if (m.empty()) {
    out << "  (empty " << m.shape_string() << ")\n";
    return;
  }
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).to_string().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string s = m(i, j).to_string();
      out << "  " << std::string(width[j] - s.size(), ' ') << s;
    }
    out << "\n";
  }
}

std::string join_names(const std::vector<std::string>& names) {
  if (names.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s;
}

std::string labelled(const std::vector<std::string>& names, const std::vector<Rational>& values) {
  if (values.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + names[i] + " = " + values[i].to_string();
  return s;
}

ZetaContext zeta_of_document(const io::Document& doc) {
  if (const auto* m = std::get_if<Matrix>(&doc)) {
    if (!m->square()) throw ShapeError("expected a square matrix, got " + m->shape_string());
    ZetaContext ctx{{}, *m};
    for (std::size_t i = 0; i < m->rows(); ++i) ctx.object_order.push_back(std::to_string(i));
    return ctx;
  }
  if (const auto* p = std::get_if<Poset>(&doc)) return zeta_of(*p);
  return zeta_of(std::get<FinCategory>(doc));
}

FinCategory category_view(const io::Document& doc, const char* command) {
  if (const auto* p = std::get_if<Poset>(&doc)) return p->as_category();
  if (const auto* c = std::get_if<FinCategory>(&doc)) return *c;
  throw UsageError(std::string(command) + " needs category or poset documents, got a matrix");
}

void emit_document(const io::Json& j, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << io::dump(j);
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.output);
  file << io::dump(j);
}

// ---------------------------------------------------------------------------

int cmd_magnitude(const Options& o, std::ostream& out) {
  const MagnitudeReport r = magnitude_of(zeta_of_document(io::load_document(o.file)));
  if (json_mode(o)) {
    out << io::dump(io::to_json(r));
  } else {
    out << "objects: " << join_names(r.objects) << "\n";
    out << "rank: " << r.rank << " of " << r.n << "\n";
    out << "pseudo-Mobius Z+:\n";
    render_matrix(out, r.pseudo_mobius);
    if (r.mobius) {
      out << "Mobius Z^-1: equals Z+\n";
    } else {
      out << "Mobius: none (zeta singular, rank " << r.rank << ")\n";
    }
    out << "weighting: " << (r.weighting ? labelled(r.objects, *r.weighting) : "none") << "\n";
    out << "coweighting: " << (r.coweighting ? labelled(r.objects, *r.coweighting) : "none") << "\n";
    if (r.has_magnitude) {
      out << "generalized magnitude = " << scalar(r.generalized_magnitude, o) << "\n";
      out << "magnitude = " << scalar(*r.magnitude, o) << "\n";
    } else {
      out << "no magnitude; generalized = " << scalar(r.generalized_magnitude, o) << "\n";
    }
  }
  return r.has_magnitude ? kOk : kNegative;
}

int cmd_pinv(const Options& o, std::ostream& out) {
  const io::Document doc = io::load_document(o.file);
  const Matrix a = std::holds_alternative<Matrix>(doc) ? std::get<Matrix>(doc) : zeta_of_document(doc).z;
  const Matrix p = pinv(a);
  if (json_mode(o)) {
    out << io::dump(io::to_json(p));
  } else {
    render_matrix(out, p);
  }
  return kOk;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  const ZetaContext z = zeta_of_document(io::load_document(o.file));
  if (json_mode(o)) {
    out << io::dump(io::to_json(z.z));
  } else {
    out << "objects: " << join_names(z.object_order) << "\n";
    render_matrix(out, z.z);
  }
  return kOk;
}

int cmd_mobius(const Options& o, std::ostream& out) {
  const ZetaContext z = zeta_of_document(io::load_document(o.file));
  const auto mu = inverse(z.z);
  if (!mu) {
    const std::size_t r = rank(z.z);
    if (json_mode(o)) {
      out << io::dump(io::Json{{"kind", "mobius"}, {"singular", true}, {"rank", r}});
    } else {
      out << "zeta singular, rank " << r << "\n";
    }
    return kNegative;
  }
  if (json_mode(o)) {
    out << io::dump(io::to_json(*mu));
  } else {
    out << "objects: " << join_names(z.object_order) << "\n";
    render_matrix(out, *mu);
  }
  return kOk;
}

int cmd_weighting(const Options& o, std::ostream& out, bool co) {
  const ZetaContext z = zeta_of_document(io::load_document(o.file));
  const auto sol = co ? coweighting_solutions(z.z) : weighting_solutions(z.z);
  const char* what = co ? "coweighting" : "weighting";
  if (json_mode(o)) {
    io::Json j{{"kind", what}};
    j[what] = sol ? io::to_json(z.object_order, sol->particular) : io::Json(nullptr);
    j["nullspace"] = sol ? io::to_json(sol->nullspace) : io::Json(nullptr);
    out << io::dump(j);
  } else if (sol) {
    for (std::size_t i = 0; i < sol->particular.size(); ++i)
      out << z.object_order[i] << " = " << sol->particular[i] << "\n";
    if (sol->nullspace.cols() > 0) {
      out << "not unique; add any combination of the " << sol->nullspace.cols() << " column(s):\n";
      render_matrix(out, sol->nullspace);
    }
  } else {
    out << "no " << what << "\n";
  }
  return sol ? kOk : kNegative;
}

int cmd_rota(const Options& o, std::ostream& out) {
  const io::Document doc = io::load_document(o.file);
  const auto* p = std::get_if<Poset>(&doc);
  if (!p) throw UsageError("rota needs a poset document");
  const Rational e = rota_characteristic(*p);
  if (json_mode(o)) {
    out << io::dump(io::Json{{"kind", "rota"}, {"E", e.to_string()}});
  } else {
    out << "E = " << scalar(e, o) << "\n";
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const io::Document doc = io::load_document(o.file);
  if (const auto* a = std::get_if<Matrix>(&doc)) {
    Matrix candidate;
    if (o.against.empty()) {
      candidate = pinv(*a);
    } else {
      const io::Document cand = io::load_document(o.against);
      if (!std::holds_alternative<Matrix>(cand)) throw UsageError("--against needs a matrix document");
      candidate = std::get<Matrix>(cand);
    }
    const PenroseReport r = penrose_check(*a, candidate);
    if (json_mode(o)) {
      out << io::dump(io::Json{{"kind", "penrose_check"},
                               {"reproduces", r.reproduces},
                               {"reflexive", r.reflexive},
                               {"left_symmetric", r.left_symmetric},
                               {"right_symmetric", r.right_symmetric},
                               {"pseudoinverse", r.all()}});
    } else {
      auto b = [](bool v) { return v ? "true" : "false"; };
      out << "(i)   A X A = A:       " << b(r.reproduces) << "\n";
      out << "(ii)  X A X = X:       " << b(r.reflexive) << "\n";
      out << "(iii) (A X)^T = A X:   " << b(r.left_symmetric) << "\n";
      out << "(iv)  (X A)^T = X A:   " << b(r.right_symmetric) << "\n";
      out << (r.all() ? "candidate is the pseudoinverse\n" : "candidate is not the pseudoinverse\n");
    }
    return r.all() ? kOk : kNegative;
  }
  // categories and posets are validated while loading
  std::string summary;
  if (const auto* p = std::get_if<Poset>(&doc)) {
    summary = "valid poset: " + std::to_string(p->size()) + " objects";
  } else {
    const auto& c = std::get<FinCategory>(doc);
    summary = "valid category: " + std::to_string(c.object_count()) + " objects, " +
              std::to_string(c.morphism_count()) + " morphisms";
  }
  if (json_mode(o)) {
    out << io::dump(io::Json{{"kind", "validation"}, {"valid", true}});
  } else {
    out << summary << "\n";
  }
  return kOk;
}

int cmd_combine(const Options& o, std::ostream& out, std::ostream& err, bool is_product) {
  const char* name = is_product ? "product" : "coproduct";
  const FinCategory a = category_view(io::load_document(o.file), name);
  const FinCategory b = category_view(io::load_document(o.file_b), name);
  const FinCategory c = is_product ? product(a, b) : coproduct(a, b);
  emit_document(io::to_json(c), o, out);
  if (!o.with_magnitude) return kOk;
  const MagnitudeReport r = magnitude_of_category(c);
  std::ostream& note = o.output.empty() ? err : out;
  if (r.has_magnitude) {
    note << "magnitude = " << scalar(*r.magnitude, o) << "\n";
    return kOk;
  }
  note << "no magnitude; generalized = " << scalar(r.generalized_magnitude, o) << "\n";
  return kNegative;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.size < 0) throw UsageError("size must be non-negative");
  const auto n = static_cast<std::size_t>(o.size);
  io::Json doc;
  if (o.generator == "discrete") {
    doc = io::to_json(gen_discrete(n));
  } else if (o.generator == "indiscrete") {
    doc = io::to_json(gen_indiscrete(n));
  } else if (o.generator == "chain") {
    doc = io::to_json(gen_chain(n));
  } else if (o.generator == "divisors") {
    if (n == 0) throw UsageError("divisors needs size >= 1");
    doc = io::to_json(gen_divisors(n));
  } else if (o.generator == "cyclic-monoid") {
    if (n == 0) throw UsageError("cyclic-monoid needs size >= 1");
    doc = io::to_json(gen_cyclic_monoid(n));
  } else {
    throw UsageError("unknown generator \"" + o.generator +
                     "\" (expected discrete, indiscrete, chain, divisors or cyclic-monoid)");
  }
  emit_document(doc, o, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact magnitude of finite categories, posets and matrices via the Moore-Penrose pseudoinverse",
               "catmag"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--decimal", o.decimal, "Append a k-digit decimal approximation to scalars")
      ->check(CLI::Range(0, 1000));

  auto input = [&](CLI::App* sub) { sub->add_option("file", o.file, "Input document")->required(); };

  CLI::App* magnitude = app.add_subcommand("magnitude", "Weighting, coweighting and magnitude report");
  input(magnitude);
  CLI::App* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose pseudoinverse (of the zeta matrix for categories)");
  input(pinv_cmd);
  CLI::App* zeta = app.add_subcommand("zeta", "Zeta matrix |Hom(a,b)|");
  input(zeta);
  CLI::App* mobius = app.add_subcommand("mobius", "Mobius function, the inverse of the zeta matrix");
  input(mobius);
  CLI::App* weighting = app.add_subcommand("weighting", "Weighting M+ 1 and the nullspace of M");
  input(weighting);
  CLI::App* coweighting = app.add_subcommand("coweighting", "Coweighting 1^T M+ and the left nullspace");
  input(coweighting);
  CLI::App* rota = app.add_subcommand("rota", "Rota's Euler characteristic 1 + mu(0,1) of a bounded poset");
  input(rota);
  CLI::App* check = app.add_subcommand("check", "Validate a category/poset, or Penrose-check a matrix");
  input(check);
  check->add_option("--against", o.against, "Candidate pseudoinverse document");

  CLI::App* product_cmd = app.add_subcommand("product", "Product category of two documents");
  CLI::App* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct (disjoint union) of two documents");
  for (CLI::App* sub : {product_cmd, coproduct_cmd}) {
    sub->add_option("file_a", o.file, "First document")->required();
    sub->add_option("file_b", o.file_b, "Second document")->required();
    sub->add_option("-o,--output", o.output, "Write the document here instead of stdout");
    sub->add_flag("--magnitude", o.with_magnitude, "Also report the magnitude of the result");
  }

  CLI::App* gen = app.add_subcommand("gen", "Generate discrete, indiscrete, chain, divisors or cyclic-monoid");
  gen->add_option("name", o.generator, "Generator name")->required();
  gen->add_option("size", o.size, "Size parameter")->required();
  gen->add_option("-o,--output", o.output, "Write the document here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*magnitude) return cmd_magnitude(o, out);
    if (*pinv_cmd) return cmd_pinv(o, out);
    if (*zeta) return cmd_zeta(o, out);
    if (*mobius) return cmd_mobius(o, out);
    if (*weighting) return cmd_weighting(o, out, false);
    if (*coweighting) return cmd_weighting(o, out, true);
    if (*rota) return cmd_rota(o, out);
    if (*check) return cmd_check(o, out);
    if (*product_cmd) return cmd_combine(o, out, err, true);
    if (*coproduct_cmd) return cmd_combine(o, out, err, false);
    if (*gen) return cmd_gen(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace catmag::cli
