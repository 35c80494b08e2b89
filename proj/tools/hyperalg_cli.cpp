// hyperalg: command-line front end over JSON element documents.
//
// Exit codes: 0 success, 2 parse error, 3 algebra mismatch, 4 domain error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperalg/document.hpp"
#include "hyperalg/hyperalg.hpp"
#include "hyperalg/reference_examples.hpp"

namespace {

using namespace hyperalg;
using io::json;

constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitDomain = 4;

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = Tolerance<double>{}.absolute;
  std::uint64_t seed = 0;
  long long n = 1;
  bool verify = false;
  std::string direction = "to";
  std::vector<double> params;
  double angle = 0;
  std::string axis_path;
  std::string a_path;
  std::string b_path;
  std::string input;
  std::string second;
  std::size_t samples = 0;
};

Tolerance<double> tolerance(const Options& opt) {
  Tolerance<double> t;
  t.absolute = opt.tol;
  return t;
}

Elementd read_element(const std::string& path) { return io::element_from_json(io::read_document(path)); }

// Source algebra for the "from" direction: --params wins, then the recorded source_algebra.
AlgebraParamsd source_algebra(const json& doc, AlgebraKind kind, const Options& opt) {
  if (!opt.params.empty()) {
    try {
      return AlgebraParamsd::from_span(kind, opt.params);
    } catch (const AlgebraError& e) {
      throw io::DocumentError(e.what());
    }
  }
  if (doc.contains("source_algebra")) {
    auto src = io::algebra_from_json(json{{"algebra", doc["source_algebra"]}});
    if (src.kind() != kind) throw io::DocumentError("source_algebra kind differs from the document");
    return src;
  }
  throw io::DocumentError("--direction from needs --params or a 'source_algebra' field");
}

IsomorphismMap<double> map_for(const json& doc, const AlgebraParamsd& alg, const Options& opt) {
  if (opt.direction == "to") return canonical_map(alg);
  auto m = canonical_map(source_algebra(doc, alg.kind(), opt));
  if (!(m.target() == alg))
    throw AlgebraError(ErrorCode::AlgebraMismatch, "document is not in the canonical algebra of " + m.source().describe());
  return m;
}

int cmd_mul(const Options& opt) {
  io::write_document(io::to_json(mul(read_element(opt.input), read_element(opt.second))));
  return 0;
}

int cmd_pow(const Options& opt) {
  const auto tol = tolerance(opt);
  const auto a = read_element(opt.input);
  const auto p = demoivre_pow(a, opt.n, tol);
  if (opt.verify) {
    const auto base = opt.n < 0 ? inverse(a, tol) : a;
    auto check = Elementd::one(a.algebra());
    for (long long i = 0; i < (opt.n < 0 ? -opt.n : opt.n); ++i) check = mul(check, base);
    const double bound = tol.absolute * std::pow(1.0 + base.euclidean_norm(), static_cast<double>(std::llabs(opt.n)));
    if (distance(p, check) > bound)
      throw VerificationFailure("power disagrees with repeated multiplication by " + std::to_string(distance(p, check)));
  }
  io::write_document(io::to_json(p));
  return 0;
}

int cmd_roots(const Options& opt) {
  const auto a = read_element(opt.input);
  if (opt.n < 1) throw AlgebraError(ErrorCode::InvalidParameter, "--n must be positive");
  const auto roots = nth_roots(a, static_cast<int>(opt.n), tolerance(opt));
  json doc = io::to_json(roots);
  if (!roots.is_finite() && opt.samples > 0) {
    json samples = json::array();
    for (const auto& s : roots.family().sample(opt.samples, opt.seed, tolerance(opt))) samples.push_back(io::to_json(s));
    doc["samples"] = samples;
  }
  io::write_document(doc);
  return 0;
}

int cmd_classify(const Options& opt) {
  const auto tol = tolerance(opt);
  const auto a = read_element(opt.input);
  json doc = {{"split_class", to_string(classify_split(a, tol))}, {"norm", norm_form(a)}, {"trace", trace(a)}};
  try {
    doc["polar"] = io::to_json(polar_decompose(a, tol));
  } catch (const AlgebraError& e) {
    doc["polar"] = nullptr;
    doc["polar_unavailable"] = to_string(e.code());
  }
  io::write_document(doc);
  return 0;
}

int cmd_map(const Options& opt) {
  const auto doc = io::read_document(opt.input);
  const auto x = io::element_from_json(doc);
  const auto m = map_for(doc, x.algebra(), opt);
  if (opt.direction == "to") {
    json out = io::to_json(m.apply(x));
    out["source_algebra"] = io::to_json(m.source());
    out["operator"] = to_string(m.kind());
    io::write_document(out);
  } else {
    io::write_document(io::to_json(m.apply_inverse(x)));
  }
  return 0;
}

int cmd_transport(const Options& opt) {
  const auto doc = io::read_document(opt.input);
  const auto f = io::polynomial_from_json(doc);
  const auto m = map_for(doc, f.algebra(), opt);
  const bool forward = opt.direction == "to";
  json out = io::to_json(transport_polynomial(f, m, forward ? Direction::Forward : Direction::Inverse));
  if (forward) out["source_algebra"] = io::to_json(m.source());
  io::write_document(out);
  return 0;
}

int cmd_rotate(const Options& opt) {
  const auto x = read_element(opt.input);
  const auto axis = read_element(opt.axis_path);
  io::write_document(io::to_json(rotate(x, axis, opt.angle, tolerance(opt))));
  return 0;
}

int cmd_quad(const Options& opt) {
  const auto tol = tolerance(opt);
  const auto a = read_element(opt.a_path);
  const auto b = read_element(opt.b_path);
  const auto cls = quad_root_classify(a, b, tol);
  json doc = io::to_json(cls);
  const bool quadric = cls.tag == QuadRootTag::Ellipsoidal || cls.tag == QuadRootTag::Hyperboloidal;
  if (quadric && opt.samples > 0) {
    // Any pure element on the quadric gives an orbit representative.
    std::mt19937_64 rng(opt.seed);
    const auto seed_root = Elementd::real(a.algebra(), cls.scalar_part) +
                           detail::sample_pure_with_norm(a.algebra(), cls.pure_norm, rng, tol);
    json samples = json::array();
    for (const auto& s : quadric_orbit_samples(seed_root, opt.samples, opt.seed, tol)) samples.push_back(io::to_json(s));
    doc["samples"] = samples;
  }
  io::write_document(doc);
  return 0;
}

int cmd_paper_examples() {
  int failures = 0;
  for (const auto& r : run_reference_examples()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << '\n';
    failures += r.passed ? 0 : 1;
  }
  std::cout << (failures ? "FAILED: " + std::to_string(failures) : std::string("all passed")) << '\n';
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic, isomorphisms and equation solving in generalized quaternion and octonion algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--tol", opt.tol, "Absolute comparison tolerance");
  app.add_option("--seed", opt.seed, "Seed for sampling commands");

  auto* mul_cmd = app.add_subcommand("mul", "Product x y");
  mul_cmd->add_option("x", opt.input)->required();
  mul_cmd->add_option("y", opt.second)->required();

  auto* pow_cmd = app.add_subcommand("pow", "Integer power through the polar form");
  pow_cmd->add_option("--n", opt.n)->required();
  pow_cmd->add_flag("--verify", opt.verify, "Cross-check against repeated multiplication");
  pow_cmd->add_option("a", opt.input)->required();

  auto* roots_cmd = app.add_subcommand("roots", "Solutions of x^n = a");
  roots_cmd->add_option("--n", opt.n)->required();
  roots_cmd->add_option("--samples", opt.samples, "Sample this many members of a root family");
  roots_cmd->add_option("a", opt.input)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Split class and polar form");
  classify_cmd->add_option("a", opt.input)->required();

  auto* map_cmd = app.add_subcommand("map", "Move an element to or from its canonical algebra");
  map_cmd->add_option("--direction", opt.direction)->check(CLI::IsMember({"to", "from"}));
  map_cmd->add_option("--params", opt.params, "Generalized algebra parameters for --direction from");
  map_cmd->add_option("a", opt.input)->required();

  auto* transport_cmd = app.add_subcommand("transport", "Move a polynomial to or from its canonical algebra");
  transport_cmd->add_option("--direction", opt.direction)->check(CLI::IsMember({"to", "from"}));
  transport_cmd->add_option("--params", opt.params, "Generalized algebra parameters for --direction from");
  transport_cmd->add_option("poly", opt.input)->required();

  auto* rotate_cmd = app.add_subcommand("rotate", "conj(u) x u about a unit pure axis");
  rotate_cmd->add_option("--angle", opt.angle)->required();
  rotate_cmd->add_option("--axis", opt.axis_path)->required();
  rotate_cmd->add_option("x", opt.input)->required();

  auto* quad_cmd = app.add_subcommand("quad", "Root structure of x^2 + a x + b = 0");
  quad_cmd->add_option("--a", opt.a_path)->required();
  quad_cmd->add_option("--b", opt.b_path)->required();
  quad_cmd->add_option("--samples", opt.samples, "Sample this many roots on the quadric");

  auto* examples_cmd = app.add_subcommand("paper-examples", "Run the built-in worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*mul_cmd) return cmd_mul(opt);
    if (*pow_cmd) return cmd_pow(opt);
    if (*roots_cmd) return cmd_roots(opt);
    if (*classify_cmd) return cmd_classify(opt);
    if (*map_cmd) return cmd_map(opt);
    if (*transport_cmd) return cmd_transport(opt);
    if (*rotate_cmd) return cmd_rotate(opt);
    if (*quad_cmd) return cmd_quad(opt);
    if (*examples_cmd) return cmd_paper_examples();
  } catch (const io::DocumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::AlgebraMismatch ? kExitMismatch : kExitDomain;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
