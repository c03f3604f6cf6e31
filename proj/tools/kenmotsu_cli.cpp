// kenmotsu: validate specs, print tensors, run the verification suite.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bundled_spec.hpp"
#include "kenmotsu/kenmotsu.hpp"

namespace {

using namespace kenmotsu;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Combining macron, so "S" + kBar renders as S-bar.
const std::string kBar = "̄";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string frame_name(std::size_t i) { return "E" + std::to_string(i + 1); }

bool top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (depth == 0 && k > 0 && (s[k] == '+' || s[k] == '-') && s[k - 1] != '^') return true;
  }
  return false;
}

std::string vector_string(const FrameVec& v) {
  std::string out;
  for (std::size_t l = 0; l < v.dim(); ++l) {
    const Expr& c = v(l);
    if (c.is_zero()) continue;
    const std::string s = to_string(c);
    std::string term;
    if (s == "1") term = frame_name(l);
    else if (s == "-1") term = "-" + frame_name(l);
    else if (top_level_sum(s)) term = "(" + s + ")*" + frame_name(l);
    else term = s + "*" + frame_name(l);
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

FrameVec row(const Tensor12& t, std::size_t i, std::size_t j) {
  return FrameVec::generate(t.dim(), [&](const auto& idx) { return t(i, j, idx[0]); });
}

FrameVec row(const Tensor13& t, std::size_t i, std::size_t j, std::size_t k) {
  return FrameVec::generate(t.dim(), [&](const auto& idx) { return t(i, j, k, idx[0]); });
}

void print_connection(const std::string& sym, const Tensor12& gamma, bool all) {
  const std::size_t n = gamma.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FrameVec v = row(gamma, i, j);
      if (all || !v.is_zero()) std::cout << sym << "_{" << frame_name(i) << "}" << frame_name(j) << " = " << vector_string(v) << "\n";
    }
  }
}

void print_torsion(const std::string& sym, const Tensor12& t, bool all) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = all ? 0 : i + 1; j < n; ++j) {
      const FrameVec v = row(t, i, j);
      if (all || !v.is_zero()) std::cout << sym << "(" << frame_name(i) << "," << frame_name(j) << ") = " << vector_string(v) << "\n";
    }
  }
}

void print_curvature(const std::string& sym, const Tensor13& r, bool all) {
  const std::size_t n = r.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const FrameVec v = row(r, i, j, k);
        if (all || !v.is_zero()) {
          std::cout << sym << "(" << frame_name(i) << "," << frame_name(j) << ")" << frame_name(k) << " = " << vector_string(v) << "\n";
        }
      }
    }
  }
}

void print_form(const std::string& sym, const Tensor02& s, bool all) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (all || !s(i, j).is_zero()) std::cout << sym << "(" << frame_name(i) << "," << frame_name(j) << ") = " << to_string(s(i, j)) << "\n";
    }
  }
}

SpecDocument read_spec(const std::string& path) {
  try {
    return load_spec_file(path);
  } catch (const SpecError& e) {
    throw UsageError(e.what());
  }
}

// "symbolic" keeps the parameter; anything else must be a parameter-only expression.
std::optional<Expr> parameter_value(const ManifoldSpec& m, const std::string& name, const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  Expr v;
  try {
    v = m.parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
  if (v.depends_on_coordinates()) throw UsageError("--" + name + " must not depend on coordinates");
  return v;
}

VerificationReport validation_report(const SpecDocument& doc) {
  VerificationReport r = check_almost_contact(doc.manifold, doc.contact);
  const ConnectionTable lc = levi_civita(doc.manifold);
  r.merge(check_kenmotsu(doc.manifold, doc.contact, lc));
  if (doc.connection) {
    r.add(defect_record("connection.custom.metric", "nabla g = 0 for the custom connection",
                        metric_compat_defect(*doc.connection, doc.manifold)));
  }
  return r;
}

int cmd_validate(const std::string& path) {
  const SpecDocument doc = read_spec(path);
  const VerificationReport r = validation_report(doc);
  std::cout << to_text(r);
  return r.ok() ? kOk : kCheckFailed;
}

const std::vector<std::string> kTensors = {"lc", "gsmc", "torsion", "riemann", "ricci", "scalar", "projective", "concircular"};

int cmd_compute(const std::string& path, const std::vector<std::string>& tensors, const std::string& alpha,
                const std::string& beta, bool all) {
  for (const auto& t : tensors) {
    if (std::find(kTensors.begin(), kTensors.end(), t) == kTensors.end()) throw UsageError("unknown tensor '" + t + "'");
  }
  const SpecDocument doc = read_spec(path);
  const ManifoldSpec& m = doc.manifold;
  Bindings b;
  if (auto a = parameter_value(m, "alpha", alpha)) b["alpha"] = *a;
  if (auto v = parameter_value(m, "beta", beta)) b["beta"] = *v;
  const Geometry G = make_geometry(m, doc.contact).substitute(b);

  for (const auto& t : tensors) {
    if (t == "lc") print_connection("∇", G.lc.gamma, all);
    if (t == "gsmc") print_connection("∇" + kBar, G.gsmc.gamma, all);
    if (t == "torsion") print_torsion("T" + kBar, torsion(G.gsmc, m), all);
    if (t == "riemann") {
      print_curvature("R", G.R, all);
      print_curvature("R" + kBar, G.Rb, all);
    }
    if (t == "ricci") {
      print_form("S", G.S, all);
      print_form("S" + kBar, G.Sb, all);
    }
    if (t == "scalar") {
      std::cout << "r = " << to_string(G.r) << "\n";
      std::cout << "r" << kBar << " = " << to_string(G.rb) << "\n";
    }
    if (t == "projective") {
      print_curvature("P", projective(G.R, G.S), all);
      print_curvature("P" + kBar, projective(G.Rb, G.Sb), all);
    }
    if (t == "concircular") {
      print_curvature("C*", concircular(G.R, G.r, m), all);
      print_curvature("C" + kBar + "*", concircular(G.Rb, G.rb, m), all);
    }
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& alpha, const std::string& beta, const std::string& format,
               const std::string& variant) {
  const SpecDocument doc = read_spec(path);
  VerifyOptions opt;
  opt.alpha = parameter_value(doc.manifold, "alpha", alpha);
  opt.beta = parameter_value(doc.manifold, "beta", beta);
  if (variant == "printed") opt.variant = VariantFilter::printed;
  else if (variant == "rederived") opt.variant = VariantFilter::rederived;
  else opt.variant = VariantFilter::both;
  const VerificationReport r = verify_spec(doc, opt);
  if (format == "json") std::cout << to_json(r).dump(2) << "\n";
  else std::cout << to_text(r);
  return r.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized symmetric metric connections on Kenmotsu manifolds"};
  app.require_subcommand(1);

  std::string spec, alpha = "symbolic", beta = "symbolic", format = "text", variant = "both";
  std::vector<std::string> tensors;
  bool all = false;

  auto* validate = app.add_subcommand("validate", "check the almost contact and Kenmotsu conditions");
  validate->add_option("spec", spec, "spec file")->required();

  auto* compute = app.add_subcommand("compute", "print tensor components");
  compute->add_option("spec", spec, "spec file")->required();
  compute->add_option("--tensor", tensors, "lc, gsmc, torsion, riemann, ricci, scalar, projective, concircular")
      ->required()
      ->expected(1, -1);
  compute->add_option("--alpha", alpha, "expression or 'symbolic'");
  compute->add_option("--beta", beta, "expression or 'symbolic'");
  compute->add_flag("--all", all, "include zero components");

  auto* verify = app.add_subcommand("verify", "run the identity and theorem suite");
  verify->add_option("spec", spec, "spec file")->required();
  verify->add_option("--alpha", alpha, "expression or 'symbolic'");
  verify->add_option("--beta", beta, "expression or 'symbolic'");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--variant", variant)->check(CLI::IsMember({"printed", "rederived", "both"}));

  auto* example = app.add_subcommand("example", "write the bundled 3-dimensional spec to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(spec);
    if (*compute) return cmd_compute(spec, tensors, alpha, beta, all);
    if (*verify) return cmd_verify(spec, alpha, beta, format, variant);
    if (*example) {
      std::cout << kenmotsu::kBundledSpec;
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
