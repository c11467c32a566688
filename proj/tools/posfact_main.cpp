#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "posfact/constructions.hpp"
#include "posfact/dsl.hpp"
#include "posfact/garside.hpp"
#include "posfact/invariants.hpp"
#include "posfact/lift.hpp"
#include "posfact/report.hpp"

namespace {

using namespace posfact;

enum Exit { kPass = 0, kUsage = 1, kRefuted = 2, kTierInsufficient = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const Document& d, const Report& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << print(d);
    std::cerr << report.render();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << print(d);
  std::cout << report.render();
}

std::string framings_string(const std::vector<std::int64_t>& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.size(); ++k) out += (k ? ", " : "") + std::to_string(f[k]);
  return out + "]";
}

int cmd_nf(const std::string& path) {
  const auto d = load(path);
  Report r("nf");
  r.set("kind", to_string(d.kind));
  BraidWord w;
  if (d.kind == DocumentKind::Braid) {
    w = d.braid;
  } else if (d.kind == DocumentKind::Framed) {
    const auto x = evaluate(d.framed, d.strands);
    w = x.underlying();
    r.set("framings", framings_string(x.framings()));
  } else {
    throw UsageError("nf applies to braid and framed documents");
  }
  const auto nf = normal_form(w);
  r.set("strands", w.strands());
  r.set("infimum", nf.infimum);
  r.set("supremum", nf.supremum());
  r.set("normal_form", to_string(nf));
  r.set("word", to_string(to_word(nf)));
  std::cout << r.render();
  return kPass;
}

int cmd_lift(const std::string& path, const std::string& out) {
  const auto d = load(path);
  if (d.kind != DocumentKind::Braid) throw UsageError("lift takes a braid document");
  if (d.strands % 2 != 0) throw UsageError("lift needs an even number of strands");
  const auto w = lift(d.braid);
  Report r("lift");
  r.set("strands", d.strands);
  r.set("genus", w.surface()->genus());
  r.set("length", w.size());
  emit(Document::of(w), r, out);
  return kPass;
}

void psi_keys(Report& r, std::uint64_t seed) {
  r.set("seed", std::to_string(seed));
  r.set("psi", to_string(make_psi(seed).word));
}

int cmd_generate_phi(int m, int l, std::uint64_t seed, const std::string& out) {
  const auto f = phi_factorization(m, l, seed);
  Report r("generate");
  r.set("construction", "phi");
  r.set("m", m);
  r.set("l", l);
  psi_keys(r, seed);
  r.set("genus", f.word().surface()->genus());
  r.set("length", f.length());
  r.set("expected_length", 10 * m + 5 * (2 * l + 6));
  r.set("all_positive", f.word().all_positive());
  r.set("homology_matches_target", homology_action(f.word()) == homology_action(expand(phi(l))));
  emit(Document::of(f.word()), r, out);
  return kPass;
}

int cmd_generate_boundary(int m, int l, std::uint64_t seed, const std::string& out) {
  const auto f = boundary_multitwist_factorization(m, l, seed);
  const int k = 2 * l + 6;
  Report r("generate");
  r.set("construction", "boundary");
  r.set("m", m);
  r.set("l", l);
  psi_keys(r, seed);
  r.set("genus", f.word().surface()->genus());
  r.set("length", f.length());
  r.set("expected_length", 12 * k + 10 * m + 32);
  r.set("all_positive", f.word().all_positive());
  r.set("skeleton_framed_check",
        framed_equal(shadow(*f.skeleton()), boundary_multitwist_framed(4)));
  r.set("homology_identity", homology_action(f.word()).is_identity());
  emit(Document::of(f.word()), r, out);
  return kPass;
}

int cmd_generate_extend(int genus, int m, std::uint64_t seed, const std::string& out) {
  const auto base = boundary_multitwist_factorization(m, 0, seed);
  const auto f = extend_to_genus(genus, base);
  Report r("generate");
  r.set("construction", "extend");
  r.set("genus", genus);
  r.set("m", m);
  psi_keys(r, seed);
  r.set("base_length", base.length());
  r.set("length", f.length());
  r.set("expected_length",
        static_cast<long long>(base.length()) + (2 * genus + 1) * (2 * genus + 2) - 552);
  r.set("all_positive", f.word().all_positive());
  r.set("homology_identity", homology_action(f.word()).is_identity());
  emit(Document::of(f.word()), r, out);
  return kPass;
}

int cmd_generate_commutator(int m, std::uint64_t seed, const std::string& out) {
  const auto [t, c] = commutator_relation(m, seed);
  const auto w = compose(t, c);
  Report r("generate");
  r.set("construction", "commutator");
  r.set("m", m);
  psi_keys(r, seed);
  r.set("t_length", t.size());
  r.set("c_length", c.size());
  r.set("homology_identity", homology_action(w).is_identity());
  emit(Document::of(w), r, out);
  return kPass;
}

bool touches_radical(const TwistWord& w) {
  const auto& s = *w.surface();
  for (const auto& letter : w.letters()) {
    if (s.is_radical(curve_class(s, letter.curve))) return true;
  }
  return false;
}

int finish(Report& r, int code, const std::string& message) {
  r.set("result", code == kPass ? "pass" : code == kRefuted ? "refuted" : "tier-insufficient");
  r.set("message", message);
  std::cout << r.render();
  return code;
}

int verify_twist(Report& r, const TwistWord& a, const TwistWord& b, const std::string& tier) {
  if (tier != "homology") {
    return finish(r, kTierInsufficient,
                  "twist words can only be compared on homology; use --tier homology");
  }
  if (!verify_homologically(a, b)) return finish(r, kRefuted, "homology actions differ");
  if (touches_radical(a) || touches_radical(b)) {
    return finish(r, kTierInsufficient,
                  "homology cannot distinguish boundary twists: a letter has a boundary class");
  }
  return finish(r, kPass, "homology actions agree (necessary condition only)");
}

int cmd_verify(const std::string& path_a, const std::string& path_b, const std::string& tier) {
  const auto a = load(path_a);
  const auto b = load(path_b);
  if (a.kind != b.kind) throw UsageError("documents have different kinds");
  Report r("verify");
  r.set("kind", to_string(a.kind));
  r.set("tier", tier);

  switch (a.kind) {
    case DocumentKind::Braid:
      if (a.strands != b.strands) throw UsageError("strand counts differ");
      return equal(a.braid, b.braid) ? finish(r, kPass, "equal in the braid group")
                                     : finish(r, kRefuted, "different normal forms");
    case DocumentKind::Framed: {
      if (a.strands != b.strands) throw UsageError("strand counts differ");
      const auto x = evaluate(a.framed, a.strands);
      const auto y = evaluate(b.framed, b.strands);
      return framed_equal(x, y) ? finish(r, kPass, "equal in the framed braid group")
                                : finish(r, kRefuted, "braids or framings differ");
    }
    case DocumentKind::Twist:
      if (!(*a.twist.surface() == *b.twist.surface())) throw UsageError("surfaces differ");
      return verify_twist(r, a.twist, b.twist, tier);
    case DocumentKind::Swap: {
      if (a.layout != b.layout) throw UsageError("layouts differ");
      if (tier == "framed") {
        return framed_equal(shadow(a.swap), shadow(b.swap))
                   ? finish(r, kPass, "shadows agree in the framed braid group")
                   : finish(r, kRefuted, "shadows differ");
      }
      if (tier == "homology") return verify_twist(r, expand(a.swap), expand(b.swap), tier);
      try {
        return exact_equal(a.swap, b.swap)
                   ? finish(r, kPass, "branch-point braids are equal")
                   : finish(r, kRefuted, "branch-point braids differ");
      } catch (const std::invalid_argument&) {
        return finish(r, kTierInsufficient,
                      "subsurface letters have no braid model; use --tier framed or homology");
      }
    }
  }
  return kUsage;
}

int cmd_invariants(const std::string& path) {
  const auto d = load(path);
  if (d.kind != DocumentKind::Twist) throw UsageError("invariants takes a twist document");
  if (!d.twist.all_positive()) throw UsageError("invariants need a positive factorization");
  auto r = invariants_report(fibration_invariants(d.twist));
  r.set("monodromy_acts_trivially", homology_action(d.twist).is_identity());
  std::cout << r.render();
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive factorizations in mapping class groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for randomized searches")->capture_default_str();

  std::string file, file_b, out, tier = "exact";
  int m = 0, l = 0, genus = 12;

  auto* nf = app.add_subcommand("nf", "Garside normal form of a braid or framed document");
  nf->add_option("file", file)->required();

  auto* lift_cmd = app.add_subcommand("lift", "Lift a braid to Dehn twists on the double cover");
  lift_cmd->add_option("file", file)->required();
  lift_cmd->add_option("-o,--out", out, "Output file");

  auto* gen = app.add_subcommand("generate", "Write a constructed word");
  gen->require_subcommand(1);
  gen->add_option("-o,--out", out, "Output file");
  auto* gen_phi = gen->add_subcommand("phi", "Positive factorization of Phi");
  gen_phi->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  gen_phi->add_option("--l", l)->check(CLI::NonNegativeNumber);
  auto* gen_boundary = gen->add_subcommand("boundary", "Factorization of the boundary multitwist");
  gen_boundary->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  gen_boundary->add_option("--l", l)->check(CLI::NonNegativeNumber);
  auto* gen_extend = gen->add_subcommand("extend", "Boundary factorization moved to higher genus");
  gen_extend->add_option("--genus", genus)->required();
  gen_extend->add_option("--m", m)->check(CLI::NonNegativeNumber);
  auto* gen_comm = gen->add_subcommand("commutator", "The relation T^m C(m) on genus 2");
  gen_comm->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  for (auto* sub : {gen_phi, gen_boundary, gen_extend, gen_comm}) {
    sub->fallthrough();
    sub->add_option("-o,--out", out, "Output file");
  }

  auto* verify = app.add_subcommand("verify", "Compare two documents");
  verify->add_option("a", file)->required();
  verify->add_option("b", file_b)->required();
  verify->add_option("--tier", tier)->check(CLI::IsMember({"exact", "framed", "homology"}));

  auto* inv = app.add_subcommand("invariants", "Invariants of the fibration of a twist document");
  inv->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*nf) return cmd_nf(file);
    if (*lift_cmd) return cmd_lift(file, out);
    if (*gen_phi) return cmd_generate_phi(m, l, seed, out);
    if (*gen_boundary) return cmd_generate_boundary(m, l, seed, out);
    if (*gen_extend) return cmd_generate_extend(genus, m, seed, out);
    if (*gen_comm) return cmd_generate_commutator(m, seed, out);
    if (*verify) return cmd_verify(file, file_b, tier);
    if (*inv) return cmd_invariants(file);
  } catch (const std::exception& e) {
    std::cerr << "posfact: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
