// Command-line front end: computations and verification suites.
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "postlie/bimould.hpp"
#include "postlie/glhopf.hpp"
#include "postlie/io.hpp"
#include "postlie/verifier.hpp"

using namespace postlie;

namespace {

enum Exit { kPass = 0, kFail = 1, kParse = 2, kBound = 3, kConjecturePass = 4 };

struct Config {
  std::string structure = "ari";
  std::string v0 = "0";
  std::optional<int> max_weight;
  std::optional<int> max_depth;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Structure make_structure(const Config& c) {
  if (c.structure == "ihara") return Structure::ihara(parse_letter_set(c.v0));
  if (c.structure == "ari") return Structure::ari();
  if (c.structure == "uri") return Structure::uri();
  throw UsageError("unknown structure: " + c.structure);
}

int default_bound(const Structure& s) {
  if (const char* env = std::getenv("POSTLIE_MAX_WEIGHT")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("POSTLIE_MAX_WEIGHT must be a positive integer");
  }
  return s.kind == Structure::Kind::Uri ? 7 : 8;
}

int bound(const Config& c, const Structure& s) { return c.max_weight ? *c.max_weight : default_bound(s); }

int max_word_weight(const Poly& p) {
  int m = 0;
  for (const auto& [w, c] : p.terms()) m = std::max(m, weight(w));
  return m;
}

void check_bound(int wt, int limit) {
  if (wt > limit)
    throw WeightBoundError("input weight " + std::to_string(wt) + " exceeds bound " + std::to_string(limit));
}

/// Parses with a position caret on failure.
template <class F>
auto parse_arg(const std::string& name, const std::string& text, F parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ArgParseError(std::string(e.what()) + " in --" + name + "\n  " + text + "\n  " +
                        std::string(e.pos(), ' ') + "^");
  }
}

Poly poly_arg(const std::string& name, const std::string& text) { return parse_arg(name, text, parse_poly); }
BiPoly bipoly_arg(const std::string& name, const std::string& text) { return parse_arg(name, text, parse_bipoly); }

void emit(const Config& c, const Poly& p) {
  if (c.format == "json")
    std::cout << poly_to_json(p).dump() << "\n";
  else
    std::cout << format_poly(p) << "\n";
}

void emit(const Config& c, const Tensor2& t) {
  if (c.format == "json")
    std::cout << tensor_to_json(t).dump() << "\n";
  else
    std::cout << format_tensor(t) << "\n";
}

void emit_bi(const Config& c, const BiPoly& p) {
  if (c.format == "json")
    std::cout << bipoly_to_json(p).dump() << "\n";
  else
    std::cout << format_bipoly(p) << "\n";
}

void emit(const Config& c, const Bimould& b) {
  if (c.format == "json")
    std::cout << bimould_to_json(b).dump() << "\n";
  else
    std::cout << to_string(b) << "\n";
}

int emit(const Config& c, const VerificationReport& r) {
  if (c.format == "json")
    std::cout << r.to_json(c.timing).dump(2) << "\n";
  else
    std::cout << r.to_text(c.timing);
  if (!r.pass()) return kFail;
  return r.kind == SuiteKind::Conjecture ? kConjecturePass : kPass;
}

VerificationReport run_suite(const std::string& suite, const Config& c, const std::string& family, int count,
                             bool struct_given) {
  auto w = [&](int d) { return c.max_weight ? *c.max_weight : d; };
  auto structures = [&] {
    return struct_given ? std::vector<Structure>{make_structure(c)}
                        : std::vector<Structure>{Structure::ihara(), Structure::ari(), Structure::uri()};
  };
  auto uri_default = [](const Structure& s, int a, int u) { return s.kind == Structure::Kind::Uri ? u : a; };
  if (suite == "axioms" || suite == "hopf" || suite == "duality") {
    std::vector<VerificationReport> parts;
    for (const auto& s : structures()) {
      int mw = w(suite == "axioms" ? 7 : uri_default(s, 7, 6));
      if (suite == "axioms") parts.push_back(verify_axioms(s, mw, c.jobs));
      if (suite == "hopf") parts.push_back(verify_hopf(s, mw, c.jobs));
      if (suite == "duality") parts.push_back(verify_duality(s, mw, c.jobs));
    }
    return parts.size() == 1 ? parts[0] : merge_reports(suite, std::move(parts));
  }
  if (suite == "threshold") return verify_threshold_conjecture(w(8), family, c.jobs);
  if (suite == "depth-graded") return verify_depth_graded(w(7), c.jobs);
  if (suite == "embeddings") return verify_embeddings_and_orthogonals(w(7), c.jobs);
  if (suite == "bimould-iso") {
    std::vector<VerificationReport> parts;
    parts.push_back(verify_bimould_iso(w(8), c.max_depth.value_or(3), c.jobs));
    parts.push_back(verify_bimould_iso_conjecture(w(7), c.max_depth.value_or(4), c.jobs));
    return merge_reports(suite, std::move(parts));
  }
  if (suite == "oracles") return verify_oracles(w(6), w(6) + 1, count > 0 ? count : 200, c.seed, c.jobs);
  if (suite == "combinatorial") return verify_combinatorial(c.jobs);
  if (suite == "filtration") return verify_filtration(w(8), count > 0 ? count : 500, c.seed, c.jobs);
  if (suite == "k-level") return verify_k_level(w(8), count > 0 ? count : 500, c.seed, c.jobs);
  if (suite == "all") {
    std::vector<VerificationReport> parts;
    for (std::string s : {"axioms", "hopf", "duality", "oracles", "depth-graded", "embeddings", "bimould-iso",
                          "combinatorial", "filtration", "k-level"})
      parts.push_back(run_suite(s, c, family, count, struct_given));
    for (std::string f : {"uri", "bt:2", "bt:-1", "bt:1/3"}) parts.push_back(verify_threshold_conjecture(w(8), f, c.jobs));
    return merge_reports("all", std::move(parts));
  }
  throw UsageError("unknown suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-Lie structures on free Lie algebras: computations and verification suites"};
  app.set_config("--config", "", "Config file with the same keys as the flags");
  app.require_subcommand(1);
  Config cfg;
  std::string left, right, word, suite, family = "uri", op;
  int count = 0;
  bool deconcat = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-weight,--max", cfg.max_weight, "Weight bound")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Random seed");
  };
  auto structured = [&](CLI::App* sub) {
    sub->add_option("--struct", cfg.structure, "ihara, ari or uri")->check(CLI::IsMember({"ihara", "ari", "uri"}));
    sub->add_option("--v0", cfg.v0, "Distinguished letters for ihara, e.g. \"0,2\"");
  };

  auto* conc_cmd = app.add_subcommand("conc", "Concatenation product");
  auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle product");
  for (auto* s : {conc_cmd, shuffle_cmd}) {
    s->add_option("--left", left)->required();
    s->add_option("--right", right)->required();
    common(s);
  }
  auto* coprod_cmd = app.add_subcommand("coprod", "Deshuffle coproduct (or deconcatenation)");
  coprod_cmd->add_option("--word", word)->required();
  coprod_cmd->add_flag("--deconcat", deconcat, "Deconcatenation instead");
  common(coprod_cmd);
  auto* antipode_cmd = app.add_subcommand("antipode", "Antipode of the concatenation Hopf algebra");
  antipode_cmd->add_option("--word", word)->required();
  common(antipode_cmd);
  auto* tr_cmd = app.add_subcommand("tr", "Triangle product left <| right");
  auto* glp_cmd = app.add_subcommand("glp", "Grossman-Larson product left (*) right");
  for (auto* s : {tr_cmd, glp_cmd}) {
    s->add_option("--left", left)->required();
    s->add_option("--right", right)->required();
    structured(s);
    common(s);
  }
  auto* dual_cmd = app.add_subcommand("dualcoprod", "Coproduct dual to the Grossman-Larson product");
  dual_cmd->add_option("--word", word)->required();
  structured(dual_cmd);
  common(dual_cmd);
  auto* bi_cmd = app.add_subcommand("bimould", "Lazard letters and bimoulds (letters C<k>_<m>)");
  bi_cmd->add_option("--op", op, "expand, log_star, rho_c, rho_d, arit, urit, lazard")
      ->required()
      ->check(CLI::IsMember({"expand", "log_star", "rho_c", "rho_d", "arit", "urit", "lazard"}));
  bi_cmd->add_option("--left", left)->required();
  bi_cmd->add_option("--right", right);
  structured(bi_cmd);
  common(bi_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite,
                         "axioms, hopf, duality, threshold, depth-graded, embeddings, bimould-iso, oracles, "
                         "combinatorial, filtration, k-level, all")
      ->required();
  verify_cmd->add_option("--family", family, "Threshold family: uri, bt:<t>, constant");
  verify_cmd->add_option("--count", count, "Random instance count");
  verify_cmd->add_option("--max-depth", cfg.max_depth, "Depth bound for bimould-iso")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", cfg.timing, "Include elapsed time");
  auto* struct_opt = verify_cmd->add_option("--struct", cfg.structure, "Restrict to one structure")
                         ->check(CLI::IsMember({"ihara", "ari", "uri"}));
  verify_cmd->add_option("--v0", cfg.v0, "Distinguished letters for ihara");
  common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*verify_cmd) return emit(cfg, run_suite(suite, cfg, family, count, struct_opt->count() > 0));

    if (*conc_cmd || *shuffle_cmd) {
      Poly a = poly_arg("left", left), b = poly_arg("right", right);
      check_bound(max_word_weight(a) + max_word_weight(b), bound(cfg, Structure::ari()));
      emit(cfg, *conc_cmd ? conc(a, b) : shuffle(a, b));
    } else if (*coprod_cmd) {
      Poly w = poly_arg("word", word);
      check_bound(max_word_weight(w), bound(cfg, Structure::ari()));
      emit(cfg, deconcat ? postlie::deconcat(w) : coproduct_sh(w));
    } else if (*antipode_cmd) {
      Poly w = poly_arg("word", word);
      check_bound(max_word_weight(w), bound(cfg, Structure::ari()));
      emit(cfg, antipode(w));
    } else if (*tr_cmd || *glp_cmd) {
      Structure s = make_structure(cfg);
      Poly a = poly_arg("left", left), b = poly_arg("right", right);
      check_bound(max_word_weight(a) + max_word_weight(b), bound(cfg, s));
      TriangleEngine e(s);
      emit(cfg, *tr_cmd ? extend_tr(e, a, b) : glp(e, a, b));
    } else if (*dual_cmd) {
      Structure s = make_structure(cfg);
      Poly w = poly_arg("word", word);
      int limit = bound(cfg, s);
      check_bound(max_word_weight(w), limit);
      if (s.kind == Structure::Kind::Ihara)
        emit(cfg, coprod_I(w, s.v0));
      else if (s.kind == Structure::Kind::Ari)
        emit(cfg, coprod_a(w));
      else
        emit(cfg, Dualizer(std::make_shared<TriangleEngine>(s), limit).coproduct(w));
    } else if (*bi_cmd) {
      BiPoly a = bipoly_arg("left", left);
      auto need_right = [&] {
        if (right.empty()) throw UsageError("--op " + op + " needs --right");
        return bipoly_arg("right", right);
      };
      if (op == "expand") emit(cfg, expand_c(a));
      if (op == "log_star") emit_bi(cfg, log_star(a));
      if (op == "rho_c") emit(cfg, rho_cbi(a));
      if (op == "rho_d") emit(cfg, rho_dbi(a));
      if (op == "arit") emit(cfg, arit(rho_cbi(a), rho_cbi(need_right())));
      if (op == "urit") emit(cfg, urit(rho_dbi(a), rho_dbi(need_right())));
      if (op == "lazard") {
        BiPoly b = need_right();
        if (!is_lie_element(a)) throw UsageError("--left must be a Lie element");
        emit_bi(cfg, lazard_tr(make_structure(cfg), a, b));
      }
    }
    return kPass;
  } catch (const ArgParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const WeightBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
}
