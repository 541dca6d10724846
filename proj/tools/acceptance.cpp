// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "goldens.hpp"
#include "postlie/verifier.hpp"

using namespace postlie;

namespace {

struct Outcome {
  bool ok;
  std::string summary;
};

std::string brief(const VerificationReport& r) {
  std::ostringstream os;
  os << r.suite;
  if (!r.params.empty()) os << " " << r.params.dump();
  os << ": " << r.count << " instances, " << r.failures.size() << " failures";
  if (r.kind == SuiteKind::Conjecture) os << " (conjecture)";
  return os.str();
}

/// Passes iff every report passes.
Outcome all_pass(const std::vector<VerificationReport>& rs) {
  Outcome o{true, ""};
  for (const auto& r : rs) {
    o.ok = o.ok && r.pass();
    o.summary += (o.summary.empty() ? "" : "; ") + brief(r);
  }
  return o;
}

std::set<int> parse_selection(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    int a = std::stoi(item.substr(0, dash));
    int b = dash == std::string::npos ? a : std::stoi(item.substr(dash + 1));
    for (int i = a; i <= b; ++i) out.insert(i);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string selection = "1-9";
  int jobs = 4;
  app.add_option("--criteria", selection, "Criteria to run, e.g. \"1-9\" or \"2,5\"");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  std::set<int> chosen;
  try {
    chosen = parse_selection(selection);
  } catch (const std::exception&) {
    std::cerr << "bad --criteria: " << selection << "\n";
    return 2;
  }

  const Structure I = Structure::ihara(), A = Structure::ari(), U = Structure::uri();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden examples",
       [] {
         Outcome o{true, ""};
         int good = 0;
         auto checks = golden::check_all();
         for (const auto& c : checks) {
           if (c.ok) {
             ++good;
             continue;
           }
           o.ok = false;
           o.summary += " [" + c.name + ": " + c.detail + "]";
         }
         o.summary = std::to_string(good) + "/" + std::to_string(checks.size()) + " match" + o.summary;
         return o;
       }},
      {"Hopf algebra and duality",
       [&] {
         return all_pass({verify_hopf(I, 7, jobs), verify_hopf(A, 7, jobs), verify_hopf(U, 6, jobs),
                          verify_duality(I, 7, jobs), verify_duality(A, 7, jobs), verify_duality(U, 6, jobs)});
       }},
      {"post-Lie axioms",
       [&] { return all_pass({verify_axioms(I, 7, jobs), verify_axioms(A, 7, jobs), verify_axioms(U, 7, jobs)}); }},
      {"closed forms against oracles", [&] { return all_pass({verify_oracles(6, 7, 200, 1, jobs)}); }},
      {"depth-graded correspondence", [&] { return all_pass({verify_depth_graded(7, jobs)}); }},
      {"combinatorial identities", [&] { return all_pass({verify_combinatorial(jobs)}); }},
      {"threshold shuffle identities",
       [&] {
         std::vector<VerificationReport> rs;
         for (std::string f : {"uri", "bt:2", "bt:-1", "bt:1/3"}) rs.push_back(verify_threshold_conjecture(8, f, jobs));
         Outcome o = all_pass(rs);
         VerificationReport neg = verify_threshold_conjecture(8, "constant", jobs);
         bool caught = !neg.pass();
         o.ok = o.ok && caught;
         o.summary += "; negative control (constant family): " + std::to_string(neg.failures.size()) + " failures" +
                      (caught ? "" : ", expected at least one");
         return o;
       }},
      {"bimould isomorphism, period relation, two-letter formula",
       [&] {
         return all_pass({verify_bimould_iso(8, 3, jobs), verify_bimould_iso_conjecture(7, 4, jobs),
                          verify_embeddings_and_orthogonals(7, jobs)});
       }},
      {"filtration", [&] { return all_pass({verify_filtration(8, 500, 1, jobs), verify_k_level(8, 500, 1, jobs)}); }},
  };

  // seconds; 0 means no limit
  const double limits[] = {10, 300, 0, 0, 0, 120, 600, 0, 0};
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (!chosen.count(n)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limits[i] > 0 && s >= limits[i]) {
      o.ok = false;
      o.summary += "; over the time limit";
    }
    ok = ok && o.ok;
    std::printf("%s criterion %d (%s, %.1f s): %s\n", o.ok ? "PASS" : "FAIL", n, criteria[i].first.c_str(), s,
                o.summary.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
