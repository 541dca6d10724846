#include "postlie/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "postlie/bimould.hpp"
#include "postlie/glhopf.hpp"
#include "postlie/io.hpp"
#include "postlie/parallel.hpp"

namespace postlie {

// ---- reports ----

bool VerificationReport::pass() const {
  if (!failures.empty()) return false;
  for (const auto& p : parts)
    if (!p.pass()) return false;
  return true;
}

namespace {

const char* kind_name(SuiteKind k) { return k == SuiteKind::Proved ? "proved-instances" : "conjecture-instances"; }

}  // namespace

Json VerificationReport::to_json(bool timing) const {
  Json j;
  j["suite"] = suite;
  j["params"] = params;
  j["count"] = count;
  Json fs = Json::array();
  for (const auto& f : failures) fs.push_back({{"params", f.params}, {"expected", f.expected}, {"actual", f.actual}});
  j["failures"] = fs;
  j["seed"] = seed;
  j["elapsed_ms"] = timing ? Json(elapsed_ms) : Json(nullptr);
  j["status"] = kind_name(kind);
  j["result"] = pass() ? "pass" : "fail";
  if (!parts.empty()) {
    Json ps = Json::array();
    for (const auto& p : parts) ps.push_back(p.to_json(timing));
    j["parts"] = ps;
  }
  return j;
}

VerificationReport VerificationReport::from_json(const Json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.params = j.at("params");
  r.count = j.at("count").get<long>();
  for (const auto& f : j.at("failures"))
    r.failures.push_back({f.at("params"), f.at("expected").get<std::string>(), f.at("actual").get<std::string>()});
  r.seed = j.at("seed").get<std::uint64_t>();
  if (!j.at("elapsed_ms").is_null()) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.kind = j.at("status").get<std::string>() == "proved-instances" ? SuiteKind::Proved : SuiteKind::Conjecture;
  if (j.contains("parts"))
    for (const auto& p : j.at("parts")) r.parts.push_back(from_json(p));
  return r;
}

std::string VerificationReport::to_text(bool timing) const {
  std::ostringstream os;
  os << suite << " " << params.dump() << ": " << count << " instances, " << failures.size() << " failures ["
     << kind_name(kind) << "] " << (pass() ? "PASS" : "FAIL");
  if (timing) os << " (" << static_cast<long>(elapsed_ms) << " ms)";
  os << "\n";
  for (const auto& f : failures)
    os << "  failure " << f.params.dump() << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
  for (const auto& p : parts) {
    std::istringstream in(p.to_text(timing));
    for (std::string line; std::getline(in, line);) os << "  " << line << "\n";
  }
  return os.str();
}

VerificationReport merge_reports(const std::string& suite, std::vector<VerificationReport> parts) {
  VerificationReport r;
  r.suite = suite;
  r.kind = SuiteKind::Proved;
  Json names = Json::array();
  for (const auto& p : parts) {
    r.count += p.count;
    r.elapsed_ms += p.elapsed_ms;
    if (p.kind == SuiteKind::Conjecture) r.kind = SuiteKind::Conjecture;
    r.seed = p.seed ? p.seed : r.seed;
    names.push_back(p.suite);
  }
  r.params = {{"suites", names}};
  r.parts = std::move(parts);
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

/// Collects per-instance failures in instance order.
class Run {
 public:
  Run(std::string suite, SuiteKind kind, Json params) : start_(Clock::now()) {
    rep_.suite = std::move(suite);
    rep_.kind = kind;
    rep_.params = std::move(params);
  }

  template <class F>
  void run(std::size_t n, int jobs, F&& check) {
    std::vector<std::vector<Failure>> res(n);
    parallel_for(n, jobs, [&](std::size_t i) { check(i, res[i]); });
    for (auto& v : res)
      for (auto& f : v) rep_.failures.push_back(std::move(f));
    rep_.count += static_cast<long>(n);
  }

  VerificationReport& report() { return rep_; }

  VerificationReport finish() {
    rep_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(rep_);
  }

 private:
  VerificationReport rep_;
  Clock::time_point start_;
};

void expect_eq(std::vector<Failure>& out, const Json& params, const Poly& expected, const Poly& actual) {
  if (!(expected == actual)) out.push_back({params, format_poly(expected), format_poly(actual)});
}

void expect_eq(std::vector<Failure>& out, const Json& params, const Tensor2& expected, const Tensor2& actual) {
  if (!(expected == actual)) out.push_back({params, format_tensor(expected), format_tensor(actual)});
}

void expect_eq(std::vector<Failure>& out, const Json& params, const Bimould& expected, const Bimould& actual) {
  if (!(expected == actual)) out.push_back({params, to_string(expected), to_string(actual)});
}

void expect_eq(std::vector<Failure>& out, const Json& params, const Q& expected, const Q& actual) {
  if (expected != actual) out.push_back({params, expected.get_str(), actual.get_str()});
}

Json structure_json(const Structure& s) {
  Json j = s.name();
  if (s.kind == Structure::Kind::Ihara && s.v0 != std::set<Letter>{0}) {
    std::string v;
    for (Letter x : s.v0) v += (v.empty() ? "" : ",") + std::to_string(x);
    j = s.name() + "{" + v + "}";
  }
  return j;
}

/// Leading word in canonical order.
Word lead(const Poly& p) {
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || word_less(*best, w)) best = &w;
  return *best;
}

/// Linearly independent right-nested brackets of letters, per weight 1..max_weight.
std::vector<std::vector<Poly>> lie_spanning_sets(int max_weight, Letter max_letter = ~Letter(0)) {
  std::vector<std::vector<Poly>> out(max_weight + 1);
  for (int w = 1; w <= max_weight; ++w) {
    std::map<Word, Poly, decltype(&word_less)> rows(&word_less);
    for (const auto& word : basis_words(w)) {
      bool ok = true;
      for (Letter x : word) ok = ok && x <= max_letter;
      if (!ok) continue;
      std::vector<Poly> xs;
      for (std::size_t i = 0; i + 1 < word.size(); ++i) xs.push_back(Poly::letter(word[i]));
      Poly p = right_nested(xs, Poly::letter(word.back()));
      Poly r = p;
      while (!r.is_zero()) {
        Word l = lead(r);
        auto it = rows.find(l);
        if (it == rows.end()) break;
        r.add_scaled(it->second, -r.coeff(l) / it->second.coeff(l));
      }
      if (r.is_zero()) continue;
      rows.emplace(lead(r), r);
      out[w].push_back(p);
    }
  }
  return out;
}

/// Closed-form coproduct, or the cotriangle assembly for uri.
std::function<Tensor2(const Word&)> coproduct_for(const Structure& s, int max_weight) {
  switch (s.kind) {
    case Structure::Kind::Ihara: {
      auto v0 = s.v0;
      return [v0](const Word& w) { return coprod_I(Poly::word(w), v0); };
    }
    case Structure::Kind::Ari:
      return [](const Word& w) { return coprod_a(Poly::word(w)); };
    case Structure::Kind::Uri: {
      auto d = std::make_shared<Dualizer>(std::make_shared<TriangleEngine>(s), max_weight);
      return [d](const Word& w) {
        return coprod_from_cotr(w, [&](const Word& u) { return d->cotriangle(Poly::word(u)); });
      };
    }
  }
  return {};
}

std::vector<Word> words_between(int lo, int hi) {
  std::vector<Word> out;
  for (int w = lo; w <= hi; ++w)
    for (auto& x : basis_words(w)) out.push_back(x);
  return out;
}

Json word_json(const Word& w) { return word_to_string(w); }

}  // namespace

// ---- post-Lie axioms ----

VerificationReport verify_axioms(const Structure& s, int max_weight, int jobs) {
  Run run("axioms", s.kind == Structure::Kind::Uri ? SuiteKind::Conjecture : SuiteKind::Proved,
          {{"struct", structure_json(s)}, {"max_weight", max_weight}});
  TriangleEngine e(s);
  auto span = lie_spanning_sets(std::max(1, max_weight - 2));
  struct Triple {
    int axiom;
    const Poly *x, *y, *z;
    int wx, wy, wz, ix, iy, iz;
  };
  std::vector<Triple> ts;
  for (int wx = 1; wx <= max_weight; ++wx)
    for (int wy = 1; wx + wy < max_weight; ++wy)
      for (int wz = 1; wx + wy + wz <= max_weight; ++wz)
        for (std::size_t a = 0; a < span[wx].size(); ++a)
          for (std::size_t b = 0; b < span[wy].size(); ++b)
            for (std::size_t c = 0; c < span[wz].size(); ++c) {
              Triple t{0, &span[wx][a], &span[wy][b], &span[wz][c], wx, wy, wz, (int)a, (int)b, (int)c};
              // axiom 1 is antisymmetric in (y, z), axiom 2 in (x, y)
              if (std::make_pair(wy, b) <= std::make_pair(wz, c)) ts.push_back({1, t.x, t.y, t.z, wx, wy, wz, t.ix, t.iy, t.iz});
              if (std::make_pair(wx, a) <= std::make_pair(wy, b)) ts.push_back({2, t.x, t.y, t.z, wx, wy, wz, t.ix, t.iy, t.iz});
            }
  run.run(ts.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& t = ts[i];
    const Poly &x = *t.x, &y = *t.y, &z = *t.z;
    Json p{{"axiom", t.axiom}, {"x", format_poly(x)}, {"y", format_poly(y)}, {"z", format_poly(z)}};
    if (t.axiom == 1) {
      Poly lhs = e.lie_on_poly(x, bracket(y, z));
      Poly rhs = bracket(e.lie_on_poly(x, y), z) + bracket(y, e.lie_on_poly(x, z));
      expect_eq(out, p, rhs, lhs);
    } else {
      Poly lhs = e.lie_on_poly(bracket(x, y), z);
      Poly rhs = e.lie_on_poly(x, e.lie_on_poly(y, z)) - e.lie_on_poly(e.lie_on_poly(x, y), z) -
                 e.lie_on_poly(y, e.lie_on_poly(x, z)) + e.lie_on_poly(e.lie_on_poly(y, x), z);
      expect_eq(out, p, rhs, lhs);
    }
  });
  return run.finish();
}

// ---- Hopf structure of the dual coproduct ----

VerificationReport verify_hopf(const Structure& s, int max_weight, int jobs) {
  Run run("hopf", s.kind == Structure::Kind::Uri ? SuiteKind::Conjecture : SuiteKind::Proved,
          {{"struct", structure_json(s)}, {"max_weight", max_weight}});
  auto delta = coproduct_for(s, max_weight);
  auto words = words_up_to(max_weight);
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<Tensor2> D(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) { D[i] = delta(words[i]); });

  // antipode of (Q<V>, sh, Delta): S(1) = 1 and sum S(C1) sh C2 = 0 for C != 1
  std::vector<Poly> S(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) {
      S[i] = Poly::one();
      continue;
    }
    Poly acc;
    for (const auto& [k, c] : D[i].terms()) {
      if (k.second.empty()) continue;  // the C (x) 1 term defines S(C)
      acc.add_scaled(shuffle(S[index.at(k.first)], Poly::word(k.second)), c);
    }
    S[i] = -acc;
  }

  run.run(words.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const Word& C = words[i];
    // coassociativity
    std::map<std::vector<Word>, Q> left, right;
    for (const auto& [k, c] : D[i].terms()) {
      for (const auto& [k2, c2] : D[index.at(k.first)].terms()) {
        Q& x = left[{k2.first, k2.second, k.second}];
        x += c * c2;
      }
      for (const auto& [k2, c2] : D[index.at(k.second)].terms()) {
        Q& x = right[{k.first, k2.first, k2.second}];
        x += c * c2;
      }
    }
    std::erase_if(left, [](const auto& kv) { return sgn(kv.second) == 0; });
    std::erase_if(right, [](const auto& kv) { return sgn(kv.second) == 0; });
    if (left != right)
      out.push_back({{{"check", "coassociativity"}, {"word", word_json(C)}},
                     std::to_string(left.size()) + " terms", std::to_string(right.size()) + " terms (differs)"});
    // counit: the terms C (x) 1 and 1 (x) C have coefficient 1
    if (D[i].coeff(C, {}) != 1 || D[i].coeff({}, C) != 1)
      out.push_back({{{"check", "counit"}, {"word", word_json(C)}}, "1, 1",
                     D[i].coeff(C, {}).get_str() + ", " + D[i].coeff({}, C).get_str()});
    // right antipode relation sum C1 sh S(C2) = eps(C)
    Poly r;
    for (const auto& [k, c] : D[i].terms()) r.add_scaled(shuffle(Poly::word(k.first), S[index.at(k.second)]), c);
    Poly eps = C.empty() ? Poly::one() : Poly();
    expect_eq(out, {{"check", "antipode"}, {"word", word_json(C)}}, eps, r);
  });
  return run.finish();
}

// ---- pairing identities ----

VerificationReport verify_duality(const Structure& s, int max_weight, int jobs) {
  Run run("duality", s.kind == Structure::Kind::Uri ? SuiteKind::Conjecture : SuiteKind::Proved,
          {{"struct", structure_json(s)}, {"max_weight", max_weight}});
  TriangleEngine e(s);
  auto delta = coproduct_for(s, max_weight);
  auto words = words_up_to(max_weight);
  std::vector<Tensor2> D(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) { D[i] = delta(words[i]); });
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& a : words)
    for (const auto& b : words)
      if (weight(a) + weight(b) <= max_weight) pairs.emplace_back(a, b);
  std::vector<Poly> prods(pairs.size());
  std::unordered_map<std::pair<Word, Word>, std::size_t, WordPairHash> pindex;
  for (std::size_t i = 0; i < pairs.size(); ++i) pindex[pairs[i]] = i;

  // (A (*) B | C) read from the product side
  run.run(pairs.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [a, b] = pairs[i];
    prods[i] = glp(e, Poly::word(a), Poly::word(b));
    for (const auto& [c, x] : prods[i].sorted())
      expect_eq(out, {{"A", word_json(a)}, {"B", word_json(b)}, {"C", word_json(c)}}, x, D[index.at(c)].coeff(a, b));
  });
  // pairs present in Delta(C) but missing from A (*) B
  run.run(words.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    for (const auto& [k, x] : D[i].sorted()) {
      Q g = prods[pindex.at(k)].coeff(words[i]);
      if (sgn(g) == 0)
        expect_eq(out, {{"A", word_json(k.first)}, {"B", word_json(k.second)}, {"C", word_json(words[i])}}, g, x);
    }
  });
  return run.finish();
}

// ---- closed forms against oracles ----

VerificationReport verify_oracles(int max_weight, int random_weight, int random_count, std::uint64_t seed, int jobs) {
  Run run("oracles", SuiteKind::Proved,
          {{"max_weight", max_weight}, {"random_weight", random_weight}, {"random_count", random_count}});
  run.report().seed = seed;
  std::vector<std::set<Letter>> v0s{{0}, {0, 2}};
  std::vector<std::shared_ptr<TriangleEngine>> eI;
  std::vector<std::shared_ptr<Dualizer>> dI;
  int top = std::max(max_weight, random_weight);
  for (const auto& v0 : v0s) {
    eI.push_back(std::make_shared<TriangleEngine>(Structure::ihara(v0)));
    dI.push_back(std::make_shared<Dualizer>(eI.back(), top));
  }
  auto eA = std::make_shared<TriangleEngine>(Structure::ari());
  auto dA = std::make_shared<Dualizer>(eA, top);

  // kinds: 0 tr, 1 glp, 2 coproduct, 3 reduced cotriangle
  struct Inst {
    int kind;
    Word a, b;
  };
  auto check = [&](const Inst& in, std::vector<Failure>& out) {
    Json p{{"a", word_json(in.a)}};
    switch (in.kind) {
      case 0: {
        Letter v = in.b.at(0);
        p["letter"] = v;
        for (std::size_t k = 0; k < v0s.size(); ++k) {
          p["check"] = "tr_letter_ihara";
          p["v0"] = std::vector<Letter>(v0s[k].begin(), v0s[k].end());
          expect_eq(out, p, eI[k]->word_on_letter(in.a, v), tr_letter_ihara(Poly::word(in.a), v, v0s[k]));
        }
        p.erase("v0");
        p["check"] = "tr_letter_ari";
        expect_eq(out, p, eA->word_on_letter(in.a, v), tr_letter_ari(Poly::word(in.a), v));
        break;
      }
      case 1: {
        p["b"] = word_json(in.b);
        for (std::size_t k = 0; k < v0s.size(); ++k) {
          p["check"] = "glp_ihara_fast";
          p["v0"] = std::vector<Letter>(v0s[k].begin(), v0s[k].end());
          expect_eq(out, p, glp(*eI[k], Poly::word(in.a), Poly::word(in.b)), glp_ihara_fast(Poly::word(in.a), in.b, v0s[k]));
        }
        p.erase("v0");
        p["check"] = "glp_ari_fast";
        expect_eq(out, p, glp(*eA, Poly::word(in.a), Poly::word(in.b)), glp_ari_fast(Poly::word(in.a), in.b));
        break;
      }
      case 2: {
        for (std::size_t k = 0; k < v0s.size(); ++k) {
          p["v0"] = std::vector<Letter>(v0s[k].begin(), v0s[k].end());
          Tensor2 oracle = dI[k]->coproduct(Poly::word(in.a));
          p["check"] = "coprod_I";
          expect_eq(out, p, oracle, coprod_I(Poly::word(in.a), v0s[k]));
          p["check"] = "coprod_I_gon";
          expect_eq(out, p, oracle, coprod_I_gon(Poly::word(in.a), v0s[k]));
        }
        p.erase("v0");
        p["check"] = "coprod_a";
        expect_eq(out, p, dA->coproduct(Poly::word(in.a)), coprod_a(Poly::word(in.a)));
        break;
      }
      case 3: {
        for (std::size_t k = 0; k < v0s.size(); ++k) {
          p["check"] = "cotr_irr_ihara";
          p["v0"] = std::vector<Letter>(v0s[k].begin(), v0s[k].end());
          expect_eq(out, p, dI[k]->cotriangle(Poly::word(in.a)), cotr_irr_ihara(in.a, v0s[k]));
        }
        p.erase("v0");
        p["check"] = "cotr_irr_ari";
        expect_eq(out, p, dA->cotriangle(Poly::word(in.a)), cotr_irr_ari(in.a));
        break;
      }
    }
  };

  std::vector<Inst> ex;
  for (const auto& a : words_between(1, max_weight)) {
    for (Letter v = 0; weight(a) + letter_weight(v) <= max_weight; ++v) ex.push_back({0, a, {v}});
    ex.push_back({2, a, {}});
    ex.push_back({3, a, {}});
  }
  for (const auto& a : words_between(0, max_weight))
    for (const auto& b : words_between(0, max_weight - weight(a))) ex.push_back({1, a, b});
  run.run(ex.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) { check(ex[i], out); });

  // random instances of the given weight, drawn up front so the set does not depend on jobs
  std::mt19937_64 rng(seed);
  auto pick = [&](int w) {
    const auto& ws = basis_words(w);
    return ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)];
  };
  std::vector<Inst> rnd;
  for (int kind = 0; kind < 4; ++kind)
    for (int n = 0; n < random_count; ++n) {
      if (kind == 0) {
        Letter v = static_cast<Letter>(std::uniform_int_distribution<int>(0, random_weight - 1)(rng));
        rnd.push_back({0, pick(random_weight - letter_weight(v)), {v}});
      } else if (kind == 1) {
        int wa = std::uniform_int_distribution<int>(1, random_weight - 1)(rng);
        Word a = pick(wa);
        rnd.push_back({1, a, pick(random_weight - wa)});
      } else {
        rnd.push_back({kind, pick(random_weight), {}});
      }
    }
  run.run(rnd.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    std::vector<Failure> f;
    check(rnd[i], f);
    for (auto& x : f) {
      x.params["random"] = true;
      out.push_back(std::move(x));
    }
  });
  return run.finish();
}

// ---- depth-graded correspondence ----

VerificationReport verify_depth_graded(int max_weight, int jobs) {
  Run run("depth-graded", SuiteKind::Proved, {{"max_weight", max_weight}});
  TriangleEngine eu(Structure::uri()), ea(Structure::ari());
  std::vector<std::pair<Word, Letter>> inst;
  for (const auto& w : words_between(1, max_weight - 1))
    for (Letter a = 0; weight(w) + letter_weight(a) <= max_weight; ++a) inst.emplace_back(w, a);
  run.run(inst.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [w, a] = inst[i];
    Poly u = eu.word_on_letter(w, a), x = ea.word_on_letter(w, a);
    int d = depth(w) + 1;
    Poly low, lead_part;
    for (const auto& [v, c] : u.terms()) {
      if (depth(v) < d) low.add(v, c);
      if (depth(v) == d) lead_part.add(v, c);
    }
    Json p{{"word", word_json(w)}, {"letter", a}};
    expect_eq(out, p, Poly(), low);
    expect_eq(out, p, x, lead_part);
  });
  return run.finish();
}

// ---- embeddings, orthogonal subalgebra, period relation ----

VerificationReport verify_embeddings_and_orthogonals(int max_weight, int jobs) {
  Run run("embeddings", SuiteKind::Proved, {{"max_weight", max_weight}});
  TriangleEngine eI(Structure::ihara({0})), ea(Structure::ari()), eu(Structure::uri());

  // restrictions to Q<v0,v1>, and closure of Q<v1,v2,...> under (*)_a
  std::vector<Word> two, nov0;
  for (const auto& w : words_up_to(max_weight)) {
    bool t = true, n = true;
    for (Letter x : w) {
      t = t && x <= 1;
      n = n && x != 0;
    }
    if (t) two.push_back(w);
    if (n) nov0.push_back(w);
  }
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& a : two)
    for (const auto& b : two)
      if (weight(a) + weight(b) <= max_weight) pairs.emplace_back(a, b);
  run.run(pairs.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [a, b] = pairs[i];
    Poly I = glp(eI, Poly::word(a), Poly::word(b));
    Json p{{"check", "restriction_ari"}, {"A", word_json(a)}, {"B", word_json(b)}};
    expect_eq(out, p, I, glp(ea, Poly::word(a), Poly::word(b)));
    p["check"] = "restriction_uri";
    expect_eq(out, p, I, glp(eu, Poly::word(a), Poly::word(b)));
  });
  std::vector<std::pair<Word, Word>> npairs;
  for (const auto& a : nov0)
    for (const auto& b : nov0)
      if (weight(a) + weight(b) <= max_weight) npairs.emplace_back(a, b);
  run.run(npairs.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [a, b] = npairs[i];
    Poly g = glp_ari_fast(Poly::word(a), b), bad;
    for (const auto& [w, c] : g.terms())
      for (Letter x : w)
        if (x == 0) {
          bad.add(w, c);
          break;
        }
    expect_eq(out, {{"check", "no_v0_subalgebra"}, {"A", word_json(a)}, {"B", word_json(b)}}, Poly(), bad);
  });

  // v_{2i+1} <|_a v1 = 0, v_{2i} <|_a v1 != 0
  std::vector<int> ks;
  for (int k = 1; k <= 12; ++k) ks.push_back(k);
  run.run(ks.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    int k = ks[i];
    Poly r = ea.lie_on_letter(Poly::letter(k), 1);
    bool want_zero = k % 2 == 1;
    if (r.is_zero() != want_zero)
      out.push_back({{{"check", "orthogonal_v1"}, {"k", k}}, want_zero ? "0" : "nonzero", format_poly(r)});
  });

  // {v_odd, b}_a = 0 for b in Lie(v0, v1), and closure of the odd letters under {,}_a
  auto span01 = lie_spanning_sets(max_weight - 3, 1);
  std::vector<std::pair<int, Poly>> ob;
  for (int k = 3; k < max_weight; k += 2)
    for (int w = 1; w + k <= max_weight; ++w)
      for (const auto& b : span01[w]) ob.emplace_back(k, b);
  run.run(ob.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [k, b] = ob[i];
    expect_eq(out, {{"check", "odd_bracket_v0v1"}, {"k", k}, {"b", format_poly(b)}}, Poly(),
              post_lie_bracket(ea, Poly::letter(k), b));
  });
  std::vector<std::pair<int, int>> odd;
  for (int k = 3; k <= 9; k += 2)
    for (int l = k + 2; l <= 11; l += 2) odd.emplace_back(k, l);
  run.run(odd.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    auto [k, l] = odd[i];
    Poly br = post_lie_bracket(ea, Poly::letter(k), Poly::letter(l));
    expect_eq(out, {{"check", "orthogonal_subalgebra"}, {"k", k}, {"l", l}}, Poly(), ea.lie_on_letter(br, 1));
  });

  // period relation in weight 12
  run.run(1, 1, [&](std::size_t, std::vector<Failure>& out) {
    Poly r = post_lie_bracket(ea, Poly::letter(5), Poly::letter(7)) -
             Q(1, 3) * post_lie_bracket(ea, Poly::letter(3), Poly::letter(9));
    expect_eq(out, {{"check", "period_relation"}}, Poly(), r);
  });

  // two-letter ari bracket
  std::vector<std::pair<int, int>> kk;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) kk.emplace_back(a, b);
  run.run(kk.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    auto [k1, k2] = kk[i];
    auto v = [](int k) { return Poly::letter(k); };
    Poly f = bracket(v(k1), v(k2));
    for (int l = 1; l <= k1; ++l)
      f.add_scaled(bracket(v(k2 + k1 - l), v(l)), ((k1 + l) % 2 ? -1 : 1) * binom(k1 - 1, l - 1));
    for (int l = 1; l <= k2; ++l)
      f.add_scaled(bracket(v(k1 + k2 - l), v(l)), -((k2 + l) % 2 ? -1 : 1) * binom(k2 - 1, l - 1));
    expect_eq(out, {{"check", "two_letter_bracket"}, {"k1", k1}, {"k2", k2}}, f,
              post_lie_bracket(ea, v(k1), v(k2)));
  });
  return run.finish();
}

// ---- bimould isomorphisms ----

namespace {

/// Generators and right-nested brackets of generators over C^bi.
std::vector<std::pair<BiPoly, std::pair<int, int>>> bi_lie_elements(int max_weight, int max_depth) {
  std::vector<BiLetter> gens;
  for (int w = 1; w <= max_weight; ++w)
    for (int k = 1; k <= w; ++k) gens.push_back({k, w - k});
  std::vector<std::pair<BiPoly, std::pair<int, int>>> out;  // (element, (weight, depth))
  std::vector<std::pair<BiPoly, std::pair<int, int>>> layer;
  for (const auto& g : gens) layer.push_back({c_letter(g.k, g.m), {g.k + g.m, 1}});
  out = layer;
  for (int d = 2; d <= max_depth; ++d) {
    std::vector<std::pair<BiPoly, std::pair<int, int>>> next;
    for (const auto& g : gens) {
      int wg = g.k + g.m;
      for (const auto& [t, wd] : layer) {
        if (wg + wd.first > max_weight) continue;
        // in depth 2 only [g, h] with g before h
        if (d == 2 && !(c_code(g) < lead(t).front())) continue;
        BiPoly br = bracket(c_letter(g.k, g.m), t);
        if (br.is_zero()) continue;
        next.push_back({br, {wg + wd.first, d}});
      }
    }
    for (auto& x : next) out.push_back(x);
    layer = std::move(next);
  }
  return out;
}

VerificationReport bimould_suite(bool conjecture, int max_weight, int max_depth, int jobs) {
  Run run(conjecture ? "bimould-iso-uri" : "bimould-iso-ari", conjecture ? SuiteKind::Conjecture : SuiteKind::Proved,
          {{"max_weight", max_weight}, {"max_depth", max_depth}});
  Structure s = conjecture ? Structure::uri() : Structure::ari();
  TriangleEngine e(s);
  auto elems = bi_lie_elements(max_weight - 1, max_depth - 1);
  std::vector<std::pair<std::size_t, std::size_t>> inst;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto& [wf, df] = elems[i].second;
      const auto& [wg, dg] = elems[j].second;
      if (wf + wg <= max_weight && df + dg <= max_depth) inst.emplace_back(i, j);
    }
  run.run(inst.size(), jobs, [&](std::size_t n, std::vector<Failure>& out) {
    const BiPoly& f = elems[inst[n].first].first;
    const BiPoly& g = elems[inst[n].second].first;
    Json p{{"f", format_bipoly(f)}, {"g", format_bipoly(g)}};
    BiPoly t = lazard_tr(s, f, g);
    p["check"] = "lazard";
    expect_eq(out, p, e.lie_on_poly(expand_c(f), expand_c(g)), expand_c(t));
    if (conjecture) {
      p["check"] = "urit";
      try {
        expect_eq(out, p, rho_dbi(t), urit(rho_dbi(f), rho_dbi(g)));
      } catch (const std::domain_error& ex) {
        out.push_back({p, to_string(rho_dbi(t)), std::string("error: ") + ex.what()});
      }
    } else {
      p["check"] = "arit";
      expect_eq(out, p, rho_cbi(t), arit(rho_cbi(f), rho_cbi(g)));
    }
  });
  return run.finish();
}

}  // namespace

VerificationReport verify_bimould_iso(int max_weight, int max_depth, int jobs) {
  return bimould_suite(false, max_weight, max_depth, jobs);
}

VerificationReport verify_bimould_iso_conjecture(int max_weight, int max_depth, int jobs) {
  return bimould_suite(true, max_weight, max_depth, jobs);
}

// ---- filtrations ----

VerificationReport verify_filtration(int max_weight, int count, std::uint64_t seed, int jobs) {
  Run run("filtration", SuiteKind::Proved, {{"max_weight", max_weight}, {"count", count}});
  run.report().seed = seed;
  std::mt19937_64 rng(seed);
  auto pick = [&](int w) {
    const auto& ws = basis_words(w);
    return ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)];
  };
  std::vector<std::pair<Word, Word>> prods;  // (A, w) with A (*)_a w
  std::vector<Word> coprods;
  for (int n = 0; n < count; ++n) {
    int total = std::uniform_int_distribution<int>(2, max_weight)(rng);
    int wa = std::uniform_int_distribution<int>(1, total - 1)(rng);
    Word a = pick(wa);
    prods.emplace_back(a, pick(total - wa));
  }
  for (int n = 0; n < count; ++n) coprods.push_back(pick(std::uniform_int_distribution<int>(1, max_weight)(rng)));
  run.run(prods.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [a, w] = prods[i];
    Poly g = glp_ari_fast(Poly::word(a), w);
    if (!filtration_check(w, g, FiltrationMode::IndMaxLower))
      out.push_back({{{"check", "glp_ind_max"}, {"A", word_json(a)}, {"w", word_json(w)}},
                     ">= " + std::to_string(ind_max(w)), format_poly(g)});
  });
  run.run(coprods.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const Word& w = coprods[i];
    Tensor2 t = coprod_a(Poly::word(w));
    if (!filtration_check(w, t, FiltrationMode::IndMaxUpper))
      out.push_back({{{"check", "coprod_ind_max"}, {"w", word_json(w)}}, "<= " + std::to_string(ind_max(w)),
                     format_tensor(t)});
  });
  return run.finish();
}

VerificationReport verify_k_level(int max_weight, int count, std::uint64_t seed, int jobs) {
  Run run("k-level", SuiteKind::Conjecture, {{"max_weight", max_weight}, {"count", count}});
  run.report().seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<Word> ws;
  for (int n = 0; n < count; ++n) {
    const auto& all = basis_words(std::uniform_int_distribution<int>(1, max_weight)(rng));
    ws.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
  }
  run.run(ws.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    Tensor2 t = coprod_a(Poly::word(ws[i]));
    if (!filtration_check(ws[i], t, FiltrationMode::KLevel))
      out.push_back({{{"check", "k_level"}, {"w", word_json(ws[i])}}, "right factors with k-level <= k-level(w)",
                     format_tensor(t)});
  });
  return run.finish();
}

// ---- combinatorial identities ----

namespace {

/// All tuples of length d with entries in [lo, hi].
std::vector<Index> tuples(int d, int lo, int hi) {
  std::vector<Index> out{{}};
  for (int i = 0; i < d; ++i) {
    std::vector<Index> next;
    for (const auto& t : out)
      for (int x = lo; x <= hi; ++x) {
        Index u = t;
        u.push_back(x);
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

Index add1(Index k) {
  for (int& x : k) ++x;
  return k;
}

Index minus(const Index& a, const Index& b) {
  Index r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool leq(const Index& a, const Index& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Q tuple_binom(const Index& n, const Index& k) {
  Q r = 1;
  for (std::size_t i = 0; i < n.size(); ++i) r *= binom(n[i], k[i]);
  return r;
}

Q m1(int a, int b) { return ari_mult({a}, {b}); }

Q sign(long e) { return e % 2 ? Q(-1) : Q(1); }

}  // namespace

VerificationReport verify_combinatorial(int jobs) {
  Run run("combinatorial", SuiteKind::Proved, Json::object());

  // m_{k,r} m_{r,l} = (-1)^{|k|+|r|} m_{k,l} m_{k-l+1, r-l+1}
  std::vector<std::array<Index, 3>> klr;
  for (int d = 1; d <= 3; ++d) {
    auto ts = tuples(d, 0, 4);
    for (const auto& k : ts)
      for (const auto& r : ts)
        for (const auto& l : ts) klr.push_back({k, r, l});
  }
  run.run(klr.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [k, r, l] = klr[i];
    Q lhs = ari_mult(k, r) * ari_mult(r, l);
    Q rhs = sign(abs_sum(k) + abs_sum(r)) * ari_mult(k, l) * ari_mult(add1(minus(k, l)), add1(minus(r, l)));
    expect_eq(out, {{"identity", "ari_mult_klr"}, {"k", k}, {"r", r}, {"l", l}}, rhs, lhs);
  });

  // sum_r (-1)^{|k|+|r|} m_{k+1,r+1} m_{a+|k-r|, b} = m_{a, b-|k|}; at a = 0 only for b >= |k|
  struct Mi {
    int a, b;
    Index k;
  };
  std::vector<Mi> mi;
  for (int d = 1; d <= 3; ++d)
    for (const auto& k : tuples(d, 0, 6)) {
      if (abs_sum(k) > 6) continue;
      for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
          if (a >= 1 || b >= abs_sum(k)) mi.push_back({a, b, k});
    }
  run.run(mi.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [a, b, k] = mi[i];
    Q lhs = 0;
    for (const auto& r : tuples(static_cast<int>(k.size()), 0, *std::max_element(k.begin(), k.end()))) {
      if (!leq(r, k)) continue;
      lhs += sign(abs_sum(k) + abs_sum(r)) * ari_mult(add1(k), add1(r)) * m1(a + abs_sum(k) - abs_sum(r), b);
    }
    expect_eq(out, {{"identity", "ari_mult_identities"}, {"a", a}, {"b", b}, {"k", k}}, m1(a, b - abs_sum(k)), lhs);
  });

  // sum_r (-1)^r C(d,r) C(n+d-r-1, b-1) = C(n-1, b-d-1)
  std::vector<std::array<int, 3>> bi;
  for (int d = 0; d <= 10; ++d)
    for (int b = 1; b <= 10; ++b)
      for (int n = 1; n <= 10; ++n) bi.push_back({d, b, n});
  run.run(bi.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    auto [d, b, n] = bi[i];
    Q lhs = 0;
    for (int r = 0; r <= d; ++r) lhs += sign(r) * binom(d, r) * binom(n + d - r - 1, b - 1);
    expect_eq(out, {{"identity", "binomial"}, {"d", d}, {"b", b}, {"n", n}}, binom(n - 1, b - d - 1), lhs);
  });

  // composition count by threshold, and the alternating composition-binomial theorem
  std::vector<std::array<int, 4>> cc;
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= 6; ++r)
      for (int s = 1; s <= 5; ++s)
        for (int j = 1; j <= s; ++j) cc.push_back({n, r, s, j});
  run.run(cc.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    auto [n, r, s, j] = cc[i];
    long cnt = 0;
    for (const auto& a : compositions(n + r, s)) cnt += threshold(n, a) == j;
    expect_eq(out, {{"identity", "composition_count"}, {"n", n}, {"r", r}, {"s", s}, {"j", j}},
              binom(n - 1, j - 1) * binom(r, s - j), Q(cnt));
  });

  struct Cu {
    Index d, b;
    int n, j;
  };
  std::vector<Cu> cu;
  for (int l = 1; l <= 2; ++l)
    for (const auto& d : tuples(l, 0, 4))
      for (int s = 1; s <= 3; ++s)
        for (const auto& b : tuples(s, 1, 4))
          for (int n = 1; n <= 4; ++n)
            for (int j = 1; j <= s; ++j) cu.push_back({d, b, n, j});
  run.run(cu.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [d, b, n, j] = cu[i];
    int s = static_cast<int>(b.size());
    Q lhs = 0;
    for (const auto& r : tuples(static_cast<int>(d.size()), 0, 4)) {
      if (!leq(r, d)) continue;
      Q inner = 0;
      for (const auto& a : compositions(n + abs_sum(r), s))
        if (threshold(n, a) == j) inner += tuple_binom(minus(a, Index(s, 1)), minus(b, Index(s, 1)));
      lhs += sign(abs_sum(d) - abs_sum(r)) * tuple_binom(d, r) * inner;
    }
    int e = abs_sum(b) - abs_sum(d);
    Q rhs = (e >= 1 && j == threshold(e, b)) ? binom(n - 1, e - 1) : Q(0);
    expect_eq(out, {{"identity", "composition_binomial"}, {"d", d}, {"b", b}, {"n", n}, {"j", j}}, rhs, lhs);
  });

  // descent identity for the uri multiplicities
  struct Ud {
    Index d, b;
    int a;
  };
  std::vector<Ud> ud;
  for (int l = 1; l <= 2; ++l)
    for (const auto& d : tuples(l, 1, 3))
      for (int s = 1; s <= 3; ++s)
        for (const auto& b : tuples(s, 1, 3))
          for (int a = 1; a <= 4; ++a) ud.push_back({d, b, a});
  run.run(ud.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [d, b, a] = ud[i];
    Q lhs = 0;
    for (const auto& r : tuples(static_cast<int>(d.size()), 0, 3)) {
      if (!leq(r, d)) continue;
      Q inner = 0;
      for (const auto& al : compositions(a + abs_sum(d) - abs_sum(r), static_cast<int>(b.size())))
        inner += ari_mult(al, b) * uri_mult(a, al);
      lhs += sign(abs_sum(d) + abs_sum(r)) * ari_mult(add1(d), add1(r)) * inner;
    }
    int e = abs_sum(b) - abs_sum(d);
    Q rhs = m1(a, e) * (e >= 1 ? uri_mult(e, b) : Q(0));
    expect_eq(out, {{"identity", "uri_descend"}, {"d", d}, {"b", b}, {"a", a}}, rhs, lhs);
  });

  // B1 facts: B1(r,1) = 1/r!, B1(r,r) = 0 for r >= 2, and the tail form for n <= m
  std::vector<std::pair<int, int>> bb;
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= m; ++n) bb.emplace_back(m, n);
  run.run(bb.size(), jobs, [&](std::size_t i, std::vector<Failure>& out) {
    auto [m, n] = bb[i];
    Json p{{"identity", "b1"}, {"m", m}, {"n", n}};
    if (n == 1) expect_eq(out, p, 1 / factorial(m), b1(m, 1));
    if (m >= 2) {
      if (n == m) expect_eq(out, p, Q(0), b1(m, m));
      Q tail = 0;
      for (int k = n; k <= m - 1; ++k) tail -= bernoulli(k) / (factorial(k) * factorial(m - k));
      expect_eq(out, p, tail, b1(m, n));
    }
  });
  return run.finish();
}

}  // namespace postlie
