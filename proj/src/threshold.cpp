#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "postlie/parallel.hpp"
#include "postlie/verifier.hpp"

namespace postlie {

void BRelation::add(int m, int n, long long c) { add(0, 0, m, n, c); }

void BRelation::add(int m1, int n1, int m2, int n2, long long c) {
  if (c == 0) return;
  if (std::make_pair(m1, n1) > std::make_pair(m2, n2)) {
    std::swap(m1, m2);
    std::swap(n1, n2);
  }
  Mono key{m1, n1, m2, n2};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

BRelation BRelation::operator-() const {
  BRelation r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Q BRelation::evaluate(const MultFamily& B) const {
  std::map<std::pair<int, int>, Q> cache;
  auto val = [&](int m, int n) -> Q {
    if (m == 0 && n == 0) return 1;
    auto [it, fresh] = cache.try_emplace({m, n});
    if (fresh) it->second = B(m, n);
    return it->second;
  };
  Q s = 0;
  for (const auto& [m, c] : terms_) s += Q(static_cast<long>(c)) * val(m[0], m[1]) * val(m[2], m[3]);
  return s;
}

std::string BRelation::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << a << "*";
    if (m[0] != 0) os << "B(" << m[0] << "," << m[1] << ")*";
    os << "B(" << m[2] << "," << m[3] << ")";
  }
  return os.str();
}

namespace {

using Seq = std::vector<int>;

/// All shuffles of a and b.
void shuffles(const Seq& a, const Seq& b, std::vector<Seq>& out) {
  out.clear();
  Seq cur;
  cur.reserve(a.size() + b.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out.push_back(cur);
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
}

Seq rev(const Seq& s) { return Seq(s.rbegin(), s.rend()); }
int sgn_len(const Seq& s) { return s.size() % 2 ? -1 : 1; }

/// Threshold of t in the concatenation (S, x, T).
int threshold3(int t, const Seq& S, int x, const Seq& T) {
  int s = 0, j = 0;
  for (int v : S) {
    ++j;
    if ((s += v) >= t) return j;
  }
  ++j;
  if ((s += x) >= t) return j;
  for (int v : T) {
    ++j;
    if ((s += v) >= t) return j;
  }
  return 0;
}

/// Histogram by threshold of a over all shuffles of p and q; index 0 is unused.
std::vector<long long> hist(int a, const Seq& p, const Seq& q) {
  std::vector<long long> h(p.size() + q.size() + 1, 0);
  if (a < 1 || p.size() + q.size() == 0) return h;
  std::vector<Seq> sh;
  shuffles(p, q, sh);
  for (const auto& s : sh) ++h[threshold(a, s)];
  h[0] = 0;
  return h;
}

/// Histogram by threshold of t over (S, x, T) with S in p1 sh q1, T in p2 sh q2.
std::vector<long long> hist3(int t, const Seq& p1, const Seq& q1, int x, const Seq& p2, const Seq& q2) {
  std::size_t len = p1.size() + q1.size() + 1 + p2.size() + q2.size();
  std::vector<long long> h(len + 1, 0);
  std::vector<Seq> s1, s2;
  shuffles(p1, q1, s1);
  shuffles(p2, q2, s2);
  for (const auto& a : s1)
    for (const auto& b : s2) ++h[threshold3(t, a, x, b)];
  h[0] = 0;
  return h;
}

void add_products(BRelation& r, const std::vector<long long>& f, const std::vector<long long>& g, long long sign) {
  int lf = static_cast<int>(f.size()) - 1, lg = static_cast<int>(g.size()) - 1;
  for (int j = 1; j <= lf; ++j) {
    if (!f[j]) continue;
    for (int k = 1; k <= lg; ++k)
      if (g[k]) r.add(lf, j, lg, k, sign * f[j] * g[k]);
  }
}

Seq slice(const Seq& s, std::size_t b, std::size_t e) { return Seq(s.begin() + b, s.begin() + e); }

}  // namespace

BRelation threshold_relation_i(const Composition& sigma, const Composition& theta, int d1, int d2) {
  BRelation r;
  int t = abs_sum(sigma) + abs_sum(theta) - d1 - d2;
  if (t < 1) throw std::invalid_argument("threshold identity (i) needs t >= 1");
  auto lhs = hist(t, sigma, theta);
  for (std::size_t j = 1; j < lhs.size(); ++j) r.add(static_cast<int>(lhs.size()) - 1, static_cast<int>(j), lhs[j]);
  for (std::size_t i = 0; i <= sigma.size(); ++i) {
    Seq s1 = slice(sigma, 0, i), s2 = slice(sigma, i, sigma.size());
    for (std::size_t k = 0; k <= theta.size(); ++k) {
      Seq h1 = slice(theta, 0, k), h2 = slice(theta, k, theta.size());
      int x = abs_sum(s2) - d1;
      if (x >= 1) add_products(r, hist(x, s2, {}), hist3(t, s1, h1, x, h2, {}), -1);
      int y = abs_sum(h2) - d2;
      if (y >= 1) add_products(r, hist(y, h2, {}), hist3(t, s1, h1, y, s2, {}), -1);
    }
  }
  return r;
}

BRelation threshold_relation_ii(const Composition& sigma, const Composition& tau, const Composition& theta,
                                int d1, int d2) {
  BRelation r;
  int t = abs_sum(sigma) + abs_sum(tau) + abs_sum(theta) - d1 - d2;
  if (t < 1) throw std::invalid_argument("threshold identity (ii) needs t >= 1");
  for (std::size_t i = 0; i <= sigma.size(); ++i) {
    Seq s1 = slice(sigma, 0, i), s2 = slice(sigma, i, sigma.size());
    for (std::size_t j = 0; j <= tau.size(); ++j) {
      Seq u1 = slice(tau, 0, j), u2 = slice(tau, j, tau.size());
      for (std::size_t k = 0; k <= theta.size(); ++k) {
        Seq h1 = slice(theta, 0, k), h2 = slice(theta, k, theta.size());
        Seq ru1 = rev(u1), rh1 = rev(h1), rh2 = rev(h2);
        long long sign = sgn_len(u1) * sgn_len(h1) * sgn_len(h2);
        int x = abs_sum(s2) + abs_sum(u1) - d1;
        if (x >= 1) add_products(r, hist(x, s2, ru1), hist3(t, s1, rh2, x, u2, rh1), sign);
        int y = abs_sum(u2) + abs_sum(h1) - d2;
        if (y >= 1) add_products(r, hist(y, u2, rh1), hist3(t, s1, rh2, y, s2, ru1), sign);
      }
    }
  }
  return r;
}

bool verify_threshold_shuffle_i(const Composition& sigma, const Composition& theta, int d1, int d2,
                                const MultFamily& B) {
  return sgn(threshold_relation_i(sigma, theta, d1, d2).evaluate(B)) == 0;
}

bool verify_threshold_shuffle_ii(const Composition& sigma, const Composition& tau, const Composition& theta,
                                 int d1, int d2, const MultFamily& B) {
  return sgn(threshold_relation_ii(sigma, tau, theta, d1, d2).evaluate(B)) == 0;
}

MultFamily family_by_name(const std::string& name) {
  if (name == "uri") return uri_family();
  if (name == "constant") return constant_family(1);
  if (name.rfind("bt:", 0) == 0) {
    Q t;
    try {
      t = Q(name.substr(3));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad family parameter: " + name);
    }
    t.canonicalize();
    if (sgn(t) == 0) throw std::invalid_argument("B_t needs t != 0");
    return bt_family(t);
  }
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

struct ThresholdInstance {
  int kind;  // 1 or 2
  Composition sigma, tau, theta;
  int d1, d2;
};

Json instance_json(const ThresholdInstance& in) {
  Json j;
  j["identity"] = in.kind == 1 ? "i" : "ii";
  j["d1"] = in.d1;
  j["d2"] = in.d2;
  j["sigma"] = in.sigma;
  if (in.kind == 2) j["tau"] = in.tau;
  j["theta"] = in.theta;
  return j;
}

/// Compositions of all n in [0, bound], including the empty one.
std::vector<Composition> all_compositions(int bound) {
  std::vector<Composition> out{{}};
  for (int n = 1; n <= bound; ++n)
    for (auto& c : compositions(n)) out.push_back(c);
  return out;
}

}  // namespace

VerificationReport verify_threshold_conjecture(int bound, const std::string& family, int jobs) {
  auto start = std::chrono::steady_clock::now();
  MultFamily raw = family_by_name(family);
  // table of family values, filled up front so workers only read it
  int L = bound + 2;
  std::vector<std::vector<Q>> table(L + 1, std::vector<Q>(L + 1));
  for (int m = 1; m <= L; ++m)
    for (int n = 1; n <= m; ++n) table[m][n] = raw(m, n);
  MultFamily B = [&table, L, raw](int m, int n) {
    return (m <= L && n <= L && m >= 0 && n >= 0) ? table[m][n] : raw(m, n);
  };

  std::vector<ThresholdInstance> inst;
  auto comps = all_compositions(bound);
  for (const auto& s : comps)
    for (const auto& h : comps) {
      int tot = abs_sum(s) + abs_sum(h);
      if (tot > bound) continue;
      for (int d1 = 0; d1 < tot; ++d1)
        for (int d2 = 0; d1 + d2 < tot; ++d2) inst.push_back({1, s, {}, h, d1, d2});
    }
  for (const auto& s : comps)
    for (const auto& u : comps) {
      // with tau empty the second identity is not required; that case is the first one
      if (u.empty() || abs_sum(s) + abs_sum(u) > bound) continue;
      for (const auto& h : comps) {
        int tot = abs_sum(s) + abs_sum(u) + abs_sum(h);
        if (tot > bound) continue;
        for (int d1 = 0; d1 < tot; ++d1)
          for (int d2 = 0; d1 + d2 < tot; ++d2) inst.push_back({2, s, u, h, d1, d2});
      }
    }

  std::vector<std::optional<Failure>> res(inst.size());
  parallel_for(inst.size(), jobs, [&](std::size_t i) {
    const auto& in = inst[i];
    BRelation rel = in.kind == 1 ? threshold_relation_i(in.sigma, in.theta, in.d1, in.d2)
                                 : threshold_relation_ii(in.sigma, in.tau, in.theta, in.d1, in.d2);
    Q v = rel.evaluate(B);
    if (sgn(v) != 0) res[i] = Failure{instance_json(in), "0", v.get_str()};
  });

  VerificationReport rep;
  rep.suite = "threshold";
  rep.kind = SuiteKind::Conjecture;
  rep.params = {{"bound", bound}, {"family", family}};
  rep.count = static_cast<long>(inst.size());
  for (auto& f : res)
    if (f) rep.failures.push_back(std::move(*f));
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace postlie
