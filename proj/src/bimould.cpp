#include "postlie/bimould.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace postlie {

// ---- MPoly ----

namespace {

void trim_exp(MPoly::Exp& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

MPoly MPoly::constant(const Q& c) {
  MPoly p;
  p.add({}, c);
  return p;
}

MPoly MPoly::var(int idx) {
  Exp e(static_cast<std::size_t>(idx) + 1, 0);
  e[idx] = 1;
  return monomial(e);
}

MPoly MPoly::monomial(const Exp& e, const Q& c) {
  MPoly p;
  p.add(e, c);
  return p;
}

void MPoly::add(Exp e, const Q& c) {
  if (sgn(c) == 0) return;
  trim_exp(e);
  auto [it, fresh] = terms_.try_emplace(std::move(e), c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MPoly::max_var() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()) - 1);
  return m;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) {
      MPoly::Exp g(std::max(e.size(), f.size()), 0);
      for (std::size_t i = 0; i < e.size(); ++i) g[i] += e[i];
      for (std::size_t i = 0; i < f.size(); ++i) g[i] += f[i];
      r.add(std::move(g), c * d);
    }
  return r;
}

MPoly MPoly::pow(int n) const {
  MPoly r = constant(1), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // higher total degree first, then reverse lexicographic for readability
  std::vector<std::pair<Exp, Q>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : ts) {
    Q a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool mono = false;
    std::ostringstream m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (mono) m << "*";
      m << (i % 2 ? "Y" : "X") << (i / 2 + 1);
      if (e[i] > 1) m << "^" << e[i];
      mono = true;
    }
    if (!mono)
      os << a;
    else if (a == 1)
      os << m.str();
    else
      os << a << "*" << m.str();
  }
  return os.str();
}

MPoly substitute(const MPoly& p, const std::vector<MPoly>& images) {
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t v, int n) -> const MPoly& {
    auto& ps = powers[v];
    if (ps.empty()) ps.push_back(MPoly::constant(1));
    while (static_cast<int>(ps.size()) <= n) ps.push_back(ps.back() * images[v]);
    return ps[n];
  };
  MPoly r;
  for (const auto& [e, c] : p.terms()) {
    MPoly t = MPoly::constant(c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (v >= images.size()) throw std::invalid_argument("substitute: variable without image");
      t = t * power(v, e[v]);
    }
    r += t;
  }
  return r;
}

MPoly shift_depth(const MPoly& p, int k) {
  MPoly r;
  for (const auto& [e, c] : p.terms()) {
    MPoly::Exp f(2 * static_cast<std::size_t>(k), 0);
    f.insert(f.end(), e.begin(), e.end());
    r.add(std::move(f), c);
  }
  return r;
}

std::pair<MPoly, MPoly> divide_linear(const MPoly& p, int a, int b) {
  // p = sum_e c_e Xa^e with c_e free of Xa; synthetic division by (Xa - Xb)
  std::map<int, MPoly> coeffs;
  int top = 0;
  for (const auto& [e, c] : p.terms()) {
    int deg = a < static_cast<int>(e.size()) ? e[a] : 0;
    MPoly::Exp f = e;
    if (a < static_cast<int>(f.size())) f[a] = 0;
    coeffs[deg].add(f, c);
    top = std::max(top, deg);
  }
  MPoly xb = MPoly::var(b), xa = MPoly::var(a);
  MPoly q, carry;
  for (int e = top; e >= 1; --e) {
    carry = coeffs[e] + xb * carry;
    q += carry * xa.pow(e - 1);
  }
  MPoly r = coeffs[0] + xb * carry;
  return {q, r};
}

// ---- Bimould ----

Bimould::Bimould(std::vector<MPoly> comps) : comps_(std::move(comps)) { trim(); }

Bimould Bimould::unit() { return Bimould({MPoly::constant(1)}); }

const MPoly& Bimould::operator[](int d) const {
  static const MPoly zero;
  if (d < 0 || d >= static_cast<int>(comps_.size())) return zero;
  return comps_[d];
}

void Bimould::set(int d, MPoly p) {
  if (d >= static_cast<int>(comps_.size())) comps_.resize(d + 1);
  comps_[d] = std::move(p);
  trim();
}

void Bimould::add(int d, const MPoly& p) {
  if (p.is_zero()) return;
  if (d >= static_cast<int>(comps_.size())) comps_.resize(d + 1);
  comps_[d] += p;
  trim();
}

void Bimould::trim() {
  while (!comps_.empty() && comps_.back().is_zero()) comps_.pop_back();
}

Bimould& Bimould::operator+=(const Bimould& o) {
  for (int d = 0; d <= o.depth(); ++d) add(d, o[d]);
  return *this;
}

Bimould& Bimould::operator-=(const Bimould& o) {
  for (int d = 0; d <= o.depth(); ++d) add(d, -o[d]);
  return *this;
}

Bimould& Bimould::operator*=(const Q& c) {
  for (auto& p : comps_) p *= c;
  trim();
  return *this;
}

Bimould Bimould::truncated(int d) const {
  std::vector<MPoly> cs(comps_.begin(), comps_.begin() + std::min<std::size_t>(comps_.size(), d + 1));
  return Bimould(std::move(cs));
}

std::string to_string(const Bimould& A) {
  std::ostringstream os;
  os << "(";
  for (int d = 0; d <= A.depth(); ++d) os << (d ? ", " : "") << A[d].to_string();
  os << ")";
  return os.str();
}

// ---- Lazard letters ----

Letter c_code(const BiLetter& c) {
  if (c.k < 1 || c.m < 0) throw std::invalid_argument("c_code: need k >= 1, m >= 0");
  std::uint64_t a = c.k - 1, b = c.m;
  return static_cast<Letter>((a + b) * (a + b + 1) / 2 + b);
}

BiLetter c_decode(Letter code) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 2) / 2 <= code) ++s;
  std::uint64_t b = code - s * (s + 1) / 2;
  return {static_cast<int>(s - b) + 1, static_cast<int>(b)};
}

BiPoly c_letter(int k, int m) { return Poly::letter(c_code({k, m})); }

BiPoly c_word(const std::vector<BiLetter>& cs, const Q& coeff) {
  Word w;
  for (const auto& c : cs) w.push_back(c_code(c));
  return Poly::word(w, coeff);
}

std::vector<BiLetter> c_letters(const Word& w) {
  std::vector<BiLetter> r;
  for (Letter x : w) r.push_back(c_decode(x));
  return r;
}

std::string biword_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    BiLetter c = c_decode(w[i]);
    if (i) s += ".";
    s += "C" + std::to_string(c.k) + "_" + std::to_string(c.m);
  }
  return s;
}

namespace {

Poly ad_v0(int m, Letter v) {
  Poly p = Poly::letter(v), v0 = Poly::letter(0);
  for (int i = 0; i < m; ++i) p = bracket(v0, p);
  return p;
}

/// n! / (n1! ... nr!) if the parts are >= 0 and sum to n, else 0.
Q multinomial(int n, const std::vector<int>& parts) {
  int s = 0;
  Q r = factorial(n);
  for (int x : parts) {
    if (x < 0) return 0;
    s += x;
    r /= factorial(x);
  }
  return s == n ? r : Q(0);
}

}  // namespace

Poly expand_c(const BiPoly& p) {
  std::map<Letter, Poly> cache;
  auto image = [&](Letter code) -> const Poly& {
    auto it = cache.find(code);
    if (it != cache.end()) return it->second;
    BiLetter c = c_decode(code);
    return cache[code] = ad_v0(c.m, static_cast<Letter>(c.k));
  };
  Poly r;
  for (const auto& [w, c] : p.terms()) {
    Poly t = Poly::one();
    for (Letter x : w) t = conc(t, image(x));
    r.add_scaled(t, c);
  }
  return r;
}

Bimould rho_cbi(const BiPoly& p) {
  Bimould A;
  for (const auto& [w, c] : p.terms()) {
    MPoly::Exp e;
    for (const auto& l : c_letters(w)) {
      e.push_back(l.k - 1);
      e.push_back(l.m);
    }
    A.add(static_cast<int>(w.size()), MPoly::monomial(e, c));
  }
  return A;
}

BiPoly rho_cbi_inverse(const Bimould& A, int max_depth) {
  BiPoly r;
  for (int d = 0; d <= std::min(max_depth, A.depth()); ++d) {
    for (const auto& [e, c] : A[d].terms()) {
      if (static_cast<int>(e.size()) > 2 * d) throw std::invalid_argument("rho_cbi_inverse: variable beyond depth");
      std::vector<BiLetter> cs;
      for (int i = 0; i < d; ++i) {
        int x = 2 * i < static_cast<int>(e.size()) ? e[2 * i] : 0;
        int y = 2 * i + 1 < static_cast<int>(e.size()) ? e[2 * i + 1] : 0;
        cs.push_back({x + 1, y});
      }
      r += c_word(cs, c);
    }
  }
  return r;
}

BiPoly log_star(const BiPoly& p) {
  std::map<Letter, BiPoly> cache;
  auto image = [&](Letter code) -> const BiPoly& {
    auto it = cache.find(code);
    if (it != cache.end()) return it->second;
    BiLetter c = c_decode(code);
    BiPoly s;
    for (int d = 1; d <= c.k; ++d) {
      Q sign = Q(d % 2 ? 1 : -1) / d;
      for (const auto& l : compositions(c.k, d))
        for (const auto& n : weak_compositions(c.m, d)) {
          Q x = sign * factorial(c.m);
          std::vector<BiLetter> cs;
          for (int j = 0; j < d; ++j) {
            x /= factorial(n[j]);
            cs.push_back({l[j], n[j]});
          }
          s += c_word(cs, x);
        }
    }
    return cache[code] = s;
  };
  BiPoly r;
  for (const auto& [w, c] : p.terms()) {
    BiPoly t = Poly::one();
    for (Letter x : w) t = conc(t, image(x));
    r.add_scaled(t, c);
  }
  return r;
}

Bimould rho_dbi(const BiPoly& p) { return rho_cbi(log_star(p)); }

Bimould mu(const Bimould& A, const Bimould& B) {
  Bimould r;
  for (int i = 0; i <= A.depth(); ++i)
    for (int j = 0; j <= B.depth(); ++j)
      if (!A[i].is_zero() && !B[j].is_zero()) r.add(i + j, A[i] * shift_depth(B[j], i));
  return r;
}

Bimould mu_bracket(const Bimould& A, const Bimould& B) { return mu(A, B) - mu(B, A); }

namespace {

/// P(xs; ys) for a component of depth xs.size().
MPoly eval(const MPoly& P, const std::vector<MPoly>& xs, const std::vector<MPoly>& ys) {
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    images.push_back(xs[i]);
    images.push_back(ys[i]);
  }
  return substitute(P, images);
}

MPoly Ysum(int from, int to) {
  MPoly s;
  for (int t = from; t <= to; ++t) s += MPoly::Y(t);
  return s;
}

/// A_{d-j} with the block i..i+j contracted into one slot carrying variable X_keep.
MPoly contracted(const MPoly& Ad, int d, int i, int j, int keep) {
  std::vector<MPoly> xs, ys;
  for (int t = 1; t < i; ++t) xs.push_back(MPoly::X(t)), ys.push_back(MPoly::Y(t));
  xs.push_back(MPoly::X(keep));
  ys.push_back(Ysum(i, i + j));
  for (int t = i + j + 1; t <= d; ++t) xs.push_back(MPoly::X(t)), ys.push_back(MPoly::Y(t));
  return eval(Ad, xs, ys);
}

/// B_len(X_{from} - z, ..., X_{from+len-1} - z; Y_{from}, ..., Y_{from+len-1}).
MPoly block(const MPoly& Bl, int from, int len, const MPoly& z) {
  std::vector<MPoly> xs, ys;
  for (int t = from; t < from + len; ++t) xs.push_back(MPoly::X(t) - z), ys.push_back(MPoly::Y(t));
  return eval(Bl, xs, ys);
}

/// Divided difference g[x_{p0}, ..., x_{pr}] over the points X_p, exact.
MPoly divided_difference(const std::vector<int>& pts, const std::function<MPoly(int)>& g, std::size_t lo, std::size_t hi) {
  if (lo == hi) return g(pts[lo]);
  MPoly num = divided_difference(pts, g, lo + 1, hi) - divided_difference(pts, g, lo, hi - 1);
  auto [q, r] = divide_linear(num, 2 * (pts[hi] - 1), 2 * (pts[lo] - 1));
  if (!r.is_zero()) throw std::domain_error("urit: non-polynomial divided difference");
  return q;
}

}  // namespace

Bimould arit_raw(const Bimould& B, const Bimould& A) {
  Bimould r;
  int top = A.depth() + B.depth();
  for (int d = 1; d <= top; ++d) {
    MPoly comp;
    for (int j = 1; j <= std::min(d, B.depth()); ++j) {
      const MPoly& Bj = B[j];
      const MPoly& Ad = A[d - j];
      if (Bj.is_zero() || Ad.is_zero()) continue;
      for (int i = 1; i <= d - j; ++i) {
        comp += contracted(Ad, d, i, j, i + j) * block(Bj, i, j, MPoly::X(i + j));
        comp -= contracted(Ad, d, i, j, i) * block(Bj, i + 1, j, MPoly::X(i));
      }
    }
    r.add(d, comp);
  }
  return r;
}

Bimould urit_corrections(const Bimould& B, const Bimould& A) {
  Bimould r;
  int top = A.depth() + B.depth();
  for (int d = 1; d <= top; ++d) {
    MPoly comp;
    for (int l = 2; l <= d; ++l) {
      const MPoly& Ad = A[d - l];
      if (Ad.is_zero()) continue;
      for (int i = 1; i <= d - l; ++i) {
        MPoly inner;
        for (int r_ = 1; r_ <= l - 1; ++r_) {
          const MPoly& Bl = B[l - r_];
          if (Bl.is_zero()) continue;
          Q sign = r_ % 2 ? -1 : 1;
          std::vector<int> p1, p2;
          for (int t = 0; t <= r_; ++t) p1.push_back(i + t);
          for (int t = 0; t <= r_ - 1; ++t) p2.push_back(i + t);
          p2.push_back(i + l);
          auto g1 = [&](int p) { return block(Bl, i + r_ + 1, l - r_, MPoly::X(p)); };
          auto g2 = [&](int p) { return block(Bl, i + r_, l - r_, MPoly::X(p)); };
          inner += sign * divided_difference(p1, g1, 0, p1.size() - 1);
          inner -= sign * divided_difference(p2, g2, 0, p2.size() - 1);
        }
        if (!inner.is_zero()) comp += contracted(Ad, d, i, l, i) * inner;
      }
    }
    r.add(d, comp);
  }
  return r;
}

Bimould urit_raw(const Bimould& B, const Bimould& A) { return arit_raw(B, A) + urit_corrections(B, A); }

Bimould mirror(const Bimould& A) {
  Bimould r;
  for (int d = 0; d <= A.depth(); ++d) {
    std::vector<MPoly> xs, ys;
    for (int t = d; t >= 1; --t) xs.push_back(MPoly::X(t)), ys.push_back(MPoly::Y(t));
    r.add(d, eval(A[d], xs, ys));
  }
  return r;
}

Bimould arit(const Bimould& B, const Bimould& A) { return mirror(arit_raw(mirror(B), mirror(A))); }

Bimould urit(const Bimould& B, const Bimould& A) {
  Bimould mb = mirror(B), ma = mirror(A);
  return mirror(arit_raw(mb, ma) - urit_corrections(mb, ma));
}

bool is_alternal(const Bimould& A, int max_depth) {
  if (!A[0].is_zero()) return false;
  BiPoly pre = rho_cbi_inverse(A, max_depth);
  return pre.is_zero() || is_lie_element(pre);
}

BiPoly lazard_tr(const Structure& s, const BiPoly& t, const BiLetter& c) {
  if (s.kind == Structure::Kind::Ihara && s.v0 != std::set<Letter>{0})
    throw std::invalid_argument("lazard_tr: Ihara formula needs V0 = {v0}");
  BiPoly r;
  for (const auto& [w, cw] : t.terms()) {
    if (w.empty()) throw std::invalid_argument("lazard_tr: t must be a Lie element");
    auto letters = c_letters(w);
    int d = static_cast<int>(letters.size());
    Index k, m;
    for (const auto& x : letters) k.push_back(x.k), m.push_back(x.m);
    std::vector<Index> ls = s.kind == Structure::Kind::Ihara ? std::vector<Index>{k} : lowerings(k);
    for (const auto& l : ls) {
      Q ml = s.kind == Structure::Kind::Ihara ? Q(1) : ari_mult(k, l);
      if (sgn(ml) == 0) continue;
      int top = c.k + abs_sum(k) - abs_sum(l);
      for (int total = 0; total <= c.m; ++total)
        for (const auto& n : weak_compositions(total, d)) {
          std::vector<BiLetter> sub;
          for (int j = 0; j < d; ++j) sub.push_back({l[j], m[j] + n[j]});
          BiPoly tail = c_word(sub);
          int rest = c.m - total;
          if (s.kind != Structure::Kind::Uri) {
            std::vector<int> parts(n.begin(), n.end());
            parts.push_back(rest);
            Q x = cw * ml * multinomial(c.m, parts);
            r.add_scaled(bracket(c_letter(top, rest), tail), x);
            continue;
          }
          for (const auto& alpha : compositions(top)) {
            Q muv = uri_mult(c.k, alpha);
            if (sgn(muv) == 0) continue;
            for (const auto& eta : weak_compositions(rest, static_cast<int>(alpha.size()))) {
              std::vector<int> parts(n.begin(), n.end());
              parts.insert(parts.end(), eta.begin(), eta.end());
              std::vector<Poly> xs;
              for (std::size_t j = 0; j < alpha.size(); ++j) xs.push_back(c_letter(alpha[j], eta[j]));
              r.add_scaled(right_nested(xs, tail), cw * ml * muv * multinomial(c.m, parts));
            }
          }
        }
    }
  }
  return r;
}

BiPoly lazard_tr(const Structure& s, const BiPoly& t, const BiPoly& g) {
  BiPoly r;
  std::map<Letter, BiPoly> cache;
  for (const auto& [w, c] : g.terms()) {
    if (w.empty()) continue;  // t <| 1 = 0
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = cache.find(w[i]);
      if (it == cache.end()) it = cache.emplace(w[i], lazard_tr(s, t, c_decode(w[i]))).first;
      Poly left = Poly::word(Word(w.begin(), w.begin() + i), c);
      Poly right = Poly::word(Word(w.begin() + i + 1, w.end()));
      r += conc(conc(left, it->second), right);
    }
  }
  return r;
}

}  // namespace postlie
