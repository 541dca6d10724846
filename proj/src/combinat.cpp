#include "postlie/combinat.hpp"

#include <mutex>
#include <stdexcept>

namespace postlie {

int abs_sum(const Index& k) {
  int s = 0;
  for (int x : k) s += x;
  return s;
}

Q binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Q(r);
}

Q ari_binom(int k, int l) {
  if (k < 0 || l < 0) return 0;
  if (k == 0 && l == 0) return 1;
  if (k == 0 || l == 0) return 0;
  return binom(k - 1, l - 1);
}

Q ari_mult(const Index& k, const Index& l) {
  if (k.size() != l.size()) throw std::invalid_argument("ari_mult: length mismatch");
  Q r = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    r *= ari_binom(k[i], l[i]);
    if (sgn(r) == 0) return r;
  }
  if ((abs_sum(k) + abs_sum(l)) % 2) r = -r;
  return r;
}

int threshold(int a, const Composition& alpha) {
  int s = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    s += alpha[j];
    if (s >= a) return static_cast<int>(j) + 1;
  }
  return 0;
}

Q bernoulli(int k) {
  static std::mutex mtx;
  static std::vector<Q> table{Q(1)};
  std::lock_guard<std::mutex> lock(mtx);
  while (static_cast<int>(table.size()) <= k) {
    int m = static_cast<int>(table.size());
    Q s = 0;
    for (int j = 0; j < m; ++j) s += binom(m + 1, j) * table[j];
    table.push_back(-s / Q(m + 1));
  }
  return table[k];
}

Q factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(r);
}

Q b1(int m, int n) {
  if (m < 0 || n < 0) return 0;
  Q s = 0;
  for (int k = 0; k < n && k <= m; ++k) s += binom(m, k) * bernoulli(k);
  return s / factorial(m);
}

Q b_t(int m, int n, const Q& t) {
  if (m < 0 || n < 0) return 0;
  // coefficient of x^m y^n in y^2 x e^{xt} / ((1-y)(e^{xyt}-1))
  Q s = 0;
  for (int k = 0; k < n && k <= m; ++k) {
    Q tk = 1;
    for (int i = 0; i < m; ++i) tk *= t;  // t^k * t^(m-k)
    s += bernoulli(k) * tk / (factorial(k) * factorial(m - k));
  }
  return s / t;
}

Q uri_mult(int a, const Composition& alpha) {
  int j = threshold(a, alpha);
  if (j == 0) return 0;
  return b1(static_cast<int>(alpha.size()), j);
}

MultFamily uri_family() {
  return [](int len, int thr) { return b1(len, thr); };
}

MultFamily bt_family(const Q& t) {
  return [t](int len, int thr) { return b_t(len, thr, t); };
}

MultFamily constant_family(const Q& c) {
  return [c](int len, int thr) { return (len == 1 && thr == 1) ? Q(1) : c; };
}

Q family_mult(const MultFamily& B, int a, const Index& alpha) {
  if (a < 1) return 0;
  for (int x : alpha)
    if (x < 1) return 0;
  int j = threshold(a, alpha);
  if (j == 0) return 0;
  return B(static_cast<int>(alpha.size()), j);
}

std::vector<Composition> compositions(int n, int s) {
  std::vector<Composition> out;
  if (s < 0 || n < 0) return out;
  if (s == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  Composition cur;
  std::function<void(int, int)> rec = [&](int rest, int parts) {
    if (parts == 1) {
      if (rest >= 1) {
        cur.push_back(rest);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int x = 1; x <= rest - (parts - 1); ++x) {
      cur.push_back(x);
      rec(rest - x, parts - 1);
      cur.pop_back();
    }
  };
  rec(n, s);
  return out;
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  for (int s = (n == 0 ? 0 : 1); s <= n; ++s) {
    auto c = compositions(n, s);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Index> weak_compositions(int n, int s) {
  std::vector<Index> out;
  if (n < 0 || s < 0) return out;
  if (s == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  Index cur;
  std::function<void(int, int)> rec = [&](int rest, int parts) {
    if (parts == 1) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int x = 0; x <= rest; ++x) {
      cur.push_back(x);
      rec(rest - x, parts - 1);
      cur.pop_back();
    }
  };
  rec(n, s);
  return out;
}

std::vector<Index> lowerings(const Index& k) {
  std::vector<Index> out;
  Index cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k.size()) {
      out.push_back(cur);
      return;
    }
    if (k[i] == 0) {
      cur.push_back(0);
      rec(i + 1);
      cur.pop_back();
      return;
    }
    for (int l = 1; l <= k[i]; ++l) {
      cur.push_back(l);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

void add_to(SignedIndexSum& s, const Index& k, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = s.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) s.erase(it);
  }
}

SignedIndexSum single(const Index& k) { return SignedIndexSum{{k, Q(1)}}; }

namespace {

void shuffle_idx(const Index& a, std::size_t i, const Index& b, std::size_t j, Index& cur, SignedIndexSum& out,
                 const Q& c) {
  if (i == a.size() && j == b.size()) {
    add_to(out, cur, c);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    shuffle_idx(a, i + 1, b, j, cur, out, c);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    shuffle_idx(a, i, b, j + 1, cur, out, c);
    cur.pop_back();
  }
}

}  // namespace

SignedIndexSum index_shuffle(const Index& k, const Index& l) {
  SignedIndexSum out;
  Index cur;
  shuffle_idx(k, 0, l, 0, cur, out, Q(1));
  return out;
}

SignedIndexSum index_shuffle(const SignedIndexSum& a, const SignedIndexSum& b) {
  SignedIndexSum out;
  Index cur;
  for (const auto& [k, x] : a)
    for (const auto& [l, y] : b) {
      cur.clear();
      shuffle_idx(k, 0, l, 0, cur, out, x * y);
    }
  return out;
}

SignedIndexSum index_reverse_signed(const Index& k) {
  Index r(k.rbegin(), k.rend());
  return SignedIndexSum{{r, k.size() % 2 ? Q(-1) : Q(1)}};
}

SignedIndexSum index_concat(const SignedIndexSum& a, const SignedIndexSum& b) {
  SignedIndexSum out;
  for (const auto& [k, x] : a)
    for (const auto& [l, y] : b) {
      Index m = k;
      m.insert(m.end(), l.begin(), l.end());
      add_to(out, m, x * y);
    }
  return out;
}

Q mu_linear(int a, const SignedIndexSum& s, const MultFamily& B) {
  Q r = 0;
  for (const auto& [k, c] : s) r += c * family_mult(B, a, k);
  return r;
}

}  // namespace postlie
